use std::process::ExitCode;

use arc_sort::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("arc-sort: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
