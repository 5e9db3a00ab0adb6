//! `arc-sort` command line.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use arc_sort_core::datagen::{DEFAULT_DIGIT_CLASS, DEFAULT_RANGE};
use arc_sort_core::{generate, Algorithm, DatasetSpec, Distribution, GenError, SortMetrics, UnknownAlgorithm};
use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::harness::{run_benchmark, summarize, BenchError, DEFAULT_TRIALS, DEFAULT_WARMUP};
use crate::input::{format_integers, parse_integers, ParseIntegersError};
use crate::report::{emit_plot_data, to_csv};

#[derive(Debug, Parser)]
#[command(name = "arc-sort", version, about = "Digit-count bucket sort, baselines and benchmarks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sort a file of newline-separated integers.
    Sort(SortArgs),
    /// Generate a dataset.
    Gen(GenArgs),
    /// Benchmark algorithms and write a CSV report.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct SortArgs {
    /// arc, enhanced-selection, selection, insertion or bubble.
    #[arg(long, default_value = "arc")]
    pub algo: String,
    /// Print operation counts to stderr.
    #[arg(long)]
    pub metrics: bool,
    /// Input file, or `-` for stdin.
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct DatasetArgs {
    /// uniform, one-per-bucket, single-bucket, sorted-ascending, reverse-sorted or with-negatives.
    #[arg(long, default_value = "uniform")]
    pub dist: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_RANGE.0, allow_hyphen_values = true)]
    pub min: i64,
    #[arg(long, default_value_t = DEFAULT_RANGE.1, allow_hyphen_values = true)]
    pub max: i64,
    #[arg(long, default_value_t = DEFAULT_DIGIT_CLASS)]
    pub digit_class: u8,
}

impl DatasetArgs {
    fn spec(&self, n: usize) -> Result<DatasetSpec, GenError> {
        let distribution: Distribution = self.dist.parse()?;
        let spec = DatasetSpec::new(distribution, n, self.seed)
            .with_range(self.min, self.max)
            .with_digit_class(self.digit_class);
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub dataset: DatasetArgs,
    #[arg(long)]
    pub n: usize,
    /// Output file, or `-` for stdout.
    #[arg(short, long, default_value = "-")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub dataset: DatasetArgs,
    /// Comma-separated algorithm names.
    #[arg(long, value_delimiter = ',', default_value = "arc,selection,insertion,bubble")]
    pub algos: Vec<String>,
    /// Comma-separated dataset sizes.
    #[arg(long, value_delimiter = ',', default_value = "1000,5000,10000,20000")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_WARMUP)]
    pub warmup: usize,
    /// CSV report path, or `-` for stdout.
    #[arg(short, long)]
    pub output: PathBuf,
    /// Optional tab-separated plot data path.
    #[arg(long)]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Parse(#[from] ParseIntegersError),
    #[error(transparent)]
    Spec(#[from] GenError),
    #[error(transparent)]
    Algorithm(#[from] UnknownAlgorithm),
    #[error(transparent)]
    Bench(BenchError),
}

impl From<BenchError> for CliError {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::UnknownAlgorithm(a) => CliError::Algorithm(a),
            BenchError::Dataset(g) => CliError::Spec(g),
            other => CliError::Bench(other),
        }
    }
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 2,
            CliError::Parse(_) => 3,
            CliError::Spec(_) => 4,
            CliError::Algorithm(_) => 5,
            CliError::Bench(BenchError::ZeroTrials | BenchError::NoAlgorithms) => 4,
            CliError::Bench(_) => 6,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_owned(),
        source,
    }
}

fn is_stdio(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if is_stdio(path) {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err(path))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err(path))
    }
}

fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    if is_stdio(path) {
        let mut out = io::stdout().lock();
        out.write_all(contents.as_bytes())
            .and_then(|()| out.flush())
            .map_err(io_err(path))
    } else {
        fs::write(path, contents).map_err(io_err(path))
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sort(args) => cmd_sort(&args),
        Command::Gen(args) => cmd_gen(&args),
        Command::Bench(args) => cmd_bench(&args),
    }
}

pub fn cmd_sort(args: &SortArgs) -> Result<(), CliError> {
    let algorithm: Algorithm = args.algo.parse()?;
    let text = read_input(&args.input)?;
    let mut values = parse_integers(&text)?;
    let mut metrics = SortMetrics::new();
    algorithm.sort(&mut values, &mut metrics);
    write_output(Path::new("-"), &format_integers(&values))?;
    if args.metrics {
        eprintln!(
            "algorithm={} n={} comparisons={} swaps={} writes={}",
            algorithm,
            values.len(),
            metrics.comparisons,
            metrics.swaps,
            metrics.writes
        );
    }
    Ok(())
}

pub fn cmd_gen(args: &GenArgs) -> Result<(), CliError> {
    let data = generate(&args.dataset.spec(args.n)?)?;
    write_output(&args.output, &format_integers(&data))
}

pub fn cmd_bench(args: &BenchArgs) -> Result<(), CliError> {
    let algorithms = args
        .algos
        .iter()
        .map(|a| a.parse::<Algorithm>())
        .collect::<Result<Vec<_>, _>>()?;
    let template = args.dataset.spec(0)?;
    let report = run_benchmark(&algorithms, &args.sizes, &template, args.trials, args.warmup)?;
    let summary = summarize(&report)?;

    write_output(&args.output, &to_csv(&report))?;
    if let Some(plot) = &args.plot {
        write_output(plot, &emit_plot_data(&summary))?;
    }

    for g in &summary {
        eprintln!(
            "{:<20} n={:<8} median={:>12.3} ms  mean={:>12.3} ms  comparisons={:.0}",
            g.algorithm.name(),
            g.n,
            g.median_ms(),
            g.mean_ns / 1e6,
            g.mean_comparisons
        );
    }
    Ok(())
}
