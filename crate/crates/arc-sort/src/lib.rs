//! Benchmarking and file formats on top of [`arc_sort_core`].
//!
//! * [`harness`] runs timed, verified trials and summarizes them.
//! * [`report`] reads and writes the CSV report and tab-separated plot data.
//! * [`input`] parses newline-separated integer files.
//! * [`cli`] implements the `arc-sort` command.

pub mod cli;
pub mod harness;
pub mod input;
pub mod report;

pub use arc_sort_core as core;
pub use harness::{
    run_benchmark, summarize, BenchError, BenchmarkReport, GroupSummary, ReportMeta, TrialResult,
};
