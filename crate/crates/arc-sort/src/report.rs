//! CSV report and plot-data text.
//!
//! CSV layout:
//!
//! ```text
//! # prng=...
//! # seed=...
//! ...
//! algorithm,distribution,n,trial,elapsed_ns,comparisons,swaps,writes
//! arc,uniform,1000,0,123456,1234,56,0
//! ```
//!
//! Plot data is tab-separated: column `n` followed by one median-milliseconds
//! column per algorithm.

use std::fmt::Write as _;

use arc_sort_core::{Algorithm, Distribution, SortMetrics};
use thiserror::Error;

use crate::harness::{BenchmarkReport, GroupSummary, ReportMeta, TrialResult};

/// Exact CSV header line.
pub const CSV_HEADER: &str = "algorithm,distribution,n,trial,elapsed_ns,comparisons,swaps,writes";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing metadata key `{0}`")]
    MissingMeta(&'static str),
    #[error("missing header line")]
    MissingHeader,
}

fn malformed(line: usize, message: impl Into<String>) -> ReportError {
    ReportError::Malformed {
        line,
        message: message.into(),
    }
}

/// Render a report as CSV with `#` metadata lines.
pub fn to_csv(report: &BenchmarkReport) -> String {
    let m = &report.meta;
    let mut s = String::new();
    writeln!(s, "# prng={}", m.prng).unwrap();
    writeln!(s, "# seed={}", m.seed).unwrap();
    writeln!(s, "# distribution={}", m.distribution).unwrap();
    writeln!(s, "# value_lo={}", m.value_lo).unwrap();
    writeln!(s, "# value_hi={}", m.value_hi).unwrap();
    writeln!(s, "# digit_class={}", m.digit_class).unwrap();
    writeln!(s, "# clock={}", m.clock).unwrap();
    writeln!(s, "# warmup={}", m.warmup).unwrap();
    writeln!(s, "# trials={}", m.trials).unwrap();
    s.push_str(CSV_HEADER);
    s.push('\n');
    for r in &report.rows {
        writeln!(
            s,
            "{},{},{},{},{},{},{},{}",
            r.algorithm,
            r.distribution,
            r.n,
            r.trial,
            r.elapsed_ns,
            r.metrics.comparisons,
            r.metrics.swaps,
            r.metrics.writes
        )
        .unwrap();
    }
    s
}

/// Parse text produced by [`to_csv`].
pub fn parse_csv(text: &str) -> Result<BenchmarkReport, ReportError> {
    let mut meta: Vec<(String, String)> = Vec::new();
    let mut lines = text.lines().enumerate();
    let mut saw_header = false;

    for (i, line) in lines.by_ref() {
        if let Some(comment) = line.strip_prefix('#') {
            let (k, v) = comment
                .trim_start()
                .split_once('=')
                .ok_or_else(|| malformed(i + 1, "metadata line without `=`"))?;
            meta.push((k.trim().to_owned(), v.to_owned()));
        } else if line == CSV_HEADER {
            saw_header = true;
            break;
        } else {
            return Err(malformed(i + 1, format!("expected header `{CSV_HEADER}`")));
        }
    }
    if !saw_header {
        return Err(ReportError::MissingHeader);
    }

    let get = |key: &'static str| -> Result<&str, ReportError> {
        meta.iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .ok_or(ReportError::MissingMeta(key))
    };
    let num = |key: &'static str| -> Result<i128, ReportError> {
        get(key)?
            .parse::<i128>()
            .map_err(|_| malformed(0, format!("metadata `{key}` is not a number")))
    };
    let meta = ReportMeta {
        prng: get("prng")?.to_owned(),
        seed: num("seed")? as u64,
        distribution: get("distribution")?
            .parse()
            .map_err(|e| malformed(0, format!("{e}")))?,
        value_lo: num("value_lo")? as i64,
        value_hi: num("value_hi")? as i64,
        digit_class: num("digit_class")? as u8,
        clock: get("clock")?.to_owned(),
        warmup: num("warmup")? as usize,
        trials: num("trials")? as usize,
    };

    let mut rows = Vec::new();
    for (i, line) in lines {
        if line.is_empty() {
            continue;
        }
        rows.push(parse_row(line).map_err(|m| malformed(i + 1, m))?);
    }
    Ok(BenchmarkReport { meta, rows })
}

fn parse_row(line: &str) -> Result<TrialResult, String> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != 8 {
        return Err(format!("expected 8 fields, found {}", fields.len()));
    }
    let int = |idx: usize| -> Result<u64, String> {
        fields[idx]
            .parse::<u64>()
            .map_err(|_| format!("field {} (`{}`) is not an unsigned integer", idx + 1, fields[idx]))
    };
    Ok(TrialResult {
        algorithm: fields[0].parse::<Algorithm>().map_err(|e| e.to_string())?,
        distribution: fields[1].parse::<Distribution>().map_err(|e| e.to_string())?,
        n: int(2)? as usize,
        trial: int(3)? as usize,
        elapsed_ns: int(4)?,
        metrics: SortMetrics {
            comparisons: int(5)?,
            swaps: int(6)?,
            writes: int(7)?,
        },
    })
}

/// Tab-separated `n` versus median milliseconds, one column per algorithm.
///
/// When the summary covers more than one distribution, columns are labelled
/// `algorithm:distribution`. Missing points are written as `NA`.
pub fn emit_plot_data(summary: &[GroupSummary]) -> String {
    let mut series: Vec<(Algorithm, Distribution)> = Vec::new();
    let mut sizes: Vec<usize> = Vec::new();
    for g in summary {
        if !series.contains(&(g.algorithm, g.distribution)) {
            series.push((g.algorithm, g.distribution));
        }
        if !sizes.contains(&g.n) {
            sizes.push(g.n);
        }
    }
    sizes.sort_unstable();
    let multi_dist = series.iter().any(|s| s.1 != series[0].1);

    let mut out = String::from("# n");
    for (a, d) in &series {
        if multi_dist {
            write!(out, "\t{a}:{d}").unwrap();
        } else {
            write!(out, "\t{a}").unwrap();
        }
    }
    out.push('\n');

    for n in sizes {
        write!(out, "{n}").unwrap();
        for &(a, d) in &series {
            match summary
                .iter()
                .find(|g| g.algorithm == a && g.distribution == d && g.n == n)
            {
                Some(g) => write!(out, "\t{:.6}", g.median_ms()).unwrap(),
                None => out.push_str("\tNA"),
            }
        }
        out.push('\n');
    }
    out
}
