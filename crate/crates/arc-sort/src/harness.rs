//! Timed, verified benchmark runs.
//!
//! For every `(algorithm, n)` group the harness generates one dataset per
//! trial from a seed derived from the base seed, `n` and the trial ordinal,
//! so every algorithm sees exactly the same inputs. `warmup` untimed runs
//! on the trial-0 dataset precede the timed runs. Each timed run sorts a
//! fresh copy; its output is checked against a reference sort outside the
//! timed region.

use std::hint::black_box;
use std::time::Instant;

use arc_sort_core::datagen::PRNG_NAME;
use arc_sort_core::{generate, Algorithm, DatasetSpec, Distribution, GenError, SortMetrics};
use thiserror::Error;

/// Clock used for `elapsed_ns`.
pub const CLOCK_SOURCE: &str = "std::time::Instant (monotonic)";

/// Default number of timed trials per group.
pub const DEFAULT_TRIALS: usize = 5;
/// Default number of untimed warmup runs per group.
pub const DEFAULT_WARMUP: usize = 2;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    UnknownAlgorithm(#[from] arc_sort_core::UnknownAlgorithm),
    #[error("trials must be at least 1")]
    ZeroTrials,
    #[error("no algorithms selected")]
    NoAlgorithms,
    #[error("invalid dataset: {0}")]
    Dataset(#[from] GenError),
    #[error("{algorithm} produced unsorted or altered output (n={n}, seed={seed})")]
    Verification {
        algorithm: Algorithm,
        n: usize,
        seed: u64,
    },
    #[error("cannot summarize an empty report")]
    EmptyReport,
}

/// One timed run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialResult {
    pub algorithm: Algorithm,
    pub distribution: Distribution,
    pub n: usize,
    pub trial: usize,
    pub elapsed_ns: u64,
    pub metrics: SortMetrics,
}

/// Settings a report was produced with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportMeta {
    pub prng: String,
    pub seed: u64,
    pub distribution: Distribution,
    pub value_lo: i64,
    pub value_hi: i64,
    pub digit_class: u8,
    pub clock: String,
    pub warmup: usize,
    pub trials: usize,
}

impl ReportMeta {
    pub fn from_template(template: &DatasetSpec, trials: usize, warmup: usize) -> Self {
        Self {
            prng: PRNG_NAME.to_owned(),
            seed: template.seed,
            distribution: template.distribution,
            value_lo: template.value_lo,
            value_hi: template.value_hi,
            digit_class: template.digit_class,
            clock: CLOCK_SOURCE.to_owned(),
            warmup,
            trials,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchmarkReport {
    pub meta: ReportMeta,
    /// Grouped by `(algorithm, distribution, n)`, trials `0..trials` within a group.
    pub rows: Vec<TrialResult>,
}

/// Seed for one `(n, trial)` dataset.
pub fn trial_seed(base: u64, n: usize, trial: usize) -> u64 {
    // splitmix64 finalizer over a combined key
    let mut z = base
        ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (trial as u64).wrapping_mul(0xC2B2_AE3D_27D4_EB4F);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Run every algorithm on every size.
///
/// `template` supplies the distribution, range, digit class and base seed;
/// its `n` is ignored.
pub fn run_benchmark(
    algorithms: &[Algorithm],
    sizes: &[usize],
    template: &DatasetSpec,
    trials: usize,
    warmup: usize,
) -> Result<BenchmarkReport, BenchError> {
    if trials == 0 {
        return Err(BenchError::ZeroTrials);
    }
    if algorithms.is_empty() {
        return Err(BenchError::NoAlgorithms);
    }

    // Datasets are shared by all algorithms; build them once per size.
    let mut datasets = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let mut per_trial = Vec::with_capacity(trials);
        for trial in 0..trials {
            let seed = trial_seed(template.seed, n, trial);
            let data = generate(&template.clone().with_n(n).with_seed(seed))?;
            let mut expected = data.clone();
            expected.sort_unstable();
            per_trial.push((seed, data, expected));
        }
        datasets.push(per_trial);
    }

    let mut rows = Vec::with_capacity(algorithms.len() * sizes.len() * trials);
    for &algorithm in algorithms {
        for (&n, per_trial) in sizes.iter().zip(&datasets) {
            for _ in 0..warmup {
                let mut copy = per_trial[0].1.clone();
                algorithm.sort(black_box(&mut copy), &mut SortMetrics::new());
                black_box(&copy);
            }
            for (trial, (seed, data, expected)) in per_trial.iter().enumerate() {
                let mut copy = data.clone();
                let mut metrics = SortMetrics::new();
                let start = Instant::now();
                algorithm.sort(black_box(&mut copy), &mut metrics);
                let elapsed = start.elapsed();
                black_box(&copy);

                if copy != *expected {
                    return Err(BenchError::Verification {
                        algorithm,
                        n,
                        seed: *seed,
                    });
                }
                rows.push(TrialResult {
                    algorithm,
                    distribution: template.distribution,
                    n,
                    trial,
                    elapsed_ns: u64::try_from(elapsed.as_nanos()).unwrap_or(u64::MAX),
                    metrics,
                });
            }
        }
    }

    Ok(BenchmarkReport {
        meta: ReportMeta::from_template(template, trials, warmup),
        rows,
    })
}

/// Statistics for one `(algorithm, distribution, n)` group.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupSummary {
    pub algorithm: Algorithm,
    pub distribution: Distribution,
    pub n: usize,
    pub trials: usize,
    pub median_ns: f64,
    pub mean_ns: f64,
    pub min_ns: u64,
    pub mean_comparisons: f64,
    pub mean_swaps: f64,
    pub mean_writes: f64,
}

impl GroupSummary {
    pub fn median_ms(&self) -> f64 {
        self.median_ns / 1e6
    }
}

/// Median of an even-length sample is the mean of the two middle values.
pub fn median(values: &mut [u64]) -> f64 {
    assert!(!values.is_empty());
    values.sort_unstable();
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid] as f64
    } else {
        (values[mid - 1] as f64 + values[mid] as f64) / 2.0
    }
}

/// One summary per group, in order of first appearance.
pub fn summarize(report: &BenchmarkReport) -> Result<Vec<GroupSummary>, BenchError> {
    if report.rows.is_empty() {
        return Err(BenchError::EmptyReport);
    }
    let mut keys: Vec<(Algorithm, Distribution, usize)> = Vec::new();
    for r in &report.rows {
        let key = (r.algorithm, r.distribution, r.n);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }

    let summaries = keys
        .into_iter()
        .map(|(algorithm, distribution, n)| {
            let group: Vec<&TrialResult> = report
                .rows
                .iter()
                .filter(|r| r.algorithm == algorithm && r.distribution == distribution && r.n == n)
                .collect();
            let count = group.len() as f64;
            let mut elapsed: Vec<u64> = group.iter().map(|r| r.elapsed_ns).collect();
            let mean = |f: fn(&TrialResult) -> u64| group.iter().map(|r| f(r) as f64).sum::<f64>() / count;
            GroupSummary {
                algorithm,
                distribution,
                n,
                trials: group.len(),
                mean_ns: mean(|r| r.elapsed_ns),
                min_ns: *elapsed.iter().min().unwrap(),
                median_ns: median(&mut elapsed),
                mean_comparisons: mean(|r| r.metrics.comparisons),
                mean_swaps: mean(|r| r.metrics.swaps),
                mean_writes: mean(|r| r.metrics.writes),
            }
        })
        .collect();
    Ok(summaries)
}
