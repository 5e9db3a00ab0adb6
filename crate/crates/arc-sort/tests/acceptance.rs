//! Acceptance criteria. Runs as a plain binary and prints one line per
//! criterion; exits non-zero if any hard criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use arc_sort::core::datagen::digit_class_range;
use arc_sort::report::{to_csv, CSV_HEADER};
use arc_sort::{run_benchmark, summarize};
use arc_sort_core::{
    arc_sort, distribute, enhanced_selection_sort, generate, selection_sort, Algorithm,
    DatasetSpec, Distribution, SortMetrics,
};

enum Outcome {
    Pass(String),
    Fail(String),
    /// Environment-dependent shortfall: reported, not failed.
    Report(String),
}

fn check(cond: bool, detail: String) -> Outcome {
    if cond {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn pairs(c: u64) -> u64 {
    c * c.saturating_sub(1) / 2
}

fn ac1_golden() -> Outcome {
    let input = [349, 34, -72, 22, 14, -1];
    let start = Instant::now();
    let sorted = arc_sort(&input, &mut SortMetrics::new());
    let table = distribute(&input);
    let elapsed = start.elapsed();

    let buckets_ok = table.bucket(0) == [-72, -1]
        && table.bucket(1).is_empty()
        && table.bucket(2) == [34, 22, 14]
        && table.bucket(3) == [349]
        && table.k() == 3;
    check(
        sorted == [-72, -1, 14, 22, 34, 349] && buckets_ok && elapsed < Duration::from_millis(1),
        format!("output={sorted:?} buckets={:?} in {elapsed:?}", table.buckets()),
    )
}

// SplitMix64 keeps this criterion independent of the crate's generators.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

fn ac2_oracle() -> Outcome {
    const CASES: usize = 10_000;
    const LIMIT: i64 = 1_000_000_000;
    let start = Instant::now();
    let mut rng = SplitMix(0x0A2C_5027);
    let mut failures = 0usize;
    let mut zeros = 0usize;
    let mut dup_cases = 0usize;

    for case in 0..CASES {
        let n = rng.below(513) as usize;
        // Every third case draws from a narrow range to force duplicates.
        let span = if case % 3 == 0 { 21 } else { 2 * LIMIT as u64 + 1 };
        let offset = if case % 3 == 0 { -10 } else { -LIMIT };
        let input: Vec<i64> = (0..n).map(|_| offset + rng.below(span) as i64).collect();
        zeros += input.iter().filter(|&&x| x == 0).count();

        let mut expected = input.clone();
        expected.sort();
        if expected.windows(2).any(|w| w[0] == w[1]) {
            dup_cases += 1;
        }
        for algo in Algorithm::ALL {
            let mut v = input.clone();
            algo.sort(&mut v, &mut SortMetrics::new());
            if v != expected {
                failures += 1;
                eprintln!("  mismatch: {algo} case {case} n={n}");
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        failures == 0 && zeros > 0 && dup_cases > 0 && elapsed < Duration::from_secs(60),
        format!(
            "{CASES} arrays x 5 algorithms, {failures} failures ({dup_cases} with duplicates, {zeros} zeros) in {elapsed:.2?}"
        ),
    )
}

fn ac3_worst_case() -> Outcome {
    let spec = DatasetSpec::new(Distribution::SingleBucket, 1000, 3).with_digit_class(5);
    let data = generate(&spec).unwrap();
    let mut arc = SortMetrics::new();
    arc_sort(&data, &mut arc);
    let mut ess = SortMetrics::new();
    enhanced_selection_sort(&mut data.clone(), &mut ess);
    check(
        arc.comparisons == 499_500 && ess.comparisons == 499_500 && arc == ess,
        format!("arc comparisons={} enhanced-selection comparisons={}", arc.comparisons, ess.comparisons),
    )
}

fn ac4_best_case() -> Outcome {
    let data = generate(&DatasetSpec::new(Distribution::OnePerBucket, 19, 4)).unwrap();
    let mut m = SortMetrics::new();
    let out = arc_sort(&data, &mut m);
    check(
        m.comparisons == 0 && m.swaps == 0 && out.windows(2).all(|w| w[0] < w[1]) && out.len() == 19,
        format!("n=19 comparisons={} swaps={}", m.comparisons, m.swaps),
    )
}

fn ac5_average_case() -> Outcome {
    const PER_CLASS: usize = 500;
    let classes: Vec<Vec<i64>> = (2..=5u8)
        .map(|d| {
            let spec = DatasetSpec::new(Distribution::SingleBucket, PER_CLASS, 50 + d as u64)
                .with_digit_class(d);
            generate(&spec).unwrap()
        })
        .collect();
    // Round-robin interleave so buckets are filled from mixed arrival order.
    let data: Vec<i64> = (0..PER_CLASS)
        .flat_map(|i| classes.iter().map(move |c| c[i]))
        .collect();
    assert!(data.iter().all(|&x| {
        let (lo, hi) = (digit_class_range(2).0, digit_class_range(5).1);
        (lo..=hi).contains(&x)
    }));

    let mut arc = SortMetrics::new();
    let sorted = arc_sort(&data, &mut arc);
    let mut sel = SortMetrics::new();
    let mut copy = data.clone();
    selection_sort(&mut copy, &mut sel);

    let expected_arc = 4 * pairs(PER_CLASS as u64);
    let expected_sel = pairs(data.len() as u64);
    let ratio = sel.comparisons as f64 / arc.comparisons as f64;
    check(
        arc.comparisons == 499_000
            && expected_arc == 499_000
            && sel.comparisons == 1_999_000
            && expected_sel == 1_999_000
            && sorted == copy
            && (ratio - 4.006).abs() < 0.001,
        format!(
            "n=2000 arc comparisons={} selection comparisons={} ratio={ratio:.4}",
            arc.comparisons, sel.comparisons
        ),
    )
}

fn ac6_timing() -> Outcome {
    let start = Instant::now();
    let template = DatasetSpec::new(Distribution::Uniform, 0, 2020).with_range(-1_000_000, 1_000_000);
    let report = run_benchmark(&[Algorithm::Arc, Algorithm::Selection], &[20_000], &template, 5, 2).unwrap();
    let summary = summarize(&report).unwrap();
    let median = |a: Algorithm| summary.iter().find(|g| g.algorithm == a).unwrap().median_ns;
    let (arc, sel) = (median(Algorithm::Arc), median(Algorithm::Selection));
    let ratio = sel / arc;
    let elapsed = start.elapsed();
    let detail = format!(
        "n=20000 median arc={:.3} ms selection={:.3} ms ratio={ratio:.2} (run {elapsed:.1?})",
        arc / 1e6,
        sel / 1e6
    );
    if elapsed >= Duration::from_secs(120) || ratio <= 1.0 {
        Outcome::Fail(detail)
    } else if ratio < 2.0 {
        Outcome::Report(detail)
    } else {
        Outcome::Pass(detail)
    }
}

fn ac7_swap_frugality() -> Outcome {
    let mut data: Vec<i64> = (0..1000).map(|i| i * 3 - 1500).collect();
    let mut m = SortMetrics::new();
    enhanced_selection_sort(&mut data, &mut m);
    check(m.swaps == 0, format!("n=1000 increasing swaps={}", m.swaps))
}

fn ac8_csv() -> Outcome {
    let template = DatasetSpec::new(Distribution::Uniform, 0, 8);
    let run = || {
        let report = run_benchmark(&Algorithm::COMPARISON_SET, &[0, 100, 500], &template, 3, 1).unwrap();
        to_csv(&report)
    };
    let strip_elapsed = |csv: &str| -> Vec<String> {
        csv.lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| {
                let mut f: Vec<&str> = l.split(',').collect();
                f.remove(4);
                f.join(",")
            })
            .collect()
    };
    let (a, b) = (run(), run());
    let header = a.lines().find(|l| !l.starts_with('#')).unwrap_or_default();
    let meta_a: Vec<&str> = a.lines().filter(|l| l.starts_with('#')).collect();
    let meta_b: Vec<&str> = b.lines().filter(|l| l.starts_with('#')).collect();
    let rows = a.lines().filter(|l| !l.starts_with('#')).count() - 1;
    check(
        header == "algorithm,distribution,n,trial,elapsed_ns,comparisons,swaps,writes"
            && header == CSV_HEADER
            && strip_elapsed(&a) == strip_elapsed(&b)
            && meta_a == meta_b
            && rows == 4 * 3 * 3,
        format!("header ok={} rows={rows} reproducible={}", header == CSV_HEADER, strip_elapsed(&a) == strip_elapsed(&b)),
    )
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("AC1 golden worked example", ac1_golden),
        ("AC2 oracle equivalence", ac2_oracle),
        ("AC3 worst-case comparison count", ac3_worst_case),
        ("AC4 best-case comparison count", ac4_best_case),
        ("AC5 average-case decomposition", ac5_average_case),
        ("AC6 timing ordering", ac6_timing),
        ("AC7 swap frugality", ac7_swap_frugality),
        ("AC8 CSV golden", ac8_csv),
    ];

    let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
    for (name, run) in criteria {
        let (tag, detail) = match run() {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => ("FAIL", d),
            Outcome::Report(d) => ("REPORT", d),
        };
        *tally.entry(tag).or_default() += 1;
        println!("[{tag}] {name}: {detail}");
    }
    let failed = tally.get("FAIL").copied().unwrap_or(0);
    println!("acceptance: {tally:?}");
    if failed > 0 {
        std::process::exit(1);
    }
}
