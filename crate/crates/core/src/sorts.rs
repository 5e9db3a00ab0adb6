//! In-place ascending sorts over `i64` with operation counting.
//!
//! The baselines are pinned to one concrete variant each so that their
//! counters are deterministic:
//!
//! * [`selection_sort`]: minimum selection, one swap per pass, no early exit.
//! * [`insertion_sort`]: shift-based, scans left while the neighbour is
//!   strictly greater.
//! * [`bubble_sort`]: adjacent exchanges, stops after a pass with no swap.

use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;

use crate::bucket::arc_sort;
use crate::SortMetrics;

/// Max-selection sort that swaps only when the maximum is out of place.
///
/// Each pass over a prefix of length `s` starts with the candidate at
/// `s - 1`, scans `0..s - 1` and takes any element `>=` the candidate, so
/// the last occurrence of the maximum wins. Runs of equal values therefore
/// still get exchanged; that is kept so swap counts match the reference
/// procedure exactly.
///
/// Always performs `n(n-1)/2` comparisons and at most `n - 1` swaps.
pub fn enhanced_selection_sort(data: &mut [i64], metrics: &mut SortMetrics) {
    let mut size = data.len();
    while size > 1 {
        let last = size - 1;
        let mut index = last;
        let mut max = data[last];
        // every scanned element is compared exactly once
        metrics.comparisons += last as u64;
        for (i, &x) in data[..last].iter().enumerate() {
            if x >= max {
                max = x;
                index = i;
            }
        }
        if index != last {
            data.swap(index, last);
            metrics.swap();
        }
        size -= 1;
    }
}

/// Classic minimum-selection sort.
///
/// Every pass ends with an exchange of the minimum into slot `i`, even when
/// it is already there, so swaps are exactly `n - 1` for `n >= 1`.
pub fn selection_sort(data: &mut [i64], metrics: &mut SortMetrics) {
    let n = data.len();
    for i in 0..n.saturating_sub(1) {
        let mut min = i;
        let mut min_value = data[i];
        metrics.comparisons += (n - i - 1) as u64;
        for (j, &x) in data.iter().enumerate().skip(i + 1) {
            if x < min_value {
                min = j;
                min_value = x;
            }
        }
        data.swap(i, min);
        metrics.swap();
    }
}

/// Shift-based insertion sort. `writes` counts shifted elements.
pub fn insertion_sort(data: &mut [i64], metrics: &mut SortMetrics) {
    for i in 1..data.len() {
        let key = data[i];
        let mut j = i;
        while j > 0 {
            metrics.compare();
            if data[j - 1] > key {
                data[j] = data[j - 1];
                metrics.write();
                j -= 1;
            } else {
                break;
            }
        }
        if j != i {
            data[j] = key;
        }
    }
}

/// Bubble sort with early exit after a clean pass.
pub fn bubble_sort(data: &mut [i64], metrics: &mut SortMetrics) {
    let n = data.len();
    for pass in 0..n.saturating_sub(1) {
        let mut swapped = false;
        for j in 0..n - 1 - pass {
            metrics.compare();
            if data[j] > data[j + 1] {
                data.swap(j, j + 1);
                metrics.swap();
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
}

/// A sort selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    /// Digit-count bucketing followed by [`enhanced_selection_sort`] per bucket.
    Arc,
    /// [`enhanced_selection_sort`] over the whole input.
    EnhancedSelection,
    /// [`selection_sort`].
    Selection,
    /// [`insertion_sort`].
    Insertion,
    /// [`bubble_sort`].
    Bubble,
}

impl Algorithm {
    /// Every algorithm, in report order.
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Arc,
        Algorithm::EnhancedSelection,
        Algorithm::Selection,
        Algorithm::Insertion,
        Algorithm::Bubble,
    ];

    /// Arc plus the three classic baselines.
    pub const COMPARISON_SET: [Algorithm; 4] = [
        Algorithm::Arc,
        Algorithm::Selection,
        Algorithm::Insertion,
        Algorithm::Bubble,
    ];

    /// Command-line / report name.
    pub const fn name(self) -> &'static str {
        match self {
            Algorithm::Arc => "arc",
            Algorithm::EnhancedSelection => "enhanced-selection",
            Algorithm::Selection => "selection",
            Algorithm::Insertion => "insertion",
            Algorithm::Bubble => "bubble",
        }
    }

    /// Sort `data` in place, accumulating into `metrics`.
    pub fn sort(self, data: &mut [i64], metrics: &mut SortMetrics) {
        match self {
            Algorithm::Arc => {
                let sorted: Vec<i64> = arc_sort(data, metrics);
                data.copy_from_slice(&sorted);
            }
            Algorithm::EnhancedSelection => enhanced_selection_sort(data, metrics),
            Algorithm::Selection => selection_sort(data, metrics),
            Algorithm::Insertion => insertion_sort(data, metrics),
            Algorithm::Bubble => bubble_sort(data, metrics),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Returned when parsing an unrecognised algorithm name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownAlgorithm(pub alloc::string::String);

impl fmt::Display for UnknownAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown algorithm `{}` (expected one of: arc, enhanced-selection, selection, insertion, bubble)",
            self.0
        )
    }
}

impl core::error::Error for UnknownAlgorithm {}

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| UnknownAlgorithm(s.into()))
    }
}
