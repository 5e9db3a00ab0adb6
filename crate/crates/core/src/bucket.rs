//! Digit-count bucketing.
//!
//! Bucket 0 holds every non-positive value, zero included. Bucket `b >= 1`
//! holds positive values with exactly `b` decimal digits. Values in a lower
//! bucket are always smaller than values in a higher one, so sorting each
//! bucket and concatenating them in index order yields a sorted sequence.

use alloc::vec;
use alloc::vec::Vec;

use crate::sorts::enhanced_selection_sort;
use crate::{SortMetrics, MAX_DIGITS};

/// Bucket a value belongs to: 0 for `x <= 0`, otherwise its digit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BucketIndex(u8);

impl BucketIndex {
    /// Bucket for non-positive values.
    pub const NON_POSITIVE: BucketIndex = BucketIndex(0);

    /// Numeric bucket index in `0..=19`.
    pub const fn get(self) -> u8 {
        self.0
    }
}

impl From<BucketIndex> for usize {
    fn from(b: BucketIndex) -> usize {
        b.0 as usize
    }
}

/// Bucket index of `x`.
///
/// ```
/// use arc_sort_core::count_digits;
/// assert_eq!(count_digits(349).get(), 3);
/// assert_eq!(count_digits(0).get(), 0);
/// assert_eq!(count_digits(-72).get(), 0);
/// ```
pub fn count_digits(x: i64) -> BucketIndex {
    if x <= 0 {
        return BucketIndex::NON_POSITIVE;
    }
    let mut digits = 1u8;
    let mut rest = x / 10;
    while rest > 0 {
        digits += 1;
        rest /= 10;
    }
    BucketIndex(digits)
}

/// Inputs partitioned by [`count_digits`].
///
/// `buckets()[b]` holds bucket `b`'s elements in arrival order (until
/// [`BucketTable::sort_buckets`] is called). There are always `k() + 1`
/// buckets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BucketTable {
    buckets: Vec<Vec<i64>>,
}

impl BucketTable {
    /// Highest bucket index in use; 0 when no input is positive.
    pub fn k(&self) -> usize {
        self.buckets.len() - 1
    }

    /// Buckets `0..=k`.
    pub fn buckets(&self) -> &[Vec<i64>] {
        &self.buckets
    }

    /// Elements in bucket `b`, or an empty slice if `b > k`.
    pub fn bucket(&self, b: usize) -> &[i64] {
        self.buckets.get(b).map_or(&[], Vec::as_slice)
    }

    /// Per-bucket element counts.
    pub fn occupancy(&self) -> Vec<usize> {
        self.buckets.iter().map(Vec::len).collect()
    }

    /// Total number of stored elements.
    pub fn len(&self) -> usize {
        self.buckets.iter().map(Vec::len).sum()
    }

    /// `true` when no element is stored.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sort every bucket holding two or more elements with
    /// [`enhanced_selection_sort`]. Empty and singleton buckets are skipped.
    pub fn sort_buckets(&mut self, metrics: &mut SortMetrics) {
        for bucket in self.buckets.iter_mut().filter(|b| b.len() > 1) {
            enhanced_selection_sort(bucket, metrics);
        }
    }
}

/// Partition `input` into buckets, preserving arrival order within each.
pub fn distribute(input: &[i64]) -> BucketTable {
    let k = input
        .iter()
        .map(|&x| usize::from(count_digits(x)))
        .max()
        .unwrap_or(0);
    debug_assert!(k <= MAX_DIGITS as usize);

    let mut buckets = vec![Vec::new(); k + 1];
    for &x in input {
        buckets[usize::from(count_digits(x))].push(x);
    }
    BucketTable { buckets }
}

/// Elements of bucket 0, then bucket 1, and so on, in stored order.
pub fn concatenate(table: &BucketTable) -> Vec<i64> {
    let mut out = Vec::with_capacity(table.len());
    for bucket in &table.buckets {
        out.extend_from_slice(bucket);
    }
    out
}

/// Sort `data` ascending by bucketing on digit count and sorting each
/// bucket independently.
///
/// Comparisons add up to `sum(c * (c - 1) / 2)` over bucket occupancies `c`.
pub fn arc_sort(data: &[i64], metrics: &mut SortMetrics) -> Vec<i64> {
    let mut table = distribute(data);
    table.sort_buckets(metrics);
    concatenate(&table)
}
