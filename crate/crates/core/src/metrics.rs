use core::ops::AddAssign;

/// Operation counters for one or more sort invocations.
///
/// Sorts add to the counters rather than overwriting them, so one value
/// can accumulate across several calls (the bucket sort relies on this).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct SortMetrics {
    /// Element-to-element order tests.
    pub comparisons: u64,
    /// Two-element exchanges.
    pub swaps: u64,
    /// Single element stores outside of swaps. Only insertion sort's
    /// shifts are counted here.
    pub writes: u64,
}

impl SortMetrics {
    /// All counters at zero.
    pub const fn new() -> Self {
        Self {
            comparisons: 0,
            swaps: 0,
            writes: 0,
        }
    }

    /// Zero every counter.
    pub fn reset(&mut self) {
        *self = Self::new();
    }

    #[inline]
    pub(crate) fn compare(&mut self) {
        self.comparisons += 1;
    }

    #[inline]
    pub(crate) fn swap(&mut self) {
        self.swaps += 1;
    }

    #[inline]
    pub(crate) fn write(&mut self) {
        self.writes += 1;
    }
}

impl AddAssign for SortMetrics {
    fn add_assign(&mut self, rhs: Self) {
        self.comparisons += rhs.comparisons;
        self.swaps += rhs.swaps;
        self.writes += rhs.writes;
    }
}
