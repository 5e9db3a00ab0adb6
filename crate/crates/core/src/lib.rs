//! Integer sorting by decimal digit count.
//!
//! Inputs are split into buckets keyed by digit count (bucket 0 takes every
//! non-positive value). Because every value in bucket `i` is smaller than
//! every value in bucket `j > i`, each bucket can be sorted on its own and
//! the buckets concatenated. Buckets are sorted with a max-selection sort
//! that only swaps when the maximum is not already in place.
//!
//! The crate is `no_std` and needs only `alloc`. All sorts report their
//! operation counts through [`SortMetrics`].
//!
//! ```
//! use arc_sort_core::{arc_sort, SortMetrics};
//!
//! let mut metrics = SortMetrics::new();
//! let sorted = arc_sort(&[349, 34, -72, 22, 14, -1], &mut metrics);
//! assert_eq!(sorted, [-72, -1, 14, 22, 34, 349]);
//! ```
#![no_std]

extern crate alloc;

pub mod bucket;
pub mod datagen;
mod metrics;
pub mod sorts;

pub use bucket::{arc_sort, concatenate, count_digits, distribute, BucketIndex, BucketTable};
pub use datagen::{generate, DatasetSpec, Distribution, GenError};
pub use metrics::SortMetrics;
pub use sorts::{
    bubble_sort, enhanced_selection_sort, insertion_sort, selection_sort, Algorithm,
    UnknownAlgorithm,
};

/// Largest digit count an `i64` can have (`i64::MAX` has 19 digits).
pub const MAX_DIGITS: u8 = 19;
