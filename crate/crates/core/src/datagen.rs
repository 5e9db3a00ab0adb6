//! Seeded dataset generators.
//!
//! Every generator draws from [`ChaCha8Rng`] seeded with
//! [`SeedableRng::seed_from_u64`], which produces the same stream on every
//! platform. A given [`DatasetSpec`] always yields the same sequence.

use core::fmt;
use core::str::FromStr;

use alloc::string::String;
use alloc::vec::Vec;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::MAX_DIGITS;

/// Name of the generator algorithm, recorded in report metadata.
pub const PRNG_NAME: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64)";

/// Default inclusive value range for uniform data.
pub const DEFAULT_RANGE: (i64, i64) = (-1_000_000, 1_000_000);

/// Default digit class for single-bucket data.
pub const DEFAULT_DIGIT_CLASS: u8 = 5;

/// Shape of a generated dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distribution {
    /// Independent draws from `[value_lo, value_hi]`.
    Uniform,
    /// One positive value per digit class `1..=n`, shuffled. Requires `n <= 19`.
    OnePerBucket,
    /// `n` draws, all with `digit_class` digits.
    SingleBucket,
    /// Strictly increasing values within `[value_lo, value_hi]`.
    SortedAscending,
    /// Strictly decreasing values within `[value_lo, value_hi]`.
    ReverseSorted,
    /// Uniform draws; the range must contain both negative and positive values.
    WithNegatives,
}

impl Distribution {
    /// Every distribution.
    pub const ALL: [Distribution; 6] = [
        Distribution::Uniform,
        Distribution::OnePerBucket,
        Distribution::SingleBucket,
        Distribution::SortedAscending,
        Distribution::ReverseSorted,
        Distribution::WithNegatives,
    ];

    /// Command-line / report name.
    pub const fn name(self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::OnePerBucket => "one-per-bucket",
            Distribution::SingleBucket => "single-bucket",
            Distribution::SortedAscending => "sorted-ascending",
            Distribution::ReverseSorted => "reverse-sorted",
            Distribution::WithNegatives => "with-negatives",
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Distribution {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Distribution::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| GenError::UnknownDistribution(s.into()))
    }
}

/// Everything needed to reproduce a dataset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DatasetSpec {
    pub distribution: Distribution,
    pub n: usize,
    pub seed: u64,
    /// Inclusive lower bound (uniform, monotone, with-negatives).
    pub value_lo: i64,
    /// Inclusive upper bound.
    pub value_hi: i64,
    /// Digit count for single-bucket data, in `1..=19`.
    pub digit_class: u8,
}

impl DatasetSpec {
    /// Spec with the default range and digit class.
    pub fn new(distribution: Distribution, n: usize, seed: u64) -> Self {
        Self {
            distribution,
            n,
            seed,
            value_lo: DEFAULT_RANGE.0,
            value_hi: DEFAULT_RANGE.1,
            digit_class: DEFAULT_DIGIT_CLASS,
        }
    }

    pub fn with_range(mut self, lo: i64, hi: i64) -> Self {
        self.value_lo = lo;
        self.value_hi = hi;
        self
    }

    pub fn with_digit_class(mut self, digits: u8) -> Self {
        self.digit_class = digits;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    /// Check the spec without generating anything.
    pub fn validate(&self) -> Result<(), GenError> {
        if self.value_lo > self.value_hi {
            return Err(GenError::InvalidRange {
                lo: self.value_lo,
                hi: self.value_hi,
            });
        }
        if !(1..=MAX_DIGITS).contains(&self.digit_class) {
            return Err(GenError::InvalidDigitClass(self.digit_class));
        }
        match self.distribution {
            Distribution::OnePerBucket if self.n > MAX_DIGITS as usize => {
                Err(GenError::TooManyBuckets(self.n))
            }
            Distribution::SortedAscending | Distribution::ReverseSorted => {
                let span = self.value_hi as i128 - self.value_lo as i128;
                if self.n > 1 && span < (self.n - 1) as i128 {
                    Err(GenError::RangeTooSmall {
                        n: self.n,
                        lo: self.value_lo,
                        hi: self.value_hi,
                    })
                } else {
                    Ok(())
                }
            }
            Distribution::WithNegatives if self.value_lo >= 0 || self.value_hi <= 0 => {
                Err(GenError::NoSignChange {
                    lo: self.value_lo,
                    hi: self.value_hi,
                })
            }
            _ => Ok(()),
        }
    }
}

/// Invalid dataset description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    UnknownDistribution(String),
    InvalidRange { lo: i64, hi: i64 },
    InvalidDigitClass(u8),
    /// One-per-bucket asked for more classes than `i64` has.
    TooManyBuckets(usize),
    /// Not enough distinct values in range for a strictly monotone sequence.
    RangeTooSmall { n: usize, lo: i64, hi: i64 },
    /// With-negatives needs `lo < 0 < hi`.
    NoSignChange { lo: i64, hi: i64 },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::UnknownDistribution(s) => write!(f, "unknown distribution `{s}`"),
            GenError::InvalidRange { lo, hi } => write!(f, "empty value range [{lo}, {hi}]"),
            GenError::InvalidDigitClass(d) => {
                write!(f, "digit class {d} outside 1..={MAX_DIGITS}")
            }
            GenError::TooManyBuckets(n) => write!(
                f,
                "one-per-bucket needs n <= {MAX_DIGITS} (i64 has {MAX_DIGITS} digit classes), got {n}"
            ),
            GenError::RangeTooSmall { n, lo, hi } => write!(
                f,
                "range [{lo}, {hi}] cannot hold {n} strictly monotone values"
            ),
            GenError::NoSignChange { lo, hi } => write!(
                f,
                "with-negatives needs a range straddling zero, got [{lo}, {hi}]"
            ),
        }
    }
}

impl core::error::Error for GenError {}

/// Inclusive value range of positive integers with `digits` decimal digits.
pub fn digit_class_range(digits: u8) -> (i64, i64) {
    assert!((1..=MAX_DIGITS).contains(&digits), "digit class {digits}");
    let lo = 10i64.pow(digits as u32 - 1);
    let hi = if digits == MAX_DIGITS {
        i64::MAX
    } else {
        10i64.pow(digits as u32) - 1
    };
    (lo, hi)
}

/// Produce the dataset described by `spec`.
pub fn generate(spec: &DatasetSpec) -> Result<Vec<i64>, GenError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let range = spec.value_lo..=spec.value_hi;

    let data = match spec.distribution {
        Distribution::Uniform | Distribution::WithNegatives => {
            (0..n).map(|_| rng.gen_range(range.clone())).collect()
        }
        Distribution::OnePerBucket => {
            let mut v: Vec<i64> = (1..=n as u8)
                .map(|d| rng.gen_range(class_range(d)))
                .collect();
            v.shuffle(&mut rng);
            v
        }
        Distribution::SingleBucket => {
            let r = class_range(spec.digit_class);
            (0..n).map(|_| rng.gen_range(r.clone())).collect()
        }
        Distribution::SortedAscending => monotone(&mut rng, spec),
        Distribution::ReverseSorted => {
            let mut v = monotone(&mut rng, spec);
            v.reverse();
            v
        }
    };
    Ok(data)
}

fn class_range(digits: u8) -> core::ops::RangeInclusive<i64> {
    let (lo, hi) = digit_class_range(digits);
    lo..=hi
}

// Random positive steps from value_lo; caps keep the last value <= value_hi.
fn monotone(rng: &mut ChaCha8Rng, spec: &DatasetSpec) -> Vec<i64> {
    let n = spec.n;
    if n == 0 {
        return Vec::new();
    }
    let span = (spec.value_hi as i128 - spec.value_lo as i128) as u128;
    let max_step = if n > 1 {
        (span / (n as u128 - 1)).min(u64::MAX as u128) as u64
    } else {
        1
    };
    let mut v = Vec::with_capacity(n);
    let mut cur = spec.value_lo as i128;
    v.push(spec.value_lo);
    for _ in 1..n {
        cur += rng.gen_range(1..=max_step) as i128;
        v.push(cur as i64);
    }
    v
}
