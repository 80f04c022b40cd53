//! Classification of integers by the kinds of arithmetic-series
//! representations they admit, derived from the factorization only.

use std::fmt;

use crate::error::{ensure_at_least, Result};
use crate::numbers::{factorize, is_prime, odd_even_split};

/// Which parities occur among the step-2 representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diff2Class {
    /// n is prime: no representation.
    PrimeNone,
    /// Odd composite, or 2^k with k >= 2.
    OddSumsOnly,
    /// 2 · odd with odd >= 3.
    EvenSumsOnly,
    /// 2^k · odd with k >= 2 and odd >= 3.
    Mixed,
}

/// Which term-count parities occur among the consecutive-integer
/// representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConsecutiveClass {
    /// n is a power of two: no representation.
    PowerOfTwoNone,
    /// Odd part >= 3 and below twice the even part.
    OddLengthsOnly,
    /// Odd part prime and above twice the even part.
    SingleEvenLength,
    /// Odd part composite and above twice the even part.
    BothLengths,
}

impl Diff2Class {
    pub fn name(self) -> &'static str {
        match self {
            Diff2Class::PrimeNone => "PrimeNone",
            Diff2Class::OddSumsOnly => "OddSumsOnly",
            Diff2Class::EvenSumsOnly => "EvenSumsOnly",
            Diff2Class::Mixed => "Mixed",
        }
    }

    /// Appendix column tag (`1A`, `1B`, `1C`); primes have none.
    pub fn column_tag(self) -> Option<&'static str> {
        match self {
            Diff2Class::PrimeNone => None,
            Diff2Class::OddSumsOnly => Some("1A"),
            Diff2Class::EvenSumsOnly => Some("1B"),
            Diff2Class::Mixed => Some("1C"),
        }
    }
}

impl ConsecutiveClass {
    pub fn name(self) -> &'static str {
        match self {
            ConsecutiveClass::PowerOfTwoNone => "PowerOfTwoNone",
            ConsecutiveClass::OddLengthsOnly => "OddLengthsOnly",
            ConsecutiveClass::SingleEvenLength => "SingleEvenLength",
            ConsecutiveClass::BothLengths => "BothLengths",
        }
    }

    /// Appendix column tag (`2A`, `2B`, `2C`); powers of two have none.
    pub fn column_tag(self) -> Option<&'static str> {
        match self {
            ConsecutiveClass::PowerOfTwoNone => None,
            ConsecutiveClass::OddLengthsOnly => Some("2A"),
            ConsecutiveClass::SingleEvenLength => Some("2B"),
            ConsecutiveClass::BothLengths => Some("2C"),
        }
    }
}

impl fmt::Display for Diff2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for ConsecutiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify_diff2(n: u64) -> Result<Diff2Class> {
    ensure_at_least("n", n, 2)?;
    let split = odd_even_split(n);
    Ok(match (split.even_part, split.odd_part) {
        (1, _) if is_prime(n) => Diff2Class::PrimeNone,
        (1, _) => Diff2Class::OddSumsOnly,
        (2, 1) => Diff2Class::PrimeNone,
        (2, _) => Diff2Class::EvenSumsOnly,
        (_, 1) => Diff2Class::OddSumsOnly,
        _ => Diff2Class::Mixed,
    })
}

pub fn classify_consecutive(n: u64) -> Result<ConsecutiveClass> {
    ensure_at_least("n", n, 2)?;
    let split = odd_even_split(n);
    Ok(if split.odd_part == 1 {
        ConsecutiveClass::PowerOfTwoNone
    } else if split.odd_part / 2 < split.even_part {
        ConsecutiveClass::OddLengthsOnly
    } else if is_prime(split.odd_part) {
        ConsecutiveClass::SingleEvenLength
    } else {
        ConsecutiveClass::BothLengths
    })
}

/// Representation counts predicted from the divisor structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PredictedCounts {
    /// `ceil(τ(n) / 2) - 1`
    pub diff2: u64,
    /// odd divisors of n, minus one
    pub consecutive: u64,
}

pub fn predicted_counts(n: u64) -> Result<PredictedCounts> {
    ensure_at_least("n", n, 2)?;
    let f = factorize(n)?;
    Ok(PredictedCounts {
        diff2: f.divisor_count().div_ceil(2) - 1,
        consecutive: f.odd_divisor_count() - 1,
    })
}
