//! Representations of positive integers as simple arithmetic series.
//!
//! Two families are covered: sums of successive odd or successive even
//! numbers (common difference 2, built from complementary divisor pairs in
//! [`diff2`]) and sums of consecutive integers (common difference 1, built
//! from odd divisors in [`consecutive`]). [`classify`] predicts which kinds
//! of sums an integer admits from its factorization alone, and [`oracle`]
//! checks all of it against exhaustive search.
//!
//! ```
//! use aseries_core::{representations_diff2, classify_diff2, Diff2Class};
//!
//! let sums = representations_diff2(16).unwrap();
//! assert_eq!(sums[0].to_string(), "7 + 9");
//! assert_eq!(sums[1].to_string(), "1 + 3 + 5 + 7");
//! assert_eq!(classify_diff2(16).unwrap(), Diff2Class::OddSumsOnly);
//! ```

pub mod classify;
pub mod consecutive;
pub mod diff2;
mod error;
pub mod numbers;
pub mod oracle;
pub mod series;

pub use classify::{
    classify_consecutive, classify_diff2, predicted_counts, ConsecutiveClass, Diff2Class,
    PredictedCounts,
};
pub use consecutive::{
    consecutive_from_odd_divisor, max_length_series, prime_square_pair,
    representations_consecutive, triangular_series, PrimeSquarePair,
};
pub use diff2::{
    oblong_series, power_series_family, representations_diff2, series_from_pair,
    special_form_series, square_series, SpecialForm,
};
pub use error::{Error, Result};
pub use numbers::{
    aliquot_classify, complementary_pairs, divisors, factorize, is_prime, odd_even_split,
    AliquotClass, AliquotKind, DivisorPair, Factorization, OddEvenSplit, PrimePower,
};
pub use oracle::{
    enumerate_series, observed_consecutive_class, observed_diff2_class, verify_number,
    verify_range, Mismatch, MismatchKind, VerificationReport,
};
pub use series::{ArithmeticSeries, Step};
