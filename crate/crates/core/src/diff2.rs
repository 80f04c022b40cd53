//! Sums of successive odd or successive even positive numbers (common
//! difference 2).
//!
//! Every pair of complementary divisors `d · d' = n` with `1 < d <= d'`
//! yields exactly one such sum: `d` terms running from `d' - d + 1` to
//! `d' + d - 1`. The terms are odd when `d' - d` is even and even otherwise.

use std::fmt;
use std::str::FromStr;

use crate::error::{ensure_at_least, Error, Result};
use crate::numbers::{factorize, is_prime, odd_even_split, pairs_of, DivisorPair};
use crate::series::{sort_canonical, ArithmeticSeries, Step};

/// The step-2 series built from one complementary divisor pair.
pub fn series_from_pair(pair: DivisorPair) -> Result<ArithmeticSeries> {
    let DivisorPair { d, d_prime } = pair;
    ensure_at_least("divisor d", d, 2)?;
    if d > d_prime {
        return Err(Error::InvalidArgument(format!(
            "divisor pair ({d}, {d_prime}) must satisfy d <= d'"
        )));
    }
    ArithmeticSeries::new(d_prime - d + 1, Step::Two, d)
}

/// All representations of `n` with common difference 2, by ascending term
/// count. Empty exactly when `n` is prime.
pub fn representations_diff2(n: u64) -> Result<Vec<ArithmeticSeries>> {
    ensure_at_least("n", n, 2)?;
    let mut out = pairs_of(&factorize(n)?)
        .into_iter()
        .filter(|pair| pair.d >= 2)
        .map(series_from_pair)
        .collect::<Result<Vec<_>>>()?;
    sort_canonical(&mut out);
    Ok(out)
}

/// `1 + 3 + … + (2d - 1) = d²`.
pub fn square_series(d: u64) -> Result<ArithmeticSeries> {
    ensure_at_least("d", d, 2)?;
    ArithmeticSeries::new(1, Step::Two, d)
}

/// `2 + 4 + … + 2d = d · (d + 1)`.
pub fn oblong_series(d: u64) -> Result<ArithmeticSeries> {
    ensure_at_least("d", d, 2)?;
    ArithmeticSeries::new(2, Step::Two, d)
}

/// The sums of `base^k` successive odd numbers representing
/// `base^exponent_plus_one`, for `k = 1 ..= exponent_plus_one / 2`.
///
/// For a prime or odd `base` these come from the pairs
/// `(base^k, base^(e - k))`; each starts at `base^(e - k) - base^k + 1`.
pub fn power_series_family(base: u64, exponent_plus_one: u32) -> Result<Vec<ArithmeticSeries>> {
    ensure_at_least("base", base, 2)?;
    ensure_at_least("exponent", u64::from(exponent_plus_one), 2)?;
    let pow = |e: u32| {
        base.checked_pow(e)
            .ok_or(Error::Overflow("power of the base"))
    };
    pow(exponent_plus_one)?;
    (1..=exponent_plus_one / 2)
        .map(|k| {
            series_from_pair(DivisorPair {
                d: pow(k)?,
                d_prime: pow(exponent_plus_one - k)?,
            })
        })
        .collect()
}

/// Named special forms, each a single divisor pair fed through
/// [`series_from_pair`].
///
/// The meaning of the integer parameter passed to [`special_form_series`]
/// depends on the family:
///
/// | family | parameter | integer | pair |
/// |---|---|---|---|
/// | `FirstEven4kMinus2` | k ≥ 1 | (4k−2)(4k−1) | (4k−2, 4k−1) |
/// | `FirstEven4kPlus1` | k ≥ 1 | (4k+1)(4k+2) | (4k+1, 4k+2) |
/// | `FirstEven4kMinus1` | k ≥ 1 | (4k−1)·4k | (4k−1, 4k) |
/// | `FirstEven4k` | k ≥ 1 | 4k(4k+1) | (4k, 4k+1) |
/// | `TwoEven` | m ≥ 1 | 2(2m+1) | (2, 2m+1) |
/// | `TwoOdd` | N = 2^(n+1)(2m+1), n, m ≥ 1 | N | (2, N/2) |
/// | `FourEven` | N = 4(2m+1), m > 1 | N | (4, N/4) |
/// | `FourOdd` | N = 2^(n+1)(2m+1), n, m > 1 | N | (4, N/4) |
/// | `FourEvenPrime` | prime p > 3 | 4p | (4, p) |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialForm {
    FirstEven4kMinus2,
    FirstEven4kPlus1,
    FirstEven4kMinus1,
    FirstEven4k,
    TwoEven,
    TwoOdd,
    FourEven,
    FourOdd,
    FourEvenPrime,
}

impl SpecialForm {
    pub const ALL: [SpecialForm; 9] = [
        SpecialForm::FirstEven4kMinus2,
        SpecialForm::FirstEven4kPlus1,
        SpecialForm::FirstEven4kMinus1,
        SpecialForm::FirstEven4k,
        SpecialForm::TwoEven,
        SpecialForm::TwoOdd,
        SpecialForm::FourEven,
        SpecialForm::FourOdd,
        SpecialForm::FourEvenPrime,
    ];

    /// Short label, `P15a` … `P19prime`.
    pub fn label(self) -> &'static str {
        match self {
            SpecialForm::FirstEven4kMinus2 => "P15a",
            SpecialForm::FirstEven4kPlus1 => "P15b",
            SpecialForm::FirstEven4kMinus1 => "P17a",
            SpecialForm::FirstEven4k => "P17b",
            SpecialForm::TwoEven => "P16",
            SpecialForm::TwoOdd => "P18",
            SpecialForm::FourEven => "P19even",
            SpecialForm::FourOdd => "P19odd",
            SpecialForm::FourEvenPrime => "P19prime",
        }
    }
}

impl fmt::Display for SpecialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SpecialForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpecialForm::ALL
            .into_iter()
            .find(|form| form.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown special form {s:?}")))
    }
}

/// Builds the integer named by `family` for `param` together with its
/// special series. See [`SpecialForm`] for the parameter of each family.
pub fn special_form_series(family: SpecialForm, param: u64) -> Result<(u64, ArithmeticSeries)> {
    let invalid = |why: &str| {
        Err(Error::InvalidArgument(format!(
            "{family} with {param}: {why}"
        )))
    };
    let mul = |a: u64, b: u64| a.checked_mul(b).ok_or(Error::Overflow("special form"));

    let pair = match family {
        SpecialForm::FirstEven4kMinus2
        | SpecialForm::FirstEven4kPlus1
        | SpecialForm::FirstEven4kMinus1
        | SpecialForm::FirstEven4k => {
            ensure_at_least("k", param, 1)?;
            let four_k = mul(4, param)?;
            let d = match family {
                SpecialForm::FirstEven4kMinus2 => four_k - 2,
                SpecialForm::FirstEven4kPlus1 => four_k + 1,
                SpecialForm::FirstEven4kMinus1 => four_k - 1,
                _ => four_k,
            };
            DivisorPair { d, d_prime: d + 1 }
        }
        SpecialForm::TwoEven => {
            ensure_at_least("m", param, 1)?;
            DivisorPair {
                d: 2,
                d_prime: mul(2, param)? + 1,
            }
        }
        SpecialForm::TwoOdd | SpecialForm::FourEven | SpecialForm::FourOdd => {
            if param == 0 {
                return invalid("must be positive");
            }
            let split = odd_even_split(param);
            let (min_even, max_even, min_odd) = match family {
                SpecialForm::TwoOdd => (4, u64::MAX, 3),
                SpecialForm::FourEven => (4, 4, 5),
                _ => (8, u64::MAX, 5),
            };
            if split.even_part < min_even || split.even_part > max_even {
                return invalid("power of two does not match the family");
            }
            if split.odd_part < min_odd {
                return invalid("odd part too small for the family");
            }
            let d = if family == SpecialForm::TwoOdd { 2 } else { 4 };
            DivisorPair {
                d,
                d_prime: param / d,
            }
        }
        SpecialForm::FourEvenPrime => {
            if param <= 3 || !is_prime(param) {
                return invalid("requires a prime greater than 3");
            }
            mul(4, param)?;
            DivisorPair {
                d: 4,
                d_prime: param,
            }
        }
    };

    let n = mul(pair.d, pair.d_prime)?;
    Ok((n, series_from_pair(pair)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triples(series: &[ArithmeticSeries]) -> Vec<(u64, u64, u64)> {
        series
            .iter()
            .map(|s| (s.first(), s.last(), s.terms()))
            .collect()
    }

    #[test]
    fn pair_examples() {
        let s = |d, d_prime| series_from_pair(DivisorPair { d, d_prime }).unwrap();
        assert_eq!(triples(&[s(10, 12)]), vec![(3, 21, 10)]);
        assert_eq!(triples(&[s(11, 17)]), vec![(7, 27, 11)]);
        assert_eq!(triples(&[s(2, 2)]), vec![(1, 3, 2)]);
        assert_eq!(triples(&[s(10, 15)]), vec![(6, 24, 10)]);
        assert_eq!(triples(&[s(11, 18)]), vec![(8, 28, 11)]);
        assert!(series_from_pair(DivisorPair { d: 1, d_prime: 7 }).is_err());
        assert!(series_from_pair(DivisorPair { d: 8, d_prime: 2 }).is_err());
    }

    #[test]
    fn representation_examples() {
        let reps = |n| triples(&representations_diff2(n).unwrap());
        assert_eq!(reps(16), vec![(7, 9, 2), (1, 7, 4)]);
        assert_eq!(reps(243), vec![(79, 83, 3), (19, 35, 9)]);
        assert!(reps(13).is_empty());
        assert_eq!(
            reps(90),
            vec![
                (44, 46, 2),
                (28, 32, 3),
                (14, 22, 5),
                (10, 20, 6),
                (2, 18, 9)
            ]
        );
        assert_eq!(
            reps(60),
            vec![
                (29, 31, 2),
                (18, 22, 3),
                (12, 18, 4),
                (8, 16, 5),
                (5, 15, 6)
            ]
        );
        assert!(representations_diff2(1).is_err());
    }

    #[test]
    fn figurate_examples() {
        assert_eq!(triples(&[square_series(3).unwrap()]), vec![(1, 5, 3)]);
        assert_eq!(triples(&[square_series(9).unwrap()]), vec![(1, 17, 9)]);
        assert_eq!(triples(&[square_series(2).unwrap()]), vec![(1, 3, 2)]);
        assert!(square_series(1).is_err());
        assert_eq!(triples(&[oblong_series(2).unwrap()]), vec![(2, 4, 2)]);
        assert_eq!(triples(&[oblong_series(9).unwrap()]), vec![(2, 18, 9)]);
        assert_eq!(oblong_series(5).unwrap().sum(), 30);
        assert!(oblong_series(0).is_err());
    }

    #[test]
    fn power_family_examples() {
        assert_eq!(
            triples(&power_series_family(2, 4).unwrap()),
            vec![(7, 9, 2), (1, 7, 4)]
        );
        let fifteen = power_series_family(15, 4).unwrap();
        assert!(fifteen.iter().any(|s| s.first() == 1 && s.terms() == 225));
        assert!(fifteen.iter().all(|s| s.sum() == 15u128.pow(4)));
        assert_eq!(
            triples(&power_series_family(3, 2).unwrap()),
            vec![(1, 5, 3)]
        );
        assert!(power_series_family(3, 1).is_err());
        assert!(power_series_family(10, 40).is_err());
    }

    #[test]
    fn special_form_examples() {
        let (n, s) = special_form_series(SpecialForm::FirstEven4kMinus2, 2).unwrap();
        assert_eq!((n, s.first(), s.last(), s.terms()), (42, 2, 12, 6));
        let (n, s) = special_form_series(SpecialForm::FirstEven4k, 3).unwrap();
        assert_eq!((n, s.first(), s.last(), s.terms()), (156, 2, 24, 12));
        let (n, s) = special_form_series(SpecialForm::FourEvenPrime, 7).unwrap();
        assert_eq!((n, s.first(), s.last(), s.terms()), (28, 4, 10, 4));
        let (n, s) = special_form_series(SpecialForm::FirstEven4kMinus1, 1).unwrap();
        assert_eq!((n, s.first(), s.last(), s.terms()), (12, 2, 6, 3));
        let (n, s) = special_form_series(SpecialForm::TwoEven, 5).unwrap();
        assert_eq!((n, s.first(), s.last(), s.terms()), (22, 10, 12, 2));
        let (n, s) = special_form_series(SpecialForm::TwoOdd, 60).unwrap();
        assert_eq!((n, s.first(), s.last(), s.terms()), (60, 29, 31, 2));
        let (n, s) = special_form_series(SpecialForm::FourEven, 20).unwrap();
        assert_eq!((n, s.first(), s.last(), s.terms()), (20, 2, 8, 4));
        let (n, s) = special_form_series(SpecialForm::FourOdd, 40).unwrap();
        assert_eq!((n, s.first(), s.last(), s.terms()), (40, 7, 13, 4));
    }

    #[test]
    fn special_form_rejects_bad_parameters() {
        use SpecialForm::*;
        assert!(special_form_series(FourEvenPrime, 3).is_err());
        assert!(special_form_series(FourEvenPrime, 9).is_err());
        assert!(special_form_series(FirstEven4k, 0).is_err());
        assert!(special_form_series(TwoOdd, 18).is_err());
        assert!(special_form_series(TwoOdd, 16).is_err());
        assert!(special_form_series(FourEven, 12).is_err());
        assert!(special_form_series(FourEven, 40).is_err());
        assert!(special_form_series(FourOdd, 20).is_err());
        assert!(special_form_series(FourOdd, 24).is_err());
        assert!(special_form_series(TwoOdd, 0).is_err());
    }

    #[test]
    fn special_form_labels_parse() {
        for form in SpecialForm::ALL {
            assert_eq!(form.label().parse::<SpecialForm>().unwrap(), form);
        }
        assert!("P20".parse::<SpecialForm>().is_err());
    }
}
