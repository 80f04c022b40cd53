//! Sums of consecutive positive integers (common difference 1).
//!
//! Each odd divisor `d > 1` of `n = d · d'` gives one sum. When `d < 2d'` it
//! has `d` terms centred on `d'`; when `d > 2d'` it has `2d'` terms starting
//! at `(d + 1)/2 - d'`. Equality is impossible because `d` is odd.

use crate::error::{ensure_at_least, Error, Result};
use crate::numbers::{factorize, is_prime, odd_even_split};
use crate::series::{sort_canonical, ArithmeticSeries, Step};

/// The consecutive-integer series contributed by the odd divisor `d` of `n`.
pub fn consecutive_from_odd_divisor(n: u64, d: u64) -> Result<ArithmeticSeries> {
    ensure_at_least("odd divisor", d, 3)?;
    if d.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("divisor {d} is even")));
    }
    if !n.is_multiple_of(d) {
        return Err(Error::InvalidArgument(format!("{d} does not divide {n}")));
    }
    let d_prime = n / d;
    let half = (d - 1) / 2;
    // d odd, so d == 2·d' never happens
    debug_assert_ne!(Some(d), d_prime.checked_mul(2));
    if d / 2 < d_prime {
        ArithmeticSeries::new(d_prime - half, Step::One, d)
    } else {
        ArithmeticSeries::new(half + 1 - d_prime, Step::One, 2 * d_prime)
    }
}

/// All representations of `n` as a sum of consecutive positive integers, by
/// ascending term count then first term. Empty exactly for powers of two.
pub fn representations_consecutive(n: u64) -> Result<Vec<ArithmeticSeries>> {
    ensure_at_least("n", n, 2)?;
    let odd_part = odd_even_split(n).odd_part;
    let mut out = factorize(odd_part)?
        .divisors()
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| consecutive_from_odd_divisor(n, d))
        .collect::<Result<Vec<_>>>()?;
    sort_canonical(&mut out);
    Ok(out)
}

/// `1 + 2 + … + count`, paired with the triangular number it sums to.
pub fn triangular_series(count: u64) -> Result<(u64, ArithmeticSeries)> {
    ensure_at_least("count", count, 2)?;
    let series = ArithmeticSeries::new(1, Step::One, count)?;
    let n = u64::try_from(series.sum()).map_err(|_| Error::Overflow("triangular number"))?;
    Ok((n, series))
}

/// The longest consecutive-integer sum of `n = 2^k · q` with `3 <= q < 2^(k+1)`:
/// `q` terms centred on `2^k`.
pub fn max_length_series(n: u64) -> Result<ArithmeticSeries> {
    ensure_at_least("n", n, 2)?;
    let split = odd_even_split(n);
    if split.odd_part < 3 || split.odd_part / 2 >= split.even_part {
        return Err(Error::InvalidArgument(format!(
            "{n} needs odd part >= 3 and below twice its even part ({} · {})",
            split.even_part, split.odd_part
        )));
    }
    ArithmeticSeries::new(
        split.even_part - (split.odd_part - 1) / 2,
        Step::One,
        split.odd_part,
    )
}

/// The two consecutive-integer sums of `2^(k-1) · p²`: one of `p` terms and
/// one of `2^k` terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeSquarePair {
    pub n: u64,
    pub odd_series: ArithmeticSeries,
    pub even_series: ArithmeticSeries,
}

/// Requires an odd prime `p` and `1 <= power_of_two_exp` with
/// `2^power_of_two_exp < p²`.
pub fn prime_square_pair(p: u64, power_of_two_exp: u32) -> Result<PrimeSquarePair> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
    }
    ensure_at_least("power of two exponent", u64::from(power_of_two_exp), 1)?;
    let overflow = || Error::Overflow("prime square pair");
    let p_squared = p.checked_mul(p).ok_or_else(overflow)?;
    let two_pow = 1u64
        .checked_shl(power_of_two_exp)
        .filter(|_| power_of_two_exp < 64)
        .ok_or_else(overflow)?;
    if two_pow >= p_squared {
        return Err(Error::InvalidArgument(format!(
            "2^{power_of_two_exp} must be below {p}^2"
        )));
    }
    let half_pow = two_pow / 2;
    let n = half_pow.checked_mul(p_squared).ok_or_else(overflow)?;
    let centre = half_pow * p;
    let odd_series = ArithmeticSeries::new(centre - (p - 1) / 2, Step::One, p)?;
    let even_series = ArithmeticSeries::new(p_squared.div_ceil(2) - half_pow, Step::One, two_pow)?;
    Ok(PrimeSquarePair {
        n,
        odd_series,
        even_series,
    })
}
