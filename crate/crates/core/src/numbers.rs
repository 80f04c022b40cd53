//! Integer infrastructure: primality, factorization, divisors, the split into
//! even and odd parts, and the divisor sum.

use std::fmt;

use crate::error::{ensure_at_least, Error, Result};

/// One `prime^exponent` entry of a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [PrimePower { exponent: 1, .. }])
    }

    /// Number of divisors, τ(n).
    pub fn divisor_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| u64::from(f.exponent) + 1)
            .product()
    }

    /// Number of odd divisors, including 1.
    pub fn odd_divisor_count(&self) -> u64 {
        self.factors
            .iter()
            .filter(|f| f.prime != 2)
            .map(|f| u64::from(f.exponent) + 1)
            .product()
    }

    /// Sum of all divisors, σ(n), from the closed form
    /// `Π (p^(e+1) - 1) / (p - 1)`.
    pub fn divisor_sum(&self) -> Result<u64> {
        let overflow = || Error::Overflow("divisor sum");
        self.factors.iter().try_fold(1u64, |acc, f| {
            // 1 + p + p^2 + ... + p^e, accumulated term by term so that no
            // intermediate exceeds the final value.
            let mut power = 1u64;
            let mut geometric = 1u64;
            for _ in 0..f.exponent {
                power = power.checked_mul(f.prime).ok_or_else(overflow)?;
                geometric = geometric.checked_add(power).ok_or_else(overflow)?;
            }
            acc.checked_mul(geometric).ok_or_else(overflow)
        })
    }

    /// All divisors in ascending order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divisors = vec![1u64];
        for f in &self.factors {
            let current = divisors.len();
            let mut power = 1u64;
            for _ in 0..f.exponent {
                // every product here divides n, so it cannot overflow
                power *= f.prime;
                for i in 0..current {
                    divisors.push(divisors[i] * power);
                }
            }
        }
        divisors.sort_unstable();
        divisors
    }
}

/// Renders as `2^2 · 3 · 5`; the factorization of 1 renders as `1`.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, pp) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " · ")?;
            }
            if pp.exponent == 1 {
                write!(f, "{}", pp.prime)?;
            } else {
                write!(f, "{}^{}", pp.prime, pp.exponent)?;
            }
        }
        Ok(())
    }
}

/// A pair of complementary divisors `d · d_prime = n` with `d <= d_prime`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorPair {
    pub d: u64,
    pub d_prime: u64,
}

impl DivisorPair {
    pub fn product(&self) -> u64 {
        self.d * self.d_prime
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AliquotKind {
    Perfect,
    Abundant,
    Deficient,
}

impl AliquotKind {
    pub fn name(self) -> &'static str {
        match self {
            AliquotKind::Perfect => "Perfect",
            AliquotKind::Abundant => "Abundant",
            AliquotKind::Deficient => "Deficient",
        }
    }
}

impl fmt::Display for AliquotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Aliquot classification; `excess` is the aliquot sum minus n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AliquotClass {
    pub kind: AliquotKind,
    pub excess: i128,
}

/// `n = even_part · odd_part` with `even_part` the largest power of two
/// dividing n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OddEvenSplit {
    pub even_part: u64,
    pub odd_part: u64,
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for the full `u64` range.
///
/// Small values are settled by trial division; the rest by Miller-Rabin with
/// the first twelve prime bases, which has no pseudoprimes below 2^64.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Factorizes `n` by trial division over 2 and the odd numbers.
///
/// Whenever the unfactored remainder tests prime the search stops, so a
/// large prime cofactor costs one primality test instead of a scan to its
/// square root.
pub fn factorize(n: u64) -> Result<Factorization> {
    ensure_at_least("n", n, 1)?;
    let mut factors = Vec::new();
    let mut rest = n;

    let twos = rest.trailing_zeros();
    if twos > 0 {
        factors.push(PrimePower {
            prime: 2,
            exponent: twos,
        });
        rest >>= twos;
    }

    let mut candidate = 3u64;
    let mut remainder_changed = true;
    while rest > 1 {
        if candidate > rest / candidate || (remainder_changed && is_prime(rest)) {
            factors.push(PrimePower {
                prime: rest,
                exponent: 1,
            });
            break;
        }
        remainder_changed = false;
        let mut exponent = 0;
        while rest.is_multiple_of(candidate) {
            rest /= candidate;
            exponent += 1;
        }
        if exponent > 0 {
            factors.push(PrimePower {
                prime: candidate,
                exponent,
            });
            remainder_changed = true;
        }
        candidate += 2;
    }

    Ok(Factorization { n, factors })
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

/// One pair `(d, n / d)` for every divisor `d <= sqrt(n)`, ascending in `d`.
pub fn complementary_pairs(n: u64) -> Result<Vec<DivisorPair>> {
    ensure_at_least("n", n, 2)?;
    Ok(pairs_of(&factorize(n)?))
}

pub(crate) fn pairs_of(factorization: &Factorization) -> Vec<DivisorPair> {
    let n = factorization.n();
    factorization
        .divisors()
        .into_iter()
        .take_while(|&d| d <= n / d)
        .map(|d| DivisorPair { d, d_prime: n / d })
        .collect()
}

/// Splits `n` into its power-of-two part and its odd part.
///
/// # Panics
///
/// Panics if `n` is zero.
pub fn odd_even_split(n: u64) -> OddEvenSplit {
    assert_ne!(n, 0, "odd_even_split requires a positive integer");
    let v = n.trailing_zeros();
    OddEvenSplit {
        even_part: 1 << v,
        odd_part: n >> v,
    }
}

/// Perfect, abundant or deficient, by the sign of `σ(n) - 2n`.
pub fn aliquot_classify(n: u64) -> Result<AliquotClass> {
    ensure_at_least("n", n, 2)?;
    let sigma = factorize(n)?.divisor_sum()?;
    let excess = i128::from(sigma) - 2 * i128::from(n);
    let kind = match excess.signum() {
        0 => AliquotKind::Perfect,
        1 => AliquotKind::Abundant,
        _ => AliquotKind::Deficient,
    };
    Ok(AliquotClass { kind, excess })
}
