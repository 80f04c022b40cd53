//! Brute-force enumeration of arithmetic-series representations, and range
//! verification of the divisor-based generators against it.
//!
//! [`enumerate_series`] never looks at divisors: for every term count `r` it
//! solves `n = r·a + step·r(r-1)/2` for the first term `a` and keeps the
//! positive integral solutions.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use crate::classify::{classify_consecutive, classify_diff2, predicted_counts};
use crate::classify::{ConsecutiveClass, Diff2Class};
use crate::consecutive::representations_consecutive;
use crate::diff2::representations_diff2;
use crate::error::{ensure_at_least, Error, Result};
use crate::series::{ArithmeticSeries, Step};

/// Every series with common difference `step` (1 or 2), at least two terms
/// and first term at least 1 that sums to `n`, by ascending term count.
pub fn enumerate_series(n: u64, step: u64) -> Result<Vec<ArithmeticSeries>> {
    let step = Step::try_from(step)?;
    ensure_at_least("n", n, 2)?;
    let n = u128::from(n);
    let s = u128::from(step.get());
    let mut out = Vec::new();
    let mut r: u128 = 2;
    loop {
        // sum of r terms starting at 1
        let offset = s * r * (r - 1) / 2;
        if r + offset > n {
            break;
        }
        let rest = n - offset;
        if rest.is_multiple_of(r) {
            let first = (rest / r) as u64;
            out.push(ArithmeticSeries::new(first, step, r as u64)?);
        }
        r += 1;
    }
    Ok(out)
}

/// Diff-2 class read off a list of step-2 series by the parity of the terms.
pub fn observed_diff2_class(series: &[ArithmeticSeries]) -> Diff2Class {
    let odd = series.iter().any(|s| s.first() % 2 == 1);
    let even = series.iter().any(|s| s.first() % 2 == 0);
    match (odd, even) {
        (false, false) => Diff2Class::PrimeNone,
        (true, false) => Diff2Class::OddSumsOnly,
        (false, true) => Diff2Class::EvenSumsOnly,
        (true, true) => Diff2Class::Mixed,
    }
}

/// Consecutive class read off a list of step-1 series by term-count parity.
/// `None` when the lengths fit no class (several series, all even length).
pub fn observed_consecutive_class(series: &[ArithmeticSeries]) -> Option<ConsecutiveClass> {
    let odd = series.iter().filter(|s| s.terms() % 2 == 1).count();
    let even = series.len() - odd;
    match (odd, even) {
        (0, 0) => Some(ConsecutiveClass::PowerOfTwoNone),
        (_, 0) => Some(ConsecutiveClass::OddLengthsOnly),
        (0, 1) => Some(ConsecutiveClass::SingleEvenLength),
        (0, _) => None,
        _ => Some(ConsecutiveClass::BothLengths),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MismatchKind {
    Diff2Series,
    ConsecutiveSeries,
    Diff2Class,
    ConsecutiveClass,
    Diff2Count,
    ConsecutiveCount,
    Failure,
}

impl MismatchKind {
    pub fn name(self) -> &'static str {
        match self {
            MismatchKind::Diff2Series => "diff2_series",
            MismatchKind::ConsecutiveSeries => "consecutive_series",
            MismatchKind::Diff2Class => "diff2_class",
            MismatchKind::ConsecutiveClass => "consecutive_class",
            MismatchKind::Diff2Count => "diff2_count",
            MismatchKind::ConsecutiveCount => "consecutive_count",
            MismatchKind::Failure => "failure",
        }
    }
}

impl fmt::Display for MismatchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One disagreement. `expected` is what the oracle saw, `actual` what the
/// generator or classifier produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub kind: MismatchKind,
    pub expected: String,
    pub actual: String,
}

fn describe(series: &[ArithmeticSeries]) -> String {
    let items: Vec<String> = series
        .iter()
        .map(|s| format!("{}..{}({})", s.first(), s.last(), s.terms()))
        .collect();
    format!("[{}]", items.join("; "))
}

fn sorted_triples(series: &[ArithmeticSeries]) -> Vec<(u64, u64, u64)> {
    let mut v: Vec<_> = series
        .iter()
        .map(|s| (s.terms(), s.first(), s.step().get()))
        .collect();
    v.sort_unstable();
    v
}

/// Compares generators, classifiers and predicted counts for `n` against
/// the oracle. Empty on full agreement.
pub fn verify_number(n: u64) -> Vec<Mismatch> {
    match try_verify_number(n) {
        Ok(found) => found,
        Err(err) => vec![Mismatch {
            n,
            kind: MismatchKind::Failure,
            expected: "success".to_string(),
            actual: err.to_string(),
        }],
    }
}

fn try_verify_number(n: u64) -> Result<Vec<Mismatch>> {
    let mut found = Vec::new();
    let mut check = |kind, expected: String, actual: String| {
        if expected != actual {
            found.push(Mismatch {
                n,
                kind,
                expected,
                actual,
            });
        }
    };

    let oracle_diff2 = enumerate_series(n, 2)?;
    let oracle_consecutive = enumerate_series(n, 1)?;
    let diff2 = representations_diff2(n)?;
    let consecutive = representations_consecutive(n)?;

    if sorted_triples(&oracle_diff2) != sorted_triples(&diff2) {
        check(
            MismatchKind::Diff2Series,
            describe(&oracle_diff2),
            describe(&diff2),
        );
    }
    if sorted_triples(&oracle_consecutive) != sorted_triples(&consecutive) {
        check(
            MismatchKind::ConsecutiveSeries,
            describe(&oracle_consecutive),
            describe(&consecutive),
        );
    }

    check(
        MismatchKind::Diff2Class,
        observed_diff2_class(&oracle_diff2).to_string(),
        classify_diff2(n)?.to_string(),
    );
    check(
        MismatchKind::ConsecutiveClass,
        observed_consecutive_class(&oracle_consecutive)
            .map_or_else(|| "unclassifiable".to_string(), |c| c.to_string()),
        classify_consecutive(n)?.to_string(),
    );

    let predicted = predicted_counts(n)?;
    check(
        MismatchKind::Diff2Count,
        oracle_diff2.len().to_string(),
        predicted.diff2.to_string(),
    );
    check(
        MismatchKind::ConsecutiveCount,
        oracle_consecutive.len().to_string(),
        predicted.consecutive.to_string(),
    );
    Ok(found)
}

/// Outcome of checking every integer of `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub lo: u64,
    pub hi: u64,
    pub checked: u64,
    /// Ordered by `n`, then kind.
    pub mismatches: Vec<Mismatch>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn certified(&self) -> bool {
        self.mismatches.is_empty()
    }
}

const CHUNK: usize = 256;

/// Runs [`verify_number`] over `[lo, hi]` in parallel chunks. The mismatch
/// list does not depend on scheduling.
pub fn verify_range(lo: u64, hi: u64) -> Result<VerificationReport> {
    ensure_at_least("lo", lo, 2)?;
    if hi < lo {
        return Err(Error::InvalidArgument(format!(
            "empty range: from {lo} to {hi}"
        )));
    }
    let started = Instant::now();
    let chunk_starts: Vec<u64> = (lo..=hi).step_by(CHUNK).collect();
    let mut mismatches: Vec<Mismatch> = chunk_starts
        .into_par_iter()
        .flat_map_iter(|start| {
            let end = start.saturating_add(CHUNK as u64 - 1).min(hi);
            (start..=end).flat_map(verify_number)
        })
        .collect();
    mismatches.sort_by_key(|m| (m.n, m.kind));
    Ok(VerificationReport {
        lo,
        hi,
        checked: hi - lo + 1,
        mismatches,
        elapsed_ms: started.elapsed().as_millis(),
    })
}
