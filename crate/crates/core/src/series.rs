use std::fmt;

use crate::error::{ensure_at_least, Error, Result};

/// Common difference of a series: consecutive integers or successive
/// odd/even numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    One = 1,
    Two = 2,
}

impl Step {
    pub fn get(self) -> u64 {
        self as u64
    }
}

impl TryFrom<u64> for Step {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        match value {
            1 => Ok(Step::One),
            2 => Ok(Step::Two),
            other => Err(Error::InvalidArgument(format!(
                "step must be 1 or 2, got {other}"
            ))),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.get())
    }
}

/// A finite arithmetic progression of at least two positive terms.
///
/// Construction goes through [`ArithmeticSeries::new`], which enforces
/// `first >= 1`, `terms >= 2` and stores `last = first + step · (terms - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArithmeticSeries {
    first: u64,
    step: Step,
    terms: u64,
    last: u64,
}

impl ArithmeticSeries {
    pub fn new(first: u64, step: Step, terms: u64) -> Result<Self> {
        ensure_at_least("first term", first, 1)?;
        ensure_at_least("term count", terms, 2)?;
        let last = step
            .get()
            .checked_mul(terms - 1)
            .and_then(|span| span.checked_add(first))
            .ok_or(Error::Overflow("last term"))?;
        Ok(ArithmeticSeries {
            first,
            step,
            terms,
            last,
        })
    }

    pub fn first(&self) -> u64 {
        self.first
    }

    pub fn last(&self) -> u64 {
        self.last
    }

    pub fn step(&self) -> Step {
        self.step
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    /// `terms · (first + last) / 2`, exact.
    pub fn sum(&self) -> u128 {
        u128::from(self.terms) * (u128::from(self.first) + u128::from(self.last)) / 2
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.terms).map(move |i| self.first + i * self.step.get())
    }

    /// Sort key used for every list of representations: term count, then
    /// first term.
    pub fn canonical_key(&self) -> (u64, u64) {
        (self.terms, self.first)
    }

    /// Renders the summands, eliding the middle as `a + … + b` once the
    /// series has more than four terms. `lead` is how many leading terms are
    /// kept before the ellipsis (at least one).
    pub fn display_with_lead(&self, lead: usize) -> String {
        let lead = lead.max(1) as u64;
        if self.terms <= 4 || lead + 2 >= self.terms {
            return self
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(" + ");
        }
        let mut parts: Vec<String> = self
            .iter()
            .take(lead as usize)
            .map(|t| t.to_string())
            .collect();
        parts.push("…".to_string());
        parts.push(self.last.to_string());
        parts.join(" + ")
    }
}

/// `3 + 5 + … + 21` style, two leading terms.
impl fmt::Display for ArithmeticSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with_lead(2))
    }
}

pub(crate) fn sort_canonical(series: &mut [ArithmeticSeries]) {
    series.sort_by_key(ArithmeticSeries::canonical_key);
}
