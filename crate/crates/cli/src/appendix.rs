//! The per-integer summary table: every representation of each `n` in
//! `[3, max]`, filed under the column of its class.
//!
//! Each row is checked against the brute-force oracle before it is returned.

use std::fmt::Write as _;

use aseries_core::{
    classify_consecutive, classify_diff2, enumerate_series, factorize, representations_consecutive,
    representations_diff2, ArithmeticSeries, ConsecutiveClass, Diff2Class,
};
use serde::Serialize;

use crate::error::CliError;
use crate::render::{annotated, records, to_json, OutputFormat, SeriesRecord};

pub const COLUMN_TAGS: [&str; 6] = ["1A", "1B", "1C", "2A", "2B", "2C"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixRow {
    pub n: u64,
    /// `2^2 · 3` style
    pub factorization: String,
    pub diff2_class: Diff2Class,
    pub diff2_series: Vec<ArithmeticSeries>,
    pub consecutive_class: ConsecutiveClass,
    pub consecutive_series: Vec<ArithmeticSeries>,
}

impl AppendixRow {
    /// The series filed under `tag`; empty for every other column.
    pub fn cell(&self, tag: &str) -> &[ArithmeticSeries] {
        if self.diff2_class.column_tag() == Some(tag) {
            &self.diff2_series
        } else if self.consecutive_class.column_tag() == Some(tag) {
            &self.consecutive_series
        } else {
            &[]
        }
    }
}

fn same_series(generated: &[ArithmeticSeries], oracle: &[ArithmeticSeries]) -> bool {
    let key = |s: &ArithmeticSeries| (s.terms(), s.first());
    let mut a: Vec<_> = generated.iter().map(key).collect();
    let mut b: Vec<_> = oracle.iter().map(key).collect();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

pub fn appendix_row(n: u64) -> Result<AppendixRow, CliError> {
    if n < 3 {
        return Err(CliError::Usage(format!(
            "appendix rows start at 3, got {n}"
        )));
    }
    let diff2_series = representations_diff2(n)?;
    let consecutive_series = representations_consecutive(n)?;
    for (generated, step) in [(&diff2_series, 2), (&consecutive_series, 1)] {
        let oracle = enumerate_series(n, step)?;
        if !same_series(generated, &oracle) {
            return Err(CliError::OracleRejected {
                n,
                detail: format!("step {step}: generated {generated:?}, oracle {oracle:?}"),
            });
        }
    }

    let row = AppendixRow {
        n,
        factorization: factorize(n)?.to_string(),
        diff2_class: classify_diff2(n)?,
        diff2_series,
        consecutive_class: classify_consecutive(n)?,
        consecutive_series,
    };
    // a class without a column must come with no series, and vice versa
    if row.diff2_class.column_tag().is_some() == row.diff2_series.is_empty()
        || row.consecutive_class.column_tag().is_some() == row.consecutive_series.is_empty()
    {
        return Err(CliError::OracleRejected {
            n,
            detail: "classification disagrees with the generated series".to_string(),
        });
    }
    Ok(row)
}

pub fn appendix_rows(max_n: u64) -> Result<Vec<AppendixRow>, CliError> {
    if max_n < 3 {
        return Err(CliError::Usage(format!(
            "--max must be at least 3, got {max_n}"
        )));
    }
    (3..=max_n).map(appendix_row).collect()
}

#[derive(Serialize)]
struct RowJson<'a> {
    n: u64,
    factorization: &'a str,
    diff2_class: &'static str,
    diff2_column: Option<&'static str>,
    diff2_series: Vec<SeriesRecord>,
    consecutive_class: &'static str,
    consecutive_column: Option<&'static str>,
    consecutive_series: Vec<SeriesRecord>,
}

pub fn render(rows: &[AppendixRow], format: OutputFormat) -> Result<String, CliError> {
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            out.push_str("N\tfactorization");
            for tag in COLUMN_TAGS {
                out.push('\t');
                out.push_str(tag);
            }
            out.push('\n');
            for row in rows {
                out.push_str(&format!("{}\t{}", row.n, row.factorization));
                for tag in COLUMN_TAGS {
                    let cell: Vec<String> = row.cell(tag).iter().map(|s| annotated(s, 1)).collect();
                    out.push('\t');
                    out.push_str(&cell.join("  "));
                }
                out.push('\n');
            }
        }
        OutputFormat::Csv => {
            out.push_str("n,factorization,column,first,last,terms\n");
            for row in rows {
                for tag in COLUMN_TAGS {
                    for s in row.cell(tag) {
                        let _ = writeln!(
                            out,
                            "{},{},{tag},{},{},{}",
                            row.n,
                            row.factorization,
                            s.first(),
                            s.last(),
                            s.terms()
                        );
                    }
                }
            }
        }
        OutputFormat::Json => {
            let json: Vec<RowJson> = rows
                .iter()
                .map(|row| RowJson {
                    n: row.n,
                    factorization: &row.factorization,
                    diff2_class: row.diff2_class.name(),
                    diff2_column: row.diff2_class.column_tag(),
                    diff2_series: records(&row.diff2_series),
                    consecutive_class: row.consecutive_class.name(),
                    consecutive_column: row.consecutive_class.column_tag(),
                    consecutive_series: records(&row.consecutive_series),
                })
                .collect();
            out = to_json(&json)?;
        }
    }
    Ok(out)
}
