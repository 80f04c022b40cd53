//! Regenerates the numbered reference tables from their defining formulas.

use std::fmt::Write as _;

use aseries_core::{
    is_prime, max_length_series, oblong_series, prime_square_pair, representations_consecutive,
    representations_diff2, special_form_series, square_series, triangular_series, ArithmeticSeries,
    SpecialForm,
};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::render::{annotated, records, to_json, OutputFormat};

/// Table ids accepted by [`table`].
pub const TABLE_IDS: [u32; 14] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    /// Values for `Table::param_names`, in order.
    pub params: Vec<u64>,
    /// The represented integer.
    pub n: u64,
    pub series: Vec<ArithmeticSeries>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub id: u32,
    pub title: &'static str,
    pub param_names: &'static [&'static str],
    pub rows: Vec<TableRow>,
    /// leading terms shown before the ellipsis in text output
    lead: usize,
}

fn row(params: Vec<u64>, series: Vec<ArithmeticSeries>) -> TableRow {
    let n = series.first().map(|s| s.sum() as u64).unwrap_or_default();
    TableRow { params, n, series }
}

fn special_rows(form: SpecialForm) -> Result<Vec<TableRow>, CliError> {
    (1..=5)
        .map(|k| {
            let (_, s) = special_form_series(form, k)?;
            Ok(row(vec![k], vec![s]))
        })
        .collect()
}

fn smallest_odd_composite_above(bound: u64) -> u64 {
    (bound + 1..)
        .find(|&q| q % 2 == 1 && q > 1 && !is_prime(q))
        .expect("odd composites are unbounded")
}

pub fn table(id: u32) -> Result<Table, CliError> {
    let (title, param_names, lead, rows): (_, &'static [&'static str], _, _) = match id {
        1 => (
            "squares as sums of the first d odd numbers",
            &["d"],
            usize::MAX,
            (2..=9)
                .map(|d| Ok(row(vec![d], vec![square_series(d)?])))
                .collect::<Result<_, CliError>>()?,
        ),
        2 => (
            "oblong numbers d(d+1) as sums of the first d even numbers",
            &["d"],
            usize::MAX,
            (2..=9)
                .map(|d| Ok(row(vec![d], vec![oblong_series(d)?])))
                .collect::<Result<_, CliError>>()?,
        ),
        3 => (
            "odd-sum representations of (3·5)^j, j = 1..3",
            &["p1", "p2", "j"],
            2,
            (1..=3u32)
                .map(|j| {
                    let series = representations_diff2(15u64.pow(j))?;
                    Ok(row(vec![3, 5, u64::from(j)], series))
                })
                .collect::<Result<_, CliError>>()?,
        ),
        4 => (
            "2(2m+1) with m = k(4k-3) as the first 4k-2 even numbers",
            &["k"],
            2,
            special_rows(SpecialForm::FirstEven4kMinus2)?,
        ),
        5 => (
            "2(2m+1) with m = k(4k+3) as the first 4k+1 even numbers",
            &["k"],
            2,
            special_rows(SpecialForm::FirstEven4kPlus1)?,
        ),
        6 => (
            "(4k-1)·4k as the first 4k-1 even numbers",
            &["k"],
            3,
            special_rows(SpecialForm::FirstEven4kMinus1)?,
        ),
        7 => (
            "4k(4k+1) as the first 4k even numbers",
            &["k"],
            3,
            special_rows(SpecialForm::FirstEven4k)?,
        ),
        8 => (
            "triangular numbers as sums of the first n integers",
            &["n"],
            usize::MAX,
            (2..=9)
                .map(|c| Ok(row(vec![c], vec![triangular_series(c)?.1])))
                .collect::<Result<_, CliError>>()?,
        ),
        9 => (
            "2^n(2m+1) with 2m+1 < 2^(n+1), smallest n: odd-length sums only",
            &["m", "n"],
            3,
            (1..=10u64)
                .map(|m| {
                    let q = 2 * m + 1;
                    let k = (1u32..).find(|&k| q < 1 << (k + 1)).unwrap();
                    let n = (1u64 << k) * q;
                    Ok(row(vec![m, u64::from(k)], representations_consecutive(n)?))
                })
                .collect::<Result<_, CliError>>()?,
        ),
        10 => (
            "2^n·p with p = 2^(n+1)-1 prime: sums of the first p integers",
            &["n", "p"],
            3,
            (1u32..)
                .map(|k| (k, (1u64 << (k + 1)) - 1))
                .filter(|&(_, p)| is_prime(p))
                .take(5)
                .map(|(k, p)| {
                    let n = (1u64 << k) * p;
                    Ok(row(vec![u64::from(k), p], vec![max_length_series(n)?]))
                })
                .collect::<Result<_, CliError>>()?,
        ),
        11 => (
            "2^n(2^(n+1)-1) with 2^(n+1)-1 composite: all consecutive sums",
            &["n"],
            2,
            (1u32..)
                .map(|k| (k, (1u64 << (k + 1)) - 1))
                .filter(|&(_, q)| !is_prime(q))
                .take(5)
                .map(|(k, q)| {
                    let n = (1u64 << k) * q;
                    Ok(row(vec![u64::from(k)], representations_consecutive(n)?))
                })
                .collect::<Result<_, CliError>>()?,
        ),
        12 => (
            "2^(n-1)·p with p the smallest prime above 2^n: the single even-length sum",
            &["n", "p"],
            2,
            (1u32..=10)
                .map(|k| {
                    let p = ((1u64 << k) + 1..).find(|&p| is_prime(p)).unwrap();
                    let n = (1u64 << (k - 1)) * p;
                    Ok(row(vec![u64::from(k), p], representations_consecutive(n)?))
                })
                .collect::<Result<_, CliError>>()?,
        ),
        13 => (
            "2^(n-1)(2m+1) with 2m+1 the smallest odd composite above 2^n",
            &["n", "m"],
            2,
            (1u32..=9)
                .map(|k| {
                    let q = smallest_odd_composite_above(1 << k);
                    let n = (1u64 << (k - 1)) * q;
                    Ok(row(
                        vec![u64::from(k), (q - 1) / 2],
                        representations_consecutive(n)?,
                    ))
                })
                .collect::<Result<_, CliError>>()?,
        ),
        14 => (
            "2^(n-1)·p² with the largest n such that 2^n < p²: one odd and one even sum",
            &["p", "n"],
            1,
            (3u64..)
                .filter(|&p| is_prime(p))
                .take(10)
                .map(|p| {
                    let k = (1u32..)
                        .take_while(|&k| (1u64 << k) < p * p)
                        .last()
                        .unwrap();
                    let pair = prime_square_pair(p, k)?;
                    Ok(row(
                        vec![p, u64::from(k)],
                        vec![pair.odd_series, pair.even_series],
                    ))
                })
                .collect::<Result<_, CliError>>()?,
        ),
        other => {
            return Err(CliError::Usage(format!(
                "unknown table {other}; expected one of {TABLE_IDS:?}"
            )))
        }
    };
    Ok(Table {
        id,
        title,
        param_names,
        rows,
        lead,
    })
}

impl Table {
    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        Ok(match format {
            OutputFormat::Text => self.render_text(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => to_json(&self.to_json())?,
        })
    }

    fn render_text(&self) -> String {
        let mut out = format!("Table {}: {}\n", self.id, self.title);
        let mut header: Vec<&str> = self.param_names.to_vec();
        header.extend(["N", "sum (terms)"]);
        out.push_str(&header.join("\t"));
        out.push('\n');
        for row in &self.rows {
            let mut lead_cells: Vec<String> = row.params.iter().map(u64::to_string).collect();
            lead_cells.push(row.n.to_string());
            let blank = vec![String::new(); lead_cells.len()].join("\t");
            for (i, s) in row.series.iter().enumerate() {
                let prefix = if i == 0 {
                    lead_cells.join("\t")
                } else {
                    blank.clone()
                };
                let _ = writeln!(out, "{prefix}\t{}", annotated(s, self.lead));
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::from("table,row,");
        for name in self.param_names {
            out.push_str(name);
            out.push(',');
        }
        out.push_str("n,first,last,terms\n");
        for (i, row) in self.rows.iter().enumerate() {
            let params: String = row.params.iter().map(|p| format!("{p},")).collect();
            for s in &row.series {
                let _ = writeln!(
                    out,
                    "{},{},{params}{},{},{},{}",
                    self.id,
                    i + 1,
                    row.n,
                    s.first(),
                    s.last(),
                    s.terms()
                );
            }
        }
        out
    }

    fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let params: Map<String, Value> = self
                    .param_names
                    .iter()
                    .zip(&row.params)
                    .map(|(name, value)| (name.to_string(), json!(value)))
                    .collect();
                json!({ "params": params, "n": row.n, "series": records(&row.series) })
            })
            .collect();
        json!({ "id": self.id, "title": self.title, "rows": rows })
    }
}
