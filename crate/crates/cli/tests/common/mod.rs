//! Parsing helpers for the printed-table fixtures.

#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Non-comment, non-empty lines split on tabs.
pub fn tsv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.split('\t').map(str::to_string).collect())
        .collect()
}

/// Evaluates printed products such as `2^3 · 3 · 7`, `2^{10}` or `33 550 336`.
pub fn eval_product(expr: &str) -> u64 {
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .split('·')
        .map(|factor| match factor.split_once('^') {
            Some((base, exp)) => {
                let exp = exp.trim_matches(|c| c == '{' || c == '}');
                parse(base).pow(parse(exp) as u32)
            }
            None => parse(factor),
        })
        .product()
}

fn parse(s: &str) -> u64 {
    s.parse().unwrap_or_else(|_| panic!("not a number: {s:?}"))
}

/// `(first, last, terms)` of a printed sum such as `4 + 5 + ... + 12`.
/// Without an explicit count the terms are inferred from the first two summands.
pub fn parse_sum(text: &str, terms: Option<&str>) -> (u64, u64, u64) {
    let nums: Vec<u64> = text
        .split('+')
        .map(str::trim)
        .filter(|t| !matches!(*t, "..." | "…" | ""))
        .map(eval_product)
        .collect();
    assert!(nums.len() >= 2, "not a sum: {text:?}");
    let (first, last) = (nums[0], *nums.last().unwrap());
    let terms = match terms {
        Some(t) => eval_product(t),
        None => (last - first) / (nums[1] - nums[0]) + 1,
    };
    (first, last, terms)
}

/// Splits an appendix cell like `5 + 7 (2) 2 + 4 + 6 (3)` into its series.
pub fn parse_cell(cell: &str) -> Vec<(u64, u64, u64)> {
    cell.split(')')
        .map(str::trim)
        .filter(|chunk| !chunk.is_empty())
        .map(|chunk| {
            let (sum, terms) = chunk
                .rsplit_once('(')
                .unwrap_or_else(|| panic!("missing term count in {cell:?}"));
            parse_sum(sum, Some(terms))
        })
        .collect()
}

pub fn normalize_factorization(text: &str) -> String {
    text.chars().filter(|c| !c.is_whitespace()).collect()
}

/// One printed appendix row: label, factorization and the six columns.
#[derive(Debug, Clone)]
pub struct PrintedRow {
    pub label: String,
    pub factorization: String,
    pub cells: Vec<Vec<(u64, u64, u64)>>,
}

pub fn printed_appendix() -> Vec<PrintedRow> {
    tsv_rows(&fixture("printed_appendix.tsv"))
        .into_iter()
        .map(|mut fields| {
            fields.resize(8, String::new());
            PrintedRow {
                label: fields[0].trim().to_string(),
                factorization: fields[1].trim().to_string(),
                cells: fields[2..].iter().map(|c| parse_cell(c)).collect(),
            }
        })
        .collect()
}

pub fn describe_cell(cell: &[(u64, u64, u64)]) -> String {
    if cell.is_empty() {
        return "-".to_string();
    }
    cell.iter()
        .map(|(first, last, terms)| format!("{first}..{last}({terms})"))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Cell-level differences between the printed appendix and `rows`, one
/// `n<TAB>field<TAB>printed<TAB>computed` line each. Printed rows are matched
/// to integers by position, starting at 3.
pub fn appendix_diff(
    rows: &[aseries_cli::appendix::AppendixRow],
    printed: &[PrintedRow],
) -> Vec<String> {
    use aseries_cli::appendix::COLUMN_TAGS;

    let mut diff = Vec::new();
    assert_eq!(rows.len(), printed.len(), "row count");
    for (row, printed_row) in rows.iter().zip(printed) {
        let n = row.n;
        if printed_row.label != n.to_string() {
            diff.push(format!("{n}\tlabel\t{}\t{n}", printed_row.label));
        }
        if normalize_factorization(&printed_row.factorization)
            != normalize_factorization(&row.factorization)
        {
            let shown = if printed_row.factorization.is_empty() {
                "-"
            } else {
                &printed_row.factorization
            };
            diff.push(format!(
                "{n}\tfactorization\t{shown}\t{}",
                row.factorization
            ));
        }
        for (tag, printed_cell) in COLUMN_TAGS.iter().zip(&printed_row.cells) {
            let computed: Vec<(u64, u64, u64)> = row
                .cell(tag)
                .iter()
                .map(|s| (s.first(), s.last(), s.terms()))
                .collect();
            let mut a = printed_cell.clone();
            let mut b = computed.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                diff.push(format!(
                    "{n}\t{tag}\t{}\t{}",
                    describe_cell(printed_cell),
                    describe_cell(&computed)
                ));
            }
        }
    }
    diff
}
