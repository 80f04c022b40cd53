//! One function per subcommand. Each returns the full rendered output so the
//! binary only has to print it and pick an exit status.

use std::fmt::Write as _;

use aseries_core::{
    aliquot_classify, classify_consecutive, classify_diff2, factorize, predicted_counts,
    representations_consecutive, representations_diff2, verify_range, Step,
};
use serde::Serialize;

use crate::appendix;
use crate::error::CliError;
use crate::render::{annotated, records, to_json, OutputFormat, SeriesReport};
use crate::tables;

fn require_n(n: u64) -> Result<(), CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("N must be at least 2, got {n}")));
    }
    Ok(())
}

/// Every representation of `n`, step 2 first unless `step` narrows it.
pub fn cmd_repr(n: u64, step: Option<Step>, format: OutputFormat) -> Result<String, CliError> {
    require_n(n)?;
    let steps = match step {
        Some(s) => vec![s],
        None => vec![Step::Two, Step::One],
    };
    let diff2_class = classify_diff2(n)?;
    let consecutive_class = classify_consecutive(n)?;
    let mut reports = Vec::with_capacity(steps.len());
    for step in steps {
        let series = match step {
            Step::Two => representations_diff2(n)?,
            Step::One => representations_consecutive(n)?,
        };
        reports.push((step, series));
    }

    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for (step, series) in &reports {
                let (heading, empty) = match step {
                    Step::Two => ("sums of successive odd or even numbers", "prime"),
                    Step::One => ("sums of consecutive integers", "power of two"),
                };
                let _ = writeln!(out, "{n} as {heading} (step {step}):");
                if series.is_empty() {
                    let _ = writeln!(out, "  no representations ({empty})");
                }
                for s in series {
                    let _ = writeln!(out, "  {}", annotated(s, 2));
                }
            }
        }
        OutputFormat::Csv => {
            out.push_str("n,step,first,last,terms\n");
            for (step, series) in &reports {
                for s in series {
                    let _ = writeln!(out, "{n},{step},{},{},{}", s.first(), s.last(), s.terms());
                }
            }
        }
        OutputFormat::Json => {
            let json: Vec<SeriesReport> = reports
                .iter()
                .map(|(step, series)| SeriesReport {
                    n,
                    step: step.get(),
                    series: records(series),
                    diff2_class: diff2_class.to_string(),
                    consecutive_class: consecutive_class.to_string(),
                })
                .collect();
            out = to_json(&json)?;
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct ClassificationJson {
    n: u64,
    factorization: String,
    diff2_class: &'static str,
    consecutive_class: &'static str,
    aliquot_class: &'static str,
    aliquot_excess: i128,
    diff2_count: u64,
    consecutive_count: u64,
}

pub fn cmd_classify(n: u64, format: OutputFormat) -> Result<String, CliError> {
    require_n(n)?;
    let aliquot = aliquot_classify(n)?;
    let counts = predicted_counts(n)?;
    let record = ClassificationJson {
        n,
        factorization: factorize(n)?.to_string(),
        diff2_class: classify_diff2(n)?.name(),
        consecutive_class: classify_consecutive(n)?.name(),
        aliquot_class: aliquot.kind.name(),
        aliquot_excess: aliquot.excess,
        diff2_count: counts.diff2,
        consecutive_count: counts.consecutive,
    };
    Ok(match format {
        OutputFormat::Text => format!(
            "n: {}\nfactorization: {}\ndiff2 class: {}\nconsecutive class: {}\n\
             aliquot class: {} (excess {})\npredicted counts: {} diff2, {} consecutive\n",
            record.n,
            record.factorization,
            record.diff2_class,
            record.consecutive_class,
            record.aliquot_class,
            record.aliquot_excess,
            record.diff2_count,
            record.consecutive_count,
        ),
        OutputFormat::Csv => format!(
            "n,diff2_class,consecutive_class,aliquot_class,aliquot_excess,diff2_count,consecutive_count\n\
             {},{},{},{},{},{},{}\n",
            record.n,
            record.diff2_class,
            record.consecutive_class,
            record.aliquot_class,
            record.aliquot_excess,
            record.diff2_count,
            record.consecutive_count,
        ),
        OutputFormat::Json => to_json(&record)?,
    })
}

pub fn cmd_table(id: u32, format: OutputFormat) -> Result<String, CliError> {
    tables::table(id)?.render(format)
}

pub fn cmd_appendix(max_n: u64, format: OutputFormat) -> Result<String, CliError> {
    appendix::render(&appendix::appendix_rows(max_n)?, format)
}

#[derive(Serialize)]
struct MismatchJson<'a> {
    n: u64,
    kind: &'static str,
    expected: &'a str,
    actual: &'a str,
}

/// Rendered report plus whether the range was certified.
pub fn cmd_verify(from: u64, to: u64, format: OutputFormat) -> Result<(String, bool), CliError> {
    if from < 2 || to < from {
        return Err(CliError::Usage(format!(
            "need 2 <= from <= to, got from {from} to {to}"
        )));
    }
    let report = verify_range(from, to)?;
    let certified = report.certified();
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            let _ = writeln!(
                out,
                "verified {from}..={to}: {} checked, {} mismatches ({} ms)",
                report.checked,
                report.mismatches.len(),
                report.elapsed_ms
            );
            for m in &report.mismatches {
                let _ = writeln!(
                    out,
                    "  n = {} {}: expected {}, got {}",
                    m.n, m.kind, m.expected, m.actual
                );
            }
            out.push_str(if certified {
                "certified\n"
            } else {
                "NOT certified\n"
            });
        }
        OutputFormat::Csv => {
            out.push_str("from,to,checked,elapsed_ms,n,kind,expected,actual\n");
            let prefix = format!("{from},{to},{},{}", report.checked, report.elapsed_ms);
            if certified {
                let _ = writeln!(out, "{prefix},,,,");
            }
            for m in &report.mismatches {
                let _ = writeln!(
                    out,
                    "{prefix},{},{},{},{}",
                    m.n, m.kind, m.expected, m.actual
                );
            }
        }
        OutputFormat::Json => {
            let mismatches: Vec<MismatchJson> = report
                .mismatches
                .iter()
                .map(|m| MismatchJson {
                    n: m.n,
                    kind: m.kind.name(),
                    expected: &m.expected,
                    actual: &m.actual,
                })
                .collect();
            out = to_json(&serde_json::json!({
                "from": from,
                "to": to,
                "checked": report.checked,
                "certified": certified,
                "elapsed_ms": report.elapsed_ms as u64,
                "mismatches": mismatches,
            }))?;
        }
    }
    Ok((out, certified))
}
