use std::collections::BTreeMap;
use std::process::{Command, Output};

use aseries_cli::core::Step;
use aseries_cli::{cmd_repr, OutputFormat, SeriesRecord, SeriesReport};
use proptest::prelude::*;

fn aseries(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aseries"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn successful_commands_exit_zero() {
    for args in [
        &["repr", "120"][..],
        &["repr", "97", "--step", "1", "--format", "json"],
        &["classify", "28", "--format", "csv"],
        &["table", "10"],
        &["appendix", "--max", "20"],
        &["verify", "--from", "2", "--to", "500"],
    ] {
        let out = aseries(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(!out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn repr_text_from_the_binary() {
    let out = aseries(&["repr", "187", "--step", "2"]);
    assert!(stdout(&out).contains("  7 + 9 + … + 27 (11)\n"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["repr", "1"][..],
        &["repr", "0"],
        &["repr", "10", "--step", "3"],
        &["table", "99"],
        &["appendix", "--max", "2"],
        &["verify", "--from", "5", "--to", "3"],
        &["verify", "--from", "1", "--to", "3"],
        &["frobnicate"],
        &["repr", "ten"],
    ] {
        let out = aseries(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_json_reports_certification() {
    let out = aseries(&["verify", "--from", "2", "--to", "300", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["certified"], true);
    assert_eq!(json["checked"], 299);
    assert_eq!(json["mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_csv_has_one_summary_row_when_certified() {
    let out = aseries(&["verify", "--from", "10", "--to", "20", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "from,to,checked,elapsed_ms,n,kind,expected,actual"
    );
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("10,20,11,") && lines[1].ends_with(",,,,"));
}

fn csv_multiset(n: u64) -> BTreeMap<(u64, SeriesRecord), usize> {
    let csv = cmd_repr(n, None, OutputFormat::Csv).unwrap();
    let mut seen = BTreeMap::new();
    for line in csv.lines().skip(1) {
        let f: Vec<u64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(f[0], n);
        let record = SeriesRecord {
            first: f[2],
            last: f[3],
            terms: f[4],
        };
        *seen.entry((f[1], record)).or_insert(0) += 1;
    }
    seen
}

proptest! {
    #[test]
    fn repr_json_round_trips(n in 2u64..200_000) {
        let text = cmd_repr(n, None, OutputFormat::Json).unwrap();
        let reports: Vec<SeriesReport> = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(reports.len(), 2);
        prop_assert_eq!(reports[0].step, 2);
        prop_assert_eq!(reports[1].step, 1);
        let again = serde_json::to_string_pretty(&reports).unwrap() + "\n";
        prop_assert_eq!(&again, &text);

        let mut from_json = BTreeMap::new();
        for report in &reports {
            prop_assert_eq!(report.n, n);
            for record in &report.series {
                prop_assert_eq!(
                    u128::from(record.first + record.last) * u128::from(record.terms),
                    2 * u128::from(n)
                );
                *from_json.entry((report.step, *record)).or_insert(0) += 1;
            }
        }
        prop_assert_eq!(from_json, csv_multiset(n));
    }

    #[test]
    fn step_filter_selects_one_report(n in 2u64..100_000) {
        for step in [Step::One, Step::Two] {
            let text = cmd_repr(n, Some(step), OutputFormat::Json).unwrap();
            let reports: Vec<SeriesReport> = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(reports.len(), 1);
            prop_assert_eq!(reports[0].step, step.get());
        }
    }
}
