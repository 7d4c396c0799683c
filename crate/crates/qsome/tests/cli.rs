//! End-to-end tests of the `qsome` binary: output formats, exit codes, and
//! determinism across worker counts.

use qsome::verify::{Report, Status};
use std::process::{Command, Output};

fn qsome(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsome"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn no_arguments_is_a_usage_error() {
    let out = qsome(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_csv_has_header_and_expected_rows() {
    let out = qsome(&["table", "--max-n", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines[0], "n,pbar,some_bar,s_odd,s_even");
    assert_eq!(lines[1], "0,1,0,0,0");
    assert_eq!(lines[3], "2,4,0,4,4");
    assert_eq!(lines[4], "3,8,8,16,8");
    assert_eq!(lines[6], "5,24,24,72,48");
    assert_eq!(lines.len(), 7);
}

#[test]
fn table_json_is_one_document_with_string_numbers() {
    let out = qsome(&["table", "--max-n", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let rows = rows.as_array().expect("array");
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[4]["pbar"], "14");
    assert_eq!(rows[4]["some_bar"], "8");
    assert_eq!(rows[4]["s_odd"], "32");
    assert_eq!(rows[4]["s_even"], "24");
}

#[test]
fn verify_json_round_trips_and_informational_does_not_fail() {
    let out = qsome(&[
        "verify",
        "--order",
        "256",
        "--claim",
        "eq2",
        "--claim",
        "eq23-as-stated",
        "--format",
        "json",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "informational must not affect exit"
    );
    let reports: Vec<Report> = serde_json::from_str(&stdout(&out)).expect("reports parse");
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0].claim_id, "eq2");
    assert_eq!(reports[0].status, Status::Pass);
    assert!(reports[0].instances > 0);
    assert!(!reports[0].anchor.is_empty());
    assert_eq!(reports[1].claim_id, "eq23-as-stated");
    assert_eq!(reports[1].status, Status::Informational);
    assert!(!reports[1].violations.is_empty());
}

#[test]
fn verify_rejects_unknown_claim_and_bad_order() {
    let out = qsome(&["verify", "--claim", "no-such-claim", "--order", "128"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qsome(&["verify", "--order", "32"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_output_is_deterministic_across_jobs() {
    let args_base = [
        "verify", "--order", "256", "--claim", "eq2", "--claim", "eq3", "--claim", "eq6-k1",
        "--claim", "eq22", "--claim", "pbar-4n3", "--claim", "eq02-odd",
    ];
    let a = qsome(&[&args_base[..], &["--jobs", "1"]].concat());
    let b = qsome(&[&args_base[..], &["--jobs", "4"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(
        stdout(&a),
        stdout(&b),
        "output must not depend on worker count"
    );
    // and across repeated runs
    let c = qsome(&[&args_base[..], &["--jobs", "4"]].concat());
    assert_eq!(stdout(&b), stdout(&c));
}

#[test]
fn verify_csv_has_header() {
    let out = qsome(&[
        "verify", "--order", "128", "--claim", "eq2", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "claim_id,anchor,kind,order,instances,status,violations"
    );
    assert!(lines.next().unwrap().starts_with("eq2,"));
}

#[test]
fn oracle_check_passes_and_enforces_cap() {
    let out = qsome(&["oracle-check", "--max-n", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all routes agree"));
    let out = qsome(&["oracle-check", "--max-n", "46"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn claims_listing_covers_registry() {
    let out = qsome(&["claims"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for id in ["eq2", "eq193", "pf2", "eq23-as-stated", "eta-quotient-mod5"] {
        assert!(text.contains(id), "listing missing {id}");
    }
    let out = qsome(&["claims", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert!(rows.as_array().unwrap().len() >= 30);
}
