//! End-to-end checks of the `verify` binary: exit codes, output formats,
//! report schema, and the --out flag.

use std::path::PathBuf;
use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("verify-cli-{}-{name}", std::process::id()))
}

#[test]
fn audit_subcommand_exits_zero_with_a_pass_line() {
    let out = verify(&["audit"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS dimension_audit"));
    assert!(text.contains("summary: 1 passed, 0 failed"));
}

#[test]
fn json_output_matches_the_report_schema() {
    let out = verify(&["audit", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["version"], "1.0");
    assert_eq!(report["seed"], "primes-v1");
    let certs = report["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 1);
    for key in ["id", "paper_anchor", "status", "witnesses", "elapsed_ms"] {
        assert!(certs[0].get(key).is_some(), "missing key {key}");
    }
    assert_eq!(certs[0]["id"], "dimension_audit");
    assert_eq!(certs[0]["status"], "pass");
}

#[test]
fn unknown_subcommand_exits_two() {
    let out = verify(&["bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_seed_exits_two() {
    let out = verify(&["audit", "--seed", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("nope"));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = temp_path("report.json");
    let out = verify(&["hesse", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(report["certificates"][0]["id"], "hesse_almost_free");
    std::fs::remove_file(&path).ok();
}

#[test]
fn unwritable_out_path_exits_two() {
    let out = verify(&["audit", "--out", "/nonexistent-dir/report.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_and_json_modes_agree_on_outcomes() {
    let text_out = verify(&["hesse"]);
    let json_out = verify(&["hesse", "--format", "json"]);
    assert_eq!(text_out.status.code(), json_out.status.code());

    let text = String::from_utf8(text_out.stdout).unwrap();
    let report: serde_json::Value = serde_json::from_slice(&json_out.stdout).unwrap();
    for cert in report["certificates"].as_array().unwrap() {
        let id = cert["id"].as_str().unwrap();
        let status = cert["status"].as_str().unwrap();
        let expected = if status == "pass" {
            format!("PASS {id}")
        } else {
            format!("FAIL {id}")
        };
        assert!(text.contains(&expected), "text mode missing `{expected}`");
    }
}

#[test]
fn seed_flag_selects_the_alternate_prime_window() {
    let out = verify(&["hesse", "--seed", "primes-v2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["seed"], "primes-v2");
    assert_eq!(report["certificates"][0]["status"], "pass");
}
