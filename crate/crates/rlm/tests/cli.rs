//! Exit codes and JSON shape of the command-line surface.

use std::process::{Command, Output};

fn rlm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rlm"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn examples_pass_cleanly() {
    let out = rlm(&["examples"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("MISMATCH"));
    assert!(text.contains("mismatches: 0"));
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = rlm(&["run", "no-such-file.rl"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_error_is_a_usage_error() {
    let dir = std::env::temp_dir().join("rlm-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.rl");
    std::fs::write(&bad, "universe F = \n").unwrap();
    let out = rlm(&["run", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn failed_expectation_exits_one() {
    let dir = std::env::temp_dir().join("rlm-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("mismatch.rl");
    std::fs::write(
        &f,
        "universe F = 1..6\nrelation r(m,n) := n == m\nclassify r expect Indefinite\n",
    )
    .unwrap();
    let out = rlm(&["run", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("MISMATCH"));
}

#[test]
fn json_reports_have_the_documented_shape() {
    let out = rlm(&["examples", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["version"].is_string());
    let reports = doc["reports"].as_array().unwrap();
    assert!(reports.len() >= 20);
    for r in reports {
        assert!(r["command"].is_string());
        assert!(r["target"].is_string());
        assert!(!r["result"].is_null());
        assert!(r["trace"].is_array());
    }
}
