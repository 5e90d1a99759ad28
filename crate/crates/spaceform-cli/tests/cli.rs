//! End-to-end tests of the command-line binary: report shape, exit codes,
//! output determinism, and the corrupted-input negative control.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spaceform"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("spaceform-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    for args in [
        &["homology", "--target", "quotient", "--group", "T", "--json", "-"][..],
        &["cohomology", "--group", "O", "--qmax", "8", "--json", "-"][..],
        &["group", "--group", "S3", "--json", "-"][..],
    ] {
        let first = run(args);
        let second = run(args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?} must be deterministic");
        assert!(!first.stdout.is_empty());
    }
}

#[test]
fn report_json_has_the_contract_fields() {
    let out = run(&["homology", "--target", "flag", "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["command"], "homology --target flag");
    assert!(v["version"].is_string());
    assert_eq!(v["overall"], "pass");
    let checks = v["checks"].as_array().expect("checks array");
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["name"].is_string());
        assert!(
            matches!(c["status"].as_str(), Some("pass" | "fail" | "skipped")),
            "status vocabulary"
        );
        assert!(c["details"].is_string());
    }
}

#[test]
fn emitted_complex_round_trips_through_verification() {
    let path = temp_path("ko.json");
    let path_str = path.to_str().unwrap();

    let out = run(&["complex", "--label", "KO", "--emit", path_str]);
    assert_eq!(out.status.code(), Some(0));

    let verify = run(&["complex", "--label", "KO", "--verify", "--input", path_str]);
    assert_eq!(verify.status.code(), Some(0), "round-tripped complex verifies");
    assert!(stdout(&verify).contains("overall: pass"));

    // Emitting to stdout gives exactly the file content.
    let streamed = run(&["complex", "--label", "KO", "--emit", "-"]);
    assert_eq!(streamed.status.code(), Some(0));
    let file = std::fs::read_to_string(&path).unwrap();
    assert_eq!(stdout(&streamed), file);

    std::fs::remove_file(&path).ok();
}

#[test]
fn corrupted_complex_fails_verification_and_names_the_check() {
    let good = temp_path("kt-good.json");
    let bad = temp_path("kt-bad.json");
    let out = run(&["complex", "--label", "KT", "--emit", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // Flip one sign in one boundary entry.
    let text = std::fs::read_to_string(&good).unwrap();
    let corrupted = text.replacen("-1,", "1,", 1);
    assert_ne!(text, corrupted, "fixture must actually change");
    std::fs::write(&bad, corrupted).unwrap();

    let verify = run(&["complex", "--label", "KT", "--verify", "--input", bad.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(1), "verification failure exits 1");
    let text = stdout(&verify);
    assert!(text.contains("FAIL"), "a failing check is printed:\n{text}");
    assert!(
        text.contains("boundary composition"),
        "the failing check is named:\n{text}"
    );
    assert!(text.contains("overall: fail"));

    std::fs::remove_file(&good).ok();
    std::fs::remove_file(&bad).ok();
}

#[test]
fn usage_errors_exit_two() {
    // Unknown flag value.
    assert_eq!(run(&["group", "--group", "X"]).status.code(), Some(2));
    // Missing required mode.
    assert_eq!(run(&["complex", "--label", "KO"]).status.code(), Some(2));
    // Sphere without a group.
    assert_eq!(run(&["homology", "--target", "sphere"]).status.code(), Some(2));
    // Period count beyond the size guard is refused, not computed.
    let big = run(&["homology", "--target", "sphere", "--group", "I", "--n", "3"]);
    assert_eq!(big.status.code(), Some(2));
    // Unreadable input file.
    let missing = run(&["complex", "--label", "KO", "--verify", "--input", "/no/such/file.json"]);
    assert_eq!(missing.status.code(), Some(2));
    // Cohomology below one full period.
    assert_eq!(run(&["cohomology", "--group", "T", "--qmax", "3"]).status.code(), Some(2));
}

#[test]
fn verify_all_fast_passes_and_marks_skips() {
    let out = run(&["verify-all", "--fast", "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["command"], "verify-all --fast");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() > 100, "the full suite runs, got {}", checks.len());
    let skipped: Vec<&str> = checks
        .iter()
        .filter(|c| c["status"] == "skipped")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(
        skipped.iter().any(|n| n.contains("exhaustive facet oracle")),
        "icosahedral oracle is marked skipped, got {skipped:?}"
    );
    assert!(
        skipped.iter().any(|n| n.contains("n=2")),
        "period-2 spheres are marked skipped, got {skipped:?}"
    );
    assert!(!checks.iter().any(|c| c["status"] == "fail"));
}
