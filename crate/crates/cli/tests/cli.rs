//! End-to-end tests driving the compiled binary.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_xi-forge")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin())
        .current_dir(dir)
        .env_remove("XI_FORGE_CACHE")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn coeffs_builds_cache_and_reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["coeffs", "--max-r", "8", "--digits", "18", "--cache", "c.txt"];
    let first = run_in(dir.path(), &args);
    assert!(first.status.success(), "{first:?}");
    let cache_path = dir.path().join("c.txt");
    let bytes1 = std::fs::read(&cache_path).unwrap();
    let head = String::from_utf8(bytes1.clone()).unwrap();
    assert!(head.starts_with("# xi-coeffs v1 precision=18\n"));
    assert!(head.lines().nth(2).unwrap().starts_with("1,0.011485972157572718"));

    let second = run_in(dir.path(), &args);
    assert!(second.status.success());
    let bytes2 = std::fs::read(&cache_path).unwrap();
    assert_eq!(bytes1, bytes2, "re-run must leave identical bytes");
}

#[test]
fn coeffs_appends_only_missing_entries() {
    let dir = tempfile::tempdir().unwrap();
    let small = run_in(
        dir.path(),
        &["coeffs", "--max-r", "5", "--digits", "18", "--cache", "c.txt"],
    );
    assert!(small.status.success());
    let before = std::fs::read_to_string(dir.path().join("c.txt")).unwrap();

    let grown = run_in(
        dir.path(),
        &["coeffs", "--max-r", "9", "--digits", "18", "--cache", "c.txt"],
    );
    assert!(grown.status.success());
    let after = std::fs::read_to_string(dir.path().join("c.txt")).unwrap();
    assert!(
        after.starts_with(&before),
        "existing lines must be preserved verbatim"
    );
    assert_eq!(after.lines().count(), before.lines().count() + 4);
}

#[test]
fn env_variable_overrides_cache_path() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(bin())
        .current_dir(dir.path())
        .env("XI_FORGE_CACHE", "env-cache.txt")
        .args(["coeffs", "--max-r", "3", "--digits", "15", "--cache", "ignored.txt"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("env-cache.txt").exists());
    assert!(!dir.path().join("ignored.txt").exists());
}

#[test]
fn stale_lock_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c.txt.lock"), "").unwrap();
    let out = run_in(
        dir.path(),
        &["coeffs", "--max-r", "3", "--digits", "15", "--cache", "c.txt"],
    );
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("locked"), "{err}");
}

#[test]
fn keiper_with_zero_max_k_emits_single_zero_lambda() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &["keiper", "--max-k", "0", "--max-r", "16", "--digits", "18"],
    );
    assert!(out.status.success(), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let lambda = v["lambda"].as_array().unwrap();
    assert_eq!(lambda.len(), 1);
    let l0: f64 = lambda[0].as_str().unwrap().parse().unwrap();
    assert_eq!(l0, 0.0);
    assert!(v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn series_output_matches_flags_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "series", "--id", "xi_minus_half_of_s", "--order", "4", "--max-r", "16", "--digits", "18",
    ];
    let a = run_in(dir.path(), &args);
    assert!(a.status.success());
    let b = run_in(dir.path(), &args);
    assert_eq!(a.stdout, b.stdout, "byte-identical output expected");
    let text = stdout(&a);
    assert!(text.starts_with("# id=xi_minus_half_of_s"));
    assert!(text.lines().nth(1).unwrap().starts_with("0,0.5087310387263239"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn wseries_emits_log_series_and_growth_scan() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "wseries",
            "--id",
            "log_xi_h_of_w",
            "--order",
            "6",
            "--max-r",
            "24",
            "--digits",
            "20",
            "--growth-scan",
            "0.4",
        ],
    );
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.lines().nth(1).unwrap().starts_with("0,-0.67583581323669576"));
    assert!(text.contains("# growth radius_estimate="));
    assert!(text.contains("converging=true"));
}

#[test]
fn table1_and_scan_emit_expected_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let t = run_in(dir.path(), &["table1", "--digits", "15"]);
    assert!(t.status.success());
    let text = stdout(&t);
    assert_eq!(text.lines().count(), 7);
    assert!(text.starts_with("w,s,xi_plus_half,xi_minus_half\n"));

    let s = run_in(
        dir.path(),
        &["scan", "--points", "3", "--digits", "15", "--format", "json"],
    );
    assert!(s.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&s)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[0]["chain1_ok"], serde_json::Value::Bool(true));
}

#[test]
fn verify_fast_suite_passes_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--suite", "closed_forms", "--digits", "25"];
    let a = run_in(dir.path(), &args);
    assert_eq!(a.status.code(), Some(0), "{a:?}");
    let b = run_in(dir.path(), &args);
    assert_eq!(a.stdout, b.stdout, "verify reruns must be byte-identical");
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["summary"]["unflagged_failures"], 0);
}

#[test]
fn verify_table1_flags_but_does_not_fail() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["verify", "--suite", "table1", "--digits", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["summary"]["flagged_failures"], 1);
    assert_eq!(v["summary"]["unflagged_failures"], 0);
}

#[test]
fn bad_flags_exit_with_usage_status() {
    let dir = tempfile::tempdir().unwrap();
    let unknown = run_in(dir.path(), &["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
    let low_digits = run_in(dir.path(), &["table1", "--digits", "5"]);
    assert_eq!(low_digits.status.code(), Some(2));
}

#[test]
fn shallow_table_failure_names_the_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    // depth 5 cannot satisfy the series tail bound at 30 digits
    let out = run_in(
        dir.path(),
        &["verify", "--suite", "series_s", "--max-r", "5", "--digits", "30"],
    );
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("error in verify"), "{err}");
    assert!(err.contains("insufficient depth"), "{err}");
}

#[test]
fn unknown_series_id_is_a_computation_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &["series", "--id", "nope", "--max-r", "4", "--digits", "15"],
    );
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown id"), "{err}");
}
