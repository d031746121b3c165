//! End-to-end checks of the `aks` binary: exit codes, stdout shape,
//! JSON round trips, and flag validation.

use std::process::{Command, Output};

use aks_algebra::aks::{AksTrace, Verdict};

fn aks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn test_subcommand_exit_codes_track_the_verdict() {
    let prime = aks(&["test", "7"]);
    assert_eq!(prime.status.code(), Some(0));
    assert_eq!(stdout(&prime).trim(), "PRIME");

    let composite = aks(&["test", "9"]);
    assert_eq!(composite.status.code(), Some(1));
    assert_eq!(stdout(&composite).trim(), "COMPOSITE");
}

#[test]
fn test_subcommand_accepts_hex_input() {
    let out = aks(&["test", "0x1F"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "PRIME");
    let upper = aks(&["test", "0X20"]);
    assert_eq!(upper.status.code(), Some(1));
}

#[test]
fn unparseable_input_exits_two() {
    assert_eq!(aks(&["test", "abc"]).status.code(), Some(2));
    assert_eq!(aks(&["test", "-5"]).status.code(), Some(2));
    assert_eq!(aks(&["trace", "12x"]).status.code(), Some(2));
}

#[test]
fn trace_stdout_round_trips_and_names_the_witness() {
    let out = aks(&["trace", "9"]);
    assert_eq!(out.status.code(), Some(1));
    let trace = AksTrace::from_json(&stdout(&out)).expect("valid trace JSON");
    assert_eq!(trace.verdict, Verdict::Composite);
    let witness = trace.perfect_power.expect("9 = 3^2");
    assert_eq!(witness.base.to_string(), "3");
    assert_eq!(witness.exp, 2);
}

#[test]
fn trace_out_flag_writes_the_file() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("trace.json");
    let out = aks(&["trace", "31", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).expect("file written");
    let trace = AksTrace::from_json(&text).expect("valid trace JSON");
    assert_eq!(trace.verdict, Verdict::Prime);
    assert!(!trace.small_n_shortcut);
    assert!(trace.congruence_checks.iter().all(|c| c.ok));
}

#[test]
fn trace_out_flag_io_error_exits_two() {
    let out = aks(&["trace", "31", "--out", "/nonexistent/dir/t.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_unknown_suite_exits_two_and_lists_names() {
    let out = aks(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).expect("utf-8 stderr");
    assert!(err.contains("unknown suite"));
    assert!(err.contains("oracle"));
    assert!(err.contains("lemma-h"));
}

#[test]
fn verify_small_suites_pass_and_render_reports() {
    let out = aks(&["verify", "gflt", "--max-p", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("suite: gflt"));
    assert!(text.contains("result: PASS"));

    let out = aks(&["verify", "totient-sum", "--max-r", "50"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("cases run: 50"));
}

#[test]
fn verify_exit_one_on_a_failing_suite() {
    let out = aks(&["verify", "lemma-h", "--max-n", "60", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("result: FAIL"));
}

#[test]
fn seed_env_var_overrides_the_flag() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_aks"))
        .args(["verify", "rub", "--max-n", "40", "--seed", "7"])
        .env("AKS_SEED", "99")
        .output()
        .expect("binary runs");
    let with_flag = aks(&["verify", "rub", "--max-n", "40", "--seed", "99"]);
    assert_eq!(with_env.status.code(), Some(0));
    // Same cases either way: the env seed replaced the flag seed.
    assert_eq!(stdout(&with_env), stdout(&with_flag));
}

#[test]
fn bench_rejects_a_composite_modulus() {
    let out = aks(&["bench", "--modulus", "15", "--degrees", "4,8", "--trials", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_rejects_unsorted_degrees() {
    let out = aks(&["bench", "--degrees", "8,4", "--trials", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_small_run_reports_and_writes_json() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("bench.json");
    let out = aks(&[
        "bench",
        "--degrees",
        "8,16",
        "--trials",
        "2",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("modulus 65521"));
    assert!(text.contains("true"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).expect("json written"))
            .expect("valid json");
    assert_eq!(json["rows"].as_array().expect("rows").len(), 2);
    assert_eq!(json["rows"][0]["divisor_degree"], 8);
    assert_eq!(json["rows"][0]["all_trials_matched"], true);
}
