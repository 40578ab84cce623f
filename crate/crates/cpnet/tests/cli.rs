//! End-to-end tests for the `cpnet` binary.

use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_cpnet");

const DEMO: &str = "net demo;\n\
    colorset C = { a, b };\n\
    place P : C init 2`a;\n\
    trans T { in P: 1`a; out P: 1`b; }\n";

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("spawn cpnet")
}

fn write_demo(dir: &Path) -> String {
    let path = dir.join("demo.cpn");
    std::fs::write(&path, DEMO).unwrap();
    path.to_str().unwrap().to_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn unknown_subcommand_exits_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn validate_reports_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_demo(dir.path());
    let out = run(&["validate", &path]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "ok: demo (1 color sets, 1 places, 1 transitions)\n");
}

#[test]
fn validate_syntax_error_has_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cpn");
    std::fs::write(&path, "colorset C = { a\nplace P : C;\n").unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("bad.cpn:"), "got: {err}");
    // Position is line:column.
    assert!(err.contains(":2:1") || err.contains(":1:"), "got: {err}");
}

#[test]
fn validate_missing_file_exits_one() {
    let out = run(&["validate", "/nonexistent/model.cpn"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cannot read"));
}

#[test]
fn simulate_is_reproducible_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_demo(dir.path());
    let json = dir.path().join("report.json");
    let args = [
        "simulate",
        &path,
        "--steps",
        "100",
        "--seed",
        "7",
        "--json",
        json.to_str().unwrap(),
    ];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0), "stderr: {}", stderr(&a));
    let json_a = std::fs::read_to_string(&json).unwrap();
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout, "same seed must reproduce byte-identically");
    assert_eq!(json_a, std::fs::read_to_string(&json).unwrap());

    let text = stdout(&a);
    assert!(text.contains("terminated: dead"), "got: {text}");
    assert!(json_a.contains("\"seed\": 7"), "got: {json_a}");
    assert!(json_a.contains("\"rng\""), "got: {json_a}");
}

#[test]
fn simulate_trace_lists_every_firing() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_demo(dir.path());
    let json = dir.path().join("trace.json");
    let out = run(&[
        "simulate",
        &path,
        "--seed",
        "1",
        "--trace",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    // Both initial `a` tokens get converted, then the net is dead.
    assert_eq!(report["steps"], 2);
    assert_eq!(report["trace"].as_array().unwrap().len(), 2);
    assert_eq!(report["trace"][0]["transition"], "T");
}

#[test]
fn explore_prints_report_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_demo(dir.path());
    let dot = dir.path().join("graph.dot");
    let json = dir.path().join("space.json");
    let out = run(&[
        "explore",
        &path,
        "--dot",
        dot.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("stateCount: 3"), "got: {text}");
    assert!(text.contains("acyclic: true"), "got: {text}");
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_text.starts_with("digraph"), "got: {dot_text}");
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["stateCount"], 3);
    assert_eq!(report["complete"], true);
}

#[test]
fn explore_truncation_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_demo(dir.path());
    let out = run(&["explore", &path, "--max-states", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("complete: false"));
    assert!(stderr(&out).contains("truncated"));
}

#[test]
fn gscm_emit_produces_validating_model() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chain.cpn");
    let out = run(&[
        "gscm",
        "--raw-stock",
        "3",
        "--cash",
        "manufacturer=2",
        "--cash",
        "customer=2",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "ok: gscm (5 color sets, 25 places, 20 transitions)\n");
}

#[test]
fn gscm_rejects_bad_cash_spec() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chain.cpn");
    let out = run(&["gscm", "--cash", "plumber=2", "--emit", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown actor"));
}
