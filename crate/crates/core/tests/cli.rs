//! End-to-end checks of the `cyclic-sayd` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use cyclic_sayd::report::Report;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclic-sayd"))
}

fn config(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/configs").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_runs_every_sample_config() {
    for name in ["kz2_vect.json", "functions_z2_rep.json", "dual_numbers_explicit.json"] {
        let out = run(&["compute", config(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let text = stdout(&out);
        assert!(text.contains("pipelines agree"), "{name}: {text}");
        assert!(text.trim_end().ends_with(" ms"));
    }
}

#[test]
fn json_output_parses_back() {
    let out = run(&["compute", config("kz2_vect.json").to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(&stdout(&out)).unwrap();
    let c = &report.computations[0];
    assert!(c.agree);
    assert_eq!(c.rows.len(), 2);
    for row in &c.rows {
        assert_eq!(row.hh, vec![2, 0, 0, 0]);
        assert_eq!(row.hc, vec![2, 0, 2, 0]);
    }
}

#[test]
fn overrides_and_output_file() {
    let dir = std::env::temp_dir().join(format!("cyclic-sayd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "compute",
        config("dual_numbers_explicit.json").to_str().unwrap(),
        "--max-degree",
        "3",
        "--pipeline",
        "old",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let c = &report.computations[0];
    assert_eq!(c.max_degree, 3);
    assert_eq!(c.rows.len(), 1);
    assert_eq!(c.rows[0].hh, vec![2, 1, 1]);
    assert_eq!(c.rows[0].hc, vec![2, 0, 2]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn config_can_come_from_stdin() {
    let mut child = bin()
        .args(["compute", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let text = std::fs::read_to_string(config("kz2_vect.json")).unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("kZ/2 in Vec"));
}

#[test]
fn bad_configs_exit_with_two() {
    let cases = [
        (r#"{"schema": 1, "group": {"kind": "trivial"}}"#, "category"),
        (r#"{"schema": 7, "group": {"kind": "trivial"}, "category": "graded", "algebra": {"kind": "unit"}, "coefficient": {"kind": "trivial"}, "trace": "B"}"#, "schema"),
        (r#"{"schema": 1, "group": {"kind": "trivial"}, "category": "graded", "algebra": {"kind": "unit", "extra": 1}, "coefficient": {"kind": "trivial"}, "trace": "B"}"#, "algebra"),
        (r#"{"schema": 1, "group": {"kind": "trivial"}, "category": "graded", "algebra": {"kind": "unit"}, "coefficient": {"kind": "trivial"}, "trace": "A"}"#, "trace"),
    ];
    for (text, needle) in cases {
        let mut child = bin()
            .args(["compute", "-"])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
        let out = child.wait_with_output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{text}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "expected `{needle}` in: {err}");
    }
    assert_eq!(run(&["compute", "/nonexistent/config.json"]).status.code(), Some(2));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_runs_the_requested_suites() {
    let out = run(&["verify", "--suite", "morita", "--suite", "old_vs_new", "--max-degree", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = Report::from_json(&stdout(&out)).unwrap();
    let names: Vec<&str> = report.suites.iter().map(|s| s.suite.as_str()).collect();
    assert_eq!(names, ["morita", "old_vs_new"]);
    assert_eq!(report.suites[0].instances.len(), 3);
    assert!(report.passed());
}

#[test]
fn explain_prints_the_structure_maps() {
    let out = run(&["explain", config("kz2_vect.json").to_str().unwrap(), "--max-degree", "2", "--pipeline", "old"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("largest ambient 8"));
    assert!(text.contains("C^1: dim 4"));
    assert!(text.contains("tau_1:\n      1 0 0 0\n      0 0 1 0\n      0 1 0 0\n      0 0 0 1"));
    assert!(text.contains("delta_0: C^0 -> C^1"));
}
