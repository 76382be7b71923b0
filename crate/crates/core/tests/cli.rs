use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_wildmono");

fn scenarios() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../scenarios"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

#[test]
fn worked_example_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&["--paper-example", "--json", "--out", out.to_str().unwrap()]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["summary"]["d_mk"], 66);
    assert_eq!(v["summary"]["d_mur"], 194);
}

#[test]
fn output_is_deterministic() {
    let ex0 = scenarios().join("ex0.json");
    let args = ["--scenario", ex0.to_str().unwrap(), "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_filter_limits_report() {
    let ex0 = scenarios().join("ex0.json");
    let o = run(&[
        "--scenario",
        ex0.to_str().unwrap(),
        "--json",
        "--check",
        "step_i",
        "--check",
        "conductor",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["check"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["step_i", "conductor"]);
}

#[test]
fn batch_file_yields_array() {
    let batch = scenarios().join("batch.json");
    let o = run(&["--scenario", batch.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().len() > 1);
}

#[test]
fn insufficient_precision_exits_one() {
    let ex1 = scenarios().join("ex1.json");
    let o = run(&["--scenario", ex1.to_str().unwrap(), "--precision", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ \"p\": 2, ").unwrap();
    assert_eq!(
        run(&["--scenario", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    std::fs::write(&bad, r#"{ "p": 2, "n": 1, "u": [1], "colour": 3 }"#).unwrap();
    assert_eq!(
        run(&["--scenario", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["--scenario", "/nonexistent/x.json"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn unknown_check_is_rejected() {
    let o = run(&["--paper-example", "--check", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}
