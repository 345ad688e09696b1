use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylspin"))
        .args(args)
        .env_remove("WEYLSPIN_CACHE")
        .output()
        .unwrap()
}

fn run_in(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylspin"))
        .args(args)
        .env("WEYLSPIN_CACHE", cache)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn info_reports_highest_roots_and_center() {
    let f4 = json(&["info", "F4"]);
    assert_eq!(f4["highest_root"]["negative"], "-2a1-3a2-4a3-2a4");
    assert_eq!(f4["center_two_torsion"].as_array().unwrap().len(), 0);
    let e6 = stdout(&run(&["info", "E6"]));
    assert!(e6.contains("central elements of order 2: none"), "{e6}");
    let b5 = json(&["info", "B5"]);
    assert_eq!(b5["center_two_torsion"], serde_json::json!(["h5"]));
    assert_eq!(b5["highest_short_root"]["negative"], "-a1-a2-a3-a4-a5");
    let e7 = json(&["info", "E7"]);
    assert_eq!(e7["highest_root"]["coroot_mod2"], "h1h3h6");
}

#[test]
fn class_counts() {
    for (ty, n) in [("F4", 9), ("E6", 5), ("A3", 1), ("C4", 5)] {
        let v = json(&["classes", ty]);
        assert_eq!(v["count"], n, "{ty}");
        assert_eq!(v["classes"].as_array().unwrap().len(), n);
    }
    let e6 = json(&["classes", "E6"]);
    for c in e6["classes"].as_array().unwrap() {
        assert_eq!(c["adjoint_spin"], 1);
        assert_eq!(c["universal_spin"], 1);
    }
}

#[test]
fn spin_of_b7_class_with_char_poly() {
    let v = json(&[
        "spin",
        "B7",
        "--charpoly",
        "(t^6+1)(t+1)",
        "--lattice",
        "universal",
    ]);
    assert_eq!(v["signature"], "h7");
    assert_eq!(v["spins"][0]["spin"], -1);
    assert_eq!(v["spins"][0]["representative_order"], 24);
}

#[test]
fn spin_of_named_classes() {
    let v = json(&["spin", "E7", "--class", "A5xA2", "--lattice", "universal"]);
    assert_eq!(v["signature"], "h1h3h5");
    assert_eq!(v["spins"][0]["spin"], -1);
    let v = json(&["spin", "G2", "--class", "coxeter"]);
    assert!(v["spins"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["spin"] == 1));
    let v = json(&["spin", "A3", "--word", "1 2 3"]);
    assert_eq!(v["signature"], "h1h3");
    let v = json(&[
        "spin",
        "C3",
        "--roots",
        "-2,-2,-1;1,0,0;0,0,1",
        "--lattice",
        "adjoint",
    ]);
    assert_eq!(v["signature"], "h1");
    assert_eq!(v["spins"][0]["spin"], -1);
}

#[test]
fn final_chart_csv_columns() {
    let out = run(&["--format", "csv", "classes", "F4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("phi,gamma,adjoint_spin,universal_spin"));
    assert!(text.contains("F4,A3xA~1,-1,-1"), "{text}");
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn json_is_byte_identical() {
    let a = run(&["--format", "json", "classes", "B5"]);
    let b = run(&["--format", "json", "classes", "B5"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&[
        "--format",
        "json",
        "classes",
        "G2",
        "--strategy",
        "sampling",
        "--samples",
        "300",
        "--seed",
        "4",
    ]);
    let b = run(&[
        "--format",
        "json",
        "classes",
        "G2",
        "--strategy",
        "sampling",
        "--samples",
        "300",
        "--seed",
        "4",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_round_trip_and_recompute() {
    let dir = tempfile::tempdir().unwrap();
    let first = run_in(dir.path(), &["--format", "json", "classes", "C4"]);
    assert!(stderr(&first).contains("stored"));
    let file = dir.path().join("C-4-exhaustive-seed0.jsonl");
    assert_eq!(std::fs::read_to_string(&file).unwrap().lines().count(), 5);
    let second = run_in(dir.path(), &["--format", "json", "classes", "C4"]);
    assert!(stderr(&second).contains("hit"));
    assert_eq!(first.stdout, second.stdout);
    let checked = run_in(dir.path(), &["classes", "C4", "--recompute"]);
    assert!(checked.status.success());
    let tampered = std::fs::read_to_string(&file).unwrap().replacen(
        "\"universal_spin\":-1",
        "\"universal_spin\":1",
        1,
    );
    std::fs::write(&file, tampered).unwrap();
    let out = run_in(dir.path(), &["classes", "C4", "--recompute"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let out = run(&["--characteristic", "2", "info", "B3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("characteristic 2"));
    let out = run(&["spin", "B7", "--charpoly", "(t^6+1)(t^+1)"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["spin", "A3", "--word", "1 2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&[
        "classes",
        "E7",
        "--strategy",
        "exhaustive",
        "--budget",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["classes", "Q7"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["--format", "csv", "info", "A2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn small_verification_suites() {
    let out = run(&[
        "verify-tables",
        "--suite",
        "braid,center,coxeter",
        "--max-rank",
        "3",
        "--relation-pairs",
        "50",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("braid: PASS"), "{text}");
    let out = run(&["--format", "json", "verify-tables", "--suite", "examples"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["suites"][0]["suite"], "examples");
}
