use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tightmorse")).args(args).env("TIGHTMORSE_THREADS", "1").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn betti_of_e() {
    let out = run(&["betti", path(&fixture("E.facets"))]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["command"], "betti");
    assert_eq!(r["betti"], serde_json::json!([1, 3, 0]));
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn sweep_of_simplex() {
    let out = run(&["morse", "sweep", path(&fixture("simplex3.geom")), "--pi", "1,2,4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["morse_vector"], serde_json::json!([1, 0, 0, 0]));
    assert_eq!(r["perfect"], true);
}

#[test]
fn sweep_accepts_negative_directions() {
    let out = run(&["morse", "sweep", path(&fixture("octahedron.geom")), "--pi", "-3,5,7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["morse_vector"], serde_json::json!([1, 0, 1]));
}

#[test]
fn e_is_evasive() {
    let out = run(&["check", "nonevasive", path(&fixture("E.facets"))]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["result"], "no");
    assert_eq!(r["reason"], "betti");
}

#[test]
fn exhausted_budget_exits_2() {
    let out = run(&["check", "collapsible", path(&fixture("dunce_hat.facets")), "--budget", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["result"], "unknown");
}

#[test]
fn invalid_matching_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("cycle.morse");
    std::fs::write(&m, "morse v1\npair 0 ; 0 1\npair 1 ; 1 2\npair 2 ; 0 2\n").unwrap();
    let out = run(&["morse", "validate", path(&fixture("simplex3.facets")), path(&m)]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["valid"], false);
}

#[test]
fn collapse_sequence_validates() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("c.morse");
    let out = run(&["check", "collapsible", path(&fixture("simplex3.facets")), "--out", path(&m)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"], "yes");
    let out = run(&["morse", "validate", path(&fixture("simplex3.facets")), path(&m)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["valid"], true);
}

#[test]
fn missing_file_exits_1() {
    let out = run(&["betti", "/nonexistent/x.facets"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn repeated_runs_are_identical() {
    let e = fixture("E.facets");
    let args = ["morse", "random", path(&e), "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 7);
}

#[test]
fn built_fixture_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("s.geom");
    let built = json(&run(&["build", "fixture", "stacked(3)", "--out", path(&g)]));
    let read = json(&run(&["betti", path(&g)]));
    assert_eq!(built["complex_digest"], read["complex_digest"]);
    assert_eq!(read["betti"], serde_json::json!([1, 0, 0, 0]));
}

#[test]
fn cone_sphere_build() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("s.facets");
    let out = run(&["build", "cone-sphere", path(&fixture("simplex3.facets")), "--out", path(&s)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&run(&["betti", path(&s)]))["betti"], serde_json::json!([1, 0, 0, 1]));
}

#[test]
fn text_format() {
    let out = run(&["--format", "text", "betti", path(&fixture("E.facets"))]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "betti: [1,3,0]"));
    assert!(text.starts_with("command: betti\n"));
}
