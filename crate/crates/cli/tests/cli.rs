use std::fs;
use std::process::{Command, Output};

fn pbzlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbzlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_reports_sk_failure_on_d4() {
    let o = pbzlab(&["check", "D4", "--identity", "SK"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fails SK at x=a', y=a"));
}

#[test]
fn check_requested_class_holds() {
    let o = pbzlab(&["check", "D5", "--class", "pbz-star"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("class pbz-star: holds"));
    assert!(stdout(&o).contains("blocks: {0, a, c, a', 1}"));
}

#[test]
fn structured_report_is_json() {
    let o = pbzlab(&["check", "MO2", "--format", "structured", "--class", "orthomodular"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 6);
    assert_eq!(v["classes"]["orthomodular"]["holds"], true);
    assert_eq!(v["classes"]["distributive"]["holds"], false);
}

#[test]
fn invalid_file_gives_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    fs::write(
        &path,
        "algebra bad\nelements 0 a 1\ncovers 0 < a ; a < 1\nkleene 0:1 a:0 1:0\nbrouwer 0:1 a:0 1:0\nbounds 0 1\n",
    )
    .unwrap();
    let o = pbzlab(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 1") && err.contains("kleene-involution"), "{err}");
    let o = pbzlab(&["check", "no/such/file.alg"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_identities_and_terms() {
    let o = pbzlab(&["eval", "D3", "(x^y)~ = x~ v y~"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("holds"));
    assert_eq!(pbzlab(&["eval", "D2", "x = x"]).status.code(), Some(0));
    let o = pbzlab(&["eval", "D5", "x' ^ <>x", "--assign", "x=a"]);
    assert_eq!(stdout(&o).trim(), "a'");
    assert_eq!(pbzlab(&["eval", "D2", "x = = y"]).status.code(), Some(2));
}

#[test]
fn construct_writes_a_loadable_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d5.alg");
    let o = pbzlab(&["construct", "twist1(chain3)", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = pbzlab(&["check", path.to_str().unwrap(), "--class", "antiortholattice"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(5 elements)"));
}

#[test]
fn search_finds_j_counterexample() {
    let o = pbzlab(&["search", "x v y = ((x v y)^y~) v ((x v y)^<>y)", "--class", "pbz-star", "--max", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# found") && out.contains("\nalgebra "), "{out}");
    let o = pbzlab(&["search", "J", "--antiortho", "--max", "6", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("exhausted"));
}

#[test]
fn enumerate_counts_and_files() {
    let o = pbzlab(&["enumerate", "--max", "5", "--class", "pbz-star", "--count"]);
    assert_eq!(stdout(&o), "n=1: 1\nn=2: 1\nn=3: 1\nn=4: 2\nn=5: 2\n");
    let dir = tempfile::tempdir().unwrap();
    let o = pbzlab(&["enumerate", "--max", "6", "--antiortho", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 7);
    assert_eq!(pbzlab(&["enumerate", "--max", "9"]).status.code(), Some(2));
}

#[test]
fn export_dot_is_deterministic() {
    let a = stdout(&pbzlab(&["export-dot", "D5"]));
    let b = stdout(&pbzlab(&["export-dot", "D5"]));
    assert!(a.starts_with("digraph") || a.starts_with("graph"), "{a}");
    assert_eq!(a, b);
}

#[test]
fn verify_and_catalog() {
    let o = pbzlab(&["verify", "paradia", "--max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failures"));
    assert_eq!(pbzlab(&["verify", "freccetta", "--max", "4"]).status.code(), Some(1));
    assert_eq!(pbzlab(&["verify", "nope"]).status.code(), Some(2));
    assert!(stdout(&pbzlab(&["verify", "--list"])).contains("scucca"));
    assert!(stdout(&pbzlab(&["catalog"])).contains("MO2⊞D3"));
    assert!(stdout(&pbzlab(&["catalog", "B4+D3"])).starts_with("algebra B4⊞D3"));
}
