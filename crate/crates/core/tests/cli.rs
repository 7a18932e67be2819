//! The `subfree` binary: exit codes, output shape and determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use subfree::uniform::estimate_uniform;
use subfree::{Text, UniformOracle, Word};

fn subfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subfree")).args(args).output().unwrap()
}

fn inputs(dir: &Path) -> (String, String) {
    let (t, w) = (dir.join("t.txt"), dir.join("w.txt"));
    fs::write(&t, "a b a b b a a b a b").unwrap();
    fs::write(&w, "a b").unwrap();
    (t.display().to_string(), w.display().to_string())
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn exact_reports_r_and_distance() {
    let dir = tempfile::tempdir().unwrap();
    let (t, w) = inputs(dir.path());
    let out = subfree(&["exact", "--text", &t, "--word", &w]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["n"], 10);
    assert_eq!(v["k"], 2);
    assert_eq!(v["R"], 4);
    assert_eq!(v["delta"], "2/5");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let (t, w) = inputs(dir.path());
    let path = dir.path().join("o.json");
    let out = subfree(&["exact", "--text", &t, "--word", &w, "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["R"], 4);
}

#[test]
fn estimate_uniform_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let (t, w) = inputs(dir.path());
    let out = subfree(&["estimate-uniform", "--text", &t, "--word", &w, "--delta", "0.3", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let text = Text::from_ids(&[1, 2, 1, 2, 2, 1, 1, 2, 1, 2]).unwrap();
    let word = Word::from_ids(&[1, 2]).unwrap();
    let lib = estimate_uniform(&UniformOracle::new(&text), &word, 0.3, 11).unwrap();
    // serde_json's default float parser may differ in the last ulp.
    let got = json(&out)["delta_hat"].as_f64().unwrap();
    assert!((got - lib.delta_hat).abs() <= 1e-12, "{got} vs {}", lib.delta_hat);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let (t, w) = inputs(dir.path());
    assert_eq!(subfree(&["exact", "--bogus"]).status.code(), Some(2));
    assert_eq!(subfree(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(subfree(&["exact", "--text", "/nonexistent/t", "--word", &w]).status.code(), Some(3));
    let bad = subfree(&["estimate-uniform", "--text", &t, "--word", &w, "--delta", "-1"]);
    assert_eq!(bad.status.code(), Some(2));
    let bad = subfree(&["estimate-df", "--text", &t, "--word", &w, "--delta", "0.5", "--relaxed-constants", "0"]);
    assert_eq!(bad.status.code(), Some(2));
    let aa = dir.path().join("aa.txt");
    fs::write(&aa, "a a").unwrap();
    let special = subfree(&["estimate-df-wc", "--text", &t, "--word", aa.to_str().unwrap(), "--delta", "0.5"]);
    assert_eq!(special.status.code(), Some(2));
    assert_eq!(subfree(&["--help"]).status.code(), Some(0));
}

#[test]
fn experiments_emit_json_lines() {
    let out = subfree(&[
        "sweep", "--estimator", "uniform", "--n", "200", "--k", "2", "--deltas", "0.3,0.5", "--trials", "3", "--seed", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[..6].iter().all(|l| l["success"].is_boolean()));
    assert_eq!(lines[6]["schema"], "subfree.report/1");
    assert_eq!(lines[6]["summary"].as_array().unwrap().len(), 2);
    let again = subfree(&[
        "sweep", "--estimator", "uniform", "--n", "200", "--k", "2", "--deltas", "0.3,0.5", "--trials", "3", "--seed", "4",
    ]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}
