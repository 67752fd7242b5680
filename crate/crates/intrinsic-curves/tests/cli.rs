use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_intrinsic-curves")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn polygon_info() {
    let v = json(&["polygon-info", "--vertices", "0,0 2,1 1,2"]);
    assert_eq!((&v["vol"], &v["b"], &v["i"], &v["lw"]), (&3.into(), &3.into(), &1.into(), &2.into()));
}

#[test]
fn linsys_triangle() {
    let v = json(&["linsys", "--vertices", "0,0 2,1 1,2", "--m", "2"]);
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["basis"][0]["text"], "1 - 3*u*v + u*v^2 + u^2*v");
}

#[test]
fn family_verify() {
    let v = json(&["family", "--id", "I", "--m", "3", "--verify"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["verification"]["ord_zero"], serde_json::json!([-1, 3]));
    // outside the family's range: input error
    assert_eq!(run(&["family", "--id", "III", "--m", "7"]).status.code(), Some(2));
    // beyond the resultant budget: input error naming the limit
    let out = run(&["family", "--id", "I", "--m", "9", "--verify", "--budget", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wpp_best() {
    let t = data("x_9_10_13.csv");
    let v = json(&["wpp", "--a", "9", "--b", "10", "--c", "13", "--table", &t, "--best"]);
    assert_eq!(v["slope"], "959/28");
    let v = json(&["wpp", "--a", "9", "--b", "10", "--c", "13", "--table", &t, "--best", "--minus-one"]);
    assert_eq!(v["slope"], "891/26");
    let v = json(&["wpp", "--a", "9", "--b", "10", "--c", "13", "--table", &t]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 52);
    assert_eq!(run(&["wpp", "--a", "6", "--b", "10", "--c", "13", "--table", &t]).status.code(), Some(2));
}

#[test]
fn classify_shipped() {
    let v = json(&["classify", "--dataset", &data("polygons.txt"), "--oracle", &data("oracle.json"), "--jobs", "2"]);
    assert_eq!(v["warnings"], 0);
    assert_eq!(v["hits_per_m"], serde_json::json!([1, 1, 2, 6]));
    let capped = Command::new(env!("CARGO_BIN_EXE_intrinsic-curves"))
        .args(["classify", "--dataset", &data("polygons.txt"), "--oracle", &data("oracle.json")])
        .env("INTRINSIC_CURVES_JOBS", "1")
        .output()
        .unwrap();
    assert_eq!(serde_json::from_slice::<Value>(&capped.stdout).unwrap(), v);
    let bad = Command::new(env!("CARGO_BIN_EXE_intrinsic-curves"))
        .args(["classify", "--dataset", &data("polygons.txt")])
        .env("INTRINSIC_CURVES_JOBS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn seshadri_family_one() {
    let v = json(&["seshadri", "--vertices", "0,0 5,1 1,5", "--m", "5", "--irreducible"]);
    assert_eq!(v["exact"], "24/5");
    let v = json(&["seshadri", "--vertices", "0,0 5,1 1,5", "--m", "5"]);
    assert_eq!(v["exact"], "24/5");
}

#[test]
fn surface_passes() {
    let v = json(&["surface", "--k-max", "5", "--rr-max", "3"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["rr"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["polygon-info", "--vertices", "0,0 1;1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--vertices"));
    assert_eq!(run(&["linsys", "--vertices", "0,0 1,1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--dataset", "/nonexistent"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn pretty_output() {
    let out = run(&["--pretty", "polygon-info", "--vertices", "0,0 2,1 1,2"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["vol", "3"]));
}

#[test]
fn deterministic_output() {
    let a = run(&["classify", "--dataset", &data("polygons.txt"), "--jobs", "1"]).stdout;
    let b = run(&["classify", "--dataset", &data("polygons.txt"), "--jobs", "4"]).stdout;
    assert_eq!(a, b);
}
