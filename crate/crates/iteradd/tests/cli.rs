use std::process::{Command, Output};

use serde_json::Value;

const F4: &str = "p=2 r=2 mod=1,1,1";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iteradd")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(&[args, &["--format", "json"]].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn split_range() {
    let v = json(&["split", "--field", F4, "--poly", "x^8 + a*x", "--n", "1..=4"]);
    let s: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["s"].as_u64().unwrap()).collect();
    assert_eq!(s, [3, 6, 12, 12]);
}

#[test]
fn certificate_fields() {
    let v = json(&["certificate", "--field", F4, "--poly", "{(0,'a'),(3,'1')}"]);
    assert_eq!(v["M"], 3);
    assert_eq!(v["s0"], 1);
    assert_eq!(v["a_star"], "x^32 + (a+1)*x^4");
    assert_eq!(v["nilpotent"], false);
    assert_eq!(v["c_a"]["value"], "3");
}

#[test]
fn linearized_certificate() {
    let v = json(&["certificate", "--field", "p=2 r=1", "--poly", "x^4 + x"]);
    // x^2 + 1 = (x + 1)^2: ord 1, e = 2
    assert_eq!(v["linearized"]["e"], 2);
    assert_eq!(v["linearized"]["c_a"], 2);
}

#[test]
fn csv_has_header() {
    let out = run(&["periodic", "--field", F4, "--poly", "x^8 + a*x", "--n", "1..=3", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().next().unwrap().starts_with('n'));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["split", "--field", "p=4 r=1", "--poly", "x"]), Some(2));
    assert_eq!(code(&["split", "--field", "p=2 r=1", "--poly", "x^3"]), Some(2));
    assert_eq!(code(&["certificate", "--field", "p=2 r=1", "--poly", "x^4"]), Some(4));
    assert_eq!(code(&["split", "--field", F4, "--poly", "x^8 + a*x", "--n", "40", "--method", "modexp"]), Some(3));
}
