use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const GSP6: &str = "1 + x*y + x^2*y + x^3*y + x^4*y + x^5*y^2";

fn zeros_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/zeros100.txt")
}

fn natbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_natbound"))
        .args(args)
        .env_remove("BF_ZEROS")
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = natbound(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON artifact")
}

fn ok_text(args: &[&str]) -> String {
    let out = natbound(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn cyclotomic_verdicts() {
    assert_eq!(
        ok_json(&["cyclotomic", "--poly", "1 - X - X^2"])["status"],
        "not_cyclotomic"
    );
    assert_eq!(
        ok_json(&["cyclotomic", "--poly", "1 - X + X^2"])["status"],
        "cyclotomic"
    );
    let v = ok_json(&["cyclotomic", "--poly", "1 + x^4*y"]);
    assert_eq!(v["status"], "cyclotomic");
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);
    assert_eq!(
        ok_json(&["cyclotomic", "--poly", "1 + 2*x*y"])["status"],
        "not_cyclotomic"
    );
}

#[test]
fn estermann_and_factorize() {
    let v = ok_json(&["estermann", "--poly", "1 - 2*X"]);
    assert!(v.to_string().contains("natural"), "{v}");
    let f = ok_json(&["factorize", "--poly", GSP6, "--order", "2"]);
    let zeta = f["zeta"].as_array().unwrap();
    assert!(
        zeta.iter()
            .any(|t| t["n"] == 2 && t["m"] == -8 && t["c"] == -1),
        "{f}"
    );
    let m = ok_json(&["factorize", "--poly", "1 + X1*X2", "--n", "1", "--r", "2"]);
    assert!(m.to_string().contains("gamma"), "{m}");
}

#[test]
fn classify_gsp6_is_case_four() {
    let v = ok_json(&[
        "classify",
        "--poly",
        GSP6,
        "--depth",
        "10",
        "--prime-bound",
        "10000",
    ]);
    assert_eq!(v["caseLabel"], 4);
    assert_eq!(v["beta"], "4");
    let v = ok_json(&["classify", "--poly", "1 + y + x*y^2"]);
    assert_eq!(v["caseLabel"], 3);
}

#[test]
fn polynomial_utilities() {
    let p = ok_json(&["poly", "parse", "--poly", "1 + x^(1/4)*y"]);
    assert_eq!(p["vars"], serde_json::json!(["x", "y"]));
    assert_eq!(p["terms"].as_array().unwrap().len(), 2);
    let s = ok_json(&["poly", "substitute", "--poly", GSP6, "--p", "2"]);
    assert_eq!(s["coeffs"], serde_json::json!([1.0, 30.0, 32.0]));
    let l = ok_json(&["poly", "log", "--poly", "1 - x*y", "--order", "2"]);
    assert_eq!(l["terms"][1]["coef"], "-1/2");
}

#[test]
fn local_zeros_and_cluster() {
    let z = ok_json(&[
        "zeros", "local", "--poly", GSP6, "--p", "101", "--re-min", "3",
    ]);
    let zeros = z["zeros"].as_array().unwrap();
    assert_eq!(zeros.len(), 1);
    assert!(zeros[0]["re"].as_f64().unwrap() > 4.0);
    let csv = ok_text(&[
        "cluster", "--poly", GSP6, "--primes", "101,1009", "--format", "csv",
    ]);
    assert_eq!(csv.lines().count(), 3);
    assert!(csv.starts_with("p,nearest_re"));
}

#[test]
fn domain_membership() {
    let v = ok_json(&["domain", "--poly", "1 + (X1 + X1*X2)*X3", "--s", "2,0.5"]);
    assert_eq!(v["contains"], true);
    assert_eq!(v["constraints"].as_array().unwrap().len(), 2);
    let v = ok_json(&[
        "domain",
        "--poly",
        "1 + (X1 + X1*X2)*X3",
        "--s",
        "0.5,10",
        "--delta",
        "1/2",
    ]);
    assert_eq!(v["contains"], false);
    assert_eq!(v["delta"], "1/2");
}

#[test]
fn toric_outputs() {
    assert_eq!(
        ok_text(&["toric", "count", "--n", "3", "--t-max", "2"]),
        "t,count\n1,1\n2,1\n"
    );
    assert_eq!(ok_json(&["toric", "degree", "--n", "4"])["degree"], 30);
    let s = ok_json(&["toric", "series", "--n", "3", "--cutoff", "2"]);
    assert!(s["terms"]
        .as_array()
        .unwrap()
        .iter()
        .all(|t| t["coef"] == 1));
}

#[test]
fn goldbach_outputs() {
    let zeros = zeros_path();
    let csv = ok_text(&[
        "goldbach",
        "sum",
        "--x",
        "10000",
        "--N",
        "100000",
        "--zeros",
        zeros.to_str().unwrap(),
        "--K",
        "100",
    ]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "x,S,S_minus_main,S_minus_main_minus_H2,fujii_bound,log5_bound"
    );
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("10000,"));
    let series = ok_text(&["goldbach", "series", "--N", "10", "--method", "naive"]);
    assert_eq!(series.lines().count(), 12);
    let h = ok_json(&["goldbach", "hr", "--x", "1000", "--K", "10"]);
    assert!(h["value"].as_f64().unwrap().is_finite());
    let phi = ok_json(&["goldbach", "phi2", "--s", "3", "--N", "2000"]);
    assert!(phi["tail_bound"].as_f64().unwrap() >= 0.0);
}

#[test]
fn gsp6_outputs() {
    let csv = ok_text(&["gsp6", "coeffs", "--N", "1e3"]);
    assert!(csv.starts_with("n,a_n\n1,1\n8,135\n"));
    let a = ok_json(&["gsp6", "smoothed", "--x", "100"]);
    assert!(a["value"].as_f64().unwrap() > 1.0);
    let t = ok_json(&["gsp6", "terms"]);
    assert!(t.to_string().contains("7/3"), "{t}");
}

#[test]
fn analytic_outputs() {
    let z = ok_json(&["zeta", "eval", "--s", "2"]);
    assert!(
        (z["value"]["re"].as_f64().unwrap() - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14
    );
    let e = ok_json(&[
        "zeta",
        "euler",
        "--poly",
        "1 - y",
        "--s",
        "2",
        "--prime-bound",
        "1e5",
    ]);
    assert!((e["re"].as_f64().unwrap() - 6.0 / std::f64::consts::PI.powi(2)).abs() < 1e-4);
    let t = ok_json(&["zeros", "load"]);
    assert_eq!(t["count"], 100);
    let i = ok_json(&["independence", "--K", "30", "--alpha", "1.5"]);
    assert!(i["min_margin"].as_f64().unwrap() > 0.0);
}

#[test]
fn zeros_path_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_natbound"))
        .args(["zeros", "load"])
        .env("BF_ZEROS", zeros_path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["source"].as_str().unwrap().ends_with("zeros100.txt"));
    let out = Command::new(env!("CARGO_BIN_EXE_natbound"))
        .args(["zeros", "load"])
        .env("BF_ZEROS", "/nonexistent/zeros.txt")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(
        natbound(&["classify", "--poly", "1 + x*"]).status.code(),
        Some(2)
    );
    assert_eq!(natbound(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        natbound(&["zeros", "local", "--poly", GSP6, "--p", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        natbound(&["gsp6", "coeffs", "--N", "10", "--format", "json"])
            .status
            .code(),
        Some(2)
    );
    // a zero leading coefficient at p = 2 is a compute failure
    let out = natbound(&[
        "zeros",
        "local",
        "--poly",
        "1 + y + x*y^2 - 2*y^2",
        "--p",
        "2",
    ]);
    assert_eq!(
        out.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(!out.stderr.is_empty());
    assert!(natbound(&["--help"]).status.success());
}

#[test]
fn artifacts_are_deterministic_and_written_to_out() {
    let args = ["classify", "--poly", GSP6, "--prime-bound", "3000"];
    let a = natbound(&args).stdout;
    let mut threaded = vec!["--threads", "1"];
    threaded.extend(args);
    assert_eq!(a, natbound(&threaded).stdout);
    let dir = std::env::temp_dir().join(format!("natbound-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a.csv");
    let out = natbound(&[
        "gsp6",
        "coeffs",
        "--N",
        "5000",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, ok_text(&["gsp6", "coeffs", "--N", "5000"]));
    std::fs::remove_dir_all(&dir).unwrap();
}
