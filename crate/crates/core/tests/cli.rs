use std::f64::consts::PI;

use b2weight::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use serde_json::Value;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("b2weight").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = run_args(args);
    (code, serde_json::from_str(&out).expect("valid JSON"))
}

#[test]
fn verify_exact_passes() {
    let (code, v) = json(&["verify", "exact", "--nmax", "6"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["suite"], "exact");
    assert_eq!(v["pass"], true);
    assert_eq!(v["params"]["k0"], "3/10");
}

#[test]
fn verify_quad_passes() {
    let (code, v) = json(&["verify", "quad", "--k0", "0.3", "--k1", "0.1", "--nmax", "4", "--tol", "1e-8"]);
    assert_eq!(code, EXIT_PASS, "{v}");
    assert_eq!(v["params"]["positive_definite"], true);
}

#[test]
fn negative_nmax_is_a_usage_error() {
    let (code, _, err) = run_args(&["verify", "exact", "--nmax", "-1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("nmax"));
}

#[test]
fn out_of_region_quad_fails_with_one() {
    let (code, v) = json(&["verify", "quad", "--k0", "0.3", "--k1", "0.3", "--nmax", "0"]);
    assert_eq!(code, EXIT_FAIL);
    assert_eq!(v["params"]["positive_definite"], false);
}

#[test]
fn checks_are_sorted_and_pass_flag_is_conjunction() {
    let (_, v) = json(&["verify", "all", "--k0", "0.1", "--k1", "-0.3", "--nmax", "2"]);
    let checks = v["checks"].as_array().unwrap();
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    let all = checks.iter().all(|c| c["pass"] == true);
    assert_eq!(v["pass"], all);
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let args = ["verify", "quad", "--nmax", "1"];
    assert_eq!(strip(json(&args).1), strip(json(&args).1));
}

#[test]
fn table_rows() {
    let (code, out, _) = run_args(&["table", "--k0", "0", "--k1", "0", "--nmax", "2"]);
    assert_eq!(code, EXIT_PASS);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,alpha,beta,s_p12,s_p14");
    assert!(lines[1].starts_with("0,1,"));
    assert!(lines[2].starts_with("1,1/2,"));
}

#[test]
fn eval_k_at_zero_parameters() {
    let (code, v) = json(&["eval-k", "--k0", "0", "--k1", "0", "--theta", "0.5"]);
    assert_eq!(code, EXIT_PASS);
    let k: Vec<f64> = v["K"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    let want = 1.0 / (2.0 * PI);
    assert!((k[0] - want).abs() < 1e-15 && k[1].abs() < 1e-15 && (k[2] - want).abs() < 1e-15);
}

#[test]
fn eval_k_determinant() {
    let (code, v) = json(&["eval-k", "--theta", "0.3"]);
    assert_eq!(code, EXIT_PASS);
    let k: Vec<f64> = v["K"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    let det = v["detK"].as_f64().unwrap();
    assert!((det - (k[0] * k[2] - k[1] * k[1])).abs() < 1e-12);
    let closed = (0.4 * PI).cos() * (0.2 * PI).cos() / (4.0 * PI * PI);
    assert!((det - closed).abs() < 1e-12);
}

#[test]
fn eval_k_out_of_region() {
    let (code, out, err) = run_args(&["eval-k", "--k0", "0.3", "--k1", "0.3", "--theta", "0.5"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.is_empty() && err.contains("region"));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("b2weight-cli-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = run_args(&["table", "--nmax", "0", "--out", p]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("n,alpha,beta,s_p12,s_p14\n"));
}
