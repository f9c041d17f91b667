use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bdk").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn kovacic_corpus() {
    let v = json(&["kovacic", "--r", "0"]);
    assert_eq!(v["verdict"], "case1");
    assert_eq!(v["certificate"]["omega"]["text"], "0");
    let v = json(&["kovacic", "--r", "1"]);
    assert_eq!(v["verdict"], "case1");
    assert_eq!(v["certificate"]["omega"]["text"], "1");
    let v = json(&["kovacic", "--r", "x"]);
    assert_eq!(v["verdict"], "case4");
    assert!(v["certificate"].is_null());
    let v = json(&["kovacic", "--r", "1/z^4", "--var", "z"]);
    assert_eq!(v["verdict"], "case1");
    assert_eq!(v["config"]["var"], "z");
}

#[test]
fn printed_quadratic_potential_round_trips_to_case4() {
    let one = exactmath::q(1, 1);
    let r = galois_pipeline::build_12_ode(&one, &one, 3, &one).unwrap().1.r.to_string_var("z");
    let v = json(&["kovacic", "--r", &r, "--var", "z"]);
    assert_eq!(v["verdict"], "case4");
    assert_eq!(v["config"]["r_normalized"], r.as_str());
}

#[test]
fn config_is_the_leading_key() {
    let (_, out, _) = run(&["kovacic", "--r", "1"]);
    assert!(out.starts_with("{\n  \"config\": {"), "{out}");
    let (_, out, _) = run(&["closed-form", "--beta", "2", "--delta", "3", "--n0", "2", "--t", "1", "--nmax", "4"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("# subcommand=closed-form"));
    assert!(out.contains("\nt,N,P_N\n"));
    assert_eq!(out.lines().filter(|l| !l.starts_with('#')).count(), 6);
}

#[test]
fn operational_errors_exit_two() {
    let (code, _, err) = run(&["kovacic", "--r", "1/(x"]);
    assert_eq!(code, 2);
    assert!(err.contains("parse"), "{err}");
    let (code, _, _) = run(&["kovacic", "--r", "x", "--var", "7"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["simulate", "--beta", "1", "--delta", "1", "--n0", "3", "--t", "1", "--paths", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("--seed"));
    let (code, _, _) = run(&["analyze", "--family", "11", "--beta", "-1", "--delta", "1", "--n0", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["analyze", "--family", "13", "--beta", "1", "--delta", "1", "--n0", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["analyze", "--family", "11", "--beta", "1", "--delta", "1", "--n0", "1", "--s", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn exact_rational_parameters() {
    let v = json(&["analyze", "--family", "11", "--beta", "5/2", "--delta", "7/3", "--n0", "1", "--s", "1/3", "--s", "-2"]);
    assert_eq!(v["config"]["beta"], "5/2");
    assert_eq!(v["config"]["s"], "1/3,-2");
    assert_eq!(v["verdict"], "integrable");
    assert_eq!(v["certificate"].as_array().unwrap().len(), 2);
    let v = json(&["closed-form", "--beta", "1/2", "--delta", "2", "--n0", "5", "--t", "3/2", "--nmax", "100", "--out", "json"]);
    assert_eq!(v["config"]["t"], "1.5");
    assert!((v["coefficient_sum"].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn analyze_quadratic_is_case4() {
    let v = json(&["analyze", "--family", "12", "--beta", "1", "--delta", "1", "--n0", "3", "--samples", "3"]);
    assert_eq!(v["verdict"], "non-integrable");
    assert_eq!(v["consistent"], true);
    assert!(v["audit"].as_array().unwrap().iter().all(|a| a["verdict"] == "case4"));
}

#[test]
fn simulate_is_byte_identical() {
    let args = ["simulate", "--beta", "1", "--delta", "1", "--n0", "3", "--t", "2", "--paths", "200", "--seed", "11", "--record", "events"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    assert!(a.contains("# seed=11\n"));
    assert!(a.contains("\npath,t_event,N\n0,0.00000000000000000e0,3\n"));
    let mut json_args = args.to_vec();
    json_args.extend(["--out", "json"]);
    let v = json(&json_args);
    assert_eq!(v["events"].as_array().unwrap().len(), 200);
}

#[test]
fn verify_linear_family() {
    let v = json(&["verify", "--family", "11", "--beta", "2", "--delta", "3", "--n0", "2", "--samples", "5"]);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["kovacic_samples", "pde_residual", "master_equation", "gillespie"]);
    assert_eq!(v["pass"], true, "{v}");
    let v = json(&["verify", "--family", "11", "--beta", "2", "--delta", "3", "--n0", "0", "--samples", "3"]);
    assert_eq!(v["pass"], true, "{v}");
}

#[test]
fn verify_fails_on_truncation() {
    let (code, out, _) = run(&["verify", "--family", "11", "--beta", "3", "--delta", "2", "--n0", "2", "--nmax", "4", "--samples", "2"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    let master = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "master_equation").unwrap();
    assert_eq!(master["pass"], false);
    assert!(master["detail"]["warning"].as_str().unwrap().contains("truncation insufficient"));
}

#[test]
fn binary_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    let status = Command::new(env!("CARGO_BIN_EXE_bdk"))
        .args(["kovacic", "--r", "x", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["verdict"], "case4");
    let status = Command::new(env!("CARGO_BIN_EXE_bdk")).args(["kovacic", "--r", ")"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
}
