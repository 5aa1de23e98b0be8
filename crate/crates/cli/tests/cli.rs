//! End-to-end tests of the binary: output contracts, JSON schemas, and the
//! exit-code contract (0 success, 1 usage, 2 budget, 3 internal).

use std::io::Write;
use std::process::Command;

use quasiper_core::quasipoly::{QuasiPolynomial, QuasiPolynomialJson};

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_quasiper"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn square_json_file() -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    write!(
        file,
        r#"{{"A": [[-1,0],[0,-1],[1,0],[0,1]],
            "b": ["0","0","1","1"],
            "vertices": [["0","0"],["1","0"],["0","1"],["1","1"]],
            "box": {{"lo": [0,0], "hi": [1,1]}}}}"#
    )
    .expect("write json");
    file
}

#[test]
fn ehrhart_prints_profile_and_indices() {
    let (code, stdout, _) = run(&["ehrhart", "--p", "2,1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("minimum periods: [2, 1] (lcm 2)"));
    assert!(stdout.contains("j-indices: [2, 1]"));
}

#[test]
fn ehrhart_single_point() {
    let (code, stdout, _) = run(&["ehrhart", "--p", "1", "--kmax", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("minimum periods: [1] (lcm 1)"));
    assert!(stdout.contains("   3 | 1 | 1"));
}

#[test]
fn ehrhart_json_round_trips() {
    let (code, stdout, _) = run(&["ehrhart", "--p", "12,6,2,1", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).expect("json output");
    assert_eq!(value["profile"], serde_json::json!([12, 6, 2, 1]));
    assert_eq!(value["minimum_period"], 12);
    // parse -> recompute -> identical output
    let dto: QuasiPolynomialJson =
        serde_json::from_value(value["quasipolynomial"].clone()).expect("qp schema");
    let qp = QuasiPolynomial::try_from(&dto).expect("valid qp");
    let reencoded = serde_json::to_value(QuasiPolynomialJson::from(&qp)).unwrap();
    assert_eq!(reencoded, value["quasipolynomial"]);
}

#[test]
fn ehrhart_rejects_malformed_tuple() {
    let (code, _, stderr) = run(&["ehrhart", "--p", "0,2"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("positive"));
    let (code, _, _) = run(&["ehrhart", "--p", "2,x"]);
    assert_eq!(code, 1);
}

#[test]
fn count_simplex_examples() {
    let (code, stdout, _) = run(&["count", "--p", "1,2", "--k", "5"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "3");
    let (code, stdout, _) = run(&["count", "--p", "2,2", "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "0");
}

#[test]
fn count_polytope_file() {
    let file = square_json_file();
    let path = file.path().to_str().unwrap();
    let (code, stdout, _) = run(&["count", "--polytope", path, "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "16");
}

#[test]
fn count_budget_exit_code() {
    let file = square_json_file();
    let path = file.path().to_str().unwrap();
    let (code, _, stderr) = run_with_env(
        &["count", "--polytope", path, "--k", "3"],
        &[("QUASIPER_BUDGET", "5")],
    );
    assert_eq!(code, 2);
    assert!(stderr.contains("budget exceeded"));
}

#[test]
fn count_requires_exactly_one_input() {
    let (code, _, _) = run(&["count", "--k", "3"]);
    assert_eq!(code, 1);
    let file = square_json_file();
    let path = file.path().to_str().unwrap();
    let (code, _, _) = run(&["count", "--p", "1", "--polytope", path, "--k", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn convolve_simple_pair() {
    let (code, stdout, _) = run(&["convolve", "--a", "1", "--b", "2", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    // floor(k/2) + 1
    assert_eq!(
        value["convolution"]["coeffs"],
        serde_json::json!([["1", "1/2"], ["1/2", "1/2"]])
    );
    assert_eq!(value["profile"], serde_json::json!([2, 1]));
}

#[test]
fn convolve_sharpness_pair() {
    let (code, stdout, _) = run(&["convolve", "--a", "4,1", "--b", "8,2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("periods of C: [8, 4, 2, 1] (lcm 8)"));
}

#[test]
fn convolve_accepts_qp_files() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"period": 2, "degree": 0, "coeffs": [["1", "0"]]}}"#
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let (code, stdout, _) = run(&["convolve", "--a", "1", "--qp-b", path, "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["profile"], serde_json::json!([2, 1]));
}

#[test]
fn zaslavsky_trivial_bounds() {
    let (code, stdout, _) = run(&["zaslavsky", "--alpha", "1", "--beta", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("zaslavsky bounds: [1, 1]"));
}

#[test]
fn zaslavsky_construct_equality() {
    let (code, stdout, _) = run(&[
        "zaslavsky", "--alpha", "4,1", "--beta", "8,2", "--construct",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("gamma: [8, 4, 2, 1]"));
    assert!(stdout.contains("equality: yes"));
}

#[test]
fn zaslavsky_construct_rejects_bad_chain() {
    let (code, _, stderr) = run(&[
        "zaslavsky", "--alpha", "2,1", "--beta", "8,2", "--construct",
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("invalid chain"));
}

#[test]
fn conjecture_single_instance() {
    let (code, stdout, _) = run(&["conjecture", "--a", "2,2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("match"));
}

#[test]
fn conjecture_scan_streams_json_lines() {
    let (code, stdout, _) = run(&["conjecture", "--scan", "--max-n", "2", "--max-a", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 7, "6 instances plus the summary line");
    for line in &lines[..6] {
        let value: serde_json::Value = serde_json::from_str(line).expect("json line");
        assert!(value["verdict"] == "match" || value["verdict"] == "mismatch");
    }
    assert_eq!(lines[6], "checked 6, mismatches 0");
}

#[test]
fn conjecture_scan_chains_only() {
    let (code, stdout, _) = run(&[
        "conjecture", "--scan", "--chains-only", "--max-a", "12",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("mismatches 0"));
}

#[test]
fn conjecture_scan_seeded_sample() {
    let args = [
        "conjecture", "--scan", "--max-n", "3", "--max-a", "6", "--seed", "11", "--limit", "5",
    ];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    let (_, second, _) = run(&args);
    assert_eq!(first, second, "seeded runs are reproducible");
    assert_eq!(first.lines().count(), 6, "5 sampled instances plus summary");
}

#[test]
fn gf_expansion_and_poles() {
    let (code, stdout, _) = run(&["gf", "--num", "1", "--den-exponents", "1,2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("pole orders: {1: 2, 2: 1}"));
    assert!(stdout.contains("minimum periods: [2, 1]"));
}

#[test]
fn gf_constant_case() {
    let (code, stdout, _) = run(&["gf", "--num", "1", "--den-exponents", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("pole orders: {1: 1}"));
    assert!(stdout.contains("period 1, degree 0"));
}

#[test]
fn gf_non_root_of_unity_pole_is_verbatim() {
    let (code, _, stderr) = run(&["gf", "--num", "1,1", "--den-poly", "1,-2"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("poles are not roots of unity — not a quasi-polynomial"));
}

#[test]
fn gf_from_qp_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"period": 2, "degree": 1, "coeffs": [["1", "1/2"], ["1/2", "1/2"]]}}"#
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let (code, stdout, _) = run(&["gf", "--from-qp", path, "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["gf"]["den_factors"], serde_json::json!([[1, 2], [2, 1]]));
    assert_eq!(value["gf"]["numerator"], serde_json::json!(["1"]));
}

#[test]
fn help_and_bad_subcommand_exit_codes() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("quasiper"));
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 1);
}
