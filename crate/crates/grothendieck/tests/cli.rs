//! End-to-end tests of the command-line interface, run against the real
//! binary via `CARGO_BIN_EXE`.

use grothendieck::formulas::{bialternant, IndexVector};
use grothendieck::ring::Polynomial;
use grothendieck::series::g_coeff;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grothendieck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn compute_text_matches_library() {
    let out = run(&["compute", "--d", "1", "--lambda", "2", "--method", "bialternant"]);
    assert_eq!(out.status.code(), Some(0));
    let a = IndexVector::new(vec![2]).unwrap();
    let ctx = a.context(None).unwrap();
    let expect = bialternant(ctx, &a).unwrap();
    assert_eq!(stdout(&out).trim(), expect.to_string());
}

#[test]
fn compute_json_matches_library() {
    let out = run(&[
        "compute", "--d", "2", "--lambda", "2,1", "--method", "himn", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let a = IndexVector::new(vec![2, 1]).unwrap();
    let ctx = a.context(None).unwrap();
    let expect = bialternant(ctx, &a).unwrap();
    assert_eq!(stdout(&out).trim(), expect.to_json_string());
}

#[test]
fn compute_methods_agree() {
    let args = |m: &'static str| {
        vec!["compute", "--d", "2", "--lambda", "3,1", "--method", m, "--format", "json"]
    };
    let bi = run(&args("bialternant"));
    let hm = run(&args("hm"));
    let himn = run(&args("himn"));
    assert_eq!(stdout(&bi), stdout(&hm));
    assert_eq!(stdout(&bi), stdout(&himn));
}

#[test]
fn compute_accepts_general_index_vector() {
    let out = run(&["compute", "--d", "2", "--a", "0,2", "--method", "bialternant"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn compute_beta_trunc_override() {
    let out = run(&[
        "compute", "--d", "1", "--lambda", "1", "--method", "hm", "--beta-trunc", "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // at N = 0 the one-row polynomial is x1 + b1 exactly
    assert_eq!(stdout(&out).trim(), "1*x1 + 1*b1");
}

#[test]
fn coeff_matches_library() {
    let out = run(&["coeff", "--d", "2", "--k", "1", "--m", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let cli = Polynomial::from_json_str(stdout(&out).trim()).unwrap();
    let expect = g_coeff(cli.ctx(), 1, 2).unwrap();
    assert_eq!(cli, expect);
}

#[test]
fn verify_theorem_passes_and_reports() {
    let out = run(&["verify", "theorem", "--d", "2", "--lambda", "1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS theorem.bialternant_eq_hm"), "{text}");
    assert!(text.trim().ends_with("6 checks, 0 failed"), "{text}");
}

#[test]
fn verify_theorem_sweep_and_out_file() {
    let dir = std::env::temp_dir().join("grothendieck-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "verify",
        "theorem",
        "--d",
        "1",
        "--all-up-to",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = std::fs::read_to_string(&path).unwrap();
    let json: serde_json::Value = serde_json::from_str(&report).unwrap();
    // three partitions ((), (1), (2)) with six checks each
    assert_eq!(json["checks"].as_array().unwrap().len(), 18);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn verify_proofs_passes() {
    let out = run(&["verify", "proofs", "--d", "1", "--k-max", "1", "--beta-trunc", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 failed"));
}

#[test]
fn usage_errors_exit_two() {
    // invalid dimension
    let out = run(&["compute", "--d", "0", "--lambda", "0", "--method", "hm"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    // missing both --lambda and --a
    let out = run(&["compute", "--d", "2", "--method", "hm"]);
    assert_eq!(out.status.code(), Some(2));
    // rising (non-partition) input requires --a, not --lambda
    let out = run(&["verify", "theorem", "--d", "2", "--lambda", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
