use std::process::Command;

use spinnet::bench::{read_records, BenchRecord};
use spinnet::exactnum::RadicalRational;
use spinnet::wigner::contraction::contract_six_j;
use spinnet::yutsis::{cartwheel_type1, YutsisGraph};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("spinnet").chain(args.iter().copied());
    let code = spinnet::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn six_j_json_has_exact_terms_and_float() {
    let (code, out, _) = run(&["compute", "6j", "1", "1", "1", "1", "1", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["type"], "6j");
    assert_eq!(v["value"]["terms"][0]["q"], "1/6");
    let back: RadicalRational = serde_json::from_value(v["value"].clone()).unwrap();
    assert_eq!(back, contract_six_j([2; 6]));
    assert!((v["value"]["float"].as_f64().unwrap() - 1.0 / 6.0).abs() < 1e-15);
}

#[test]
fn cartwheel_dot_has_six_nodes_nine_edges() {
    let (code, out, _) = run(&["graph", "gen", "cartwheel", "3", "--format", "dot"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains("[label=") && !l.contains("--")).count(), 6);
    assert_eq!(out.lines().filter(|l| l.contains(" -- ")).count(), 9);
}

#[test]
fn graph_json_round_trips() {
    let (_, out, _) = run(&["graph", "gen", "cartwheel", "4", "--format", "json"]);
    let g: YutsisGraph = serde_json::from_str(&out).unwrap();
    assert_eq!(g.edges, cartwheel_type1(4).unwrap().edges);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    std::fs::write(&path, &out).unwrap();
    let (code, analyzed, _) = run(&["graph", "analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{analyzed}");
    assert!(analyzed.contains("edges: 12"));
}

#[test]
fn verify_be_reports_all_zero() {
    let (code, out, _) = run(&["verify", "be", "--count", "100", "--max-twice", "9", "--seed", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "100/100 residuals exactly zero");
}

#[test]
fn verify_other_identities() {
    for id in ["rec5", "lambda", "oracle"] {
        let (code, out, err) = run(&["verify", id, "--count", "10", "--max-twice", "5"]);
        assert_eq!(code, 0, "{id}: {err}");
        assert_eq!(out.trim(), "10/10 residuals exactly zero");
    }
}

#[test]
fn argument_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["compute", "6j", "1", "1"],
        &["compute", "3j", "1", "1", "0", "1/2", "-1", "0"],
        &["compute", "6j", "x", "1", "1", "1", "1", "1"],
        &["compute", "3nj", "--kind", "I", "--j", "1,1", "--k", "1,1,1", "--l", "1,1,1"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
    let (_, _, err) = run(&["compute", "3j", "1", "1", "0", "1/2", "-1", "0"]);
    assert!(err.contains("M1"), "{err}");
}

#[test]
fn domain_errors_exit_three() {
    let (code, _, err) = run(&["compute", "d", "1", "0", "0", "--cos", "5/4"]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
}

#[test]
fn small_d_and_three_j_values() {
    let (_, out, _) = run(&["compute", "d", "1/2", "1/2", "-1/2", "--cos", "0"]);
    assert_eq!(out.lines().next().unwrap(), "1/2*sqrt(2)");
    let (_, out, _) = run(&["compute", "3j", "1", "1", "0", "1", "-1", "0"]);
    assert_eq!(out.lines().next().unwrap(), "1/3*sqrt(3)");
}

#[test]
fn bench_run_is_deterministic_and_fits() {
    let args = ["bench", "run", "--j", "10,20,30", "--jm", "1", "--count", "20", "--seed", "7"];
    let (code, a, err) = run(&[&args[..], &["--threads", "1"]].concat());
    assert_eq!(code, 0, "{err}");
    let (_, b, _) = run(&[&args[..], &["--threads", "3"]].concat());
    assert_eq!(a, b);
    let records: Vec<BenchRecord> = read_records(&a).unwrap();
    assert_eq!(records.len(), 6);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.csv");
    std::fs::write(&path, &a).unwrap();
    let (code, fit, err) = run(&["bench", "fit", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(fit.lines().count(), 2);
}

#[test]
fn out_flag_and_memo_persistence() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("v.txt");
    let bin = env!("CARGO_BIN_EXE_spinnet");
    let status = Command::new(bin)
        .args(["compute", "9j", "1", "1", "1", "1", "1", "1", "1", "1", "2", "--out"])
        .arg(&out)
        .env("SPINNET_CACHE_DIR", dir.path())
        .status()
        .unwrap();
    assert!(status.success());
    assert!(std::fs::read_to_string(&out).unwrap().lines().count() == 2);
    assert!(dir.path().join("sixj.memo").metadata().unwrap().len() > 16);
    let again = Command::new(bin)
        .args(["compute", "6j", "1", "1", "1", "1", "1", "1"])
        .env("SPINNET_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(again.status.success());
    assert_eq!(String::from_utf8(again.stdout).unwrap().lines().next(), Some("1/6"));
}
