use std::process::{Command, Output};

use cherednik_cli::{Report, Status};

fn cherednik(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cherednik")).args(args).output().expect("binary runs")
}

fn json_report(args: &[&str]) -> (Report, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = cherednik(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let report: Report = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (report, out.status.code().unwrap())
}

fn status(report: &Report, name: &str) -> Status {
    report.checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no check {name}")).status
}

#[test]
fn check_reports_witness_pair() {
    let (r, code) = json_report(&["check", "--n", "2", "--c", "-1,0"]);
    assert_eq!(code, 1);
    assert_eq!(r.data["in_f"], false);
    let w = r.checks[0].witness.as_ref().unwrap();
    assert_eq!((w["i"].as_u64(), w["j"].as_u64()), (Some(1), Some(2)));
    let text = String::from_utf8(cherednik(&["check", "--n", "2", "--c", "-1,0"]).stdout).unwrap();
    assert!(text.contains("FAIL  good-parameters"));
    assert!(text.contains("witness: {\"i\":1,\"j\":2,\"m\":-1}"));
}

#[test]
fn check_semisimple_and_zero_parameters() {
    let (r, code) = json_report(&["check", "--n", "2", "--c", "1/2,0"]);
    assert_eq!((r.data["semisimple"].as_bool(), code), (Some(true), 0));
    let (r, code) = json_report(&["check", "--n", "3", "--c", "0,0,0"]);
    assert_eq!((r.data["in_f"].as_bool(), code), (Some(true), 0));
}

#[test]
fn verify_all_good_parameters() {
    let (r, code) = json_report(&["verify-all", "--n", "2", "--c", "1,0", "--max-degree", "8"]);
    assert_eq!(code, 0);
    assert_eq!(r.data["dim_end"], 2);
    assert!(r.checks.iter().all(|c| matches!(c.status, Status::Pass | Status::Skipped)));
}

#[test]
fn verify_all_bad_parameters() {
    let (r, code) = json_report(&["verify-all", "--n", "2", "--c", "-1,0"]);
    assert_eq!(code, 1);
    assert_eq!(status(&r, "generation"), Status::Fail);
    assert!(r.data["dim_end"].as_u64().unwrap() > 2);
    assert_eq!(status(&r, "hecke-annihilation"), Status::Pass);
    assert_eq!(status(&r, "hecke-commutation"), Status::Pass);
    assert_eq!(status(&r, "equivalence"), Status::Pass);
}

#[test]
fn verify_all_zero_parameters_n4() {
    let (_, code) = json_report(&["verify-all", "--n", "4", "--c", "0,0,0,0", "--mode", "exact"]);
    assert_eq!(code, 0);
}

#[test]
fn normalize_examples() {
    let (r, code) = json_report(&["normalize", "--n", "2", "--c", "-1,0"]);
    assert_eq!(code, 0);
    assert_eq!(r.data["normalized"], serde_json::json!(["1", "0"]));
    for (n, c) in [("2", "1,0"), ("3", "4,-2,0")] {
        let (r, code) = json_report(&["normalize", "--n", n, "--c", c]);
        assert_eq!(code, 0);
        assert_eq!(status(&r, "translate"), Status::Pass);
    }
}

#[test]
fn float_input_to_exact_command_is_a_usage_error() {
    let out = cherednik(&["normalize", "--n", "2", "--c", "0.5,0", "--mode", "float"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--mode exact"));
}

#[test]
fn usage_errors_exit_64() {
    let out = cherednik(&["check", "--n", "2", "--c", "1,1"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8(out.stderr).unwrap().contains("c_n = 0"));
    for args in [
        &["check", "--n", "2"][..],
        &["check", "--n", "2", "--c", "x,0"],
        &["check", "--n", "2", "--c", "1,0", "--max-degree", "1"],
        &["check", "--n", "2", "--c", "1,0", "--tol", "-1"],
        &["frobnicate"],
    ] {
        assert_eq!(cherednik(args).status.code(), Some(64), "{args:?}");
    }
    assert_eq!(cherednik(&["--help"]).status.code(), Some(0));
    assert_eq!(cherednik(&["--version"]).status.code(), Some(0));
}

#[test]
fn json_round_trips_through_the_binary() {
    for args in [
        &["verify-all", "--n", "3", "--c", "1/2,-1,0"][..],
        &["hecke", "--n", "3", "--c", "0.25+0.5i,-1,0", "--mode", "float"],
        &["matrices", "--n", "2", "--c", "1/3,0", "--max-degree", "3"],
    ] {
        let mut all = args.to_vec();
        all.push("--json");
        let text = String::from_utf8(cherednik(&all).stdout).unwrap();
        let report: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(report.to_json().trim(), text.trim());
    }
}

#[test]
fn output_is_deterministic_for_a_fixed_seed() {
    let args = ["verify-all", "--n", "3", "--c", "2/5,1,0", "--seed", "7"];
    let (mut a, _) = json_report(&args);
    let (mut b, _) = json_report(&args);
    a.elapsed_ms = 0.0;
    b.elapsed_ms = 0.0;
    assert_eq!(a, b);
    assert_eq!(a.config.seed, 7);
}

#[test]
fn matrices_are_emitted_as_arrays() {
    let (r, code) = json_report(&["matrices", "--n", "3", "--c", "1,-1/2,0", "--max-degree", "4"]);
    assert_eq!(code, 0);
    let d = r.data["D"].as_array().unwrap();
    assert_eq!(d.len(), 5);
    assert!(d[0]["matrix"]["entries"].is_array());
    assert_eq!(r.data["F"].as_array().unwrap().len(), 2);
    assert_eq!(r.data["eta"].as_array().unwrap().len(), 7);
}

#[test]
fn end_dim_and_hom() {
    let (r, code) = json_report(&["end-dim", "--n", "2", "--c", "-1,0"]);
    assert_eq!(code, 1);
    assert_eq!(r.data["dim_end"], 3);
    assert_eq!(status(&r, "end-scan"), Status::Pass);
    let (r, code) = json_report(&["hom", "--n", "2", "--c", "1/2,0", "--t", "3,-2"]);
    assert_eq!(code, 0);
    assert_eq!(r.data["iso"], true);
    // Only the t_{n−1} component reaches the lowest degree of ∇M under ξ^{n−1}.
    let (r, code) = json_report(&["hom", "--n", "2", "--c", "1/2,0", "--t", "1,0"]);
    assert_eq!(code, 1);
    assert_eq!(status(&r, "generation"), Status::Fail);
}

#[test]
fn log_level_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_cherednik"))
        .args(["check", "--n", "2", "--c", "1,0"])
        .env("CHEREDNIK_LOG", "debug")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stderr).unwrap().contains("good-parameters"));
}
