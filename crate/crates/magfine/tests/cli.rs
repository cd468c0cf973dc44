//! End-to-end checks of the `magfine` binary: exit codes, output formats,
//! and byte-level determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_magfine"))
        .args(args)
        .env_remove("MAGFINE_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout_without_duration(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout)
        .lines()
        .filter(|l| !l.contains("duration_ms"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn enumerate_fine_7_counts_57() {
    let out = run(&["enumerate", "fine", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("valid JSON report");
    assert_eq!(report["data"]["count"], "57");
    assert_eq!(report["passed"], true);
}

#[test]
fn enumerate_rejects_zero_with_usage_exit_code() {
    let out = run(&["enumerate", "binary", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_codes_format() {
    let out = run(&["enumerate", "binary", "3", "--format", "codes"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "((**)*)\n(*(**))\n");
}

#[test]
fn enumerate_csv_format() {
    let out = run(&["enumerate", "fine", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("index,code\n"));
    assert_eq!(text.lines().count(), 3, "header plus the two labeled corollas");
}

#[test]
fn dims_table_passes() {
    let out = run(&["dims", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["data"]["rows"][4]["kernel_dim"], "6");
}

#[test]
fn prim_basis_degree_2_is_empty() {
    let out = run(&["prim", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["data"]["dimension"], 0);
}

#[test]
fn verify_suite_runs_with_flags() {
    let out = run(&["verify", "idempotent", "--seed", "42", "--cases", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["parameters"]["seed"], "42");
    assert_eq!(report["passed"], true);
}

#[test]
fn series_vallette_order_too_small_is_usage_error() {
    let out = run(&["series", "vallette", "--order", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_order_env_variable_is_overridden_by_flag() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_magfine"))
        .args(["series", "fine"])
        .env("MAGFINE_ORDER", "5")
        .output()
        .expect("binary runs");
    assert_eq!(with_env.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&with_env.stdout).unwrap();
    assert_eq!(report["parameters"]["order"], "5");

    let with_flag = Command::new(env!("CARGO_BIN_EXE_magfine"))
        .args(["series", "fine", "--order", "7"])
        .env("MAGFINE_ORDER", "5")
        .output()
        .expect("binary runs");
    let report: serde_json::Value = serde_json::from_slice(&with_flag.stdout).unwrap();
    assert_eq!(report["parameters"]["order"], "7");
}

#[test]
fn identical_runs_are_byte_identical_modulo_duration() {
    let a = run(&["verify", "compat", "--seed", "42", "--cases", "20"]);
    let b = run(&["verify", "compat", "--seed", "42", "--cases", "20"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout_without_duration(&a), stdout_without_duration(&b));

    let c = run(&["series", "all", "--order", "10"]);
    let d = run(&["series", "all", "--order", "10"]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(stdout_without_duration(&c), stdout_without_duration(&d));
}
