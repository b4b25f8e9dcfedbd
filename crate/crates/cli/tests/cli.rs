use std::path::PathBuf;
use std::process::{Command, Output};

fn coblekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coblekit")).args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("coblekit-{}-{name}", std::process::id()))
}

#[test]
fn config_passes() {
    let out = coblekit(&["config"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("5 checks: 5 pass"), "{stdout}");
}

#[test]
fn x6_section_has_15_passing_nodes() {
    let path = tmp("x6.json");
    let out = coblekit(&["section", "--form", "x6", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let checks = report["checks"].as_array().unwrap();
    let nodes = checks
        .iter()
        .filter(|c| c["check_id"].as_str().unwrap().contains(".node[") && c["status"] == "pass")
        .count();
    assert_eq!(nodes, 15);
    std::fs::remove_file(path).ok();
}

#[test]
fn contained_line_fails_strictly() {
    let out = coblekit(&["section", "--form", "x1-x2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("line contained"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["section", "--form", "x7"][..],
        &["section", "--form", "2*y1"],
        &["section", "--form", "0x1"],
        &["scan", "--prime", "4"],
        &["scan", "--prime", "3"],
        &["sarkisov", "--bound", "5"],
        &["frobnicate"],
        &[],
    ] {
        assert_eq!(coblekit(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn scans_are_evidence_only() {
    let out = coblekit(&["scan", "--prime", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("evidence-only"));
}

#[test]
fn json_is_reproducible_across_thread_counts() {
    let run = |threads: &str, name: &str| {
        let path = tmp(name);
        let out = Command::new(env!("CARGO_BIN_EXE_coblekit"))
            .args(["classify", "--json", path.to_str().unwrap()])
            .env("COBLEKIT_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        let bytes = std::fs::read(&path).unwrap();
        std::fs::remove_file(path).ok();
        bytes
    };
    let a = run("1", "t1.json");
    let b = run("4", "t4.json");
    assert_eq!(a, b);
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_coblekit")).arg("config").env("COBLEKIT_THREADS", "many").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
