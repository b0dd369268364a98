use std::process::{Command, Output};

use serde_json::Value;

fn mcgfix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcgfix"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

#[test]
fn count_sweep_passes() {
    let o = mcgfix(&["lemma", "count", "--genus-min", "1", "--genus-max", "10000"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).ends_with("PASS\n"));
}

#[test]
fn certify_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let p = path.to_str().unwrap();
    let o = mcgfix(&["certify", "--genus", "3", "--dim", "2", "--theorem", "technical", "--out", p]);
    assert_eq!(code(&o), 0);
    let o = mcgfix(&["check", p, "--json"]);
    assert_eq!(code(&o), 0);
    let rep: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rep["pass"], true);
    assert_eq!(rep["subsets_checked"], 255);
}

#[test]
fn tampered_certificate_fails_with_named_violation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&mcgfix(&["certify", "--genus", "4", "--dim", "3", "--theorem", "kg", "--out", p])), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let tampered = text.replacen("\"copies\": 2", "\"copies\": 3", 1);
    assert_ne!(text, tampered);
    std::fs::write(&path, tampered).unwrap();
    let o = mcgfix(&["check", p, "--json"]);
    assert_eq!(code(&o), 1);
    let rep: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(rep["violations"][0].as_str().unwrap().contains("copies"));
}

#[test]
fn dimension_at_genus_is_blocked() {
    let o = mcgfix(&["certify", "--genus", "3", "--dim", "3", "--theorem", "main", "--json"]);
    assert_eq!(code(&o), 1);
    let rep: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rep["details"]["blocking_code"], "DIM_TOO_LARGE");
    assert!(rep["violations"][0].as_str().unwrap().contains("genus1_step"));
}

#[test]
fn json_is_byte_stable() {
    for args in [
        &["classify", "--genus", "4", "--all", "--json"][..],
        &["lemma", "size", "--genus-min", "2", "--genus-max", "4", "--json"],
        &["nerve", "--demo", "sphere-joins", "--json"],
    ] {
        assert_eq!(mcgfix(args).stdout, mcgfix(args).stdout);
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let args = ["lemma", "badchains", "--genus-min", "2", "--genus-max", "5", "--json"];
    let one = Command::new(env!("CARGO_BIN_EXE_mcgfix"))
        .env("MCGFIX_WORKERS", "1")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, mcgfix(&args).stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&mcgfix(&["check", "/nonexistent/c.json"])), 2);
    assert_eq!(code(&mcgfix(&["classify", "--genus", "3", "--set", "a1,a2"])), 2);
    assert_eq!(code(&mcgfix(&["classify", "--genus", "3", "--set", "z9"])), 2);
    assert_eq!(code(&mcgfix(&["bogus"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    std::fs::write(&path, "{}").unwrap();
    assert_eq!(code(&mcgfix(&["check", path.to_str().unwrap()])), 2);
    assert_eq!(code(&mcgfix(&["check", path.to_str().unwrap(), "--exhaustive-max-genus", "9"])), 2);
}

#[test]
fn lemma_sweeps_pass() {
    for k in ["goodchains", "badchains", "size", "fit"] {
        assert_eq!(code(&mcgfix(&["lemma", k, "--genus-min", "2", "--genus-max", "5"])), 0, "{k}");
    }
    assert_eq!(code(&mcgfix(&["nerve", "--demo", "helly1d"])), 0);
}
