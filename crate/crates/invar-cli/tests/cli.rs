//! End-to-end tests of the `invar` binary: documented examples, exit codes,
//! and JSON output.

use std::process::{Command, Output};

fn invar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invar"))
        .args(args)
        .env_remove("INVAR_TRUNC")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = invar(args);
    assert!(
        out.status.success(),
        "invar {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["binary-dim", "4", "3", "--method", "cs"]).trim(), "1");
    assert_eq!(stdout(&["binary-dim", "4", "3", "--method", "kernel"]).trim(), "1");
    assert_eq!(stdout(&["bedratyuk", "4", "3"]).trim(), "1");
    assert_eq!(stdout(&["straighten", "(13)(24)"]).trim(), "(12)(34) + (14)(23)");
}

#[test]
fn quartic_invariants() {
    let out = stdout(&["binary-invariants", "4", "2"]);
    assert!(out.contains("dimension 1"));
    assert!(out.contains("a0*a4 - 4*a1*a3 + 3*a2^2"));
    assert_eq!(stdout(&["howe", "6", "1"]).trim(), "5");
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(invar(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(invar(&["binary-dim", "4"]).status.code(), Some(1));
    assert_eq!(invar(&["reynolds", "4", "2", "b7"]).status.code(), Some(1));
    assert_eq!(invar(&["straighten", "(12)(345)"]).status.code(), Some(1));
    // help and version are not errors
    assert_eq!(invar(&["--help"]).status.code(), Some(0));
    assert_eq!(invar(&["--version"]).status.code(), Some(0));
    // success
    assert_eq!(invar(&["bedratyuk", "4", "3"]).status.code(), Some(0));
}

#[test]
fn json_output_round_trips() {
    let text = stdout(&["binary-invariants", "4", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["dimension"], 1);
    let p = invar_core::Poly::from_json(&v["basis"][0]).unwrap();
    assert_eq!(p, invar_core::binary::invariant_basis(4, 2)[0]);

    let text = stdout(&["straighten", "(13)(24)", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["display"], "(12)(34) + (14)(23)");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn truncation_flag_and_env() {
    let flag = stdout(&["springer", "3", "--trunc", "6"]);
    assert_eq!(flag.trim(), "z^4 + 1  + O(degree 7)");
    let out = Command::new(env!("CARGO_BIN_EXE_invar"))
        .args(["springer", "3"])
        .env("INVAR_TRUNC", "6")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), flag);
}

#[test]
fn tableau_sugar_matches_rows() {
    let rows = stdout(&["symbolic-expand", "111122,223333"]);
    let sugar = stdout(&["symbolic-expand", "[12]^2[13]^2[23]^2"]);
    assert_eq!(rows, sugar);
    assert!(!rows.trim().is_empty());
}

#[test]
fn randomized_checks_pass() {
    let out = invar(&["six-line-checks", "--trials", "4", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let out = invar(&["six-plane-checks", "--trials", "3", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().lines().all(|l| l.starts_with("[PASS]")));
}

#[test]
fn quick_selftest_passes() {
    let out = invar(&["selftest", "--quick"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 16);
    assert!(text.lines().all(|l| l.starts_with("[PASS]")));
    // deterministic for a fixed seed
    let again = invar(&["selftest", "--quick"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}
