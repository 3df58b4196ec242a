//! End-to-end runs of the compiled binary: exit codes, report files,
//! and the printed tables users actually see.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_laxcomma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> String {
    let mut p = std::env::temp_dir();
    p.push(format!("laxcomma-{}-{name}", std::process::id()));
    p.to_str().unwrap().to_string()
}

#[test]
fn check_accepts_the_fixture_and_rejects_garbage() {
    let out = run(&["check", "--file", &fixture("fzz.lc")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("8 declarations"));

    let bad = tmp("bad.lc");
    std::fs::write(&bad, "preorder P { elems: x; le: x y; }").unwrap();
    let out = run(&["check", "--file", &bad]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown element `y`"), "stderr: {err}");
}

#[test]
fn printed_workspaces_parse_back() {
    let out = run(&["check", "--print", "--file", &fixture("fzz.lc")]);
    assert_eq!(out.status.code(), Some(0));
    let canon = stdout(&out);

    let echo = tmp("echo.lc");
    std::fs::write(&echo, &canon).unwrap();
    let again = run(&["check", "--print", "--file", &echo]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(canon, stdout(&again));
}

#[test]
fn unresolved_names_exit_with_a_usage_error() {
    let out = run(&["descent", "--file", &fixture("fzz.lc"), "--morphism", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("nope"));
}

#[test]
fn descent_on_the_zigzag_cover_reports_the_failing_chain() {
    let json = tmp("fzz.json");
    let out = run(&[
        "descent",
        "--file",
        &fixture("fzz.lc"),
        "--morphism",
        "fzz",
        "--json",
        &json,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("verdict: NotEffective"));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    for field in ["command", "inputs", "result", "evidence", "witnesses", "version", "seed"] {
        assert!(report.get(field).is_some(), "missing report field {field}");
    }
    assert_eq!(report["result"]["verdict"], "NotEffective");
    assert_eq!(report["evidence"]["ed_witness"], serde_json::json!(["z0", "z1", "z2"]));
    assert_eq!(report["evidence"]["regepi_lax"], true);
    assert_eq!(report["evidence"]["stable_regepi_lax"], false);
}

#[test]
fn the_pinned_point_is_unclassified_and_refuses_the_probe_search() {
    let out = run(&["descent", "--file", &fixture("gap.lc"), "--morphism", "gap"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("verdict: Unknown"));

    let out = run(&[
        "presheaf",
        "--file",
        &fixture("gap.lc"),
        "obstruct",
        "--morphism",
        "gap",
        "--bound",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("refused"));
}

#[test]
fn the_mapping_object_over_the_chain_prints_its_structure_table() {
    let out = run(&[
        "construct",
        "--file",
        &fixture("exp.lc"),
        "exponential",
        "--of",
        "B",
        "--exp",
        "A",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("carrier: [0] [1]"), "got: {text}");
    assert!(text.contains("structure: [0] -> 0; [1] -> 1"), "got: {text}");

    let out = run(&[
        "oracle",
        "--file",
        &fixture("exp.lc"),
        "verify",
        "--bound",
        "2",
        "exponential",
        "--of",
        "B",
        "--exp",
        "A",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn hunting_twice_with_one_seed_writes_identical_reports() {
    let (j1, j2) = (tmp("hunt1.json"), tmp("hunt2.json"));
    for j in [&j1, &j2] {
        let out = run(&[
            "hunt", "--base", "B2", "--max-size", "2", "--seed", "7", "--budget", "4000",
            "--json", j,
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let b1 = std::fs::read(&j1).unwrap();
    let b2 = std::fs::read(&j2).unwrap();
    assert_eq!(b1, b2);

    let report: serde_json::Value = serde_json::from_slice(&b1).unwrap();
    assert_eq!(report["seed"], 7);
    assert!(report["result"]["instances"].as_u64().unwrap() >= 1);
}
