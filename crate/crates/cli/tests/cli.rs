use std::path::Path;
use std::process::{Command, Output};

use cmreg_cli::{parse_session, run_session, RunOptions};

fn cmreg(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmreg"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("cmreg runs")
}

const FUZZ: &str = "ring R = poly(QQ, 3);\n\
                    cmd fuzz power-cd1 R --count 4;\n\
                    cmd fuzz regtor R --count 3;\n\
                    ideal I = (x0^2, x0*x1);\n\
                    cmd betti R/I;\n\
                    cmd verify power-dim2 I --max 3;\n";

#[test]
fn same_seed_gives_identical_json() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s.cmr"), FUZZ).unwrap();
    let a = cmreg(&["s.cmr", "--seed", "17", "--json", "a.jsonl", "-q"], dir.path());
    let b = cmreg(&["s.cmr", "--seed", "17", "--json", "b.jsonl", "--parallel", "-q"], dir.path());
    let c = cmreg(&["s.cmr", "--seed", "18", "--json", "c.jsonl", "-q"], dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(c.status.code(), Some(0));
    let read = |f: &str| std::fs::read(dir.path().join(f)).unwrap();
    assert_eq!(read("a.jsonl"), read("b.jsonl"));
    assert_ne!(read("a.jsonl"), read("c.jsonl"));
}

#[test]
fn parse_errors_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.cmr"), "ring R = poly(GF(4), 2);\n").unwrap();
    let out = cmreg(&["bad.cmr"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.cmr:1:18: 4 is not prime"), "{err}");

    std::fs::write(dir.path().join("inh.cmr"), "ring R = poly(QQ, 2);\nideal I = (x0 + 1);\n").unwrap();
    let out = cmreg(&["inh.cmr"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("inh.cmr:2:12: generator `x0 + 1` is not homogeneous"));

    let out = cmreg(&["missing.cmr"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn internal_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("s.cmr"),
        "ring R = poly(QQ, 2); module M = R/(x0); cmd verify frobenius M;",
    )
    .unwrap();
    let out = cmreg(&["s.cmr", "--json", "-"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let line = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(v["status"], "error");
}

#[test]
fn betti_json_and_staircase() {
    let spec = parse_session("ring R = poly(QQ, 2); ideal I = (x0^2, x1^3); cmd betti R/I;").unwrap();
    let out = run_session(&spec, &RunOptions::default());
    assert_eq!(out.exit_code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.records[0]).unwrap();
    assert_eq!(
        v["result"],
        serde_json::json!({"betti": [[0, 0, 1], [1, 2, 1], [1, 3, 1], [2, 5, 1]], "reg": 3})
    );
    assert!(out.summary.contains("total: 1 2 1"));
    assert!(out.summary.contains("3: . . 1"));
}

#[test]
fn verify_commands_report_verdicts() {
    let text = "ring R = poly(QQ, 2);\n\
                module M = R/(x0^2); module N = R/(x1^2);\n\
                cmd verify regtor M N;\n\
                ring F = poly(GF(2), 2); module P = F/(x0, x1);\n\
                cmd verify frobenius F P --emax 2;\n\
                ring S = R/(x0^2); module K = residue(S);\n\
                cmd verify regtor K K;\n";
    let out = run_session(&parse_session(text).unwrap(), &RunOptions::default());
    assert_eq!(out.exit_code, 0);
    let v: Vec<serde_json::Value> = out.records.iter().map(|r| serde_json::from_str(r).unwrap()).collect();
    assert_eq!(v.len(), 4);
    assert_eq!(v[0]["verdict"], "holds");
    assert_eq!(v[1]["verdict"], "holds");
    assert_eq!(v[2]["verdict"], "holds");
    assert_eq!(v[1]["details"]["reg"], 2);
    assert_eq!(v[2]["details"]["reg"], 6);
    assert_eq!(v[3]["verdict"], "vacuous");
}

#[test]
fn emitted_polynomials_reparse() {
    let text = "ring R = poly(GF(3), 3); ideal I = (x0^2*x2 - x1^2*x2, x0*x1*x2 + x2^3); cmd saturate I;";
    let spec = parse_session(text).unwrap();
    let out = run_session(&spec, &RunOptions::default());
    let v: serde_json::Value = serde_json::from_str(&out.records[0]).unwrap();
    let gens: Vec<String> = v["result"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g.as_str().unwrap().to_string())
        .collect();
    assert!(!gens.is_empty());
    let again = format!("ring R = poly(GF(3), 3); ideal J = ({}); cmd saturate J;", gens.join(", "));
    let out2 = run_session(&parse_session(&again).unwrap(), &RunOptions::default());
    let v2: serde_json::Value = serde_json::from_str(&out2.records[0]).unwrap();
    assert_eq!(v2["result"]["generators"], v["result"]["generators"]);
    assert_eq!(v2["result"]["saturated"], true);
}

#[test]
fn tour_session_runs_clean() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../sessions/tour.cmr");
    let text = std::fs::read_to_string(root).unwrap();
    let out = run_session(&parse_session(&text).unwrap(), &RunOptions::default());
    assert_eq!(out.exit_code, 0, "{}", out.summary);
    for r in &out.records {
        let v: serde_json::Value = serde_json::from_str(r).unwrap();
        assert_ne!(v["verdict"], "violated");
        assert_ne!(v["status"], "error");
    }
}
