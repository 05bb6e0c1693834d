use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syzcurve"))
        .args(args)
        .env_remove("SYZCURVE_SEED")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn b3_quartic_from_first_global_class() {
    let v = json(&["construct", "--config", "b3", "--k", "2", "--d", "2", "--line", "-12,10,7"]);
    assert_eq!(v["degree"], 4);
    assert_eq!(v["mult_at_point"], 2);
    assert_eq!(v["line_component_check"], true);
    assert!(v["multiplicities"].as_array().unwrap().iter().all(|m| m.as_u64() >= Some(1)));
}

#[test]
fn splitting_of_fermat_dual() {
    let v = json(&["splitting", "--config", "dfn", "--n", "3", "--k", "1"]);
    assert_eq!(v["k"], 1);
    let e: Vec<u64> = v["exponents"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(e.iter().sum::<u64>() + 1, 12);
}

#[test]
fn output_is_deterministic() {
    let args = ["dimtable", "--config", "b3", "--k", "1", "--seed", "7", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_is_read_from_environment() {
    let base = ["syzygies", "--config", "b3", "--k", "1", "--d", "2", "--format", "json"];
    let flag = run(&[&base[..], &["--seed", "5"]].concat());
    let env = Command::new(env!("CARGO_BIN_EXE_syzcurve"))
        .args(base)
        .env("SYZCURVE_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
}

#[test]
fn points_file_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b3.json");
    let pts = r#"[["1","0","0"],["0","1","0"],["0","0","1"],["1","1","0"],["1","-1","0"],
                  ["1","0","1"],["1","0","-1"],["0","1","1"],["0","1","-1"]]"#;
    std::fs::write(&path, format!("{{\"order\": 1, \"points\": {pts}}}")).unwrap();
    let from_file = json(&["splitting", "--points-file", path.to_str().unwrap(), "--k", "1"]);
    let builtin = json(&["splitting", "--config", "b3", "--k", "1"]);
    assert_eq!(from_file["exponents"], builtin["exponents"]);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.json");
    let out = run(&[
        "unexpected", "--config", "dfn", "--n", "4", "--d", "5", "--k", "2",
        "--format", "json", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["actual_dim"], 3);
    assert_eq!(v["expected_dim"], 2);
    assert_eq!(v["verdict_direct"], true);
}

#[test]
fn verify_stored_curve() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.txt");
    std::fs::write(&path, include_str!("../../core/fixtures/b3_quartic.txt")).unwrap();
    let v = json(&[
        "verify", "--config", "b3", "--curve-file", path.to_str().unwrap(),
        "--point", "-12,10,7", "--d", "2",
    ]);
    assert_eq!(v["meets_d"], true);
    assert_eq!(v["degree"], 4);
}

#[test]
fn reproduce_filter() {
    let v = json(&["reproduce", "--filter", "c2-b3"]);
    assert_eq!(v["passed"], true);
    assert!(!v["checks"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["splitting", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["splitting", "--config", "dfn", "--k", "1"]).status.code(), Some(2));
    let bad = run(&["construct", "--config", "b3", "--k", "2", "--d", "2", "--syzygy-index", "9"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
