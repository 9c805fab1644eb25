use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano-lines"))
        .args(args)
        .env_remove("FANO_LINES_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).expect("valid json");
    assert_eq!(v["schema"], "fano-lines/1");
    v
}

#[test]
fn separable_fermat_cubic() {
    let v = json(&["lines", "separable", "--phi", "x^3+y^3", "--real"]);
    assert_eq!(v["total"], 27);
    assert_eq!(v["grid"], 9);
    assert_eq!(v["alpha"], 6);
    assert_eq!(v["group"], "D3");
    assert_eq!(v["real"]["count"], 3);
}

#[test]
fn separable_octahedral_form() {
    let v = json(&["lines", "separable", "--phi", "x^8+14x^4y^4+y^8"]);
    assert_eq!(v["total"], 256);
    assert_eq!(v["group"], "O");
}

#[test]
fn plucker_fermat_cubic_with_lines() {
    let v = json(&["lines", "plucker", "--surface", "fermat:3", "--emit"]);
    assert_eq!(v["total"], 27);
    assert_eq!(v["lines"].as_array().unwrap().len(), 27);
    assert_eq!(v["certified_reduced"], true);
}

#[test]
fn plucker_octic_low_strata() {
    let v = json(&["lines", "plucker", "--surface", "S8", "--strata", "2,3,4,5,6", "--skip-smooth-check"]);
    assert_eq!(v["strata"]["2"], 32);
    for k in ["3", "4", "5", "6"] {
        assert_eq!(v["strata"][k], 0);
    }
    assert_eq!(v["partial"], true);
}

#[test]
fn covering_fermat_quartic() {
    let v = json(&["covering", "--curve", "x^4+y^4+z^4", "--seed", "1"]);
    assert_eq!(v["beta"], 12);
    assert_eq!(v["lines_count"], 48);
}

#[test]
fn skew_and_bounds() {
    let v = json(&["skew", "rams", "--d", "7"]);
    assert_eq!(v["count"], 39);
    assert_eq!(v["disjoint"], true);
    assert_eq!(v["bounds"]["miyaoka"], 70);
    let b = json(&["bounds", "--d", "8"]);
    assert_eq!(b["rows"][0]["uniform"], 352);
    let table = json(&["bounds"]);
    let uniform: Vec<u64> = table["rows"].as_array().unwrap().iter().map(|r| r["uniform"].as_u64().unwrap()).collect();
    assert_eq!(uniform, [64, 115, 180, 259, 352, 459, 580, 715, 864, 2560]);
}

#[test]
fn construct_icosahedral() {
    let v = json(&["construct", "--degree", "12", "--group", "I"]);
    assert_eq!(v["group"], "I");
    assert_eq!(v["total"], 864);
    let c = json(&["construct", "--degree", "5", "--group", "cyclic:4", "--seed", "3"]);
    assert_eq!(c["total"], 45);
}

#[test]
fn catalog_lists_named_surfaces() {
    let v = json(&["catalog"]);
    let names: Vec<&str> = v["surfaces"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["fermat:d", "schur4", "S6", "S8", "sarti6", "rams:d"]);
}

#[test]
fn exit_codes() {
    let out = run(&["lines", "separable", "--phi", "x^2("]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 4"));
    assert_eq!(run(&["skew", "rams", "--d", "8"]).status.code(), Some(1));
    assert_eq!(run(&["bounds", "--d", "2"]).status.code(), Some(1));
    assert_eq!(run(&["--tol", "0.5", "bounds"]).status.code(), Some(1));
    let out = run(&["lines", "plucker", "--surface", "S8", "--strata", "2", "--budget", "5", "--skip-smooth-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn output_is_deterministic_and_sorted() {
    let args = ["covering", "--curve", "fermat:3", "--emit", "--seed", "4"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let keys: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn table_format_and_threads_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_fano-lines"))
        .args(["--format", "table", "skew", "rams", "--d", "9"])
        .env("FANO_LINES_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("count") && l.ends_with("67")));
}
