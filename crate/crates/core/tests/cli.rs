use iyang::cli::{run_cli, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use std::path::PathBuf;
use std::process::Command;

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn iyang(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_iyang")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn weights_lists_three() {
    let (code, out) = iyang(&["weights", "--n", "1", "--d", "2"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "0,4,0\n1,2,1\n2,0,2\n");
}

#[test]
fn apply_prints_the_element() {
    let (code, out) = iyang(&["apply", "--op", "B(1,0)", "--component", "0,2,0", "--poly", "1"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.trim(), "[1,0,1] i");
}

#[test]
fn verify_exit_codes_and_json() {
    let path = tmp("suite.json");
    let p = path.to_str().unwrap();
    let argv = ["iyang", "verify", "--n", "1", "--d", "1", "--rmax", "3", "--deg", "3", "--json", p];
    assert_eq!(run_cli(argv), EXIT_PASS);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    let argv =
        ["iyang", "verify", "--n", "1", "--d", "2", "--rmax", "1", "--deg", "1", "--mutation", "flip-h-prefactor"];
    assert_eq!(run_cli(argv), EXIT_FAIL);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run_cli(["iyang"]), EXIT_USAGE);
    assert_eq!(run_cli(["iyang", "verify", "--n", "x", "--d", "1"]), EXIT_USAGE);
    assert_eq!(run_cli(["iyang", "apply", "--op", "Q(1)", "--component", "1,0,1", "--poly", "1"]), EXIT_USAGE);
    assert_eq!(run_cli(["iyang", "compose", "--A", "/nonexistent", "--B", "/nonexistent"]), EXIT_USAGE);
}

#[test]
fn compose_on_the_xi1_example() {
    let a = tmp("a.mat");
    let b = tmp("b.mat");
    std::fs::write(&a, "1 1\n0 1 0\n0 0 0\n0 1 0\n").unwrap();
    std::fs::write(&b, "1 1\n0 0 0\n1 0 1\n0 0 0\n").unwrap();
    let (code, out) = iyang(&["compose", "--A", a.to_str().unwrap(), "--B", b.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.starts_with("M(A,B): 2 matrices\n"), "{out}");
    assert!(out.ends_with("A∘B:\n1 1\n0 0 1\n0 0 0\n1 0 0\n"), "{out}");
    let (code, out) = iyang(&["oracle", "--A", a.to_str().unwrap(), "--B", b.to_str().unwrap(), "--q", "3"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("subset of M(A,B): true") && out.contains("equal to M(A,B): true"), "{out}");
}

#[test]
fn orbits_round_trip_through_the_matrix_format() {
    let (code, out) = iyang(&["orbits", "--n", "1", "--d", "1"]);
    assert_eq!(code, EXIT_PASS);
    let blocks: Vec<&str> = out.split("\n\n").filter(|s| !s.trim().is_empty()).collect();
    assert_eq!(blocks.len(), iyang::orbit::enumerate_xi(1, 1).len());
    for b in blocks {
        b.parse::<iyang::orbit::OrbitMatrix>().unwrap();
    }
}

#[test]
fn selftest_passes() {
    let (code, out) = iyang(&["selftest"]);
    assert_eq!(code, EXIT_PASS, "{out}");
}
