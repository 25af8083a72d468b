//! End-to-end checks of the binary: exit codes and output shapes.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oddchrom"))
}

fn run_stdin(args: &[&str], input: &str) -> (i32, String, String) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

const C4: &str = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";

#[test]
fn solve_reports_value_and_route() {
    let (code, stdout, _) = run_stdin(&["solve", "-", "--json"], C4);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["chi_odd"], 4);
    assert_eq!(v["witness"]["valid"], true);
}

#[test]
fn decision_exit_codes() {
    let (code, _, _) = run_stdin(&["solve", "-", "--k", "4"], C4);
    assert_eq!(code, 0);
    let (code, _, _) = run_stdin(&["solve", "-", "--k", "3"], C4);
    assert_eq!(code, 2);
}

#[test]
fn parse_errors_exit_4() {
    let (code, _, stderr) = run_stdin(&["solve", "-"], "p edge 2 1\ne 1 9\n");
    assert_eq!(code, 4);
    assert!(stderr.contains("line 2"));
}

#[test]
fn guard_exit_3() {
    // A big sparse random-ish graph with no small structure and a tiny
    // oracle guard cannot be solved.
    let mut text = String::from("p edge 30 29\n");
    for i in 1..30 {
        text.push_str(&format!("e {} {}\n", i, i + 1));
    }
    let (code, _, _) = run_stdin(&["solve", "-", "--guard-n", "5", "--algo", "oracle"], &text);
    assert_eq!(code, 3);
}

#[test]
fn verify_round_trip() {
    let dir = std::env::temp_dir().join("oddchrom-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let coloring = dir.join("c4.json");
    std::fs::write(&coloring, r#"{"k":4,"colors":[1,2,3,4]}"#).unwrap();
    let (code, stdout, _) = run_stdin(
        &["verify", "-", "--coloring", coloring.to_str().unwrap()],
        C4,
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["valid"], true);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn kernelize_emits_dimacs_and_sidecar() {
    // Clique on 8 vertices plus one low vertex.
    let mut text = String::from("p edge 9 29\n");
    for u in 1..=8 {
        for v in (u + 1)..=8 {
            text.push_str(&format!("e {u} {v}\n"));
        }
    }
    text.push_str("e 1 9\n");
    let (code, stdout, _) = run_stdin(&["kernelize", "-", "--k", "8"], &text);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("p edge"));
    assert!(stdout.contains("c sidecar"));
}

#[test]
fn reduce_emits_roles() {
    let (code, stdout, _) = run_stdin(&["reduce", "-", "--kind", "peb", "--k", "3", "--json"], C4);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["meta"]["k_out"], 3);
    assert!(v["dimacs"].as_str().unwrap().starts_with("p edge"));
}

#[test]
fn oracle_reports_all_four_values() {
    let (code, stdout, _) = run_stdin(&["oracle", "-"], C4);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["chi"], 2);
    assert_eq!(v["chi_odd"], 4);
    assert_eq!(v["chi_strong"], 3);
    assert_eq!(v["chi_odd_strong"], 4);
}

#[test]
fn intervals_input() {
    let dir = std::env::temp_dir().join("oddchrom-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let spans = dir.join("p3.txt");
    std::fs::write(&spans, "0 0 10\n1 8 18\n2 16 26\n").unwrap();
    let (code, stdout, _) = run_stdin(
        &["solve", "--intervals", spans.to_str().unwrap(), "--json"],
        "",
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["chi_odd"], 3);
}
