use std::process::{Command, Output};

use serde_json::Value;
use varikon::varikon::{parse_moves, VarikonConfig};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_varikon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enumerate_reports_count_and_depth() {
    let out = run(&["enumerate", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 20160);
    assert_eq!(v["max_depth"], 19);
    let total: u64 = v["histogram"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .sum();
    assert_eq!(total, 20160);

    let csv = stdout(&run(&["enumerate"]));
    assert!(csv.starts_with("depth,count\n0,1\n"));
    assert!(csv.ends_with("19,18\n"));
}

#[test]
fn solve_solved_is_empty() {
    let out = run(&["solve", "1,2,3,4,5,6,7,_", "--method", "a6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["length"], 0);
    assert_eq!(v["moves"], "");
}

#[test]
fn solve_output_round_trips() {
    let out = run(&["solve", "1,5,2,4,3,6,7,_", "--method", "a6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let start: VarikonConfig = v["start"].as_str().unwrap().parse().unwrap();
    let target: VarikonConfig = v["target"].as_str().unwrap().parse().unwrap();
    let moves = parse_moves(v["moves"].as_str().unwrap()).unwrap();
    assert_eq!(start.apply_word(&moves), target);
    let word_phase: usize = v["phases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["kind"] == "word-expansion")
        .map(|p| p["moves"].as_str().unwrap().len())
        .sum();
    assert_eq!(word_phase, 20);
}

#[test]
fn solve_rejects_bad_input() {
    let odd = run(&["solve", "1,2,3,4,5,7,6,_"]);
    assert_eq!(odd.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&odd.stderr).contains("unreachable"));
    assert_eq!(run(&["solve", "1,2,x"]).status.code(), Some(2));
    assert_eq!(run(&["solve"]).status.code(), Some(2));
}

#[test]
fn random_solve_is_deterministic() {
    let args = [
        "solve", "--random", "--seed", "9", "--method", "a5", "--target", "center",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let start: VarikonConfig = v["start"].as_str().unwrap().parse().unwrap();
    let moves = parse_moves(v["moves"].as_str().unwrap()).unwrap();
    assert_eq!(
        start.apply_word(&moves).to_string(),
        v["target"].as_str().unwrap()
    );
}

#[test]
fn word_tables() {
    let a5 = stdout(&run(&["words", "--group", "a5"]));
    let lines: Vec<&str> = a5.lines().collect();
    assert_eq!(lines.len(), 61);
    assert_eq!(lines[1], "(),0,");

    let a6 = json(&run(&["words", "--group", "a6", "--format", "json"]));
    let rows = a6.as_array().unwrap();
    assert_eq!(rows.len(), 360);
    let max = rows.iter().map(|r| r["length"].as_u64().unwrap()).max();
    assert_eq!(max, Some(5));
    let at_max = rows.iter().filter(|r| r["length"] == 5).count();
    assert_eq!(at_max, 46);
}

#[test]
fn fifteen_commands() {
    let fig2 = json(&run(&[
        "fifteen",
        "--check",
        "1,2,3,4,5,6,7,8,9,10,11,12,13,15,14,_",
    ]));
    assert_eq!(fig2["solvable"], false);
    let solved = json(&run(&[
        "fifteen",
        "--check",
        "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,_",
    ]));
    assert_eq!(solved["solvable"], true);

    let cycles = run(&["fifteen", "--verify-cycles"]);
    assert_eq!(cycles.status.code(), Some(0));
    let text = stdout(&cycles);
    assert_eq!(text.lines().count(), 14);
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.contains("(11,12,") || l.contains(",11,12)")));

    assert_eq!(run(&["fifteen", "--check", "1,2,3"]).status.code(), Some(2));
}

#[test]
fn verify_reports_named_claims() {
    let out = run(&["verify"]);
    let v = json(&out);
    let pass = v["pass"].as_bool().unwrap();
    assert_eq!(out.status.code(), Some(if pass { 0 } else { 1 }));
    let failures = v["failures"].as_array().unwrap();
    assert_eq!(failures.is_empty(), pass);

    let find = |claim: &str| -> Value {
        v["reports"]
            .as_array()
            .unwrap()
            .iter()
            .flat_map(|r| r["checks"].as_array().unwrap())
            .find(|c| c["claim"] == claim)
            .cloned()
            .unwrap_or_else(|| panic!("missing claim {claim}"))
    };
    assert_eq!(find("|Z|")["computed"], 4);
    assert_eq!(find("A6 elements at max length")["computed"], 46);
    assert_eq!(find("God's number")["computed"], 19);
    for c in ["claim", "expected", "computed", "pass"] {
        assert!(find("|K|").get(c).is_some());
    }
}
