use std::fs;
use std::process::{Command, Output};

const EXAMPLE: &str = "[[1,1,1,0,0],[0,0,1,1,0],[1,1,1,0,1]]";

fn crystals(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystals")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn adjoint_graph_in_dot() {
    let args = ["graph", "--model", "tableau", "--rank", "3", "--shape", "2,1,0", "--format", "dot"];
    let first = crystals(&args);
    assert!(first.status.success());
    let dot = stdout(&first);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("[wt=")).count(), 8);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 8);
    assert_eq!(crystals(&args).stdout, first.stdout);
}

#[test]
fn inner_action_on_the_example_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("M.json");
    fs::write(&path, EXAMPLE).unwrap();
    let p = path.to_str().unwrap();
    let inner = crystals(&["act", "--model", "matrix", "--word", "s[1,2]", "--mode", "inner", "--structure", "column", "--in", p]);
    assert!(inner.status.success());
    assert_eq!(stdout(&inner).trim(), "[[1,0,1,0,0],[0,1,1,1,0],[1,1,1,0,1]]");
    let outer = crystals(&["act", "--model", "matrix", "--word", "s[1,2]", "--mode", "outer", "--structure", "row", "--in", p]);
    assert_eq!(stdout(&outer), stdout(&inner));
    let columns = crystals(&["act", "--model", "matrix", "--word", "s[1,2]", "--mode", "outer", "--structure", "column", "--in", p]);
    assert_eq!(stdout(&columns).trim(), EXAMPLE);
}

#[test]
fn skew_howe_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let pair = dir.path().join("pair.json");
    let forward = crystals(&["skew-howe", "--element", EXAMPLE, "--format", "json", "--out", pair.to_str().unwrap()]);
    assert!(forward.status.success());
    let text = fs::read_to_string(&pair).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["T_P"]["rows"], serde_json::json!([[1, 1, 1, 2, 3], [2, 3, 3], [3]]));
    assert_eq!(value["shape"], "5,3,1");
    let back = crystals(&["skew-howe", "--inverse", "--in", pair.to_str().unwrap()]);
    assert_eq!(stdout(&back).trim(), EXAMPLE);
}

#[test]
fn gelfand_tsetlin_moves() {
    let x = r#"{"rank":4,"rows":[[5,3,3,1],[4,3,1],[4,2],[3]]}"#;
    let o = crystals(&["gt", "--element", x, "--q", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("q_2(x): (5,3,3,1) (4,3,1) (3,2) (2)"));
}

#[test]
fn tensor_rule_profiles() {
    let o = crystals(&["tensor", "--element", "[[[1]],[[1]]]", "--rank", "2", "--i", "1"]);
    assert!(stdout(&o).contains("eps profile [0,-1] phi profile [2,1]"));
    assert!(stdout(&o).contains("f_i: [[2]] ⊗ [[1]]"));
}

#[test]
fn verification_exit_codes() {
    let agree = crystals(&["verify", "agree", "--n", "3", "--m", "3"]);
    assert!(agree.status.success());
    assert!(stdout(&agree).ends_with("10 of 10 passed\n"));
    let goldens = crystals(&["verify", "all", "--budget", "0"]);
    assert!(goldens.status.success());
    assert!(stdout(&goldens).starts_with("PASS goldens"));
    let fault = crystals(&["verify", "commutation", "--n", "2", "--m", "2", "--inject-fault"]);
    assert_eq!(fault.status.code(), Some(0), "explicit instances use the correct operators");
    let fault = crystals(&["verify", "commutation", "--inject-fault"]);
    assert_eq!(fault.status.code(), Some(1));
    assert!(stdout(&fault).contains("witness="));
}

#[test]
fn usage_errors_exit_with_two() {
    let over = crystals(&["verify", "agree", "--n", "4", "--m", "4", "--N", "8", "--budget", "100"]);
    assert_eq!(over.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&over.stderr).contains("--force"));
    let malformed = crystals(&["act", "--model", "matrix", "--word", "s[1,2]", "--structure", "row", "--element", "[[1,"]);
    assert_eq!(malformed.status.code(), Some(2));
    assert_eq!(crystals(&["graph", "--bogus"]).status.code(), Some(2));
    assert_eq!(crystals(&["verify", "goldens", "--format", "dot"]).status.code(), Some(2));
    let word = crystals(&["act", "--model", "tableau", "--rank", "2", "--word", "s[1,3]", "--element", "[[1]]"]);
    assert_eq!(word.status.code(), Some(2));
}

#[test]
fn json_reports() {
    let o = crystals(&["verify", "oracles", "--shape", "2,1", "--rank", "3", "--format", "json"]);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports[0]["status"], "pass");
    assert_eq!(reports[0]["instance"]["shape"], "2,1");
}
