//! End-to-end checks of the binary: output schema, exit codes, formats.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macaulay"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_lines(output: &Output) -> Vec<Value> {
    let stdout = String::from_utf8(output.stdout.clone()).expect("utf-8 output");
    stdout
        .lines()
        .map(|line| serde_json::from_str(line).expect("every line parses as JSON"))
        .collect()
}

/// Walk a JSON value and assert it contains no bare numbers.
fn assert_numbers_are_strings(value: &Value) {
    match value {
        Value::Number(n) => panic!("bare number {n} in output"),
        Value::Array(items) => items.iter().for_each(assert_numbers_are_strings),
        Value::Object(map) => map.values().for_each(assert_numbers_are_strings),
        _ => {}
    }
}

#[test]
fn rep_matches_expected_representation() {
    let output = run(&["rep", "6", "3"]);
    assert!(output.status.success());
    let lines = json_lines(&output);
    assert_eq!(lines.len(), 1);
    let record = &lines[0];
    assert_eq!(record["schema_version"], "1");
    assert_eq!(record["command"], "rep");
    assert_eq!(record["inputs"]["a"], "6");
    assert_eq!(
        record["result"]["ks"],
        serde_json::json!([["4", "3"], ["2", "2"], ["1", "1"]])
    );
    assert_eq!(record["result"]["value"], "6");
}

#[test]
fn rep_of_zero_is_empty() {
    let output = run(&["rep", "0", "3"]);
    assert!(output.status.success());
    let lines = json_lines(&output);
    assert_eq!(lines[0]["result"]["ks"], serde_json::json!([]));
    assert_eq!(lines[0]["result"]["value"], "0");
}

#[test]
fn rep_rejects_degree_zero_with_exit_2() {
    let output = run(&["rep", "6", "0"]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("d must be positive"), "stderr: {stderr}");
}

#[test]
fn rep_rejects_garbage_with_exit_2() {
    let output = run(&["rep", "abc", "3"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["rep", "-4", "3"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn macaulay_values_and_methods() {
    let output = run(&["macaulay", "4", "3"]);
    assert!(output.status.success());
    assert_eq!(json_lines(&output)[0]["result"]["value"], "5");

    let output = run(&["macaulay", "0", "7"]);
    assert_eq!(json_lines(&output)[0]["result"]["value"], "0");

    let output = run(&["macaulay", "6", "3", "--method", "both"]);
    let record = &json_lines(&output)[0];
    assert_eq!(record["result"]["value"], "7");
    assert_eq!(record["result"]["agree"], true);

    let output = run(&["macaulay", "123456", "4", "--method", "recursive"]);
    assert!(output.status.success());
}

#[test]
fn check_super_holds_with_exit_0() {
    let output = run(&["check", "super", "4", "4", "--d", "3"]);
    assert_eq!(output.status.code(), Some(0));
    let record = &json_lines(&output)[0];
    assert_eq!(record["result"]["lhs"], "10");
    assert_eq!(record["result"]["rhs"], "10");
    assert_eq!(record["result"]["holds"], true);
}

#[test]
fn check_naive35_violation_exits_4() {
    let output = run(&["check", "naive35", "4", "4", "6", "2", "--d", "3"]);
    assert_eq!(output.status.code(), Some(4));
    let record = &json_lines(&output)[0];
    assert_eq!(record["result"]["lhs"], "10");
    assert_eq!(record["result"]["rhs"], "9");
    assert_eq!(record["result"]["holds"], false);
}

#[test]
fn check_constrained_reports_sides() {
    let output = run(&[
        "check", "constrained", "3", "3", "--m", "2", "--c", "2", "--d", "3",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let record = &json_lines(&output)[0];
    assert_eq!(record["result"]["lhs"], "6");
    assert_eq!(record["result"]["rhs"], "7");
}

#[test]
fn check_constrained_precondition_failure_exits_2() {
    let output = run(&[
        "check", "constrained", "5", "1", "--m", "2", "--c", "1", "--d", "3",
    ]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("precondition"), "stderr: {stderr}");
}

#[test]
fn check_seq_replay_includes_trace() {
    let output = run(&[
        "check",
        "seq",
        "--as",
        "2,3,4",
        "--bs",
        "3,4,4",
        "--d",
        "3",
        "--m",
        "2",
        "--mode",
        "proof-replay",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let record = &json_lines(&output)[0];
    assert_eq!(record["result"]["holds"], true);
    assert_eq!(record["result"]["lhs"], "10");
    assert_eq!(record["result"]["rhs"], "13");
    let replay = record["result"]["trace"]["replay"]
        .as_array()
        .expect("replay trace");
    assert!(!replay.is_empty());
    assert_eq!(replay[0]["case"], "case1");
}

#[test]
fn check_seq_invalid_instance_exits_2() {
    let output = run(&[
        "check", "seq", "--as", "3,2", "--bs", "4,4", "--d", "3", "--m", "2",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn trace_emits_states_and_landmarks() {
    let output = run(&["trace", "3", "3", "--d", "3", "--m", "2", "--c", "2"]);
    assert_eq!(output.status.code(), Some(0));
    let record = &json_lines(&output)[0];
    let states = record["result"]["states"].as_array().unwrap();
    let pairs: Vec<(String, String)> = states
        .iter()
        .map(|s| {
            (
                s["a"].as_str().unwrap().to_string(),
                s["b"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        pairs,
        vec![
            ("3".into(), "3".into()),
            ("4".into(), "2".into()),
            ("5".into(), "1".into()),
            ("6".into(), "0".into()),
        ]
    );
    assert_eq!(record["result"]["l1"], "1");
    assert_eq!(record["result"]["l2"], "3");
    // Sum preservation is visible in the emitted states.
    for state in states {
        let a: u64 = state["a"].as_str().unwrap().parse().unwrap();
        let b: u64 = state["b"].as_str().unwrap().parse().unwrap();
        assert_eq!(a + b, 6);
    }
}

#[test]
fn trace_precondition_failure_exits_2() {
    let output = run(&["trace", "3", "0", "--d", "3", "--m", "2", "--c", "2"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn sweep_naive35_streams_violations_then_summary() {
    let output = run(&["sweep", "naive35", "--max", "10", "--d", "3"]);
    assert_eq!(output.status.code(), Some(0), "expected violations exit 0");
    let lines = json_lines(&output);
    assert!(lines.len() > 1);
    let paper_record = lines.iter().any(|record| {
        let v = &record["result"]["violation"]["instance"];
        v["a1"] == "4" && v["a2"] == "4" && v["b1"] == "6" && v["b2"] == "2"
    });
    assert!(paper_record, "expected the (4,4,6,2) record");
    let summary = lines.last().unwrap();
    assert!(summary["result"]["instances_checked"].is_string());
    assert_eq!(
        summary["result"]["violations_found"].as_str().unwrap(),
        (lines.len() - 1).to_string()
    );
}

#[test]
fn sweep_super_is_clean_and_exits_0() {
    let output = run(&["sweep", "super", "--max", "200", "--max-d", "4"]);
    assert_eq!(output.status.code(), Some(0));
    let lines = json_lines(&output);
    assert_eq!(lines.len(), 1, "summary only");
    assert_eq!(lines[0]["result"]["violations_found"], "0");
    assert_eq!(lines[0]["result"]["instances_checked"], "161604");
}

#[test]
fn sweep_requires_a_degree_flag() {
    let output = run(&["sweep", "super", "--max", "10"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["sweep", "super", "--max", "10", "--d", "2", "--max-d", "3"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn all_output_numbers_are_decimal_strings() {
    for args in [
        vec!["rep", "17", "4"],
        vec!["macaulay", "17", "4", "--method", "both"],
        vec!["check", "super", "5", "9", "--d", "2"],
        vec!["trace", "3", "3", "--d", "3", "--m", "2", "--c", "2"],
        vec!["sweep", "naive35", "--max", "8", "--d", "3"],
    ] {
        let output = run(&args);
        for record in json_lines(&output) {
            assert_numbers_are_strings(&record);
        }
    }
}

#[test]
fn text_format_carries_the_same_numbers() {
    let output = run(&[
        "--format", "text", "check", "naive35", "4", "4", "6", "2", "--d", "3",
    ]);
    assert_eq!(output.status.code(), Some(4));
    let text = String::from_utf8(output.stdout).unwrap();
    for needle in ["lhs=10", "rhs=9", "holds=false", "a1=4", "b1=6"] {
        assert!(text.contains(needle), "missing {needle} in: {text}");
    }
}
