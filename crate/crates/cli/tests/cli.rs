use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreathchar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn eval_identity_of_worked_example() {
    let out = run(&["eval", "--n", "6", "--d", "3", "--lambda", "2,1/1/2", "--beta", "sst", "--g", "1 2 3 4 5 6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("generating function: 180"), "{text}");
    assert!(text.contains("induction oracle:    180"));
    assert!(text.trim_end().ends_with("agree"));
}

#[test]
fn eval_twisted_element_json() {
    let out = run(&[
        "eval", "--lambda", "2,1/1/2", "--beta", "sst", "--g", "6 2 3 4@1 5 1@1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["n"], 6);
    assert_eq!(v["d"], 3);
    assert_eq!(v["lambda"], "2,1/1/2");
    assert_eq!(v["beta"], "sst");
    let entry = &v["values"][0];
    assert_eq!(entry["g"], "6 2 3 4@1 5 1@1");
    assert_eq!(entry["value"], serde_json::json!({"d": 3, "coeffs": [-3, -6]}));
    assert_eq!(entry["value"], entry["oracle"]);
    assert_eq!(entry["agree"], true);
}

#[test]
fn eval_trivial_group() {
    let out = run(&["eval", "--n", "1", "--d", "1", "--lambda", "1", "--beta", "t", "--g", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("generating function: 1\n"));
}

#[test]
fn table_of_epsilon_21() {
    let out = run(&["table", "--n", "3", "--d", "1", "--lambda", "2,1", "--beta", "s", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows: Vec<(String, i64)> = v["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["g"].as_str().unwrap().to_string(), r["value"]["coeffs"][0].as_i64().unwrap()))
        .collect();
    let expected = [("1 2 3", 3), ("1 3 2", -1), ("2 1 3", -1), ("2 3 1", 0), ("3 1 2", 0), ("3 2 1", -1)];
    assert_eq!(rows.len(), 6);
    for ((g, v), (eg, ev)) in rows.iter().zip(expected) {
        assert_eq!((g.as_str(), *v), (eg, ev));
    }
}

#[test]
fn table_row_counts_and_text_layout() {
    let out = run(&["table", "--lambda", "1/-", "--beta", "tt"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(tt)^(1/-)\n1    1\n1@1  1\n");
    let out = run(&["table", "--lambda", "1/1", "--beta", "ts", "--format", "json"]);
    assert_eq!(json(&out)["values"].as_array().unwrap().len(), 8);
}

#[test]
fn immanant_dumps() {
    let out = run(&["immanant", "--lambda", "2,1", "--beta", "s"]);
    assert_eq!(
        stdout(&out).trim_end(),
        "3·x[1,1]·x[2,2]·x[3,3] - x[1,1]·x[2,3]·x[3,2] - x[1,2]·x[2,1]·x[3,3] - x[1,3]·x[2,2]·x[3,1]"
    );
    let out = run(&["immanant", "--lambda", "-/1/-", "--beta", "ttt"]);
    assert_eq!(stdout(&out).trim_end(), "x[1,1] + z^2·x[1,1@1] + z·x[1,1@2]");
    let out = run(&["immanant", "--lambda", "-/1/-", "--beta", "ttt", "--format", "json"]);
    assert_eq!(json(&out)["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_counts() {
    let out = run(&["verify", "--max-n", "1", "--max-d", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dpartitions"], 1);
    assert_eq!(v["characters"], 2);
    assert_eq!(v["passed"], true);
    let out = run(&["verify", "--max-n", "3", "--max-d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all checks pass"));
}

#[test]
fn usage_errors_name_the_token() {
    let out = run(&["eval", "--lambda", "2,1", "--beta", "s", "--g", "1 2 x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`x`"));
    assert!(out.stdout.is_empty());
    let out = run(&["eval", "--lambda", "2,1", "--beta", "s", "--d", "2", "--g", "1 2 3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["table", "--lambda", "2,1", "--beta", "q"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`q`"));
    let out = run(&["table", "--n", "4", "--lambda", "2,1", "--beta", "s"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_refusal_has_no_output() {
    let out = run(&["table", "--lambda", "4,3", "--beta", "t", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    let out = run(&["immanant", "--lambda", "7/-/-", "--beta", "ttt"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["immanant", "--lambda", "1/1", "--beta", "st", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
