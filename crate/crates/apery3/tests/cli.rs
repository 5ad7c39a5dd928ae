//! End-to-end tests of the command-line front end, driving the built binary
//! and parsing its JSON output.

use std::collections::BTreeSet;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_apery3"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).expect("stdout is utf-8"),
        String::from_utf8(output.stderr).expect("stderr is utf-8"),
    )
}

fn run_json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    serde_json::from_str(stdout.trim()).expect("stdout is one JSON record")
}

fn json_lines(stdout: &str) -> Vec<Value> {
    stdout
        .lines()
        .map(|line| serde_json::from_str(line).expect("JSON line"))
        .collect()
}

#[test]
fn eval_reports_the_theorem_residue() {
    let record = run_json(&["eval", "--n", "5", "--r", "2", "--s", "1"]);
    assert_eq!(record["n"], "5");
    assert_eq!(record["digits_msd"], "12");
    assert_eq!(record["method"], "theorem");
    assert_eq!(record["residue"], 3);
    assert_eq!(record["modulus"], 9);
    assert!(record.get("rule_id").is_none());
}

#[test]
fn eval_accepts_base3_indices() {
    let record = run_json(&["eval", "--n", "3:12", "--r", "2", "--s", "1"]);
    assert_eq!(record["n"], "3:12");
    assert_eq!(record["digits_msd"], "12");
    assert_eq!(record["residue"], 3);
}

#[test]
fn eval_methods_agree_on_small_indices() {
    for n in ["0", "1", "7", "40", "100"] {
        let theorem = run_json(&["eval", "--n", n, "--r", "2", "--s", "2"]);
        let oracle = run_json(&["eval", "--n", n, "--r", "2", "--s", "2", "--method", "oracle"]);
        let classify = run_json(&["eval", "--n", n, "--r", "2", "--s", "2", "--method", "classify"]);
        assert_eq!(theorem["residue"], oracle["residue"], "n = {n}");
        assert_eq!(theorem["residue"], classify["residue"], "n = {n}");
        assert_eq!(classify["rule_id"], "Ap22");
    }
}

#[test]
fn eval_mod3_reduces_the_mod9_residue() {
    let record = run_json(&["eval", "--n", "5", "--r", "2", "--s", "1", "--method", "mod3"]);
    assert_eq!(record["modulus"], 3);
    assert_eq!(record["residue"], 0);
}

#[test]
fn eval_handles_huge_base3_indices() {
    let digits: String = std::iter::once('1')
        .chain(std::iter::repeat('2').take(99))
        .collect();
    let record = run_json(&["eval", "--n", &format!("3:{digits}"), "--r", "2", "--s", "1"]);
    assert_eq!(record["digits_msd"].as_str().unwrap().len(), 100);
    let residue = record["residue"].as_u64().unwrap();
    assert!(residue < 9);
}

#[test]
fn eval_rejects_malformed_indices() {
    let (code, _, stderr) = run(&["eval", "--n", "zz", "--r", "2", "--s", "1"]);
    assert_eq!(code, 2, "{stderr}");
    let (code, _, _) = run(&["eval", "--n", "3:13", "--r", "2", "--s", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn eval_rejects_r_zero() {
    let (code, _, stderr) = run(&["eval", "--n", "5", "--r", "0", "--s", "1"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
}

#[test]
fn eval_oracle_rejects_indices_past_the_bound() {
    let (code, _, stderr) = run(&["eval", "--n", "100000", "--r", "2", "--s", "1", "--method", "oracle"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("digit evaluator"), "stderr: {stderr}");
}

#[test]
fn verify_grid_modes_pass_cleanly() {
    let (code, stdout, stderr) = run(&[
        "verify",
        "--max-n",
        "30",
        "--r",
        "1..3",
        "--s",
        "0..2",
        "--modes",
        "theorem-vs-oracle,classify-vs-theorem",
    ]);
    assert_eq!(code, 0, "{stderr}");
    let summaries = json_lines(&stdout);
    assert_eq!(summaries.len(), 2);

    assert_eq!(summaries[0]["mode"], "theorem-vs-oracle");
    assert_eq!(summaries[0]["param_pairs"], 9);
    assert_eq!(summaries[0]["checks"], 270);
    assert_eq!(summaries[0]["mismatches"], 0);
    assert_eq!(summaries[0]["first_mismatch"], Value::Null);

    assert_eq!(summaries[1]["mode"], "classify-vs-theorem");
    assert_eq!(summaries[1]["param_pairs"], 8);
    assert_eq!(summaries[1]["skipped_pairs"], 1);
    assert_eq!(summaries[1]["mismatches"], 0);
    assert_eq!(summaries[1]["forbidden_hits"], 0);
}

#[test]
fn verify_comma_lists_select_pairs() {
    let (code, stdout, _) = run(&[
        "verify",
        "--max-n",
        "20",
        "--r",
        "2,5",
        "--s",
        "1,3",
        "--modes",
        "theorem-vs-oracle",
    ]);
    assert_eq!(code, 0);
    let summaries = json_lines(&stdout);
    assert_eq!(summaries[0]["param_pairs"], 4);
    assert_eq!(summaries[0]["checks"], 80);
    assert_eq!(summaries[0]["mismatches"], 0);
}

#[test]
fn verify_gessel_defaults_to_the_member_classes() {
    let (code, stdout, stderr) = run(&["verify", "--max-n", "50", "--modes", "gessel"]);
    assert_eq!(code, 0, "{stderr}");
    let summaries = json_lines(&stdout);
    assert_eq!(summaries.len(), 1);
    assert_eq!(summaries[0]["mode"], "gessel");
    assert_eq!(summaries[0]["param_pairs"], 4);
    assert_eq!(summaries[0]["checks"], 4 * (9 + 50));
    assert_eq!(summaries[0]["mismatches"], 0);
}

#[test]
fn verify_gessel_rejects_non_member_pairs() {
    let (code, _, stderr) = run(&["verify", "--r", "2", "--s", "1", "--modes", "gessel"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("bare-product"), "stderr: {stderr}");
}

#[test]
fn verify_rejects_unknown_modes() {
    let (code, _, _) = run(&["verify", "--modes", "nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn table_jsonl_rows_carry_both_routes() {
    let (code, stdout, _) = run(&["table", "--max-n", "2", "--r", "2", "--s", "1"]);
    assert_eq!(code, 0);
    let rows = json_lines(&stdout);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["n"], 0);
    assert_eq!(rows[0]["digits_msd"], "0");
    assert_eq!(rows[0]["mod9"], 1);
    assert_eq!(rows[0]["mod3"], 1);
    assert_eq!(rows[0]["rule_id"], "Ap27");
    assert_eq!(rows[0]["mod9_by_pattern"], 1);
    assert_eq!(rows[1]["mod9"], 3);
    assert_eq!(rows[1]["mod3"], 0);
    assert_eq!(rows[2]["digits_msd"], "2");
    for row in &rows {
        assert_eq!(row["mod9"], row["mod9_by_pattern"], "routes must agree");
    }
}

#[test]
fn table_csv_has_header_and_rows() {
    let (code, stdout, _) = run(&["table", "--max-n", "2", "--r", "2", "--s", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "n,digits_msd,mod9,mod3,rule_id,mod9_by_pattern");
    assert_eq!(lines[1], "0,0,1,1,Ap27,1");
    assert_eq!(lines[2], "1,1,3,0,Ap27,3");
}

#[test]
fn table_omits_rule_columns_for_uncovered_pairs() {
    let (code, stdout, _) = run(&["table", "--max-n", "1", "--r", "6", "--s", "0"]);
    assert_eq!(code, 0);
    let rows = json_lines(&stdout);
    assert_eq!(rows.len(), 2);
    for row in &rows {
        assert!(row.get("rule_id").is_none());
        assert!(row.get("mod9_by_pattern").is_none());
        assert!(row.get("mod9").is_some());
    }
}

#[test]
fn bench_reports_timings_and_oracle_agreement() {
    let record = run_json(&[
        "bench",
        "--digit-count",
        "6",
        "--trials",
        "2",
        "--r",
        "2",
        "--s",
        "1",
        "--compare-oracle",
    ]);
    assert_eq!(record["digit_count"], 6);
    assert_eq!(record["trials"], 2);
    assert_eq!(record["oracle_match"], true);
    assert!(record["min_ns"].as_u64().unwrap() > 0);
    assert!(record["mean_ns"].as_u64().unwrap() >= record["min_ns"].as_u64().unwrap());
}

#[test]
fn bench_rejects_oracle_comparison_on_long_strings() {
    let (code, _, stderr) = run(&[
        "bench",
        "--digit-count",
        "9",
        "--trials",
        "1",
        "--r",
        "2",
        "--s",
        "1",
        "--compare-oracle",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("digit-count"), "stderr: {stderr}");
}

#[test]
fn classes_lists_every_rule_once() {
    let (code, stdout, _) = run(&["classes"]);
    assert_eq!(code, 0);
    let rules = json_lines(&stdout);
    assert_eq!(rules.len(), 33);
    let ids: BTreeSet<&str> = rules
        .iter()
        .map(|rule| rule["rule_id"].as_str().unwrap())
        .collect();
    assert_eq!(ids.len(), 33);
    assert!(ids.contains("Ap27"));
    assert!(ids.contains("Ap72"));
    for rule in &rules {
        assert!(!rule["hypothesis"].as_str().unwrap().is_empty());
    }
}
