use std::process::{Command, Output};

use serde_json::Value;

fn massform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_massform")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    r.records().map(|rec| rec.unwrap().iter().map(str::to_string).collect()).collect()
}

fn validate(doc: &Value) {
    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{e} at {}", e.instance_path)).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

#[test]
fn verify_rr_21_to_200() {
    let out = massform(&["verify", "--id", "rr_21", "--degree", "200", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    validate(&doc);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["entries"][0]["status"], "pass");
    assert_eq!(doc["entries"][0]["degree"], 200);
}

#[test]
fn verify_hall_8_with_params() {
    let out = massform(&["verify", "--id", "hall_8", "--param", "lambda=1,1", "--prime", "3", "--degree", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["entries"][0]["params"]["lambda"], "1,1");
    assert_eq!(doc["entries"][0]["numeric"]["prime"], 3);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--id", "nope"][..],
        &["verify", "--id", "hall_7", "--param", "m=3"],
        &["verify", "--id", "gl_24", "--prime", "6"],
        &["verify", "--filter", "hall_*", "--param", "eps=plus"],
        &["verify", "--id", "rr_21", "--degree", "0"],
        &["verify", "--id", "hall_8", "--param", "lambda=3,3", "--degree", "5"],
        &["verify", "--bogus"],
        &["oracle", "aut", "--prime", "2", "--lambda", "9,9"],
        &["oracle", "aut", "--prime", "4", "--lambda", "1"],
        &["table", "--what", "partial-sums"],
    ] {
        let out = massform(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn filter_runs_are_canonical_and_schema_valid() {
    let args = ["verify", "--filter", "hall_*", "--canonical", "--jobs", "2"];
    let first = massform(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, massform(&args).stdout);
    let doc = json(&first);
    validate(&doc);
    let ids: Vec<_> = doc["entries"].as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap().to_string()).collect();
    assert_eq!(ids, ["hall_5", "hall_6", "hall_7", "hall_8"]);
    assert!(!stdout(&first).contains("millis"));
}

#[test]
fn diagnostics_and_sides_are_schema_valid() {
    let out = massform(&["verify", "--filter", "o_2?", "--sides"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    validate(&doc);
    for e in doc["entries"].as_array().unwrap() {
        assert_eq!(e["status"], "diagnostic");
        assert!(e["diagnostics"].as_array().unwrap().iter().any(|f| f["agrees"] == false));
    }
}

#[test]
fn entry_errors_inside_a_filter_run_are_reported() {
    let out = massform(&["verify", "--filter", "hall_[78]", "--degree", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = json(&out);
    validate(&doc);
    assert!(doc["entries"].as_array().unwrap().iter().any(|e| e["status"] == "error"));
}

#[test]
fn csv_report_and_out_file() {
    let dir = std::env::temp_dir().join(format!("massform-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = massform(&["verify", "--id", "thm3_10", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("id,mode,status,degree,checks"));
    assert!(text.lines().nth(1).unwrap().starts_with("thm3_10,formal,pass,40,2"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn aut_orders_table() {
    let out = massform(&["table", "--what", "aut-orders", "--prime", "2", "--max-weight", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[0], ["", "1", "1", "1"]);
    let rank_two = rows.iter().find(|r| r[0] == "1,1").unwrap();
    assert_eq!(rank_two[2], "6");
}

#[test]
fn empty_range_gives_a_header_only_table() {
    let out = massform(&["table", "--what", "aut-orders", "--min-weight", "3", "--max-weight", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "partition,order,aut,hol\n");
}

#[test]
fn partial_sums_are_monotone() {
    let out = massform(&["table", "--what", "partial-sums", "--id", "hall_5", "--prime", "2", "--degree", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 31);
    let values: Vec<(i128, i128)> = rows
        .iter()
        .map(|r| {
            let (n, d) = r[1].split_once('/').unwrap();
            (n.parse().unwrap(), d.parse().unwrap())
        })
        .collect();
    assert!(values.windows(2).all(|w| w[0].0 * w[1].1 <= w[1].0 * w[0].1));
}

#[test]
fn classical_orders_table() {
    let out = massform(&["table", "--what", "classical-orders", "--prime", "3", "--max-dim", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let gl2 = doc["rows"].as_array().unwrap().iter().find(|r| r["family"] == "GL" && r["dim"] == "2").unwrap();
    assert_eq!(gl2["order"], "48");
}

#[test]
fn oracles() {
    let rows = csv_rows(&massform(&["oracle", "aut", "--prime", "2", "--lambda", "2,1"]));
    assert_eq!(rows, [["2", "2,1", "8"]]);
    let rows = csv_rows(&massform(&["oracle", "aut", "--prime", "2", "--lambda", "2,1", "--direct"]));
    assert_eq!(rows[0][2], "8");
    let rows = csv_rows(&massform(&["oracle", "hnf", "--d", "2", "--prime", "2", "--k", "1"]));
    assert_eq!(rows, [["2", "2", "1", "3"]]);
    let rows = csv_rows(&massform(&["oracle", "subspace", "--n", "2", "--prime", "2"]));
    assert_eq!(rows[0][2], "5");
    let doc = json(&massform(&["oracle", "cayley", "--case", "klein_four", "--format", "json"]));
    let auts: Vec<_> = doc["rows"].as_array().unwrap().iter().map(|r| r["aut"].as_str().unwrap()).collect();
    assert_eq!(auts[0], "6");
}

#[test]
fn list_and_schema() {
    let rows = csv_rows(&massform(&["list"]));
    assert!(rows.iter().any(|r| r[0] == "hall_8" && r[2].contains("lambda")));
    let schema = json(&massform(&["schema"]));
    assert_eq!(schema["properties"]["schema_version"]["const"], 1);
}
