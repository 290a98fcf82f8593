use std::path::PathBuf;
use std::process::{Command, Output};

use p3_convexity::io::parse_documents;
use p3_convexity::UnitIntervalModel;
use serde_json::Value;

fn p3conv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p3conv")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("object output is JSON")
}

fn fixture(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("p3conv-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const SAMPLE_CATERPILLAR: &str = "15\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n1 8\n1 9\n2 10\n3 11\n3 12\n5 13\n6 14\n";

#[test]
fn analyze_path_with_oracle() {
    let path = fixture("p4.txt", "4\n0 1\n1 2\n2 3\n");
    let out = p3conv(&["analyze", path.to_str().unwrap(), "--oracle", "--format", "object"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["class"], "caterpillar");
    for (formula, oracle, want) in [("g", "oracle_g", 3), ("h", "oracle_h", 3), ("tau", "oracle_tau", 1)] {
        assert_eq!(v[formula], want);
        assert_eq!(v[oracle], want);
    }
}

#[test]
fn analyze_sample_caterpillar() {
    let path = fixture("sample.txt", SAMPLE_CATERPILLAR);
    let out = p3conv(&["analyze", path.to_str().unwrap(), "--format", "object"]);
    let v = json(&out);
    assert_eq!(v["rds"], "14342331");
    assert_eq!(v["factors"], serde_json::json!(["1", "434", "23", "31"]));
    assert_eq!(v["basic_sequences"], 4);
    assert_eq!(v["p"], 3);
    assert_eq!(v["g"], 11);
}

#[test]
fn analyze_non_class_graph() {
    let path = fixture("c4.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    let out = p3conv(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--oracle"));
    let out = p3conv(&["analyze", path.to_str().unwrap(), "--oracle", "--format", "object"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["class"].as_str(), v["oracle_g"].as_u64(), v["oracle_h"].as_u64()), (Some("other"), Some(2), Some(2)));
    assert_eq!(v["oracle_tau"], 1);
}

#[test]
fn analyze_unit_interval_graph() {
    let path = fixture("strip.txt", "5\n0 1\n0 2\n1 2\n1 3\n2 3\n2 4\n3 4\n");
    let out = p3conv(&["analyze", path.to_str().unwrap(), "--oracle", "--format", "object"]);
    let v = json(&out);
    assert_eq!(v["class"], "unit-interval");
    assert_eq!(v["epsilon"], v["oracle_tau"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn analyze_reports_caps_and_bad_input() {
    let path = fixture("c6.txt", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let out = p3conv(&["analyze", path.to_str().unwrap(), "--oracle", "--max-oracle-n", "4"]);
    assert_eq!(out.status.code(), Some(3));
    let path = fixture("loop.txt", "3\n0 0\n");
    let out = p3conv(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(p3conv(&["analyze", "/nonexistent/graph.txt"]).status.code(), Some(1));
    assert_eq!(p3conv(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(p3conv(&["--help"]).status.code(), Some(0));
}

#[test]
fn generate_is_deterministic_and_valid() {
    let a = p3conv(&["generate", "uig-random", "--size", "8", "--seed", "7", "--count", "5"]);
    let b = p3conv(&["generate", "uig-random", "--size", "8", "--seed", "7", "--count", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let docs = parse_documents(&stdout(&a)).unwrap();
    assert_eq!(docs.len(), 5);
    for d in &docs {
        let order = d.order.as_ref().expect("order line");
        assert!(UnitIntervalModel::new(&d.graph().unwrap(), order).is_ok());
    }
    let c = p3conv(&["generate", "uig-2connected-random", "--size", "6", "--count", "3"]);
    assert_eq!(parse_documents(&stdout(&c)).unwrap().len(), 3);
}

#[test]
fn generate_exhaustive_kinds() {
    let out = p3conv(&["generate", "caterpillar-exhaustive", "--size", "5"]);
    assert_eq!(parse_documents(&stdout(&out)).unwrap().len(), 1 + 3 + 9 + 27);
    let out = p3conv(&["generate", "all-connected", "--size", "5"]);
    assert_eq!(parse_documents(&stdout(&out)).unwrap().len(), 21);
    let out = p3conv(&["generate", "all-connected", "--size", "12"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn crossval_exit_status_tracks_disagreements() {
    let out = p3conv(&["crossval", "caterpillar", "--max-n", "10", "--samples", "50", "--format", "object"]);
    assert_eq!(json(&out)["summary"]["disagreements"], 0);
    assert_eq!(out.status.code(), Some(0));
    let out = p3conv(&["crossval", "uig", "--max-n", "9", "--samples", "120", "--format", "object"]);
    let disagreements = json(&out)["summary"]["disagreements"].as_u64().unwrap();
    assert_eq!(out.status.code(), Some(if disagreements == 0 { 0 } else { 2 }));
    assert_eq!(p3conv(&["crossval", "nope"]).status.code(), Some(1));
}

#[test]
fn propcheck_writes_report() {
    let dir = std::env::temp_dir().join(format!("p3conv-prop-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("report.json");
    let out = p3conv(&["propcheck", "--max-n", "6", "--format", "object", "--output", file.to_str().unwrap()]);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(written, json(&out));
    assert_eq!(written["forward_violations"], 0);
    assert_eq!(written["graphs_checked"], 143);
    let minimal: Vec<&Value> =
        written["findings"].as_array().unwrap().iter().filter(|f| f["minimal"] == true).collect();
    assert_eq!(minimal.len(), 1);
    assert_eq!(minimal[0]["graph6"], "DsW");
    assert_eq!(out.status.code(), Some(2));
}
