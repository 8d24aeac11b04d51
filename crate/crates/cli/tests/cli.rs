use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn osg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osg")).args(args).current_dir(root()).output().expect("osg runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = osg(&full);
    (serde_json::from_slice(&o.stdout).expect("valid json"), o.status.code().unwrap())
}

#[test]
fn validate_px3_fails_with_witness() {
    let o = osg(&["validate", "fixtures/px3.osg"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("associativity"), "{text}");
    assert!(text.contains("[e, a, a]"), "{text}");
}

#[test]
fn validate_good_fixture_passes() {
    for f in ["t1", "sl2", "lz2", "rz2", "n2"] {
        let o = osg(&["validate", &format!("fixtures/{f}.osg")]);
        assert_eq!(o.status.code(), Some(0), "{f}");
    }
    let o = osg(&["validate", "fixtures/c2.osg"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("compatibility"));
}

#[test]
fn analyze_sl2() {
    let (v, code) = json(&["analyze", "fixtures/sl2.osg"]);
    assert_eq!(code, 0);
    let findings = v["findings"].as_array().unwrap();
    let get = |kind: &str| findings.iter().find(|f| f["kind"] == kind).unwrap().clone();
    assert_eq!(get("idempotents")["E"], serde_json::json!(["e", "f"]));
    assert_eq!(get("greens")["H"], serde_json::json!([["e"], ["f"]]));
    assert_eq!(get("inverse")["inverse"]["holds"], true);
    assert_eq!(get("congruences")["least_equals_J"], true);
}

#[test]
fn analyze_lz2_inverse_witness() {
    let (v, _) = json(&["analyze", "fixtures/lz2.osg"]);
    let inv = v["findings"].as_array().unwrap().iter().find(|f| f["kind"] == "inverse").unwrap().clone();
    assert_eq!(inv["inverse"]["holds"], false);
    assert_eq!(inv["inverse"]["witness"]["elements"], serde_json::json!(["a", "a", "b"]));
}

#[test]
fn inverses_by_name_and_index() {
    let (by_name, code) = json(&["inverses", "fixtures/rz2.osg", "b"]);
    assert_eq!(code, 0);
    let (by_index, _) = json(&["inverses", "fixtures/rz2.osg", "1"]);
    assert_eq!(by_name["findings"], by_index["findings"]);
    assert_eq!(by_name["findings"][0]["V"], serde_json::json!(["a", "b"]));
    let (_, code) = json(&["inverses", "fixtures/c2.osg", "g"]);
    assert_eq!(code, 1);
    let o = osg(&["inverses", "fixtures/sl2.osg", "zz"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_theorems_order_two_labelled() {
    let o = osg(&["check-theorems", "--order", "2", "--labelled"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("24 candidate pairs, all groupings consistent"), "{text}");
}

#[test]
fn text_and_json_carry_the_same_findings() {
    for args in [
        vec!["analyze", "fixtures/lz2.osg"],
        vec!["check-theorems", "--order", "2"],
        vec!["enumerate", "--order", "2", "--up-to-iso"],
    ] {
        let text = stdout(&osg(&args));
        let (v, _) = json(&args);
        let findings = v["findings"].as_array().unwrap();
        let kinds: Vec<&str> = text.lines().filter(|l| !l.starts_with(' ')).collect();
        assert_eq!(kinds.len(), findings.len(), "{args:?}");
        for (line, f) in kinds.iter().zip(findings) {
            let kind = f["kind"].as_str().unwrap();
            if kind == "summary" {
                assert_eq!(*line, f["message"].as_str().unwrap());
            } else {
                assert!(line.starts_with(kind), "{line} vs {kind}");
                if let Some(s) = f["structure"].as_str() {
                    assert!(line.contains(s));
                }
            }
        }
    }
}

#[test]
fn enumerate_writes_a_corpus_that_sweeps_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("order3.osg");
    let out_s = out.to_str().unwrap();
    let (v, code) = json(&["enumerate", "--order", "3", "--up-to-iso", "--out", out_s]);
    assert_eq!(code, 0);
    let summary = v["findings"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(summary["count"], 173);
    let (sweep, code) = json(&["check-theorems", "--corpus", out_s]);
    assert_eq!(code, 0);
    let summary = sweep["findings"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(summary["structures"], 173);
    assert_eq!(summary["inconsistencies"], 0);
}

#[test]
fn enumerate_filter() {
    let (v, code) = json(&["enumerate", "--order", "2", "--up-to-iso", "--filter", "inverse"]);
    assert_eq!(code, 0);
    let (all, _) = json(&["enumerate", "--order", "2", "--up-to-iso"]);
    let count = |v: &Value| v["findings"].as_array().unwrap().last().unwrap()["count"].as_u64().unwrap();
    assert!(count(&v) < count(&all));
    assert!(count(&v) > 0);
}

#[test]
fn oracle_suites_agree() {
    for suite in ["px3", "enumeration", "posets", "ordered", "fixtures", "greens"] {
        let o = osg(&["oracle", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
}

#[test]
fn usage_and_input_errors_exit_two() {
    for args in [
        vec!["bogus"],
        vec!["validate", "fixtures/missing.osg"],
        vec!["enumerate", "--order", "6"],
        vec!["enumerate", "--order", "5"],
        vec!["enumerate", "--order", "2", "--filter", "nonsense"],
        vec!["check-theorems", "--order", "2", "--theorem", "THM_9"],
        vec!["check-theorems", "--order", "2", "--shard", "3/2"],
        vec!["check-theorems"],
        vec!["oracle", "nope"],
    ] {
        let o = osg(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_structure_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.osg");
    std::fs::write(&path, "elements a b\nmult\na a\n").unwrap();
    let o = osg(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}
