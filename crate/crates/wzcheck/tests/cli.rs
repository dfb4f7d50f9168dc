use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn wzcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wzcheck"))
        .args(args)
        .env_remove("WZCHECK_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = wzcheck(args);
    let doc = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), doc)
}

fn records(doc: &Value) -> &Vec<Value> {
    doc["records"].as_array().unwrap()
}

#[test]
fn identity_grid_passes() {
    let (code, doc) = json(&[
        "verify-identity",
        "--theorem",
        "1",
        "--lmax",
        "4",
        "--smax",
        "3",
        "--mextent",
        "10",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(records(&doc).len(), 4 * 4 * 11);
    assert!(records(&doc).iter().all(|r| r["status"] == "PASS"));
    assert_eq!(doc["command"], "verify-identity");
}

#[test]
fn trivial_identity_point() {
    let (code, doc) = json(&[
        "verify-identity",
        "--theorem",
        "2",
        "--lmax",
        "1",
        "--smax",
        "0",
        "--mextent",
        "0",
    ]);
    assert_eq!(code, 0);
    let recs = records(&doc);
    assert_eq!(recs.len(), 1);
    let r = &recs[0];
    assert_eq!(r["kind"], "identity");
    assert_eq!(r["subject"], "T2");
    assert_eq!(r["params"]["l"], 1);
    assert_eq!(r["lhs"]["num"], "1");
    assert_eq!(r["lhs"]["den"], "1");
    assert_eq!(r["rhs"], r["lhs"]);
    assert!(r["elapsed_ms"].is_null());
}

#[test]
fn replay_marks_poles_not_applicable() {
    let (code, doc) = json(&[
        "verify-identity",
        "--theorem",
        "1",
        "--lmax",
        "2",
        "--smax",
        "2",
        "--mextent",
        "2",
        "--replay",
    ]);
    assert_eq!(code, 0);
    let na: Vec<&Value> = records(&doc)
        .iter()
        .filter(|r| r["status"] == "NOT-APPLICABLE")
        .collect();
    assert_eq!(na.len(), 3);
    assert!(na
        .iter()
        .all(|r| r["params"]["l"] == 1 && r["params"]["s"] == 2 && r["asserted"] == false));
}

#[test]
fn trace_is_opt_in() {
    let (_, plain) = json(&[
        "verify-identity",
        "--theorem",
        "1",
        "--lmax",
        "1",
        "--smax",
        "0",
        "--mextent",
        "2",
    ]);
    assert!(records(&plain).iter().all(|r| r.get("trace").is_none()));
    let (_, traced) = json(&[
        "verify-identity",
        "--theorem",
        "1",
        "--lmax",
        "1",
        "--smax",
        "0",
        "--mextent",
        "2",
        "--trace",
    ]);
    let last = records(&traced).last().unwrap();
    assert_eq!(last["trace"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        wzcheck(&["verify-identity", "--no-such-flag"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wzcheck(&["verify-identity", "--lmax", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        wzcheck(&["verify-congruences", "--primes", "3,9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wzcheck(&["verify-congruences", "--primes", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(wzcheck(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn symbolic_certificates_are_zero() {
    let (code, doc) = json(&["verify-wz", "--symbolic"]);
    assert_eq!(code, 0);
    let recs = records(&doc);
    assert_eq!(recs.len(), 2);
    for r in recs {
        assert_eq!(r["status"], "PASS");
        assert_eq!(r["detail"], "symbolic identity: ZERO polynomial");
    }
}

#[test]
fn zeilberger_grid_passes() {
    let out = wzcheck(&["verify-wz", "--certificate", "zeilberger", "--grid"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn ratio_sampling_and_edges() {
    let (code, doc) = json(&[
        "verify-wz",
        "--certificate",
        "wz",
        "--ratios",
        "--edges",
        "--lmax",
        "3",
        "--smax",
        "2",
        "--nextent",
        "4",
    ]);
    assert_eq!(code, 0);
    let recs = records(&doc);
    assert!(recs
        .iter()
        .any(|r| r["kind"] == "wz-ratio" && r["status"] == "PASS"));
    assert!(recs
        .iter()
        .filter(|r| r["kind"] == "wz-edge")
        .all(|r| r["asserted"] == false));
}

#[test]
fn mutated_g_fails() {
    let out = wzcheck(&[
        "verify-wz",
        "--grid",
        "--mutate-g",
        "--lmax",
        "2",
        "--smax",
        "1",
        "--nextent",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn congruences_pass() {
    let (code, doc) = json(&["verify-congruences", "--primes", "3,5,7", "--rmax", "2"]);
    assert_eq!(code, 0);
    let recs = records(&doc);
    assert!(recs
        .iter()
        .all(|r| r["status"] == "PASS" || r["status"] == "SKIP"));
    let spot = recs
        .iter()
        .find(|r| r["subject"] == "B/linear/half/b-linear-prime" && r["params"]["p"] == 3)
        .unwrap();
    assert_eq!(spot["residue"], "24");
    assert_eq!(spot["modulus"], "27");
    assert_eq!(spot["claim"], "PROVEN-REF");
    assert!(recs.iter().any(|r| r["claim"] == "CONJECTURE"));
}

#[test]
fn family_c_at_three_is_skipped_unless_forced() {
    let (code, doc) = json(&[
        "verify-congruences",
        "--primes",
        "3",
        "--family",
        "c",
        "--weight",
        "linear",
        "--rmax",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(records(&doc).iter().all(|r| r["status"] == "SKIP"));

    let (code, doc) = json(&[
        "verify-congruences",
        "--primes",
        "3",
        "--family",
        "c",
        "--weight",
        "linear",
        "--rmax",
        "1",
        "--force-p3",
        "--show-sum",
    ]);
    assert_eq!(code, 0);
    let recs = records(&doc);
    assert!(!recs.is_empty());
    for r in recs {
        assert_eq!(r["status"], "FAIL");
        assert_eq!(r["asserted"], false);
        assert_eq!(r["residue"], "57");
        assert_eq!(r["sum"]["num"], "21");
        assert_eq!(r["sum"]["den"], "16");
    }
}

#[test]
fn over_cap_prime_powers_are_skipped() {
    let (code, doc) = json(&[
        "verify-congruences",
        "--primes",
        "13",
        "--rmax",
        "2",
        "--family",
        "b",
        "--weight",
        "linear",
        "--max-terms",
        "100",
    ]);
    assert_eq!(code, 0);
    let statuses: Vec<&str> = records(&doc)
        .iter()
        .map(|r| r["status"].as_str().unwrap())
        .collect();
    assert!(statuses.contains(&"SKIP"));
    assert!(statuses.contains(&"PASS"));
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "verify-wz",
        "--lmax",
        "2",
        "--smax",
        "1",
        "--nextent",
        "3",
        "--samples",
        "20",
    ];
    let a = wzcheck(&args);
    let b = wzcheck(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_and_text_formats() {
    let out = wzcheck(&[
        "verify-identity",
        "--theorem",
        "2",
        "--lmax",
        "1",
        "--smax",
        "0",
        "--mextent",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers[0], "kind");
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[0][2], "l=1 s=0 M=0");
    assert_eq!(&rows[0][9], "PASS");

    let out = wzcheck(&[
        "verify-identity",
        "--theorem",
        "2",
        "--lmax",
        "1",
        "--smax",
        "0",
        "--mextent",
        "0",
        "--format",
        "text",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("verify-identity\n"));
    assert!(text.contains("PASS"));
    assert!(text.contains("total 1  pass 1"));
}

fn assert_written(path: &Path) {
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc["summary"]["total"], 2);
}

#[test]
fn output_path_and_directory_env() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("nested/report.json");
    let out = wzcheck(&[
        "verify-wz",
        "--symbolic",
        "--output",
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_written(&file);

    let out = Command::new(env!("CARGO_BIN_EXE_wzcheck"))
        .args(["verify-wz", "--symbolic"])
        .env("WZCHECK_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_written(&dir.path().join("verify-wz.json"));
}
