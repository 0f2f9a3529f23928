use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn lenpres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lenpres"))
        .args(args)
        .output()
        .expect("run lenpres")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = lenpres(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn member_plain_and_star() {
    let out = lenpres(&[
        "member",
        "--n",
        "5",
        "--l",
        "3",
        "--variant",
        "plain",
        "--element",
        "1 1 1 4 4",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "true\n");

    let v = json(&[
        "member",
        "--n",
        "5",
        "--l",
        "3",
        "--variant",
        "star",
        "--element",
        "1 1 1 4 4",
    ]);
    assert_eq!(v["member"], false);
    assert_eq!(v["violation"]["x_image"], 1);
    assert_eq!(v["violation"]["y_image"], 4);
    assert_eq!(v["violation"]["x"], 3);
    assert_eq!(v["violation"]["y"], 4);
}

#[test]
fn enumerate_listing_and_file() {
    let out = lenpres(&["enumerate", "--n", "3", "--l", "1", "--variant", "plain"]);
    assert_eq!(
        stdout(&out),
        "# T_3(1)\n# size 6\n1 2 1\n1 2 3\n2 1 2\n2 3 2\n3 2 1\n3 2 3\n"
    );
    let v = json(&["enumerate", "--n", "4", "--l", "2", "--variant", "star"]);
    assert_eq!(v["size"], 8);
    assert_eq!(v["elements"].as_array().unwrap().len(), 8);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.txt");
    let out = lenpres(&[
        "enumerate",
        "--n",
        "4",
        "--variant",
        "full",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 256);
}

#[test]
fn regular_element_and_report() {
    let v = json(&[
        "regular",
        "--n",
        "6",
        "--l",
        "1",
        "--element",
        "6 5 4 5 4 3",
    ]);
    assert_eq!(v["regular"], false);
    assert_eq!(v["stats"]["elements_scanned"], 104);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let v = json(&[
        "regular",
        "--n",
        "5",
        "--l",
        "2",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(v["regular"], false);
    assert_eq!(v["size"], 48);
    for key in [
        "spec",
        "size",
        "regular",
        "irregular_elements",
        "witnesses",
        "stats",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let saved: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(saved, v);
}

#[test]
fn witness_sources() {
    let v = json(&["witness", "--n", "4", "--l", "2", "--element", "1 1 3 3"]);
    assert_eq!(v["witness"], "1 2 3 4");
    assert_eq!(v["source"], "constructed");
    assert_eq!(v["verified"], true);

    let v = json(&["witness", "--n", "5", "--l", "4", "--element", "1 2 3 4 5"]);
    assert_eq!(v["source"], "oracle-found");

    let v = json(&[
        "witness",
        "--n",
        "6",
        "--l",
        "1",
        "--element",
        "6 5 4 5 4 3",
    ]);
    assert_eq!(v["witness"], Value::Null);

    let out = lenpres(&[
        "witness",
        "--n",
        "5",
        "--l",
        "3",
        "--variant",
        "star",
        "--element",
        "1 1 1 4 4",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn counterexamples() {
    let v = json(&["counterexample", "--n", "6"]);
    assert_eq!(v["result"], "6 5 4 5 4 3");
    let v = json(&["counterexample", "--n", "7", "--l", "2"]);
    assert_eq!(v["result"], "3 3 5 1 7 3 5");
    assert!(v["trace"].as_array().unwrap().len() > 1);
    let v = json(&[
        "counterexample",
        "--n",
        "5",
        "--l",
        "3",
        "--kind",
        "strictness",
    ]);
    assert_eq!(v["result"], "1 1 1 4 4");
    assert_eq!(
        lenpres(&["counterexample", "--n", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn closure_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let gens = dir.path().join("gens.txt");
    fs::write(&gens, "# generators\n2 1 2\n3 2 1\n").unwrap();
    let v = json(&["closure", "--n", "3", "--gens", gens.to_str().unwrap()]);
    assert_eq!(v["size"], 6);
    let missing = lenpres(&["closure", "--n", "3", "--gens", "/nonexistent/gens.txt"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn decompose_regimes() {
    let out = lenpres(&["decompose", "--n", "5", "--l", "3"]);
    assert_eq!(stdout(&out), "pairs: (1, 4) (2, 5)\nmiddle: {3}\n");
    let v = json(&["decompose", "--n", "7", "--l", "2"]);
    assert_eq!(v["decomposition"]["regime"], "classes");
    assert_eq!(v["decomposition"]["classes"][0]["multiplicity"], 3);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lenpres(&["member", "--n", "5"]).status.code(), Some(2));
    assert_eq!(lenpres(&["frobnicate"]).status.code(), Some(2));
    let bad = lenpres(&["member", "--n", "3", "--l", "1", "--element", "1 2 4"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("image 4"));
    assert_eq!(lenpres(&["verify", "--max-n", "8"]).status.code(), Some(2));
}

#[test]
fn verify_small_passes() {
    let out = lenpres(&["verify", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("24 claims, 0 failed\n"));

    let v = json(&["verify", "--max-n", "6"]);
    let claims = v.as_array().unwrap();
    let dich = claims
        .iter()
        .find(|c| c["id"] == "length-one-regular-iff-small-degree")
        .unwrap();
    let six = dich["evidence"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["n"] == 6)
        .unwrap();
    assert_eq!(six["element"], "6 5 4 5 4 3");
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = lenpres(&[
        "--cache",
        cache,
        "enumerate",
        "--n",
        "5",
        "--l",
        "2",
        "--variant",
        "star",
    ]);
    assert!(dir.path().join("T_5_2_star.txt").exists());
    let second = lenpres(&[
        "--cache",
        cache,
        "enumerate",
        "--n",
        "5",
        "--l",
        "2",
        "--variant",
        "star",
    ]);
    assert_eq!(first.stdout, second.stdout);
}
