use std::process::Command;

use braidmon_cli::{run, Outcome, EXIT_FALSE, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("braidmon").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = cli(args);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn equality_verdicts() {
    let yes = cli(&["eq", "5: 4 3 3 2 3", "5: 2 4 3 2 2"]);
    assert_eq!((yes.code, yes.stdout.trim()), (EXIT_OK, "true"));
    let no = cli(&["eq", "5: 1 3 2 2 3", "5: 2 1 3 3 2"]);
    assert_eq!((no.code, no.stdout.trim()), (EXIT_FALSE, "false"));
}

#[test]
fn canonical_form() {
    let out = cli(&["canon", "5: 2 3 1 3 2", "--pretty"]);
    assert_eq!(out.stdout, "5: 2 1 3 3 2\n");
    let v = json(&["canon", "5: 2 3 1 3 2"]);
    assert_eq!(v["word"], "5: 2 1 3 3 2");
    assert_eq!(v["label"], "x2x1x3x3x2");
    assert_eq!(v["canonical"]["letters"], serde_json::json!([2, 1, 3, 3, 2]));
}

#[test]
fn counts() {
    assert_eq!(json(&["enum-simple", "5", "--count"]), 34);
    assert_eq!(json(&["delta-divisors", "4", "--count"]), 24);
    let listed = json(&["enum-simple", "3"]);
    assert_eq!(listed, serde_json::json!(["3:", "3: 1", "3: 2", "3: 1 2", "3: 2 1"]));
    assert_eq!(cli(&["enum-simple", "3", "--pretty"]).stdout, "e\nx1\nx2\nx1x2\nx2x1\n");
}

#[test]
fn divisibility() {
    assert_eq!(cli(&["divides", "5: 1 3 2 3", "5: 1 2 1 3 2 1 4 3 2 1"]).code, EXIT_OK);
    assert_eq!(cli(&["divides", "3: 1 1", "3: 1 2 1"]).code, EXIT_FALSE);
    assert_eq!(cli(&["divides", "--left", "3: 2", "3: 1 2 1"]).code, EXIT_OK);
    assert_eq!(cli(&["divides", "--right", "3: 1 2", "3: 2 1"]).code, EXIT_FALSE);
}

#[test]
fn projection() {
    assert_eq!(json(&["project", "5: 1 3 2 3"]), serde_json::json!([4, 1, 3, 2, 5]));
}

#[test]
fn centralizers() {
    let v = json(&["centralizer", "--beta", "1", "--strands", "2", "--extend", "3"]);
    assert_eq!(v["count"], 2);
    assert_eq!(v["members"], serde_json::json!(["e", "x1"]));
    assert_eq!(v["extended"]["count"], 10);
    assert_eq!(v["extended"]["predicted_count"], 10);
    assert_eq!(v["extended"]["decomposition_holds"], true);
    let v = json(&["centralizer", "--beta", "4: 2"]);
    assert_eq!(v["count"], 2);
    let usage = cli(&["centralizer", "--beta", "1 2 1", "--strands", "3"]);
    assert_eq!(usage.code, EXIT_USAGE, "a non-simple beta is rejected");
}

#[test]
fn graphs() {
    let v = json(&["graph", "--family", "sigma", "--n", "3"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(v["edges"], serde_json::json!([["[2,3,1]", "[3,1,2]"]]));
    let dot = cli(&["graph", "--family", "sb", "--n", "3", "--dot", "--pretty"]).stdout;
    assert!(dot.starts_with("graph G {\n"));
    assert!(dot.contains("\"x1x2\";"));
    let v = json(&["graph", "--family", "sb", "--n", "5"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 33);
}

#[test]
fn planarity_exit_codes() {
    let planar = cli(&["planar", "--family", "sb", "--n", "5"]);
    assert_eq!(planar.code, EXIT_OK);
    let v: Value = serde_json::from_str(&planar.stdout).unwrap();
    assert_eq!(v["planar"], true);
    assert!(v["witness"].is_null());

    for (family, n) in [("sb", "6"), ("ssigma", "5"), ("sigma", "5")] {
        let out = cli(&["planar", "--family", family, "--n", n]);
        assert_eq!(out.code, EXIT_FALSE, "{family} {n}");
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["planar"], false);
        let kind = v["witness"]["kind"].as_str().unwrap();
        assert!(kind == "K5" || kind == "K33", "{kind}");
    }
}

#[test]
fn parse_errors_carry_a_column() {
    let out = cli(&["canon", "5: 2 9 1"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("column 6"), "{}", out.stderr);
    let out = cli(&["eq", "5: 1", "5: 1 x"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("column"), "{}", out.stderr);
    assert_eq!(cli(&["graph", "--family", "nope", "--n", "3"]).code, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
}

#[test]
fn resource_caps() {
    assert_eq!(cli(&["enum-simple", "9", "--max-n", "8", "--count"]).code, EXIT_RESOURCE);
    assert_eq!(cli(&["delta-divisors", "6"]).code, EXIT_RESOURCE);
    let out = cli(&["eq", "6: 1 2 1 3 2 1 4 3 2 1 5 4 3 2 1", "6: 1 2 3 4 5 1 2 3 4 1 2 3 1 2 1", "--max-class-size", "10"]);
    assert_eq!(out.code, EXIT_RESOURCE, "{}", out.stderr);
    assert_eq!(json(&["enum-simple", "4", "--max-n", "4", "--count"]), 13);
}

#[test]
fn verify_subset() {
    let out = cli(&["verify", "--max-n-braids", "3", "--max-n-perms", "3", "--lemma-cases", "50"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("braidmon-cli-{}.json", std::process::id()));
    let out = cli(&["enum-simple", "4", "--count", "--out", path.to_str().unwrap()]);
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, ""));
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "13");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_braidmon");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let out = status(&["enum-simple", "5", "--count"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "34");
    assert_eq!(status(&["planar", "--family", "sb", "--n", "6"]).status.code(), Some(1));
    assert_eq!(status(&["canon", "5: 7"]).status.code(), Some(2));
    assert_eq!(status(&["delta-divisors", "7"]).status.code(), Some(3));
}
