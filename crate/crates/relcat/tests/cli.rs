use std::path::PathBuf;
use std::process::Command;

use relcat::cli::{run, Output};
use serde_json::{json, Value};

fn write(name: &str, v: &Value) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-inputs");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string_pretty(v).unwrap()).unwrap();
    path.to_string_lossy().into_owned()
}

fn relcat(args: &[&str]) -> Output {
    run(std::iter::once("relcat").chain(args.iter().copied()))
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("not json ({e}): {}", out.stdout))
}

fn partition_doc() -> Value {
    json!({"preorder": {"vertices": 3, "edges": [[0,0],[0,1],[1,0],[1,1],[2,2]]}})
}

#[test]
fn odot_of_worked_example() {
    let r = write("odot_r.json", &json!({"graph": {"edges": [[0,1],[1,2]]}}));
    let s = write("odot_s.json", &json!({"graph": {"edges": [[1,2],[2,0]]}}));
    let out = relcat(&["odot", "--base", "3", "--lhs", &r, "--rhs", &s]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("image: (0,2) (1,0)"), "{}", out.stdout);

    let out = relcat(&["--json", "odot", "--base", "3", "--lhs", &r, "--rhs", &s]);
    assert_eq!(json_of(&out)["relation"]["image"], json!([[0, 2], [1, 0]]));
}

#[test]
fn partition_monoid_is_commutative() {
    let m = write("eq.json", &partition_doc());
    let out = relcat(&["commutative", "--monoid", &m]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("witness"), "{}", out.stdout);

    let v = json_of(&relcat(&["--json", "commutative", "--monoid", &m, "--bound", "8"]));
    assert!(v["witness"]["map"].is_object() || v["witness"]["map"].is_array() || v["witness"]["map"].is_string(), "{v}");
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn scalar_triple_is_in_the_subgroup() {
    let t = write(
        "scalar2.json",
        &json!({"triple": {"ambient": "finvect_tensor", "universe": [1, 2, 4], "scalar": 2}}),
    );
    let out = relcat(&["check-triple", "--triple", &t]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    let v = json_of(&relcat(&["--json", "check-triple", "--triple", &t]));
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn failed_checks_exit_one() {
    let m = write(
        "chain.json",
        &json!({"preorder": {"vertices": 2, "edges": [[0,0],[0,1],[1,1]]}}),
    );
    let out = relcat(&["commutative", "--monoid", &m]);
    assert_eq!(out.code, 1, "{}{}", out.stdout, out.stderr);

    let t = write(
        "bad_mu.json",
        &json!({"triple": {
            "ambient": "finvect_tensor",
            "universe": [1, 2],
            "mu": [
                {"objs": [1], "mor": {"dom": 1, "cod": 1, "matrix": [[1]]}},
                {"objs": [2], "mor": {"dom": 2, "cod": 2, "matrix": [["2", 0], [0, 1]]}}
            ]
        }}),
    );
    let out = relcat(&["--json", "check-triple", "--triple", &t]);
    assert_eq!(out.code, 1, "{}{}", out.stdout, out.stderr);
    assert!(json_of(&out)["summary"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn malformed_input_exits_two() {
    let missing = relcat(&["phi", "--relation", "/nonexistent/relation.json"]);
    assert_eq!(missing.code, 2);
    assert!(missing.stderr.starts_with("relcat:"));

    let garbage = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(relcat(&["phi", "--relation", garbage.to_str().unwrap()]).code, 2);

    let bad_rat = write(
        "bad_rational.json",
        &json!({"triple": {"ambient": "finvect_tensor", "universe": [1, 2], "scalar": "1/0"}}),
    );
    let out = relcat(&["--json", "check-triple", "--triple", &bad_rat]);
    assert_eq!(out.code, 2);
    assert_eq!(json_of(&out)["exit"], 2);

    assert_eq!(relcat(&["no-such-command"]).code, 2);
    assert_eq!(relcat(&["odot", "--lhs", "x.json"]).code, 2);
}

#[test]
fn phi_then_psi_round_trips_through_files() {
    let g = write("graph.json", &json!({"graph": {"vertices": 3, "edges": [[0,1],[1,2],[1,2]]}}));
    let out = relcat(&["--json", "phi", "--relation", &g]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let m = write("bicomodule.json", &json_of(&out));
    let back = json_of(&relcat(&["--json", "psi", "--bicomodule", &m]));
    assert_eq!(back["relation"]["edges"], json!([[0, 1], [1, 2], [1, 2]]));
    assert_eq!(relcat(&["check-bicomodule", "--bicomodule", &m]).code, 0);
}

#[test]
fn generate_lists_paths_by_stage() {
    let g = write("cycle.json", &json!({"graph": {"vertices": 2, "edges": [[0,1],[1,0]]}}));
    let v = json_of(&relcat(&["--json", "generate", "--relation", &g, "--depth", "3"]));
    let stages = v["stages"].as_array().unwrap();
    assert_eq!(stages.len(), 3);
    for s in stages {
        assert_eq!(s["carrier"], 2);
    }
    assert_eq!(stages[1]["paths"], json!([[0, 1], [1, 0]]));
}

#[test]
fn solve_comonoids_and_seeded_output_is_deterministic() {
    let v = json_of(&relcat(&["--json", "solve-comonoids", "--dim", "2", "--field", "2"]));
    assert_eq!(v["count"], v["solutions"].as_array().unwrap().len());

    let s = write(
        "builtin.json",
        &json!({"structure": {"ambient": "finvect_tensor"}, "universe": [1, 2], "generators": {"random": 2}}),
    );
    let a = relcat(&["--json", "--seed", "7", "check-structure", "--structure", &s]);
    let b = relcat(&["--json", "--seed", "7", "check-structure", "--structure", &s]);
    assert_eq!(a.code, 0, "{}{}", a.stdout, a.stderr);
    assert_eq!(a, b);
}

#[test]
fn quantize_transports_a_structure() {
    let t = write(
        "scalar3.json",
        &json!({"triple": {"ambient": "finvect_tensor", "universe": [1, 2, 4], "scalar": "3/2"}}),
    );
    let out = relcat(&["--json", "quantize", "--triple", &t]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json_of(&out);
    let s = write("quantized.json", &json!({"structure": v["structure"], "universe": [1, 2, 4]}));
    assert_eq!(relcat(&["check-structure", "--structure", &s]).code, 0);
}

#[test]
fn binary_reports_exit_status() {
    let m = write("eq_bin.json", &partition_doc());
    let status = Command::new(env!("CARGO_BIN_EXE_relcat")).args(["commutative", "--monoid", &m]).output().unwrap();
    assert_eq!(status.status.code(), Some(0));
    let status = Command::new(env!("CARGO_BIN_EXE_relcat")).args(["phi", "--relation", "/nonexistent"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
}
