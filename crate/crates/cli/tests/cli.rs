use std::process::Command;

use edge_drs_cli::{run, EXIT_COMPUTE, EXIT_DEVIATIONS, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("edge-drs").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = invoke(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn edge_psi_of_sunlet() {
    let v = json(&["psi", "--graph", "sunlet:8", "--mode", "edge", "--json"]);
    assert_eq!(v["cardinality"], 3);
    assert_eq!(v["mode"], "edge");
    assert_eq!(v["set"].as_array().unwrap().len(), 3);
    assert!(v["subsets_examined"].as_u64().unwrap() > 0);
    assert!(v["elapsed_ms"].is_number());
}

#[test]
fn edge_dim_of_prism() {
    let v = json(&["dim", "--graph", "prism:7", "--mode", "edge", "--json"]);
    assert_eq!(v["cardinality"], 3);
    let (code, text, _) = invoke(&["dim", "--graph", "prism:7", "--mode", "edge"]);
    assert_eq!(code, EXIT_OK);
    assert!(text.contains("edge dim  3"), "{text}");
}

#[test]
fn vertex_invariants_of_small_graphs() {
    let v = json(&["dim", "--graph", "path:5", "--json", "--no-timing"]);
    assert_eq!(v["cardinality"], 1);
    assert_eq!(v["set"], serde_json::json!(["0"]));
    let v = json(&["psi", "--graph", "cycle:6", "--json"]);
    assert_eq!(v["cardinality"], 3);
}

#[test]
fn verify_reports() {
    let (code, out, _) = invoke(&["verify", "--family", "sunlet", "--n", "8", "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out.trim(),
        r#"{"family":"sunlet","n":8,"pairs_checked":120,"deviations":[]}"#
    );
    let (code, out, _) = invoke(&["verify", "--family", "prism", "--n", "6..14", "--json"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 9);
    assert!(lines
        .iter()
        .all(|l| l["deviations"] == serde_json::json!([])));
    let (code, _, err) = invoke(&["verify", "--family", "prism", "--n", "4..8"]);
    assert_eq!(code, EXIT_USAGE, "{err}");
    assert_ne!(EXIT_DEVIATIONS, EXIT_OK);
}

#[test]
fn generate_then_search_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let path = path.to_str().unwrap();
    let (code, _, _) = invoke(&["generate", "--graph", "sunlet:8", "--out", path]);
    assert_eq!(code, EXIT_OK);
    let spec = format!("file:{path}");
    let from_file = invoke(&[
        "psi",
        "--graph",
        &spec,
        "--mode",
        "edge",
        "--json",
        "--no-timing",
    ]);
    let direct = invoke(&[
        "psi",
        "--graph",
        "sunlet:8",
        "--mode",
        "edge",
        "--json",
        "--no-timing",
    ]);
    assert_eq!(from_file.0, EXIT_OK);
    assert_eq!(from_file.1, direct.1);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "psi",
        "--graph",
        "prism:9",
        "--mode",
        "edge",
        "--json",
        "--no-timing",
        "--all-optima",
    ];
    let first = invoke(&args).1;
    assert!(!first.contains("elapsed_ms"));
    assert_eq!(first, invoke(&args).1);
    for threads in ["1", "3"] {
        let mut with = args.to_vec();
        with.extend(["--threads", threads]);
        assert_eq!(first, invoke(&with).1);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(invoke(&["psi", "--graph", "sunlet:two"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["psi", "--graph", "sunlet:2"]).0, EXIT_USAGE);
    assert_eq!(
        invoke(&["psi", "--graph", "prism:7", "--mode", "both"]).0,
        EXIT_USAGE
    );
    assert_eq!(invoke(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["psi"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
    assert_eq!(
        invoke(&["psi", "--graph", "path:2", "--mode", "edge"]).0,
        EXIT_COMPUTE
    );
    let (code, _, err) = invoke(&[
        "psi", "--graph", "prism:12", "--mode", "edge", "--budget", "10",
    ]);
    assert_eq!(code, EXIT_COMPUTE);
    assert!(err.contains("budget"), "{err}");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.json");
    std::fs::write(&path, r#"{"order": 4, "edges": [[0, 1], [2, 3]]}"#).unwrap();
    let spec = format!("file:{}", path.display());
    assert_eq!(invoke(&["psi", "--graph", &spec]).0, EXIT_COMPUTE);
    let missing = format!("file:{}", dir.path().join("none.json").display());
    assert_eq!(invoke(&["psi", "--graph", &missing]).0, EXIT_COMPUTE);
}

#[test]
fn experiment_table() {
    let v = json(&["experiment", "--n", "5..6", "--json", "--no-timing"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let gp61 = rows.iter().find(|r| r["n"] == 6 && r["k"] == 1).unwrap();
    let prism = json(&["psi", "--graph", "prism:6", "--mode", "edge", "--json"]);
    assert_eq!(gp61["psi_e"], prism["cardinality"]);
    assert_eq!(gp61["psi_e"], 3);
    let petersen = rows.iter().find(|r| r["n"] == 5 && r["k"] == 2).unwrap();
    assert_eq!(petersen["psi_e_status"], "exact");
    assert_eq!(petersen["dim_e"], 4);

    let empty = json(&["experiment", "--n", "9..8", "--json"]);
    assert_eq!(empty["rows"], serde_json::json!([]));
    let (code, text, _) = invoke(&["experiment", "--n", "9..8"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(text.lines().count(), 1);
}

#[test]
fn experiment_falls_back_to_greedy() {
    let v = json(&[
        "experiment",
        "--n",
        "7",
        "--k",
        "2",
        "--budget",
        "3",
        "--json",
    ]);
    let row = &v["rows"][0];
    assert_eq!(row["psi_e_status"], "upper_bound_only");
    assert_eq!(row["dim_e_status"], "budget_exceeded");
    assert!(row["dim_e"].is_null());
    assert!(row["psi_e"].as_u64().unwrap() >= 4);
    let (_, text, _) = invoke(&["experiment", "--n", "7", "--k", "2", "--budget", "3"]);
    assert!(text.contains("upper bound only"), "{text}");
}

#[test]
fn reproduce_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.md");
    let path_s = path.to_str().unwrap();
    let v = json(&["reproduce", "--out", path_s, "--json", "--no-timing"]);
    assert_eq!(v["failures"], 0);
    let md = std::fs::read_to_string(&path).unwrap();
    assert!(md.starts_with("# "));
    assert!(md.contains("All "));
    assert!(
        md.contains("| sunlet | 14 | 2 | 2 | 3 | 3 |"),
        "sweep row missing"
    );
}

#[test]
fn generate_formats() {
    let (code, dot, _) = invoke(&["generate", "--graph", "prism:4", "--format", "dot"]);
    assert_eq!(code, EXIT_OK);
    assert!(dot.starts_with("graph"));
    let (_, line, _) = invoke(&["generate", "--graph", "sunlet:4", "--format", "line-dot"]);
    assert!(line.contains("e0"));
    let v = json(&["generate", "--graph", "gp:5:2"]);
    assert_eq!(v["order"], 10);
    assert_eq!(v["family"], "gp:5:2");
}

#[test]
fn distance_matrix_output() {
    let v = json(&["distances", "--graph", "path:3", "--json"]);
    assert_eq!(
        v["distances"],
        serde_json::json!([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    );
    let v = json(&[
        "distances",
        "--graph",
        "sunlet:4",
        "--mode",
        "edge",
        "--json",
    ]);
    assert_eq!(v["labels"].as_array().unwrap().len(), 8);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_edge-drs");
    let ok = Command::new(bin)
        .args(["psi", "--graph", "sunlet:6", "--mode", "edge", "--json"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["cardinality"], 3);
    let bad = Command::new(bin)
        .args(["dim", "--graph", "x"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
