//! End-to-end checks of the command-line interface.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2srg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn build_writes_reloadable_graph6_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["build", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    for name in ["gamma.g6", "gamma-prime.g6", "complement.g6"] {
        assert!(dir.path().join(name).exists(), "{name} missing");
    }
    // the exported Γ' reloads and re-verifies
    let encoded = std::fs::read_to_string(dir.path().join("gamma-prime.g6")).unwrap();
    let graph = g2srg::graph6::decode(encoded.trim()).unwrap();
    assert_eq!(
        graph.check_srg().params().map(|p| p.as_tuple()),
        Some((36, 21, 12, 12))
    );
}

#[test]
fn build_stdout_lists_three_graphs() {
    let out = run(&["build"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains("gamma\t"));
    assert!(text.contains("complement\t"));
}

#[test]
fn search_switch_reports_924_candidates_6_valid() {
    let out = run(&["search-switch", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["examined"], 924);
    assert_eq!(value["valid"], 6);
    assert_eq!(value["candidates"].as_array().unwrap().len(), 924);
}

#[test]
fn classify_edges_tallies() {
    let out = run(&["classify-edges", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["both_in_w"], 72);
    assert_eq!(value["both_outside_w"], 72);
    assert_eq!(value["crossing"], 108);
    assert_eq!(value["total"], 252);
    assert_eq!(value["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn aut_subcommand_reads_graph6() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    // 5-cycle and the complete graph on 4 vertices
    std::fs::write(&path, "DUW\nC~\n").unwrap();
    let out = run(&["aut", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let orders: Vec<u64> = value
        .as_array()
        .unwrap()
        .iter()
        .map(|item| item["group"]["order"].as_u64().unwrap())
        .collect();
    assert_eq!(orders, vec![10, 24]);

    // pruning disabled agrees
    let out = run(&["aut", path.to_str().unwrap(), "--no-prune", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value[0]["group"]["order"], 10);
}

#[test]
fn aut_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    std::fs::write(&path, "this is not graph6 at all\n").unwrap();
    let out = run(&["aut", path.to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn export_writes_the_artifact_set() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["export", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    for name in [
        "v1.json",
        "gamma.g6",
        "gamma-prime.g6",
        "complement.g6",
        "seidel-gamma.txt",
        "seidel-gamma-prime.txt",
        "two-graph.json",
        "aut-gamma.json",
        "aut-gamma-prime.json",
        "switch-candidates.json",
    ] {
        assert!(dir.path().join(name).exists(), "{name} missing");
    }
    let v1: serde_json::Value = read_json(&dir.path().join("v1.json"));
    assert_eq!(v1.as_array().unwrap().len(), 36);
    let tg: serde_json::Value = read_json(&dir.path().join("two-graph.json"));
    assert_eq!(tg["regular_lambda"], 18);
    let aut: serde_json::Value = read_json(&dir.path().join("aut-gamma-prime.json"));
    assert_eq!(aut["order"], 12096);
    // Seidel dump: 36 lines of 36 entries
    let seidel = std::fs::read_to_string(dir.path().join("seidel-gamma.txt")).unwrap();
    assert_eq!(seidel.lines().count(), 36);
    assert!(seidel.lines().all(|l| l.split_whitespace().count() == 36));
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_json_report_passes_with_exit_zero() {
    let out = run(&["verify", "--format", "json", "--seed", "7"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["passed"], true);
    assert_eq!(value["environment"]["seed"], 7);
    let claims = value["claims"].as_array().unwrap();
    assert!(claims.iter().all(|c| c["pass"] == true));
    // one summary record per acceptance criterion
    for number in 1..=11 {
        let id = format!("criterion-{number:02}");
        assert!(claims.iter().any(|c| c["id"] == id.as_str()), "{id} missing");
    }
}
