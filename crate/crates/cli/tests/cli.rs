//! End-to-end tests of the binary: schemas, exit codes, determinism.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_cliquetensor")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> (Output, Value) {
    let out = run(args);
    let value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {:?}", out));
    (out, value)
}

fn write_graph(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(text.as_bytes()).unwrap();
    path.display().to_string()
}

#[test]
fn cliques_counts_k4_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write_graph(dir.path(), "k4.el", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let (out, v) = run_json(&["cliques", &k4, "--r", "3"]);
    assert!(out.status.success());
    assert_eq!(v["count"], 4);

    let (_, v) = run_json(&["cliques", &k4, "--r", "3", "--list"]);
    assert_eq!(v["cliques"][0], serde_json::json!([0, 1, 2]));
    assert_eq!(v["cliques"][3], serde_json::json!([1, 2, 3]));
}

#[test]
fn cliques_petersen_is_triangle_free() {
    let dir = tempfile::tempdir().unwrap();
    let petersen = write_graph(
        dir.path(),
        "petersen.el",
        "0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n6 9\n6 8\n5 8\n",
    );
    let (out, v) = run_json(&["cliques", &petersen, "--r", "3"]);
    assert!(out.status.success());
    assert_eq!(v["count"], 0);
}

#[test]
fn spectral_octahedron_rho_is_four() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "turan",
        "--n",
        "6",
        "--r",
        "3",
        "--emit",
        dir.path().join("t36.el").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let (out, v) = run_json(&[
        "spectral",
        dir.path().join("t36.el").to_str().unwrap(),
        "--r",
        "3",
    ]);
    assert!(out.status.success());
    assert_eq!(v["rho"], 4.0);
    assert_eq!(v["converged"], true);
    assert_eq!(v["is_clique_connected"], true);
}

#[test]
fn spectral_k23_rho_is_sqrt6() {
    let dir = tempfile::tempdir().unwrap();
    let k23 = write_graph(dir.path(), "k23.el", "0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
    let (_, v) = run_json(&["spectral", &k23, "--r", "2"]);
    let rho = v["rho"].as_f64().unwrap();
    assert!((rho - 6f64.sqrt()).abs() < 1e-9);
}

#[test]
fn spectral_empty_graph() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write_graph(dir.path(), "empty10.el", "n 10\n");
    let (out, v) = run_json(&["spectral", &empty, "--r", "3"]);
    assert!(out.status.success());
    assert_eq!(v["rho"], 0.0);
    assert_eq!(v["components"].as_array().unwrap().len(), 0);
}

#[test]
fn bound_k4_equality() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write_graph(dir.path(), "k4.el", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let (out, v) = run_json(&["bound", &k4, "--r", "3"]);
    assert!(out.status.success());
    assert_eq!(v["c_r"], 4);
    assert_eq!(v["floor_bound"], 4);
    assert_eq!(v["equality"], true);
    assert_eq!(v["clique_regular"], true);
}

#[test]
fn bound_with_r_exceeding_n_reports_nulls() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write_graph(dir.path(), "k3.el", "0 1\n1 2\n0 2\n");
    let (out, v) = run_json(&["bound", &k3, "--r", "5"]);
    assert!(out.status.success());
    assert_eq!(v["c_r"], 0);
    assert_eq!(v["rho_r"], 0.0);
    assert_eq!(v["turan_rho"], Value::Null);
    assert_eq!(v["mantel_satisfied"], Value::Null);
    assert_eq!(v["erdos_bound"], 0);
}

#[test]
fn mantel_c5_satisfied_and_k5_inapplicable() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_graph(dir.path(), "c5.el", "0 1\n1 2\n2 3\n3 4\n0 4\n");
    let (out, v) = run_json(&["mantel", &c5, "--r", "2"]);
    assert!(out.status.success());
    assert_eq!(v["applicable"], true);
    assert_eq!(v["satisfied"], true);
    assert!((v["rho"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    assert!((v["turan_rho"].as_f64().unwrap() - 6f64.sqrt()).abs() < 1e-9);

    let k5 = write_graph(
        dir.path(),
        "k5.el",
        "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n",
    );
    let (out, v) = run_json(&["mantel", &k5, "--r", "2"]);
    assert!(out.status.success());
    assert_eq!(v["applicable"], false);
    assert_eq!(v["satisfied"], Value::Null);
}

#[test]
fn turan_emits_parseable_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t0528.el");
    let (out, v) = run_json(&[
        "turan",
        "--n",
        "5",
        "--r",
        "2",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(v["parts"], serde_json::json!([2, 3]));
    assert_eq!(v["clique_count"], 6);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n 5\n"));
    assert_eq!(text.lines().count(), 7); // header + 6 edges
}

#[test]
fn scan_exhaustive_n5_r2() {
    let (out, v) = run_json(&["scan", "--n", "5", "--r", "2", "--mode", "exhaustive"]);
    assert!(out.status.success());
    assert_eq!(v["violations"], 0);
    assert_eq!(v["equality_witnesses"], 10);
    assert!((v["max_rho"].as_f64().unwrap() - 6f64.sqrt()).abs() < 1e-8);
    for w in v["witnesses"].as_array().unwrap() {
        assert_eq!(w["matches_turan_degrees"], true);
    }
}

#[test]
fn gap_table_contains_the_28_3_row() {
    let (out, v) = run_json(&["gap-table", "--n", "30", "--r", "3"]);
    assert!(out.status.success());
    let row = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|row| row["n"] == 28 && row["r"] == 3)
        .expect("row for (28, 3)");
    assert_eq!(row["floor_bound"], 811);
    assert_eq!(row["erdos"], 810);
    assert_eq!(row["exact"], false);
}

#[test]
fn exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();

    // 2: missing file
    let out = run(&["cliques", "missing.el", "--r", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // 2: self-loop with line number on stderr
    let bad = write_graph(dir.path(), "bad.el", "0 1\n2 2\n");
    let out = run(&["cliques", &bad, "--r", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    // 2: r > n for turan
    let out = run(&["turan", "--n", "3", "--r", "4"]);
    assert_eq!(out.status.code(), Some(2));

    // 2: r < 2
    let k2 = write_graph(dir.path(), "k2.el", "0 1\n");
    let out = run(&["cliques", &k2, "--r", "1"]);
    assert_eq!(out.status.code(), Some(2));

    // 2: clap usage error
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    // 1: a deliberately crippled solver (one unshifted iteration) makes the
    // scan's bound check fire, exercising the violation-reporting path
    let out = run(&[
        "scan", "--n", "5", "--r", "2", "--mode", "exhaustive", "--max-iter", "1", "--shift",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["violations"].as_u64().unwrap() > 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("violation"));

    // 0: success
    let out = run(&["turan", "--n", "4", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "g.el", "0 1\n1 2\n0 2\n2 3\n3 4\n");
    let a = run(&["spectral", &g, "--r", "3"]);
    let b = run(&["spectral", &g, "--r", "3"]);
    assert_eq!(a.stdout, b.stdout);

    let a = run(&["scan", "--n", "4", "--r", "2", "--mode", "random", "--budget", "20"]);
    let b = run(&["scan", "--n", "4", "--r", "2", "--mode", "random", "--budget", "20"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_output_mode_works() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write_graph(dir.path(), "k4.el", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = run(&["bound", &k4, "--r", "3", "--output", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("c_r 4"));
    assert!(text.contains("equality true"));
}

#[test]
fn clique_dump_lines_are_sorted_ascending_tuples() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write_graph(dir.path(), "k4.el", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = run(&["cliques", &k4, "--r", "3", "--list", "--output", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let dump: Vec<&str> = text.lines().skip(3).collect();
    assert_eq!(dump, vec!["0 1 2", "0 1 3", "0 2 3", "1 2 3"]);
}

#[test]
fn reads_stdin_with_dash() {
    use std::process::Stdio;
    let mut child = Command::new(bin())
        .args(["cliques", "-", "--r", "3"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"n 3\n0 1\n1 2\n0 2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 1);
}
