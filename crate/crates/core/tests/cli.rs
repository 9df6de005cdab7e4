use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use ccelab::cli::{run, EXIT_CAP, EXIT_IO, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};

fn golden(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name).to_string_lossy().into_owned()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ccelab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary(args: &[&str], stdin: &str, env: Option<(&str, &str)>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ccelab"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove(ccelab::caps::CAP_ENV);
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn derive_reads_stdin() {
    let (code, out, _) = binary(&["derive", "--kind", "cce", "--in", "-"], "digraph 4\n0 -> 1\n0 -> 2\n1 -> 3\n2 -> 3\n", None);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "graph 4\n1 -- 2\n");
}

#[test]
fn derive_json_matches_serde_shape() {
    let (code, out, _) = call(&["--json", "derive", "--kind", "cce", "--in", &golden("diamond.digraph")]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!({ "n": 4, "edges": [[1, 2]] }));
}

#[test]
fn derive_writes_dot_with_isolated_vertices_marked() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("d.dot");
    let (code, _, _) = call(&["derive", "--kind", "cce", "--in", &golden("diamond.digraph"), "--dot", dot.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("dir=none"));
    // vertices 0 and 3 are isolated in the CCE graph
    assert_eq!(text.matches("style=dashed").count(), 2);
}

#[test]
fn check_json_reports_lexicographic_witness() {
    let (code, out, _) = call(&["--json", "check", "--condition", "C", "--p", "2", "--in", &golden("two_cycle.digraph")]);
    assert_eq!(code, EXIT_NEGATIVE);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["satisfied"], false);
    assert_eq!(v["witness"], serde_json::json!([0, 1]));
}

#[test]
fn recognize_json_gives_intervals() {
    let (code, out, _) = call(&["--json", "recognize", "--model", "interval", "--in", &golden("interval.digraph")]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["recognized"], true);
    assert_eq!(v["representation"]["intervals"].as_array().unwrap().len(), 4);
}

#[test]
fn dk_json_without_witness_when_over_budget() {
    let (code, out, _) = call(&["--json", "dk", "--in", &golden("k2.graph"), "--kmax", "1"]);
    assert_eq!(code, EXIT_NEGATIVE);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["dk"].is_null() && v["witness"].is_null());
}

#[test]
fn verify_output_is_identical_across_thread_counts() {
    let one = call(&["--threads", "1", "verify", "--theorem", "acyclic", "--p", "2", "--n", "4"]);
    let four = call(&["--threads", "4", "verify", "--theorem", "acyclic", "--p", "2", "--n", "4"]);
    assert_eq!(one.0, EXIT_OK);
    assert_eq!(one, four);
    assert!(one.1.contains("checked 543 digraphs"));
}

#[test]
fn dk_witness_is_identical_across_thread_counts() {
    let one = call(&["--threads", "1", "dk", "--in", &golden("k2.graph"), "--kmax", "3"]);
    let three = call(&["--threads", "3", "dk", "--in", &golden("k2.graph"), "--kmax", "3"]);
    assert_eq!(one, three);
}

#[test]
fn fast_mode_still_finds_a_valid_witness() {
    let (code, out, _) = call(&["--fast-nondet", "dk", "--in", &golden("k2.graph"), "--kmax", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("dk = 2\n"));
}

#[test]
fn caps_reject_large_sweeps() {
    let (code, _, err) = call(&["verify", "--theorem", "kr", "--n", "9"]);
    assert_eq!(code, EXIT_CAP);
    assert!(err.contains("CCELAB_CAP"), "{err}");
    let (code, _, _) = binary(&["verify", "--theorem", "kr", "--n", "4"], "", Some(("CCELAB_CAP", "3")));
    assert_eq!(code, EXIT_CAP);
    let (code, _, _) = binary(&["verify", "--theorem", "kr", "--n", "4"], "", Some(("CCELAB_CAP", "general=4")));
    assert_eq!(code, EXIT_OK);
    let (code, _, _) = binary(&["verify", "--theorem", "kr", "--n", "3"], "", Some(("CCELAB_CAP", "lots")));
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn usage_and_io_failures() {
    assert_eq!(call(&["check", "--condition", "C", "--p", "1", "--in", &golden("diamond.digraph")]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--theorem", "loopless", "--n", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["explore", "--problem", "4", "--p", "2", "--n", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["derive", "--kind", "cce", "--in", "/nonexistent/x.digraph"]).0, EXIT_IO);
    let (code, _, err) = call(&["derive", "--kind", "cce", "--in", &golden("malformed.digraph")]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 3, column 1"), "{err}");
    // a graph where a digraph is expected
    assert_eq!(call(&["derive", "--kind", "cce", "--in", &golden("k2.graph")]).0, EXIT_USAGE);
}

#[test]
fn explore_json_lists_sections() {
    let (code, out, _) = call(&["--json", "explore", "--problem", "3", "--p", "2", "--n", "3", "--loopless"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(!v["sections"].as_array().unwrap().is_empty());
}
