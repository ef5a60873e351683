use std::fs;
use std::path::Path;
use std::process::Command;

use degencount::cli::run;
use serde_json::Value;
use tempfile::TempDir;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_degencount")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(stdout: &str) -> Value {
    serde_json::from_str(stdout).unwrap_or_else(|e| panic!("{e}: {stdout}"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn edge_list(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(a, b)| format!("{a} {b}\n")).collect()
}

const PETERSEN: [(usize, usize); 15] = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
];

#[test]
fn classify_examples() {
    let (code, out, _) = bin(&["classify", "C6"]);
    assert_eq!(code, 0);
    let v = json(&out);
    let c = &v["output"]["classification"];
    assert_eq!(c["hom_easy"], false);
    let mut cycle: Vec<u64> = c["witnesses"]["hom"]["cycle"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    cycle.sort();
    assert_eq!(cycle, vec![0, 1, 2, 3, 4, 5]);
    for p in ["P5", "K4"] {
        let v = json(&run(["classify", p]).stdout);
        let c = &v["output"]["classification"];
        assert_eq!((&c["hom_easy"], &c["inj_easy"], &c["ind_easy"]), (&Value::Bool(true), &Value::Bool(true), &Value::Bool(true)), "{p}");
    }
}

#[test]
fn count_hom_edge_is_twice_edge_count() {
    let dir = TempDir::new().unwrap();
    let host = write(&dir, "host.el", &edge_list(&PETERSEN));
    let (code, out, _) = bin(&["count", "hom", "K2", &host]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["output"]["count"], "30");
}

#[test]
fn count_inj_check_agrees_with_oracle() {
    let dir = TempDir::new().unwrap();
    let host = write(&dir, "host.el", &edge_list(&PETERSEN));
    let v = json(&run(["count", "inj", "C5", &host, "--check"]).stdout);
    // Petersen has 12 five-cycles, each with 10 embeddings
    assert_eq!(v["output"]["count"], "120");
    assert_eq!(v["output"]["oracle_count"], "120");
    assert_eq!(v["output"]["check"], "pass");
}

#[test]
fn fallback_pattern_is_flagged() {
    let dir = TempDir::new().unwrap();
    let host = write(&dir, "host.el", &edge_list(&PETERSEN));
    let out = run(["count", "hom", "C6", &host]);
    assert_eq!(out.code, 0);
    let v = json(&out.stdout);
    assert_eq!(v["output"]["path"], "oracle");
    let petersen = degencount::Graph::from_edges(10, PETERSEN).unwrap();
    assert_eq!(v["output"]["count"], super::closed_walks(&petersen, 6).to_string());
    assert!(v["warnings"][0].as_str().unwrap().contains("exponential fallback"));
}

#[test]
fn gadget_constructions() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.el", "0 1\n1 2\n2 0\n");
    let v = json(&run(["gadget", "subdivide", "--ell", "2", &tri]).stdout);
    let g = degencount::graph::load_graph(
        v["output"]["edge_list"].as_str().unwrap().as_bytes(),
        degencount::graph::GraphFormat::EdgeList,
    )
    .unwrap();
    assert_eq!((g.n(), g.m(), g.girth()), (6, 6, Some(6)));
    assert!((0..6).all(|v| g.degree(v) == 2));

    let target = dir.path().join("out.el");
    let out = run(["gadget", "parallel", "--p", "2", "--q", "3", &tri, "-o", target.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json(&out.stdout);
    assert_eq!(v["output"]["report"]["outputs"][0]["n"], 12);
    assert_eq!(v["output"]["girth"], 5);
    assert!(Path::new(&target).exists());
}

#[test]
fn verify_c8_system_passes_on_small_graph() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.el", "0 1\n1 2\n2 0\n2 3\n");
    let (code, out, _) = bin(&["gadget", "verify", "--suite", "c8-system", &f]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(json(&out)["output"]["passed"], true);
}

#[test]
fn stated_k5_identity_reports_verification_failure() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.el", "0 1\n");
    let out = run(["gadget", "verify", "--suite", "k5", &f]);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out.stdout)["output"]["passed"], false);
}

#[test]
fn bench_reports_ratios_and_guards_fallbacks() {
    let v = json(&run(["bench", "P4", "degen2", "2e3,4e3", "--repeats", "1"]).stdout);
    assert_eq!(v["output"]["ratios"].as_array().unwrap().len(), 1);
    let (code, _, err) = bin(&["bench", "C6", "degen2", "1e3"]);
    assert_eq!(code, 2);
    assert!(err.contains("--force"));
}

#[test]
fn json_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let host = write(&dir, "host.el", &edge_list(&PETERSEN));
    let args = ["--seed", "3", "count", "ind", "P4", host.as_str()];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a, b);
    let v = json(&a.1);
    assert_eq!(v["inputs_digest"].as_str().unwrap().len(), 64);
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.el", "0 x\n");
    assert_eq!(bin(&["count", "hom", "K2", &bad]).0, 2);
    assert_eq!(bin(&["count", "hom", "K2", "/nonexistent/host.el"]).0, 2);
    assert_eq!(bin(&["gadget", "verify", "--suite", "k9", &bad]).0, 2);
    assert_eq!(bin(&["--max-pattern", "4", "classify", "C5"]).0, 2);
}
