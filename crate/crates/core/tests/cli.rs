use pcgraph::cli::run;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

fn pcgraph(args: &[&str]) -> (i32, String) {
    run(std::iter::once("pcgraph").chain(args.iter().copied()))
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pcgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn gen_then_pc() {
    let (code, g1) = pcgraph(&["gen", "--family", "g1"]);
    assert_eq!(code, 0);
    assert_eq!(g1.trim().chars().next(), Some('F'));
    let (code, out) = pcgraph(&["pc", "--graph6", g1.trim()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("pc: 3\n"), "{out}");
    let (_, json) = pcgraph(&["pc", "--graph6", g1.trim(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["pc"], 3);
    assert_eq!(v["method"], "search");
    assert_eq!(v["witness"]["colors"].as_array().unwrap().len(), 9);
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pcgraph"))
        .arg("pc")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"n 4\n0 1\n0 2\n0 3\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("pc: 3\n"));
}

#[test]
fn bounds_values() {
    assert_eq!(pcgraph(&["bounds", "--variant", "thm34", "--n", "9"]).1.lines().next(), Some("13"));
    let (_, out) = pcgraph(&["bounds", "--variant", "g-nk", "--n", "14", "--k", "2"]);
    assert_eq!(out.lines().next(), Some("59"));
    let (_, out) = pcgraph(&["bounds", "--variant", "main-thm", "--n", "20", "--k", "3", "--delta", "2"]);
    assert_eq!(out.lines().next(), Some("99"));
    let (_, out) = pcgraph(&["bounds", "--variant", "woodall", "--n", "10", "--m", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["value"], 13);
    assert_eq!(pcgraph(&["bounds", "--variant", "main-thm", "--n", "20"]).0, 2);
    assert_eq!(pcgraph(&["bounds", "--variant", "bridge-bound-lemma", "--n", "3", "--t", "1", "--delta", "2"]).0, 2);
}

#[test]
fn check_verdicts() {
    let graph = scratch("p3.txt", "n 3\n0 1\n1 2\n");
    let good = scratch("good.col", "k 2\n0 1 1\n1 2 2\n");
    let bad = scratch("bad.col", "k 2\n0 1 1\n1 2 1\n");
    let g = graph.to_str().unwrap();
    let (code, out) = pcgraph(&["check", g, "--coloring", good.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "properly connected: yes\n"));
    let (code, out) = pcgraph(&["check", g, "--coloring", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("no proper path: 0 2"), "{out}");
    let partial = scratch("partial.col", "k 2\n0 1 1\n");
    assert_eq!(pcgraph(&["check", g, "--coloring", partial.to_str().unwrap()]).0, 2);
}

#[test]
fn gstar_json() {
    let (code, out) = pcgraph(&["gstar", "--graph6", "Bw", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["bridges"].as_array().unwrap().len(), 0);
    assert_eq!(v["max_degree"], 0);
}

#[test]
fn verify_and_search() {
    let (code, out) = pcgraph(&["verify", "--theorem", "thm-small-order", "--n", "7", "--source", "builtin"]);
    assert_eq!(code, 0);
    assert!(out.contains("violators: 1 (matches expected exception set)"), "{out}");
    let (code, out) = pcgraph(&["verify", "--theorem", "thm2-bridgeless", "--n", "5", "--format", "json"]);
    assert_eq!(code, 0);
    let last: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(last["scanned"], 21);
    let (code, out) = pcgraph(&["verify", "--theorem", "prop11", "--n", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 7);
    let (code, _) = pcgraph(&["verify", "--theorem", "lemma-monotonicity", "--samples", "20", "--jobs", "2"]);
    assert_eq!(code, 0);
    assert_eq!(pcgraph(&["search", "--n", "9", "--delta", "3"]).0, 2);
    assert_eq!(pcgraph(&["search", "--n", "7", "--delta", "3"]).0, 0);
}

#[test]
fn woodall_replay_reports_violations() {
    let (code, out) = pcgraph(&["verify", "--theorem", "woodall-eg-soundness", "--n", "5"]);
    assert_eq!(code, 1);
    assert!(out.contains("violations: 4"), "{out}");
}

#[test]
fn usage_errors() {
    assert_eq!(pcgraph(&["pc", "--bogus"]).0, 2);
    assert_eq!(pcgraph(&["frobnicate"]).0, 2);
    assert_eq!(pcgraph(&["pc", "--graph6", "?!"]).0, 2);
    assert_eq!(pcgraph(&["pc", "--graph6", "C?"]).0, 2);
    assert_eq!(pcgraph(&["verify", "--theorem", "nonsense", "--n", "5"]).0, 2);
    assert_eq!(pcgraph(&["gen", "--family", "g-n", "--n", "5"]).0, 2);
    let (code, out) = pcgraph(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}
