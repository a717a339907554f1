use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use linked_domain::generate::{gen_edge_realizing, gen_impartial_culture};
use linked_domain::{write_native, ConnectivityGraph};
use linked_domain_cli::run;
use tempfile::TempDir;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["linked-domain"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn k3_fixture(dir: &TempDir) -> PathBuf {
    let k3 = ConnectivityGraph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
    write(dir, "k3.txt", &write_native(&gen_edge_realizing(&k3).unwrap()))
}

fn path_fixture(dir: &TempDir) -> PathBuf {
    let path = ConnectivityGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    write(dir, "path.txt", &write_native(&gen_edge_realizing(&path).unwrap()))
}

#[test]
fn check_linked_profile() {
    let dir = TempDir::new().unwrap();
    let k3 = k3_fixture(&dir);
    let out = cli(&["check", s(&k3), "--mode", "strong"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("verdict:    LINKED"));
    assert!(out.stdout.contains("witness:    a > b > c\n"));
}

#[test]
fn check_not_linked_profile() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "one.txt", "candidates: a, b, c\n1: a > b > c\n1: b > a > c\n");
    let out = cli(&["check", s(&p)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("NOT LINKED"));
    assert!(out.stdout.contains("1 seeds tried, largest stuck set 2 of 3"));

    let out = cli(&["check", s(&p), "--witness"]);
    assert!(out.stdout.contains("seed {a, b}: stuck at {a, b}"));
}

#[test]
fn check_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let out = cli(&["check", s(&dir.path().join("missing.txt"))]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("error:"));

    let bad = write(&dir, "bad.txt", "candidates: a, b\n1: a > c\n");
    let out = cli(&["check", s(&bad)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);

    assert_eq!(cli(&["check"]).code, 2);
    assert_eq!(cli(&["check", s(&bad), "--mode", "medium"]).code, 2);
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn json_report() {
    let dir = TempDir::new().unwrap();
    let k3 = k3_fixture(&dir);
    let out = cli(&["check", s(&k3), "--json"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort_unstable();
    let mut expected = ["input", "mode", "m", "n", "edges", "verdict", "witness", "elapsed_ms"];
    expected.sort_unstable();
    assert_eq!(keys, expected);
    assert_eq!(v["verdict"], "linked");
    assert_eq!(v["witness"], serde_json::json!(["a", "b", "c"]));
    assert_eq!((v["m"].as_u64(), v["n"].as_u64(), v["edges"].as_u64()), (Some(3), Some(6), Some(3)));

    let path = path_fixture(&dir);
    let out = cli(&["check", s(&path), "--json"]);
    assert_eq!(out.code, 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "not_linked");
    assert!(v["witness"].is_null());
}

#[test]
fn weak_mode_and_graph_out() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "rev.txt", "candidates: a, b, c\n1: a > b > c\n1: c > b > a\n");
    let dot = dir.path().join("g.dot");
    assert_eq!(cli(&["check", s(&p), "--graph-out", s(&dot)]).code, 1);
    assert_eq!(fs::read_to_string(&dot).unwrap(), "graph {\n  \"a\";\n  \"b\";\n  \"c\";\n}\n");
    assert_eq!(cli(&["check", s(&p), "--mode", "weak", "--graph-out", s(&dot)]).code, 1);
    assert_eq!(
        fs::read_to_string(&dot).unwrap(),
        "graph {\n  \"a\" -- \"b\";\n  \"b\" -- \"c\";\n}\n"
    );
}

#[test]
fn soc_input() {
    let dir = TempDir::new().unwrap();
    let text = "# NUMBER ALTERNATIVES: 3\n# ALTERNATIVE NAME 1: x\n# ALTERNATIVE NAME 2: y\n# ALTERNATIVE NAME 3: z\n\
                1: 1,2,3\n1: 2,1,3\n1: 1,3,2\n1: 3,1,2\n1: 2,3,1\n1: 3,2,1\n";
    let p = write(&dir, "k3.soc", text);
    let out = cli(&["check", s(&p)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("witness:    x > y > z"));
    // explicit format overrides the extension
    assert_eq!(cli(&["check", s(&p), "--format", "native"]).code, 2);
    let ties = write(&dir, "ties.soc", "# NUMBER ALTERNATIVES: 3\n1: {1,2},3\n");
    assert_eq!(cli(&["check", s(&ties)]).code, 2);
}

#[test]
fn single_candidate_is_linked() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "one.txt", "candidates: solo\n4: solo\n");
    let out = cli(&["check", s(&p)]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("witness:    solo\n"));
}

#[test]
fn gen_impartial_culture_is_deterministic() {
    let a = cli(&["gen", "--model", "ic", "--candidates", "5", "--votes", "20", "--seed", "7"]);
    let b = cli(&["gen", "--model", "ic", "--candidates", "5", "--votes", "20", "--seed", "7"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout.lines().count(), 21);
    assert_eq!(a.stdout, write_native(&gen_impartial_culture(5, 20, 7).unwrap()));

    let dir = TempDir::new().unwrap();
    let out = dir.path().join("ic.txt");
    assert_eq!(cli(&["gen", "--model", "ic", "--candidates", "5", "--votes", "20", "--seed", "7", "--out", s(&out)]).code, 0);
    assert_eq!(fs::read_to_string(out).unwrap(), a.stdout);
}

#[test]
fn gen_edges_from_edge_list_and_dot() {
    let dir = TempDir::new().unwrap();
    let k2 = write(&dir, "k2.txt", "0 1\n");
    let out = cli(&["gen", "--model", "edges", "--graph", s(&k2)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "candidates: a, b\n1: a > b\n1: b > a\n");

    let padded = cli(&["gen", "--model", "edges", "--graph", s(&k2), "--candidates", "3"]);
    assert_eq!(padded.stdout, "candidates: a, b, c\n1: a > b > c\n1: b > a > c\n");

    let dot = write(&dir, "g.dot", "graph {\n  \"p\" -- \"q\";\n}\n");
    let out = cli(&["gen", "--model", "edges", "--graph", s(&dot)]);
    assert_eq!(out.stdout, "candidates: p, q\n1: p > q\n1: q > p\n");
}

#[test]
fn gen_rejects_bad_flags() {
    let dir = TempDir::new().unwrap();
    let k2 = write(&dir, "k2.txt", "0 1\n");
    assert_eq!(cli(&["gen", "--model", "ic", "--candidates", "0"]).code, 2);
    assert_eq!(cli(&["gen", "--model", "ic"]).code, 2);
    assert_eq!(cli(&["gen", "--model", "ic", "--candidates", "3", "--graph", s(&k2)]).code, 2);
    assert_eq!(cli(&["gen", "--model", "edges"]).code, 2);
    assert_eq!(cli(&["gen", "--model", "edges", "--graph", s(&k2), "--votes", "3"]).code, 2);
    assert_eq!(cli(&["gen", "--model", "edges", "--graph", s(&k2), "--candidates", "1"]).code, 2);
    let garbage = write(&dir, "bad.txt", "0 1 2\n");
    assert_eq!(cli(&["gen", "--model", "edges", "--graph", s(&garbage)]).code, 2);
}

#[test]
fn oracle_command() {
    let dir = TempDir::new().unwrap();
    let out = cli(&["oracle", s(&k3_fixture(&dir))]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "AGREE: linked\n"));
    let out = cli(&["oracle", s(&path_fixture(&dir))]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "AGREE: not linked\n"));

    let big = write(&dir, "big.txt", &write_native(&gen_impartial_culture(12, 5, 1).unwrap()));
    let out = cli(&["oracle", s(&big)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("cap is 8"), "{}", out.stderr);
    assert_eq!(cli(&["oracle", s(&big), "--cap", "12"]).code, 0);
}

#[test]
fn binary_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bin = env!("CARGO_BIN_EXE_linked-domain");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let out = status(&["check", s(&k3_fixture(&dir))]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("a > b > c"));
    assert_eq!(status(&["check", s(&path_fixture(&dir))]).status.code(), Some(1));
    assert_eq!(status(&["check", "/nonexistent/profile"]).status.code(), Some(2));
    assert_eq!(status(&["frobnicate"]).status.code(), Some(2));
}
