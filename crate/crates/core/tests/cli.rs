mod common;

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use common::*;
use mackey::cli::run_with;
use mackey::mackey::constant;
use mackey::mackey::io::to_json;
use mackey::qlin::QMatrix;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["mackey"];
    argv.extend_from_slice(args);
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch() -> PathBuf {
    static N: AtomicUsize = AtomicUsize::new(0);
    let dir = std::env::temp_dir().join(format!("mackey-cli-{}-{}", std::process::id(), N.fetch_add(1, Ordering::SeqCst)));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn demos_match_their_golden_files() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for name in ["c6", "s4", "cp3"] {
        let (code, out, _) = call(&["demo", name]);
        assert_eq!(code, 0);
        let expected = std::fs::read_to_string(golden.join(format!("demo_{name}.txt"))).unwrap();
        assert_eq!(out, expected, "demo {name}");
        assert_eq!(call(&["demo", name]).1, out);
    }
}

#[test]
fn lewis_dot_for_the_burnside_functor_of_c6() {
    let dir = scratch();
    let a = dir.join("a.json");
    assert_eq!(call(&["mackey", "new", "burnside", "C6", "--out", s(&a)]).0, 0);
    let (code, dot, _) = call(&["mackey", "lewis", s(&a), "--dot"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph"));
    let nodes = dot.lines().filter(|l| l.contains("[label=\"C")).count();
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains("->")).collect();
    let loops = edges.iter().filter(|l| l.contains("W: ")).count();
    assert_eq!(nodes, 4);
    assert_eq!(loops, 4);
    assert_eq!(edges.len() - loops, 8);
    assert!(dot.contains("label=\"C6: 4\""));
}

#[test]
fn corrupted_fixture_fails_the_check_with_the_axiom_named() {
    let dir = scratch();
    let lat = lattice("C2");
    let bad = constant(&lat, 1).with_induction(0, 1, QMatrix::identity(1));
    let path = dir.join("bad.json");
    std::fs::write(&path, serde_json::to_string(&to_json(&bad)).unwrap()).unwrap();
    let (code, out, _) = call(&["mackey", "check", s(&path)]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["violated"], serde_json::json!(["Mackey"]));
    let (code, text, _) = call(&["mackey", "check", s(&path), "--pretty"]);
    assert_eq!(code, 1);
    assert!(text.contains("Mackey"));
}

#[test]
fn usage_errors_have_distinct_messages() {
    let dir = scratch();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let (code, _, err) = call(&["mackey", "check", s(&bad)]);
    assert_eq!(code, 2);
    assert!(err.contains("malformed JSON"), "{err}");
    let (code, _, err) = call(&["--cap", "12", "burnside", "table", "S4"]);
    assert_eq!(code, 2);
    assert!(err.contains("exceeds the configured cap"), "{err}");
    let (code, _, err) = call(&["mackey", "frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("unrecognized subcommand"), "{err}");
    let (code, _, err) = call(&["group", "info", "XYZ"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown name"), "{err}");
    let (code, _, err) = call(&["group", "info", "C6", "--format", "dot"]);
    assert_eq!(code, 2);
    assert!(err.contains("DOT"), "{err}");
}

#[test]
fn box_split_classify_and_green_check() {
    let dir = scratch();
    let a = dir.join("a.json");
    let g = dir.join("g.json");
    let c = dir.join("c.json");
    assert_eq!(call(&["mackey", "new", "burnside", "S3", "--out", s(&a), "--green-out", s(&g)]).0, 0);
    assert_eq!(call(&["mackey", "box", s(&a), s(&a), "--out", s(&c)]).0, 0);
    let (code, out, _) = call(&["mackey", "check", s(&c)]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = call(&["mackey", "classify", s(&c), "--certify"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["determinants"].as_object().unwrap().len(), 6);
    let (code, out, _) = call(&["mackey", "split", s(&a)]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v.as_array().unwrap().iter().all(|p| p["dim"] == 1));
    assert_eq!(call(&["mackey", "green-check", s(&a), s(&g)]).0, 0);

    let mut green: Value = serde_json::from_str(&std::fs::read_to_string(&g).unwrap()).unwrap();
    green["unit"]["S3"] = serde_json::json!(["0", "0", "0", "2"]);
    std::fs::write(&g, green.to_string()).unwrap();
    let (code, out, _) = call(&["mackey", "green-check", s(&a), s(&g)]);
    assert_eq!(code, 1);
    assert!(out.contains("Unit"), "{out}");
}

#[test]
fn workspace_registry() {
    let dir = scratch();
    let ws = s(&dir);
    let spec = dir.join("c4.json");
    let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| (i + j) % 4).collect()).collect();
    std::fs::write(&spec, serde_json::json!({ "name": "Z4", "order": 4, "table": table }).to_string()).unwrap();
    assert_eq!(call(&["--workspace", ws, "group", "add", s(&spec)]).0, 0);
    let (code, out, _) = call(&["--workspace", ws, "group", "info", "Z4"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["subgroups"], 3);
    assert_eq!(call(&["--workspace", ws, "mackey", "new", "free", "Z4", "--subgroup", "C2", "--save", "f"]).0, 0);
    let (code, out, _) = call(&["--workspace", ws, "mackey", "classify", "f"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let dims: Vec<u64> = v["classes"].as_array().unwrap().iter().map(|c| c["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![0, 1, 0]);
}

#[test]
fn burnside_commands() {
    let (code, out, _) = call(&["burnside", "table", "C6"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["marks"][0][0], "6");
    let (code, out, _) = call(&["burnside", "restrict", "S3", "--idempotent", "C3", "--to", "C3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["idempotents"], serde_json::json!(["C3"]));
    let (code, out, _) = call(&["group", "subgroups", "S4", "--pretty"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 12);
}
