//! End-to-end checks of the binary: verbs, formats, exit codes, and the
//! byte-stability of JSON output.

use std::io::Write;
use std::process::{Command, Output};

fn tdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn dim_on_star_family() {
    let out = tdim(&["dim", "--family", "star:6"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("beta = 5"));

    let out = tdim(&["dim", "--family", "star:6", "--output", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["W"].as_array().unwrap().len(), 5);
}

#[test]
fn threshold_by_both_methods() {
    let out = tdim(&["threshold", "--family", "star:6", "--output", "json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"tau\":3"));
    assert!(stdout(&out).contains("embedding-search"));

    let out = tdim(&["threshold", "--family", "star:6", "--oracle", "--output", "json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"tau\":3"));
    assert!(stdout(&out).contains("supergraph-enumeration"));
}

#[test]
fn threshold_progress_goes_to_stderr() {
    let out = tdim(&["threshold", "--family", "star:5", "--progress"]);
    assert_eq!(code(&out), 0);
    assert!(!out.stderr.is_empty());
    assert!(stdout(&out).contains("tau = 2"));
}

#[test]
fn threshold_jobs_is_deterministic() {
    let a = tdim(&["threshold", "--family", "star:6", "--output", "json"]);
    let b = tdim(&["threshold", "--family", "star:6", "--jobs", "4", "--output", "json"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn embed_search_unsat_exits_two() {
    let out = tdim(&["embed", "--family", "star:6", "--landmarks", "1,2", "--search"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("unsat"));
}

#[test]
fn embed_construction_on_path() {
    let out = tdim(&["embed", "--family", "path:4", "--landmarks", "0", "--output", "json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"coords\":{\"0\":[0],\"1\":[1],\"2\":[2],\"3\":[3]}"));
}

#[test]
fn verify_embed_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("emb.json");

    let out = tdim(&["embed", "--family", "l3n:4", "--landmarks", "1,2", "--search", "--output", "json"]);
    assert_eq!(code(&out), 0);
    std::fs::File::create(&path)
        .unwrap()
        .write_all(out.stdout.trim_ascii())
        .unwrap();

    let ok = tdim(&[
        "verify-embed",
        "--family",
        "l3n:4",
        "--embedding",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("resolved"));

    // --graph is an alias for --family on this verb
    let ok = tdim(&[
        "verify-embed",
        "--graph",
        "l3n:4",
        "--embedding",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&ok), 0);

    // the same embedding is wrong for a different graph
    let bad = tdim(&[
        "verify-embed",
        "--family",
        "l3n:3",
        "--embedding",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&bad), 2);
    assert!(stdout(&bad).contains("not resolved"));
}

#[test]
fn family_with_packaged_embedding() {
    let out = tdim(&["family", "--family", "l3n:4", "--with-embedding", "--output", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 12);
    assert_eq!(v["embedding"]["k"], 2);

    let out = tdim(&["family", "--family", "t_k:5", "--with-embedding", "--output", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 81);
    assert_eq!(v["embedding"]["side"], 11);
}

#[test]
fn family_text_is_edge_list() {
    let out = tdim(&["family", "--family", "path:3"]);
    assert_eq!(stdout(&out), "3 2\n0 1\n1 2\n");
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        vec!["dim", "--family", "figure4", "--output", "json"],
        vec!["threshold", "--family", "figure4", "--oracle", "--output", "json"],
        vec!["anatomy", "--family", "l3n:3", "--output", "json"],
        vec!["reduce4", "--family", "star:5", "--output", "json"],
    ] {
        let a = tdim(&args);
        let b = tdim(&args);
        assert_eq!(code(&a), 0, "{:?}", args);
        assert_eq!(a.stdout, b.stdout, "{:?}", args);
    }
}

#[test]
fn reduce_verbs() {
    let out = tdim(&["reduce", "--family", "star:4", "--output", "json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"claimed_dimension\":2"));

    let out = tdim(&["reduce4", "--family", "star:5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("dimension: 2"));

    // dimension-1 trees are rejected
    let out = tdim(&["reduce", "--family", "path:6"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn star_method_verb() {
    let out = tdim(&["star-method", "--family", "star:8", "--output", "json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"claimed_dimension\":3"));
}

#[test]
fn bounds_verb() {
    let out = tdim(&["bounds", "--family", "star:6", "--output", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["hernando_tau_lower_bound"], 3);
    assert_eq!(v["g"], 3);
    assert_eq!(v["log_lower_bound"], 2);
}

#[test]
fn anatomy_verb() {
    let out = tdim(&["anatomy", "--family", "star:3", "--output", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["majors"], serde_json::json!([0]));
    assert_eq!(v["core_vertices"], serde_json::json!([0]));

    let out = tdim(&["anatomy", "--family", "path:5"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn file_input_in_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("g.edges");
    std::fs::write(&el, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let out = tdim(&["dim", "--file", el.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("beta = 1"));

    let g6 = dir.path().join("g.g6");
    std::fs::write(&g6, "A_").unwrap();
    let out = tdim(&["dim", "--file", g6.to_str().unwrap(), "--format", "graph6"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("beta = 1"));
}

#[test]
fn input_validation_errors() {
    // neither input source
    let out = tdim(&["dim"]);
    assert_eq!(code(&out), 1);
    // both input sources
    let out = tdim(&["dim", "--family", "path:3", "--file", "/nonexistent"]);
    assert_eq!(code(&out), 1);
    // unknown flag is rejected
    let out = tdim(&["dim", "--family", "path:3", "--frobnicate"]);
    assert_eq!(code(&out), 1);
    // malformed family
    let out = tdim(&["dim", "--family", "nonesuch:3"]);
    assert_eq!(code(&out), 1);
    // threshold cap refusal carries the message
    let out = tdim(&["threshold", "--family", "path:9", "--oracle", "--cap", "4"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("refused: cap"));
}
