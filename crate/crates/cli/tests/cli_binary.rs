use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const OCTAHEDRON: &str = r#"{
    "name": "octahedron",
    "vertices": ["a", "b", "c", "d", "e", "f"],
    "facets": [["a","c","e"],["a","c","f"],["a","d","e"],["a","d","f"],["b","c","e"],["b","c","f"],["b","d","e"],["b","d","f"]]
}"#;

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str], field: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_facering"));
    cmd.args(args).env_remove("FACERING_FIELD");
    if let Some(f) = field {
        cmd.env("FACERING_FIELD", f);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn certify_writes_a_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write(dir.path(), "oct.json", OCTAHEDRON);
    let json = dir.path().join("report.json");
    let out = run(&["--json", json.to_str().unwrap(), "--seed", "3", "certify", doc.to_str().unwrap(), "--suite", "duality,lefschetz"], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["environment"]["master_seed"], 3);
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert!(entries.iter().all(|e| e["certificate"]["verdict"] == "pass"));
    assert!(stdout(&out).contains("2 pass, 0 fail"));
}

#[test]
fn field_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write(dir.path(), "oct.json", OCTAHEDRON);
    let out = run(&["certify", doc.to_str().unwrap(), "--suite", "duality"], Some("2^63"));
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("GF(2^63)"), "{}", stdout(&out));
    let out = run(&["certify", doc.to_str().unwrap(), "--suite", "duality"], Some("GF(6)"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_reports_vectors() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write(dir.path(), "oct.json", OCTAHEDRON);
    let out = run(&["analyze", doc.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"h\""), "{text}");
    assert!(text.contains("a_dims"));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\n  \"name\": \"x\",\n  \"vertices\": [\"a\",\n}");
    let out = run(&["analyze", bad.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bad.json"), "{}", stderr(&out));

    let doc = write(dir.path(), "oct.json", OCTAHEDRON);
    let out = run(&["certify", doc.to_str().unwrap(), "--suite", "sideways"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["certify", doc.to_str().unwrap(), "--suite", "biased"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--gamma"));

    let symbolic = OCTAHEDRON.replacen("\"name\"", "\"coordinates\": \"symbolic\", \"name\"", 1);
    let sym = write(dir.path(), "sym.json", &symbolic);
    let out = run(&["certify", sym.to_str().unwrap(), "--suite", "lefschetz"], None);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}

#[test]
fn gamma_file_drives_the_biased_suite() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write(dir.path(), "oct.json", OCTAHEDRON);
    let gamma = write(dir.path(), "gamma.json", r#"[["a","c","e"]]"#);
    let out = run(&["certify", doc.to_str().unwrap(), "--suite", "biased,hall-laman", "--gamma", gamma.to_str().unwrap(), "--k", "1"], None);
    assert_eq!(out.status.code(), Some(0), "{}{}", stdout(&out), stderr(&out));
    assert!(stdout(&out).contains("biased-pairing"));
}

#[test]
fn corpus_commands() {
    let out = run(&["corpus", "list"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("rp2-6"));
    let out = run(&["corpus", "run", "duality"], None);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("cross-polytope-4"));
}
