use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const I1: &str = "p = 2\ndelta_of_x = x\nd = x\n";

fn write_cfg(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn diffext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diffext")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_prints_g_and_f() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_cfg(dir.path(), "i1.cfg", I1);
    let out = diffext(&["build", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("g = t^2 + t"), "{text}");
    assert!(text.contains("f = t^2 + t + x"), "{text}");
    assert!(text.contains("dimension over F = 4"), "{text}");
}

#[test]
fn verify_json_is_byte_identical_without_timings() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_cfg(dir.path(), "i1.cfg", I1);
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for path in [&a, &b] {
        let out = diffext(&["verify", cfg.to_str().unwrap(), "--seed", "9", "--no-timings", "--json", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    }
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ja, jb);
    let v: Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(v["instance"]["seed"], 9);
    assert_eq!(v["instance"]["f"], "t^2 + t + x");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["ms"] == 0 && c["verdict"] == "pass"));
    let verdict = checks.iter().find(|c| c["name"] == "division.verdict").unwrap();
    assert_eq!(verdict["witness"]["verdict"], "division (proved)");
}

#[test]
fn nucleus_and_inner() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_cfg(dir.path(), "i1.cfg", I1);
    let json = dir.path().join("n.json");
    let out = diffext(&["nucleus", cfg.to_str().unwrap(), "--which", "left", "--json", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&std::fs::read(&json).unwrap()).unwrap();
    assert_eq!(v["checks"][0]["witness"]["basis"], serde_json::json!(["1", "x"]));

    let out = diffext(&["inner", cfg.to_str().unwrap(), "--a", "x"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("H(tau = id, c = 1, eps = 1)"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_cfg(dir.path(), "i1.cfg", I1);
    let cfg = cfg.to_str().unwrap();
    // (id, x, 1) does not fix f.
    assert_eq!(diffext(&["autos", cfg, "--check-c", "x"]).status.code(), Some(1));
    assert_eq!(diffext(&["autos", cfg, "--check-c", "1", "--order", "1"]).status.code(), Some(0));
    assert_eq!(diffext(&["inner", cfg, "--a", "x +"]).status.code(), Some(2));
    assert_eq!(diffext(&["verify", cfg, "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(diffext(&["nucleus", cfg, "--which", "sideways"]).status.code(), Some(2));
    assert_eq!(diffext(&["frobnicate"]).status.code(), Some(2));
    let bad = write_cfg(dir.path(), "bad.cfg", "p = 2\ndelta_of_x = 0\nd = x\n");
    let out = diffext(&["build", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(diffext(&["build", "/nonexistent/i.cfg"]).status.code(), Some(2));
}

#[test]
fn divcheck_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let i2 = write_cfg(dir.path(), "i2.cfg", "p = 2\ndelta_of_x = x\nd = x^2\n");
    let out = diffext(&["divcheck", i2.to_str().unwrap(), "--bound", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not division (witness t - (x))"));
    let i3 = write_cfg(dir.path(), "i3.cfg", "p = 3\ndelta_of_x = x\nd = x\n");
    let out = diffext(&["divcheck", i3.to_str().unwrap(), "--bound", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("unknown (bound 1 exhausted)"));
}

#[test]
fn suites_from_the_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_cfg(dir.path(), "c.cfg", &format!("{I1}suites = nuclei, inner\nseed = 4\n"));
    let json = dir.path().join("r.json");
    let out = diffext(&["verify", cfg.to_str().unwrap(), "--json", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&std::fs::read(&json).unwrap()).unwrap();
    assert_eq!(v["instance"]["seed"], 4);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().all(|n| n.starts_with("nuclei.") || n.starts_with("inner.")), "{names:?}");
    assert!(names.contains(&"inner.conjugation"));
}
