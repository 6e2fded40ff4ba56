use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn fockcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fockcalc")).args(args).env_remove("FOCKCALC_DEFAULT_N").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn operator_file(doc: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(doc.as_bytes()).unwrap();
    f
}

fn without_timing(mut v: Value) -> String {
    v.as_object_mut().unwrap().remove("timing");
    v.to_string()
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| fockcalc(args).status.code().unwrap();
    assert_eq!(code(&["check", "--example", "harmonic-oscillator", "--mode", "self"]), 0);
    assert_eq!(code(&["check", "--example", "pt-first-order", "--mode", "self"]), 1);
    assert_eq!(code(&["check", "--example", "oscillator-fock", "--mode", "c-self"]), 2);
    assert_eq!(code(&["check", "--example", "no-such-thing"]), 2);
    assert_eq!(code(&["spectrum", "--mode", "sideways"]), 2);
    let bad = operator_file(r#"{"symbols": [[1], [0, 1]], "conjugation": {"a": [2, 0], "b": [0, 0], "c": [1, 0]}}"#);
    assert_eq!(code(&["check", bad.path().to_str().unwrap(), "--mode", "c-self"]), 3);
    assert_eq!(code(&["spectrum", "--example", "gamma1", "--mode", "oracle"]), 4);
    let garbled = operator_file("{ not json");
    assert_eq!(code(&["adjoint", garbled.path().to_str().unwrap()]), 2);
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--example", "gamma1", "--seed", "7", "--suite", "conjugation"];
    let (a, b) = (json(&fockcalc(&args)), json(&fockcalc(&args)));
    assert_eq!(without_timing(a.clone()), without_timing(b));
    let other = json(&fockcalc(&["verify", "--example", "gamma1", "--seed", "8", "--suite", "conjugation"]));
    assert_ne!(a["inputs_digest"], other["inputs_digest"]);
}

#[test]
fn adjoint_twice_is_the_identity() {
    let source = r#"{"symbols": [[1, [0, 2]], [0, 0, 3], [[1, -1]]]}"#;
    let f = operator_file(source);
    let once = fockcalc(&["adjoint", f.path().to_str().unwrap()]);
    assert_eq!(once.status.code(), Some(0));
    let g = operator_file(std::str::from_utf8(&once.stdout).unwrap());
    let twice = json(&fockcalc(&["adjoint", g.path().to_str().unwrap()]));
    let start: Value = serde_json::from_str(source).unwrap();
    let expected = fockcalc_core::interchange::diffop_from_json(&start).unwrap();
    assert_eq!(fockcalc_core::interchange::diffop_from_json(&twice).unwrap(), expected);
}

#[test]
fn default_truncation_comes_from_the_environment() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_fockcalc"));
        cmd.args(["verify", "--example", "harmonic-oscillator", "--suite", "kernel"]).args(extra);
        match env {
            Some(v) => cmd.env("FOCKCALC_DEFAULT_N", v),
            None => cmd.env_remove("FOCKCALC_DEFAULT_N"),
        };
        cmd.output().unwrap()
    };
    let digest = |o: &Output| json(o)["inputs_digest"].clone();
    let default = run(None, &[]);
    let explicit = run(None, &["--n", "64"]);
    let from_env = run(Some("24"), &[]);
    let flag_wins = run(Some("24"), &["--n", "64"]);
    assert_eq!(digest(&default), digest(&explicit));
    assert_ne!(digest(&default), digest(&from_env));
    assert_eq!(digest(&flag_wins), digest(&explicit));
    assert_eq!(run(Some("zero"), &[]).status.code(), Some(2));
}

#[test]
fn oscillator_adjoint_suite() {
    let out = fockcalc(&["verify", "--example", "harmonic-oscillator", "--suite", "adjoint", "--n", "64"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    for r in report["results"].as_array().unwrap() {
        assert!(r["max_residual"].as_f64().unwrap() < 1e-9, "{r}");
    }
}

#[test]
fn segal_bargmann_suite_and_directions() {
    let out = fockcalc(&["verify", "--suite", "sb", "--nodes", "128"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let l2 = json(&fockcalc(&["sb", "--example", "oscillator-fock", "--direction", "to-l2"]));
    assert_eq!(l2["terms"].as_array().unwrap().len(), 2);
    assert_eq!(fockcalc(&["sb", "--example", "oscillator-l2", "--direction", "to-l2"]).status.code(), Some(2));
    let text = fockcalc(&["--text", "sb", "--example", "oscillator-l2", "--direction", "to-fock"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains('z'));
}

#[test]
fn spectrum_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fockcalc"))
        .args(["spectrum", "-", "--kmax", "5"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"symbols": [[1], [0, 2]]}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let data = &json(&out)["results"][0]["data"];
    assert_eq!(data["enumerated"].as_array().unwrap().len(), 6);
    assert_eq!(data["c_selfadjoint"], Value::Bool(true));
}

#[test]
fn examples_are_listed() {
    let list = json(&fockcalc(&["examples"]));
    let names: Vec<&str> = list.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"gamma1") && names.contains(&"oscillator-l2"));
}
