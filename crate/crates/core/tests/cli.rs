use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mycielski"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("elapsed_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn verify(path: &Path) -> Output {
    run(&["verify", path.to_str().unwrap()])
}

#[test]
fn build_m3_c5() {
    let out = run(&["build", "2,3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["kind"], "graph");
    assert_eq!(v["order"], 16);
    let dot = run(&["build", "2,3", "--format", "dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("graph G {"));
}

#[test]
fn chi_of_complement_c7() {
    let out = run(&["chi", "complement:cycle:7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["chi"], 4);
    assert_eq!(v["status"], "exact");
    assert_eq!(v["graph"]["order"], 7);
}

#[test]
fn outputs_are_deterministic() {
    let cases: &[&[&str]] = &[
        &["chi", "family:2,2,2"],
        &["sphere-model", "2,3"],
        &["refute", "2,3", "--random", "50", "--seed", "7"],
        &["embed", "16", "--delta", "0.1"],
        &["probe", "drop-normalize", "--n", "2"],
        &["fan-count", "circle:2", "tests/data/circle2_labelling.json"],
    ];
    for args in cases {
        let (a, b) = (run(args), run(args));
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        let (mut x, mut y) = (json(&a), json(&b));
        strip_timing(&mut x);
        strip_timing(&mut y);
        assert_eq!(x, y, "{args:?}");
        if args[0] != "chi" {
            assert_eq!(a.stdout, b.stdout, "{args:?} is not byte-identical");
        }
    }
    let other_seed = json(&run(&["refute", "2,3", "--random", "50", "--seed", "8"]));
    assert_ne!(other_seed, json(&run(&["refute", "2,3", "--random", "50", "--seed", "7"])));
}

#[test]
fn every_artifact_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("graph.json", vec!["build", "2,2"]),
        ("chi.json", vec!["chi", "family:2,3"]),
        ("model.json", vec!["sphere-model", "2,2"]),
        ("refute.json", vec!["refute", "2,2", "--random", "20"]),
        ("embed.json", vec!["embed", "--choose", "2", "--delta", "0.3"]),
        ("probe.json", vec!["probe", "sign", "--n", "1"]),
        ("fan.json", vec!["fan-count", "circle:2", "tests/data/circle2_labelling.json"]),
    ];
    for (file, args) in cases {
        let path = dir.path().join(file);
        let mut full = args.clone();
        full.extend(["--out", path.to_str().unwrap()]);
        let out = run(&full);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let check = verify(&path);
        assert_eq!(check.status.code(), Some(0), "{file}: {}", String::from_utf8_lossy(&check.stdout));
        assert_eq!(json(&check)["passed"], true);
    }

    let model = dir.path().join("model.json");
    let lifted = dir.path().join("lifted.json");
    let out = run(&["lift", model.to_str().unwrap(), "3", "--out", lifted.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(verify(&lifted).status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&lifted).unwrap()).unwrap();
    assert_eq!(v["spec"], serde_json::json!([2, 2, 3]));
    assert_eq!(v["dim"], 3);
}

#[test]
fn tampered_artifacts_fail_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("refute.json");
    assert!(run(&["refute", "2,3", "--random", "3", "--out", path.to_str().unwrap()]).status.success());
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let labels = &mut v["refutations"][0]["certificate"]["labels"];
    labels[1] = labels[0].clone();
    std::fs::write(&path, v.to_string()).unwrap();
    let check = verify(&path);
    assert_eq!(check.status.code(), Some(3));
    assert_eq!(json(&check)["passed"], false);
}

#[test]
fn embed_reports_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("edges.csv");
    let out = run(&["embed", "16", "--delta", "0.1", "--csv", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["defect"].as_f64().unwrap() - 0.0951638).abs() < 1e-6);
    assert_eq!(v["report"]["checks"].as_array().unwrap().len(), 5);
    assert_eq!(v["report"]["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == true).count(), 5);
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 34);
    let fail = run(&["embed", "2", "--delta", "0.5"]);
    assert_eq!(fail.status.code(), Some(3));
}

#[test]
fn refute_a_given_colouring() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c.json");
    std::fs::write(&c, r#"{"palette":2,"colours":[1,2,1,2,2]}"#).unwrap();
    let out = run(&["refute", "2", c.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let cert = &json(&out)["refutations"][0]["certificate"];
    assert_eq!(cert["colour"], 2);
    std::fs::write(&c, r#"{"palette":3,"colours":[1,2,1,2,3]}"#).unwrap();
    assert_eq!(run(&["refute", "2", c.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["build", "0,2"]).status.code(), Some(2));
    assert_eq!(run(&["chi", "family:2,2,2,2", "--cap", "30"]).status.code(), Some(3));
    assert_eq!(run(&["chi", "family:2,2,2,2", "--budget-ms", "100"]).status.code(), Some(4));
    assert_eq!(run(&["verify", "/nonexistent/file.json"]).status.code(), Some(3));
    assert_eq!(run(&["probe", "sign", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["fan-count", "cross:2", "tests/data/circle2_labelling.json"]).status.code(), Some(2));
}
