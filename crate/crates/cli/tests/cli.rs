use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatcert"))
        .args(args)
        .env_remove("FLATCERT_WORKERS")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (Option<i32>, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}\n{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code(), v)
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

#[test]
fn flatness_passes_and_reports_every_fiber() {
    let (code, v) = json(&["verify-flatness", "--n", "2"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "verify-flatness");
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["expected"]["rendered"], "4t+1");
    assert_eq!(v["fibers"].as_array().unwrap().len(), 4);
    assert!(v["divergent_fibers"].as_array().unwrap().is_empty());
}

#[test]
fn corrupted_family_exits_one() {
    let (code, v) = json(&["verify-flatness", "--n", "1", "--corrupt", "drop-generator:1"]);
    assert_eq!(code, Some(1));
    assert_eq!(v["verdict"], "FAIL");
    assert_eq!(v["corruption"], "drop-generator:1");
    assert!(!v["divergent_fibers"].as_array().unwrap().is_empty());
}

#[test]
fn chart_points_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("points.json");
    std::fs::write(&path, r#"[{"u": [[1], [2, "1/2"]], "d": [3, 0]}, {"u": [[0], [0, 0]], "d": ["-1/2", 5]}]"#).unwrap();
    let p = path.to_string_lossy();
    let (code, v) = json(&["verify-flatness", "--n", "2", "--points", &p]);
    assert_eq!(code, Some(0));
    assert_eq!(v["fibers"].as_array().unwrap().len(), 4);

    let out = run(&["verify-flatness", "--n", "3", "--points", &p]);
    assert_eq!(out.status.code(), Some(3));

    std::fs::write(&path, r#"{"u": [[0.5]], "d": [1]}"#).unwrap();
    assert_eq!(run(&["verify-flatness", "--n", "1", "--points", &p]).status.code(), Some(3));
}

#[test]
fn sampled_points_spec() {
    let (code, v) = json(&["verify-flatness", "--n", "1", "--points", "sampled:2", "--seed", "9"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["fibers"].as_array().unwrap().len(), 6);
    assert_eq!(v["seed"], 9);
}

#[test]
fn groebner_lists_every_pair() {
    let (code, v) = json(&["verify-groebner", "--n", "2", "--random-orders", "2"]);
    assert_eq!(code, Some(0));
    let orders = v["orders"].as_array().unwrap();
    assert_eq!(orders.len(), 5);
    for o in orders {
        assert_eq!(o["pairs"].as_array().unwrap().len(), 3);
        assert_eq!(o["holds"], true);
    }
}

#[test]
fn hilbert_on_corpus_files() {
    let cases = [
        ("diagonal_n2.ideal", "2t^2+3t+1"),
        ("conic_graph_n2.ideal", "4t+1"),
        ("point_n1.ideal", "1"),
        ("irrelevant_n1.ideal", "0"),
    ];
    for (file, poly) in cases {
        let (code, v) = json(&["hilbert", &data(file), "--method", "both"]);
        assert_eq!(code, Some(0), "{file}");
        assert_eq!(v["methods_agree"], true, "{file}");
        assert_eq!(v["hilbert_polynomial"]["rendered"], poly, "{file}");
        assert_eq!(v["tables"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn hilbert_rejects_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ideal");
    std::fs::write(&bad, "n = 1\nx1 + y1\n").unwrap();
    assert_eq!(run(&["hilbert", &bad.to_string_lossy()]).status.code(), Some(3));
    let missing: PathBuf = dir.path().join("missing.ideal");
    assert_eq!(run(&["hilbert", &missing.to_string_lossy()]).status.code(), Some(3));
}

#[test]
fn xi_trials_at_lines() {
    let (code, v) = json(&["xi-trials", "1", "1", "--trials", "4"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["formula_matches"], 4);
    assert_eq!(v["records"].as_array().unwrap().len(), 4);
}

#[test]
fn torus_and_primary() {
    let (code, v) = json(&["torus-check", "--n", "1"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["symbolic"]["holds"], true);
    let (code, v) = json(&["primary-check", "--n", "3"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn conic_with_and_without_rational_points() {
    let (code, v) = json(&["conic-equations", "--z", "1,0,0;0,1,0;0,0,-1", "--samples", "6"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["points_checked"], 6);
    let (code, v) = json(&["conic-equations", "--z", "1,0,0;0,1,0;0,0,1"]);
    assert_eq!(code, Some(2));
    assert_eq!(v["verdict"], "INCONCLUSIVE");
    assert_eq!(run(&["conic-equations", "--z", "1,2;2,1"]).status.code(), Some(3));
}

#[test]
fn output_file_and_workers() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let out = run(&["primary-check", "--n", "2", "--format", "json", "--output", &a.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(written["command"], "primary-check");

    let env_run = Command::new(env!("CARGO_BIN_EXE_flatcert"))
        .args(["primary-check", "--n", "1"])
        .env("FLATCERT_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(env_run.status.code(), Some(0));
    assert_eq!(run(&["--workers", "0", "primary-check"]).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(run(&["verify-flatness", "--n", "0"]).status.code(), Some(3));
    assert_eq!(run(&["verify-flatness", "--t-max", "2"]).status.code(), Some(3));
    assert_eq!(run(&["verify-flatness", "--corrupt", "swap:1"]).status.code(), Some(3));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
