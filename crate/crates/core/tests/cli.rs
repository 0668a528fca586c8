use std::path::Path;
use std::process::Command;

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_kleinian");

fn run(args: &[&str], cwd: &Path) -> (i32, Value, String) {
    let out = Command::new(BIN).args(args).current_dir(cwd).output().unwrap();
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), report, String::from_utf8_lossy(&out.stderr).into_owned())
}

fn without_time(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("wall_time_s");
    v
}

const INVOLUTION: &str = r#"{"generators":[{"kind":"inversion","circle":{"A":1,"B_re":0,"B_im":0,"D":-1}}]}"#;

#[test]
fn solve_t0_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let (code, rep, _) = run(&["solve-t0"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(rep["schema"], 1);
    assert_eq!(rep["command"], "solve-t0");
    assert_eq!(rep["exit_code"], 0);
}

#[test]
fn residuals_away_from_t0_fail_checks() {
    let dir = tempfile::tempdir().unwrap();
    let (code, rep, _) = run(&["solve-t0", "--t", "1.5"], dir.path());
    assert_eq!(code, 2);
    assert!(rep["checks"].as_array().unwrap().iter().any(|c| c["passed"] == false));
}

#[test]
fn non_discrete_datum_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let (code, rep, stderr) = run(&["quad", "--n", "3", "--s", "3", "--t", "9", "info"], dir.path());
    assert_eq!(code, 3);
    assert!(rep["error"].is_string());
    assert!(!stderr.is_empty());
}

#[test]
fn malformed_generators_report_the_line() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.json"), "{\n\"generators\": [\n{\"kind\": \"blob\"}]}").unwrap();
    let (code, rep, _) = run(&["orbit", "--gens", "g.json", "--seed", "1,0,0,-4"], dir.path());
    assert_eq!(code, 3);
    assert!(rep["error"].as_str().unwrap().contains("line 3"), "{}", rep["error"]);
}

#[test]
fn usage_errors_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["quad", "--n", "3"], dir.path()).0, 3);
    assert_eq!(run(&["--help"], dir.path()).0, 0);
}

#[test]
fn item_cap_reports_truncation() {
    let dir = tempfile::tempdir().unwrap();
    let (code, rep, _) = run(&["quad", "--n", "3", "--s", "2", "--t", "1.5", "--max-items", "10", "orbit"], dir.path());
    assert_eq!(code, 4);
    assert_eq!(rep["exit_code"], 4);
}

#[test]
fn single_involution_orbit_has_two_items() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.json"), INVOLUTION).unwrap();
    let (code, rep, _) = run(&["orbit", "--gens", "g.json", "--seed", "1,0,0,-4", "--out", "o.jsonl"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(rep["results"]["items"], 2);
    let text = std::fs::read_to_string(dir.path().join("o.jsonl")).unwrap();
    assert_eq!(text.lines().count(), 3);
    let header: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(header["kind"], "orbit_set");
    assert_eq!(header["truncated"], false);
}

#[test]
fn json_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let (code, rep, _) = run(&["--json", "r.json", "quad", "--n", "3", "--s", "2", "--t", "2", "info"], dir.path());
    assert_eq!(code, 0);
    let file: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    for key in ["schema", "command", "inputs", "outputs", "checks", "results", "exit_code", "wall_time_s"] {
        assert!(file.get(key).is_some(), "missing {key}");
    }
    assert_eq!(without_time(file), without_time(rep));
}

#[test]
fn reruns_give_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["quad", "--n", "3", "--s", "2", "--t", "1.5", "exotic"];
    let (_, a, _) = run(&args, dir.path());
    let (_, b, _) = run(&args, dir.path());
    assert_eq!(without_time(a), without_time(b));
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let base = ["quad", "--n", "3", "--s", "2", "--t", "1.5", "render", "-o"];
    assert_eq!(run(&[&base[..], &["x.svg"]].concat(), dir.path()).0, 0);
    assert_eq!(run(&[&base[..], &["y.svg"]].concat(), dir.path()).0, 0);
    for part in ["a", "b"] {
        let x = std::fs::read(dir.path().join(format!("x_{part}.svg"))).unwrap();
        let y = std::fs::read(dir.path().join(format!("y_{part}.svg"))).unwrap();
        assert!(x.starts_with(b"<svg") || x.starts_with(b"<?xml"));
        assert_eq!(x, y, "figure {part}");
    }
}

#[test]
fn repro_writes_every_artifact() {
    let dir = tempfile::tempdir().unwrap();
    let (code, rep, _) = run(&["repro", "--out-dir", "out"], dir.path());
    assert_eq!(code, 0, "{rep}");
    let out = dir.path().join("out");
    for f in ["commands.txt", "t0.json", "fig4_a.svg", "fig4_b.svg"] {
        assert!(out.join(f).exists(), "missing {f}");
    }
}
