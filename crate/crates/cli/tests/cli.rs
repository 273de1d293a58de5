use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(file)
}

fn bondkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bondkit")).args(args).env("BONDKIT_COLOR", "0").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn bennett_args(cmd: &str) -> Vec<String> {
    vec![
        cmd.to_string(),
        fixture_path("bennett.json").display().to_string(),
        fixture_path("bennett-curve.json").display().to_string(),
    ]
}

fn run_strings(args: &[String]) -> Output {
    bondkit(&args.iter().map(String::as_str).collect::<Vec<_>>())
}

#[test]
fn bonds_report_for_bennett_files() {
    let mut args = bennett_args("bonds");
    args.extend(["--format".into(), "json".into()]);
    let o = run_strings(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["bonds"].as_array().unwrap().len(), 4);
    assert_eq!(v["aggregate"]["D"], serde_json::json!([[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]]));
    assert_eq!(v["bonds"][0]["coords"], serde_json::json!(["-1-i", "-i", "-1-i", "i"]));
}

#[test]
fn verify_text_and_json() {
    let o = run_strings(&bennett_args("verify"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("closure: holds\n"));
    let o = bondkit(&["verify", "--fixture", "spherical-ex2", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["closed"], true);
    assert!(v["samples"].as_array().unwrap().iter().all(|s| s["ok"] == true));
}

#[test]
fn broken_closure_exits_with_analysis_error() {
    let dir = tempfile::tempdir().unwrap();
    let curve = dir.path().join("curve.json");
    std::fs::write(&curve, r#"{"kind": "rational", "coords": ["t", "t", "t-1", "-t"]}"#).unwrap();
    let l = fixture_path("bennett.json").display().to_string();
    let o = bondkit(&["verify", &l, curve.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("closure: violated"));
    let o = bondkit(&["bonds", &l, curve.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("closure violated"));
}

#[test]
fn malformed_input_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"n\": 1, \"joints\": [\n    {\"primal\": [\"0\", \"1\", \"0\", \"0\"], \"dual\": [\"0\", \"0\", \"0\", \"1/\"]}\n  ]\n}\n").unwrap();
    let o = bondkit(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 3, column"), "{err}");
    std::fs::write(&bad, "{\"n\": 4, \"joints\": [").unwrap();
    let o = bondkit(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1, column"));
    let o = bondkit(&["verify", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let o = run_strings(&{
        let mut a = bennett_args("bonds");
        a.extend(["--format".into(), "dot".into()]);
        a
    });
    assert_eq!(o.status.code(), Some(2));
    let o = bondkit(&["bonds", fixture_path("bennett.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("configuration curve"));
    assert_eq!(bondkit(&["classify", "--fixture", "bennett-ex1"]).status.code(), Some(2));
    assert_eq!(bondkit(&["bonds", "--fixture", "nonexistent"]).status.code(), Some(2));
    assert_eq!(bondkit(&["bonds", "--fixture", "bennett-ex1", "--order", "0"]).status.code(), Some(2));
    assert_eq!(bondkit(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bricard_bonds_are_unsupported() {
    let o = bondkit(&["bonds", "--fixture", "bricard-ex13"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unsupported configuration"));
}

#[test]
fn goldberg_diagram_reproduces_cut_degree() {
    let o = bondkit(&["diagram", "--fixture", "goldberg-5r"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("graph \"goldberg-5r\" {"));
    assert_eq!(dot.matches("constraint=false").count(), 3);
    let o = bondkit(&["diagram", "--fixture", "goldberg-5r", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arcs = v["arcs"].as_array().unwrap();
    let crossing = |a: &Value| {
        let j: Vec<i64> = serde_json::from_value(a["joints"].clone()).unwrap();
        let inside = |k: i64| k == 4 || k == 5;
        inside(j[0]) != inside(j[1])
    };
    let twice: i64 = arcs.iter().filter(|a| crossing(a)).map(|a| a["multiplicity"].as_i64().unwrap() * a["bonds"].as_i64().unwrap()).sum();
    assert_eq!(twice / 2, 2);
}

#[test]
fn classify_goldberg() {
    let o = bondkit(&["classify", "--fixture", "goldberg-5r", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "goldberg");
    let o = bondkit(&["classify", "--fixture", "goldberg-5r"]);
    assert!(stdout(&o).starts_with("verdict: Goldberg linkage\n"));
}

#[test]
fn outputs_are_deterministic() {
    for cmd in ["bonds", "distances", "diagram", "all"] {
        let a = bondkit(&[cmd, "--fixture", "planar-ex3", "--format", "json"]);
        let b = bondkit(&[cmd, "--fixture", "planar-ex3", "--format", "json"]);
        assert_eq!(a.status.code(), Some(0), "{cmd}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
    let a = bondkit(&["diagram", "--fixture", "bennett-ex1"]);
    let b = bondkit(&["diagram", "--fixture", "bennett-ex1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let o = bondkit(&["distances", "--fixture", "bennett-ex1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["linkage", "n", "b", "D", "K"]);
    assert_eq!(v["b"], serde_json::json!([1, 1, 1, 1]));
}

#[test]
fn color_follows_environment() {
    let run = |color: &str| {
        Command::new(env!("CARGO_BIN_EXE_bondkit"))
            .args(["verify", "--fixture", "bennett-ex1"])
            .env("BONDKIT_COLOR", color)
            .output()
            .unwrap()
    };
    assert!(stdout(&run("1")).contains("\x1b[32mholds\x1b[0m"));
    assert!(!stdout(&run("0")).contains('\x1b'));
    let o = Command::new(env!("CARGO_BIN_EXE_bondkit"))
        .args(["verify", "--fixture", "bennett-ex1", "--format", "json"])
        .env("BONDKIT_COLOR", "1")
        .output()
        .unwrap();
    assert!(!stdout(&o).contains('\x1b'));
}

#[test]
fn all_runs_on_every_fixture_with_a_curve() {
    for name in ["bennett-ex1", "spherical-ex2", "planar-ex3", "sixR-ex11", "sixR-ex12", "goldberg-5r"] {
        let o = bondkit(&["all", "--fixture", name, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["verify"]["closed"], true);
        assert_eq!(v.get("classify").is_some(), name == "goldberg-5r");
    }
    let o = bondkit(&["all", "--fixture", "goldberg-5r"]);
    let t = stdout(&o);
    for section in ["== verify ==", "== bonds ==", "== distances ==", "== diagram ==", "== classify =="] {
        assert!(t.contains(section), "{section}");
    }
}
