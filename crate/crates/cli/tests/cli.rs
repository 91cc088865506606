use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monodromy")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json on stdout")
}

fn scene_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn analyze_cusp_json() {
    let out = run(&["analyze", "--poly", "x^2 + y^3", "--n", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["zeta"]["pretty"], "(1-t^2)(1-t^3)(1-t^6)^-1");
    let rows = v["jordan"]["rows"].as_array().unwrap();
    for lambda in ["1/6", "5/6"] {
        let r = rows.iter().find(|r| r["eigenvalue"] == lambda).unwrap();
        assert_eq!((r["size_n"].as_u64(), r["size_n_minus_1"].as_u64()), (Some(0), Some(1)));
    }
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let top: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("  \"").and_then(|r| r.split('"').next()))
        .collect();
    assert_eq!(
        top,
        [
            "schema_version",
            "input",
            "gamma_infinity",
            "atypical_faces",
            "admissible_faces",
            "A_f",
            "nondegeneracy",
            "zeta",
            "multiplicities",
            "jordan",
            "warnings"
        ]
    );
}

#[test]
fn json_is_deterministic() {
    let args = ["analyze", "--poly", "x^3 + y^4 + z^5 + x*y*z", "--n", "3", "--json", "--seed", "9"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn degenerate_input_exits_2_with_report() {
    let out = run(&["analyze", "--poly", "x^2 + 2*x*y + y^2", "--n", "2", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["nondegeneracy"]["overall"]["status"], "DegenerateCertified");
    assert!(v["warnings"].as_array().unwrap().iter().any(|w| w.as_str().unwrap().contains("degenerate")));
}

#[test]
fn lower_dimensional_input_exits_2() {
    let out = run(&["analyze", "--poly", "x^2", "--n", "2", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["zeta"].is_null());
}

#[test]
fn parse_error_exits_1_with_position() {
    let out = run(&["analyze", "--poly", "x + z", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 4"));
    let out = run(&["analyze", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn polynomial_from_file() {
    let f = scene_file("x^2 + y^3\n");
    let out = run(&["analyze", "--file", f.path().to_str().unwrap(), "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("(1-t^2)(1-t^3)(1-t^6)^-1"));
}

#[test]
fn torus_mode() {
    let out = run(&["analyze", "--poly", "x + x^-1", "--n", "1", "--laurent", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["zeta"]["pretty"], "(1-t)^2");
}

#[test]
fn local_scenes() {
    let f = scene_file(r#"{"n": 2, "boundary": ["x1^2 + x2"]}"#);
    let out = run(&["local", "--scene", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["A_circ"]["eigenvalues"], serde_json::json!(["0/1", "1/2"]));

    let f = scene_file(r#"{"n": 2, "interior": ["x*y"], "boundary": []}"#);
    let out = run(&["local", "--scene", f.path().to_str().unwrap(), "--json"]);
    let v = json(&out);
    assert_eq!(v["A_circ"]["eigenvalues"], serde_json::json!(["0/1"]));
    assert!(v["warnings"][0].as_str().unwrap().contains("not convenient"));

    let f = scene_file(r#"{"n": 2, "boundary": "#);
    assert_eq!(run(&["local", "--scene", f.path().to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn selftest_codes() {
    let out = run(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let out = run(&["selftest", "--filter", "atypical", "--json"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 4);
    assert_eq!(run(&["selftest", "--inject-fault"]).status.code(), Some(3));
    assert_eq!(run(&["selftest", "--filter", "no-such-case"]).status.code(), Some(1));
}
