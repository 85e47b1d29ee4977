use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hopflab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopflab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn zoo(dir: &Path, file: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(file);
    let mut full = vec!["zoo"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let o = hopflab(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let o = hopflab(&full);
    (code(&o), serde_json::from_str(&stdout(&o)).expect("json output"))
}

#[test]
fn sweedler_checks_and_tampering_is_caught() {
    let dir = TempDir::new().unwrap();
    let sw = zoo(dir.path(), "sweedler4.json", &["sweedler4", "--field", "Q"]);
    assert_eq!(code(&hopflab(&["check", sw.to_str().unwrap(), "--kind", "hopf"])), 0);

    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&sw).unwrap()).unwrap();
    doc["antipode"]["entries"][0] = Value::String("2".into());
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    let (c, report) = json(&["check", bad.to_str().unwrap(), "--kind", "hopf"]);
    assert_eq!(c, 1);
    assert_eq!(report["passed"], Value::Bool(false));
    let failing: Vec<&Value> = report["report"]["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a["passed"] == Value::Bool(false))
        .collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|a| a["witness"].is_object()));
}

#[test]
fn truncated_and_unknown_input_exit_two() {
    let dir = TempDir::new().unwrap();
    let sw = zoo(dir.path(), "sw.json", &["sweedler4"]);
    let text = std::fs::read_to_string(&sw).unwrap();
    let cut = dir.path().join("cut.json");
    std::fs::write(&cut, &text[..text.len() / 3]).unwrap();
    assert_eq!(code(&hopflab(&["check", cut.to_str().unwrap()])), 2);
    assert_eq!(code(&hopflab(&["check", "/nonexistent/file.json"])), 2);
    assert_eq!(code(&hopflab(&["zoo", "no-such-object"])), 2);
    assert_eq!(code(&hopflab(&["frobnicate"])), 2);
}

#[test]
fn kind_mismatch_exits_two() {
    let dir = TempDir::new().unwrap();
    let d3 = zoo(
        dir.path(),
        "d3.json",
        &["diagonal-group-algebra", "--group", "z3", "--field", "F3"],
    );
    let sw = zoo(dir.path(), "sw.json", &["sweedler4"]);
    assert_eq!(code(&hopflab(&["michaelis", d3.to_str().unwrap()])), 2);
    assert_eq!(code(&hopflab(&["group-michaelis", sw.to_str().unwrap()])), 2);
    assert_eq!(code(&hopflab(&["check", sw.to_str().unwrap(), "--kind", "lie"])), 2);
    assert_eq!(code(&hopflab(&["dagger", sw.to_str().unwrap()])), 2);
}

#[test]
fn dual_and_dagger_round_trips_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let p = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    let z2 = zoo(dir.path(), "z2.json", &["group-algebra", "--group", "z2"]);
    assert_eq!(code(&hopflab(&["dual", z2.to_str().unwrap(), "-o", &p("z2d.json")])), 0);
    assert_eq!(code(&hopflab(&["dual", &p("z2d.json"), "-o", &p("z2dd.json")])), 0);
    assert_eq!(std::fs::read(&z2).unwrap(), std::fs::read(p("z2dd.json")).unwrap());
    let dual_text = std::fs::read_to_string(p("z2d.json")).unwrap();
    assert!(dual_text.contains("\"0*\""));

    let d3 = zoo(
        dir.path(),
        "d3.json",
        &["diagonal-group-algebra", "--group", "z3", "--field", "F3"],
    );
    assert_eq!(
        code(&hopflab(&["dagger", d3.to_str().unwrap(), "-o", &p("d3t.json")])),
        0
    );
    assert_eq!(code(&hopflab(&["check", &p("d3t.json"), "--kind", "turaev-coalg"])), 0);
    assert_eq!(code(&hopflab(&["dagger", &p("d3t.json"), "-o", &p("d3tt.json")])), 0);
    assert_eq!(std::fs::read(&d3).unwrap(), std::fs::read(p("d3tt.json")).unwrap());
}

#[test]
fn certificates() {
    let dir = TempDir::new().unwrap();
    let d3 = zoo(
        dir.path(),
        "diag_z3_f3.json",
        &["diagonal-group-algebra", "--group", "z3", "--field", "F3"],
    );
    let (c, cert) = json(&["group-michaelis", d3.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(cert["dims_q"], serde_json::json!([0, 1, 1]));
    assert_eq!(cert["dims_p"], serde_json::json!([0, 1, 1]));

    let t3 = zoo(dir.path(), "trunc_p3.json", &["truncated-poly", "--p", "3"]);
    let (c, cert) = json(&["michaelis", t3.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(cert["dim_primitives_of_dual"], 1);
    assert_eq!(cert["dim_indecomposables"], 1);

    let tr = zoo(dir.path(), "trivial.json", &["trivial"]);
    let o = hopflab(&["primitives", tr.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dim P(H) = 0"));

    let (c, cert) = json(&["michtur1", d3.to_str().unwrap()]);
    assert_eq!((c, cert["passed"].clone()), (0, Value::Bool(true)));
    let (c, gp) = json(&["gprimitives", d3.to_str().unwrap(), "--g", "2"]);
    assert_eq!(c, 0);
    assert_eq!(gp["g"], 2);
    let (c, gi) = json(&["gindecomposables", d3.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(gi["per_g"].as_array().unwrap().len(), 3);

    let z2 = zoo(dir.path(), "z2.json", &["group-algebra", "--group", "z2"]);
    let (c, ints) = json(&["integrals", z2.to_str().unwrap()]);
    assert_eq!((c, ints["dim"].clone()), (0, serde_json::json!(1)));
}

#[test]
fn json_output_has_no_timings_and_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let d3 = zoo(dir.path(), "d3.json", &["diagonal-group-algebra", "--group", "s3"]);
    let a = stdout(&hopflab(&["group-michaelis", d3.to_str().unwrap(), "--json"]));
    let b = stdout(&hopflab(&["group-michaelis", d3.to_str().unwrap(), "--json"]));
    assert_eq!(a, b);
    assert!(!a.contains("time"));
    let human = stdout(&hopflab(&["group-michaelis", d3.to_str().unwrap()]));
    assert!(human.contains("time: "));
}

#[test]
fn verify_suite_keeps_argument_order() {
    let dir = TempDir::new().unwrap();
    let mut paths = Vec::new();
    for (i, args) in [
        vec!["sweedler4"],
        vec!["exterior-super", "--n", "2"],
        vec!["diagonal-group-algebra", "--group", "s3"],
        vec!["matrix-algebra", "--n", "2"],
        vec!["function-hopf", "--group", "z3", "--field", "Fp:3"],
    ]
    .into_iter()
    .enumerate()
    {
        paths.push(
            zoo(dir.path(), &format!("{i}.json"), &args)
                .to_str()
                .unwrap()
                .to_string(),
        );
    }
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{").unwrap();
    paths.push(broken.to_str().unwrap().to_string());
    let mut args = vec!["verify-suite"];
    args.extend(paths.iter().map(String::as_str));
    let (c, out) = json(&args);
    assert_eq!(c, 2);
    let results = out["results"].as_array().unwrap();
    let order: Vec<&str> = results.iter().map(|r| r["path"].as_str().unwrap()).collect();
    assert_eq!(order, paths.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(out["passed"], 5);
    let (_, again) = json(&args);
    assert_eq!(out, again);
}
