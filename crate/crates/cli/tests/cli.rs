use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn koszul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_koszul"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &Path, name: &str, value: Value) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, value.to_string()).unwrap();
    path
}

struct Eval {
    dir: TempDir,
    algebra: PathBuf,
    source: PathBuf,
    args: PathBuf,
}

impl Eval {
    fn new(algebra: Value, source: Value, args: Value) -> Self {
        let dir = tempfile::tempdir().unwrap();
        let algebra = write(dir.path(), "algebra.json", algebra);
        let source = write(dir.path(), "source.json", source);
        let args = write(dir.path(), "args.json", args);
        Eval { dir, algebra, source, args }
    }

    fn run(&self, n: usize, extra: &[&str]) -> Output {
        let n = n.to_string();
        let mut argv = vec![
            "eval",
            "--algebra",
            self.algebra.to_str().unwrap(),
            "--source",
            self.source.to_str().unwrap(),
            "--args",
            self.args.to_str().unwrap(),
            "--n",
            &n,
        ];
        argv.extend_from_slice(extra);
        koszul(&argv)
    }
}

fn free_xa() -> Value {
    json!({"kind": "free-unital", "generators": [{"id": "x", "degree": 0}, {"id": "a", "degree": 0}]})
}

fn left_mult_x() -> Value {
    json!({"endomorphism": {"kind": "left-mult", "x": [{"word": ["x"], "coeff": 1}]}})
}

#[test]
fn first_bracket_of_left_multiplication() {
    let e = Eval::new(free_xa(), left_mult_x(), json!([[{"word": ["a"], "coeff": 1}]]));
    let out = e.run(1, &[]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 1);
    assert_eq!(doc["formula"], "recursive");
    assert_eq!(
        doc["value"],
        json!([
            {"word": ["x", "a"], "coeff": "1/2"},
            {"word": ["a", "x"], "coeff": "-1/2"}
        ])
    );
    let tex = e.run(1, &["--format", "latex", "--formula", "bering"]);
    assert_eq!(stdout(&tex).trim(), "\\frac{1}{2}\\,x a - \\frac{1}{2}\\,a x");
}

#[test]
fn second_derivative_on_polynomials() {
    let e = Eval::new(
        json!({"kind": "polynomial", "varDegree": 0}),
        json!({"endomorphism": {"kind": "polynomial-derivative", "order": 2}}),
        json!([[{"word": 2, "coeff": 1}], [{"word": 3, "coeff": 1}]]),
    );
    for formula in ["recursive", "bering", "bandiera"] {
        let out = e.run(2, &["--formula", formula]);
        assert!(out.status.success(), "{}", stderr(&out));
        let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(doc["value"], json!([{"word": 3, "coeff": "12"}]), "{formula}");
    }
}

#[test]
fn zeroth_bracket_is_image_of_unit() {
    let e = Eval::new(
        free_xa(),
        json!({"endomorphism": {"kind": "sum", "terms": [
            {"kind": "left-mult", "x": [{"word": ["x"], "coeff": 1}]},
            {"kind": "scale", "c": "3/2"}
        ]}}),
        json!([]),
    );
    let out = e.run(0, &[]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        doc["value"],
        json!([{"word": [], "coeff": "3/2"}, {"word": ["x"], "coeff": "1"}])
    );
}

#[test]
fn eval_rejects_bad_input() {
    let e = Eval::new(free_xa(), left_mult_x(), json!([[{"word": ["a"], "coeff": 1}]]));
    let out = e.run(2, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("holds 1 arguments"));

    let out = e.run(1, &["--formula", "nope"]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::write(&e.args, "[[{\"word\": [\"q\"], \"coeff\": 1}]]").unwrap();
    let out = e.run(1, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("malformed arguments"));

    std::fs::write(&e.source, "{\"endomorphism\": ").unwrap();
    let out = e.run(1, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 1"), "{}", stderr(&out));

    let missing = e.dir.path().join("missing.json");
    let out = koszul(&[
        "eval",
        "--algebra",
        missing.to_str().unwrap(),
        "--source",
        e.source.to_str().unwrap(),
        "--args",
        e.args.to_str().unwrap(),
        "--n",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cannot read"));
}

#[test]
fn gauge_table() {
    let out = koszul(&["tables", "--what", "gaugeK", "--max", "7"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["table"], "gaugeK");
    assert_eq!(
        doc["rows"],
        json!([["1", "-1/2", "1/2", "-2/3", "11/12", "-3/4", "-11/6"]])
    );
    let text = koszul(&["tables", "--what", "gaugeK", "--max", "7", "--format", "text"]);
    assert!(stdout(&text).contains("11/12"));
}

#[test]
fn stirling_and_bernoulli_tables() {
    let out = koszul(&["tables", "--what", "stirling", "--max", "3"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["rows"], json!([["1"], ["1", "1"], ["1", "3", "1"]]));

    let out = koszul(&["tables", "--what", "bernoulli", "--max", "4"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["rows"], json!([["1", "-1/2", "1/6", "0", "-1/30"]]));

    let out = koszul(&["tables", "--what", "bernoulli2d", "--max", "4"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows[1][1], "1/3");
    assert_eq!(rows[2][2], "2/15");
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(v, &rows[j][i]);
        }
    }
}

#[test]
fn unknown_table_is_an_error() {
    let out = koszul(&["tables", "--what", "catalan"]);
    assert_eq!(out.status.code(), Some(2));
    let out = koszul(&["tables", "--what", "bernoulli", "--max", "100000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_selected_checks_and_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = koszul(&[
        "verify",
        "--check",
        "bernoulli-identities",
        "--check",
        "closed-forms",
        "--samples",
        "5",
        "--json",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("2 of 2 checks passed"));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let ids: Vec<_> = doc.as_array().unwrap().iter().map(|r| r["checkId"].clone()).collect();
    assert_eq!(ids, vec![json!("bernoulli-identities"), json!("closed-forms")]);
    assert!(doc.as_array().unwrap().iter().all(|r| r["status"] == "pass"));
}

#[test]
fn verify_mutated_suite_fails() {
    let dir = tempfile::tempdir().unwrap();
    let suite = write(
        dir.path(),
        "suite.json",
        json!([
            {"checkId": "cross-formula", "maxArity": 3, "samples": 5,
             "mutation": {"kind": "two-index", "i": 1, "j": 1, "delta": "1/7"}},
            {"checkId": "bernoulli-identities"}
        ]),
    );
    let out = koszul(&["verify", "--suite", suite.to_str().unwrap(), "--jobs", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL  cross-formula"));
    assert!(text.contains("lhs:"));
    assert!(text.contains("1 of 2 checks passed"));
}

#[test]
fn verify_input_errors() {
    let out = koszul(&["verify", "--check", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let suite = dir.path().join("suite.json");
    std::fs::write(&suite, "[{\"checkId\": 3}]").unwrap();
    let out = koszul(&["verify", "--suite", suite.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("malformed suite"));
}

#[test]
fn verify_lists_checks() {
    let out = koszul(&["verify", "--list"]);
    assert!(out.status.success());
    let ids: Vec<_> = stdout(&out).lines().map(str::to_owned).collect();
    assert!(ids.contains(&"jacobi".to_owned()));
    assert!(ids.contains(&"unit-reduction".to_owned()));
}
