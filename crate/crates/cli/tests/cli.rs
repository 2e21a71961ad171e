use std::path::PathBuf;
use std::process::{Command, Output};

use loday_cli::report::Report;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn loday(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loday"))
        .current_dir(root())
        .args(args)
        .output()
        .expect("loday runs")
}

fn json(args: &[&str]) -> (i32, Report) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = loday(&all);
    let report = serde_json::from_slice(&out.stdout).expect("a JSON report");
    (out.status.code().unwrap(), report)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn leibniz_check_verdicts() {
    let (code, r) = json(&["check", "leibniz", "data/nil.json"]);
    assert_eq!(code, 0);
    assert!(r.passed);
    let (code, r) = json(&["check", "leibniz", "data/idempotent.json"]);
    assert_eq!(code, 1);
    let w = r.verdicts[0].witness.as_ref().unwrap();
    assert_eq!(w.terms.len(), 1);
    assert_eq!(w.terms[0].word, "e1");
    assert_eq!(w.terms[0].coefficient, "-1");
}

#[test]
fn zinbiel_check_verdicts() {
    assert_eq!(json(&["check", "zinbiel", "data/half-shuffle-2.json"]).0, 0);
    assert_eq!(json(&["check", "zinbiel", "data/idempotent.json"]).0, 1);
}

#[test]
fn input_errors_exit_two() {
    let out = loday(&["check", "leibniz", "data/bad-index.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("index 5 out of range"));
    assert_eq!(loday(&["mu", "data/missing.json"]).status.code(), Some(2));
    assert_eq!(loday(&["verify", "--dim-max", "0"]).status.code(), Some(2));
    assert_eq!(loday(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn mu_expansion() {
    let (code, r) = json(&["mu", "data/nil.json"]);
    assert_eq!(code, 0);
    let terms: Vec<(&str, &str)> =
        r.outputs[0].terms.iter().map(|t| (t.word.as_str(), t.coefficient.as_str())).collect();
    assert_eq!(terms, [("p2⊗q1⊗q1", "-2"), ("q1⊗p2⊗q1", "1"), ("q1⊗q1⊗p2", "1")]);
}

#[test]
fn poisson_routes_agree() {
    let (code, r) = json(&["poisson", "data/f-quadratic.json", "data/g-cubic.json", "--plane", "data/nil.json"]);
    assert_eq!(code, 0);
    assert!(!r.outputs[0].terms.is_empty());
}

#[test]
fn twisted_structure() {
    let (code, r) = json(&["structure", "data/abelian-2.json", "--twist", "data/twist-2.json"]);
    assert_eq!(code, 0);
    assert_eq!(r.verdicts.len(), 3);
    let (code, r) = json(&["structure", "data/idempotent.json"]);
    assert_eq!(code, 1);
    assert!(r.verdicts.iter().any(|v| v.id == "agreement" && v.passed));
}

#[test]
fn metric_cross_check() {
    let (code, r) = json(&["metric", "data/so3.json", "data/identity-3.json"]);
    assert_eq!(code, 0);
    assert!(r.verdicts.iter().all(|v| v.passed));
    let (code, r) = json(&["metric", "data/nil.json", "data/identity-2.json"]);
    assert_eq!(code, 1);
    assert!(r.verdicts.iter().any(|v| v.id == "agreement" && v.passed));
}

#[test]
fn metric_golden() {
    let out = loday(&["metric", "data/nil.json", "data/identity-2.json"]);
    let golden = std::fs::read_to_string(root().join("docs/golden/metric-nil-identity.txt")).unwrap();
    assert_eq!(stdout(&out), golden);
}

#[test]
fn flow_double() {
    let (code, r) = json(&["flow", "data/nil.json", "data/hyperbolic-2.json"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = r.verdicts.iter().map(|v| v.id.as_str()).collect();
    assert_eq!(names, ["truncation", "gsi", "quadratic", "double"]);
    let (code, r) = json(&["flow", "data/nil.json", "data/identity-2.json"]);
    assert_eq!(code, 1);
    assert!(r.verdicts.iter().find(|v| v.id == "quadratic").unwrap().passed);
}

#[test]
fn convention_search_transcript() {
    let out = loday(&["convention-search"]);
    assert_eq!(out.status.code(), Some(0));
    let committed = std::fs::read_to_string(root().join("docs/convention-search.txt")).unwrap();
    assert_eq!(stdout(&out), committed);
}

#[test]
fn json_and_text_agree() {
    let text = stdout(&loday(&["flow", "data/nil.json", "data/identity-2.json"]));
    let (_, r) = json(&["flow", "data/nil.json", "data/identity-2.json"]);
    assert_eq!(r.to_text(), text);
}
