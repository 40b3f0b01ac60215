//! End-to-end tests of the `uaw` binary surface.

use std::process::{Command, Output};

fn uaw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uaw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn normalize_rewrites_ba() {
    let out = uaw(&["normalize", "B*A", "--basis", "main"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "q^2*A*B + (q^3 - q^-1)*C - (q^2 - 1)*gamma\n"
    );
}

#[test]
fn normalize_identity_case() {
    let out = uaw(&["normalize", "A", "--basis", "pre"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "A\n");
}

#[test]
fn normalize_abc_main_has_casimir() {
    let out = uaw(&["normalize", "A*B*C", "--basis", "main"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("q^-1*Omega"), "got: {text}");
    // seven basis monomials
    assert_eq!(text.matches(|c| c == '+' || c == '-').count() >= 6, true);
}

#[test]
fn text_render_round_trips() {
    for src in ["q^-2*B*A*C - [3]_q*alpha + 2", "B*A*B*A", "(A+B)*(A-B)"] {
        let first = uaw(&["normalize", src, "--basis", "main"]);
        assert!(first.status.success());
        let rendered = stdout(&first);
        let second = uaw(&["normalize", rendered.trim(), "--basis", "main"]);
        assert!(second.status.success());
        assert_eq!(stdout(&second), rendered);
    }
}

#[test]
fn json_round_trips_bit_exactly() {
    let dir = std::env::temp_dir().join("uaw-cli-test-json");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("element.json");
    let first = uaw(&[
        "normalize",
        "q^-2*B*A - A*B + Omega*alpha",
        "--basis",
        "main",
        "--format",
        "json",
    ]);
    assert!(first.status.success());
    std::fs::write(&path, stdout(&first)).unwrap();
    let second = uaw(&[
        "normalize",
        "--input",
        path.to_str().unwrap(),
        "--basis",
        "main",
        "--format",
        "json",
    ]);
    assert!(second.status.success());
    assert_eq!(stdout(&second), stdout(&first));
}

#[test]
fn pbw_base_case_is_b() {
    let out = uaw(&["pbw", "alpha1", "0", "--method", "closed"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "B\n");
}

#[test]
fn pbw_delta_methods_agree() {
    let out = uaw(&["pbw", "delta", "1", "--method", "all"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("methods agree: yes\n"));
}

#[test]
fn pbw_delta_zero_is_usage_error() {
    let out = uaw(&["pbw", "delta", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_exponent_is_usage_error() {
    let out = uaw(&["normalize", "A^-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_single_identity() {
    let out = uaw(&["series", "sum-even", "--order", "12"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PASS  sum-even (order 12)\n");
}

#[test]
fn eval_q_specializes_bracket() {
    let out = uaw(&["eval-q", "[3]_q", "--q0", "3/2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "133/36\n");
}

#[test]
fn eval_q_rejects_forbidden_point() {
    let out = uaw(&["eval-q", "q + q^-1", "--q0", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_field_suite_passes() {
    let out = uaw(&["verify", "field", "--max-n", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("overall: PASS"));
    assert!(!text.contains("FAIL "));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = uaw(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_report() {
    let out = uaw(&["verify", "relations", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["suite"], "relations");
    assert_eq!(doc["overall"], true);
}

#[test]
fn latex_output_uses_math_conventions() {
    let out = uaw(&["normalize", "B*A", "--basis", "main", "--format", "latex"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("q^{2}"), "got: {text}");
    assert!(text.contains("\\gamma"), "got: {text}");
}
