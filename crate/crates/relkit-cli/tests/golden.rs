//! Byte-exact golden outputs of the `relkit` binary: rendering and
//! evaluation must be stable across runs and across releases.

use std::path::Path;
use std::process::{Command, Output};

fn relkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relkit"))
        .args(args)
        .env_remove("RELKIT_SEED")
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> (String, String) {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let model = dir.join("model.rk");
    let expected = std::fs::read_to_string(dir.join(name)).expect("golden file exists");
    (model.to_string_lossy().into_owned(), expected)
}

fn assert_golden(name: &str, args: &[&str]) {
    let (model, expected) = golden(name);
    let mut full = vec![args[0], "-f", model.as_str()];
    full.extend_from_slice(&args[1..]);
    let first = relkit(&full);
    assert!(
        first.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&first.stderr)
    );
    assert_eq!(
        String::from_utf8_lossy(&first.stdout),
        expected,
        "golden mismatch for {name}"
    );
    let second = relkit(&full);
    assert_eq!(first.stdout, second.stdout, "unstable output for {name}");
}

#[test]
fn eval_identity_matrix() {
    assert_golden("eval_identity.txt", &["eval", "-e", "I(X)"]);
}

#[test]
fn eval_membership_dense() {
    assert_golden("eval_eps_dense.txt", &["eval", "-e", "eps(X)", "--dense"]);
}

#[test]
fn eval_syq_sets_style() {
    assert_golden(
        "eval_syq_sets.txt",
        &["eval", "-e", "syq(eps(X), eps(X))", "--style", "sets"],
    );
}

#[test]
fn eval_existential_image_dense() {
    assert_golden("eval_exim_dense.txt", &["eval", "-e", "exim(S)", "--dense"]);
}

#[test]
fn render_relation_both_styles() {
    assert_golden("render_S_matrix.txt", &["render", "S"]);
    assert_golden("render_S_sets.txt", &["render", "S", "--style", "sets"]);
}

#[test]
fn render_operation_table() {
    assert_golden("render_F_cayley.txt", &["render", "F"]);
}

#[test]
fn whitespace_in_expressions_is_irrelevant() {
    let (model, expected) = golden("eval_eps_dense.txt");
    let out = relkit(&["eval", "-f", &model, "-e", "  eps( X )  ", "--dense"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), expected);
}

#[test]
fn exit_codes_separate_failure_kinds() {
    let (model, _) = golden("eval_identity.txt");
    let ok = relkit(&["eval", "-f", &model, "-e", "R"]);
    assert_eq!(ok.status.code(), Some(0));

    let parse = relkit(&["eval", "-f", &model, "-e", "R \\ R / R"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr)
        .contains("non-associative residual chain requires parens"));

    let typing = relkit(&["eval", "-f", &model, "-e", "R * S * R"]);
    assert_eq!(typing.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&typing.stderr).into_owned();
    assert!(msg.contains("B4") && msg.contains('X'), "{msg}");

    let unbound = relkit(&["eval", "-f", &model, "-e", "nothing"]);
    assert_eq!(unbound.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unbound.stderr).contains("unbound identifier"));

    let missing = relkit(&["render", "-f", &model, "nothing"]);
    assert_eq!(missing.status.code(), Some(2));
}
