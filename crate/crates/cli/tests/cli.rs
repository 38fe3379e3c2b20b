//! End-to-end checks of the binary: verdicts, report structure, exit
//! codes, and determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn freebraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freebraid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn json(output: &Output) -> Value {
    serde_json::from_str(stdout(output).trim()).expect("one JSON document")
}

#[test]
fn equiv_reports_the_triangle_relation() {
    let out = freebraid(&[
        "equiv",
        "--n",
        "3",
        "--kind",
        "plain",
        "a(1,2) a(1,3) a(2,3)",
        "a(2,3) a(1,3) a(1,2)",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("equivalent"));
}

#[test]
fn profile_reports_three_nontrivial_deletions() {
    let out = freebraid(&[
        "profile",
        "--n",
        "3",
        "a(1,2) a(2,3) a(1,3) a(2,3) a(1,3) a(2,3) a(1,2) a(2,3)",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("nontrivial").count(), 3);
}

#[test]
fn reduce_prints_the_empty_word() {
    let out = freebraid(&["reduce", "--n", "2", "--kind", "plain", "a(1,2) a(1,2)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "");
}

#[test]
fn structured_reports_round_trip_and_repeat() {
    let args = [
        "--format",
        "structured",
        "equiv",
        "--n",
        "3",
        "--kind",
        "plain",
        "a(1,2) a(1,3) a(2,3)",
        "a(2,3) a(1,3) a(1,2)",
    ];
    let first = json(&freebraid(&args));
    let mut second = json(&freebraid(&args));

    assert_eq!(first["command"], "equiv");
    assert_eq!(first["context"]["n"], 3);
    assert_eq!(first["verdict"], "equivalent");
    let witness = first["outputs"]["witness"].as_array().unwrap();
    assert_eq!(witness.len(), 1);
    assert_eq!(witness[0]["tag"], "plain-3");
    assert!(witness[0]["position"].is_number());
    assert!(witness[0]["direction"].is_string());

    // deterministic modulo timing
    let mut first = first;
    first.as_object_mut().unwrap().remove("timing_ms");
    second.as_object_mut().unwrap().remove("timing_ms");
    assert_eq!(first, second);
}

#[test]
fn structured_map_output_parses_back() {
    let out = freebraid(&[
        "--format",
        "structured",
        "map",
        "psi:2",
        "--n",
        "3",
        "a(1,2) a(2,3) a(1,3) a(2,3) a(1,3) a(2,3) a(1,2) a(2,3)",
    ]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["outputs"]["context"]["kind"], "dotted");
    assert_eq!(
        report["outputs"]["word"],
        "t(1) t(2) a(1,2) t(2) a(1,2) t(2) t(1) t(2)"
    );
}

#[test]
fn brunnian_certificate_appears_in_the_report() {
    let out = freebraid(&[
        "--format",
        "structured",
        "brunnian",
        "--n",
        "3",
        "a(1,2) a(2,3) a(1,3) a(2,3) a(1,3) a(2,3) a(1,2) a(2,3)",
    ]);
    let report = json(&out);
    assert_eq!(report["outputs"]["candidate"], "candidate");
    assert_eq!(report["outputs"]["certificate"]["strand"], 1);
}

#[test]
fn normalize_reports_blocks_as_triples() {
    let out = freebraid(&[
        "--format",
        "structured",
        "normalize",
        "--n",
        "2",
        "t(1) t(2) a(1,2) t(2) t(1)",
    ]);
    let report = json(&out);
    assert_eq!(report["outputs"]["blocks"], serde_json::json!([[1, 2, 0]]));
    assert_eq!(report["outputs"]["flattened"], "a(1,2)");
}

#[test]
fn unknown_verdict_is_a_success() {
    let out = freebraid(&[
        "--max-states",
        "1",
        "trivial",
        "--n",
        "3",
        "--kind",
        "plain",
        "a(1,2) a(1,3) a(1,2) a(1,3)",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("unknown"));
}

#[test]
fn computation_errors_exit_one() {
    let out = freebraid(&["map", "chi", "--n", "2", "t(1)"]);
    assert_eq!(out.status.code(), Some(1));
    let out = freebraid(&["reduce", "--n", "2", "--kind", "plain", "t(1)"]);
    assert_eq!(out.status.code(), Some(1));
    let out = freebraid(&["reduce", "--n", "2", "--kind", "plain", "a(1,"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    let out = freebraid(&["reduce", "--n", "2", "--kind", "nonsense", "a(1,2)"]);
    assert_eq!(out.status.code(), Some(2));
    let out = freebraid(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn diagram_conversion_uses_the_coloring() {
    let out = freebraid(&["diagram-to-word", "braid n=3 1 2 2 1"]);
    assert_eq!(stdout(&out).trim(), "a(1,2) a(1,3) a(1,3) a(1,2)");
    let out = freebraid(&[
        "diagram-to-word",
        "braid n=3 1 2 2 1",
        "--coloring",
        "2 1 3",
    ]);
    assert_eq!(stdout(&out).trim(), "a(1,2) a(2,3) a(2,3) a(1,2)");
    let out = freebraid(&["diagram-to-word", "braid n=2 1"]);
    assert_eq!(out.status.code(), Some(1));
}
