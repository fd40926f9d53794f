//! End-to-end tests against the compiled binary: exit codes, report
//! shapes, and the byte-identical determinism contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ringtop"))
}

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn sweep_theorem_i_n4_agrees() {
    let out = run(&["sweep", "--theorem", "I", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("355 reports, all agree"), "{text}");
}

#[test]
fn sweep_rejects_oversized_n() {
    let out = run(&["sweep", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at most 5"));
}

#[test]
fn check_sierpinski_theorem_iii_agree_false_exits_zero() {
    let out = run(&[
        "check",
        "--space",
        &fixture("sierpinski.topo"),
        "--theorem",
        "III",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("direct=false ring=false"), "{text}");
}

#[test]
fn demo_commands_emit_closed_forms() {
    let out = run(&["demo", "one-point"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("theorem=compact direct=true ring=true"));

    let out = run(&["demo", "discrete-nat"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("theorem=I direct=false ring=false"));

    let out = run(&["demo", "cofinite"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("theorem=I direct=true ring=true"));
    assert!(text.contains("theorem=III direct=false ring=false"));
    assert!(text.contains("zero mismatches"));
}

#[test]
fn sampled_sweep_is_byte_identical_across_runs() {
    let args = ["sweep", "--n", "5", "--seed", "7", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).expect("valid json");
    assert_eq!(json["tool"], "ringtop");
    assert_eq!(json["config"]["seed"], 7);
    assert_eq!(json["config"]["command"], "sweep");
    assert_eq!(json["agree"], true);
    // sampled mode: 500 topologies, three theorems each
    assert_eq!(json["body"]["reports"].as_array().unwrap().len(), 1500);
}

#[test]
fn different_seeds_pick_different_samples() {
    let a = run(&["sweep", "--n", "5", "--seed", "1", "--format", "json"]);
    let b = run(&["sweep", "--n", "5", "--seed", "2", "--format", "json"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn json_report_carries_schema_fields() {
    let out = run(&[
        "check",
        "--space",
        &fixture("sierpinski.topo"),
        "--theorem",
        "III",
        "--format",
        "json",
    ]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    let rep = &json["body"]["reports"][0];
    for field in ["space", "theorem", "direct", "ring", "agree", "limits"] {
        assert!(rep.get(field).is_some(), "missing field {field}");
    }
    assert_eq!(rep["theorem"], "III");
    let limits = rep["limits"].as_array().unwrap();
    assert_eq!(limits.len(), 2);
    assert!(limits.iter().any(|l| l["ideal"] == "m_1"
        && l["points"].as_array().map(|p| p.len()) == Some(2)));
}

#[test]
fn stone_dot_output() {
    let out = run(&[
        "stone",
        "--space",
        &fixture("sierpinski.topo"),
        "--format",
        "dot",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("graph spec {"));
    assert!(text.contains("p0"));
}

#[test]
fn dot_format_rejected_for_sweeps() {
    let out = run(&["sweep", "--n", "2", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let out = run(&["enumerate", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("29 topologies on 3 points"));
}

#[test]
fn limit_of_prefix_system() {
    let out = run(&["limit", "--system", &fixture("prefix3.sys")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("8 threads"));
    assert!(text.contains("discrete = true"));
}

#[test]
fn lemma1_inline_ring() {
    let out = run(&["lemma1", "--ring", "universe 4; gens {0,1} {2}"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("subrings=5"));
    assert!(text.contains("bijective=true"));
}

#[test]
fn lemma2_sweeps_small_products() {
    let out = run(&[
        "lemma2",
        "--factors",
        "universe 2; opens {} {0} {1} {0,1}",
        "universe 2; opens {} {0} {1} {0,1}",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("16 reports, all agree"));
}

#[test]
fn tychonoff_pair_sweep() {
    let out = run(&["tychonoff", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("16 reports, all agree"));
}

#[test]
fn alexander_extraction_and_non_cover() {
    let out = run(&[
        "alexander",
        "--space",
        "universe 3; opens {} {1} {2} {0,1} {1,2} {0,1,2}",
        "--subbasis",
        "{0,1} {1,2} {2}",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("finite subcover: {0,1} {1,2}"));

    let out = run(&[
        "alexander",
        "--space",
        "universe 3; opens {} {1} {2} {0,1} {1,2} {0,1,2}",
        "--subbasis",
        "{0,1} {1,2} {2}",
        "--cover",
        "{0,1}",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("point 2 is uncovered"));

    let out = run(&[
        "alexander",
        "--space",
        &fixture("cofinite.topo"),
        "--subbasis",
        "~{0} ~{1}",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("finite subcover: ~{0} ~{1}"));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join("ringtop-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = bin()
        .args([
            "enumerate",
            "--n",
            "2",
            "--format",
            "json",
            "--output",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["body"]["count"], 4);
}

#[test]
fn truncation_flag_validated() {
    let out = run(&["demo", "cofinite", "--truncation", "2"]);
    assert_eq!(out.status.code(), Some(2));
}
