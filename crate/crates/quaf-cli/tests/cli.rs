//! End-to-end tests of the `quaf` binary: exit codes, JSON envelopes,
//! diagnostics, and output files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../quaf/fixtures")
        .join(name)
}

fn quaf(args: &[&str]) -> Output {
    quaf_env(args, &[])
}

fn quaf_env(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_quaf"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn report(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is a JSON report")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

/// A minimal syntactic DOT check: header, balanced braces, one
/// statement per line, quoted identifiers on edges.
fn assert_valid_dot(dot: &str) {
    let mut lines = dot.lines();
    assert_eq!(lines.next(), Some("digraph af {"));
    let mut closed = false;
    for line in lines {
        if line == "}" {
            closed = true;
            continue;
        }
        assert!(!closed, "content after closing brace: {line}");
        let stmt = line.trim();
        assert!(stmt.ends_with(';'), "missing semicolon: {line}");
        assert!(stmt.starts_with('"'), "unquoted identifier: {line}");
        if stmt.contains("->") {
            let (from, to) = stmt.split_once("->").unwrap();
            assert!(from.trim().starts_with('"') && from.trim().ends_with('"'));
            assert!(to.trim().starts_with('"') && to.trim().trim_end_matches(';').ends_with('"'));
        }
    }
    assert!(closed, "missing closing brace");
}

#[test]
fn solve_reports_the_grounded_extension() {
    let out = quaf(&[
        "solve",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--semantics",
        "grounded",
    ]);
    assert_eq!(exit_code(&out), 0);
    let report = report(&out);
    assert_eq!(report["command"], "solve");
    assert!(report["input_digest"]
        .as_str()
        .unwrap()
        .starts_with("sha256:"));
    assert!(report["timing_ms"].is_u64());
    assert_eq!(report["result"]["count"], 1);
    assert_eq!(
        report["result"]["extensions"][0],
        serde_json::json!(["a1", "a2", "a3", "a4"])
    );
}

#[test]
fn solve_reports_an_empty_stable_family_on_the_odd_cycle() {
    let out = quaf(&[
        "solve",
        fixture("three_cycle.apx").to_str().unwrap(),
        "--semantics",
        "stable",
    ]);
    assert_eq!(exit_code(&out), 0, "no extensions is still success");
    let report = report(&out);
    assert_eq!(report["result"]["extensions"], serde_json::json!([]));
    assert_eq!(report["result"]["count"], 0);
}

#[test]
fn solve_can_attach_complete_labellings() {
    let out = quaf(&[
        "solve",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--semantics",
        "complete",
        "--labellings",
    ]);
    assert_eq!(exit_code(&out), 0);
    let report = report(&out);
    assert_eq!(report["result"]["labellings"][0]["a1"], "IN");
    assert_eq!(report["result"]["labellings"][0]["a5"], "OUT");

    let bad = quaf(&[
        "solve",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--semantics",
        "grounded",
        "--labellings",
    ]);
    assert_eq!(exit_code(&bad), 2);
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let af = fixture("jack_joe.apx");
    let part = fixture("jack_joe_clusters.part");
    let args = [
        "verify",
        af.to_str().unwrap(),
        "--partition",
        part.to_str().unwrap(),
        "--semantics",
        "preferred",
    ];
    let mut first = report(&quaf(&args));
    let mut second = report(&quaf(&args));
    first["timing_ms"] = 0.into();
    second["timing_ms"] = 0.into();
    assert_eq!(first, second);
}

#[test]
fn verify_distinguishes_faithful_from_unfaithful() {
    let faithful = quaf(&[
        "verify",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--partition",
        fixture("jack_joe_clusters.part").to_str().unwrap(),
        "--semantics",
        "grounded",
    ]);
    assert_eq!(exit_code(&faithful), 0);
    let body = report(&faithful);
    assert_eq!(body["result"]["sound"], true);
    assert_eq!(body["result"]["faithful"], true);
    assert_eq!(body["result"]["spurious"], serde_json::json!([]));
    assert_eq!(body["result"]["lost"], serde_json::json!([]));

    let dir = tempfile::tempdir().unwrap();
    let collapsed = dir.path().join("two.part");
    std::fs::write(&collapsed, "M: a1 a2 a3 a4\nB5: a5\n").unwrap();
    let unfaithful = quaf(&[
        "verify",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--partition",
        collapsed.to_str().unwrap(),
        "--semantics",
        "grounded",
    ]);
    assert_eq!(exit_code(&unfaithful), 1, "completed, property fails");
    let body = report(&unfaithful);
    assert_eq!(body["result"]["faithful"], false);
    assert_eq!(body["result"]["lost"][0], serde_json::json!(["a1", "a2", "a3", "a4"]));
}

#[test]
fn unknown_partition_members_are_named_in_the_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.part");
    std::fs::write(&bad, "X: a1 a2 a9\nY: a3 a4 a5\n").unwrap();
    let out = quaf(&[
        "verify",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--partition",
        bad.to_str().unwrap(),
        "--semantics",
        "grounded",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(out.stdout.is_empty(), "no report on a usage error");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("a9"), "diagnostic names the id: {stderr}");
    assert!(stderr.contains("bad.part"), "diagnostic names the file: {stderr}");
    assert!(stderr.contains("line 1"), "diagnostic names the line: {stderr}");
}

#[test]
fn strict_parsing_rejects_undeclared_arguments_unless_lenient() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("partial.apx");
    std::fs::write(&file, "arg(a).\natt(a,x).\n").unwrap();

    let strict = quaf(&["solve", file.to_str().unwrap(), "--semantics", "grounded"]);
    assert_eq!(exit_code(&strict), 2);
    let stderr = String::from_utf8_lossy(&strict.stderr);
    assert!(stderr.contains("line 2") && stderr.contains('x'), "{stderr}");

    let lenient = quaf(&[
        "solve",
        file.to_str().unwrap(),
        "--semantics",
        "grounded",
        "--lenient",
    ]);
    assert_eq!(exit_code(&lenient), 0);
    let body = report(&lenient);
    // x is auto-declared, attacked, and undefended: grounded = {a}.
    assert_eq!(body["result"]["extensions"][0], serde_json::json!(["a"]));
}

#[test]
fn input_format_follows_the_extension_or_the_flag() {
    let dir = tempfile::tempdir().unwrap();
    let tgf = dir.path().join("af.tgf");
    std::fs::write(&tgf, "a\nb\n#\na b\n").unwrap();
    let by_ext = quaf(&["solve", tgf.to_str().unwrap(), "--semantics", "grounded"]);
    assert_eq!(exit_code(&by_ext), 0);
    assert_eq!(
        report(&by_ext)["result"]["extensions"][0],
        serde_json::json!(["a"])
    );

    // The same bytes under an .apx name parse only with --format tgf.
    let misnamed = dir.path().join("af.apx");
    std::fs::write(&misnamed, "a\nb\n#\na b\n").unwrap();
    let wrong = quaf(&["solve", misnamed.to_str().unwrap(), "--semantics", "grounded"]);
    assert_eq!(exit_code(&wrong), 2);
    let forced = quaf(&[
        "solve",
        misnamed.to_str().unwrap(),
        "--semantics",
        "grounded",
        "--format",
        "tgf",
    ]);
    assert_eq!(exit_code(&forced), 0);
}

#[test]
fn abstract_emits_the_quotient_and_writes_apx() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("quotient.apx");
    let out = quaf(&[
        "abstract",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--partition",
        fixture("jack_joe_clusters.part").to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let body = report(&out);
    assert_eq!(
        body["result"]["abstract_af"]["attacks"],
        serde_json::json!([["AX", "B5"], ["B3", "B5"], ["B5", "B3"]])
    );
    assert_eq!(body["result"]["internal_conflicts"], serde_json::json!([]));
    let written = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(written, body["result"]["apx"].as_str().unwrap());
    assert!(written.contains("arg(AX).") && written.contains("att(B5,B3)."));
}

#[test]
fn conflicting_blocks_can_be_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let merged = dir.path().join("merged.part");
    std::fs::write(&merged, "W: a3 a5\nR: a1 a2 a4\n").unwrap();

    let allowed = quaf(&[
        "abstract",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--partition",
        merged.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&allowed), 0);
    let body = report(&allowed);
    assert_eq!(body["result"]["internal_conflicts"][0]["block"], "W");

    let rejected = quaf(&[
        "abstract",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--partition",
        merged.to_str().unwrap(),
        "--require-conflict-free-blocks",
    ]);
    assert_eq!(exit_code(&rejected), 2);
    let stderr = String::from_utf8_lossy(&rejected.stderr);
    assert!(stderr.contains("`W`") && stderr.contains("conflict-free"), "{stderr}");
}

#[test]
fn search_returns_partition_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("best.part");
    let out = quaf(&[
        "search",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--semantics",
        "grounded",
        "--mode",
        "exhaustive",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let body = report(&out);
    assert_eq!(body["result"]["block_count"], 3);
    assert_eq!(body["result"]["report"]["faithful"], true);
    // The emitted partition file names every block.
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().all(|l| l.contains(": ")));
}

#[test]
fn galois_exit_code_tracks_the_connection() {
    let out = quaf(&[
        "galois",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--partition",
        fixture("jack_joe_clusters.part").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let body = report(&out);
    assert_eq!(body["result"]["adjunction_holds"], true);
    assert_eq!(body["result"]["insertion_holds"], true);
    assert_eq!(body["result"]["mode"], "exhaustive");

    // Shrinking the exhaustive bound flips the report to sampling.
    let sampled = quaf_env(
        &[
            "galois",
            fixture("jack_joe.apx").to_str().unwrap(),
            "--partition",
            fixture("jack_joe_clusters.part").to_str().unwrap(),
        ],
        &[("QUAF_GALOIS_MAX_ARGS", "2")],
    );
    assert_eq!(exit_code(&sampled), 0);
    let body = report(&sampled);
    assert_eq!(body["result"]["mode"]["sampled"]["samples"], 1024);
}

#[test]
fn render_produces_parseable_dot() {
    let plain = quaf(&["render", fixture("jack_joe.apx").to_str().unwrap()]);
    assert_eq!(exit_code(&plain), 0);
    let body = report(&plain);
    let dot = body["result"]["dot"].as_str().unwrap();
    assert_valid_dot(dot);
    assert!(dot.contains("\"a3\" -> \"a5\";"));

    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("quotient.dot");
    let quotient = quaf(&[
        "render",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--abstract",
        "--partition",
        fixture("jack_joe_clusters.part").to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&quotient), 0);
    let dot = std::fs::read_to_string(&out_path).unwrap();
    assert_valid_dot(&dot);
    // Abstract nodes are labelled with their member sets.
    assert!(dot.contains("AX: {a1, a2, a4}"), "{dot}");

    // --abstract without --partition is a usage error.
    let missing = quaf(&[
        "render",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--abstract",
    ]);
    assert_eq!(exit_code(&missing), 2);
}

#[test]
fn solver_bound_env_applies_to_enumeration_only() {
    let fixture_path = fixture("jack_joe.apx");
    let blocked = quaf_env(
        &[
            "solve",
            fixture_path.to_str().unwrap(),
            "--semantics",
            "complete",
        ],
        &[("QUAF_MAX_ARGS", "3")],
    );
    assert_eq!(exit_code(&blocked), 2);
    let stderr = String::from_utf8_lossy(&blocked.stderr);
    assert!(stderr.contains("bound"), "{stderr}");

    // The grounded semantics never enumerates, so it stays available.
    let grounded = quaf_env(
        &[
            "solve",
            fixture_path.to_str().unwrap(),
            "--semantics",
            "grounded",
        ],
        &[("QUAF_MAX_ARGS", "3")],
    );
    assert_eq!(exit_code(&grounded), 0);

    let invalid = quaf_env(
        &[
            "solve",
            fixture_path.to_str().unwrap(),
            "--semantics",
            "grounded",
        ],
        &[("QUAF_MAX_ARGS", "lots")],
    );
    assert_eq!(exit_code(&invalid), 2);
}

#[test]
fn usage_errors_exit_with_two() {
    let unknown_command = quaf(&["prove", "x.apx"]);
    assert_eq!(exit_code(&unknown_command), 2);

    let unknown_semantics = quaf(&[
        "solve",
        fixture("jack_joe.apx").to_str().unwrap(),
        "--semantics",
        "naive",
    ]);
    assert_eq!(exit_code(&unknown_semantics), 2);

    let missing_file = quaf(&["solve", "/nonexistent/af.apx", "--semantics", "grounded"]);
    assert_eq!(exit_code(&missing_file), 2);
    assert!(String::from_utf8_lossy(&missing_file.stderr).contains("af.apx"));
}
