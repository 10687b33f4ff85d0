//! End-to-end runs of the installed binary: subcommands, exit codes,
//! report/manifest files, determinism across worker counts, and resume.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn alphatau(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alphatau"))
        .args(args)
        .env_remove("ALPHATAU_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_catalog(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("catalog.g6");
    std::fs::write(&path, ">>graph6<<\nBw\nC~\nDQc\nA_\nE]~w\n").unwrap();
    path
}

#[test]
fn invariants_of_k4() {
    let out = alphatau(&["invariants", "C~"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("alpha1: 2"));
    assert!(text.contains("tau: 2"));
    assert!(text.contains("taub: 2"));
    assert!(text.contains("slack_egt: 0  slack_bip: 0"));
}

#[test]
fn verify_reports_and_manifest() {
    let dir = TempDir::new().unwrap();
    let input = write_catalog(dir.path());
    let report = dir.path().join("report.csv");
    let out = alphatau(&[
        "verify",
        "--input",
        input.to_str().unwrap(),
        "--output",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&report).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6); // header + 5 graphs
    assert!(lines[0].starts_with("graph6,"));
    assert!(lines[2].starts_with("C~,4,6,2,2,2,0,0,"));
    let manifest = std::fs::read_to_string(dir.path().join("report.csv.manifest")).unwrap();
    assert!(manifest.contains("processed = 5"));
    assert!(manifest.contains("violations = 0"));
}

#[test]
fn verify_is_deterministic_across_worker_counts() {
    let dir = TempDir::new().unwrap();
    let input = write_catalog(dir.path());
    let mut reports = Vec::new();
    for workers in ["1", "2", "4"] {
        let report = dir.path().join(format!("report-{workers}.csv"));
        let out = alphatau(&[
            "verify",
            "--workers",
            workers,
            "--input",
            input.to_str().unwrap(),
            "--output",
            report.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        reports.push(std::fs::read(&report).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[1], reports[2]);
}

#[test]
fn verify_resume_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let input = write_catalog(dir.path());
    let full = dir.path().join("full.csv");
    assert!(alphatau(&[
        "verify",
        "--input",
        input.to_str().unwrap(),
        "--output",
        full.to_str().unwrap(),
    ])
    .status
    .success());

    let split = dir.path().join("split.csv");
    assert!(alphatau(&[
        "verify",
        "--input",
        input.to_str().unwrap(),
        "--output",
        split.to_str().unwrap(),
        "--limit",
        "2",
    ])
    .status
    .success());
    assert!(alphatau(&[
        "verify",
        "--input",
        input.to_str().unwrap(),
        "--output",
        split.to_str().unwrap(),
        "--resume",
    ])
    .status
    .success());
    assert_eq!(
        std::fs::read(&full).unwrap(),
        std::fs::read(&split).unwrap()
    );
}

#[test]
fn strict_parse_failure_exits_2() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("bad.g6");
    std::fs::write(&input, "Bw\nB\n").unwrap();
    let out = alphatau(&["verify", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // lenient mode records and continues
    let out = alphatau(&["verify", "--lenient", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipped line 2"));
}

#[test]
fn capacity_refusal_exits_3() {
    // 30 vertices is beyond the default exact max-cut limit
    let g = alphatau::Graph::empty(30).unwrap();
    let line = alphatau::encode_graph6(&g).unwrap();
    let out = alphatau(&["invariants", &line]);
    assert_eq!(out.status.code(), Some(3));
    // raising the limit makes it succeed
    let out = alphatau(&["invariants", &line, "--maxcut-limit", "30"]);
    assert_eq!(out.status.code(), Some(0));

    let out = alphatau(&["hunt", "--n", "9"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn malformed_graph6_argument_exits_2() {
    let out = alphatau(&["invariants", "zz"]);
    assert_eq!(out.status.code(), Some(2));
    let out = alphatau(&["audit", ""]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hunt_enumeration_prints_filter_counts() {
    let out = alphatau(&["hunt", "--n", "5"]);
    assert!(out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("filter mindeg: eliminated"));
    assert!(err.contains("violations 0"));
    // every survivor row shows a nonnegative slack (no counterexamples at n=5)
    for line in stdout_of(&out).lines().skip(1) {
        let slack: i64 = line.split(',').nth(6).unwrap().parse().unwrap();
        assert!(slack >= 0);
    }
}

#[test]
fn workers_env_var_is_honored_and_deterministic() {
    let dir = TempDir::new().unwrap();
    let input = write_catalog(dir.path());
    let run_with_env = |workers: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_alphatau"))
            .args(["verify", "--input", input.to_str().unwrap()])
            .env("ALPHATAU_WORKERS", workers)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run_with_env("1"), run_with_env("3"));

    let out = Command::new(env!("CARGO_BIN_EXE_alphatau"))
        .args(["verify", "--input", input.to_str().unwrap()])
        .env("ALPHATAU_WORKERS", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn strict_flag_is_accepted() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("bad.g6");
    std::fs::write(&input, "Bw\nB\n").unwrap();
    let out = alphatau(&["verify", "--strict", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn families_sweep_is_sharp() {
    let out = alphatau(&["families", "--max-n", "8"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("all 11 families sharp"));
}

#[test]
fn audit_dumps_structure() {
    let out = alphatau(&["audit", "C~"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("dense_cuts: verified_all"));
    assert!(text.contains("mindeg_pass: true"));
}

#[test]
fn text_format_report() {
    let dir = TempDir::new().unwrap();
    let input = write_catalog(dir.path());
    let out = alphatau(&[
        "verify",
        "--format",
        "text",
        "--input",
        input.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.lines().count() == 5); // no header in text mode
    assert!(text.contains("graph6=C~ n=4 m=6"));
}
