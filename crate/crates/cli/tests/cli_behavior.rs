//! End-to-end checks of the `rainbow` binary: workflows, output shapes, and
//! the exit-code contract (0 success, 1 failed check, 2 usage or I/O error).

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use rainbow_cli::sweep::CSV_HEADER;
use rainbow_core::ecg::parse_ecg;

fn rainbow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn gen_solve_verify_workflow() {
    let instance = tmp("workflow.ecg");
    let gen = rainbow(&[
        "gen", "--n", "8", "--p", "0.7", "--colors", "6", "--seed", "11", "--min-k", "3",
        "--out", instance.to_str().unwrap(),
    ]);
    assert_eq!(gen.status.code(), Some(0));
    parse_ecg(&fs::read_to_string(&instance).unwrap()).expect("gen must write valid .ecg");

    let solve = rainbow(&["solve", instance.to_str().unwrap()]);
    assert_eq!(solve.status.code(), Some(0));
    let report = stdout_of(&solve);
    assert!(report.contains("mode: constructive"));
    let witness_line = report
        .lines()
        .find(|l| l.starts_with("witness: "))
        .expect("solve must print a witness");
    let witness: Vec<&str> = witness_line["witness: ".len()..].split(' ').collect();

    let mut verify_args = vec!["verify", instance.to_str().unwrap()];
    verify_args.extend(&witness);
    let verify = rainbow(&verify_args);
    assert_eq!(verify.status.code(), Some(0));
    assert!(stdout_of(&verify).starts_with("rainbow path of length"));
}

#[test]
fn solve_exact_reports_oracle_nodes_and_audit() {
    let instance = tmp("exact.ecg");
    rainbow(&[
        "gen", "--n", "7", "--p", "0.8", "--colors", "5", "--seed", "3",
        "--out", instance.to_str().unwrap(),
    ]);
    let out = rainbow(&["solve", instance.to_str().unwrap(), "--exact", "--per-vertex"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("mode: exact"));
    assert!(text.contains("oracle_nodes: "));
    assert!(text.contains("per-vertex audit: all 7 start vertices"));
}

#[test]
fn verify_rejects_non_paths_with_exit_one() {
    let instance = tmp("reject.ecg");
    rainbow(&[
        "gen", "--n", "6", "--p", "0.9", "--colors", "2", "--seed", "0",
        "--out", instance.to_str().unwrap(),
    ]);
    let out = rainbow(&["verify", instance.to_str().unwrap(), "0", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).starts_with("not a rainbow path:"));
}

#[test]
fn io_and_usage_errors_exit_with_two() {
    let missing = rainbow(&["solve", "/definitely/not/here.ecg"]);
    assert_eq!(missing.status.code(), Some(2));

    let unknown_profile = rainbow(&["sweep", "--profile", "enormous"]);
    assert_eq!(unknown_profile.status.code(), Some(2));

    let missing_flags = rainbow(&["gen", "--n", "5"]);
    assert_eq!(missing_flags.status.code(), Some(2));

    let instance = tmp("highlight.ecg");
    rainbow(&[
        "gen", "--n", "5", "--p", "1.0", "--colors", "1", "--seed", "0",
        "--out", instance.to_str().unwrap(),
    ]);
    // A monochromatic K5 admits no two-edge rainbow path, so this highlight
    // cannot validate.
    let bad_highlight = rainbow(&[
        "export-dot", instance.to_str().unwrap(), "--highlight", "0 1 2",
    ]);
    assert_eq!(bad_highlight.status.code(), Some(2));
}

#[test]
fn gen_profile_writes_one_file_per_instance() {
    let dir = tmp("proper-suite");
    let out = rainbow(&[
        "gen", "--profile", "proper-family", "--out", dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut files: Vec<String> = fs::read_dir(&dir)
        .expect("suite directory exists")
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    files.sort();
    assert_eq!(
        files,
        vec![
            "proper-family-0000.ecg",
            "proper-family-0001.ecg",
            "proper-family-0002.ecg",
            "proper-family-0003.ecg",
            "proper-family-0004.ecg",
        ]
    );
    for file in files {
        parse_ecg(&fs::read_to_string(dir.join(file)).unwrap()).expect("suite file parses");
    }
}

#[test]
fn sweep_prints_csv_with_header_to_stdout() {
    let out = rainbow(&["sweep", "--profile", "proper-family", "--exact"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    assert_eq!(lines.count(), 5, "one row per proper-family instance");
}

#[test]
fn export_dot_renders_a_graph_with_highlight() {
    let instance = tmp("dot.ecg");
    rainbow(&[
        "gen", "--n", "6", "--p", "0.8", "--colors", "6", "--seed", "5", "--min-k", "2",
        "--out", instance.to_str().unwrap(),
    ]);
    let solve = rainbow(&["solve", instance.to_str().unwrap()]);
    let report = stdout_of(&solve);
    let witness = report
        .lines()
        .find(|l| l.starts_with("witness: "))
        .expect("solve must print a witness")["witness: ".len()..]
        .to_string();

    let dot = rainbow(&[
        "export-dot", instance.to_str().unwrap(), "--highlight", &witness,
    ]);
    assert_eq!(dot.status.code(), Some(0));
    let text = stdout_of(&dot);
    assert!(text.starts_with("graph rainbow {"));
    assert!(text.contains("penwidth=2"), "highlight must thicken edges");
}
