use std::io::Write;
use std::process::{Command, Output, Stdio};

use localspec::graph::hamming74_codewords;
use localspec::VertexSet;
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_localspec");
const HAMMING: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/hamming74.txt");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn data_file_matches_generator() {
    let text = std::fs::read_to_string(HAMMING).unwrap();
    let set = VertexSet::parse_lines(&text, 128).unwrap();
    assert_eq!(set.members(), hamming74_codewords().as_slice());
}

#[test]
fn check_reports_codes() {
    let set = format!("@{HAMMING}");
    let out = run(&["check", "--generate", "hypercube", "7", "--set", &set]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdicts"]["overall"], "CPRC");
    assert_eq!(v["local_spectrum"]["dual_degree"], 1);
    assert_eq!(v["partition"]["sizes"], serde_json::json!([16, 112]));
}

#[test]
fn check_key_order_is_stable() {
    let v = json(&run(&["check", "--generate", "petersen", "--set", "0"]));
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "graph",
            "set",
            "spectrum",
            "local_spectrum",
            "partition",
            "polynomials",
            "verdicts",
            "margins",
            "config"
        ]
    );
}

#[test]
fn floats_carry_seventeen_digits() {
    let out = run(&["spectrum", "--generate", "petersen"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(
        v["spectrum"]["multiplicities"],
        serde_json::json!([1, 5, 4])
    );
    let line = text
        .lines()
        .find(|l| l.contains("e+0") || l.contains("e-"))
        .unwrap();
    let number = line.trim().trim_end_matches(',');
    let mantissa = number.trim_start_matches('-').split('e').next().unwrap();
    assert_eq!(mantissa.replace('.', "").len(), 17, "{number}");
}

#[test]
fn not_a_code_exits_one() {
    let out = run(&["check", "--generate", "hypercube", "3", "--set", "0,3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdicts"]["overall"], "NOT_CPRC");
}

#[test]
fn graph_from_stdin() {
    let out = run_stdin(
        &["local", "--graph", "-", "--set", "0"],
        "# square\n0 1\n1 2\n2 3\n3 0\n",
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["local_spectrum"]["dual_degree"], 2);
    assert_eq!(v["local_spectrum"]["extremal"], true);
}

#[test]
fn polys_text_output() {
    let out = run(&[
        "polys",
        "--generate",
        "cycle",
        "4",
        "--set",
        "0",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p_2:"));
    assert!(text.contains("hoffman:"));
}

#[test]
fn errors_exit_three() {
    let cases: &[&[&str]] = &[
        &["check", "--generate", "cycle", "2", "--set", "0"],
        &["check", "--generate", "cycle", "4", "--set", "4"],
        &["check", "--generate", "cycle", "4", "--set", ""],
        &["check", "--graph", "/nonexistent/graph.txt", "--set", "0"],
        &["spectrum", "--generate", "cycle", "4", "--tol-eig", "0"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = run_stdin(&["spectrum", "--graph", "-"], "0 1\n2 3\n");
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("connected"));
}

#[test]
fn sweep_is_reproducible() {
    let args = ["sweep", "--count", "40", "--max-n", "10", "--seed", "5"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["summary"]["instances"], 40);
}
