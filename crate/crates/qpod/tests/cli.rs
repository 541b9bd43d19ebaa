//! End-to-end tests of the `qpod` binary: flag parsing, report formats,
//! exit codes, and determinism, exercised through real process spawns.

use std::process::{Command, Output};

fn qpod() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qpod"));
    cmd.env_remove("QPOD_ENUM_CEILING");
    cmd
}

fn run(args: &[&str]) -> Output {
    qpod().args(args).output().expect("binary spawns")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn last_line(text: &str) -> &str {
    text.lines().last().unwrap_or("")
}

#[test]
fn table_prints_header_and_rows() {
    let output = run(&["table", "--seq", "pod", "--n-max", "8"]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(
        text.starts_with("# pod via generating-function, 0 <= n <= 8\n"),
        "{text}"
    );
    assert_eq!(last_line(&text), "8 10");
}

#[test]
fn table_routes_agree_and_csv_has_header() {
    let by_series = run(&["table", "--seq", "b4", "--n-max", "8", "--format", "csv"]);
    assert_eq!(by_series.status.code(), Some(0));
    let text = stdout(&by_series);
    assert!(text.starts_with("n,value\n"), "{text}");
    assert_eq!(last_line(&text), "8,16");

    let by_objects = run(&[
        "table",
        "--seq",
        "b4",
        "--n-max",
        "8",
        "--route",
        "enumeration",
        "--format",
        "csv",
    ]);
    assert_eq!(by_objects.status.code(), Some(0));
    assert_eq!(stdout(&by_objects), text);
}

#[test]
fn zigzag_bijection_reproduces_worked_example() {
    let output = run(&[
        "bijection",
        "zigzag",
        "--parts",
        "14,14,12,12,8,4",
        "--k",
        "3",
    ]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("alpha = (18, 16, 12, 10, 6, 4)"), "{text}");
    assert!(text.contains("beta = (6, 4)"), "{text}");
}

#[test]
fn full_verification_suite_exits_zero() {
    let output = run(&[
        "verify",
        "--statements",
        "all",
        "--n-max",
        "200",
        "--k-max",
        "3",
    ]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("T1.i: pass (n <= 200)"), "{text}");
    assert!(text.contains("TH5.1: pass"), "{text}");
    // the conjectural statements report their counterexamples without
    // flipping the exit code
    assert!(text.contains("Conj1: fail"), "{text}");
    assert!(text.contains("Conj2: fail"), "{text}");
}

#[test]
fn congruence_scan_reports_sharpness() {
    let output = run(&[
        "congruence-scan",
        "--seq",
        "b4",
        "--m",
        "25",
        "--t",
        "8",
        "--mod",
        "16",
        "--n-max",
        "40",
    ]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("b4(25n+8) == 0 (mod 16): pass"), "{text}");
    assert!(
        text.contains("value 16 at argument 8 is not divisible by 32"),
        "{text}"
    );
}

#[test]
fn congruence_product_example_passes() {
    let output = run(&[
        "congruence-product",
        "--residues",
        "8,23",
        "--m",
        "25",
        "--mod",
        "256",
        "--order",
        "30",
    ]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(
        text.contains("b4(25n+8)*b4(25n+23) == 0 (mod 256): pass (n <= 30)"),
        "{text}"
    );
}

#[test]
fn failing_scan_exits_one() {
    let output = run(&[
        "congruence-scan",
        "--m",
        "2",
        "--t",
        "0",
        "--mod",
        "16",
        "--n-max",
        "5",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("fail"), "{}", stdout(&output));
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["verify", "--statements", "T99"],
        &["congruence-scan", "--m", "25", "--t", "30", "--mod", "16"],
        &["table", "--seq", "pod", "--n-max", "70", "--route", "enumeration"],
        &["bijection", "zigzag", "--parts", "3,3", "--k", "0"],
        &["table", "--seq", "mp", "--n-max", "5"],
        &["verify", "--n-max", "0"],
    ];
    for args in cases {
        let output = run(args);
        assert_eq!(output.status.code(), Some(2), "args: {args:?}");
        assert!(!stderr(&output).is_empty(), "args: {args:?}");
        assert!(stdout(&output).is_empty(), "args: {args:?}");
    }

    let output = qpod()
        .env("QPOD_ENUM_CEILING", "not-a-number")
        .args(["table", "--seq", "pod", "--n-max", "5", "--route", "enumeration"])
        .output()
        .expect("binary spawns");
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn enumeration_ceiling_env_override() {
    let output = qpod()
        .env("QPOD_ENUM_CEILING", "75")
        .args(["table", "--seq", "pod", "--n-max", "70", "--route", "enumeration"])
        .output()
        .expect("binary spawns");
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    assert_eq!(last_line(&stdout(&output)), "70 277691");
}

#[test]
fn json_reports_parse_and_are_deterministic() {
    let args = [
        "verify",
        "--statements",
        "TH5.1,T3.i",
        "--n-max",
        "40",
        "--format",
        "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "reruns must be byte-identical");

    let reports: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    let reports = reports.as_array().expect("top level is an array");
    assert_eq!(reports.len(), 2);
    // selection order follows the statement catalog, not the flag order
    assert_eq!(reports[0]["statement_id"], "T3.i");
    assert_eq!(reports[1]["statement_id"], "TH5.1");
    assert_eq!(reports[1]["status"], "pass");
    assert_eq!(reports[1]["sharpness"]["divisor"], "32");
    assert_eq!(reports[1]["failures"], serde_json::json!([]));
}

#[test]
fn output_flag_writes_the_report_file() {
    let path = std::env::temp_dir().join(format!("qpod-cli-report-{}.json", std::process::id()));
    let direct = run(&["table", "--seq", "q0", "--n-max", "14", "--format", "json"]);
    assert_eq!(direct.status.code(), Some(0));

    let to_file = run(&[
        "table",
        "--seq",
        "q0",
        "--n-max",
        "14",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(stdout(&to_file).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written, stdout(&direct));
}

#[test]
fn conjecture_scan_counterexamples_do_not_flip_exit_code() {
    let output = run(&["conjecture-scan", "--n-max", "60", "--k-max", "1"]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("Conj2: fail"), "{text}");
    assert!(text.contains("first at n = 5, k = 1"), "{text}");
}

#[test]
fn help_lists_the_statement_catalog() {
    let output = run(&["--help"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    for id in ["T1.i", "C4.2", "W.qodd", "TH5.1", "L3.ii", "Lit.8", "Conj2"] {
        assert!(text.contains(id), "--help must list {id}");
    }
}
