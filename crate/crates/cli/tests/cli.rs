//! End-to-end tests of the `k2cyclo` binary: exit codes, output formats,
//! determinism, table contents, and the certificate round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn k2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k2cyclo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn temp_path(tag: &str) -> PathBuf {
    let nanos = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .expect("clock after epoch")
        .subsec_nanos();
    std::env::temp_dir().join(format!("k2cyclo-{}-{}-{tag}.json", std::process::id(), nanos))
}

/// Parses CSV lines into cells; no field in our tables contains a comma,
/// so a plain split is exact.
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|line| line.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn fast_suites_pass_and_json_output_is_byte_deterministic() {
    let args = [
        "verify",
        "--suites",
        "degree-law,diophantine,genus",
        "--seed",
        "3",
        "--format",
        "json",
    ];
    let first = k2(&args);
    let second = k2(&args);
    assert_eq!(code(&first), 0, "stderr: {}", stderr(&first));
    assert_eq!(code(&second), 0);
    assert_eq!(first.stdout, second.stdout, "same seed, same bytes");
    let text = stdout(&first);
    assert!(text.contains("\"id\": \"degree-q-l5\""));
    assert!(text.contains("\"status\": \"pass\""));
    assert!(!text.contains("\"fail\""));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = k2(&["verify", "--suites", "degree-law,astrology"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("astrology"));
    assert!(stderr(&out).contains("available"));
}

#[test]
fn bad_effort_cap_override_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_k2cyclo"))
        .args(["verify", "--suites", "nonclosure"])
        .env("K2CYCLO_TRIAL_BOUND", "plenty")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("K2CYCLO_TRIAL_BOUND"));
}

#[test]
fn counts_table_lists_the_proved_values() {
    let out = k2(&[
        "table", "counts", "--l", "7", "--p", "3", "--n", "1..2", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(
        rows,
        vec![
            vec!["7", "3", "1", "6", "1", "4"],
            vec!["7", "3", "2", "12", "2", "4"],
        ]
        .into_iter()
        .map(|r| r.into_iter().map(str::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>()
    );
}

#[test]
fn genus_table_marks_exactly_the_known_exceptions() {
    let out = k2(&[
        "table", "genus", "--p", "2", "--n", "3..20", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 18);
    let exceptions: Vec<u64> = rows
        .iter()
        .filter(|r| r[4] == "small-genus-exception")
        .map(|r| r[0].parse().expect("n column"))
        .collect();
    assert_eq!(exceptions, vec![3, 4, 5, 6, 8, 10, 12]);
}

#[test]
fn zset_sweep_agrees_with_the_fullness_predicate() {
    let out = k2(&[
        "table", "zset", "--l", "5..23", "--p", "2..19", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&stdout(&out));
    assert!(rows.len() > 20, "sweep covers many prime pairs");
    for row in &rows {
        assert_eq!(row[3], row[4], "fullness vs prediction at l={}, p={}", row[0], row[1]);
    }
    let seven_three = rows
        .iter()
        .find(|r| r[0] == "7" && r[1] == "3")
        .expect("(7, 3) in range");
    assert_eq!(seven_three[2], "4");
    assert_eq!(seven_three[5], "2 3 4 5");
}

#[test]
fn invalid_range_is_a_usage_error() {
    let out = k2(&["table", "zset", "--l", "5..x", "--p", "3"]);
    assert_eq!(code(&out), 2);
    let out = k2(&["table", "zset", "--l", "9..5", "--p", "3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn missing_required_range_is_a_usage_error() {
    let out = k2(&["table", "counts", "--l", "7", "--p", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--n"));
}

#[test]
fn certificate_roundtrip_recheck_and_tamper_detection() {
    let good = temp_path("good");
    let bad = temp_path("bad");

    let gen = k2(&[
        "nonclosure",
        "--n",
        "9",
        "--p",
        "3",
        "--count",
        "2",
        "--out",
        good.to_str().expect("utf-8 path"),
    ]);
    assert_eq!(code(&gen), 0, "stderr: {}", stderr(&gen));

    let ok = k2(&["recheck", good.to_str().expect("utf-8 path")]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("certificate ok"));

    let text = std::fs::read_to_string(&good).expect("certificate written");
    let mut value: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    let a = value["entries"][0]["a"]
        .as_str()
        .expect("base stored as a decimal string")
        .to_string();
    value["entries"][0]["a"] = serde_json::Value::String(decimal_plus_one(&a));
    std::fs::write(&bad, serde_json::to_string(&value).expect("serializes")).expect("write");

    let fail = k2(&["recheck", bad.to_str().expect("utf-8 path")]);
    assert_eq!(code(&fail), 1);
    assert!(stdout(&fail).contains("entry 0"));
    assert!(stdout(&fail).contains("base does not equal"));

    std::fs::remove_file(&good).ok();
    std::fs::remove_file(&bad).ok();
}

#[test]
fn unreadable_or_malformed_certificates_are_usage_errors() {
    let out = k2(&["recheck", "/nonexistent/certificate.json"]);
    assert_eq!(code(&out), 2);

    let garbled = temp_path("garbled");
    std::fs::write(&garbled, "not a certificate").expect("write");
    let out = k2(&["recheck", garbled.to_str().expect("utf-8 path")]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("malformed"));
    std::fs::remove_file(&garbled).ok();
}

#[test]
fn excluded_index_is_rejected() {
    let out = k2(&["nonclosure", "--n", "8", "--p", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("excluded"));
}

/// Adds one to a nonnegative decimal string of any length.
fn decimal_plus_one(s: &str) -> String {
    let mut digits: Vec<u8> = s.bytes().map(|b| b - b'0').collect();
    for d in digits.iter_mut().rev() {
        if *d < 9 {
            *d += 1;
            return digits.iter().map(|d| (d + b'0') as char).collect();
        }
        *d = 0;
    }
    let mut out = String::from("1");
    out.extend(digits.iter().map(|d| (d + b'0') as char));
    out
}
