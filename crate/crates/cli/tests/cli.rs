use std::process::{Command, Output};

use serde_json::Value;

use cubic_cli::Query;

fn cubic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = cubic(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_doc(args: &[&str], code: i32) -> Value {
    let out = cubic(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    serde_json::from_slice(&out.stderr).unwrap()
}

#[test]
fn constants_for_31() {
    let v = json_ok(&["constants", "--p", "31", "--k", "1"]);
    let r = &v["result"];
    assert_eq!((r["c"].as_i64(), r["d"].as_i64()), (Some(4), Some(2)));
    assert_eq!((r["r1"].as_i64(), r["r2"].as_i64()), (Some(4), Some(2)));
    assert_eq!(r["theta"].as_i64(), Some(1));
    assert_eq!(r["gauss_cubed_over_q"], "5+6*w");
    assert_eq!(v["warnings"].as_array().unwrap().len(), 0);
}

#[test]
fn count_n2_zero_over_f7() {
    let v = json_ok(&["count", "--p", "7", "--k", "1", "--s", "2", "--z", "zero"]);
    assert_eq!(v["result"]["value"].as_i64(), Some(19));
}

#[test]
fn count_accepts_elements_and_y_targets() {
    let v = json_ok(&["count", "--p", "31", "--s", "3", "--y", "3"]);
    assert_eq!(v["result"]["value"].as_i64(), Some(1171));
    assert_eq!(v["result"]["class"], "c1");
    let v = json_ok(&["count", "--p", "31", "--s", "3", "--y", "9"]);
    assert_eq!(v["result"]["value"].as_i64(), Some(631));
}

#[test]
fn large_counts_stay_exact() {
    let v = json_ok(&["count", "--p", "31", "--s", "40", "--z", "c1"]);
    let text = v["result"]["value"].to_string();
    assert!(
        text.len() > 50 && text.chars().all(|c| c.is_ascii_digit()),
        "{text}"
    );
}

#[test]
fn s_zero_is_flagged() {
    let v = json_ok(&["count", "--p", "7", "--s", "0", "--z", "zero"]);
    assert_eq!(v["result"]["value"].as_i64(), Some(1));
    assert!(v["warnings"][0].as_str().unwrap().contains("s = 0"));
}

#[test]
fn all_cubes_field_counts() {
    let v = json_ok(&["count", "--p", "2", "--k", "3", "--s", "4", "--z", "1,1,0"]);
    assert_eq!(v["result"]["value"].as_i64(), Some(512));
}

#[test]
fn series_tsv_rows() {
    let out = cubic(&[
        "series",
        "--p",
        "7",
        "--z",
        "zero",
        "--n-terms",
        "4",
        "--format",
        "tsv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows, ["s\tN_s", "1\t1", "2\t19", "3\t55", "4\t595"]);
}

#[test]
fn series_reports_theta_discrepancy_at_49() {
    let v = json_ok(&[
        "series",
        "--p",
        "7",
        "--k",
        "2",
        "--z",
        "c2",
        "--n-terms",
        "3",
    ]);
    assert_eq!(v["result"]["coefficients"][1].as_i64(), Some(45));
    assert_eq!(v["result"]["recurrence_holds"], true);
    assert!(v["warnings"][0].as_str().unwrap().contains("q = 49"));
}

#[test]
fn reproduce_example_passes_with_both_sources() {
    for source in ["exact", "paper"] {
        let v = json_ok(&["reproduce-example", "--theta-source", source]);
        assert_eq!(v["result"]["status"], "PASS");
        let observed: Vec<&str> = v["result"]["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["observed"].as_str().unwrap())
            .collect();
        assert!(observed.contains(&"1171") && observed.contains(&"631"));
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["series", "--p", "13", "--y", "2", "--n-terms", "12"];
    assert_eq!(cubic(&args).stdout, cubic(&args).stdout);
}

#[test]
fn query_round_trips() {
    let cases: [&[&str]; 5] = [
        &["constants", "--p", "7", "--k", "2", "--generator", "4,6"],
        &[
            "count",
            "--p",
            "13",
            "--s",
            "3",
            "--y",
            "c2",
            "--theta-source",
            "paper",
        ],
        &["series", "--p", "19", "--z", "1", "--n-terms", "3"],
        &["reproduce-example"],
        &["constants", "--p", "7", "--k", "2", "--modulus", "1,0,1"],
    ];
    for args in cases {
        let v = json_ok(args);
        let query: Query = serde_json::from_value(v["query"].clone()).unwrap();
        assert_eq!(serde_json::to_value(&query).unwrap(), v["query"]);
        let rerun = cubic_cli::run(&query);
        assert_eq!(rerun.stdout.as_bytes(), cubic(args).stdout.as_slice());
    }
}

#[test]
fn validation_errors_exit_2() {
    let e = error_doc(&["constants", "--p", "9"], 2);
    assert_eq!(e["error"]["kind"], "domain");
    let e = error_doc(&["count", "--p", "7", "--s", "2", "--z", "1,2"], 2);
    assert_eq!(e["error"]["kind"], "domain");
    let e = error_doc(&["count", "--p", "7", "--s", "2", "--z", "x"], 2);
    assert_eq!(e["error"]["kind"], "parse");
    let e = error_doc(&["series", "--p", "5", "--z", "zero"], 2);
    assert!(e["error"]["message"].as_str().unwrap().contains("1 mod 3"));
    let e = error_doc(
        &["count", "--p", "7", "--s", "2", "--z", "1", "--y", "3"],
        2,
    );
    assert_eq!(e["error"]["kind"], "usage");
    error_doc(&["count", "--p", "7", "--s", "2", "--y", "0"], 2);
    error_doc(
        &["constants", "--p", "7", "--k", "2", "--generator", "1,0"],
        2,
    );
}

#[test]
fn integrity_errors_exit_3() {
    let e = error_doc(
        &[
            "count",
            "--p",
            "7",
            "--k",
            "2",
            "--s",
            "2",
            "--z",
            "c1",
            "--theta-source",
            "paper",
        ],
        3,
    );
    assert_eq!(e["error"]["kind"], "integrity");
}

#[test]
fn verify_suite_passes() {
    let v = json_ok(&["verify"]);
    assert_eq!(v["result"]["status"], "PASS");
    assert_eq!(v["result"]["groups"].as_array().unwrap().len(), 7);
}
