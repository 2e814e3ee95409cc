mod common;

use central_cli::exit;
use common::central;
use serde_json::Value;

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json", "--no-timestamp"];
    full.extend_from_slice(args);
    let out = central(&full);
    assert_eq!(out.code, exit::OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn ctransform_of_ones_is_catalan() {
    let out = central(&["ctransform", "1/(1-x)", "--order", "8"]);
    assert_eq!(out.code, exit::OK);
    assert_eq!(out.stdout, "1,1,2,5,14,42,132,429,1430\n");
}

#[test]
fn ctransform_reads_sequence_files() {
    let dir = tempfile::tempdir().unwrap();
    let json_file = dir.path().join("ones.json");
    std::fs::write(&json_file, r#"["1", "1", "1", "1", "1", "1"]"#).unwrap();
    let out = central(&["ctransform", "--file", json_file.to_str().unwrap()]);
    assert_eq!(out.stdout, "1,1,2,5,14,42\n");

    let csv_file = dir.path().join("ones.csv");
    std::fs::write(&csv_file, "1\n1\n2\n5\n14\n").unwrap();
    let out = central(&["cinverse", "--file", csv_file.to_str().unwrap()]);
    assert_eq!(out.code, exit::OK, "{}", out.stderr);
    assert_eq!(out.stdout, "1,1,1,1,1\n");
}

#[test]
fn cinverse_round_trips() {
    let out = central(&["cinverse", "c(x)", "--order", "6"]);
    assert_eq!(out.stdout, "1,1,1,1,1,1,1\n");
}

#[test]
fn expand_prints_rationals() {
    let out = central(&["expand", "1/(2-x)", "--order", "3"]);
    assert_eq!(out.stdout, "1/2,1/4,1/8,1/16\n");
    let out = central(&["--format", "csv", "expand", "1/(1-x)^2", "--order", "3"]);
    assert_eq!(out.stdout, "1\n2\n3\n4\n");
}

#[test]
fn hankel_of_central_binomials() {
    let out = central(&["hankel", "1,2,6,20,70,252,924", "--count", "4"]);
    assert_eq!(out.stdout, "1,2,4,8\n");
    let v = json(&["hankel", "1,2,6,20,70,252,924", "--count", "4"]);
    assert_eq!(v["terms"], serde_json::json!(["1", "2", "4", "8"]));
    assert_eq!(v["command"], "hankel");
}

#[test]
fn fitgf_recovers_rational_function() {
    let out = central(&[
        "fitgf",
        "1,-1,-4,4,16,-16,-64,64,256,-256",
        "--num-deg",
        "1",
        "--den-deg",
        "2",
    ]);
    assert_eq!(out.stdout, "(1 - x) / (1 + 4*x^2)\n");
    let v = json(&[
        "fitgf",
        "1,1,1,1,1,1,1,1,1,1",
        "--num-deg",
        "0",
        "--den-deg",
        "1",
    ]);
    assert_eq!(v["numerator"], serde_json::json!(["1"]));
    assert_eq!(v["denominator"], serde_json::json!(["1", "-1"]));
}

#[test]
fn jfrac_with_repeating_tail() {
    let out = central(&["jfrac", "--linear", "2", "--repeat", "4,0", "--order", "10"]);
    assert_eq!(
        out.stdout,
        "1,2,3,0,-26,-150,-641,-2408,-8402,-27948,-90034\n"
    );
    let v = json(&["jfrac", "--linear", "1", "--repeat", "4,0", "--order", "9"]);
    assert_eq!(v["exact_terms"], 10);
    assert_eq!(v["terms"][9], "-11934");
}

#[test]
fn verify_linear_ratio_printed_case() {
    let out = central(&["verify", "5", "--a", "-2", "--b", "1"]);
    assert_eq!(out.code, exit::OK, "{}", out.stderr);
    assert!(out.stdout.contains("hankel-conjecture"));
    assert!(!out.stdout.contains("FAIL"));
    let v = json(&["verify", "linear-ratio", "--a", "-2", "--b", "1"]);
    assert_eq!(v["failed"], 0);
    let reports = v["reports"].as_array().unwrap();
    let conj = reports
        .iter()
        .find(|r| r["claim_id"] == "linear-ratio/hankel-conjecture")
        .unwrap();
    assert_eq!(
        conj["expected_prefix"],
        serde_json::json!(["1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1"])
    );
    assert_eq!(conj["status"], "pass");
}

#[test]
fn verify_rejects_foreign_parameters() {
    let out = central(&["verify", "lucas", "--a", "1"]);
    assert_eq!(out.code, exit::USAGE);
    let out = central(&["verify", "13"]);
    assert_eq!(out.code, exit::USAGE);
    let out = central(&["verify", "all", "--a", "1"]);
    assert_eq!(out.code, exit::USAGE);
}

#[test]
fn verify_csv_has_one_row_per_report() {
    let out = central(&[
        "--format",
        "csv",
        "verify",
        "invert",
        "--a",
        "2",
        "--no-examples",
    ]);
    let mut lines = out.stdout.lines();
    assert_eq!(
        lines.next().unwrap(),
        "claim_id,parameters,status,prefix_length,computed,expected,note"
    );
    assert!(lines.clone().count() > 0);
    assert!(lines.all(|l| l.contains(",a=2,pass,")));
}

#[test]
fn strict_mode_passes_when_every_report_passes() {
    let out = central(&["--strict", "verify", "equal-hankel"]);
    assert_eq!(out.code, exit::OK, "{}", out.stdout);
}

#[test]
fn tables_reproduce_known_rows() {
    let out = central(&["--format", "csv", "table", "simple"]);
    assert!(out
        .stdout
        .contains("1/(1-x),c(x),\"1,1,2,5,14,42,132,429\",\"1,1,1,1,1,1,1,1\",(1) / (1 - x)"));
    let v = json(&["table", "aerated", "--rows", "10"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[1]["image_gf"], "(1) / (1 - 2*x)");
    assert_eq!(rows[9]["central_binomial_agreement"], "10");
    let v = json(&["table", "trees"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 10);
    assert_eq!(v["rows"][1]["image_terms"], "1,3,10,35,126,462,1716,6435");
}

#[test]
fn exit_codes() {
    assert_eq!(central(&["frobnicate"]).code, exit::USAGE);
    assert_eq!(central(&["expand"]).code, exit::USAGE);
    assert_eq!(central(&["--order", "1", "expand", "x"]).code, exit::USAGE);
    assert_eq!(central(&["expand", "1/(1-"]).code, exit::PARSE);
    assert_eq!(central(&["hankel", "1,2,x"]).code, exit::PARSE);
    assert_eq!(central(&["ctransform", "2+x"]).code, exit::MATH);
    assert_eq!(central(&["expand", "1/x"]).code, exit::MATH);
    assert_eq!(
        central(&["hankel", "1,2,3", "--count", "3"]).code,
        exit::MATH
    );
    assert_eq!(
        central(&["ctransform", "--file", "/nonexistent/seq.json"]).code,
        exit::USAGE
    );
    let help = central(&["--help"]);
    assert_eq!(help.code, exit::OK);
    assert!(help.stdout.contains("ctransform"));
}

#[test]
fn output_is_deterministic_without_timestamp() {
    let args = [
        "--format",
        "json",
        "--no-timestamp",
        "verify",
        "aerated",
        "--r",
        "1..4",
    ];
    let first = central(&args);
    assert_eq!(first, central(&args));
    assert!(!first.stdout.contains("timestamp"));
    let stamped = central(&["--format", "json", "expand", "x"]);
    let v: Value = serde_json::from_str(&stamped.stdout).unwrap();
    assert!(v["timestamp"].as_str().unwrap().ends_with('Z'));
}
