//! CLI behaviour beyond the pinned contract: exit codes, JSON round-trips,
//! and the expansion-listing invariants.

use std::process::Command;
use std::str::FromStr;

use bindet::binomial::{pi, ExactInt, ExactRat};
use bindet::indexsets::IndexSet;
use bindet::oracle::det_submatrix;

fn bindet(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_bindet"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn exit_codes() {
    // 0: success, even when the determinant is zero
    let (stdout, _, code) = bindet(&["det", "--rows", "1,4", "--cols", "2,3"]);
    assert_eq!((stdout.as_str(), code), ("0\n", 0));

    // 1: domain errors
    let (_, stderr, code) = bindet(&["det", "--rows", "1,4", "--cols", "0,1,2"]);
    assert_eq!(code, 1, "{stderr}");
    let (_, _, code) = bindet(&["det", "--rows", "2..3", "--cols", "0,2", "--method", "moh"]);
    assert_eq!(code, 1);
    let (_, _, code) = bindet(&["nullspace", "--rows", "1,2", "--cols", "5"]);
    assert_eq!(code, 1);

    // 2: usage and parse errors
    let (_, stderr, code) = bindet(&["det", "--rows", "2,1", "--cols", "0,1"]);
    assert_eq!(code, 2, "{stderr}");
    let (_, stderr, code) = bindet(&["det", "--rows", "1, 2", "--cols", "0,1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("byte"), "{stderr}");
    let (_, _, code) = bindet(&["det", "--rows", "1,2", "--cols", "0,1", "--method", "magic"]);
    assert_eq!(code, 2);
    let (_, _, code) = bindet(&["verify", "--suite", "nope"]);
    assert_eq!(code, 2);
    let (_, _, code) = bindet(&["det", "--rows", "1,2"]);
    assert_eq!(code, 2); // clap: missing --cols
}

#[test]
fn json_round_trips() {
    for (r, c) in [
        ("3,5,7,8", "0,3,5,7"),
        ("2..6", "1,2,4,5,6"),
        ("4..7/5", "0..2"),
        ("2..6", "1,2,4,6,8"), // not dominated: det 0, no pi pulled out
    ] {
        let (stdout, _, code) = bindet(&["det", "--rows", r, "--cols", c, "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
        let rows = IndexSet::from_str(v["rows"].as_str().unwrap()).unwrap();
        let cols = IndexSet::from_str(v["cols"].as_str().unwrap()).unwrap();
        // re-evaluating the parsed sets reproduces the same value
        let again = det_submatrix(&rows, &cols).unwrap();
        assert_eq!(again.to_string(), v["det"].as_str().unwrap());
        // the reported factor is the pi pulled out in front, 1 when none was
        let method = v["method"].as_str().unwrap();
        let want_pi = match method {
            "zero_rule" | "identity_rule" | "oracle" => ExactRat::from_integer(1.into()),
            _ => pi(&rows, &cols).unwrap(),
        };
        assert_eq!(want_pi.to_string(), v["pi"].as_str().unwrap(), "{r} {c}");
    }
}

#[test]
fn expand_lists_every_term_and_sums_to_det() {
    let (stdout, _, code) = bindet(&[
        "expand", "--rows", "1,5,7,8", "--cols", "0,3,5,7", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let rows = IndexSet::from_str(v["rows"].as_str().unwrap()).unwrap();
    let terms = v["terms"].as_array().unwrap();
    // exactly the product of the row gaps
    let gaps: i64 = rows.elems().windows(2).map(|w| w[1] - w[0]).product();
    assert_eq!(terms.len() as i64, gaps);
    assert_eq!(v["count"].as_u64().unwrap() as usize, terms.len());

    // pi-weighted term sum equals the reported determinant
    let p: ExactRat = {
        let cols = IndexSet::from_str(v["cols"].as_str().unwrap()).unwrap();
        pi(&rows, &cols).unwrap()
    };
    let mut sum = ExactInt::from(0);
    for t in terms {
        let tr = IndexSet::from_str(t["rows"].as_str().unwrap()).unwrap();
        let tc = IndexSet::from_str(t["cols"].as_str().unwrap()).unwrap();
        let d = det_submatrix(&tr, &tc).unwrap();
        assert_eq!(d.to_string(), t["det"].as_str().unwrap());
        sum += d;
    }
    let total = p * ExactRat::from_integer(sum);
    assert_eq!(total.to_string(), v["det"].as_str().unwrap());

    // the det subcommand agrees
    let (det_out, _, _) = bindet(&["det", "--rows", "1,5,7,8", "--cols", "0,3,5,7"]);
    assert_eq!(det_out.trim(), v["det"].as_str().unwrap());
}

#[test]
fn verify_subcommand_reports_and_exits_cleanly() {
    let (stdout, _, code) = bindet(&[
        "verify",
        "--suite",
        "oracle-equivalence",
        "--seed",
        "3",
        "--trials",
        "40",
        "--max-d",
        "4",
        "--max-index",
        "12",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0, "{stdout}");
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["suite"], "oracle-equivalence");
    assert_eq!(v["trials"], 40);
    assert!(v["failures"].as_array().unwrap().is_empty());

    // identical invocations give identical reports modulo elapsed time
    let (second, _, _) = bindet(&[
        "verify",
        "--suite",
        "oracle-equivalence",
        "--seed",
        "3",
        "--trials",
        "40",
        "--max-d",
        "4",
        "--max-index",
        "12",
        "--format",
        "json",
    ]);
    let v2: serde_json::Value = serde_json::from_str(&second).unwrap();
    assert_eq!(v["failures"], v2["failures"]);
    assert_eq!(v["summary"], v2["summary"]);
}

#[test]
fn pretty_prints_thousands_separators() {
    let (stdout, _, code) = bindet(&[
        "det",
        "--rows",
        "40..45",
        "--cols",
        "2,4,9,13,17,21",
        "--pretty",
    ]);
    assert_eq!(code, 0);
    let plain = bindet(&["det", "--rows", "40..45", "--cols", "2,4,9,13,17,21"]).0;
    assert_eq!(stdout.trim().replace(',', ""), plain.trim());
    if plain.trim().len() > 3 {
        assert!(stdout.contains(','), "{stdout}");
    }
}

#[test]
fn interchange_subcommand_round_trip() {
    let (stdout, _, code) = bindet(&[
        "interchange",
        "--rows",
        "3,5",
        "--cols",
        "1,2",
        "--n",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["q"], "3/4");
    assert_eq!(v["new_rows"], "4,5");
    assert_eq!(v["new_cols"], "1,3");
    assert_eq!(v["verified"], true);

    let (_, _, code) = bindet(&["interchange", "--rows", "3,5", "--cols", "1,2", "--n", "4"]);
    assert_eq!(code, 1);
}

#[test]
fn lambda_flag_requires_the_family() {
    let (stdout, _, code) = bindet(&[
        "nullspace",
        "--rows",
        "1..4",
        "--cols",
        "0,2,3",
        "--lambda",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["integral_coeffs"][0], "3");
    assert_eq!(v["lambda_form"]["lambda"], "3");

    let (_, _, code) = bindet(&[
        "nullspace",
        "--rows",
        "1,3,4,5",
        "--cols",
        "0,2,3",
        "--lambda",
    ]);
    assert_eq!(code, 1);
}
