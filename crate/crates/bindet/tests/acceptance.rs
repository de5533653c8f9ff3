//! Acceptance suite. One test per criterion; each prints a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`). All value
//! comparisons are exact.

use std::time::Instant;

use bindet::binomial::{binom, pi, ExactInt, ExactRat};
use bindet::formulas::{det, size_reduction_expand};
use bindet::indexsets::IndexSet;
use bindet::nullspace::{nullspace_cramer, nullspace_lambda};
use bindet::oracle::det_submatrix;
use bindet::verify::{exhaustive_positivity, run_suite, InstanceGen, Shape, SuiteReport};

fn set(v: &[i64]) -> IndexSet {
    IndexSet::new(v.to_vec()).unwrap()
}

fn int(x: i64) -> ExactInt {
    ExactInt::from(x)
}

fn rat(n: i64, d: i64) -> ExactRat {
    ExactRat::new(int(n), int(d))
}

fn require(criterion: &str, report: &SuiteReport) {
    if report.passed() {
        println!(
            "PASS {criterion}: {} trials in {} ms{}",
            report.trials,
            report.elapsed_ms,
            report
                .summary
                .as_deref()
                .map(|s| format!(" ({s})"))
                .unwrap_or_default()
        );
    } else {
        println!(
            "FAIL {criterion}: {} of {} trials failed",
            report.failures.len(),
            report.trials
        );
        panic!(
            "{criterion} failed; first failure: {:?}",
            report.failures.first()
        );
    }
}

#[test]
fn criterion_1_oracle_equivalence() {
    let gen = InstanceGen::new(11, 6, 20, Shape::JLeqI);
    let report = run_suite("oracle-equivalence", &gen, 1000).unwrap();
    require("criterion 1 (oracle equivalence)", &report);
}

#[test]
fn criterion_2_positivity() {
    let start = Instant::now();
    let exhaustive = exhaustive_positivity(8, 4);
    require(
        "criterion 2a (positivity, exhaustive idx<8 d<=4)",
        &exhaustive,
    );
    let gen = InstanceGen::new(22, 6, 20, Shape::General);
    let random = run_suite("positivity", &gen, 500).unwrap();
    require("criterion 2b (positivity, 500 random)", &random);
    println!("  positivity total: {} ms", start.elapsed().as_millis());
}

#[test]
fn criterion_3_paper_fixtures() {
    // pinned determinant values
    for (rows, cols, want) in [
        (set(&[2, 3]), set(&[0, 2]), 2i64),
        (set(&[1, 3]), set(&[0, 1]), 2),
        (set(&[3]), set(&[0]), 1),
    ] {
        let report = det(&rows, &cols, None).unwrap();
        assert_eq!(report.value, int(want), "det rows={rows} cols={cols}");
        assert_eq!(det_submatrix(&rows, &cols).unwrap(), int(want));
    }

    // pinned scalar quotients
    assert_eq!(pi(&set(&[1, 3]), &set(&[1, 2])).unwrap(), rat(3, 2));
    assert_eq!(pi(&set(&[4, 5]), &set(&[1, 3])).unwrap(), rat(20, 3));

    // two-interval family with j = 1
    for i in 1i64..=5 {
        for d in 1usize..=5 {
            let rows = IndexSet::interval(i, i + d as i64 - 1).unwrap();
            let cols = IndexSet::interval(1, d as i64).unwrap();
            let got = det(&rows, &cols, None).unwrap().value;
            assert_eq!(
                got,
                binom(i + d as i64 - 1, d as i64).unwrap(),
                "i={i} d={d}"
            );
        }
    }

    // size-reduction expansion tuples
    let terms = size_reduction_expand(&set(&[3, 5, 7, 8]), &set(&[0, 3, 5, 7])).unwrap();
    let tuples: Vec<Vec<i64>> = terms.iter().map(|t| t.rows.elems().to_vec()).collect();
    assert_eq!(
        tuples,
        vec![vec![3, 5, 7], vec![3, 6, 7], vec![4, 5, 7], vec![4, 6, 7]]
    );
    assert!(terms.iter().all(|t| t.cols == set(&[2, 4, 6])));

    let terms = size_reduction_expand(&set(&[1, 5, 7, 8]), &set(&[0, 3, 5, 7])).unwrap();
    assert_eq!(terms.len(), 8);
    let dets: Vec<ExactInt> = terms
        .iter()
        .map(|t| det_submatrix(&t.rows, &t.cols).unwrap())
        .collect();
    assert!(
        dets[0] == int(0) && dets[1] == int(0),
        "first two summands vanish"
    );

    let fixtures = run_suite(
        "counterexample-fixtures",
        &InstanceGen::new(0, 1, 1, Shape::General),
        1,
    )
    .unwrap();
    require("criterion 3 (paper fixtures)", &fixtures);
}

#[test]
fn criterion_4_nullspace() {
    let gen = InstanceGen::new(44, 6, 12, Shape::NullspaceFamily);
    let report = run_suite("nullspace-annihilation", &gen, 300).unwrap();
    require("criterion 4 (nullspace family, 300 instances)", &report);

    for d in 3usize..=6 {
        let di = d as i64;

        // alternating binomial row: I = [0, d-1], J = [0, d-2]
        let rows = IndexSet::interval(0, di - 1).unwrap();
        let cols = IndexSet::interval(0, di - 2).unwrap();
        let v = nullspace_cramer(&rows, &cols).unwrap();
        let want: Vec<ExactInt> = (0..di)
            .map(|r| {
                let b = binom(di - 1, r).unwrap();
                if r % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .collect();
        assert_eq!(v.integral_coeffs(), want, "alternating row d={d}");

        // C(d-1,1) u_1 + sum (-1)^(r-1) C(d,r) u_r: i = 1, j = 2
        let (_, v) = nullspace_lambda(1, d, 2).unwrap();
        let mut want = vec![binom(di - 1, 1).unwrap()];
        for r in 2..=di {
            let b = binom(di, r).unwrap();
            want.push(if r % 2 == 1 { b } else { -b });
        }
        assert_eq!(v.integral_coeffs(), want, "second pattern d={d}");

        // u_1 - u_2: I = [0, d-1], J = {0} u [2, d-1]
        let mut cv = vec![0i64];
        cv.extend(2..=di - 1);
        let cols = IndexSet::new(cv).unwrap();
        let v = nullspace_cramer(&rows, &cols).unwrap();
        let mut want = vec![int(0); d];
        want[0] = int(1);
        want[1] = int(-1);
        assert_eq!(v.integral_coeffs(), want, "unit difference d={d}");
    }
    println!("PASS criterion 4 (three printed coefficient patterns, d = 3..6)");
}

#[test]
fn criterion_5_max_rank() {
    let gen = InstanceGen::new(0, 4, 8, Shape::General);
    let report = run_suite("max-rank", &gen, 0).unwrap();
    require("criterion 5 (max rank, exhaustive i<=8 d<=4)", &report);
}

#[test]
fn criterion_6_interchange() {
    let gen = InstanceGen::new(66, 6, 20, Shape::JLeqI);
    let report = run_suite("interchange", &gen, 500).unwrap();
    require("criterion 6 (interchange, 500 instances)", &report);
}

#[test]
fn criterion_7_counting_identity() {
    let gen = InstanceGen::new(0, 4, 12, Shape::General);
    let report = run_suite("counting-identity", &gen, 0).unwrap();
    require(
        "criterion 7 (counting identity, exhaustive d<=4 idx<=12)",
        &report,
    );
}

#[test]
fn criterion_8_pi_product() {
    let gen = InstanceGen::new(88, 6, 16, Shape::RowsInterval);
    let report = run_suite("pi-product", &gen, 100).unwrap();
    // the summary names which reading matched; the suite fails unless the
    // chain equals the determinant on every instance and some reading matches
    require("criterion 8 (pi-product identity, 100 instances)", &report);
    assert!(
        report.summary.is_some(),
        "report must state which reading matched"
    );
}
