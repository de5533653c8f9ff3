//! Row/column interchange: `b^I_J = q^J_I(n) * b^{n-J}_{n-I}` for any
//! `n >= max(I)`, together with the pi-product identity that ties the
//! consecutive-rows chain to the reflected consecutive-columns form.

use num_traits::One;
use serde_json::{json, Value};

use crate::binomial::{pi, q_quotient, ExactInt, ExactRat};
use crate::error::{Error, Result};
use crate::formulas::superfactorial;
use crate::indexsets::{derived_chain, IndexSet, IntervalSpec};
use crate::oracle;

/// Matrices up to this size are re-verified against the oracle on return.
const VERIFY_LIMIT: usize = 6;

/// The reflected pair and the scalar relating the two determinants:
/// `q_factor * det(new_rows, new_cols) = det(I, J)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterchangeResult {
    pub q_factor: ExactRat,
    pub new_rows: IndexSet,
    pub new_cols: IndexSet,
    pub n: i64,
}

impl InterchangeResult {
    pub fn to_json(&self) -> Value {
        json!({
            "q": self.q_factor.to_string(),
            "new_rows": self.new_rows.to_string(),
            "new_cols": self.new_cols.to_string(),
            "n": self.n,
        })
    }
}

/// Interchange with the default verification policy (on for d <= 6).
pub fn interchange(rows: &IndexSet, cols: &IndexSet, n: i64) -> Result<InterchangeResult> {
    interchange_checked(rows, cols, n, rows.len() <= VERIFY_LIMIT)
}

/// `new_rows = n - J`, `new_cols = n - I`, `q_factor = q^J_I(n)`. Requires
/// `J <= I` and `n >= max(I)`. With `verify` set, the identity is checked
/// against the oracle before returning.
pub fn interchange_checked(
    rows: &IndexSet,
    cols: &IndexSet,
    n: i64,
    verify: bool,
) -> Result<InterchangeResult> {
    if rows.is_empty() || cols.is_empty() {
        return Err(Error::EmptySet);
    }
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch {
            left: rows.len(),
            right: cols.len(),
        });
    }
    if !cols.leq(rows)? {
        return Err(Error::NotDominated);
    }
    let max = rows.max().expect("non-empty");
    if n < max {
        return Err(Error::OutOfRange {
            name: "n",
            value: n,
            lo: max,
            hi: i64::MAX,
        });
    }
    let q_factor = q_quotient(cols, rows, n)?;
    let new_rows = cols.reflect(n)?;
    let new_cols = rows.reflect(n)?;
    if verify {
        let original = ExactRat::from_integer(oracle::det_submatrix(rows, cols)?);
        let reflected = ExactRat::from_integer(oracle::det_submatrix(&new_rows, &new_cols)?);
        assert_eq!(
            &q_factor * &reflected,
            original,
            "interchange identity failed"
        );
    }
    Ok(InterchangeResult {
        q_factor,
        new_rows,
        new_cols,
        n,
    })
}

/// Both readings of the pi-product identity for rows `[i, i+d-1]` and a
/// dominated column set, evaluated at reflection point `n`.
///
/// The left side is the pi-product over the derived chain, which equals the
/// determinant. The right side `q^J_I(n) * pi^{n-J}_{n-I} * P / sf(d-1)` is
/// evaluated with P under two index readings: `strict` takes the full
/// Vandermonde product over J (1 <= k < l <= d), `literal` keeps k <= l < d,
/// which contains k = l factors and collapses to zero for d >= 2. The report
/// records which reading reproduces the determinant instead of guessing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiProductReport {
    pub det: ExactInt,
    pub pi_chain_product: ExactRat,
    pub rhs_strict: ExactRat,
    pub rhs_literal: ExactRat,
    pub chain_matches_det: bool,
    pub strict_matches_det: bool,
    pub literal_matches_det: bool,
}

impl PiProductReport {
    /// True when the chain product equals the determinant and at least one
    /// reading of the right side matches it too.
    pub fn holds(&self) -> bool {
        self.chain_matches_det && (self.strict_matches_det || self.literal_matches_det)
    }

    pub fn matched_reading(&self) -> &'static str {
        match (self.strict_matches_det, self.literal_matches_det) {
            (true, true) => "both",
            (true, false) => "strict",
            (false, true) => "literal",
            (false, false) => "neither",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "det": self.det.to_string(),
            "pi_chain_product": self.pi_chain_product.to_string(),
            "rhs_strict": self.rhs_strict.to_string(),
            "rhs_literal": self.rhs_literal.to_string(),
            "matched_reading": self.matched_reading(),
        })
    }
}

pub fn pi_product_identity_check(
    i: i64,
    d: usize,
    cols: &IndexSet,
    n: i64,
) -> Result<PiProductReport> {
    if d == 0 {
        return Err(Error::EmptySet);
    }
    if i < 0 {
        return Err(Error::OutOfRange {
            name: "i",
            value: i,
            lo: 0,
            hi: i64::MAX,
        });
    }
    let top = i + d as i64 - 1;
    if n < top {
        return Err(Error::OutOfRange {
            name: "n",
            value: n,
            lo: top,
            hi: i64::MAX,
        });
    }
    let spec = IntervalSpec::new(i, top)?;
    let rows = spec.materialize();
    if cols.len() != d {
        return Err(Error::SizeMismatch {
            left: cols.len(),
            right: d,
        });
    }
    if !cols.leq(&rows)? {
        return Err(Error::NotDominated);
    }

    let det = oracle::det_submatrix(&rows, cols)?;

    let mut chain_product = ExactRat::one();
    for pair in derived_chain(&spec, cols)? {
        chain_product *= pi(&pair.rows, &pair.cols)?;
    }

    let q = q_quotient(cols, &rows, n)?;
    let refl_rows = cols.reflect(n)?;
    let refl_cols = rows.reflect(n)?;
    let pi_reflected = pi(&refl_rows, &refl_cols)?;
    let sf = superfactorial(d - 1);

    let e = cols.elems();
    let mut strict = ExactInt::one();
    for l in 1..d {
        for k in 0..l {
            strict *= ExactInt::from(e[l] - e[k]);
        }
    }
    let mut literal = ExactInt::one();
    for l in 0..d.saturating_sub(1) {
        for k in 0..=l {
            literal *= ExactInt::from(e[l] - e[k]);
        }
    }

    let base = q * pi_reflected;
    let rhs_strict = &base * ExactRat::new(strict, sf.clone());
    let rhs_literal = &base * ExactRat::new(literal, sf);

    let det_rat = ExactRat::from_integer(det.clone());
    Ok(PiProductReport {
        chain_matches_det: chain_product == det_rat,
        strict_matches_det: rhs_strict == det_rat,
        literal_matches_det: rhs_literal == det_rat,
        det,
        pi_chain_product: chain_product,
        rhs_strict,
        rhs_literal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn set(v: &[i64]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    fn int(x: i64) -> ExactInt {
        ExactInt::from(x)
    }

    fn rat(n: i64, d: i64) -> ExactRat {
        ExactRat::new(int(n), int(d))
    }

    #[test]
    fn self_interchange_is_trivial() {
        let i = set(&[2, 5, 6]);
        let r = interchange(&i, &i, 9).unwrap();
        assert!(r.q_factor.is_one());
        assert_eq!(r.new_rows, set(&[3, 4, 7]));
        assert_eq!(r.new_cols, set(&[3, 4, 7]));
    }

    #[test]
    fn fixed_instance() {
        // I = {3,5}, J = {1,2}, n = 6: q = 3/4, dets 15 and 20
        let rows = set(&[3, 5]);
        let cols = set(&[1, 2]);
        let r = interchange(&rows, &cols, 6).unwrap();
        assert_eq!(r.q_factor, rat(3, 4));
        assert_eq!(r.new_rows, set(&[4, 5]));
        assert_eq!(r.new_cols, set(&[1, 3]));
        assert_eq!(oracle::det_submatrix(&rows, &cols).unwrap(), int(15));
        assert_eq!(
            oracle::det_submatrix(&r.new_rows, &r.new_cols).unwrap(),
            int(20)
        );
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            interchange(&set(&[3, 5]), &set(&[1, 2]), 4),
            Err(Error::OutOfRange {
                name: "n",
                value: 4,
                lo: 5,
                hi: i64::MAX
            })
        );
        assert_eq!(
            interchange(&set(&[1, 4]), &set(&[2, 3]), 9),
            Err(Error::NotDominated)
        );
    }

    #[test]
    fn pi_product_fixture() {
        let rep = pi_product_identity_check(2, 3, &set(&[0, 1, 3]), 6).unwrap();
        assert_eq!(rep.det, int(2));
        assert!(rep.chain_matches_det);
        assert!(rep.strict_matches_det);
        assert!(!rep.literal_matches_det);
        assert!(rep.rhs_literal.is_zero());
        assert!(rep.holds());
        assert_eq!(rep.matched_reading(), "strict");
    }

    #[test]
    fn pi_product_trivial_cases() {
        // J = [0, d-1]: both sides are 1
        let rep = pi_product_identity_check(3, 4, &set(&[0, 1, 2, 3]), 8).unwrap();
        assert_eq!(rep.det, int(1));
        assert!(rep.chain_matches_det && rep.strict_matches_det);

        // d = 1: both readings are empty products and both match
        let rep = pi_product_identity_check(5, 1, &set(&[2]), 7).unwrap();
        assert_eq!(rep.det, int(10));
        assert!(rep.holds());
        assert_eq!(rep.matched_reading(), "both");
    }
}
