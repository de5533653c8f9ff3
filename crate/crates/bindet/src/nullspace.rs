//! Left-nullspace generators of d x (d-1) binomial matrices: the general
//! Cramer construction and the lambda closed form for the family
//! `I = [i, i+d-1]`, `J = {0} u [j, j+d-3]`.
//!
//! The left nullspace of a d x e matrix B is `{x : x^T B = 0}`. For the
//! matrices treated here it is one-dimensional; rank deficiency beyond
//! corank 1 is an error, not a basis computation.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::binomial::{binom_unchecked, submatrix, ExactInt, ExactRat};
use crate::error::{Error, Result};
use crate::formulas;
use crate::indexsets::{IndexSet, IntervalSpec};
use crate::oracle;

/// A generator of the left nullspace, in the standard basis u_1, ..., u_d.
/// Guaranteed nonzero and verified to annihilate its matrix exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullVector {
    coeffs: Vec<ExactRat>,
}

impl NullVector {
    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    /// The vector scaled by the lcm of all denominators. Integer inputs come
    /// back unchanged.
    pub fn integral_coeffs(&self) -> Vec<ExactInt> {
        let scale = self
            .coeffs
            .iter()
            .fold(ExactInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| {
                let (q, r) = (c.numer() * &scale).div_rem(c.denom());
                debug_assert!(r.is_zero());
                q
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "integral_coeffs": self
                .integral_coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
        })
    }
}

/// Exact check that `v^T B^I_J = 0`.
pub fn annihilates(coeffs: &[ExactRat], rows: &IndexSet, cols: &IndexSet) -> bool {
    cols.iter().all(|j| {
        let mut acc = ExactRat::zero();
        for (c, i) in coeffs.iter().zip(rows.iter()) {
            acc += c * ExactRat::from_integer(binom_unchecked(i, j));
        }
        acc.is_zero()
    })
}

/// Cramer construction: coefficient r is `(-1)^(r-1)` times the minor
/// obtained by deleting row r. Requires |J| = |I| - 1 and rank d-1, which
/// is verified through the oracle; the raw integers are not normalized.
pub fn nullspace_cramer(rows: &IndexSet, cols: &IndexSet) -> Result<NullVector> {
    let d = rows.len();
    if d < 2 || cols.len() != d - 1 {
        return Err(Error::SizeMismatch {
            left: d,
            right: cols.len(),
        });
    }
    let m = submatrix(rows, cols)?;
    let rk = oracle::rank(m.entries())?;
    if rk != d - 1 {
        return Err(Error::RankDeficient {
            rank: rk,
            expected: d - 1,
        });
    }
    let mut coeffs = Vec::with_capacity(d);
    for (r, i) in rows.iter().enumerate() {
        let minor_rows = rows.remove(i)?;
        let v = formulas::det(&minor_rows, cols, None)?.value;
        coeffs.push(ExactRat::from_integer(if r % 2 == 0 { v } else { -v }));
    }
    assert!(
        annihilates(&coeffs, rows, cols),
        "Cramer vector failed to annihilate its matrix"
    );
    assert!(coeffs.iter().any(|c| !c.is_zero()));
    Ok(NullVector { coeffs })
}

/// The scalar lambda and the per-row unsigned factors of the closed-form
/// generator: `lambda * per_index_terms[r-1]` is the minor with row r
/// deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaForm {
    pub lambda: ExactRat,
    pub per_index_terms: Vec<ExactRat>,
}

impl LambdaForm {
    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.to_string(),
            "terms": self
                .per_index_terms
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
        })
    }
}

/// Closed-form generator for `I = [i, i+d-1]`, `J = {0} u [j, j+d-3]` with
/// `d >= 3`, `j >= 1` and `J <= [i, i+d-2]` (i.e. `j <= i+1`, which keeps
/// every denominator binomial nonzero):
///
/// ```text
/// lambda = (prod_{k=1..d-1} C(i+k-1, j-1)) / (prod_{k=0..d-3} C(j+k-1, j-1))
/// v_1 = 1 / C(i, j-1)
/// v_r = (-1)^(r-1) ( C(d-2, r-1)/C(i+r-1, j-1) + C(d-2, r-2)/C(i+r-2, j-1) )
/// v_d = (-1)^(d-1) / C(i+d-2, j-1)
/// ```
///
/// The lambda-scaled vector is asserted equal to the Cramer vector.
pub fn nullspace_lambda(i: i64, d: usize, j: i64) -> Result<(LambdaForm, NullVector)> {
    if d < 3 {
        return Err(Error::OutOfRange {
            name: "d",
            value: d as i64,
            lo: 3,
            hi: i64::MAX,
        });
    }
    if i < 0 {
        return Err(Error::OutOfRange {
            name: "i",
            value: i,
            lo: 0,
            hi: i64::MAX,
        });
    }
    if j < 1 {
        return Err(Error::OutOfRange {
            name: "j",
            value: j,
            lo: 1,
            hi: i64::MAX,
        });
    }
    let mut col_vals = vec![0i64];
    col_vals.extend(j..=j + d as i64 - 3);
    let cols = IndexSet::new(col_vals)?;
    let rows = IntervalSpec::new(i, i + d as i64 - 1)?.materialize();
    let upper = IntervalSpec::new(i, i + d as i64 - 2)?.materialize();
    if !cols.leq(&upper)? {
        return Err(Error::NotDominated);
    }

    let mut numer = ExactInt::one();
    for k in 1..d as i64 {
        numer *= binom_unchecked(i + k - 1, j - 1);
    }
    // the k = 0 factor is C(j-1, j-1) = 1, kept for symmetry with the others
    let mut denom = ExactInt::one();
    for k in 0..=(d as i64 - 3) {
        denom *= binom_unchecked(j + k - 1, j - 1);
    }
    let lambda = ExactRat::new(numer, denom);

    let inv = |p: i64| ExactRat::new(ExactInt::one(), binom_unchecked(p, j - 1));
    let mut terms = Vec::with_capacity(d);
    terms.push(inv(i));
    for r in 2..d {
        let a = ExactRat::new(
            binom_unchecked(d as i64 - 2, r as i64 - 1),
            binom_unchecked(i + r as i64 - 1, j - 1),
        );
        let b = ExactRat::new(
            binom_unchecked(d as i64 - 2, r as i64 - 2),
            binom_unchecked(i + r as i64 - 2, j - 1),
        );
        terms.push(a + b);
    }
    terms.push(inv(i + d as i64 - 2));

    let coeffs: Vec<ExactRat> = terms
        .iter()
        .enumerate()
        .map(|(r, t)| if r % 2 == 0 { t.clone() } else { -t.clone() })
        .collect();

    // cross-check against the Cramer route: that vector must be exactly
    // lambda times this one
    let cramer = nullspace_cramer(&rows, &cols)?;
    for (c, v) in cramer.coeffs().iter().zip(&coeffs) {
        assert_eq!(c, &(&lambda * v), "lambda form disagrees with Cramer");
    }
    assert!(annihilates(&coeffs, &rows, &cols));

    Ok((
        LambdaForm {
            lambda,
            per_index_terms: terms,
        },
        NullVector { coeffs },
    ))
}
