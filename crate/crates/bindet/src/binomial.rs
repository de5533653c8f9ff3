//! Exact binomial coefficients, the submatrix `B^I_J` of the infinite
//! binomial matrix, and the scalar quotients `pi^I_J` and `q^J_I(n)`.
//!
//! Everything is arbitrary precision; there is no floating point and no
//! global memo table, so every function here is pure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::indexsets::IndexSet;

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Normalized rational: reduced, denominator positive. `Display` gives the
/// decimal-string wire form (`"6"`, `"-20/3"`) used in JSON output.
pub type ExactRat = BigRational;

/// `C(i, j)`, zero when `j > i`. Both arguments must be non-negative.
pub fn binom(i: i64, j: i64) -> Result<ExactInt> {
    if i < 0 {
        return Err(Error::OutOfRange {
            name: "i",
            value: i,
            lo: 0,
            hi: i64::MAX,
        });
    }
    if j < 0 {
        return Err(Error::OutOfRange {
            name: "j",
            value: j,
            lo: 0,
            hi: i64::MAX,
        });
    }
    Ok(binom_unchecked(i, j))
}

/// Running-product scheme: `C(i, j) = prod_{t=1..j} (i-j+t)/t`. Every prefix
/// of the product is itself a binomial coefficient, so each division is
/// exact; this is asserted rather than trusted.
pub(crate) fn binom_unchecked(i: i64, j: i64) -> ExactInt {
    debug_assert!(i >= 0);
    if j < 0 || j > i {
        return ExactInt::zero();
    }
    let j = j.min(i - j);
    let mut acc = ExactInt::one();
    for t in 1..=j {
        acc *= ExactInt::from(i - j + t);
        let (q, r) = acc.div_rem(&ExactInt::from(t));
        assert!(r.is_zero(), "binomial running product divided inexactly");
        acc = q;
    }
    acc
}

/// Dense submatrix of the binomial matrix with the given rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinMatrix {
    rows: IndexSet,
    cols: IndexSet,
    entries: Vec<Vec<ExactInt>>,
}

impl BinMatrix {
    pub fn rows(&self) -> &IndexSet {
        &self.rows
    }

    pub fn cols(&self) -> &IndexSet {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn entry(&self, r: usize, c: usize) -> &ExactInt {
        &self.entries[r][c]
    }

    pub fn entries(&self) -> &[Vec<ExactInt>] {
        &self.entries
    }
}

/// `B^I_J`: the `|I| x |J|` grid with entry `(r, c) = C(I[r], J[c])`.
pub fn submatrix(rows: &IndexSet, cols: &IndexSet) -> Result<BinMatrix> {
    if rows.is_empty() || cols.is_empty() {
        return Err(Error::EmptySet);
    }
    let entries = rows
        .iter()
        .map(|i| cols.iter().map(|j| binom_unchecked(i, j)).collect())
        .collect();
    Ok(BinMatrix {
        rows: rows.clone(),
        cols: cols.clone(),
        entries,
    })
}

/// `pi^I_J = (C(i_1,j_1) ... C(i_d,j_1)) / (C(j_1,j_1) ... C(j_d,j_1))`.
///
/// Zero iff `i_1 < j_1`; equal to one when `j_1 = 0` or `J = I`. The
/// denominator factors are all positive, so the quotient is always defined.
pub fn pi(rows: &IndexSet, cols: &IndexSet) -> Result<ExactRat> {
    if rows.is_empty() || cols.is_empty() {
        return Err(Error::EmptySet);
    }
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch {
            left: rows.len(),
            right: cols.len(),
        });
    }
    let j1 = cols.min().expect("non-empty");
    let mut numer = ExactInt::one();
    let mut denom = ExactInt::one();
    for i in rows.iter() {
        numer *= binom_unchecked(i, j1);
    }
    for j in cols.iter() {
        denom *= binom_unchecked(j, j1);
    }
    Ok(ExactRat::new(numer, denom))
}

/// `q^J_I(n) = (C(n,j_1) ... C(n,j_d)) / (C(n,i_1) ... C(n,i_d))` with the
/// numerator indexed by `numer_set` and the denominator by `denom_set`.
/// Requires `n >= max` of both sets, which keeps every factor positive.
pub fn q_quotient(numer_set: &IndexSet, denom_set: &IndexSet, n: i64) -> Result<ExactRat> {
    if numer_set.is_empty() || denom_set.is_empty() {
        return Err(Error::EmptySet);
    }
    if numer_set.len() != denom_set.len() {
        return Err(Error::SizeMismatch {
            left: numer_set.len(),
            right: denom_set.len(),
        });
    }
    let needed = numer_set.max().unwrap().max(denom_set.max().unwrap());
    if n < needed {
        return Err(Error::OutOfRange {
            name: "n",
            value: n,
            lo: needed,
            hi: i64::MAX,
        });
    }
    let mut numer = ExactInt::one();
    let mut denom = ExactInt::one();
    for j in numer_set.iter() {
        numer *= binom_unchecked(n, j);
    }
    for i in denom_set.iter() {
        denom *= binom_unchecked(n, i);
    }
    Ok(ExactRat::new(numer, denom))
}
