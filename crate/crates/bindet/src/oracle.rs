//! Independent ground truth: exact determinant and rank through one-step
//! fraction-free (Bareiss) elimination, with Laplace cofactor expansion as a
//! second oracle for tiny sizes.
//!
//! In the Bareiss recurrence every division is exact over the integers; an
//! inexact division would mean a bug, so it is asserted, which makes the
//! oracle self-checking.

use num_traits::{One, Zero};

use crate::binomial::{submatrix, BinMatrix, ExactInt};
use crate::error::{Error, Result};
use crate::indexsets::IndexSet;

/// Owned n x n grid of exact integers, n >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareExactMatrix {
    entries: Vec<Vec<ExactInt>>,
}

impl SquareExactMatrix {
    pub fn from_rows(entries: Vec<Vec<ExactInt>>) -> Result<Self> {
        if entries.is_empty() || entries[0].is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        Ok(SquareExactMatrix { entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| ExactInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn from_binmatrix(m: &BinMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        Ok(SquareExactMatrix {
            entries: m.entries().to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &ExactInt {
        &self.entries[r][c]
    }
}

/// Exact determinant by Bareiss elimination. Pivoting takes the first
/// nonzero entry in the column, top-down, and the sign of each swap is
/// tracked; a fully zero column short-circuits to zero.
pub fn det_bareiss(m: &SquareExactMatrix) -> ExactInt {
    let n = m.n();
    let mut a = m.entries.clone();
    let mut negate = false;
    let mut prev = ExactInt::one();
    for k in 0..n.saturating_sub(1) {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return ExactInt::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for r in k + 1..n {
            for c in k + 1..n {
                let t = &a[k][k] * &a[r][c] - &a[r][k] * &a[k][c];
                a[r][c] = exact_div(t, &prev);
            }
            a[r][k] = ExactInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Laplace expansion along the first row; guarded to n <= 8 against the
/// factorial cost. Independent of the Bareiss path.
pub fn det_cofactor(m: &SquareExactMatrix) -> Result<ExactInt> {
    if m.n() > 8 {
        return Err(Error::CofactorTooLarge { n: m.n() });
    }
    Ok(cofactor_rec(&m.entries))
}

fn cofactor_rec(a: &[Vec<ExactInt>]) -> ExactInt {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut det = ExactInt::zero();
    for c in 0..n {
        if a[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<ExactInt>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(cc, _)| cc != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &a[0][c] * cofactor_rec(&minor);
        if c % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// Exact rank of a rectangular integer grid, by fraction-free elimination
/// with row pivoting and column skipping.
pub fn rank(entries: &[Vec<ExactInt>]) -> Result<usize> {
    if entries.is_empty() || entries[0].is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let ncols = entries[0].len();
    for row in entries {
        if row.len() != ncols {
            return Err(Error::RaggedMatrix {
                first: ncols,
                other: row.len(),
            });
        }
    }
    let nrows = entries.len();
    let mut a = entries.to_vec();
    let mut rk = 0usize;
    let mut prev = ExactInt::one();
    for col in 0..ncols {
        if rk == nrows {
            break;
        }
        let Some(p) = (rk..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rk);
        for r in rk + 1..nrows {
            for c in col + 1..ncols {
                let t = &a[rk][col] * &a[r][c] - &a[r][col] * &a[rk][c];
                a[r][c] = exact_div(t, &prev);
            }
            a[r][col] = ExactInt::zero();
        }
        prev = a[rk][col].clone();
        rk += 1;
    }
    Ok(rk)
}

/// det(B^I_J) through the Bareiss oracle; the sets must be non-empty and of
/// equal size.
pub fn det_submatrix(rows: &IndexSet, cols: &IndexSet) -> Result<ExactInt> {
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch {
            left: rows.len(),
            right: cols.len(),
        });
    }
    let m = SquareExactMatrix::from_binmatrix(&submatrix(rows, cols)?)?;
    Ok(det_bareiss(&m))
}

fn exact_div(t: ExactInt, d: &ExactInt) -> ExactInt {
    use num_integer::Integer;
    let (q, r) = t.div_rem(d);
    assert!(r.is_zero(), "fraction-free elimination divided inexactly");
    q
}
