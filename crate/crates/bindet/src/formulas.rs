//! Closed-form evaluation of binomial determinants `b^I_J` and a dispatcher
//! that picks the cheapest applicable formula, defaulting to size reduction
//! within a term budget and to the Bareiss oracle beyond it.
//!
//! Every evaluation path returns the exact determinant; the paths differ
//! only in cost. Exact-division asserts double as self-checks: a failed
//! divide means a formula was applied outside its hypotheses.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::binomial::{binom_unchecked, pi, ExactInt, ExactRat};
use crate::error::{Error, Result};
use crate::indexsets::{derived_chain, IndexSet, IntervalSpec};
use crate::oracle;

/// Default cap on expansion terms, shared by the explicit expansion and the
/// dispatcher's recursion budget.
pub const DEFAULT_TERM_CAP: u64 = 1_000_000;

/// Evaluation strategies, in dispatcher precedence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ZeroRule,
    IdentityRule,
    Moh,
    RowsInterval,
    ColsInterval,
    RowsAlmostCols,
    AlmostRowsCols,
    SizeReduction,
    ReduceShift,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 10] = [
        Method::ZeroRule,
        Method::IdentityRule,
        Method::Moh,
        Method::RowsInterval,
        Method::ColsInterval,
        Method::RowsAlmostCols,
        Method::AlmostRowsCols,
        Method::SizeReduction,
        Method::ReduceShift,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::ZeroRule => "zero_rule",
            Method::IdentityRule => "identity_rule",
            Method::Moh => "moh",
            Method::RowsInterval => "rows_interval",
            Method::ColsInterval => "cols_interval",
            Method::RowsAlmostCols => "rows_almost_cols",
            Method::AlmostRowsCols => "almost_rows_cols",
            Method::SizeReduction => "size_reduction",
            Method::ReduceShift => "reduce_shift",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMethod { name: s.into() })
    }
}

/// Outcome of a determinant evaluation: the value, how it was obtained, and
/// the scalar `pi` factor pulled out in front (1 when none was).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalReport {
    pub rows: IndexSet,
    pub cols: IndexSet,
    pub value: ExactInt,
    pub method: Method,
    pub pi_factor: ExactRat,
}

impl EvalReport {
    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows.to_string(),
            "cols": self.cols.to_string(),
            "det": self.value.to_string(),
            "method": self.method.name(),
            "pi": self.pi_factor.to_string(),
        })
    }
}

/// One summand of the size-reduction expansion: the k-tuple (as the row set
/// of the smaller determinant) and the shifted column set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub rows: IndexSet,
    pub cols: IndexSet,
}

/// `b^I_J` with the method chosen automatically, under the default term cap.
pub fn det(rows: &IndexSet, cols: &IndexSet, method: Option<Method>) -> Result<EvalReport> {
    det_with_cap(rows, cols, method, DEFAULT_TERM_CAP)
}

/// `b^I_J`. With `method = None` the dispatcher picks, in order: the
/// zero/identity rules, the two-interval closed form, consecutive rows,
/// consecutive columns, size reduction while the term budget lasts, and the
/// oracle past it. An explicit method is applied or rejected as
/// inapplicable, never silently replaced.
pub fn det_with_cap(
    rows: &IndexSet,
    cols: &IndexSet,
    method: Option<Method>,
    term_cap: u64,
) -> Result<EvalReport> {
    check_pair(rows, cols)?;
    match method {
        None => {
            let mut budget = term_cap;
            det_auto(rows, cols, &mut budget)
        }
        Some(m) => det_explicit(rows, cols, m, term_cap),
    }
}

fn check_pair(rows: &IndexSet, cols: &IndexSet) -> Result<()> {
    if rows.is_empty() || cols.is_empty() {
        return Err(Error::EmptySet);
    }
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch {
            left: rows.len(),
            right: cols.len(),
        });
    }
    Ok(())
}

fn report(
    rows: &IndexSet,
    cols: &IndexSet,
    value: ExactInt,
    method: Method,
    pi_factor: ExactRat,
) -> EvalReport {
    EvalReport {
        rows: rows.clone(),
        cols: cols.clone(),
        value,
        method,
        pi_factor,
    }
}

fn det_auto(rows: &IndexSet, cols: &IndexSet, budget: &mut u64) -> Result<EvalReport> {
    if !cols.leq(rows)? {
        return Ok(report(
            rows,
            cols,
            ExactInt::zero(),
            Method::ZeroRule,
            ExactRat::one(),
        ));
    }
    if rows == cols {
        return Ok(report(
            rows,
            cols,
            ExactInt::one(),
            Method::IdentityRule,
            ExactRat::one(),
        ));
    }
    let d = rows.len();
    if let (Some(ri), Some(ci)) = (rows.as_interval(), cols.as_interval()) {
        let value = det_moh(ri.lo(), ci.lo(), d)?;
        return Ok(report(rows, cols, value, Method::Moh, pi(rows, cols)?));
    }
    if let Some(ri) = rows.as_interval() {
        let value = det_rows_interval(ri.lo(), d, cols)?;
        return Ok(report(
            rows,
            cols,
            value,
            Method::RowsInterval,
            pi(rows, cols)?,
        ));
    }
    if let Some(ci) = cols.as_interval() {
        let value = det_cols_interval(rows, ci.lo())?;
        return Ok(report(
            rows,
            cols,
            value,
            Method::ColsInterval,
            pi(rows, cols)?,
        ));
    }
    // The punctured closed forms are shadowed here: their interval side is
    // always caught by one of the two branches above. They stay reachable
    // through an explicit method request.
    let terms = level_term_count(rows);
    if terms <= u128::from(*budget) {
        *budget -= terms as u64;
        let p = pi(rows, cols)?;
        let sum = expansion_sum(rows, cols, budget)?;
        let value = rat_times_int(&p, &sum);
        return Ok(report(rows, cols, value, Method::SizeReduction, p));
    }
    let value = oracle::det_submatrix(rows, cols)?;
    Ok(report(rows, cols, value, Method::Oracle, ExactRat::one()))
}

fn det_explicit(rows: &IndexSet, cols: &IndexSet, method: Method, cap: u64) -> Result<EvalReport> {
    let d = rows.len();
    match method {
        Method::Oracle => {
            let value = oracle::det_submatrix(rows, cols)?;
            Ok(report(rows, cols, value, method, ExactRat::one()))
        }
        Method::ZeroRule => {
            if cols.leq(rows)? {
                return Err(Error::MethodInapplicable {
                    method: "zero_rule",
                    reason: "cols are componentwise <= rows, so the determinant is positive",
                });
            }
            Ok(report(
                rows,
                cols,
                ExactInt::zero(),
                method,
                ExactRat::one(),
            ))
        }
        Method::IdentityRule => {
            if rows != cols {
                return Err(Error::MethodInapplicable {
                    method: "identity_rule",
                    reason: "rows and cols differ",
                });
            }
            Ok(report(rows, cols, ExactInt::one(), method, ExactRat::one()))
        }
        Method::Moh => match (rows.as_interval(), cols.as_interval()) {
            (Some(ri), Some(ci)) => {
                let value = det_moh(ri.lo(), ci.lo(), d)?;
                Ok(report(rows, cols, value, method, pi(rows, cols)?))
            }
            _ => Err(Error::MethodInapplicable {
                method: "moh",
                reason: "rows and cols must both be intervals",
            }),
        },
        Method::RowsInterval => match rows.as_interval() {
            Some(ri) => {
                let value = det_rows_interval(ri.lo(), d, cols)?;
                Ok(report(rows, cols, value, method, pi(rows, cols)?))
            }
            None => Err(Error::MethodInapplicable {
                method: "rows_interval",
                reason: "rows must be an interval",
            }),
        },
        Method::ColsInterval => match cols.as_interval() {
            Some(ci) => {
                let value = det_cols_interval(rows, ci.lo())?;
                Ok(report(rows, cols, value, method, pi(rows, cols)?))
            }
            None => Err(Error::MethodInapplicable {
                method: "cols_interval",
                reason: "cols must be an interval",
            }),
        },
        Method::RowsAlmostCols => {
            let ri = rows.as_interval().ok_or(Error::MethodInapplicable {
                method: "rows_almost_cols",
                reason: "rows must be an interval",
            })?;
            // rows [i, i+d-2] and cols [j, j+d-1] minus one element; an
            // interval column set is a boundary puncture, read at whichever
            // end keeps j <= i-1
            let (j, r) = if let Some(ci) = cols.as_punctured_interval() {
                (ci.lo(), (ci.punctured_at().unwrap() - ci.lo() + 1) as usize)
            } else if let Some(ci) = cols.as_interval() {
                if ci.lo() < ri.lo() {
                    (ci.lo(), d + 1)
                } else {
                    (ci.lo() - 1, 1)
                }
            } else {
                return Err(Error::MethodInapplicable {
                    method: "rows_almost_cols",
                    reason: "cols must be an interval missing at most one element",
                });
            };
            let value = det_rows_interval_cols_punctured(ri.lo(), d + 1, j, r)?;
            Ok(report(rows, cols, value, method, pi(rows, cols)?))
        }
        Method::AlmostRowsCols => {
            let ci = cols.as_interval().ok_or(Error::MethodInapplicable {
                method: "almost_rows_cols",
                reason: "cols must be an interval",
            })?;
            let (i, r) = if let Some(ri) = rows.as_punctured_interval() {
                (ri.lo(), (ri.punctured_at().unwrap() - ri.lo() + 1) as usize)
            } else if let Some(ri) = rows.as_interval() {
                (ri.lo(), d + 1)
            } else {
                return Err(Error::MethodInapplicable {
                    method: "almost_rows_cols",
                    reason: "rows must be an interval missing at most one element",
                });
            };
            let value = det_rows_punctured_cols_interval(i, d + 1, ci.lo(), r)?;
            Ok(report(rows, cols, value, method, pi(rows, cols)?))
        }
        Method::ReduceShift => {
            let (p, sub_rows, sub_cols) = reduce_shift(rows, cols)?;
            let mut budget = cap;
            let sub = det_auto(&sub_rows, &sub_cols, &mut budget)?;
            let value = rat_times_int(&p, &sub.value);
            Ok(report(rows, cols, value, method, p))
        }
        Method::SizeReduction => {
            if !cols.leq(rows)? {
                return Err(Error::NotDominated);
            }
            if d < 2 {
                return Err(Error::MethodInapplicable {
                    method: "size_reduction",
                    reason: "needs size at least 2",
                });
            }
            let terms = level_term_count(rows);
            if terms > u128::from(cap) {
                return Err(Error::TermCapExceeded { terms, cap });
            }
            let mut budget = cap - terms as u64;
            let p = pi(rows, cols)?;
            let sum = expansion_sum(rows, cols, &mut budget)?;
            let value = rat_times_int(&p, &sum);
            Ok(report(rows, cols, value, method, p))
        }
    }
}

/// Number of first-level expansion terms: the product of the row gaps.
fn level_term_count(rows: &IndexSet) -> u128 {
    rows.elems()
        .windows(2)
        .map(|w| (w[1] - w[0]) as u128)
        .fold(1u128, u128::saturating_mul)
}

/// Walk the Cartesian product of gap ranges without materializing it,
/// evaluating each smaller determinant through the dispatcher.
fn expansion_sum(rows: &IndexSet, cols: &IndexSet, budget: &mut u64) -> Result<ExactInt> {
    let e = rows.elems();
    let j1 = cols.min().expect("non-empty");
    let los: Vec<i64> = e[..e.len() - 1].iter().map(|&x| x - j1).collect();
    let his: Vec<i64> = e[1..].iter().map(|&x| x - j1 - 1).collect();
    let sub_cols = IndexSet::new(
        cols.elems()[1..]
            .iter()
            .map(|&j| j - j1 - 1)
            .collect::<Vec<_>>(),
    )
    .expect("shifted column tail stays strictly increasing");
    let mut cur = los.clone();
    let mut sum = ExactInt::zero();
    loop {
        let sub_rows =
            IndexSet::new(cur.clone()).expect("expansion tuples are strictly increasing");
        sum += det_auto(&sub_rows, &sub_cols, budget)?.value;
        let mut s = cur.len() - 1;
        loop {
            if cur[s] < his[s] {
                cur[s] += 1;
                break;
            }
            cur[s] = los[s];
            if s == 0 {
                return Ok(sum);
            }
            s -= 1;
        }
    }
}

/// Pull out `pi^I_J` and shift both sets so the columns start at zero:
/// `b^I_J = pi^I_J * b^{I-j_1}_{J-j_1}` whenever `J <= I`.
pub fn reduce_shift(rows: &IndexSet, cols: &IndexSet) -> Result<(ExactRat, IndexSet, IndexSet)> {
    check_pair(rows, cols)?;
    if !cols.leq(rows)? {
        return Err(Error::NotDominated);
    }
    let j1 = cols.min().expect("non-empty");
    Ok((pi(rows, cols)?, rows.shift_down(j1)?, cols.shift_down(j1)?))
}

/// Materialized size-reduction expansion under the default cap.
pub fn size_reduction_expand(rows: &IndexSet, cols: &IndexSet) -> Result<Vec<ExpansionTerm>> {
    size_reduction_expand_capped(rows, cols, DEFAULT_TERM_CAP)
}

/// One term per tuple in `[i_1-j_1, i_2-j_1-1] x ... x [i_{d-1}-j_1,
/// i_d-j_1-1]`, columns `{j_2-j_1-1, ..., j_d-j_1-1}`; then
/// `b^I_J = pi^I_J * sum of term determinants`.
pub fn size_reduction_expand_capped(
    rows: &IndexSet,
    cols: &IndexSet,
    cap: u64,
) -> Result<Vec<ExpansionTerm>> {
    check_pair(rows, cols)?;
    if !cols.leq(rows)? {
        return Err(Error::NotDominated);
    }
    let d = rows.len();
    if d < 2 {
        return Err(Error::OutOfRange {
            name: "d",
            value: d as i64,
            lo: 2,
            hi: i64::MAX,
        });
    }
    let terms = level_term_count(rows);
    if terms > u128::from(cap) {
        return Err(Error::TermCapExceeded { terms, cap });
    }
    let e = rows.elems();
    let j1 = cols.min().expect("non-empty");
    let los: Vec<i64> = e[..d - 1].iter().map(|&x| x - j1).collect();
    let his: Vec<i64> = e[1..].iter().map(|&x| x - j1 - 1).collect();
    let sub_cols = IndexSet::new(
        cols.elems()[1..]
            .iter()
            .map(|&j| j - j1 - 1)
            .collect::<Vec<_>>(),
    )
    .expect("shifted column tail stays strictly increasing");
    let mut out = Vec::with_capacity(terms as usize);
    let mut cur = los.clone();
    loop {
        out.push(ExpansionTerm {
            rows: IndexSet::new(cur.clone()).expect("expansion tuples are strictly increasing"),
            cols: sub_cols.clone(),
        });
        let mut s = cur.len() - 1;
        loop {
            if cur[s] < his[s] {
                cur[s] += 1;
                break;
            }
            cur[s] = los[s];
            if s == 0 {
                return Ok(out);
            }
            s -= 1;
        }
    }
}

/// `prod_{k<l} (i_l - i_k)` over the set's elements.
pub fn vandermonde(rows: &IndexSet) -> ExactInt {
    let e = rows.elems();
    let mut acc = ExactInt::one();
    for l in 1..e.len() {
        for k in 0..l {
            acc *= ExactInt::from(e[l] - e[k]);
        }
    }
    acc
}

/// `prod_{k=0..m} k!`.
pub fn superfactorial(m: usize) -> ExactInt {
    let mut acc = ExactInt::one();
    let mut fact = ExactInt::one();
    for k in 1..=m {
        fact *= ExactInt::from(k as i64);
        acc *= &fact;
    }
    acc
}

/// Consecutive columns `J = [j, j+d-1]`:
/// `b^I_J = pi^I_J * Vandermonde(I) / (0! 1! ... (d-1)!)`.
/// `J <= I` is not required; the zero case rides on `pi = 0`.
pub fn det_cols_interval(rows: &IndexSet, j: i64) -> Result<ExactInt> {
    if rows.is_empty() {
        return Err(Error::EmptySet);
    }
    if j < 0 {
        return Err(Error::OutOfRange {
            name: "j",
            value: j,
            lo: 0,
            hi: i64::MAX,
        });
    }
    let d = rows.len();
    let cols = IndexSet::interval(j, j + d as i64 - 1)?;
    let p = pi(rows, &cols)?;
    let quotient = exact_div(&vandermonde(rows), &superfactorial(d - 1));
    Ok(rat_times_int(&p, &quotient))
}

/// Consecutive rows `I = [i, i+d-1]`: the product of `pi` over the
/// derived-pair chain, levels 0 through d-1. Requires `J <= I`.
pub fn det_rows_interval(i: i64, d: usize, cols: &IndexSet) -> Result<ExactInt> {
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
    let rows = IntervalSpec::new(i, i + d as i64 - 1)?;
    let chain = derived_chain(&rows, cols)?;
    let mut acc = ExactRat::one();
    for pair in &chain {
        acc *= pi(&pair.rows, &pair.cols)?;
    }
    Ok(rat_to_int(&acc))
}

/// Both sets consecutive: `b^{[i,i+d-1]}_{[j,j+d-1]} = pi^I_J`, which is a
/// natural number here; zero when `i < j`.
pub fn det_moh(i: i64, j: i64, d: usize) -> Result<ExactInt> {
    if i < 0 || j < 0 {
        return Err(Error::OutOfRange {
            name: if i < 0 { "i" } else { "j" },
            value: if i < 0 { i } else { j },
            lo: 0,
            hi: i64::MAX,
        });
    }
    if d == 0 {
        return Err(Error::EmptySet);
    }
    if i < j {
        return Ok(ExactInt::zero());
    }
    let mut numer = ExactInt::one();
    let mut denom = ExactInt::one();
    for t in 0..d as i64 {
        numer *= binom_unchecked(i + t, j);
        denom *= binom_unchecked(j + t, j);
    }
    Ok(exact_div(&numer, &denom))
}

/// `b^{[i,i+d-2]}_{[0,d-1] minus {r-1}} = C(i+d-r-1, d-r)` for `i >= 1`,
/// `d >= 2`, `1 <= r <= d`.
pub fn det_punctured_prefix(i: i64, d: usize, r: usize) -> Result<ExactInt> {
    if d < 2 {
        return Err(Error::OutOfRange {
            name: "d",
            value: d as i64,
            lo: 2,
            hi: i64::MAX,
        });
    }
    if i < 1 {
        return Err(Error::OutOfRange {
            name: "i",
            value: i,
            lo: 1,
            hi: i64::MAX,
        });
    }
    if r < 1 || r > d {
        return Err(Error::OutOfRange {
            name: "r",
            value: r as i64,
            lo: 1,
            hi: d as i64,
        });
    }
    Ok(binom_unchecked(
        i + d as i64 - r as i64 - 1,
        d as i64 - r as i64,
    ))
}

/// Consecutive rows `[i, i+d-2]`, almost consecutive columns
/// `[j, j+d-1] minus {j+r-1}`, `j <= i-1`: the interior punctures give
/// `pi * C(i+d-j-r-1, d-r)`; boundary punctures leave an interval and
/// reduce to `pi` alone.
pub fn det_rows_interval_cols_punctured(i: i64, d: usize, j: i64, r: usize) -> Result<ExactInt> {
    if d < 2 {
        return Err(Error::OutOfRange {
            name: "d",
            value: d as i64,
            lo: 2,
            hi: i64::MAX,
        });
    }
    if j < 0 || j > i - 1 {
        return Err(Error::OutOfRange {
            name: "j",
            value: j,
            lo: 0,
            hi: i - 1,
        });
    }
    if r < 1 || r > d {
        return Err(Error::OutOfRange {
            name: "r",
            value: r as i64,
            lo: 1,
            hi: d as i64,
        });
    }
    let rows = IndexSet::interval(i, i + d as i64 - 2)?;
    let cols = IntervalSpec::punctured(j, j + d as i64 - 1, j + r as i64 - 1)?.materialize();
    let p = pi(&rows, &cols)?;
    if r == 1 || r == d {
        return Ok(rat_to_int(&p));
    }
    let factor = binom_unchecked(i + d as i64 - j - r as i64 - 1, d as i64 - r as i64);
    Ok(rat_times_int(&p, &factor))
}

/// Almost consecutive rows `[i, i+d-1] minus {i+r-1}`, consecutive columns
/// `[j, j+d-2]`, `j <= i`: `pi * C(d-1, r-1)`.
pub fn det_rows_punctured_cols_interval(i: i64, d: usize, j: i64, r: usize) -> Result<ExactInt> {
    if d < 2 {
        return Err(Error::OutOfRange {
            name: "d",
            value: d as i64,
            lo: 2,
            hi: i64::MAX,
        });
    }
    if j < 0 || j > i {
        return Err(Error::OutOfRange {
            name: "j",
            value: j,
            lo: 0,
            hi: i,
        });
    }
    if r < 1 || r > d {
        return Err(Error::OutOfRange {
            name: "r",
            value: r as i64,
            lo: 1,
            hi: d as i64,
        });
    }
    let rows = IntervalSpec::punctured(i, i + d as i64 - 1, i + r as i64 - 1)?.materialize();
    let cols = IndexSet::interval(j, j + d as i64 - 2)?;
    let p = pi(&rows, &cols)?;
    let factor = binom_unchecked(d as i64 - 1, r as i64 - 1);
    Ok(rat_times_int(&p, &factor))
}

/// The two smaller (rows, cols) pairs whose determinants sum to
/// `b^{[i,i+d-1] minus {i+r-1}}_J` when `2 <= r <= d-1`, or the single pair
/// for the boundary punctures `r = 1` and `r = d`. Requires `d >= 3`,
/// `j_1 = 0`, and `J <= [i, i+d-2]`.
pub fn binomial_sum_split(
    i: i64,
    d: usize,
    cols: &IndexSet,
    r: usize,
) -> Result<Vec<(IndexSet, IndexSet)>> {
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
    if r < 1 || r > d {
        return Err(Error::OutOfRange {
            name: "r",
            value: r as i64,
            lo: 1,
            hi: d as i64,
        });
    }
    if cols.len() != d - 1 {
        return Err(Error::SizeMismatch {
            left: cols.len(),
            right: d - 1,
        });
    }
    if cols.min() != Some(0) {
        return Err(Error::OutOfRange {
            name: "j_1",
            value: cols.min().unwrap_or(-1),
            lo: 0,
            hi: 0,
        });
    }
    let upper = IndexSet::interval(i, i + d as i64 - 2)?;
    if !cols.leq(&upper)? {
        return Err(Error::NotDominated);
    }
    let sub_cols = IndexSet::new(cols.elems()[1..].iter().map(|&j| j - 1).collect::<Vec<_>>())
        .expect("tail of a strictly increasing set shifted down stays valid");
    let pairs = if r == 1 {
        vec![(IndexSet::interval(i + 1, i + d as i64 - 2)?, sub_cols)]
    } else if r == d {
        vec![(IndexSet::interval(i, i + d as i64 - 3)?, sub_cols)]
    } else {
        let hi = i + d as i64 - 2;
        let a = IntervalSpec::punctured(i, hi, i + r as i64 - 1)?.materialize();
        let b = IntervalSpec::punctured(i, hi, i + r as i64 - 2)?.materialize();
        vec![(a, sub_cols.clone()), (b, sub_cols)]
    };
    Ok(pairs)
}

/// Number of nested gap-tuple chains over `I`, counted by direct
/// enumeration; equals `Vandermonde(I) / superfactorial(d-1)`.
pub fn counting_identity_lhs(rows: &IndexSet) -> Result<ExactInt> {
    counting_identity_lhs_capped(rows, DEFAULT_TERM_CAP)
}

/// The cap bounds the tuple count at every nesting level.
pub fn counting_identity_lhs_capped(rows: &IndexSet, cap: u64) -> Result<ExactInt> {
    if rows.is_empty() {
        return Err(Error::EmptySet);
    }
    count_chains(rows.elems(), cap)
}

fn count_chains(elems: &[i64], cap: u64) -> Result<ExactInt> {
    if elems.len() == 1 {
        return Ok(ExactInt::one());
    }
    let level: u128 = elems
        .windows(2)
        .map(|w| (w[1] - w[0]) as u128)
        .fold(1u128, u128::saturating_mul);
    if level > u128::from(cap) {
        return Err(Error::TermCapExceeded { terms: level, cap });
    }
    let los: Vec<i64> = elems[..elems.len() - 1].to_vec();
    let his: Vec<i64> = elems[1..].iter().map(|&x| x - 1).collect();
    let mut cur = los.clone();
    let mut total = ExactInt::zero();
    loop {
        total += count_chains(&cur, cap)?;
        let mut s = cur.len() - 1;
        loop {
            if cur[s] < his[s] {
                cur[s] += 1;
                break;
            }
            cur[s] = los[s];
            if s == 0 {
                return Ok(total);
            }
            s -= 1;
        }
    }
}

fn exact_div(a: &ExactInt, b: &ExactInt) -> ExactInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "formula division must be exact: {a} / {b}");
    q
}

/// `p * s` where the product is known to be an integer.
fn rat_times_int(p: &ExactRat, s: &ExactInt) -> ExactInt {
    exact_div(&(p.numer() * s), p.denom())
}

/// A reduced rational known to be an integer.
fn rat_to_int(p: &ExactRat) -> ExactInt {
    exact_div(p.numer(), p.denom())
}
