//! Index sets, intervals, punctured intervals, the componentwise order
//! `J <= I`, shift/reflection operators, and the derived-pair chain used by
//! the consecutive-rows formula.
//!
//! Rows and columns of the binomial matrix are counted from zero, and all
//! values here are immutable after construction.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A strictly increasing, non-empty list of non-negative matrix indices.
///
/// The empty set is representable (an interval `[k,l]` with `k > l` denotes
/// it) but can only be obtained by materializing such an interval; the list
/// constructor rejects empty input.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    elems: Vec<i64>,
}

impl IndexSet {
    /// Validating constructor. The input must already be strictly increasing;
    /// a transcription error is reported, never silently reordered.
    pub fn new(values: impl Into<Vec<i64>>) -> Result<Self> {
        let elems = values.into();
        if elems.is_empty() {
            return Err(Error::EmptySet);
        }
        for (position, &value) in elems.iter().enumerate() {
            if value < 0 {
                return Err(Error::NegativeIndex { position, value });
            }
            if position > 0 {
                let previous = elems[position - 1];
                if value == previous {
                    return Err(Error::DuplicateIndex { position, value });
                }
                if value < previous {
                    return Err(Error::NotIncreasing {
                        position,
                        value,
                        previous,
                    });
                }
            }
        }
        Ok(IndexSet { elems })
    }

    pub fn singleton(value: i64) -> Result<Self> {
        IndexSet::new(vec![value])
    }

    /// The contiguous set `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn interval(lo: i64, hi: i64) -> Result<Self> {
        Ok(IntervalSpec::new(lo, hi)?.materialize())
    }

    fn empty() -> Self {
        IndexSet { elems: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[i64] {
        &self.elems
    }

    pub fn min(&self) -> Option<i64> {
        self.elems.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.elems.last().copied()
    }

    pub fn contains(&self, value: i64) -> bool {
        self.elems.binary_search(&value).is_ok()
    }

    /// Componentwise order: `self[t] <= other[t]` for every `t`.
    /// Only defined between sets of equal size.
    pub fn leq(&self, other: &IndexSet) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.elems.iter().zip(&other.elems).all(|(j, i)| j <= i))
    }

    /// `S - p`, defined for `0 <= p <= min(S)`.
    pub fn shift_down(&self, p: i64) -> Result<Self> {
        if p < 0 {
            return Err(Error::OutOfRange {
                name: "shift",
                value: p,
                lo: 0,
                hi: i64::MAX,
            });
        }
        if let Some(min) = self.min() {
            if p > min {
                return Err(Error::ShiftTooLarge { shift: p, min });
            }
        }
        Ok(IndexSet {
            elems: self.elems.iter().map(|&e| e - p).collect(),
        })
    }

    /// `S + p` for `p >= 0`.
    pub fn shift_up(&self, p: i64) -> Result<Self> {
        if p < 0 {
            return Err(Error::OutOfRange {
                name: "shift",
                value: p,
                lo: 0,
                hi: i64::MAX,
            });
        }
        Ok(IndexSet {
            elems: self.elems.iter().map(|&e| e + p).collect(),
        })
    }

    /// `q - S = {q - s : s in S}`, re-sorted increasing; needs `q >= max(S)`.
    pub fn reflect(&self, q: i64) -> Result<Self> {
        if let Some(max) = self.max() {
            if q < max {
                return Err(Error::ReflectTooSmall { point: q, max });
            }
        }
        Ok(IndexSet {
            elems: self.elems.iter().rev().map(|&e| q - e).collect(),
        })
    }

    /// The set with one element removed; the element must be present.
    pub fn remove(&self, value: i64) -> Result<Self> {
        match self.elems.binary_search(&value) {
            Ok(pos) => {
                let mut elems = self.elems.clone();
                elems.remove(pos);
                Ok(IndexSet { elems })
            }
            Err(_) => Err(Error::MissingElement { value }),
        }
    }

    pub fn is_interval(&self) -> bool {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => hi - lo + 1 == self.len() as i64,
            _ => false,
        }
    }

    /// Some(spec) iff the set is a non-empty contiguous interval.
    pub fn as_interval(&self) -> Option<IntervalSpec> {
        if self.is_interval() {
            Some(IntervalSpec {
                lo: self.elems[0],
                hi: self.elems[self.len() - 1],
                punctured_at: None,
            })
        } else {
            None
        }
    }

    /// Some(spec) iff the set is an interval missing exactly one interior
    /// element. Boundary punctures collapse to plain intervals and are not
    /// reported here.
    pub fn as_punctured_interval(&self) -> Option<IntervalSpec> {
        let (lo, hi) = (self.min()?, self.max()?);
        if hi - lo != self.len() as i64 {
            return None;
        }
        let hole = self
            .elems
            .windows(2)
            .find(|w| w[1] - w[0] == 2)
            .map(|w| w[0] + 1)?;
        Some(IntervalSpec {
            lo,
            hi,
            punctured_at: Some(hole),
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elems.iter().copied()
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Canonical grammar form: comma-separated list, e.g. `0,3,5,7`.
impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, e) in self.elems.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// A contiguous range `[lo, hi]` (inclusive), optionally with one element
/// removed. `lo > hi` denotes the empty set and only unpunctured specs may
/// be empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalSpec {
    lo: i64,
    hi: i64,
    punctured_at: Option<i64>,
}

impl IntervalSpec {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo < 0 {
            return Err(Error::NegativeIndex {
                position: 0,
                value: lo,
            });
        }
        if hi < 0 {
            return Err(Error::NegativeIndex {
                position: 1,
                value: hi,
            });
        }
        Ok(IntervalSpec {
            lo,
            hi,
            punctured_at: None,
        })
    }

    pub fn punctured(lo: i64, hi: i64, at: i64) -> Result<Self> {
        if lo < 0 {
            return Err(Error::NegativeIndex {
                position: 0,
                value: lo,
            });
        }
        if hi < lo {
            return Err(Error::EmptySet);
        }
        if at < lo || at > hi {
            return Err(Error::OutOfRange {
                name: "punctured_at",
                value: at,
                lo,
                hi,
            });
        }
        Ok(IntervalSpec {
            lo,
            hi,
            punctured_at: Some(at),
        })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn punctured_at(&self) -> Option<i64> {
        self.punctured_at
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo + 1) as usize - usize::from(self.punctured_at.is_some())
        }
    }

    /// Lossless round-trip partner of [`IndexSet::as_interval`] /
    /// [`IndexSet::as_punctured_interval`].
    pub fn from_set(set: &IndexSet) -> Option<Self> {
        set.as_interval().or_else(|| set.as_punctured_interval())
    }

    pub fn materialize(&self) -> IndexSet {
        if self.is_empty() {
            return IndexSet::empty();
        }
        IndexSet {
            elems: (self.lo..=self.hi)
                .filter(|&e| Some(e) != self.punctured_at)
                .collect(),
        }
    }
}

impl fmt::Display for IntervalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)?;
        if let Some(at) = self.punctured_at {
            write!(f, "/{at}")?;
        }
        Ok(())
    }
}

/// One level of the derived-pair chain. Rows stay a contiguous interval at
/// every level; level 0 is the original pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedPair {
    pub level: usize,
    pub rows: IndexSet,
    pub cols: IndexSet,
}

/// Level-`k` pair for rows `[i, i+d-1]` and columns `{j_1, ..., j_d}`:
/// rows become `[i+k-1, i+d-2] - j_k` and columns
/// `{j_{k+1}, ..., j_d} - j_k - 1` (1-based `k`, here `level`).
pub fn derived_pair(rows: &IntervalSpec, cols: &IndexSet, level: usize) -> Result<DerivedPair> {
    if rows.punctured_at().is_some() {
        return Err(Error::NotInterval);
    }
    if rows.is_empty() {
        return Err(Error::EmptySet);
    }
    let d = rows.len();
    let full = rows.materialize();
    if cols.len() != d {
        return Err(Error::SizeMismatch {
            left: d,
            right: cols.len(),
        });
    }
    if !cols.leq(&full)? {
        return Err(Error::NotDominated);
    }
    if level > d - 1 {
        return Err(Error::OutOfRange {
            name: "level",
            value: level as i64,
            lo: 0,
            hi: d as i64 - 1,
        });
    }
    if level == 0 {
        return Ok(DerivedPair {
            level: 0,
            rows: full,
            cols: cols.clone(),
        });
    }
    let i = rows.lo();
    let jk = cols.elems()[level - 1];
    let new_rows =
        IntervalSpec::new(i + level as i64 - 1 - jk, i + d as i64 - 2 - jk)?.materialize();
    let new_cols = IndexSet::new(
        cols.elems()[level..]
            .iter()
            .map(|&j| j - jk - 1)
            .collect::<Vec<_>>(),
    )
    .expect("tail of a strictly increasing set stays strictly increasing");
    debug_assert!(new_cols.leq(&new_rows).unwrap_or(false));
    Ok(DerivedPair {
        level,
        rows: new_rows,
        cols: new_cols,
    })
}

/// All levels `0..=d-1` of the derived-pair chain.
pub fn derived_chain(rows: &IntervalSpec, cols: &IndexSet) -> Result<Vec<DerivedPair>> {
    (0..cols.len())
        .map(|level| derived_pair(rows, cols, level))
        .collect()
}

// --- text grammar ---------------------------------------------------------
//
//   set       := list | interval | punctured
//   list      := int ("," int)*
//   interval  := int ".." int
//   punctured := interval "/" int
//
// Whitespace is forbidden; errors carry the byte offset.

impl FromStr for IndexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_set(s)
    }
}

fn parse_set(s: &str) -> Result<IndexSet> {
    let b = s.as_bytes();
    let (first, mut pos) = parse_int(b, 0)?;
    if pos + 1 < b.len() && &b[pos..pos + 2] == b".." {
        pos += 2;
        let (hi, p) = parse_int(b, pos)?;
        pos = p;
        if pos < b.len() && b[pos] == b'/' {
            pos += 1;
            let at_offset = pos;
            let (at, p) = parse_int(b, pos)?;
            pos = p;
            expect_end(b, pos)?;
            if first > hi {
                return Err(Error::Parse {
                    offset: at_offset,
                    message: "cannot puncture an empty interval".into(),
                });
            }
            if at < first || at > hi {
                return Err(Error::Parse {
                    offset: at_offset,
                    message: format!("puncture {at} lies outside {first}..{hi}"),
                });
            }
            return Ok(IntervalSpec::punctured(first, hi, at)?.materialize());
        }
        expect_end(b, pos)?;
        return Ok(IntervalSpec::new(first, hi)?.materialize());
    }
    let mut values = vec![first];
    while pos < b.len() {
        if b[pos] != b',' {
            return Err(Error::Parse {
                offset: pos,
                message: format!("expected ',' or end of input, found '{}'", b[pos] as char),
            });
        }
        pos += 1;
        let (v, p) = parse_int(b, pos)?;
        pos = p;
        values.push(v);
    }
    IndexSet::new(values)
}

fn parse_int(b: &[u8], start: usize) -> Result<(i64, usize)> {
    if start >= b.len() {
        return Err(Error::Parse {
            offset: start,
            message: "expected a digit, found end of input".into(),
        });
    }
    if !b[start].is_ascii_digit() {
        return Err(Error::Parse {
            offset: start,
            message: format!("expected a digit, found '{}'", b[start] as char),
        });
    }
    let mut pos = start;
    let mut value: i64 = 0;
    while pos < b.len() && b[pos].is_ascii_digit() {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(i64::from(b[pos] - b'0')))
            .ok_or(Error::Parse {
                offset: start,
                message: "number too large".into(),
            })?;
        pos += 1;
    }
    Ok((value, pos))
}

fn expect_end(b: &[u8], pos: usize) -> Result<()> {
    if pos != b.len() {
        return Err(Error::Parse {
            offset: pos,
            message: format!("unexpected trailing '{}'", b[pos] as char),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[i64]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn constructor_validates() {
        assert_eq!(set(&[0, 3, 5, 7]).elems(), &[0, 3, 5, 7]);
        assert_eq!(
            IndexSet::new(vec![3, 3]),
            Err(Error::DuplicateIndex {
                position: 1,
                value: 3
            })
        );
        assert_eq!(
            IndexSet::new(vec![2, 1]),
            Err(Error::NotIncreasing {
                position: 1,
                value: 1,
                previous: 2
            })
        );
        assert_eq!(
            IndexSet::new(vec![0, -1]),
            Err(Error::NegativeIndex {
                position: 1,
                value: -1
            })
        );
        assert_eq!(IndexSet::new(Vec::new()), Err(Error::EmptySet));
    }

    #[test]
    fn leq_examples() {
        let i = set(&[3, 5, 7, 8]);
        let j = set(&[0, 3, 5, 7]);
        assert!(j.leq(&i).unwrap());
        assert!(i.leq(&i).unwrap());
        assert!(!set(&[2, 3]).leq(&set(&[1, 4])).unwrap());
        assert_eq!(
            set(&[0, 2]).leq(&set(&[1])),
            Err(Error::SizeMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn shift_down_examples() {
        assert_eq!(
            set(&[3, 5, 7, 8]).shift_down(3).unwrap(),
            set(&[0, 2, 4, 5])
        );
        assert_eq!(set(&[0, 3]).shift_down(0).unwrap(), set(&[0, 3]));
        assert_eq!(
            set(&[1, 2]).shift_down(2),
            Err(Error::ShiftTooLarge { shift: 2, min: 1 })
        );
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(set(&[0, 3, 5, 7]).reflect(8).unwrap(), set(&[1, 3, 5, 8]));
        assert_eq!(set(&[0]).reflect(0).unwrap(), set(&[0]));
        assert_eq!(
            set(&[2, 5]).reflect(4),
            Err(Error::ReflectTooSmall { point: 4, max: 5 })
        );
    }

    #[test]
    fn interval_and_puncture_detection() {
        assert!(set(&[2, 3, 4]).is_interval());
        assert!(!set(&[2, 4]).is_interval());
        let p = set(&[2, 3, 5, 6]).as_punctured_interval().unwrap();
        assert_eq!((p.lo(), p.hi(), p.punctured_at()), (2, 6, Some(4)));
        assert!(set(&[2, 3, 4]).as_punctured_interval().is_none());
        assert!(set(&[2, 3, 6]).as_punctured_interval().is_none());
        assert!(IntervalSpec::new(5, 3).unwrap().materialize().is_empty());
        assert_eq!(
            IntervalSpec::punctured(0, 4, 2).unwrap().materialize(),
            set(&[0, 1, 3, 4])
        );
    }

    #[test]
    fn interval_spec_round_trip() {
        for s in [set(&[4, 5, 6]), set(&[1, 2, 4, 5]), set(&[7])] {
            let spec = IntervalSpec::from_set(&s).unwrap();
            assert_eq!(spec.materialize(), s);
        }
        assert!(IntervalSpec::from_set(&set(&[0, 2, 4])).is_none());
    }

    #[test]
    fn derived_pair_levels() {
        // rows [2,4], cols {0,1,3}
        let rows = IntervalSpec::new(2, 4).unwrap();
        let cols = set(&[0, 1, 3]);
        let p0 = derived_pair(&rows, &cols, 0).unwrap();
        assert_eq!(p0.rows, set(&[2, 3, 4]));
        assert_eq!(p0.cols, cols);
        let p1 = derived_pair(&rows, &cols, 1).unwrap();
        assert_eq!(p1.rows, set(&[2, 3]));
        assert_eq!(p1.cols, set(&[0, 2]));
        let p2 = derived_pair(&rows, &cols, 2).unwrap();
        assert_eq!(p2.rows, set(&[2]));
        assert_eq!(p2.cols, set(&[1]));

        assert_eq!(
            derived_pair(&rows, &cols, 3),
            Err(Error::OutOfRange {
                name: "level",
                value: 3,
                lo: 0,
                hi: 2
            })
        );
        assert_eq!(
            derived_pair(&rows, &set(&[0, 1, 5]), 1),
            Err(Error::NotDominated)
        );
    }

    #[test]
    fn derived_pair_interval_cols() {
        // interval cols [j, j+d-1] give [0, d-k-1] at every level k >= 1
        for (i, j, d) in [(3i64, 1i64, 4usize), (5, 0, 3), (7, 7, 5)] {
            let rows = IntervalSpec::new(i, i + d as i64 - 1).unwrap();
            let cols = IndexSet::interval(j, j + d as i64 - 1).unwrap();
            for k in 1..d {
                let p = derived_pair(&rows, &cols, k).unwrap();
                assert_eq!(
                    p.cols,
                    IndexSet::interval(0, d as i64 - k as i64 - 1).unwrap()
                );
            }
        }
    }

    #[test]
    fn parse_grammar() {
        assert_eq!("0,3,5,7".parse::<IndexSet>().unwrap(), set(&[0, 3, 5, 7]));
        assert_eq!("2..6".parse::<IndexSet>().unwrap(), set(&[2, 3, 4, 5, 6]));
        assert_eq!("2..6/4".parse::<IndexSet>().unwrap(), set(&[2, 3, 5, 6]));
        assert_eq!("9".parse::<IndexSet>().unwrap(), set(&[9]));
        assert!("5..3".parse::<IndexSet>().unwrap().is_empty());

        match "1, 2".parse::<IndexSet>() {
            Err(Error::Parse { offset: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match " 1".parse::<IndexSet>() {
            Err(Error::Parse { offset: 0, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match "1,,2".parse::<IndexSet>() {
            Err(Error::Parse { offset: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match "2..6/9".parse::<IndexSet>() {
            Err(Error::Parse { offset: 5, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match "1..2..3".parse::<IndexSet>() {
            Err(Error::Parse { offset: 4, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match "2,1".parse::<IndexSet>() {
            Err(Error::NotIncreasing { position: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["0,3,5,7", "2,3,4", "9"] {
            let parsed: IndexSet = s.parse().unwrap();
            assert_eq!(parsed.to_string(), s);
        }
    }

    // Random strictly increasing sets of a given size range.
    fn arb_set(max_len: usize, max_index: i64) -> impl Strategy<Value = IndexSet> {
        proptest::collection::btree_set(0..=max_index, 1..=max_len)
            .prop_map(|s| IndexSet::new(s.into_iter().collect::<Vec<_>>()).unwrap())
    }

    // Clamp raw draws into a strictly increasing set dominated by `upper`.
    // Works because any strictly increasing sequence has upper[t] >= t.
    fn chain_below(draws: &[i64], upper: &[i64]) -> Vec<i64> {
        let mut prev = -1i64;
        draws
            .iter()
            .zip(upper)
            .map(|(&v, &u)| {
                let v = v.max(prev + 1).min(u);
                prev = v;
                v
            })
            .collect()
    }

    fn ranges_below(upper: &[i64]) -> Vec<std::ops::RangeInclusive<i64>> {
        upper
            .iter()
            .enumerate()
            .map(|(t, &u)| (t as i64)..=u)
            .collect()
    }

    // A chain J <= I <= H of equal-size sets, built componentwise.
    fn arb_chain() -> impl Strategy<Value = (IndexSet, IndexSet, IndexSet)> {
        arb_set(6, 30)
            .prop_flat_map(|h| {
                let ranges = ranges_below(h.elems());
                (Just(h), ranges)
            })
            .prop_flat_map(|(h, draws)| {
                let i = IndexSet::new(chain_below(&draws, h.elems())).unwrap();
                let ranges = ranges_below(i.elems());
                (Just(h), Just(i), ranges)
            })
            .prop_map(|(h, i, draws)| {
                let j = IndexSet::new(chain_below(&draws, i.elems())).unwrap();
                (j, i, h)
            })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(s in arb_set(8, 50)) {
            let parsed: IndexSet = s.to_string().parse().unwrap();
            prop_assert_eq!(parsed, s.clone());
            // interval and punctured spellings parse back to the same set
            if let Some(spec) = IntervalSpec::from_set(&s) {
                let parsed: IndexSet = spec.to_string().parse().unwrap();
                prop_assert_eq!(parsed, s);
            }
        }

        #[test]
        fn reflect_is_an_involution(s in arb_set(8, 50), extra in 0i64..20) {
            let q = s.max().unwrap() + extra;
            prop_assert_eq!(s.reflect(q).unwrap().reflect(q).unwrap(), s);
        }

        #[test]
        fn leq_is_a_partial_order(chain in arb_chain()) {
            let (j, i, h) = chain;
            prop_assert!(j.leq(&i).unwrap());
            prop_assert!(i.leq(&h).unwrap());
            // transitivity
            prop_assert!(j.leq(&h).unwrap());
            // reflexivity
            prop_assert!(j.leq(&j).unwrap());
            // antisymmetry
            if i.leq(&j).unwrap() {
                prop_assert_eq!(&i, &j);
            }
        }

        #[test]
        fn derived_pair_composes(start in 0i64..10, d in 2usize..7, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let rows = IntervalSpec::new(start, start + d as i64 - 1).unwrap();
            let full = rows.materialize();
            let mut prev = -1i64;
            let cols = IndexSet::new(
                full.elems()
                    .iter()
                    .map(|&u| {
                        let v = rng.random_range((prev + 1)..=u);
                        prev = v;
                        v
                    })
                    .collect::<Vec<_>>(),
            ).unwrap();
            for k in 1..d - 1 {
                let level_k = derived_pair(&rows, &cols, k).unwrap();
                let spec_k = level_k.rows.as_interval().unwrap();
                let one_step = derived_pair(&spec_k, &level_k.cols, 1).unwrap();
                let direct = derived_pair(&rows, &cols, k + 1).unwrap();
                prop_assert_eq!(one_step.rows, direct.rows);
                prop_assert_eq!(one_step.cols, direct.cols);
            }
        }
    }
}
