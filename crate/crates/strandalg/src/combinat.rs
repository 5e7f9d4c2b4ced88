//! Subset and multiset posets over `{1..n}`.
//!
//! Objects of all algebras in this crate are indexed by `d`-element subsets
//! of `{1, .., n}` ordered componentwise. The interleaving predicate
//! [`interleaved`] selects which basis elements of `A(n,d)` survive, and
//! [`unit_diff`] selects the basis of the rank-graded dual model.

use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// A strictly increasing sequence of integers inside a fixed ambient range.
///
/// The standard form has elements in `[1, n]`. Setting `zero_based` admits
/// `0` as an element (ambient `{0, .., n}`); this variant is used for the
/// `(d+1)`-subsets that index standard resolutions and the rotation map.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IndexSet {
    n: u32,
    zero_based: bool,
    elems: Vec<u32>,
}

impl IndexSet {
    /// A `d`-subset of `{1, .., n}`. Elements must be strictly increasing.
    pub fn new(n: u32, elems: Vec<u32>) -> Result<Self> {
        Self::build(n, false, elems)
    }

    /// A subset of `{0, .., n}`; otherwise as [`IndexSet::new`].
    pub fn new_zero_based(n: u32, elems: Vec<u32>) -> Result<Self> {
        Self::build(n, true, elems)
    }

    fn build(n: u32, zero_based: bool, elems: Vec<u32>) -> Result<Self> {
        let lo = if zero_based { 0 } else { 1 };
        for (a, &x) in elems.iter().enumerate() {
            if x < lo || x > n {
                return Err(Error::InvalidIndexSet(format!(
                    "element {x} outside [{lo}, {n}]"
                )));
            }
            if a > 0 && elems[a - 1] >= x {
                return Err(Error::InvalidIndexSet(format!(
                    "elements not strictly increasing at position {a}"
                )));
            }
        }
        Ok(IndexSet { n, zero_based, elems })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> usize {
        self.elems.len()
    }

    pub fn is_zero_based(&self) -> bool {
        self.zero_based
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    fn assert_compatible(&self, other: &IndexSet) {
        assert_eq!(self.n, other.n, "index sets over different ambients");
        assert_eq!(self.d(), other.d(), "index sets of different sizes");
        assert_eq!(
            self.zero_based, other.zero_based,
            "index sets with different base conventions"
        );
    }

    /// Componentwise order: `I <= J` iff `i_a <= j_a` for all `a`.
    ///
    /// Panics if the two sets live over different ambients or sizes.
    pub fn leq(&self, other: &IndexSet) -> bool {
        self.assert_compatible(other);
        self.elems.iter().zip(&other.elems).all(|(i, j)| i <= j)
    }

    /// `rk(I) = sum_a (i_a - a)`: the poset rank, zero exactly on `{1,..,d}`.
    pub fn rank(&self) -> u64 {
        assert!(!self.zero_based, "rank is defined for 1-based sets");
        self.elems
            .iter()
            .enumerate()
            .map(|(a, &x)| u64::from(x) - (a as u64 + 1))
            .sum()
    }

    /// The complementary `(n-d)`-subset of `{1, .., n}`.
    pub fn complement(&self) -> IndexSet {
        assert!(!self.zero_based, "complement is defined for 1-based sets");
        let elems = (1..=self.n).filter(|x| !self.contains(*x)).collect();
        IndexSet { n: self.n, zero_based: false, elems }
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (a, x) in self.elems.iter().enumerate() {
            if a > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Colexicographic order (compare largest elements first), the canonical
/// enumeration and serialization order throughout the crate. Sets over
/// different ambients or of different sizes are ordered by those first so
/// that the order is total.
impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.zero_based, self.d())
            .cmp(&(other.n, other.zero_based, other.d()))
            .then_with(|| self.elems.iter().rev().cmp(other.elems.iter().rev()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All `d`-subsets of `{1, .., n}` in colexicographic order.
///
/// Empty for `d > n`; the single empty subset for `d = 0`.
pub fn enum_subsets(n: u32, d: usize) -> Vec<IndexSet> {
    colex_subsets(n, 1, d)
        .into_iter()
        .map(|elems| IndexSet { n, zero_based: false, elems })
        .collect()
}

/// All `d`-subsets of `{0, .., n}` in colexicographic order.
pub fn enum_subsets_zero_based(n: u32, d: usize) -> Vec<IndexSet> {
    colex_subsets(n, 0, d)
        .into_iter()
        .map(|elems| IndexSet { n, zero_based: true, elems })
        .collect()
}

/// Strictly increasing `d`-tuples from `[lo, hi]`, grouped by their maximum
/// ascending (colexicographic order).
fn colex_subsets(hi: u32, lo: u32, d: usize) -> Vec<Vec<u32>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let min_max = lo + d as u32 - 1;
    for m in min_max..=hi {
        for mut rest in colex_subsets(m.saturating_sub(1), lo, d - 1) {
            rest.push(m);
            out.push(rest);
        }
    }
    out
}

/// `I <= J` in the product order. Free-function form of [`IndexSet::leq`].
pub fn poset_leq(i: &IndexSet, j: &IndexSet) -> bool {
    i.leq(j)
}

/// Does `f_JI` survive in `A(n,d)`: `I <= J` and `j_a < i_{a+1}` for all
/// `a < d`.
pub fn interleaved(i: &IndexSet, j: &IndexSet) -> bool {
    if !i.leq(j) {
        return false;
    }
    let (iv, jv) = (i.elems(), j.elems());
    (0..iv.len().saturating_sub(1)).all(|a| jv[a] < iv[a + 1])
}

/// `0 <= j_a - i_a <= 1` for all `a`: the support of the rank-graded dual
/// basis.
pub fn unit_diff(i: &IndexSet, j: &IndexSet) -> bool {
    i.assert_compatible(j);
    i.elems()
        .iter()
        .zip(j.elems())
        .all(|(&ia, &ja)| ja >= ia && ja - ia <= 1)
}

/// A weakly increasing sequence in `[1, n]`: a `d`-element multiset.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultiIndexSet {
    n: u32,
    elems: Vec<u32>,
}

impl MultiIndexSet {
    pub fn new(n: u32, elems: Vec<u32>) -> Result<Self> {
        for (a, &x) in elems.iter().enumerate() {
            if x < 1 || x > n {
                return Err(Error::InvalidIndexSet(format!(
                    "element {x} outside [1, {n}]"
                )));
            }
            if a > 0 && elems[a - 1] > x {
                return Err(Error::InvalidIndexSet(format!(
                    "elements not weakly increasing at position {a}"
                )));
            }
        }
        Ok(MultiIndexSet { n, elems })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    /// Some element repeats.
    pub fn is_degenerate(&self) -> bool {
        self.elems.windows(2).any(|w| w[0] == w[1])
    }

    pub fn leq(&self, other: &MultiIndexSet) -> bool {
        assert_eq!(self.n, other.n, "multisets over different ambients");
        assert_eq!(self.d(), other.d(), "multisets of different sizes");
        self.elems.iter().zip(&other.elems).all(|(i, j)| i <= j)
    }

    /// View a strictly increasing multiset as an [`IndexSet`].
    pub fn as_index_set(&self) -> Option<IndexSet> {
        if self.is_degenerate() {
            None
        } else {
            Some(IndexSet { n: self.n, zero_based: false, elems: self.elems.clone() })
        }
    }
}

impl fmt::Debug for MultiIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (a, x) in self.elems.iter().enumerate() {
            if a > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl Ord for MultiIndexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.d())
            .cmp(&(other.n, other.d()))
            .then_with(|| self.elems.iter().rev().cmp(other.elems.iter().rev()))
    }
}

impl PartialOrd for MultiIndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All `d`-multisets of `{1, .., n}` in colexicographic order.
pub fn enum_multisets(n: u32, d: usize) -> Vec<MultiIndexSet> {
    let mut out = Vec::new();
    let mut buf = vec![0u32; d];
    fn rec(n: u32, buf: &mut [u32], pos: usize, hi: u32, out: &mut Vec<MultiIndexSet>) {
        if pos == 0 {
            out.push(MultiIndexSet { n, elems: buf.to_vec() });
            return;
        }
        for m in 1..=hi {
            buf[pos - 1] = m;
            rec(n, buf, pos - 1, m, out);
        }
    }
    // Colex: largest element varies slowest.
    if d == 0 {
        out.push(MultiIndexSet { n, elems: Vec::new() });
        return out;
    }
    for m in 1..=n {
        buf[d - 1] = m;
        rec(n, &mut buf, d - 1, m, &mut out);
    }
    out
}

/// Is there a degenerate multiset `K` with `I <= K <= J`?
///
/// This is the definitional test for membership of `f_JI` in the ideal cut
/// out of the multiset incidence algebra. Errors unless `I <= J`.
pub fn factors_through_degenerate(i: &MultiIndexSet, j: &MultiIndexSet) -> Result<bool> {
    if !i.leq(j) {
        return Err(Error::Incomparable(format!("{i:?} <= {j:?} fails")));
    }
    // Depth-first search over weakly increasing chains i_a <= k_a <= j_a,
    // succeeding as soon as two consecutive chosen values collide.
    fn rec(iv: &[u32], jv: &[u32], pos: usize, prev: u32, repeated: bool) -> bool {
        if pos == iv.len() {
            return repeated;
        }
        let lo = iv[pos].max(prev);
        for k in lo..=jv[pos] {
            if rec(iv, jv, pos + 1, k, repeated || k == prev) {
                return true;
            }
        }
        false
    }
    Ok(rec(i.elems(), j.elems(), 0, 0, false))
}

/// Exact binomial coefficient; desk-scale arguments only.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * u128::from(n - t) / u128::from(t + 1);
    }
    acc
}
