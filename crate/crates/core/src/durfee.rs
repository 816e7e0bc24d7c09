//! k-marked Durfee symbols.
//!
//! A k-marked Durfee symbol of `n` is a side `D >= 1` together with `k` pairs
//! of partitions `(alpha^i, beta^i)`, `i = 1..=k`, such that
//!
//! 1. `alpha^i` is nonempty for `i < k`;
//! 2. `largest(beta^{i-1}) <= largest(alpha^{i-1}) <= min(smallest(alpha^i), smallest(beta^i))`
//!    for `2 <= i <= k`;
//! 3. `largest(alpha^k) <= D` and `largest(beta^k) <= D`;
//! 4. the total weight of all pairs plus `D^2` is `n`.
//!
//! In condition 2 an empty partition has largest part 0, and an empty row of
//! the last vector contributes `D` as its smallest part, so every part of the
//! symbol is bounded by `D`. With `smallest(empty) = +inf` instead, the symbol
//! `D = 1, alpha^1 = (4)` would count among the 2-marked symbols of 5 and the
//! total would be 29 rather than 21.
//!
//! Vectors are stored with index 0 holding `(alpha^1, beta^1)`. Marks are
//! positional and not stored.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partitions::{for_each_bounded_partition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedVector {
    pub alpha: Partition,
    pub beta: Partition,
}

impl MarkedVector {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        MarkedVector { alpha, beta }
    }

    pub fn from_parts(alpha: &[u32], beta: &[u32]) -> Result<Self> {
        Ok(MarkedVector {
            alpha: Partition::new(alpha.to_vec())?,
            beta: Partition::new(beta.to_vec())?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedDurfeeSymbol {
    durfee: u32,
    vectors: Vec<MarkedVector>,
}

/// Which of the four defining conditions a symbol violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    NonemptyAlpha = 1,
    Interlacing = 2,
    DurfeeBound = 3,
    Weight = 4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    /// One-based vector index the violation was found at, if any.
    pub vector: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition ({})", self.condition as u8)?;
        if let Some(i) = self.vector {
            write!(f, " at vector {i}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

/// How the i-th rank is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankRule {
    /// `l(alpha^i) - l(beta^i) - 1` for `i < k`, `l(alpha^k) - l(beta^k)` for `i = k`.
    #[default]
    Standard,
    /// Drops the `-1` for `i < k`. Deliberately wrong; exists so the
    /// verification suite can show that it detects the change.
    WithoutOffset,
}

/// The ranks `(rho_1, ..., rho_k)`; index 0 holds `rho_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankVector(pub Vec<i64>);

impl RankVector {
    /// `rho_i`, one-based.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl MarkedDurfeeSymbol {
    /// `vectors[0]` is `(alpha^1, beta^1)`. Only structure is checked here;
    /// use [`MarkedDurfeeSymbol::validate`] for the defining conditions.
    pub fn new(durfee: u32, vectors: Vec<MarkedVector>) -> Result<Self> {
        if durfee == 0 {
            return Err(Error::InvalidArgument("Durfee side must be positive".into()));
        }
        if vectors.is_empty() {
            return Err(Error::InvalidArgument("need at least one marked vector".into()));
        }
        Ok(MarkedDurfeeSymbol { durfee, vectors })
    }

    pub fn marks(&self) -> usize {
        self.vectors.len()
    }

    pub fn durfee(&self) -> u32 {
        self.durfee
    }

    pub fn vectors(&self) -> &[MarkedVector] {
        &self.vectors
    }

    /// `(alpha^i, beta^i)`, one-based.
    pub fn vector(&self, i: usize) -> &MarkedVector {
        &self.vectors[i - 1]
    }

    pub fn weight(&self) -> u32 {
        self.vectors
            .iter()
            .map(|v| v.alpha.weight() + v.beta.weight())
            .sum::<u32>()
            + self.durfee * self.durfee
    }

    /// Checks conditions (1) to (4) in order and reports the first failure.
    pub fn validate(&self, expected_n: u32) -> std::result::Result<(), Violation> {
        let k = self.marks();
        let d = self.durfee;
        let fail = |condition, vector, detail: String| {
            Err(Violation {
                condition,
                vector,
                detail,
            })
        };
        for i in 1..k {
            if self.vector(i).alpha.is_empty() {
                return fail(Condition::NonemptyAlpha, Some(i), "alpha is empty".into());
            }
        }
        for i in 2..=k {
            let prev = self.vector(i - 1);
            let cur = self.vector(i);
            let a_top = prev.alpha.largest();
            if prev.beta.largest() > a_top {
                return fail(
                    Condition::Interlacing,
                    Some(i - 1),
                    format!("largest beta part {} exceeds largest alpha part {a_top}", prev.beta.largest()),
                );
            }
            let floor = cur
                .alpha
                .smallest()
                .unwrap_or(d)
                .min(cur.beta.smallest().unwrap_or(d));
            if a_top > floor {
                return fail(
                    Condition::Interlacing,
                    Some(i),
                    format!("previous largest alpha part {a_top} exceeds smallest part {floor}"),
                );
            }
        }
        let last = self.vector(k);
        if last.alpha.largest() > d || last.beta.largest() > d {
            return fail(
                Condition::DurfeeBound,
                Some(k),
                format!(
                    "largest parts {} / {} exceed D = {d}",
                    last.alpha.largest(),
                    last.beta.largest()
                ),
            );
        }
        let w = self.weight();
        if w != expected_n {
            return fail(Condition::Weight, None, format!("weight {w} differs from {expected_n}"));
        }
        Ok(())
    }

    pub fn ranks(&self) -> RankVector {
        self.ranks_with(RankRule::Standard)
    }

    pub fn ranks_with(&self, rule: RankRule) -> RankVector {
        let lens: Vec<(usize, usize)> = self
            .vectors
            .iter()
            .map(|v| (v.alpha.len(), v.beta.len()))
            .collect();
        RankVector(ranks_from_lengths(&lens, rule))
    }

    /// `{"k", "D", "vectors": [{"alpha", "beta"}], "ranks"}` with vectors
    /// and ranks listed from `i = k` down to `i = 1`.
    pub fn to_json(&self) -> Value {
        let ranks = self.ranks();
        let vectors: Vec<Value> = self
            .vectors
            .iter()
            .rev()
            .map(|v| json!({"alpha": v.alpha.parts(), "beta": v.beta.parts()}))
            .collect();
        let ranks: Vec<i64> = ranks.0.iter().rev().copied().collect();
        json!({"k": self.marks(), "D": self.durfee, "vectors": vectors, "ranks": ranks})
    }
}

impl fmt::Display for MarkedDurfeeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = |pick: fn(&MarkedVector) -> &Partition| {
            self.vectors
                .iter()
                .rev()
                .map(|v| pick(v).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "[{} / {}]_{}", rows(|v| &v.alpha), rows(|v| &v.beta), self.durfee)
    }
}

fn ranks_from_lengths(lens: &[(usize, usize)], rule: RankRule) -> Vec<i64> {
    let k = lens.len();
    lens.iter()
        .enumerate()
        .map(|(idx, &(a, b))| {
            let base = a as i64 - b as i64;
            if idx + 1 < k && rule == RankRule::Standard {
                base - 1
            } else {
                base
            }
        })
        .collect()
}

fn bounded(weight: u32, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_bounded_partition(weight, lo, hi, |p| out.push(p.to_vec()));
    out
}

struct Walker<'f, F> {
    marks: usize,
    durfee: u32,
    stack: Vec<MarkedVector>,
    visit: &'f mut F,
}

impl<F: FnMut(&MarkedDurfeeSymbol)> Walker<'_, F> {
    /// Fills vector `idx` (zero-based) with parts at least `lo` from `rem`.
    fn walk(&mut self, idx: usize, lo: u32, rem: u32) {
        let d = self.durfee;
        if idx + 1 == self.marks {
            for wa in 0..=rem {
                for alpha in bounded(wa, lo, d) {
                    for beta in bounded(rem - wa, lo, d) {
                        self.stack.push(MarkedVector {
                            alpha: Partition::from_slice_unchecked(&alpha),
                            beta: Partition::from_slice_unchecked(&beta),
                        });
                        let sym = MarkedDurfeeSymbol {
                            durfee: d,
                            vectors: std::mem::take(&mut self.stack),
                        };
                        (self.visit)(&sym);
                        self.stack = sym.vectors;
                        self.stack.pop();
                    }
                }
            }
            return;
        }
        // later vectors idx+1..marks-1 each need a nonempty alpha with parts >= top
        let later_nonempty = (self.marks - idx - 2) as u32;
        for wa in 1..=rem {
            for alpha in bounded(wa, lo, d) {
                let top = alpha[0];
                let reserve = later_nonempty * top;
                if wa + reserve > rem {
                    continue;
                }
                for wb in 0..=rem - wa - reserve {
                    for beta in bounded(wb, lo, top) {
                        self.stack.push(MarkedVector {
                            alpha: Partition::from_slice_unchecked(&alpha),
                            beta: Partition::from_slice_unchecked(&beta),
                        });
                        self.walk(idx + 1, top, rem - wa - wb);
                        self.stack.pop();
                    }
                }
            }
        }
    }
}

/// Visits every k-marked Durfee symbol of `n` exactly once.
///
/// Order: `D` ascending; within one `D`, vectors are filled from `i = 1`
/// upward, each vector by alpha weight ascending, alpha lexicographically
/// decreasing, then beta weight ascending, beta lexicographically decreasing.
/// Separate `D` values are independent slices.
pub fn for_each_marked<F: FnMut(&MarkedDurfeeSymbol)>(marks: usize, n: u32, mut visit: F) -> Result<()> {
    check_args(marks, n)?;
    let mut d = 1u32;
    while d * d <= n {
        let mut w = Walker {
            marks,
            durfee: d,
            stack: Vec::with_capacity(marks),
            visit: &mut visit,
        };
        w.walk(0, 1, n - d * d);
        d += 1;
    }
    Ok(())
}

fn check_args(marks: usize, n: u32) -> Result<()> {
    if marks == 0 || n == 0 {
        return Err(Error::InvalidArgument("marks and n must be positive".into()));
    }
    Limits::global().check_durfee(marks, n)
}

pub fn enumerate_marked(marks: usize, n: u32) -> Result<Vec<MarkedDurfeeSymbol>> {
    let mut out = Vec::new();
    for_each_marked(marks, n, |s| out.push(s.clone()))?;
    Ok(out)
}

pub fn count_marked(marks: usize, n: u32) -> Result<u64> {
    Ok(rank_histogram(marks, n)?.values().sum())
}

/// Rank vector to number of symbols, i.e. the nonzero values of
/// `D_k(m_1, ..., m_k; n)`. Standard-rule histograms are memoized.
pub fn rank_histogram(marks: usize, n: u32) -> Result<Arc<BTreeMap<RankVector, u64>>> {
    type Cache = Mutex<HashMap<(usize, u32), Arc<BTreeMap<RankVector, u64>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    check_args(marks, n)?;
    if let Some(h) = cache.lock().unwrap().get(&(marks, n)) {
        return Ok(Arc::clone(h));
    }
    let h = Arc::new(rank_histogram_with(marks, n, RankRule::Standard)?);
    Ok(Arc::clone(cache.lock().unwrap().entry((marks, n)).or_insert(h)))
}

pub fn rank_histogram_with(marks: usize, n: u32, rule: RankRule) -> Result<BTreeMap<RankVector, u64>> {
    let mut h = BTreeMap::new();
    for_each_marked(marks, n, |s| *h.entry(s.ranks_with(rule)).or_insert(0) += 1)?;
    Ok(h)
}

/// `D_k(m_1, ..., m_k; n)`.
pub fn count_with_rank_vector(marks: usize, ranks: &[i64], n: u32) -> Result<u64> {
    if ranks.len() != marks {
        return Err(Error::InvalidArgument(format!(
            "rank vector has {} entries, expected {marks}",
            ranks.len()
        )));
    }
    let h = rank_histogram(marks, n)?;
    Ok(h.get(&RankVector(ranks.to_vec())).copied().unwrap_or(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankFilter {
    Zero,
    Positive,
    Negative,
}

impl RankFilter {
    pub const ALL: [RankFilter; 3] = [RankFilter::Zero, RankFilter::Positive, RankFilter::Negative];

    pub fn accepts(self, rank: i64) -> bool {
        match self {
            RankFilter::Zero => rank == 0,
            RankFilter::Positive => rank > 0,
            RankFilter::Negative => rank < 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RankFilter::Zero => "zero",
            RankFilter::Positive => "positive",
            RankFilter::Negative => "negative",
        }
    }
}

/// Number of k-marked symbols of `n` whose `i`-th rank (one-based) passes `filter`.
pub fn count_ith_rank_filtered(marks: usize, i: usize, filter: RankFilter, n: u32) -> Result<u64> {
    check_index(marks, i)?;
    let h = rank_histogram(marks, n)?;
    Ok(filtered(&h, i, filter))
}

pub fn count_ith_rank_filtered_with(
    marks: usize,
    i: usize,
    filter: RankFilter,
    n: u32,
    rule: RankRule,
) -> Result<u64> {
    if rule == RankRule::Standard {
        return count_ith_rank_filtered(marks, i, filter, n);
    }
    check_index(marks, i)?;
    let h = rank_histogram_with(marks, n, rule)?;
    Ok(filtered(&h, i, filter))
}

fn check_index(marks: usize, i: usize) -> Result<()> {
    if i == 0 || i > marks {
        return Err(Error::InvalidArgument(format!("rank index {i} outside 1..={marks}")));
    }
    Ok(())
}

fn filtered(h: &BTreeMap<RankVector, u64>, i: usize, filter: RankFilter) -> u64 {
    h.iter()
        .filter(|(r, _)| filter.accepts(r.get(i)))
        .map(|(_, c)| c)
        .sum()
}
