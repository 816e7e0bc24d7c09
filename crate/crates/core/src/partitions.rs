//! Integer partitions, Dyson ranks and rank distributions by direct counting.
//!
//! Everything here is brute force on purpose: the rank distribution computed
//! by [`rank_distribution`] is the oracle that the series and Durfee-symbol
//! paths are checked against.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::{BufRead, Write};
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::Int;

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub(crate) fn from_slice_unchecked(parts: &[u32]) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts: parts.to_vec() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Smallest part; `None` for the empty partition, read as "no constraint".
    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Dyson's rank: largest part minus number of parts.
    pub fn rank(&self) -> Result<i64> {
        if self.is_empty() {
            return Err(Error::EmptyRank);
        }
        Ok(rank_of(&self.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[inline]
fn rank_of(parts: &[u32]) -> i64 {
    parts[0] as i64 - parts.len() as i64
}

/// Visits every partition of `n` in lexicographically decreasing order,
/// starting at `(n)` and ending at `(1,1,...,1)`. For `n = 0` the empty
/// partition is visited once. The slice is only valid during the call.
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, mut f: F) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut parts = vec![n];
    loop {
        f(&parts);
        let Some(j) = parts.iter().rposition(|&p| p > 1) else {
            return;
        };
        let v = parts[j] - 1;
        let mut rem = v + (parts.len() - j) as u32;
        parts.truncate(j);
        while rem >= v {
            parts.push(v);
            rem -= v;
        }
        if rem > 0 {
            parts.push(rem);
        }
    }
}

/// Visits every partition of `weight` whose parts lie in `lo..=hi`, in
/// lexicographically decreasing order. `lo` is clamped to at least 1.
pub fn for_each_bounded_partition<F: FnMut(&[u32])>(weight: u32, lo: u32, hi: u32, mut f: F) {
    let mut buf = Vec::new();
    bounded_rec(weight, lo.max(1), hi, &mut buf, &mut f);
}

fn bounded_rec<F: FnMut(&[u32])>(w: u32, lo: u32, hi: u32, buf: &mut Vec<u32>, f: &mut F) {
    if w == 0 {
        f(buf);
        return;
    }
    let top = hi.min(w);
    if top < lo {
        return;
    }
    for p in (lo..=top).rev() {
        let rest = w - p;
        if rest != 0 && rest < lo {
            continue;
        }
        buf.push(p);
        bounded_rec(rest, lo, p, buf, f);
        buf.pop();
    }
}

/// All partitions of `n` in the canonical order of [`for_each_partition`].
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    Limits::global().check_n(n)?;
    let mut out = Vec::new();
    for_each_partition(n, |p| out.push(Partition::from_slice_unchecked(p)));
    Ok(out)
}

/// `p(0..=n)` from Euler's pentagonal recurrence
/// `p(n) = sum_{j>=1} (-1)^(j+1) [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)]`.
pub fn partition_numbers(n: usize) -> Vec<Int> {
    let mut p = vec![Int::from(0); n + 1];
    p[0] = Int::from(1);
    for m in 1..=n {
        let mut acc = Int::from(0);
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let mut term = p[m - g1].clone();
            if g2 <= m {
                term += &p[m - g2];
            }
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[m] = acc;
    }
    p
}

/// The counts `N(m, n)` for a fixed `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankDistribution {
    n: u32,
    counts: BTreeMap<i64, u64>,
}

impl RankDistribution {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `N(m, n)`, zero when no partition of `n` has rank `m`.
    pub fn count(&self, m: i64) -> u64 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    /// Nonzero entries in increasing order of rank.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.counts.iter().map(|(&m, &c)| (m, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    fn from_counts(n: u32, counts: BTreeMap<i64, u64>) -> Self {
        RankDistribution { n, counts }
    }
}

type Cache = RwLock<HashMap<u32, Arc<RankDistribution>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Rank distribution of `n` by enumerating all partitions of `n`; memoized.
pub fn rank_distribution(n: u32) -> Result<Arc<RankDistribution>> {
    if n == 0 {
        return Err(Error::InvalidArgument("rank distribution needs n >= 1".into()));
    }
    Limits::global().check_n(n)?;
    if let Some(d) = cache().read().unwrap().get(&n) {
        return Ok(Arc::clone(d));
    }
    let mut counts = BTreeMap::new();
    for_each_partition(n, |p| *counts.entry(rank_of(p)).or_insert(0u64) += 1);
    let dist = Arc::new(RankDistribution::from_counts(n, counts));
    // Two threads racing on the same n compute identical values; first one wins.
    let mut guard = cache().write().unwrap();
    Ok(Arc::clone(guard.entry(n).or_insert(dist)))
}

/// `N(m, n)`.
pub fn count_with_rank(m: i64, n: u32) -> Result<u64> {
    Ok(rank_distribution(n)?.count(m))
}

/// Writes distributions as CSV with header `n,m,count`, one row per nonzero
/// count, sorted by `(n, m)`.
pub fn write_csv<W: Write>(dists: &[&RankDistribution], mut out: W) -> std::io::Result<()> {
    let mut sorted: Vec<&RankDistribution> = dists.to_vec();
    sorted.sort_by_key(|d| d.n);
    writeln!(out, "n,m,count")?;
    for d in sorted {
        for (m, c) in d.iter() {
            writeln!(out, "{},{},{}", d.n, m, c)?;
        }
    }
    Ok(())
}

/// Reads the format produced by [`write_csv`].
pub fn read_csv<R: BufRead>(input: R) -> Result<Vec<RankDistribution>> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?
        .map_err(|e| Error::Parse(e.to_string()))?;
    if header.trim() != "n,m,count" {
        return Err(Error::Parse(format!("unexpected header {header:?}")));
    }
    let mut by_n: BTreeMap<u32, BTreeMap<i64, u64>> = BTreeMap::new();
    for (lineno, line) in lines.enumerate() {
        let line = line.map_err(|e| Error::Parse(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = || Error::Parse(format!("line {}: {line:?}", lineno + 2));
        let mut fields = line.trim().split(',');
        let n: u32 = fields.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let m: i64 = fields.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let c: u64 = fields.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        if fields.next().is_some() || n == 0 || c == 0 {
            return Err(bad());
        }
        if by_n.entry(n).or_default().insert(m, c).is_some() {
            return Err(bad());
        }
    }
    Ok(by_n
        .into_iter()
        .map(|(n, counts)| RankDistribution::from_counts(n, counts))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: u32) -> Vec<Vec<u32>> {
        let mut v = Vec::new();
        for_each_partition(n, |p| v.push(p.to_vec()));
        v
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(all(0), vec![Vec::<u32>::new()]);
        assert_eq!(all(1), vec![vec![1]]);
        assert_eq!(
            all(5),
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1],
            ]
        );
    }

    #[test]
    fn enumeration_is_strictly_decreasing_lexicographically() {
        for n in 0..=20 {
            let ps = all(n);
            assert!(ps.windows(2).all(|w| w[0] > w[1]), "n = {n}");
            for p in &ps {
                assert!(p.windows(2).all(|w| w[0] >= w[1]));
                assert_eq!(p.iter().sum::<u32>(), n);
            }
        }
    }

    #[test]
    fn bounded_matches_filtered() {
        for w in 0..=14 {
            for lo in 1..=4 {
                for hi in 0..=6 {
                    let mut got = Vec::new();
                    for_each_bounded_partition(w, lo, hi, |p| got.push(p.to_vec()));
                    let want: Vec<_> = all(w)
                        .into_iter()
                        .filter(|p| p.iter().all(|&x| x >= lo && x <= hi))
                        .collect();
                    assert_eq!(got, want, "w={w} lo={lo} hi={hi}");
                }
            }
        }
    }

    #[test]
    fn ranks() {
        let r = |v: Vec<u32>| Partition::new(v).unwrap().rank().unwrap();
        assert_eq!(r(vec![5]), 4);
        assert_eq!(r(vec![1, 1, 1, 1, 1]), -4);
        assert_eq!(r(vec![3, 1, 1]), 0);
        assert_eq!(Partition::empty().rank(), Err(Error::EmptyRank));
    }

    #[test]
    fn partition_accessors() {
        let p = Partition::new(vec![4, 2, 2]).unwrap();
        assert_eq!((p.weight(), p.len(), p.largest(), p.smallest()), (8, 3, 4, Some(2)));
        let e = Partition::empty();
        assert_eq!((e.weight(), e.len(), e.largest(), e.smallest()), (0, 0, 0, None));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 2]).unwrap().parts(), &[3, 2, 1]);
        assert_eq!(p.to_string(), "(4,2,2)");
    }

    #[test]
    fn rank_distribution_of_five() {
        let d = rank_distribution(5).unwrap();
        let got: Vec<_> = d.iter().collect();
        assert_eq!(got, vec![(-4, 1), (-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1), (4, 1)]);
        assert_eq!(rank_distribution(1).unwrap().iter().collect::<Vec<_>>(), vec![(0, 1)]);
        let d4 = rank_distribution(4).unwrap();
        assert_eq!(d4.total(), 5);
        assert!((-4..=4).all(|m| d4.count(m) == d4.count(-m)));
    }

    #[test]
    fn count_with_rank_examples() {
        assert_eq!(count_with_rank(0, 5).unwrap(), 1);
        assert_eq!(count_with_rank(7, 5).unwrap(), 0);
        assert_eq!(count_with_rank(-2, 5).unwrap(), 1);
    }

    #[test]
    fn refusals() {
        assert!(matches!(rank_distribution(0), Err(Error::InvalidArgument(_))));
        assert!(rank_distribution(61).unwrap_err().is_refusal());
        assert!(enumerate_partitions(61).unwrap_err().is_refusal());
        assert_eq!(enumerate_partitions(5).unwrap().len(), 7);
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::empty()]);
    }

    #[test]
    fn pentagonal_numbers() {
        let p = partition_numbers(12);
        let want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        assert_eq!(p, want.iter().map(|&x| Int::from(x)).collect::<Vec<_>>());
        assert_eq!(partition_numbers(100)[100], "190569292".parse::<Int>().unwrap());
    }

    #[test]
    fn csv_round_trip() {
        let d3 = rank_distribution(3).unwrap();
        let d2 = rank_distribution(2).unwrap();
        let mut buf = Vec::new();
        write_csv(&[&d3, &d2], &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text, "n,m,count\n2,-1,1\n2,1,1\n3,-2,1\n3,0,1\n3,2,1\n");
        let back = read_csv(&buf[..]).unwrap();
        assert_eq!(back, vec![(*d2).clone(), (*d3).clone()]);
        assert!(read_csv("n,m\n".as_bytes()).is_err());
        assert!(read_csv("n,m,count\n2,1,x\n".as_bytes()).is_err());
        assert!(read_csv("n,m,count\n2,1,1\n2,1,1\n".as_bytes()).is_err());
    }
}
