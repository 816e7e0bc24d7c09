//! Named verifications. Each one evaluates two independent computation
//! paths over a finite range and records every disagreement.
//!
//! The paths never share code beyond [`crate::partitions::Partition`]:
//! rank distributions come from enumeration, marked-symbol counts from the
//! Durfee generator, generating functions from series arithmetic, and the
//! solution counters from explicit enumeration against binomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::durfee::{self, RankFilter, RankRule, RankVector};
use crate::error::{Error, Result};
use crate::moments::{self, MomentFormula, SolutionVariant};
use crate::partitions::{self, partition_numbers};
use crate::qseries;
use crate::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Refused,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub inputs: BTreeMap<String, Value>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, Value>,
    pub cases_checked: u64,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    /// Why the check was refused.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Collects cases for one report.
struct Checker {
    report: VerificationReport,
}

impl Checker {
    fn new(identity: &str, params: &[(&str, Value)]) -> Self {
        Checker {
            report: VerificationReport {
                identity: identity.to_string(),
                params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
                cases_checked: 0,
                status: Status::Fail,
                counterexamples: Vec::new(),
                reason: None,
            },
        }
    }

    fn check<T: PartialEq + Display>(&mut self, inputs: &[(&str, Value)], lhs: T, rhs: T) {
        self.report.cases_checked += 1;
        if lhs != rhs {
            self.report.counterexamples.push(Counterexample {
                inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Runs `body`; a cap refusal turns the report into a refused one, other
    /// errors propagate.
    fn run(mut self, body: impl FnOnce(&mut Checker) -> Result<()>) -> Result<VerificationReport> {
        match body(&mut self) {
            Ok(()) => {
                let r = &mut self.report;
                r.status = if r.counterexamples.is_empty() && r.cases_checked > 0 {
                    Status::Pass
                } else {
                    Status::Fail
                };
                Ok(self.report)
            }
            Err(e) if e.is_refusal() => {
                let r = &mut self.report;
                r.status = Status::Refused;
                r.cases_checked = 0;
                r.counterexamples.clear();
                r.reason = Some(e.to_string());
                Ok(self.report)
            }
            Err(e) => Err(e),
        }
    }
}

fn positive(name: &str, v: u32) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidArgument(format!("{name} must be positive")));
    }
    Ok(())
}

/// `eta_{2k}(n)` equals the number of `(k+1)`-marked Durfee symbols of `n`.
pub fn verify_andrews(k: u32, n_max: u32) -> Result<VerificationReport> {
    positive("k", k)?;
    Checker::new("andrews", &[("k", k.into()), ("n_max", n_max.into())]).run(|c| {
        durfee::count_marked(k as usize + 1, n_max.max(1))?;
        for n in 1..=n_max {
            let lhs = moments::symmetrized_moment(2 * k, n)?;
            let rhs = Int::from(durfee::count_marked(k as usize + 1, n)?);
            c.check(&[("n", n.into())], lhs, rhs);
        }
        Ok(())
    })
}

/// `etabar_{2k-1}(n)` (zero filter) or `etabar_{2k}(n)` (positive and
/// negative filters) against the number of `(k+1)`-marked symbols of `n`
/// whose `i`-th rank passes the filter; every `i` in `1..=k+1` when `i` is `None`.
pub fn verify_rank_interpretation(
    k: u32,
    i: Option<usize>,
    n_max: u32,
    filter: RankFilter,
    rule: RankRule,
) -> Result<VerificationReport> {
    positive("k", k)?;
    let marks = k as usize + 1;
    let indices: Vec<usize> = match i {
        Some(i) if i == 0 || i > marks => {
            return Err(Error::InvalidArgument(format!("rank index {i} outside 1..={marks}")))
        }
        Some(i) => vec![i],
        None => (1..=marks).collect(),
    };
    let moment_index = match filter {
        RankFilter::Zero => 2 * k - 1,
        RankFilter::Positive | RankFilter::Negative => 2 * k,
    };
    let mut params = vec![("k", k.into()), ("n_max", n_max.into())];
    if let Some(i) = i {
        params.push(("i", i.into()));
    }
    if rule != RankRule::Standard {
        params.push(("rank_rule", "without-offset".into()));
    }
    let identity = format!("{}-rank", filter.name());
    Checker::new(&identity, &params).run(|c| {
        durfee::count_marked(marks, n_max.max(1))?;
        for n in 1..=n_max {
            let lhs = moments::symmetrized_positive_moment(moment_index, n)?;
            for &i in &indices {
                let rhs = durfee::count_ith_rank_filtered_with(marks, i, filter, n, rule)?;
                c.check(&[("n", n.into()), ("i", i.into())], lhs.clone(), Int::from(rhs));
            }
        }
        Ok(())
    })
}

pub fn verify_zero_rank(k: u32, i: Option<usize>, n_max: u32) -> Result<VerificationReport> {
    verify_rank_interpretation(k, i, n_max, RankFilter::Zero, RankRule::Standard)
}

pub fn verify_positive_rank(k: u32, i: Option<usize>, n_max: u32) -> Result<VerificationReport> {
    verify_rank_interpretation(k, i, n_max, RankFilter::Positive, RankRule::Standard)
}

pub fn verify_negative_rank(k: u32, i: Option<usize>, n_max: u32) -> Result<VerificationReport> {
    verify_rank_interpretation(k, i, n_max, RankFilter::Negative, RankRule::Standard)
}

/// Sum of `N(base + 2 (t_1 + ... + t_free), n)` over all `t` in `N^free`,
/// enumerating `t` until the rank argument passes `n - 1`.
fn truncated_rank_sum(base: i64, free: usize, n: u32) -> Result<u64> {
    let dist = partitions::rank_distribution(n)?;
    let top = n as i64 - 1;
    fn go(arg: i64, free: usize, top: i64, dist: &partitions::RankDistribution) -> u64 {
        if arg > top {
            return 0;
        }
        if free == 0 {
            return dist.count(arg);
        }
        (0..)
            .map(|t: i64| arg + 2 * t)
            .take_while(|&a| a <= top)
            .map(|a| go(a, free - 1, top, dist))
            .sum()
    }
    Ok(go(base, free, top, &dist))
}

fn rank_vectors(k: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |m| {
                    let mut w = v.clone();
                    w.push(m);
                    w
                })
            })
            .collect();
    }
    out
}

/// `D_k(m_1..m_k; n) = sum_{t_1..t_{k-1} >= 0} N(sum |m_i| + 2 sum t_i + k - 1, n)`
/// for every `|m_i| <= m_bound`.
pub fn verify_ji(k: u32, n_max: u32, m_bound: u32) -> Result<VerificationReport> {
    positive("k", k)?;
    let marks = k as usize;
    let params = [("k", k.into()), ("n_max", n_max.into()), ("m_bound", m_bound.into())];
    Checker::new("ji", &params).run(|c| {
        durfee::count_marked(marks, n_max.max(1))?;
        let vectors = rank_vectors(marks, m_bound as i64);
        for n in 1..=n_max {
            for m in &vectors {
                let lhs = durfee::count_with_rank_vector(marks, m, n)?;
                let base = m.iter().map(|x| x.abs()).sum::<i64>() + marks as i64 - 1;
                let rhs = truncated_rank_sum(base, marks - 1, n)?;
                c.check(&[("n", n.into()), ("m", m.clone().into())], lhs, rhs);
            }
        }
        Ok(())
    })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// `D_k` is invariant under every permutation of its rank arguments and
/// under negating any of them, checked on every rank vector that occurs.
pub fn verify_symmetry(k: u32, n_max: u32) -> Result<VerificationReport> {
    positive("k", k)?;
    let marks = k as usize;
    Checker::new("symmetry", &[("k", k.into()), ("n_max", n_max.into())]).run(|c| {
        durfee::count_marked(marks, n_max.max(1))?;
        let perms = permutations(marks);
        for n in 1..=n_max {
            let hist = durfee::rank_histogram(marks, n)?;
            for (ranks, &count) in hist.iter() {
                for p in &perms {
                    for signs in 0u32..(1 << marks) {
                        let image: Vec<i64> = p
                            .iter()
                            .enumerate()
                            .map(|(slot, &src)| {
                                let v = ranks.0[src];
                                if signs >> slot & 1 == 1 {
                                    -v
                                } else {
                                    v
                                }
                            })
                            .collect();
                        let other = hist.get(&RankVector(image.clone())).copied().unwrap_or(0);
                        c.check(
                            &[("n", n.into()), ("m", ranks.0.clone().into()), ("image", image.into())],
                            count,
                            other,
                        );
                    }
                }
            }
        }
        Ok(())
    })
}

/// Which generating function [`verify_gf`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfKind {
    /// `eta_bar_odd_gf(k)` against `etabar_{2k-1}(n)`.
    Odd,
    /// `eta_bar_even_gf(k)` against `etabar_{2k}(n)`.
    Even,
    /// `rank_gf(m)` against `N(m, n)` for every `|m| <= k`.
    Rank,
    /// `marked_zero_rank_gf(k)` against `D_{k+1}(0, m_2, ...; n)`.
    MarkedZero,
    /// `marked_positive_rank_gf(k)` against `D_{k+1}(m_1 > 0, m_2, ...; n)`.
    MarkedPositive,
}

impl GfKind {
    pub const ALL: [GfKind; 5] = [
        GfKind::Odd,
        GfKind::Even,
        GfKind::Rank,
        GfKind::MarkedZero,
        GfKind::MarkedPositive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfKind::Odd => "odd",
            GfKind::Even => "even",
            GfKind::Rank => "rank",
            GfKind::MarkedZero => "marked-zero",
            GfKind::MarkedPositive => "marked-positive",
        }
    }
}

impl FromStr for GfKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GfKind::ALL
            .into_iter()
            .find(|g| g.name() == s || (s == "rank_gf" && *g == GfKind::Rank))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown generating function {s:?}")))
    }
}

/// Series coefficients against direct computations for `q^1..=q^n_max`.
/// For [`GfKind::Rank`], `k` is the bound on `|m|`.
pub fn verify_gf(which: GfKind, k: u32, n_max: u32) -> Result<VerificationReport> {
    if which != GfKind::Rank {
        positive("k", k)?;
    }
    let identity = format!("gf-{}", which.name());
    let order = n_max as usize;
    Checker::new(&identity, &[("k", k.into()), ("n_max", n_max.into())]).run(|c| {
        match which {
            GfKind::Odd | GfKind::Even => {
                let (series, index) = if which == GfKind::Odd {
                    (qseries::eta_bar_odd_gf::<Int>(k, order)?, 2 * k - 1)
                } else {
                    (qseries::eta_bar_even_gf::<Int>(k, order)?, 2 * k)
                };
                for n in 1..=n_max {
                    let lhs = series.coefficient(n as usize, &[])?;
                    let rhs = moments::symmetrized_positive_moment(index, n)?;
                    c.check(&[("n", n.into())], lhs, rhs);
                }
            }
            GfKind::Rank => {
                partitions::rank_distribution(n_max.max(1))?;
                for m in -(k as i64)..=k as i64 {
                    let series = qseries::rank_gf::<Int>(m, order);
                    for n in 1..=n_max {
                        let lhs = series.coefficient(n as usize, &[])?;
                        let rhs = Int::from(partitions::count_with_rank(m, n)?);
                        c.check(&[("m", m.into()), ("n", n.into())], lhs, rhs);
                    }
                }
            }
            GfKind::MarkedZero | GfKind::MarkedPositive => {
                let marks = k as usize + 1;
                durfee::count_marked(marks, n_max.max(1))?;
                let (series, zero_first) = if which == GfKind::MarkedZero {
                    (qseries::marked_zero_rank_gf::<Int>(k as usize, order, None)?, true)
                } else {
                    (qseries::marked_positive_rank_gf::<Int>(k as usize, order, None)?, false)
                };
                for n in 1..=n_max {
                    let mut from_symbols: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
                    for (ranks, &count) in durfee::rank_histogram(marks, n)?.iter() {
                        let first = ranks.0[0];
                        if zero_first && first == 0 {
                            from_symbols.insert(ranks.0[1..].to_vec(), count);
                        } else if !zero_first && first > 0 {
                            from_symbols.insert(ranks.0.clone(), count);
                        }
                    }
                    let from_series: BTreeMap<Vec<i64>, Int> = series
                        .coeff(n as usize)?
                        .terms()
                        .map(|(e, v)| (e.iter().map(|&x| x as i64).collect(), v.clone()))
                        .collect();
                    let keys: BTreeSet<&Vec<i64>> = from_symbols.keys().chain(from_series.keys()).collect();
                    for key in keys {
                        let lhs = from_series.get(key).cloned().unwrap_or_default();
                        let rhs = Int::from(from_symbols.get(key).copied().unwrap_or(0));
                        c.check(&[("n", n.into()), ("x", key.clone().into())], lhs, rhs);
                    }
                }
            }
        }
        Ok(())
    })
}

/// `eta_{2k}(n) = 2 etabar_{2k}(n) + etabar_{2k-1}(n)` for `1 <= k <= k_max`.
pub fn verify_eta_relation(k_max: u32, n_max: u32) -> Result<VerificationReport> {
    Checker::new("eta-relation", &[("k_max", k_max.into()), ("n_max", n_max.into())]).run(|c| {
        for k in 1..=k_max {
            for n in 1..=n_max {
                let lhs = moments::symmetrized_moment(2 * k, n)?;
                let rhs = moments::symmetrized_positive_moment(2 * k, n)? * 2
                    + moments::symmetrized_positive_moment(2 * k - 1, n)?;
                c.check(&[("k", k.into()), ("n", n.into())], lhs, rhs);
            }
        }
        Ok(())
    })
}

/// `eta_{2k+1}(n) = 0` for `0 <= k <= k_max`.
pub fn verify_odd_eta_vanishes(k_max: u32, n_max: u32) -> Result<VerificationReport> {
    Checker::new("eta-odd-zero", &[("k_max", k_max.into()), ("n_max", n_max.into())]).run(|c| {
        for k in 0..=k_max {
            for n in 1..=n_max {
                let lhs = moments::symmetrized_moment(2 * k + 1, n)?;
                c.check(&[("k", k.into()), ("n", n.into())], lhs, Int::from(0));
            }
        }
        Ok(())
    })
}

/// `sum_m N(m, n) = p(n)` with `p` from Euler's pentagonal recurrence, and
/// the coefficients of `1/(q;q)_inf` against the number of enumerated
/// partitions.
pub fn verify_partition_count(n_max: u32) -> Result<VerificationReport> {
    Checker::new("partition-count", &[("n_max", n_max.into())]).run(|c| {
        partitions::rank_distribution(n_max.max(1))?;
        let p = partition_numbers(n_max as usize);
        let gf = qseries::partition_gf::<Int>(n_max as usize);
        for n in 1..=n_max {
            let total = Int::from(partitions::rank_distribution(n)?.total());
            c.check(&[("n", n.into()), ("route", "pentagonal".into())], total, p[n as usize].clone());
            let mut enumerated = 0u64;
            partitions::for_each_partition(n, |_| enumerated += 1);
            c.check(
                &[("n", n.into()), ("route", "series".into())],
                gf.coefficient(n as usize, &[])?,
                Int::from(enumerated),
            );
        }
        Ok(())
    })
}

/// Enumerated solution counts against `C(n+2k-1, 2k-1)` and `C(n+2k-1, 2k)`.
pub fn verify_solution_counts(k_max: u32, n_max: u32) -> Result<VerificationReport> {
    Checker::new("solution-counts", &[("k_max", k_max.into()), ("n_max", n_max.into())]).run(|c| {
        for k in 1..=k_max {
            for n in 0..=n_max {
                for (variant, name) in [
                    (SolutionVariant::Free, "free"),
                    (SolutionVariant::PositiveFirst, "positive-first"),
                ] {
                    let lhs = Int::from(moments::solution_count(k, n, variant));
                    let rhs = moments::solution_count_closed_form(k, n, variant);
                    c.check(&[("k", k.into()), ("n", n.into()), ("variant", name.into())], lhs, rhs);
                }
            }
        }
        Ok(())
    })
}

/// The displayed rational expansions of `eta_6`, `etabar_4`, `etabar_5`.
pub fn verify_moment_formulas(n_max: u32) -> Result<VerificationReport> {
    Checker::new("moment-formulas", &[("n_max", n_max.into())]).run(|c| {
        for f in MomentFormula::ALL {
            for n in 1..=n_max {
                let (lhs, rhs) = f.sides(n)?;
                c.check(&[("formula", f.name().into()), ("n", n.into())], lhs, rhs);
            }
        }
        Ok(())
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(Error::InvalidArgument(format!("unknown profile {other:?}"))),
        }
    }
}

type Job = Box<dyn FnOnce() -> Result<VerificationReport> + Send>;

fn jobs(profile: Profile) -> Vec<Job> {
    // (max k, enumeration n, series order, moment n)
    let (k_max, n_enum, order, n_mom) = match profile {
        Profile::Quick => (2u32, 10u32, 30u32, 30u32),
        Profile::Full => (3, 14, 60, 60),
    };
    let mut v: Vec<Job> = Vec::new();
    for k in 1..=2 {
        v.push(Box::new(move || verify_andrews(k, n_enum)));
        v.push(Box::new(move || verify_zero_rank(k, None, n_enum)));
        v.push(Box::new(move || verify_positive_rank(k, None, n_enum)));
        v.push(Box::new(move || verify_negative_rank(k, None, n_enum)));
    }
    for marks in 2..=k_max {
        v.push(Box::new(move || verify_ji(marks, n_enum, 3)));
        v.push(Box::new(move || verify_symmetry(marks, n_enum)));
    }
    for k in 1..=k_max {
        v.push(Box::new(move || verify_gf(GfKind::Odd, k, order)));
        v.push(Box::new(move || verify_gf(GfKind::Even, k, order)));
    }
    v.push(Box::new(move || verify_gf(GfKind::Rank, 6, order)));
    for k in 1..=k_max.min(2) {
        v.push(Box::new(move || verify_gf(GfKind::MarkedZero, k, n_enum)));
        v.push(Box::new(move || verify_gf(GfKind::MarkedPositive, k, n_enum)));
    }
    let k_rel = if profile == Profile::Full { 4 } else { 2 };
    v.push(Box::new(move || verify_eta_relation(k_rel, n_mom)));
    v.push(Box::new(move || verify_odd_eta_vanishes(k_rel, n_mom)));
    v.push(Box::new(move || verify_partition_count(n_mom)));
    v.push(Box::new(move || verify_solution_counts(k_max, 20)));
    v.push(Box::new(move || verify_moment_formulas(n_mom)));
    v
}

/// Runs the whole suite. Jobs execute on separate threads; reports come back
/// in a fixed order.
pub fn verify_all(profile: Profile) -> Result<Vec<VerificationReport>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = jobs(profile).into_iter().map(|job| s.spawn(job)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification job panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn andrews_small() {
        let r = verify_andrews(1, 10).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.cases_checked, 10);
        assert_eq!(moments::symmetrized_moment(2, 1).unwrap(), Int::from(0));
        assert_eq!(durfee::count_marked(2, 1).unwrap(), 0);
    }

    #[test]
    fn vacuous_range_is_not_a_pass() {
        let r = verify_andrews(1, 0).unwrap();
        assert_eq!(r.cases_checked, 0);
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn refusal_is_distinct() {
        let r = verify_ji(5, 30, 1).unwrap();
        assert_eq!(r.status, Status::Refused);
        assert!(r.reason.is_some());
        assert!(verify_andrews(0, 5).is_err());
    }

    #[test]
    fn interpretations_at_five() {
        for filter in RankFilter::ALL {
            for i in 1..=2 {
                let r = verify_rank_interpretation(1, Some(i), 5, filter, RankRule::Standard).unwrap();
                assert!(r.passed());
            }
        }
        assert!(verify_zero_rank(1, Some(3), 5).is_err());
    }

    #[test]
    fn mutation_is_detected() {
        let r = verify_rank_interpretation(1, Some(1), 5, RankFilter::Zero, RankRule::WithoutOffset).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(r.counterexamples.iter().any(|c| c.inputs["n"] == 5));
    }

    #[test]
    fn ji_examples() {
        assert_eq!(durfee::count_with_rank_vector(2, &[0, 0], 5).unwrap(), 1);
        assert_eq!(truncated_rank_sum(1, 1, 5).unwrap(), 1);
        assert_eq!(truncated_rank_sum(4, 1, 5).unwrap(), 1);
        assert!(verify_ji(2, 6, 2).unwrap().passed());
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(
            durfee::count_with_rank_vector(2, &[0, 3], 5).unwrap(),
            durfee::count_with_rank_vector(2, &[3, 0], 5).unwrap()
        );
        assert_eq!(
            durfee::count_with_rank_vector(2, &[0, -3], 5).unwrap(),
            durfee::count_with_rank_vector(2, &[0, 3], 5).unwrap()
        );
        assert!(verify_symmetry(2, 6).unwrap().passed());
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(3).len(), 6);
        let set: BTreeSet<_> = permutations(3).into_iter().collect();
        assert_eq!(set.len(), 6);
    }

    #[test]
    fn gf_checks() {
        let r = verify_gf(GfKind::Odd, 1, 30).unwrap();
        assert!(r.passed());
        assert!(verify_gf(GfKind::MarkedZero, 1, 8).unwrap().passed());
        assert!(verify_gf(GfKind::MarkedPositive, 1, 8).unwrap().passed());
        assert!(verify_gf(GfKind::Rank, 2, 12).unwrap().passed());
    }

    #[test]
    fn report_json() {
        let r = verify_andrews(1, 2).unwrap();
        assert_eq!(
            r.to_json().to_string(),
            r#"{"identity":"andrews","params":{"k":1,"n_max":2},"cases_checked":2,"status":"pass","counterexamples":[]}"#
        );
        let bad = verify_rank_interpretation(1, Some(1), 2, RankFilter::Zero, RankRule::WithoutOffset).unwrap();
        let j = bad.to_json();
        assert_eq!(j["status"], "fail");
        assert_eq!(j["counterexamples"][0]["inputs"]["n"], 2);
    }
}
