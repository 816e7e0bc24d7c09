//! Rank moments computed from rank distributions.
//!
//! | kind | value at `n` |
//! |------|--------------|
//! | ordinary `N_j` | `sum_m m^j N(m, n)` |
//! | positive `Nbar_j` | `sum_{m>=1} m^j N(m, n)` |
//! | symmetrized `eta_k` | `sum_m C(m + floor((k-1)/2), k) N(m, n)` |
//! | symmetrized positive `etabar_k` | `sum_{m>=1} C(m + floor((k-1)/2), k) N(m, n)` |
//!
//! `C(x, k)` is the polynomial binomial, so negative `x` contributes
//! (`C(-4, 2) = 10`).

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{rank_distribution, RankDistribution};
use crate::scalar::binomial;
use crate::{Int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MomentKind {
    Ordinary,
    Positive,
    Symmetrized,
    SymmetrizedPositive,
}

impl MomentKind {
    pub fn name(self) -> &'static str {
        match self {
            MomentKind::Ordinary => "n",
            MomentKind::Positive => "nbar",
            MomentKind::Symmetrized => "eta",
            MomentKind::SymmetrizedPositive => "eta-bar",
        }
    }

    /// Value of this moment with index `index` on one distribution.
    pub fn evaluate(self, index: u32, dist: &RankDistribution) -> Int {
        match self {
            MomentKind::Ordinary => power_sum(dist, index, false),
            MomentKind::Positive => power_sum(dist, index, true),
            MomentKind::Symmetrized => binomial_sum(dist, index, false),
            MomentKind::SymmetrizedPositive => binomial_sum(dist, index, true),
        }
    }
}

impl FromStr for MomentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "n" | "ordinary" => MomentKind::Ordinary,
            "nbar" | "positive" => MomentKind::Positive,
            "eta" | "symmetrized" => MomentKind::Symmetrized,
            "eta-bar" | "etabar" | "symmetrized-positive" => MomentKind::SymmetrizedPositive,
            other => return Err(Error::InvalidArgument(format!("unknown moment kind {other:?}"))),
        })
    }
}

fn power_sum(dist: &RankDistribution, j: u32, positive_only: bool) -> Int {
    dist.iter()
        .filter(|&(m, _)| !positive_only || m >= 1)
        .map(|(m, c)| num_traits::pow(Int::from(m), j as usize) * c)
        .sum()
}

fn binomial_sum(dist: &RankDistribution, k: u32, positive_only: bool) -> Int {
    let shift = (k as i64 - 1).div_euclid(2);
    dist.iter()
        .filter(|&(m, _)| !positive_only || m >= 1)
        .map(|(m, c)| binomial(m + shift, k) * c)
        .sum()
}

/// `N_j(n)`.
pub fn ordinary_moment(j: u32, n: u32) -> Result<Int> {
    Ok(MomentKind::Ordinary.evaluate(j, &*rank_distribution(n)?))
}

/// `Nbar_j(n)`.
pub fn positive_moment(j: u32, n: u32) -> Result<Int> {
    Ok(MomentKind::Positive.evaluate(j, &*rank_distribution(n)?))
}

/// `eta_k(n)`.
pub fn symmetrized_moment(k: u32, n: u32) -> Result<Int> {
    Ok(MomentKind::Symmetrized.evaluate(k, &*rank_distribution(n)?))
}

/// `etabar_k(n)`.
pub fn symmetrized_positive_moment(k: u32, n: u32) -> Result<Int> {
    if k == 0 {
        return Err(Error::InvalidArgument("symmetrized positive moments start at k = 1".into()));
    }
    Ok(MomentKind::SymmetrizedPositive.evaluate(k, &*rank_distribution(n)?))
}

/// One moment over a range of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentTable {
    pub kind: MomentKind,
    pub index: u32,
    pub values: BTreeMap<u32, Int>,
}

impl MomentTable {
    /// Values for `n = 1..=n_max`.
    pub fn compute(kind: MomentKind, index: u32, n_max: u32) -> Result<Self> {
        if kind == MomentKind::SymmetrizedPositive && index == 0 {
            return Err(Error::InvalidArgument("symmetrized positive moments start at k = 1".into()));
        }
        let values = (1..=n_max)
            .map(|n| Ok((n, kind.evaluate(index, &*rank_distribution(n)?))))
            .collect::<Result<_>>()?;
        Ok(MomentTable { kind, index, values })
    }

    /// CSV with header `n,value`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "n,value")?;
        for (n, v) in &self.values {
            writeln!(out, "{n},{v}")?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let values: Vec<_> = self
            .values
            .iter()
            .map(|(n, v)| serde_json::json!({"n": n, "value": v.to_string()}))
            .collect();
        serde_json::json!({"kind": self.kind.name(), "index": self.index, "values": values})
    }
}

/// The displayed expansions of symmetrized moments in power moments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MomentFormula {
    /// `eta_6 = N_6/720 - N_4/144 + N_2/180`
    Eta6,
    /// `etabar_4 = Nbar_4/24 - Nbar_3/12 - Nbar_2/24 + Nbar_1/12`
    EtaBar4,
    /// `etabar_5 = Nbar_5/120 - Nbar_3/24 + Nbar_1/30`
    EtaBar5,
}

impl MomentFormula {
    pub const ALL: [MomentFormula; 3] = [MomentFormula::Eta6, MomentFormula::EtaBar4, MomentFormula::EtaBar5];

    pub fn name(self) -> &'static str {
        match self {
            MomentFormula::Eta6 => "eta6",
            MomentFormula::EtaBar4 => "etabar4",
            MomentFormula::EtaBar5 => "etabar5",
        }
    }

    /// `(power, numerator, denominator)` terms and the moment on the left.
    fn terms(self) -> (MomentKind, u32, MomentKind, &'static [(u32, i64, i64)]) {
        match self {
            MomentFormula::Eta6 => (
                MomentKind::Symmetrized,
                6,
                MomentKind::Ordinary,
                &[(6, 1, 720), (4, -1, 144), (2, 1, 180)],
            ),
            MomentFormula::EtaBar4 => (
                MomentKind::SymmetrizedPositive,
                4,
                MomentKind::Positive,
                &[(4, 1, 24), (3, -1, 12), (2, -1, 24), (1, 1, 12)],
            ),
            MomentFormula::EtaBar5 => (
                MomentKind::SymmetrizedPositive,
                5,
                MomentKind::Positive,
                &[(5, 1, 120), (3, -1, 24), (1, 1, 30)],
            ),
        }
    }

    /// Both sides at `n`, in exact rational arithmetic.
    pub fn sides(self, n: u32) -> Result<(Rational, Rational)> {
        let dist = rank_distribution(n)?;
        let (lhs_kind, lhs_index, rhs_kind, terms) = self.terms();
        let lhs = Rational::from_integer(lhs_kind.evaluate(lhs_index, &dist));
        let rhs = terms
            .iter()
            .map(|&(j, num, den)| {
                Rational::new(Int::from(num), Int::from(den)) * Rational::from_integer(rhs_kind.evaluate(j, &dist))
            })
            .fold(Rational::zero(), |a, b| a + b);
        Ok((lhs, rhs))
    }
}

impl FromStr for MomentFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MomentFormula::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown formula {s:?}")))
    }
}

pub fn linear_combination_check(formula: MomentFormula, n: u32) -> Result<bool> {
    let (lhs, rhs) = formula.sides(n)?;
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolutionVariant {
    /// `|m_2| + ... + |m_{k+1}| + 2 t_1 + ... + 2 t_k = n`
    Free,
    /// Same with an additional `m_1 >= 1` on the left.
    PositiveFirst,
}

/// Counts solutions by enumerating them: `m_i` range over all integers,
/// `t_i` over nonnegative integers, `m_1` over positive integers.
pub fn solution_count(k: u32, n: u32, variant: SolutionVariant) -> u64 {
    fn abs_vars(left: u32, rem: u32, tail: &dyn Fn(u32) -> u64) -> u64 {
        if left == 0 {
            return tail(rem);
        }
        (0..=rem)
            .map(|a| {
                let signs = if a == 0 { 1 } else { 2 };
                signs * abs_vars(left - 1, rem - a, tail)
            })
            .sum()
    }
    fn even_vars(left: u32, rem: u32) -> u64 {
        if left == 0 {
            return u64::from(rem == 0);
        }
        (0..=rem / 2).map(|t| even_vars(left - 1, rem - 2 * t)).sum()
    }
    let tail = |rem: u32| even_vars(k, rem);
    match variant {
        SolutionVariant::Free => abs_vars(k, n, &tail),
        SolutionVariant::PositiveFirst => (1..=n).map(|m1| abs_vars(k, n - m1, &tail)).sum(),
    }
}

/// `C(n + 2k - 1, 2k - 1)` for [`SolutionVariant::Free`] and
/// `C(n + 2k - 1, 2k)` for [`SolutionVariant::PositiveFirst`].
pub fn solution_count_closed_form(k: u32, n: u32, variant: SolutionVariant) -> Int {
    let top = n as i64 + 2 * k as i64 - 1;
    match variant {
        SolutionVariant::Free => binomial(top, 2 * k - 1),
        SolutionVariant::PositiveFirst => binomial(top, 2 * k),
    }
}

/// True when every value in the table is nonnegative.
pub fn all_nonnegative(t: &MomentTable) -> bool {
    t.values.values().all(|v| !v.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn ordinary_and_positive() {
        assert_eq!(ordinary_moment(1, 5).unwrap(), int(0));
        assert_eq!(ordinary_moment(2, 5).unwrap(), int(42));
        assert_eq!(ordinary_moment(0, 5).unwrap(), int(7));
        assert_eq!(positive_moment(1, 5).unwrap(), int(7));
        assert_eq!(positive_moment(0, 5).unwrap(), int(3));
        for j in 0..6 {
            assert_eq!(positive_moment(j, 1).unwrap(), int(0));
        }
    }

    #[test]
    fn symmetrized() {
        assert_eq!(symmetrized_moment(2, 5).unwrap(), int(21));
        assert_eq!(symmetrized_moment(3, 5).unwrap(), int(0));
        // term by term: C(m, 2) over ranks -4, -2, -1, 0, 1, 2, 4
        let terms: i64 = [-4i64, -2, -1, 0, 1, 2, 4].iter().map(|&m| m * (m - 1) / 2).sum();
        assert_eq!(terms, 21);
        assert_eq!(symmetrized_positive_moment(1, 5).unwrap(), int(7));
        assert_eq!(symmetrized_positive_moment(2, 5).unwrap(), int(7));
        assert_eq!(symmetrized_positive_moment(4, 5).unwrap(), int(5));
        assert_eq!(symmetrized_positive_moment(3, 5).unwrap(), int(11));
        assert_eq!(symmetrized_positive_moment(4, 6).unwrap(), int(16));
        assert!(symmetrized_positive_moment(0, 5).is_err());
    }

    #[test]
    fn formulas() {
        assert!(linear_combination_check(MomentFormula::Eta6, 5).unwrap());
        for n in 1..=40 {
            assert!(linear_combination_check(MomentFormula::EtaBar4, n).unwrap(), "n = {n}");
        }
        let (l, r) = MomentFormula::EtaBar5.sides(1).unwrap();
        assert!(l.is_zero() && r.is_zero());
        assert_eq!("etabar5".parse::<MomentFormula>().unwrap(), MomentFormula::EtaBar5);
    }

    #[test]
    fn solution_counts() {
        assert_eq!(solution_count(1, 2, SolutionVariant::Free), 3);
        assert_eq!(solution_count(1, 0, SolutionVariant::Free), 1);
        assert_eq!(solution_count(1, 0, SolutionVariant::PositiveFirst), 0);
        for k in 1..=3 {
            for n in 0..=12 {
                for v in [SolutionVariant::Free, SolutionVariant::PositiveFirst] {
                    assert_eq!(int(solution_count(k, n, v) as i64), solution_count_closed_form(k, n, v));
                }
            }
        }
    }

    #[test]
    fn tables() {
        let t = MomentTable::compute(MomentKind::SymmetrizedPositive, 1, 5).unwrap();
        assert_eq!(t.values[&5], int(7));
        assert!(all_nonnegative(&t));
        let z = MomentTable::compute(MomentKind::Symmetrized, 3, 10).unwrap();
        assert!(z.values.values().all(Zero::is_zero));
        let mut buf = Vec::new();
        MomentTable::compute(MomentKind::Positive, 1, 3).unwrap().write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,value\n1,0\n2,1\n3,2\n");
        assert!(MomentTable::compute(MomentKind::SymmetrizedPositive, 0, 3).is_err());
        assert_eq!("eta-bar".parse::<MomentKind>().unwrap(), MomentKind::SymmetrizedPositive);
    }
}
