//! Truncated power series in `q` whose coefficients are sparse Laurent
//! polynomials in a small number of auxiliary variables `x_1..x_v`.
//!
//! A series of order `O` carries exact coefficients for `q^0..=q^O`.
//! Binary operations truncate to the smaller order and never read past it.
//! With `v = 0` every coefficient is a plain constant and the series is an
//! ordinary univariate power series.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::scalar::Coefficient;

/// Sparse Laurent polynomial: exponent vector of length `num_vars` to a
/// nonzero coefficient. Terms iterate in lexicographic exponent order.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<C> {
    num_vars: usize,
    terms: BTreeMap<Vec<i32>, C>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero(num_vars: usize) -> Self {
        LaurentPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: C) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(vec![0; num_vars], c);
        p
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, C::one())
    }

    /// `c * x^exponents`.
    pub fn monomial(exponents: Vec<i32>, c: C) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// `x_var^power` with unit coefficient; `var` is zero-based.
    pub fn variable_power(num_vars: usize, var: usize, power: i32) -> Self {
        let mut e = vec![0; num_vars];
        e[var] = power;
        Self::monomial(e, C::one())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[i32]) -> C {
        self.terms.get(exponents).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&vec![0; self.num_vars])
    }

    /// Value at `x_1 = ... = x_v = 1`.
    pub fn sum_of_coefficients(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Largest `|e_j|` over all terms and variables.
    pub fn max_abs_degree(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().map(|x| x.unsigned_abs()))
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, exponents: Vec<i32>, c: C) {
        assert_eq!(exponents.len(), self.num_vars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.num_vars);
        out.add_product(self, other);
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.num_vars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.clone() * c.clone());
        }
        out
    }

    /// `self += a * b`; all three share `num_vars`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                self.add_term(e, ca.clone() * cb.clone());
            }
        }
    }

    /// Embeds a constant (zero-variable) polynomial into `num_vars` variables.
    fn lift(&self, num_vars: usize) -> Self {
        assert_eq!(self.num_vars, 0);
        match self.terms.get(&Vec::new()) {
            Some(c) => Self::constant(num_vars, c.clone()),
            None => Self::zero(num_vars),
        }
    }

    fn retain(&mut self, mut keep: impl FnMut(&[i32]) -> bool) {
        self.terms.retain(|e, _| keep(e));
    }
}

/// Power series in `q` truncated after `q^order`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    order: usize,
    num_vars: usize,
    coeffs: Vec<LaurentPoly<C>>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn zero(order: usize, num_vars: usize) -> Self {
        TruncatedSeries {
            order,
            num_vars,
            coeffs: vec![LaurentPoly::zero(num_vars); order + 1],
        }
    }

    pub fn one(order: usize, num_vars: usize) -> Self {
        let mut s = Self::zero(order, num_vars);
        s.coeffs[0] = LaurentPoly::one(num_vars);
        s
    }

    /// Univariate series from its leading scalar coefficients; missing ones
    /// are zero and those beyond `order` are dropped.
    pub fn from_scalars(order: usize, scalars: &[C]) -> Self {
        let mut s = Self::zero(order, 0);
        for (slot, c) in s.coeffs.iter_mut().zip(scalars) {
            *slot = LaurentPoly::constant(0, c.clone());
        }
        s
    }

    pub fn from_coeffs(order: usize, num_vars: usize, coeffs: Vec<LaurentPoly<C>>) -> Result<Self> {
        if coeffs.len() != order + 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                order + 1,
                coeffs.len()
            )));
        }
        if let Some(bad) = coeffs.iter().find(|p| p.num_vars != num_vars) {
            return Err(Error::VarMismatch {
                left: num_vars,
                right: bad.num_vars,
            });
        }
        Ok(TruncatedSeries {
            order,
            num_vars,
            coeffs,
        })
    }

    /// `c * q^power`; zero when `power > order`.
    pub fn q_monomial(order: usize, power: usize, c: LaurentPoly<C>) -> Self {
        let mut s = Self::zero(order, c.num_vars);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn coeff(&self, n: usize) -> Result<&LaurentPoly<C>> {
        self.coeffs.get(n).ok_or(Error::BeyondOrder {
            n,
            order: self.order,
        })
    }

    pub fn coeffs(&self) -> &[LaurentPoly<C>] {
        &self.coeffs
    }

    /// Exact coefficient of `x^exponents q^n`.
    pub fn coefficient(&self, n: usize, exponents: &[i32]) -> Result<C> {
        if exponents.len() != self.num_vars {
            return Err(Error::VarMismatch {
                left: self.num_vars,
                right: exponents.len(),
            });
        }
        Ok(self.coeff(n)?.coefficient(exponents))
    }

    /// Constant terms of every coefficient, `q^0..=q^order`.
    pub fn scalars(&self) -> Vec<C> {
        self.coeffs.iter().map(LaurentPoly::constant_term).collect()
    }

    /// The series with every `x_j` set to 1.
    pub fn at_unit_variables(&self) -> TruncatedSeries<C> {
        let sums: Vec<C> = self.coeffs.iter().map(LaurentPoly::sum_of_coefficients).collect();
        TruncatedSeries::from_scalars(self.order, &sums)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            num_vars: self.num_vars,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Embeds a constant-coefficient series into `num_vars` variables.
    pub fn lift(&self, num_vars: usize) -> Result<Self> {
        if self.num_vars != 0 {
            return Err(Error::VarMismatch {
                left: 0,
                right: self.num_vars,
            });
        }
        Ok(TruncatedSeries {
            order: self.order,
            num_vars,
            coeffs: self.coeffs.iter().map(|p| p.lift(num_vars)).collect(),
        })
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].add(&other.coeffs[n]))
            .collect::<Result<_>>()?;
        Self::from_coeffs(order, self.num_vars, coeffs)
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            order: self.order,
            num_vars: self.num_vars,
            coeffs: self.coeffs.iter().map(LaurentPoly::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let order = self.order.min(other.order);
        let mut out = Self::zero(order, self.num_vars);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j].add_product(a, b);
                }
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn mul_poly(&self, p: &LaurentPoly<C>) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mul(p))
            .collect::<Result<_>>()?;
        Self::from_coeffs(self.order, self.num_vars, coeffs)
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries {
            order: self.order,
            num_vars: self.num_vars,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplies by `q^power` keeping the order; shifted-out terms vanish.
    pub fn shift(&self, power: usize) -> Self {
        let mut out = Self::zero(self.order, self.num_vars);
        for n in power..=self.order {
            out.coeffs[n] = self.coeffs[n - power].clone();
        }
        out
    }

    /// Multiplicative inverse of a series whose `q^0` coefficient is the
    /// constant `+1` or `-1`.
    pub fn invert_unit(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let lead = c0.constant_term();
        if c0.len() != 1 || !lead.is_unit() {
            return Err(Error::NonUnit);
        }
        // lead is its own inverse
        let mut out = Self::zero(self.order, self.num_vars);
        out.coeffs[0] = LaurentPoly::constant(self.num_vars, lead.clone());
        for n in 1..=self.order {
            let mut acc = LaurentPoly::zero(self.num_vars);
            for i in 1..=n {
                if !self.coeffs[i].is_zero() && !out.coeffs[n - i].is_zero() {
                    acc.add_product(&self.coeffs[i], &out.coeffs[n - i]);
                }
            }
            out.coeffs[n] = acc.scale(&-lead.clone());
        }
        Ok(out)
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut out = Self::one(self.order, self.num_vars);
        for _ in 0..exponent {
            out = out.mul(self).expect("same variables");
        }
        out
    }

    /// Drops every monomial with some `|e_j| > max_degree`.
    pub fn prune_x_degree(&self, max_degree: u32) -> Self {
        let mut out = self.clone();
        for p in &mut out.coeffs {
            p.retain(|e| e.iter().all(|x| x.unsigned_abs() <= max_degree));
        }
        out
    }
}

impl<C: Coefficient + Display> TruncatedSeries<C> {
    /// Golden-file form: `{"order", "num_vars", "terms": [{"q", "x", "c"}]}`,
    /// terms sorted by `(q, x)`, coefficients as decimal strings.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .enumerate()
            .flat_map(|(q, p)| {
                p.terms()
                    .map(move |(x, c)| json!({"q": q, "x": x, "c": c.to_string()}))
            })
            .collect();
        json!({"order": self.order, "num_vars": self.num_vars, "terms": terms})
    }
}

/// `(q;q)_inf = prod_{i>=1} (1 - q^i)` from the pentagonal number theorem:
/// coefficient `(-1)^j` at `q^(j(3j-1)/2)` for every integer `j`, zero elsewhere.
pub fn euler_product<C: Coefficient>(order: usize) -> TruncatedSeries<C> {
    let mut c = vec![C::zero(); order + 1];
    c[0] = C::one();
    for j in 1usize.. {
        let sign = if j % 2 == 1 { -C::one() } else { C::one() };
        let g1 = j * (3 * j - 1) / 2;
        if g1 > order {
            break;
        }
        c[g1] = sign.clone();
        let g2 = j * (3 * j + 1) / 2;
        if g2 <= order {
            c[g2] = sign;
        }
    }
    TruncatedSeries::from_scalars(order, &c)
}

/// `1 / (q;q)_inf`, the partition generating function.
pub fn partition_gf<C: Coefficient>(order: usize) -> TruncatedSeries<C> {
    euler_product::<C>(order)
        .invert_unit()
        .expect("euler product has unit constant term")
}

/// `(1/(q;q)_inf) * sum_{n>=1} (-1)^(n-1) q^(first(n)) * body(n)`.
///
/// The outer sum stops at the first `n` whose leading exponent `first(n)`
/// exceeds `order`; `first` is increasing in `n`, so all later terms vanish.
/// `body(n, o)` is evaluated at the reduced order `o = order - first(n)`.
fn outer_sum<C, E, B>(order: usize, num_vars: usize, first: E, body: B) -> Result<TruncatedSeries<C>>
where
    C: Coefficient,
    E: Fn(usize) -> usize,
    B: Fn(usize, usize) -> Result<TruncatedSeries<C>>,
{
    let mut acc = TruncatedSeries::zero(order, num_vars);
    for n in 1.. {
        let e = first(n);
        if e > order {
            break;
        }
        let term = body(n, order - e)?;
        let mut shifted = TruncatedSeries::zero(order, num_vars);
        for (i, p) in term.coeffs.into_iter().enumerate() {
            shifted.coeffs[i + e] = p;
        }
        acc = if n % 2 == 1 {
            acc.add(&shifted)?
        } else {
            acc.sub(&shifted)?
        };
    }
    partition_gf::<C>(order).lift(num_vars)?.mul(&acc)
}

/// `1 - c * q^n` at the given order.
fn one_minus<C: Coefficient>(order: usize, n: usize, c: LaurentPoly<C>) -> TruncatedSeries<C> {
    let num_vars = c.num_vars();
    TruncatedSeries::one(order, num_vars)
        .sub(&TruncatedSeries::q_monomial(order, n, c))
        .expect("same variables")
}

/// Generating function of `N(m, n)` in `n`:
/// `(1/(q;q)_inf) sum_{n>=1} (-1)^(n-1) q^(n(3n-1)/2 + |m| n) (1 - q^n)`.
///
/// The `q^0` coefficient is 0 for every `m` (the leading exponent is
/// `1 + |m|`).
pub fn rank_gf<C: Coefficient>(m: i64, order: usize) -> TruncatedSeries<C> {
    let am = m.unsigned_abs() as usize;
    outer_sum(
        order,
        0,
        |n| n * (3 * n - 1) / 2 + am * n,
        |n, o| Ok(one_minus(o, n, LaurentPoly::one(0))),
    )
    .expect("univariate")
}

fn eta_bar_gf<C: Coefficient>(order: usize, first: impl Fn(usize) -> usize, power: u32) -> TruncatedSeries<C> {
    outer_sum(order, 0, first, |n, o| {
        Ok(one_minus(o, n, LaurentPoly::one(0)).invert_unit()?.pow(power))
    })
    .expect("univariate")
}

/// Generating function of the odd symmetrized positive moment `eta_bar_{2k-1}(n)`:
/// `(1/(q;q)_inf) sum_{n>=1} (-1)^(n-1) q^(n(3n-1)/2 + kn) / (1 - q^n)^(2k-1)`.
pub fn eta_bar_odd_gf<C: Coefficient>(k: u32, order: usize) -> Result<TruncatedSeries<C>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let k = k as usize;
    Ok(eta_bar_gf(order, |n| n * (3 * n - 1) / 2 + k * n, 2 * k as u32 - 1))
}

/// Generating function of the even symmetrized positive moment `eta_bar_{2k}(n)`:
/// `(1/(q;q)_inf) sum_{n>=1} (-1)^(n-1) q^(n(3n+1)/2 + kn) / (1 - q^n)^(2k)`.
pub fn eta_bar_even_gf<C: Coefficient>(k: u32, order: usize) -> Result<TruncatedSeries<C>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let k = k as usize;
    Ok(eta_bar_gf(order, |n| n * (3 * n + 1) / 2 + k * n, 2 * k as u32))
}

/// `1 / ((1 - x q^n)(1 - x^{-1} q^n))` for the zero-based variable `var`,
/// with both factors expanded as geometric series by series inversion.
pub fn bilateral_kernel<C: Coefficient>(
    order: usize,
    num_vars: usize,
    var: usize,
    n: usize,
) -> TruncatedSeries<C> {
    let up = one_minus(order, n, LaurentPoly::variable_power(num_vars, var, 1));
    let down = one_minus(order, n, LaurentPoly::variable_power(num_vars, var, -1));
    let up = up.invert_unit().expect("unit");
    let down = down.invert_unit().expect("unit");
    up.mul(&down).expect("same variables")
}

fn check_marked_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    Limits::global().check_gf_k(k)
}

/// Multivariate generating function of `D_{k+1}(0, m_2, ..., m_{k+1}; n)`:
/// the coefficient of `x_1^{m_2} ... x_k^{m_{k+1}} q^n`, from
///
/// `(1/(q;q)_inf) sum_{n>=1} (-1)^(n-1) q^(n(3n-1)/2 + kn) (1 - q^n)
///   / prod_{j=1..k} (1 - x_j q^n)(1 - x_j^{-1} q^n)`.
///
/// `max_x_degree` optionally drops monomials with some `|m_i|` above it;
/// retained coefficients are unaffected.
pub fn marked_zero_rank_gf<C: Coefficient>(
    k: usize,
    order: usize,
    max_x_degree: Option<u32>,
) -> Result<TruncatedSeries<C>> {
    check_marked_k(k)?;
    let s = outer_sum(
        order,
        k,
        |n| n * (3 * n - 1) / 2 + k * n,
        |n, o| {
            let mut t = one_minus(o, n, LaurentPoly::one(k));
            for var in 0..k {
                t = t.mul(&bilateral_kernel(o, k, var, n))?;
            }
            Ok(t)
        },
    )?;
    Ok(match max_x_degree {
        Some(d) => s.prune_x_degree(d),
        None => s,
    })
}

/// Multivariate generating function of `D_{k+1}(m_1, ..., m_{k+1}; n)` for
/// `m_1 > 0`, in `k + 1` variables:
///
/// `(1/(q;q)_inf) sum_{n>=1} (-1)^(n-1) q^(n(3n+1)/2 + kn) x_1 (1 - q^n)
///   / ((1 - x_1 q^n) prod_{j=2..k+1} (1 - x_j q^n)(1 - x_j^{-1} q^n))`.
pub fn marked_positive_rank_gf<C: Coefficient>(
    k: usize,
    order: usize,
    max_x_degree: Option<u32>,
) -> Result<TruncatedSeries<C>> {
    check_marked_k(k)?;
    let v = k + 1;
    let s = outer_sum(
        order,
        v,
        |n| n * (3 * n + 1) / 2 + k * n,
        |n, o| {
            let x1 = LaurentPoly::variable_power(v, 0, 1);
            let mut t = one_minus(o, n, LaurentPoly::one(v))
                .mul(&one_minus(o, n, x1.clone()).invert_unit()?)?
                .mul_poly(&x1)?;
            for var in 1..v {
                t = t.mul(&bilateral_kernel(o, v, var, n))?;
            }
            Ok(t)
        },
    )?;
    Ok(match max_x_degree {
        Some(d) => s.prune_x_degree(d),
        None => s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Int, Rational, Series};

    fn uni(order: usize, c: &[i64]) -> TruncatedSeries<i64> {
        TruncatedSeries::from_scalars(order, c)
    }

    #[test]
    fn add_mul_basics() {
        let a = uni(2, &[1, 1]);
        let b = uni(2, &[1, -1]);
        assert_eq!(a.mul(&b).unwrap().scalars(), vec![1, 0, -1]);
        assert_eq!(a.mul(&TruncatedSeries::one(2, 0)).unwrap(), a);
        assert_eq!(a.add(&b).unwrap().scalars(), vec![2, 0, 0]);
        assert_eq!(a.sub(&a).unwrap(), TruncatedSeries::zero(2, 0));
    }

    #[test]
    fn order_is_minimum() {
        let a = uni(5, &[1, 2, 3, 4, 5, 6]);
        let b = uni(3, &[1, 1, 1, 1]);
        assert_eq!(a.mul(&b).unwrap().order(), 3);
        assert_eq!(a.add(&b).unwrap().order(), 3);
        assert_eq!(a.mul(&b).unwrap().scalars(), vec![1, 3, 6, 10]);
    }

    #[test]
    fn var_mismatch() {
        let a: Series = TruncatedSeries::one(3, 0);
        let b: Series = TruncatedSeries::one(3, 1);
        assert!(matches!(a.mul(&b), Err(Error::VarMismatch { .. })));
        assert!(matches!(a.add(&b), Err(Error::VarMismatch { .. })));
    }

    #[test]
    fn inversion() {
        let g = uni(4, &[1, -1]).invert_unit().unwrap();
        assert_eq!(g.scalars(), vec![1; 5]);
        assert_eq!(uni(4, &[1]).invert_unit().unwrap(), uni(4, &[1]));
        assert_eq!(uni(3, &[-1, 1]).invert_unit().unwrap().scalars(), vec![-1, -1, -1, -1]);
        assert_eq!(uni(4, &[2, 1]).invert_unit(), Err(Error::NonUnit));
        assert_eq!(uni(4, &[0, 1]).invert_unit(), Err(Error::NonUnit));
        // a monomial x is not a unit of the coefficient ring we allow
        let xs = TruncatedSeries::<i64>::q_monomial(3, 0, LaurentPoly::variable_power(1, 0, 1));
        assert_eq!(xs.invert_unit(), Err(Error::NonUnit));
    }

    #[test]
    fn euler_product_matches_direct_expansion() {
        let order = 40;
        let mut direct = TruncatedSeries::<i64>::one(order, 0);
        for i in 1..=order {
            direct = direct.mul(&one_minus(order, i, LaurentPoly::one(0))).unwrap();
        }
        assert_eq!(euler_product::<i64>(order), direct);
        assert_eq!(euler_product::<i64>(7).scalars(), vec![1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(euler_product::<i64>(0).scalars(), vec![1]);
        assert_eq!(euler_product::<i64>(12).scalars()[12], -1);
        assert_eq!(euler_product::<i64>(15).scalars()[15], -1);
    }

    #[test]
    fn euler_identity() {
        let p = partition_gf::<Int>(30);
        let e = euler_product::<Int>(30);
        assert_eq!(p.mul(&e).unwrap(), TruncatedSeries::one(30, 0));
        let want = [1, 1, 2, 3, 5, 7, 11, 15];
        assert_eq!(p.scalars()[..8], want.map(Int::from));
    }

    #[test]
    fn rank_gf_small() {
        let s = rank_gf::<Int>(0, 10);
        assert_eq!(s.coefficient(5, &[]).unwrap(), Int::from(1));
        assert_eq!(s.coefficient(0, &[]).unwrap(), Int::from(0));
        assert_eq!(rank_gf::<Int>(2, 10).coefficient(5, &[]).unwrap(), Int::from(1));
        assert_eq!(rank_gf::<Int>(-2, 10), rank_gf::<Int>(2, 10));
        assert!(matches!(s.coefficient(11, &[]), Err(Error::BeyondOrder { n: 11, order: 10 })));
    }

    #[test]
    fn rank_gf_truncation_boundary() {
        // m = 3: leading exponents 4, 11, 24, ... ; order 10 keeps only n = 1.
        let s = rank_gf::<i64>(3, 10);
        let p = partition_gf::<i64>(10);
        let mut direct = vec![0i64; 11];
        for i in 0..=10 {
            if i + 4 <= 10 {
                direct[i + 4] += p.scalars()[i];
            }
            if i + 5 <= 10 {
                direct[i + 5] -= p.scalars()[i];
            }
        }
        assert_eq!(s.scalars(), direct);
        assert_eq!(rank_gf::<i64>(3, 3).scalars(), vec![0; 4]);
    }

    #[test]
    fn eta_bar_gf_values() {
        let odd = eta_bar_odd_gf::<Int>(1, 10).unwrap();
        assert_eq!(odd.coefficient(5, &[]).unwrap(), Int::from(7));
        assert_eq!(odd.coefficient(0, &[]).unwrap(), Int::from(0));
        let even = eta_bar_even_gf::<Int>(1, 10).unwrap();
        assert_eq!(even.coefficient(5, &[]).unwrap(), Int::from(7));
        assert_eq!(even.coefficient(0, &[]).unwrap(), Int::from(0));
        // values frozen from sum_{m>=1} C(m+1, 3) N(m, 5) and C(m+1, 4) N(m, 6)
        assert_eq!(eta_bar_odd_gf::<Int>(2, 10).unwrap().scalars()[5], Int::from(11));
        assert_eq!(eta_bar_even_gf::<Int>(2, 10).unwrap().scalars()[6], Int::from(16));
        assert!(eta_bar_odd_gf::<Int>(0, 3).is_err());
    }

    #[test]
    fn rational_coefficients_agree() {
        let a = eta_bar_even_gf::<Rational>(2, 15).unwrap();
        let b = eta_bar_even_gf::<Int>(2, 15).unwrap();
        let a: Vec<String> = a.scalars().iter().map(|r| r.to_string()).collect();
        let b: Vec<String> = b.scalars().iter().map(|r| r.to_string()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn kernel_identity_against_double_sum() {
        // sum_{a in Z} sum_{b >= 0} x^a q^{n(|a| + 2b)}
        for order in [0, 5, 13] {
            for n in 1..=4 {
                let kernel = bilateral_kernel::<i64>(order, 2, 1, n);
                let mut direct = TruncatedSeries::<i64>::zero(order, 2);
                let bound = (order / n) as i32;
                for a in -bound..=bound {
                    for b in 0..=bound {
                        let e = n * (a.unsigned_abs() as usize + 2 * b as usize);
                        if e <= order {
                            direct = direct
                                .add(&TruncatedSeries::q_monomial(order, e, LaurentPoly::monomial(vec![0, a], 1)))
                                .unwrap();
                        }
                    }
                }
                assert_eq!(kernel, direct, "order={order} n={n}");
            }
        }
    }

    #[test]
    fn marked_zero_k1() {
        let s = marked_zero_rank_gf::<Int>(1, 12, None).unwrap();
        assert_eq!(s.num_vars(), 1);
        assert_eq!(s.coefficient(5, &[0]).unwrap(), Int::from(1));
        assert_eq!(s.coeff(5).unwrap().sum_of_coefficients(), Int::from(7));
        for n in 0..=12 {
            for (e, c) in s.coeff(n).unwrap().terms() {
                assert_eq!(&s.coefficient(n, &[-e[0]]).unwrap(), c);
            }
        }
        assert!(marked_zero_rank_gf::<Int>(4, 5, None).unwrap_err().is_refusal());
        assert!(marked_zero_rank_gf::<Int>(0, 5, None).is_err());
    }

    #[test]
    fn marked_positive_k1() {
        let s = marked_positive_rank_gf::<Int>(1, 12, None).unwrap();
        assert_eq!(s.num_vars(), 2);
        assert_eq!(s.coeff(5).unwrap().sum_of_coefficients(), Int::from(7));
        // D_2(1,0;5): (D=1, alpha1=(1,1), alpha2=(1), beta2=(1)) and (D=1, alpha1=(1,1,1), beta1=(1))
        assert_eq!(s.coefficient(5, &[1, 0]).unwrap(), Int::from(2));
        for p in s.coeffs() {
            assert!(p.terms().all(|(e, _)| e[0] >= 1));
        }
        assert!(marked_positive_rank_gf::<Int>(4, 5, None).unwrap_err().is_refusal());
    }

    #[test]
    fn specialization_recovers_eta_bar_gfs() {
        for k in 1..=2usize {
            let z = marked_zero_rank_gf::<Int>(k, 14, None).unwrap().at_unit_variables();
            assert_eq!(z, eta_bar_odd_gf::<Int>(k as u32, 14).unwrap());
            let p = marked_positive_rank_gf::<Int>(k, 14, None).unwrap().at_unit_variables();
            assert_eq!(p, eta_bar_even_gf::<Int>(k as u32, 14).unwrap());
        }
    }

    #[test]
    fn degree_pruning_keeps_low_terms() {
        let full = marked_zero_rank_gf::<Int>(2, 12, None).unwrap();
        let pruned = marked_zero_rank_gf::<Int>(2, 12, Some(1)).unwrap();
        for n in 0..=12 {
            for (e, c) in pruned.coeff(n).unwrap().terms() {
                assert!(e.iter().all(|x| x.abs() <= 1));
                assert_eq!(&full.coefficient(n, e).unwrap(), c);
            }
            assert!(pruned.coeff(n).unwrap().max_abs_degree() <= 1);
        }
    }

    #[test]
    fn coefficient_extraction_errors() {
        let s = uni(2, &[1, 0, -1]);
        assert_eq!(s.coefficient(2, &[]).unwrap(), -1);
        assert!(matches!(s.coefficient(3, &[]), Err(Error::BeyondOrder { .. })));
        assert!(matches!(s.coefficient(1, &[0]), Err(Error::VarMismatch { .. })));
    }

    #[test]
    fn json_dump() {
        let s = TruncatedSeries::<Int>::from_scalars(2, &[Int::from(1), Int::from(0), Int::from(-1)]);
        assert_eq!(
            s.to_json().to_string(),
            r#"{"order":2,"num_vars":0,"terms":[{"q":0,"x":[],"c":"1"},{"q":2,"x":[],"c":"-1"}]}"#
        );
        let m = marked_zero_rank_gf::<Int>(1, 4, None).unwrap().to_json();
        let terms = m["terms"].as_array().unwrap();
        let keys: Vec<(u64, i64)> = terms
            .iter()
            .map(|t| (t["q"].as_u64().unwrap(), t["x"][0].as_i64().unwrap()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
