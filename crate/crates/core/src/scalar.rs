use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

/// Coefficient ring for Laurent polynomials and truncated series.
///
/// Implemented for every exact numeric type satisfying the bounds: machine
/// integers (`i64`, `i128`), [`crate::Int`] and [`crate::Rational`].
/// Machine integers overflow silently in release builds; use them only where
/// the magnitudes are known to be small.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every exact ring embeds i64")
    }

    /// True for `+1` and `-1`, the units admitted by series inversion.
    fn is_unit(&self) -> bool {
        self.is_one() || (-self.clone()).is_one()
    }
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + Display
        + PartialEq
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Polynomial binomial coefficient `C(x, k) = x (x-1) ... (x-k+1) / k!`,
/// defined for every integer `x`, including negative ones.
pub fn binomial(x: i64, k: u32) -> crate::Int {
    let mut num = crate::Int::one();
    let mut den = crate::Int::one();
    for i in 0..k as i64 {
        num *= x - i;
        den *= i + 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), Int::from(10));
        assert_eq!(binomial(3, 4), Int::from(0));
        assert_eq!(binomial(-4, 2), Int::from(10));
        assert_eq!(binomial(-1, 3), Int::from(-1));
        assert_eq!(binomial(0, 0), Int::from(1));
        assert_eq!(binomial(-7, 0), Int::from(1));
    }

    #[test]
    fn units() {
        assert!(1i64.is_unit());
        assert!((-1i64).is_unit());
        assert!(!2i64.is_unit());
        assert!(!Int::from(0).is_unit());
        assert!(crate::Rational::from_int(-1).is_unit());
    }
}
