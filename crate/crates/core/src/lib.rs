//! Exact Dyson-rank statistics of integer partitions.
//!
//! The crate is split along the computation paths that the verification
//! harness cross-checks against each other:
//!
//! - [`partitions`]: brute-force enumeration, ranks and rank distributions `N(m, n)`.
//! - [`qseries`]: truncated power series in `q` with Laurent-polynomial coefficients,
//!   and the rank / moment / marked-symbol generating functions built from them.
//! - [`durfee`]: k-marked Durfee symbols, their rank vectors and exhaustive enumeration.
//! - [`moments`]: ordinary, positive and symmetrized rank moments, and the
//!   solution counters with their binomial closed forms.
//! - [`identities`]: named verifications producing [`identities::VerificationReport`]s.
//!
//! The algebraic layer is generic over the coefficient ring through
//! [`Coefficient`]; the aliases below fix it to arbitrary-precision integers
//! or rationals.

pub mod durfee;
pub mod error;
pub mod identities;
pub mod limits;
pub mod moments;
pub mod partitions;
pub mod qseries;
mod scalar;

pub use error::{Error, Result};
pub use limits::Limits;
pub use scalar::{binomial, Coefficient};

/// Arbitrary-precision integer used for every count that can outgrow `u64`.
pub type Int = num_bigint::BigInt;
/// Exact rational, used where the moment identities carry fractional weights.
pub type Rational = num_rational::BigRational;

/// Sparse Laurent polynomial with integer coefficients.
pub type Poly = qseries::LaurentPoly<Int>;
/// Truncated `q`-series with integer Laurent-polynomial coefficients.
pub type Series = qseries::TruncatedSeries<Int>;
/// Truncated `q`-series over the rationals.
pub type RationalSeries = qseries::TruncatedSeries<Rational>;
