//! Exact base arithmetic: rationals, prime fields, dense polynomials,
//! rational functions, and prime ideals of F[x] with their valuations.
//!
//! Everything downstream is built on the [`Field`] trait.  Elements carry
//! their own field context (an `FpElem` knows its modulus), so a single
//! generic polynomial type serves Q and every F_p at once.

mod field;
mod ideal;
mod poly;
mod ratfunc;
pub(crate) mod intops;
pub(crate) mod zpoly;

pub use field::{qi, Field, FpElem, RootsOfUnitySpec};
pub use ideal::{poly_valuation, ratfunc_valuation, split_valuation, PrimeIdealFx};
pub use poly::{inv_mod, mul_mod, pow_mod, pow_mod_big, Poly};
pub use ratfunc::RationalFunction;

/// Arbitrary-precision rationals, stored reduced with positive denominator.
///
/// Re-exported from `num-rational`; it maintains exactly the invariants the
/// rest of the crate relies on (gcd(numerator, denominator) = 1, denominator
/// >= 1) and its `Display`/`FromStr` round-trip the `p/q` text encoding
/// bit-exactly (`3/4`, `-7`, `0`).
pub use num_rational::BigRational;

use thiserror::Error;

/// Errors surfaced by the base-arithmetic layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero polynomial")]
    DivisionByZeroPoly,
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("resultant requires nonzero operands")]
    ResultantZeroOperand,
    #[error("exact division left a nonzero remainder")]
    InexactDivision,
    #[error("expected a monic polynomial of positive degree")]
    NotMonicIrreducibleShape,
    #[error("parse error: {0}")]
    Parse(String),
}
