//! Polynomial factorization and irreducibility certification.
//!
//! Over a prime field this is complete: squarefree decomposition, then
//! distinct-degree splitting, then seeded equal-degree splitting.  Over the
//! rationals the crate never guesses: `is_irreducible_q` either returns a
//! checkable certificate, exhibits a nontrivial factor, or fails with an
//! explicit `Inconclusive` error.  Prime ideals of either coefficient ring
//! are only constructed through the certified constructors here.

mod fp;
mod newton;
mod rational;

pub use fp::{certified_prime_fp, factor_fp, is_irreducible_fp};
pub use newton::{newton_polygon, NewtonPolygon};
pub use rational::{
    certified_prime_q, is_irreducible_q, rational_roots, QCertificate, QIrreducibility,
};

use std::fmt;

use crate::algebra::{AlgebraError, Field, FpElem, Poly};

/// Errors from factorization and certification.
#[derive(Debug, thiserror::Error)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("expected a positive-degree polynomial, got a constant")]
    ConstantPolynomial,
    #[error("polynomial is not irreducible: {0} divides it")]
    NotIrreducible(String),
    #[error("irreducibility over Q could not be decided for degree {degree}: {reason}")]
    Inconclusive { degree: usize, reason: String },
    #[error("Newton polygon requires a nonzero constant term")]
    ZeroConstantTerm,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A complete factorization `unit * prod_i factor_i^exponent_i` with monic
/// factors, canonically sorted: ascending degree, then lexicographic on the
/// coefficient vector from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<K: Field> {
    unit: K,
    factors: Vec<(Poly<K>, u32)>,
}

impl<K: Field> Factorization<K> {
    pub fn unit(&self) -> &K {
        &self.unit
    }

    /// The sorted `(monic factor, exponent)` pairs.
    pub fn factors(&self) -> &[(Poly<K>, u32)] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiply the factorization back out.
    pub fn expand(&self) -> Poly<K> {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, e) in &self.factors {
            acc = acc.mul(&f.pow(u64::from(*e)));
        }
        acc
    }

    /// Total degree of the expanded product.
    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, e)| f.degree().unwrap_or(0) * (*e as usize))
            .sum()
    }
}

impl<K: Field> fmt::Display for Factorization<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.unit.is_one() || self.factors.is_empty() {
            write!(f, "{}", self.unit)?;
            wrote = true;
        }
        for (g, e) in &self.factors {
            if wrote {
                write!(f, " * ")?;
            }
            write!(f, "({})", g)?;
            if *e > 1 {
                write!(f, "^{}", e)?;
            }
            wrote = true;
        }
        Ok(())
    }
}

/// Specialized constructor used by the finite-field path, where `FpElem`
/// lacks an `Ord` impl with field semantics; sorting compares residues.
impl Factorization<FpElem> {
    pub(crate) fn new_fp(unit: FpElem, mut factors: Vec<(Poly<FpElem>, u32)>) -> Self {
        factors.sort_by(|(a, _), (b, _)| {
            a.degree().cmp(&b.degree()).then_with(|| {
                let ra: Vec<u64> = a.coeffs().iter().map(|c| c.residue()).collect();
                let rb: Vec<u64> = b.coeffs().iter().map(|c| c.residue()).collect();
                ra.cmp(&rb)
            })
        });
        Factorization { unit, factors }
    }
}
