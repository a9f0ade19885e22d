//! Tame symbols, cyclotomic elements, and their classification machinery.
//!
//! A Steinberg symbol {u, v} over a field F is stored as a formal product
//! of pairs with integer exponents; no K2 relations are applied.  Equality
//! questions are decided only through tame-symbol fingerprints: the tame
//! homomorphism at a prime ideal P of F[x] (or at a rational prime q) sends
//!
//! ```text
//! {u, v}  |->  (-1)^(ab) * u^b / v^a  mod P,      a = v(u), b = v(v),
//! ```
//!
//! into the residue field.  Cyclotomic elements c_n(a) = {a, Phi_n(a)} are
//! the central objects: the module classifies which powers c_l(x)^t stay
//! cyclotomic, counts the resulting subgroups, searches finite fields
//! exhaustively for witness pairs (f, g) realizing a product of cyclotomic
//! generators as a single cyclotomic element, and generates certified
//! sequences (A_i, p_i) showing that cyclotomic subgroups fail to close
//! under taking p-th powers when p^2 divides n.

mod classify;
mod nonclosure;
mod search;
mod symbols;

pub use classify::{
    count_cyclotomic, power_classification, zset, PowerClassification, PowerWitness, ZSet,
};
pub use nonclosure::{
    nonclosure_sequence, verify_certificate, CertificateViolation, NonClosureCertificate,
    NonClosureEntry, NonClosureLimits,
};
pub use search::{
    brute_force_cyclotomicity, BruteForceOutcome, CyclotomicSearch, SearchWitness, Survivor,
};
pub use symbols::{cyclo_tame, tame_fx, tame_q, CyclotomicElement, SymbolProduct};

use crate::algebra::AlgebraError;
use crate::cyclo::CycloError;
use crate::factorx::FactorError;

/// Errors for symbol arithmetic, classification, search, and certificates.
#[derive(Debug, thiserror::Error)]
pub enum K2Error {
    /// Symbols only accept nonzero entries.
    #[error("zero is not a legal symbol entry")]
    ZeroSymbolEntry,
    /// The cyclotomic element c_n(a) requires Phi_n(a) != 0.
    #[error("Phi_{n} vanishes at the given point")]
    VanishingValue { n: u64 },
    /// An argument that must be prime is not.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// The symbol prime l must be >= 5 and different from p.
    #[error("l must be a prime >= 5 distinct from the characteristic, got l = {l}")]
    BadSymbolPrime { l: u64 },
    /// Power and count classifications assume Phi_l irreducible over F_p.
    #[error("Phi_{l} is reducible over F_{p}; {p} is not a primitive root mod {l}")]
    ReducibleOverBase { l: u64, p: u64 },
    /// Exponent outside [1, l-1].
    #[error("exponent {t} outside [1, {max}]")]
    ExponentOutOfRange { t: u64, max: u64 },
    /// Subgroup counting is proved only for n <= (l-3)/2.
    #[error("n = {n} outside the proved range 1..={max}")]
    OutsideProvedRange { n: u64, max: u64 },
    /// The closed-form tame value needs a ratio of linear polynomials.
    #[error("expected a ratio of polynomials of degree <= 1 with nonzero determinant")]
    NotLinearRatio,
    /// Generator matrices must be pairwise essentially distinct.
    #[error("generator matrices {0} and {1} are not essentially distinct")]
    GeneratorsNotDistinct(usize, usize),
    /// The search needs at least one generator matrix.
    #[error("at least one generator matrix is required")]
    EmptyGenerators,
    /// One exponent per generator matrix.
    #[error("expected {expected} exponents, got {got}")]
    ExponentCountMismatch { expected: usize, got: usize },
    /// The requested exhaustive search is too large to enumerate.
    #[error("search space of about {candidates} candidate pairs exceeds the supported size")]
    SearchTooLarge { candidates: u128 },
    /// The non-closure index n must avoid the excluded set {1, 4, 8, 12}.
    #[error("n = {0} is one of the excluded indices 1, 4, 8, 12")]
    ExcludedIndex(u64),
    /// The non-closure construction needs p^2 | n.
    #[error("p^2 = {psq} does not divide n = {n}")]
    NotSquareDivisor { psq: u64, n: u64 },
    /// Search limits ran out before the requested data was produced.
    #[error("search limits exhausted: {detail} (found {found} of {requested})")]
    LimitsExhausted {
        found: usize,
        requested: usize,
        detail: String,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error(transparent)]
    Factor(#[from] FactorError),
}
