//! Exact arithmetic for cyclotomic elements in K2 of fields.
//!
//! The crate computes with symbols {a, b} in the Milnor K2 group of a
//! rational function field F(x) or of Q, and with the cyclotomic elements
//! c_n(a) = {a, Phi_n(a)} built from cyclotomic polynomials.  Everything is
//! exact: rationals are arbitrary precision, finite fields are prime fields
//! F_p, and no floating point is used anywhere.
//!
//! Module map:
//!
//! * [`algebra`]: rationals, prime fields, dense polynomials, rational
//!   functions, prime ideals of F[x], valuations.
//! * [`factorx`]: polynomial factorization over F_p, irreducibility
//!   certificates over Q, Newton polygons.
//! * [`arith`]: integer helpers (primality, multiplicative orders,
//!   primitive prime divisors, Selmer trinomials, a quartic diophantine
//!   scan).
//! * [`moebius`]: 2x2 matrix actions, PGL(2, F) classes, essential
//!   distinctness of generator matrices.
//! * [`cyclo`]: cyclotomic polynomials and two-variable cyclotomic forms,
//!   Frobenius descent, structural decomposition of forms.
//! * [`k2tame`]: tame symbols, cyclotomic elements, power classification,
//!   subgroup counts, brute-force witness search, non-closure certificates.
//! * [`genus`]: genus of Kummer covers of the rational function field and
//!   the finiteness classification it implies.
//! * [`numfield`]: quotient rings Q[x]/(f) with certified irreducible f,
//!   norms via resultants, and the number-field identity checks.

pub mod algebra;
pub mod arith;
pub mod cyclo;
pub mod factorx;
pub mod genus;
pub(crate) mod intfactor;
pub mod k2tame;
pub mod moebius;
pub mod numfield;
pub mod rng;
