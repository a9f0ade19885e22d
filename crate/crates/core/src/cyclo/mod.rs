//! Cyclotomic polynomials and two-variable cyclotomic forms.
//!
//! The univariate side computes the classical cyclotomic polynomial Phi_n
//! over the integers by iterated exact division of x^n - 1, together with
//! reductions to Q and F_p and big-integer evaluation.  The two-variable
//! side homogenizes Phi_l for a prime l >= 5 into
//!
//! ```text
//! Phi_l(f, g) = f^(l-1) + f^(l-2) g + ... + g^(l-1),
//! ```
//!
//! whose degree is (l-1) * max(deg f, deg g) whenever Phi_l is irreducible
//! over the coefficient field (always true over Q; over F_p it is
//! equivalent to p being a primitive root mod l).  Under that hypothesis
//! and gcd(f, g) = 1, every irreducible factor of the form has degree
//! divisible by l - 1, and the form decomposes as
//!
//! ```text
//! Phi_l(f, g) = alpha * Psi^l * prod_i p_i^(r_i),      l does not divide r_i,
//! ```
//!
//! where each prime p_i is the monic normalization of a linear form
//! Phi_l(a_i x + b_i, c_i x + d_i) attached to a basis matrix.
//! [`decompose_form`] recovers this data from a full factorization over
//! F_p, and [`frobenius_descent`] strips powers of the characteristic from
//! exponents, writing f(x) = core(x^(p^r)) with maximal r.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::zpoly::{self, ZPoly};
use crate::algebra::{inv_mod, mul_mod, pow_mod};
use crate::algebra::{AlgebraError, Field, FpElem, Poly};
use crate::algebra::intops::{is_prime_u64, mult_order_u64};
use crate::factorx::{factor_fp, FactorError};
use crate::moebius::{essentially_distinct, Mat2};

/// Errors for cyclotomic polynomial and form computations.
#[derive(Debug, thiserror::Error)]
pub enum CycloError {
    /// The index of a univariate cyclotomic polynomial must be positive.
    #[error("cyclotomic index must be >= 1, got {0}")]
    IndexOutOfRange(u64),
    /// The two-variable form is defined for primes l >= 5 only.
    #[error("form index must be a prime >= 5, got {0}")]
    NotFormPrime(u64),
    /// A prime modulus was required.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// The form Phi_l(f, g) needs l invertible in the coefficient field.
    #[error("form index {l} equals the field characteristic")]
    CharacteristicClash { l: u64 },
    /// Phi_l(f, g) requires f and g not both zero.
    #[error("f and g must not both be zero")]
    BothZero,
    /// The structural decomposition assumes gcd(f, g) = 1.
    #[error("f and g are not coprime")]
    NotCoprimePair,
    /// The structural decomposition assumes Phi_l irreducible over F_p.
    #[error("Phi_{l} is reducible over F_{p}; {p} is not a primitive root mod {l}")]
    ReducibleOverBase { l: u64, p: u64 },
    /// Basis matrices must be pairwise essentially distinct.
    #[error("basis matrices {0} and {1} are not essentially distinct")]
    BasisNotDistinct(usize, usize),
    /// Target exponents, when supplied, must align with the basis.
    #[error("expected {expected} target exponents, got {got}")]
    TargetLengthMismatch { expected: usize, got: usize },
    /// psi_cofactor requires p to be a prime divisor of n.
    #[error("{p} is not a prime divisor of {n}")]
    NotPrimeDivisor { p: u64, n: u64 },
    /// Frobenius descent needs a nonzero polynomial.
    #[error("cannot descend the zero polynomial")]
    ZeroPolynomial,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Factor(#[from] FactorError),
}

// ---------------------------------------------------------------------------
// Univariate cyclotomic polynomials.
// ---------------------------------------------------------------------------

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Integer coefficients of the n-th cyclotomic polynomial, constant term
/// first.
///
/// Computed by iterated exact division: for each divisor d of n in
/// increasing order, Phi_d = (x^d - 1) / prod of Phi_e over proper
/// divisors e of d.  The result is monic of degree phi(n) and divides
/// x^n - 1 exactly.
pub fn cyclotomic_coeffs(n: u64) -> Result<Vec<BigInt>, CycloError> {
    if n == 0 {
        return Err(CycloError::IndexOutOfRange(0));
    }
    let mut table: BTreeMap<u64, ZPoly> = BTreeMap::new();
    for d in divisors(n) {
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        for (e, phi_e) in table.range(..d) {
            if d % e == 0 {
                num = zpoly::exact_div_monic(&num, phi_e);
            }
        }
        table.insert(d, num);
    }
    Ok(table.remove(&n).expect("n is a divisor of itself"))
}

/// The n-th cyclotomic polynomial over Q.
pub fn cyclotomic_poly_q(n: u64) -> Result<Poly<BigRational>, CycloError> {
    Ok(zpoly::to_qpoly(&cyclotomic_coeffs(n)?))
}

/// The n-th cyclotomic polynomial reduced mod a prime p.
pub fn cyclotomic_poly_fp(n: u64, p: u64) -> Result<Poly<FpElem>, CycloError> {
    if !is_prime_u64(p) {
        return Err(CycloError::NotPrime(p));
    }
    let ctx = FpElem::new(0, p);
    cyclotomic_poly_in(n, &ctx)
}

/// The n-th cyclotomic polynomial with coefficients in an arbitrary field,
/// built from the integer coefficients through the field's context element.
pub fn cyclotomic_poly_in<K: Field>(n: u64, ctx: &K) -> Result<Poly<K>, CycloError> {
    let coeffs = cyclotomic_coeffs(n)?
        .iter()
        .map(|c| field_from_bigint(c, ctx))
        .collect();
    Ok(Poly::from_coeffs(coeffs))
}

fn field_from_bigint<K: Field>(c: &BigInt, ctx: &K) -> K {
    let p = ctx.characteristic();
    if p == 0 {
        // Cyclotomic coefficients stay far below i64 range at any index a
        // desk computation reaches.
        let digits = c.to_u64_digits().1;
        let mag = digits.first().copied().unwrap_or(0);
        assert!(
            digits.len() <= 1 && mag <= i64::MAX as u64,
            "cyclotomic coefficient out of i64 range"
        );
        let v = mag as i64;
        ctx.from_i64(if c.is_negative() { -v } else { v })
    } else {
        let p = BigInt::from(p);
        let mut r = c % &p;
        if r.is_negative() {
            r += &p;
        }
        let digits = r.to_u64_digits().1;
        ctx.from_i64(digits.first().copied().unwrap_or(0) as i64)
    }
}

/// Evaluates Phi_n at a big integer.
pub fn cyclotomic_eval(n: u64, x: &BigInt) -> Result<BigInt, CycloError> {
    Ok(zpoly::eval_bigint(&cyclotomic_coeffs(n)?, x))
}

// ---------------------------------------------------------------------------
// The two-variable form.
// ---------------------------------------------------------------------------

/// The homogenized form Phi_l(f, g) = sum of f^j g^(l-1-j) for a prime
/// l >= 5, together with the inputs that produced it.
#[derive(Debug, Clone)]
pub struct CyclotomicForm<K: Field> {
    l: u64,
    f: Poly<K>,
    g: Poly<K>,
    value: Poly<K>,
}

impl<K: Field> CyclotomicForm<K> {
    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn f(&self) -> &Poly<K> {
        &self.f
    }

    pub fn g(&self) -> &Poly<K> {
        &self.g
    }

    pub fn value(&self) -> &Poly<K> {
        &self.value
    }

    pub fn into_value(self) -> Poly<K> {
        self.value
    }
}

/// Builds Phi_l(f, g) for a prime l >= 5 different from the field
/// characteristic, with f and g not both zero.
///
/// The expansion is computed by a Horner scheme in f.  The degree
/// identity deg Phi_l(f, g) = (l-1) * max(deg f, deg g) holds whenever
/// Phi_l is irreducible over the coefficient field (always over Q; over
/// F_p exactly when p is a primitive root mod l).  The constructor does
/// not require that hypothesis, but the factor-degree law and the
/// structural decomposition do.
pub fn cyclotomic_form<K: Field>(
    l: u64,
    f: Poly<K>,
    g: Poly<K>,
) -> Result<CyclotomicForm<K>, CycloError> {
    if l < 5 || !is_prime_u64(l) {
        return Err(CycloError::NotFormPrime(l));
    }
    if f.is_zero() && g.is_zero() {
        return Err(CycloError::BothZero);
    }
    let ctx = f
        .sample()
        .or_else(|| g.sample())
        .expect("not both zero")
        .clone();
    if ctx.characteristic() == l {
        return Err(CycloError::CharacteristicClash { l });
    }
    let one = Poly::constant(ctx.one());
    let mut acc = Poly::zero();
    let mut gpow = one;
    for _ in 0..l {
        acc = acc.mul(&f).add(&gpow);
        gpow = gpow.mul(&g);
    }
    Ok(CyclotomicForm { l, f, g, value: acc })
}

/// The form attached to an invertible matrix [[a, b], [c, d]]:
/// Phi_l(a x + b, c x + d).
pub fn matrix_form<K: Field>(l: u64, m: &Mat2<K>) -> Result<CyclotomicForm<K>, CycloError> {
    let [a, b, c, d] = m.entries();
    let ctx = first_nonzero(m);
    let x = Poly::x(&ctx);
    let f = x.scale(a).add(&Poly::constant(b.clone()));
    let g = x.scale(c).add(&Poly::constant(d.clone()));
    cyclotomic_form(l, f, g)
}

fn first_nonzero<K: Field>(m: &Mat2<K>) -> K {
    m.entries()
        .into_iter()
        .find(|e| !e.is_zero())
        .expect("invertible matrix has a nonzero entry")
        .clone()
}

// ---------------------------------------------------------------------------
// Frobenius descent.
// ---------------------------------------------------------------------------

/// Writes f(x) = core(x^(p^r)) over F_p with r maximal, returning
/// (core, r).
///
/// A polynomial lies in F_p[x^p] exactly when every exponent with a
/// nonzero coefficient is divisible by p, in which case the core is
/// obtained by re-indexing coefficients.  Constant polynomials are
/// returned unchanged with r = 0.
pub fn frobenius_descent(f: &Poly<FpElem>) -> Result<(Poly<FpElem>, u32), CycloError> {
    if f.is_zero() {
        return Err(CycloError::ZeroPolynomial);
    }
    let p = f.sample().expect("nonzero").modulus() as usize;
    let mut core = f.clone();
    let mut r = 0u32;
    while core.degree().unwrap_or(0) > 0 {
        let coeffs = core.coeffs();
        let descends = coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || i % p == 0);
        if !descends {
            break;
        }
        let compressed: Vec<FpElem> = coeffs.iter().step_by(p).cloned().collect();
        core = Poly::from_coeffs(compressed);
        r += 1;
    }
    Ok((core, r))
}

// ---------------------------------------------------------------------------
// Psi cofactor.
// ---------------------------------------------------------------------------

/// The exact quotient Phi_p(x^(n/p)) / Phi_n(x) for a prime p dividing n.
///
/// The quotient is a polynomial identity, so a nonzero remainder is
/// reported as an error only to flag an implementation fault upstream.
pub fn psi_cofactor(n: u64, p: u64) -> Result<Poly<BigRational>, CycloError> {
    if !is_prime_u64(p) || n == 0 || n % p != 0 {
        return Err(CycloError::NotPrimeDivisor { p, n });
    }
    let phi_p = cyclotomic_poly_q(p)?;
    let numerator = phi_p.stretch((n / p) as usize);
    let phi_n = cyclotomic_poly_q(n)?;
    Ok(numerator.exact_div(&phi_n)?)
}

// ---------------------------------------------------------------------------
// Structural decomposition over F_p.
// ---------------------------------------------------------------------------

/// The exact shape alpha * Psi^l * prod_i p_i^(r_i) of a form over F_p,
/// with each prime p_i addressed by the index of its basis matrix.
#[derive(Debug, Clone)]
pub struct Decomposition {
    alpha: FpElem,
    psi: Poly<FpElem>,
    exponents: Vec<(usize, u64)>,
}

impl Decomposition {
    pub fn alpha(&self) -> &FpElem {
        &self.alpha
    }

    pub fn psi(&self) -> &Poly<FpElem> {
        &self.psi
    }

    /// Pairs (basis index, r_i), sorted by basis index; every r_i is
    /// positive and not divisible by l.
    pub fn exponents(&self) -> &[(usize, u64)] {
        &self.exponents
    }

    /// Rebuilds alpha * Psi^l * prod p_i^(r_i) from the same basis the
    /// decomposition was computed against.
    pub fn reassemble(
        &self,
        l: u64,
        basis: &[Mat2<FpElem>],
    ) -> Result<Poly<FpElem>, CycloError> {
        let mut acc = Poly::constant(self.alpha.clone()).mul(&self.psi.pow(l));
        for &(i, r) in &self.exponents {
            let (_, prime) = matrix_form(l, &basis[i])?.into_value().monic();
            acc = acc.mul(&prime.pow(r));
        }
        Ok(acc)
    }

    /// Deterministic JSON record: alpha, Psi coefficients (constant term
    /// first), and the exponent pairs sorted by basis index.
    pub fn to_json(&self) -> serde_json::Value {
        let psi: Vec<u64> = self
            .psi
            .coeffs()
            .iter()
            .map(|c| c.residue())
            .collect();
        serde_json::json!({
            "alpha": self.alpha.residue(),
            "psi": psi,
            "exponents": self
                .exponents
                .iter()
                .map(|(i, r)| serde_json::json!({"basis": i, "r": r}))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha = {}, psi = {}", self.alpha, self.psi)?;
        for (i, r) in &self.exponents {
            write!(f, ", r[{i}] = {r}")?;
        }
        Ok(())
    }
}

/// Outcome of [`decompose_form`]: either the structural data or a
/// witness-backed explanation of why the form does not decompose over
/// the supplied basis.
#[derive(Debug, Clone)]
pub enum DecompositionOutcome {
    Decomposed(Decomposition),
    NoDecomposition { reason: String },
}

impl DecompositionOutcome {
    pub fn decomposition(&self) -> Option<&Decomposition> {
        match self {
            DecompositionOutcome::Decomposed(d) => Some(d),
            DecompositionOutcome::NoDecomposition { .. } => None,
        }
    }
}

/// Decomposes a form Phi_l(f, g) over F_p as alpha * Psi^l * prod
/// p_i^(r_i), matching each prime against the monic normalizations of
/// the basis forms Phi_l(a_i x + b_i, c_i x + d_i).
///
/// Requires gcd(f, g) = 1, p a primitive root mod l (so Phi_l is
/// irreducible over F_p), and pairwise essentially distinct basis
/// matrices.  An irreducible factor whose multiplicity is divisible by l
/// is absorbed into Psi; any other factor must equal a basis prime, else
/// the outcome is `NoDecomposition`.  When `targets` supplies exponents
/// l_i (one per basis matrix), the congruence
/// (f/g)^(r_i) = ((a_i x + b_i)/(c_i x + d_i))^(l_i) mod p_i
/// is additionally verified for every matched index i.
pub fn decompose_form(
    form: &CyclotomicForm<FpElem>,
    basis: &[Mat2<FpElem>],
    targets: Option<&[u64]>,
    seed: u64,
) -> Result<DecompositionOutcome, CycloError> {
    let l = form.l();
    let ctx = form
        .value()
        .sample()
        .expect("form value is nonzero")
        .clone();
    let p = ctx.modulus();
    if mult_order_u64(p % l, l) != l - 1 {
        return Err(CycloError::ReducibleOverBase { l, p });
    }
    if let Some(t) = targets {
        if t.len() != basis.len() {
            return Err(CycloError::TargetLengthMismatch {
                expected: basis.len(),
                got: t.len(),
            });
        }
    }
    if form.f().gcd(form.g()).degree() != Some(0) {
        return Err(CycloError::NotCoprimePair);
    }
    let roots = ctx.roots_of_unity();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if !essentially_distinct(&basis[i], &basis[j], &roots) {
                return Err(CycloError::BasisNotDistinct(i, j));
            }
        }
    }

    let mut primes = Vec::with_capacity(basis.len());
    for m in basis {
        let (_, prime) = matrix_form(l, m)?.into_value().monic();
        debug_assert_eq!(prime.degree(), Some((l - 1) as usize));
        primes.push(prime);
    }

    let factored = factor_fp(form.value(), seed)?;
    let alpha = factored.unit().clone();
    let mut psi = Poly::constant(ctx.one());
    let mut exponents: Vec<(usize, u64)> = Vec::new();
    for (q, mult) in factored.factors() {
        let mult = u64::from(*mult);
        let matched = primes.iter().position(|prime| prime == q);
        match matched {
            Some(i) if mult % l != 0 => exponents.push((i, mult)),
            _ if mult % l == 0 => psi = psi.mul(&q.pow(mult / l)),
            _ => {
                return Ok(DecompositionOutcome::NoDecomposition {
                    reason: format!(
                        "factor {q} has multiplicity {mult} not divisible by {l} \
                         and matches no basis form"
                    ),
                });
            }
        }
    }
    exponents.sort_unstable();

    if let Some(deg) = psi.degree() {
        debug_assert_eq!(deg % (l as usize - 1), 0);
    }

    if let Some(targets) = targets {
        for &(i, r) in &exponents {
            let modulus = &primes[i];
            let u = ratio_mod(form.f(), form.g(), modulus)?;
            let [a, b, c, d] = basis[i].entries();
            let x = Poly::x(&ctx);
            let top = x.scale(a).add(&Poly::constant(b.clone()));
            let bottom = x.scale(c).add(&Poly::constant(d.clone()));
            let v = ratio_mod(&top, &bottom, modulus)?;
            let lhs = pow_mod(&u, r, modulus);
            let rhs = pow_mod(&v, targets[i], modulus);
            if lhs != rhs {
                return Ok(DecompositionOutcome::NoDecomposition {
                    reason: format!(
                        "congruence (f/g)^{r} = (basis {i} ratio)^{} failed \
                         mod its prime",
                        targets[i]
                    ),
                });
            }
        }
    }

    Ok(DecompositionOutcome::Decomposed(Decomposition {
        alpha,
        psi,
        exponents,
    }))
}

/// num / den reduced mod an irreducible modulus coprime to den.
fn ratio_mod(
    num: &Poly<FpElem>,
    den: &Poly<FpElem>,
    modulus: &Poly<FpElem>,
) -> Result<Poly<FpElem>, CycloError> {
    let inv = inv_mod(den, modulus)?;
    Ok(mul_mod(num, &inv, modulus))
}
