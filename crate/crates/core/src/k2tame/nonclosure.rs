//! Certified sequences showing that the group generated by cyclotomic
//! elements c_n(a) over Q fails to be closed under extracting p-th powers
//! when p^2 divides n (excluding n in {1, 4, 8, 12}).
//!
//! Each certificate entry carries a base A_i and a fresh prime p_i with
//! p_i exactly dividing Phi_n(A_i), p_i coprime to everything used before,
//! and A_i^(pj) != 1 mod p_i for 0 < pj < n.  The bases have the form
//! A_i = k * M_i (possibly shifted once by p_i to force valuation one),
//! where M_i is a product of the resultant bound m_0 = |res(Phi_n,
//! Phi_n')|, all primes up to max(n, p, 20), and the previously found
//! primes.  Since Phi_n(0) = 1, the value Phi_n(k M_i) is automatically
//! coprime to M_i, so every prime factor of it is structurally fresh; a
//! prime q dividing Phi_n(A) with q > n forces A to have order exactly n
//! mod q, which yields the power conditions for free.  All conditions are
//! still re-verified explicitly, both at generation time and in
//! [`verify_certificate`].

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::K2Error;
use crate::algebra::intops::{is_prime_u64, primes_up_to};
use crate::algebra::Poly;
use crate::cyclo::{cyclotomic_coeffs, cyclotomic_eval, cyclotomic_poly_q};

/// Search limits for certificate generation.
#[derive(Debug, Clone, Copy)]
pub struct NonClosureLimits {
    /// Trial-division bound for prime factors of Phi_n(A).
    pub trial_bound: u64,
    /// Maximum multiplier k tried per entry.
    pub max_k: u64,
}

impl Default for NonClosureLimits {
    fn default() -> Self {
        NonClosureLimits {
            trial_bound: 1_000_000,
            max_k: 200,
        }
    }
}

mod biguint_string {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::from_str(&s).map_err(serde::de::Error::custom)
    }
}

/// One certified pair (A_i, p_i).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonClosureEntry {
    /// Multiplier: the unshifted base is k * M_i.
    k: u64,
    /// The base A_i, as a decimal string in serialized form.
    #[serde(with = "biguint_string")]
    a: BigUint,
    /// The fresh prime p_i exactly dividing Phi_n(A_i).
    prime: u64,
    /// Whether A_i = k * M_i + p_i was used to force valuation one.
    shifted: bool,
    /// Pairs (e, A_i^e mod p_i) for e = p, 2p, ..., n - p; all != 1.
    power_residues: Vec<(u64, u64)>,
}

impl NonClosureEntry {
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn shifted(&self) -> bool {
        self.shifted
    }

    pub fn power_residues(&self) -> &[(u64, u64)] {
        &self.power_residues
    }
}

/// A self-contained certificate: index n, power prime p, resultant bound
/// m_0, base modulus M_1, and the certified entries in discovery order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonClosureCertificate {
    n: u64,
    p: u64,
    #[serde(with = "biguint_string")]
    m0: BigUint,
    #[serde(with = "biguint_string")]
    modulus: BigUint,
    entries: Vec<NonClosureEntry>,
}

impl NonClosureCertificate {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m0(&self) -> &BigUint {
        &self.m0
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn entries(&self) -> &[NonClosureEntry] {
        &self.entries
    }
}

/// A named, index-carrying reason a certificate fails verification.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateViolation {
    #[error("certificate precondition failed: {detail}")]
    PreconditionFailed { detail: String },
    #[error("entry {index}: {prime} is not prime")]
    CompositePrime { index: usize, prime: u64 },
    #[error("entry {index}: prime equals the structural prime p")]
    EqualsStructuralPrime { index: usize },
    #[error("entry {index}: base does not equal k * M_i (+ prime if shifted)")]
    BaseMismatch { index: usize },
    #[error("entry {index}: prime does not divide Phi_n(A)")]
    MissingDivisibility { index: usize },
    #[error("entry {index}: Phi_n(A) is divisible by the prime squared")]
    ValuationNotOne { index: usize },
    #[error("entry {index}: prime divides the earlier base of entry {earlier}")]
    DividesEarlierBase { index: usize, earlier: usize },
    #[error("entry {index}: prime divides the earlier value of entry {earlier}")]
    DividesEarlierValue { index: usize, earlier: usize },
    #[error("entry {index}: power table does not cover e = p, 2p, ..., n-p")]
    IncompletePowerTable { index: usize },
    #[error("entry {index}: recorded residue for exponent {exponent} is wrong")]
    PowerMismatch { index: usize, exponent: u64 },
    #[error("entry {index}: A^{exponent} = 1, so A does not have order n")]
    PowerCollapse { index: usize, exponent: u64 },
}

const EXCLUDED_INDICES: [u64; 4] = [1, 4, 8, 12];

/// Remainder of a multi-limb number (little-endian u64 digits) by m.
fn digits_mod(digits: &[u64], m: u64) -> u64 {
    let mm = m as u128;
    let mut r: u128 = 0;
    for &d in digits.iter().rev() {
        r = ((r << 64) | d as u128) % mm;
    }
    r as u64
}

fn biguint_mod(v: &BigUint, m: u64) -> u64 {
    digits_mod(&v.to_u64_digits(), m)
}

fn coeff_mod(c: &BigInt, m: u64) -> u64 {
    let mm = BigInt::from(m);
    let mut r = c % &mm;
    if r.is_negative() {
        r += &mm;
    }
    r.to_u64().expect("reduced below a u64 modulus")
}

/// Phi_n(a) mod m by Horner over reduced coefficients.
fn eval_coeffs_mod(coeffs: &[BigInt], a: u64, m: u64) -> u64 {
    let mm = m as u128;
    let am = (a % m) as u128;
    let mut acc: u128 = 0;
    for c in coeffs.iter().rev() {
        acc = (acc * am + coeff_mod(c, m) as u128) % mm;
    }
    acc as u64
}

/// |res(Phi_n, Phi_n')| as an exact integer.
fn resultant_bound(n: u64) -> Result<BigUint, K2Error> {
    let phi = cyclotomic_poly_q(n)?;
    let r = Poly::resultant(&phi, &phi.derivative())?;
    let r = r.abs();
    assert!(r.denom().is_one(), "resultant of integer polynomials");
    Ok(r.numer().magnitude().clone())
}

fn structural_modulus(n: u64, p: u64, m0: &BigUint) -> BigUint {
    let bound = n.max(p).max(20);
    let mut m = m0.clone();
    for q in primes_up_to(bound) {
        m *= q;
    }
    m
}

fn check_preconditions(n: u64, p: u64) -> Result<(), K2Error> {
    if !is_prime_u64(p) {
        return Err(K2Error::NotPrime(p));
    }
    let psq = p * p;
    if n == 0 || n % psq != 0 {
        return Err(K2Error::NotSquareDivisor { psq, n });
    }
    if EXCLUDED_INDICES.contains(&n) {
        return Err(K2Error::ExcludedIndex(n));
    }
    Ok(())
}

/// Generates `count` certified pairs (A_i, p_i) for the index n and prime
/// p with p^2 | n.  Deterministic: the same inputs always produce the
/// same certificate.
pub fn nonclosure_sequence(
    n: u64,
    p: u64,
    count: usize,
    limits: &NonClosureLimits,
) -> Result<NonClosureCertificate, K2Error> {
    check_preconditions(n, p)?;
    let m0 = resultant_bound(n)?;
    let modulus = structural_modulus(n, p, &m0);
    let coeffs = cyclotomic_coeffs(n)?;
    let trial_primes = primes_up_to(limits.trial_bound);

    let mut entries: Vec<NonClosureEntry> = Vec::with_capacity(count);
    'entries: while entries.len() < count {
        let mut base_modulus = modulus.clone();
        for e in &entries {
            base_modulus *= e.prime;
        }
        for k in 1..=limits.max_k {
            let a0 = &base_modulus * k;
            let val = cyclotomic_eval(n, &BigInt::from(a0.clone()))?
                .to_biguint()
                .expect("Phi_n is positive at large arguments");
            let digits = val.to_u64_digits();
            let candidate = trial_primes.iter().copied().find(|&q| {
                // Only primes = 1 mod n can divide Phi_n(A) once q > n,
                // and primes dividing the base modulus never divide the
                // value, so everything else is skipped outright.
                q > n.max(p) && (q - 1) % n == 0 && digits_mod(&digits, q) == 0
            });
            let Some(q) = candidate else {
                continue;
            };
            // Freshness against earlier entries.
            let clashes = entries.iter().any(|e| {
                biguint_mod(&e.a, q) == 0 || eval_coeffs_mod(&coeffs, biguint_mod(&e.a, q), q) == 0
            });
            if clashes {
                continue;
            }
            // Force valuation exactly one, shifting by q when needed: a
            // shift moves the value by q * Phi_n'(A) mod q^2, and q cannot
            // divide Phi_n'(A) because it does not divide the resultant.
            let v1 = &val / q;
            let (a, shifted) = if (&v1 % q).is_zero() {
                let a = &a0 + q;
                let value = cyclotomic_eval(n, &BigInt::from(a.clone()))?
                    .to_biguint()
                    .expect("positive value");
                assert!((&value % q).is_zero(), "shifted value lost divisibility");
                assert!(
                    !((&value / q) % q).is_zero(),
                    "shift failed to reduce the valuation to one"
                );
                (a, true)
            } else {
                (a0, false)
            };
            // Power residues: order n mod q makes all of them != 1.
            let a_mod = biguint_mod(&a, q);
            let mut power_residues = Vec::new();
            let mut j = p;
            while j < n {
                let r = crate::algebra::intops::pow_mod_u64(a_mod, j, q);
                assert!(r != 1, "A unexpectedly fails to have order n mod q");
                power_residues.push((j, r));
                j += p;
            }
            entries.push(NonClosureEntry {
                k,
                a,
                prime: q,
                shifted,
                power_residues,
            });
            continue 'entries;
        }
        return Err(K2Error::LimitsExhausted {
            found: entries.len(),
            requested: count,
            detail: format!(
                "no value Phi_{n}(k M) with a usable prime factor below {} for k <= {}",
                limits.trial_bound, limits.max_k
            ),
        });
    }

    Ok(NonClosureCertificate {
        n,
        p,
        m0,
        modulus,
        entries,
    })
}

/// Re-verifies every invariant of a certificate from scratch.
pub fn verify_certificate(cert: &NonClosureCertificate) -> Result<(), CertificateViolation> {
    let n = cert.n;
    let p = cert.p;
    check_preconditions(n, p).map_err(|e| CertificateViolation::PreconditionFailed {
        detail: e.to_string(),
    })?;
    let m0 = resultant_bound(n).map_err(|e| CertificateViolation::PreconditionFailed {
        detail: e.to_string(),
    })?;
    if m0 != cert.m0 {
        return Err(CertificateViolation::PreconditionFailed {
            detail: format!("m0 should be {m0}"),
        });
    }
    if structural_modulus(n, p, &m0) != cert.modulus {
        return Err(CertificateViolation::PreconditionFailed {
            detail: "base modulus does not match m0 times the prime block".into(),
        });
    }

    let mut values: Vec<BigUint> = Vec::with_capacity(cert.entries.len());
    for e in &cert.entries {
        let val = cyclotomic_eval(n, &BigInt::from(e.a.clone()))
            .map_err(|err| CertificateViolation::PreconditionFailed {
                detail: err.to_string(),
            })?
            .to_biguint()
            .ok_or_else(|| CertificateViolation::PreconditionFailed {
                detail: "Phi_n(A) must be positive".into(),
            })?;
        values.push(val);
    }

    for (i, e) in cert.entries.iter().enumerate() {
        let q = e.prime;
        if !is_prime_u64(q) {
            return Err(CertificateViolation::CompositePrime { index: i, prime: q });
        }
        if q == p {
            return Err(CertificateViolation::EqualsStructuralPrime { index: i });
        }
        let mut base_modulus = cert.modulus.clone();
        for earlier in &cert.entries[..i] {
            base_modulus *= earlier.prime;
        }
        let mut expect = &base_modulus * e.k;
        if e.shifted {
            expect += q;
        }
        if expect != e.a {
            return Err(CertificateViolation::BaseMismatch { index: i });
        }
        if biguint_mod(&values[i], q) != 0 {
            return Err(CertificateViolation::MissingDivisibility { index: i });
        }
        if biguint_mod(&(&values[i] / q), q) == 0 {
            return Err(CertificateViolation::ValuationNotOne { index: i });
        }
        for (j, earlier) in cert.entries[..i].iter().enumerate() {
            if biguint_mod(&earlier.a, q) == 0 {
                return Err(CertificateViolation::DividesEarlierBase {
                    index: i,
                    earlier: j,
                });
            }
            if biguint_mod(&values[j], q) == 0 {
                return Err(CertificateViolation::DividesEarlierValue {
                    index: i,
                    earlier: j,
                });
            }
        }
        let expected_exponents: Vec<u64> = (1..n / p).map(|j| j * p).collect();
        let got: Vec<u64> = e.power_residues.iter().map(|&(ex, _)| ex).collect();
        if got != expected_exponents {
            return Err(CertificateViolation::IncompletePowerTable { index: i });
        }
        let a_mod = biguint_mod(&e.a, q);
        for &(exponent, residue) in &e.power_residues {
            let actual = crate::algebra::intops::pow_mod_u64(a_mod, exponent, q);
            if actual != residue {
                return Err(CertificateViolation::PowerMismatch { index: i, exponent });
            }
            if residue == 1 {
                return Err(CertificateViolation::PowerCollapse { index: i, exponent });
            }
        }
    }
    Ok(())
}
