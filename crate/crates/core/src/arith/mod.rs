//! Elementary number-theoretic services: primitive roots and multiplicative
//! orders, smallest primitive prime divisors of a^n + b^n, the x^n + x + 1
//! irreducibility check, and two exact quartic verifications (a bounded
//! diophantine scan and a bivariate polynomial identity).

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{intops, qi, Poly};
use crate::factorx::{is_irreducible_q, FactorError, QCertificate, QIrreducibility};
use crate::intfactor;

pub use crate::intfactor::{factor_bigint, factor_u64, EffortLimits, FactorOutcome};

/// Errors from the number-theoretic services.
#[derive(Debug, thiserror::Error)]
pub enum ArithError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{a} is not invertible mod {m}")]
    NotCoprime { a: u64, m: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("factorization of {value} incomplete within effort bounds")]
    FactorizationIncomplete { value: String },
    #[error("irreducibility of the degree-{degree} polynomial exceeds the local certification range")]
    CertificationRangeExceeded { degree: usize },
    #[error("unexpected factorization: {factor}")]
    UnexpectedFactorization { factor: String },
    #[error(transparent)]
    Factor(#[from] FactorError),
}

/// Deterministic primality for u64 (Miller-Rabin with a proven base set).
pub fn is_prime(n: u64) -> bool {
    intops::is_prime_u64(n)
}

/// Multiplicative order of a modulo m (m >= 2); errors unless gcd(a, m) = 1.
pub fn mult_order(a: u64, m: u64) -> Result<u64, ArithError> {
    if m < 2 {
        return Err(ArithError::Precondition(format!(
            "order needs a modulus >= 2, got {m}"
        )));
    }
    if intops::gcd_u64(a % m, m) != 1 {
        return Err(ArithError::NotCoprime { a, m });
    }
    Ok(intops::mult_order_u64(a, m))
}

/// True iff p generates the full multiplicative group mod the prime l.
pub fn is_primitive_root(p: u64, l: u64) -> Result<bool, ArithError> {
    if !is_prime(l) {
        return Err(ArithError::NotPrime(l));
    }
    if p % l == 0 {
        return Err(ArithError::NotCoprime { a: p, m: l });
    }
    Ok(mult_order(p % l, l)? == l - 1)
}

/// Outcome of the primitive-prime-divisor search for a^n + b^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZsigmondyOutcome {
    /// The smallest prime dividing a^n + b^n but no a^k + b^k with k < n.
    Prime(BigUint),
    /// No such prime exists (the classical exceptional case).
    Exception,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZsigmondyResult {
    pub a: u64,
    pub b: u64,
    pub n: u32,
    pub value: BigUint,
    pub outcome: ZsigmondyOutcome,
}

/// Find the smallest primitive prime divisor of a^n + b^n: a prime dividing
/// it but none of the earlier terms a^k + b^k.  Requires a > b > 0 coprime
/// and n > 1.  Fails explicitly if a^n + b^n cannot be fully factored
/// within the supplied effort limits.
pub fn zsigmondy(
    a: u64,
    b: u64,
    n: u32,
    limits: &EffortLimits,
) -> Result<ZsigmondyResult, ArithError> {
    if !(a > b && b > 0) || intops::gcd_u64(a, b) != 1 || n < 2 {
        return Err(ArithError::Precondition(format!(
            "need a > b > 0 coprime and n > 1, got a={a}, b={b}, n={n}"
        )));
    }
    let ab = BigUint::from(a);
    let bb = BigUint::from(b);
    let value = ab.pow(n) + bb.pow(n);
    let factored = intfactor::factor_bigint(&value, limits);
    if !factored.is_complete() {
        return Err(ArithError::FactorizationIncomplete {
            value: value.to_string(),
        });
    }
    let mut outcome = ZsigmondyOutcome::Exception;
    'primes: for (p, _) in &factored.factors {
        for k in 1..n {
            let term = ab.modpow(&BigUint::from(k), p) + bb.modpow(&BigUint::from(k), p);
            if (term % p).is_zero() {
                continue 'primes;
            }
        }
        outcome = ZsigmondyOutcome::Prime(p.clone());
        break;
    }
    Ok(ZsigmondyResult {
        a,
        b,
        n,
        value,
        outcome,
    })
}

/// Structure of x^n + x + 1 over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelmerOutcome {
    /// n not congruent to 2 mod 3: the trinomial itself is irreducible.
    Irreducible { certificate: QCertificate },
    /// n congruent to 2 mod 3: x^2 + x + 1 divides, and the exact cofactor
    /// is irreducible (certificate present unless the cofactor is 1).
    CyclotomicFactor {
        cofactor: Poly<BigRational>,
        cofactor_certificate: Option<QCertificate>,
    },
}

/// Decide the factorization shape of x^n + x + 1 for n >= 2, certifying
/// every irreducibility claim locally.  Degrees outside the certificate
/// chain's reach fail explicitly rather than being asserted.
pub fn selmer_check(n: usize) -> Result<SelmerOutcome, ArithError> {
    if n < 2 {
        return Err(ArithError::Precondition(format!("need n >= 2, got {n}")));
    }
    let one = qi(1);
    let trinomial = Poly::monomial(one.clone(), n)
        .add(&Poly::from_i64_coeffs(&one, &[1, 1]));
    if n % 3 != 2 {
        return match certify(&trinomial)? {
            QIrreducibility::Irreducible(certificate) => {
                Ok(SelmerOutcome::Irreducible { certificate })
            }
            QIrreducibility::Reducible { factor } => Err(ArithError::UnexpectedFactorization {
                factor: factor.to_string(),
            }),
        };
    }
    let omega = Poly::from_i64_coeffs(&one, &[1, 1, 1]);
    let cofactor = trinomial
        .exact_div(&omega)
        .map_err(FactorError::from)?;
    if cofactor.degree() == Some(0) {
        return Ok(SelmerOutcome::CyclotomicFactor {
            cofactor,
            cofactor_certificate: None,
        });
    }
    match certify(&cofactor)? {
        QIrreducibility::Irreducible(certificate) => Ok(SelmerOutcome::CyclotomicFactor {
            cofactor,
            cofactor_certificate: Some(certificate),
        }),
        QIrreducibility::Reducible { factor } => Err(ArithError::UnexpectedFactorization {
            factor: factor.to_string(),
        }),
    }
}

fn certify(f: &Poly<BigRational>) -> Result<QIrreducibility, ArithError> {
    match is_irreducible_q(f) {
        Ok(v) => Ok(v),
        Err(FactorError::Inconclusive { degree, .. }) => {
            Err(ArithError::CertificationRangeExceeded { degree })
        }
        Err(e) => Err(e.into()),
    }
}

/// All integer solutions of
/// x^4 + x^3 y + x^2 (y^2 - 1) + x y (y^2 - 1) + (y^2 - 1)^2 = 0
/// with |x|, |y| <= search_bound, sorted.  The full solution set is
/// {(0, 1), (-1, 1), (0, -1), (1, -1)}, already inside the unit box, so the
/// result is independent of the bound.
pub fn quartic_diophantine_solutions(search_bound: i64) -> Vec<(i64, i64)> {
    debug_assert!(search_bound >= 1);
    let mut sols: Vec<(i64, i64)> = (-search_bound..=search_bound)
        .into_par_iter()
        .flat_map_iter(|x| {
            (-search_bound..=search_bound).filter_map(move |y| {
                let xi = x as i128;
                let yi = y as i128;
                let w = yi * yi - 1;
                let v = xi * xi * xi * xi
                    + xi * xi * xi * yi
                    + (xi * xi + xi * yi) * w
                    + w * w;
                if v == 0 {
                    Some((x, y))
                } else {
                    None
                }
            })
        })
        .collect();
    sols.sort_unstable();
    sols
}

/// Verify by exact bivariate expansion that
/// x^4 + x^3 y + x^2 (y^2 + 1) + x y (y^2 + 1) + (y^2 + 1)^2
///   = (x^4 + x^3 y + x^2 y^2 + x y^3 + y^4) + (x^2 + x y + y^2) + (y^2 + 1).
/// Polynomials in x with coefficients in Q[y].
pub fn quartic_shift_identity_holds() -> bool {
    let one = qi(1);
    let y = Poly::from_i64_coeffs(&one, &[0, 1]);
    let yc = |k: usize| y.pow(k as u64);
    let w = Poly::from_i64_coeffs(&one, &[1, 0, 1]); // y^2 + 1
    let lhs: Vec<Poly<BigRational>> = vec![
        w.mul(&w),
        y.mul(&w),
        w.clone(),
        y.clone(),
        Poly::constant(one.clone()),
    ];
    let groups: [Vec<Poly<BigRational>>; 3] = [
        vec![yc(4), yc(3), yc(2), yc(1), yc(0)],
        vec![yc(2), yc(1), Poly::constant(one.clone())],
        vec![w],
    ];
    let mut rhs: Vec<Poly<BigRational>> = vec![Poly::zero(); 5];
    for g in &groups {
        for (i, c) in g.iter().enumerate() {
            rhs[i] = rhs[i].add(c);
        }
    }
    lhs == rhs
}
