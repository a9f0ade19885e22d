//! Irreducibility over Q, decided only by checkable certificates: the
//! rational root theorem (complete through degree 3), irreducibility of a
//! degree-preserving reduction mod p, rigid Newton polygons, and -- through
//! degree 8 -- an exhaustive coefficient-bounded search for integer
//! factors.  When no certificate applies the result is an explicit
//! `Inconclusive` error, never a guess.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{zpoly, FpElem, Poly, PrimeIdealFx};
use crate::intfactor;

use super::fp::is_irreducible_fp;
use super::newton::newton_polygon;
use super::FactorError;

const SMALL_PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

/// How a polynomial was certified irreducible over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QCertificate {
    /// Degree 1.
    DegreeOne,
    /// Degree 2 or 3 with no rational root.
    RationalRootTest,
    /// The reduction mod p preserves the degree and is irreducible.
    ReductionModP { p: u64 },
    /// Every side of the Newton polygon at p is rigid and the side lengths
    /// admit no factorization compatible with the absence of rational roots.
    NewtonPolygon { p: u64 },
    /// No integer factor exists within the Mignotte coefficient bound.
    ExhaustiveSearch,
}

/// Outcome of `is_irreducible_q`: either a certificate or a witness factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QIrreducibility {
    Irreducible(QCertificate),
    /// A nontrivial monic factor.
    Reducible { factor: Poly<BigRational> },
}

impl QIrreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, QIrreducibility::Irreducible(_))
    }
}

/// All rational roots of a nonzero polynomial, sorted ascending.  Complete:
/// every rational root is found (or an `Inconclusive` error is raised if a
/// coefficient is too large to factor within effort bounds).
pub fn rational_roots(f: &Poly<BigRational>) -> Result<Vec<BigRational>, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let (_, z) = zpoly::clear_denominators(f);
    let mut z = zpoly::primitive_part(&z);
    let mut roots = Vec::new();
    if z[0].is_zero() {
        roots.push(BigRational::zero());
        let k = z.iter().position(|c| !c.is_zero()).expect("nonzero poly");
        z.drain(..k);
    }
    if z.len() == 1 {
        roots.sort();
        return Ok(roots);
    }
    let fq = zpoly::to_qpoly(&z);
    let a0 = z[0].clone();
    let lead = z[z.len() - 1].clone();
    let nums = positive_divisors(&a0)?;
    let dens = positive_divisors(&lead)?;
    if nums.len() * dens.len() > 200_000 {
        return Err(FactorError::Inconclusive {
            degree: f.degree().unwrap_or(0),
            reason: "too many rational root candidates".into(),
        });
    }
    for u in &nums {
        for v in &dens {
            if u.gcd(v) != BigInt::one() {
                continue;
            }
            for cand in [
                BigRational::new(u.clone(), v.clone()),
                BigRational::new(-u.clone(), v.clone()),
            ] {
                if fq.evaluate(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Decide irreducibility over Q through the certificate chain, or exhibit a
/// nontrivial monic factor.
pub fn is_irreducible_q(f: &Poly<BigRational>) -> Result<QIrreducibility, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let n = match f.degree() {
        None | Some(0) => return Err(FactorError::ConstantPolynomial),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(QIrreducibility::Irreducible(QCertificate::DegreeOne));
    }
    let roots = rational_roots(f)?;
    if let Some(r) = roots.first() {
        let one = BigRational::one();
        let factor = Poly::from_coeffs(vec![-r.clone(), one]);
        return Ok(QIrreducibility::Reducible { factor });
    }
    if n <= 3 {
        return Ok(QIrreducibility::Irreducible(QCertificate::RationalRootTest));
    }
    let (_, z) = zpoly::clear_denominators(f);
    let mut z = zpoly::primitive_part(&z);
    if z[z.len() - 1].is_negative() {
        for c in z.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    if let Some(p) = reduction_certificate(&z) {
        return Ok(QIrreducibility::Irreducible(QCertificate::ReductionModP {
            p,
        }));
    }
    if let Some(p) = np_certificate(&z) {
        return Ok(QIrreducibility::Irreducible(QCertificate::NewtonPolygon {
            p,
        }));
    }
    if n <= 8 {
        return match exhaustive_factor_search(&z)? {
            Some(g) => {
                let gq = zpoly::to_qpoly(&g);
                Ok(QIrreducibility::Reducible {
                    factor: gq.monic().1,
                })
            }
            None => Ok(QIrreducibility::Irreducible(QCertificate::ExhaustiveSearch)),
        };
    }
    Err(FactorError::Inconclusive {
        degree: n,
        reason: "no modular or Newton-polygon certificate applies, and exhaustive \
                 search is limited to degree 8"
            .into(),
    })
}

/// Construct a prime ideal of Q[x] from a monic generator, returning the
/// irreducibility certificate alongside it.
pub fn certified_prime_q(
    gen: &Poly<BigRational>,
) -> Result<(PrimeIdealFx<BigRational>, QCertificate), FactorError> {
    match is_irreducible_q(gen)? {
        QIrreducibility::Irreducible(cert) => {
            let ideal = PrimeIdealFx::from_monic_irreducible(gen.clone())?;
            Ok((ideal, cert))
        }
        QIrreducibility::Reducible { factor } => {
            Err(FactorError::NotIrreducible(factor.to_string()))
        }
    }
}

/// Try small primes not dividing the leading coefficient; an irreducible
/// degree-preserving reduction certifies irreducibility over Q.
fn reduction_certificate(z: &[BigInt]) -> Option<u64> {
    let lead = &z[z.len() - 1];
    for p in SMALL_PRIMES {
        let pb = BigInt::from(p);
        if lead.mod_floor(&pb).is_zero() {
            continue;
        }
        let coeffs: Vec<FpElem> = z
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                FpElem::from_u64(u64::try_from(r).expect("reduced residue fits"), p)
            })
            .collect();
        let fp = Poly::from_coeffs(coeffs);
        debug_assert_eq!(fp.degree(), Some(z.len() - 1));
        if is_irreducible_fp(&fp).unwrap_or(false) {
            return Some(p);
        }
    }
    None
}

/// Newton-polygon certificate.  Candidate primes are the prime divisors of
/// the constant and leading coefficients (the only primes with a non-flat
/// polygon).  A polygon whose sides are all rigid pins the p-adic factor
/// degrees to the side lengths; if the only degrees a proper rational
/// factor could then have are 1 and n-1, the (already excluded) rational
/// root is the last way out and f is irreducible.
fn np_certificate(z: &[BigInt]) -> Option<u64> {
    let n = z.len() - 1;
    if z[0].is_zero() {
        return None;
    }
    let mut primes: Vec<u64> = Vec::new();
    for end in [&z[0], &z[n]] {
        if let Some(v) = end.abs().to_biguint().and_then(|b| u64::try_from(b).ok()) {
            for (p, _) in intfactor::factor_u64(v) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
    }
    let fq = zpoly::to_qpoly(z);
    for p in primes {
        let np = match newton_polygon(&fq, p) {
            Ok(np) => np,
            Err(_) => continue,
        };
        let Some(lengths) = np.rigid_factor_degrees() else {
            continue;
        };
        if lengths.len() == 1 {
            return Some(p);
        }
        let sums = subset_sums(&lengths, n);
        let ok = sums
            .iter()
            .enumerate()
            .filter(|&(s, &hit)| hit && s != 0 && s != n)
            .all(|(s, _)| s == 1 || s == n - 1);
        if ok {
            return Some(p);
        }
    }
    None
}

fn subset_sums(lengths: &[usize], n: usize) -> Vec<bool> {
    let mut dp = vec![false; n + 1];
    dp[0] = true;
    for &l in lengths {
        for s in (l..=n).rev() {
            if dp[s - l] {
                dp[s] = true;
            }
        }
    }
    dp
}

/// Exhaustive search for an integer factor of degree 2..=n/2, with all
/// coefficients bounded by the Mignotte bound 2^d * ||f||_2.  Complete for
/// primitive f with positive leading coefficient and no rational root, by
/// Gauss's lemma.  Returns the first factor found in scan order.
fn exhaustive_factor_search(z: &[BigInt]) -> Result<Option<Vec<BigInt>>, FactorError> {
    let n = z.len() - 1;
    let fq = zpoly::to_qpoly(z);
    let z_at_1 = zpoly::eval_bigint(z, &BigInt::one());
    let z_at_m1 = zpoly::eval_bigint(z, &BigInt::from(-1));
    debug_assert!(!z_at_1.is_zero() && !z_at_m1.is_zero());
    let norm_sq: BigInt = z.iter().map(|c| c * c).sum();
    let norm = ceil_sqrt(&norm_sq);
    let lc_divs = positive_divisors(&z[n])?;
    let a0_divs = positive_divisors(&z[0])?;
    for d in 2..=n / 2 {
        let bound = &norm * (BigInt::one() << d);
        let width: BigInt = BigInt::from(2) * &bound + BigInt::one();
        let combos =
            BigInt::from(lc_divs.len() * a0_divs.len() * 2) * width.pow(d as u32 - 1);
        if combos > BigInt::from(20_000_000u64) {
            return Err(FactorError::Inconclusive {
                degree: n,
                reason: format!(
                    "exhaustive search space for degree-{d} factors exceeds the cap"
                ),
            });
        }
        let b = i64::try_from(&bound).expect("bound fits after cap check");
        let mut interior = vec![-b; d.saturating_sub(1)];
        'outer: loop {
            for lcg in &lc_divs {
                for a0g in &a0_divs {
                    for sign in [1i64, -1] {
                        let mut g: Vec<BigInt> = Vec::with_capacity(d + 1);
                        g.push(a0g * BigInt::from(sign));
                        g.extend(interior.iter().map(|&c| BigInt::from(c)));
                        g.push(lcg.clone());
                        let g1 = zpoly::eval_bigint(&g, &BigInt::one());
                        if g1.is_zero() || !z_at_1.mod_floor(&g1.abs()).is_zero() {
                            continue;
                        }
                        let gm1 = zpoly::eval_bigint(&g, &BigInt::from(-1));
                        if gm1.is_zero() || !z_at_m1.mod_floor(&gm1.abs()).is_zero() {
                            continue;
                        }
                        let gq = zpoly::to_qpoly(&g);
                        let (_, r) = fq.divrem(&gq).expect("nonzero candidate");
                        if r.is_zero() {
                            return Ok(Some(g));
                        }
                    }
                }
            }
            // Odometer over the interior coefficients.
            let mut i = 0;
            loop {
                if i == interior.len() {
                    break 'outer;
                }
                if interior[i] < b {
                    interior[i] += 1;
                    break;
                }
                interior[i] = -b;
                i += 1;
            }
        }
    }
    Ok(None)
}

fn ceil_sqrt(n: &BigInt) -> BigInt {
    let root = n.sqrt();
    if &(&root * &root) < n {
        root + 1
    } else {
        root
    }
}

/// Positive divisors of n (|n| is factored; effort-bounded).
fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>, FactorError> {
    let a = n.abs();
    if a.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let factors: Vec<(BigUint, u32)> = match u64::try_from(&a) {
        Ok(v) => intfactor::factor_u64(v)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect(),
        Err(_) => {
            let out = intfactor::factor_bigint(
                &a.to_biguint().expect("abs"),
                &intfactor::EffortLimits::default(),
            );
            if !out.is_complete() {
                return Err(FactorError::Inconclusive {
                    degree: 0,
                    reason: format!("cannot factor coefficient {} within effort bounds", a),
                });
            }
            out.factors
        }
    };
    let mut divs: Vec<BigInt> = vec![BigInt::one()];
    for (p, e) in factors {
        let pb = BigInt::from(p);
        let prev = divs.clone();
        let mut power = BigInt::one();
        for _ in 0..e {
            power *= &pb;
            divs.extend(prev.iter().map(|d| d * &power));
        }
    }
    if divs.len() > 100_000 {
        return Err(FactorError::Inconclusive {
            degree: 0,
            reason: "coefficient has too many divisors".into(),
        });
    }
    Ok(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qi;

    fn qpoly(coeffs: &[i64]) -> Poly<BigRational> {
        Poly::from_i64_coeffs(&qi(0), coeffs)
    }

    #[test]
    fn roots_of_a_cubic_with_mixed_denominators() {
        // (2x - 1)(3x + 2)(x - 5) has roots 1/2, -2/3, 5.
        let f = qpoly(&[-1, 2]).mul(&qpoly(&[2, 3])).mul(&qpoly(&[-5, 1]));
        let roots = rational_roots(&f).unwrap();
        assert_eq!(
            roots,
            vec![
                BigRational::new((-2).into(), 3.into()),
                BigRational::new(1.into(), 2.into()),
                qi(5)
            ]
        );
    }

    #[test]
    fn zero_roots_and_rootless_polys() {
        let f = qpoly(&[0, 0, 1, 1]); // x^2 (x + 1)
        assert_eq!(rational_roots(&f).unwrap(), vec![qi(-1), qi(0)]);
        assert!(rational_roots(&qpoly(&[1, 0, 1])).unwrap().is_empty());
        assert!(rational_roots(&qpoly(&[7])).unwrap().is_empty());
        assert!(rational_roots(&Poly::zero()).is_err());
    }

    #[test]
    fn low_degree_certificates() {
        match is_irreducible_q(&qpoly(&[2, 3])).unwrap() {
            QIrreducibility::Irreducible(QCertificate::DegreeOne) => {}
            other => panic!("unexpected {:?}", other),
        }
        match is_irreducible_q(&qpoly(&[1, 0, 1])).unwrap() {
            QIrreducibility::Irreducible(QCertificate::RationalRootTest) => {}
            other => panic!("unexpected {:?}", other),
        }
        // The witness factor comes from the smallest rational root, -1.
        match is_irreducible_q(&qpoly(&[-1, 0, 1])).unwrap() {
            QIrreducibility::Reducible { factor } => {
                assert_eq!(factor, qpoly(&[1, 1]));
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn reduction_mod_two_certifies_quartic() {
        // x^4 + x + 1 is irreducible mod 2.
        match is_irreducible_q(&qpoly(&[1, 1, 0, 0, 1])).unwrap() {
            QIrreducibility::Irreducible(QCertificate::ReductionModP { p: 2 }) => {}
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn newton_polygon_helper_on_eisenstein_quartic() {
        // x^4 + 6x + 2: single rigid side at 2.
        let z: Vec<BigInt> = [2, 6, 0, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(np_certificate(&z), Some(2));
        // x^4 + 4 at 2 has drop 2 over length 4: not rigid.
        let z2: Vec<BigInt> = [4, 0, 0, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(np_certificate(&z2), None);
    }

    #[test]
    fn exhaustive_search_splits_sophie_germain_quartic() {
        // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2): only the search can see it.
        match is_irreducible_q(&qpoly(&[4, 0, 0, 0, 1])).unwrap() {
            QIrreducibility::Reducible { factor } => {
                assert!(factor.divides(&qpoly(&[4, 0, 0, 0, 1])));
                assert_eq!(factor.degree(), Some(2));
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn exhaustive_search_certifies_x4_plus_1() {
        // x^4 + 1 is irreducible over Q yet reducible mod every prime, and
        // its polygon at 2 is flat: only the exhaustive search decides it.
        match is_irreducible_q(&qpoly(&[1, 0, 0, 0, 1])).unwrap() {
            QIrreducibility::Irreducible(QCertificate::ExhaustiveSearch) => {}
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn quintic_with_cyclotomic_factor() {
        // x^5 + x + 1 = (x^2 + x + 1)(x^3 - x^2 + 1).
        match is_irreducible_q(&qpoly(&[1, 1, 0, 0, 0, 1])).unwrap() {
            QIrreducibility::Reducible { factor } => {
                assert_eq!(factor, qpoly(&[1, 1, 1]));
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn high_degree_without_certificate_is_inconclusive() {
        // x^12 + 1 is reducible over Q, but no certificate in the chain can
        // see that at degree 12; the chain must refuse rather than guess.
        let mut coeffs = vec![0i64; 13];
        coeffs[0] = 1;
        coeffs[12] = 1;
        match is_irreducible_q(&qpoly(&coeffs)) {
            Err(FactorError::Inconclusive { degree: 12, .. }) => {}
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn verdicts_agree_with_brute_force_on_small_quartics() {
        // Oracle: a monic quartic with no rational root is reducible iff it
        // has a monic quadratic integer factor with small coefficients.
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                for c in [-2i64, 1, 2] {
                    let f = qpoly(&[c, a, b, 0, 1]);
                    let verdict = match is_irreducible_q(&f) {
                        Ok(v) => v,
                        Err(_) => continue,
                    };
                    let brute = brute_force_quartic_reducible(&f);
                    assert_eq!(
                        !verdict.is_irreducible(),
                        brute,
                        "disagreement on {}",
                        f
                    );
                    if let QIrreducibility::Reducible { factor } = verdict {
                        assert!(factor.divides(&f), "bogus factor for {}", f);
                        assert!(factor.degree() < f.degree());
                        assert!(factor.degree() >= Some(1));
                    }
                }
            }
        }
    }

    fn brute_force_quartic_reducible(f: &Poly<BigRational>) -> bool {
        if !rational_roots(f).unwrap().is_empty() {
            return true;
        }
        // Monic quartic with coefficients bounded by 2: any monic quadratic
        // integer factor has coefficients bounded by 2^2 * ||f||_2 <= 16.
        for p in -16i64..=16 {
            for q in -16i64..=16 {
                let g = qpoly(&[q, p, 1]);
                if g.divides(f) {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn certified_prime_constructor_over_q() {
        let (ideal, cert) = certified_prime_q(&qpoly(&[1, 0, 1])).unwrap();
        assert_eq!(ideal.generator(), &qpoly(&[1, 0, 1]));
        assert_eq!(cert, QCertificate::RationalRootTest);
        assert!(matches!(
            certified_prime_q(&qpoly(&[-1, 0, 1])),
            Err(FactorError::NotIrreducible(_))
        ));
    }
}
