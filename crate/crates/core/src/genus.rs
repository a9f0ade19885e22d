//! Genus of the superelliptic curves y^p = Phi_n(x) and the finiteness
//! consequences for their rational points.
//!
//! The general tool is the Kummer-extension genus formula
//!
//! ```text
//! g(K') = 1 + (m / [k' : k]) * (g(K) - 1 + (1/2) * sum (1 - r_P / m) deg P)
//! ```
//!
//! with `r_P = gcd(m, v_P(u))` over the places of K.  For u = Phi_n(x)
//! over an algebraically closed constant field, the ramified places are
//! the phi(n) roots of Phi_n (each with v_P(u) = 1, so r_P = 1) and the
//! place at infinity (v = -phi(n), so r = gcd(p, phi(n))); everything
//! else has r_P = m and drops out of the sum.  Specializing gives the
//! closed form implemented by [`genus_curve`], and the genus is at least
//! 2 — forcing finitely many rational points — exactly when
//!
//! ```text
//! phi(n) * (p - 1) > p + gcd(p, phi(n)).
//! ```

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::algebra::intops::is_prime_u64;

/// Largest argument accepted by [`euler_phi`].
pub const EULER_PHI_CAP: u64 = 1_000_000;

/// Errors for genus computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenusError {
    /// The index is below the smallest value the operation is defined for.
    #[error("index {n} is below the minimum {min}")]
    IndexTooSmall { n: u64, min: u64 },
    /// The totient is only computed up to a fixed cap.
    #[error("index {n} exceeds the totient cap {cap}")]
    CapExceeded { n: u64, cap: u64 },
    /// The exponent of the covering must be prime.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// Kummer extensions need degree at least 2.
    #[error("Kummer degree m = {m} must be at least 2")]
    BadMultiplicity { m: u64 },
    /// Each ramification index must divide the Kummer degree.
    #[error("ramification index {r} does not divide m = {m}")]
    RamificationNotDividing { r: u64, m: u64 },
    /// The constant-field degree must be positive.
    #[error("constant field degree must be positive")]
    ZeroConstantDegree,
    /// The formula evaluated to something other than a nonnegative
    /// integer, so the profile cannot come from an actual extension.
    #[error("genus evaluates to {value}, not a nonnegative integer; the ramification profile is inconsistent")]
    InconsistentProfile { value: Rational64 },
}

/// Euler's totient by trial factorization, for n up to [`EULER_PHI_CAP`].
pub fn euler_phi(n: u64) -> Result<u64, GenusError> {
    if n == 0 {
        return Err(GenusError::IndexTooSmall { n, min: 1 });
    }
    if n > EULER_PHI_CAP {
        return Err(GenusError::CapExceeded {
            n,
            cap: EULER_PHI_CAP,
        });
    }
    let mut rest = n;
    let mut phi = 1u64;
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            rest /= d;
            phi *= d - 1;
            while rest % d == 0 {
                rest /= d;
                phi *= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        phi *= rest - 1;
    }
    Ok(phi)
}

/// Ramification data of y^p = Phi_n(x) over an algebraically closed
/// constant field: phi(n) simple branch points plus the place at
/// infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationProfile {
    n: u64,
    p: u64,
    phi_n: u64,
    places: Vec<(u64, u64)>,
}

impl RamificationProfile {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn phi_n(&self) -> u64 {
        self.phi_n
    }

    /// The ramified places as (r_P, deg P) pairs; unramified places are
    /// omitted since they contribute nothing to the genus sum.
    pub fn places(&self) -> &[(u64, u64)] {
        &self.places
    }
}

/// Builds the ramification profile of y^p = Phi_n(x) for n >= 3 and p
/// prime, with the constant field treated as algebraically closed.
pub fn ramification_profile(n: u64, p: u64) -> Result<RamificationProfile, GenusError> {
    if n < 3 {
        return Err(GenusError::IndexTooSmall { n, min: 3 });
    }
    if !is_prime_u64(p) {
        return Err(GenusError::NotPrime(p));
    }
    let phi_n = euler_phi(n)?;
    // The phi(n) distinct roots of Phi_n each carry v_P(u) = 1, hence
    // r_P = gcd(p, 1) = 1; at infinity v(u) = -phi(n) gives r = gcd(p,
    // phi(n)).  All degrees are 1 over the algebraic closure.
    let mut places = vec![(1u64, 1u64); phi_n as usize];
    places.push((gcd(p, phi_n), 1));
    Ok(RamificationProfile {
        n,
        p,
        phi_n,
        places,
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Evaluates the Kummer genus formula exactly and checks that the result
/// is a nonnegative integer.
pub fn kummer_genus(
    m: u64,
    profile: &[(u64, u64)],
    base_genus: u64,
    constant_degree: u64,
) -> Result<u64, GenusError> {
    if m < 2 {
        return Err(GenusError::BadMultiplicity { m });
    }
    if constant_degree == 0 {
        return Err(GenusError::ZeroConstantDegree);
    }
    let mut sum = Rational64::zero();
    for &(r, deg) in profile {
        if r == 0 || m % r != 0 {
            return Err(GenusError::RamificationNotDividing { r, m });
        }
        sum += (Rational64::new(1, 1) - Rational64::new(r as i64, m as i64))
            * Rational64::from_integer(deg as i64);
    }
    let value = Rational64::from_integer(1)
        + Rational64::new(m as i64, constant_degree as i64)
            * (Rational64::from_integer(base_genus as i64) - Rational64::from_integer(1)
                + sum / Rational64::from_integer(2));
    if !value.is_integer() || value.is_negative() {
        return Err(GenusError::InconsistentProfile { value });
    }
    Ok(value.to_integer() as u64)
}

/// The genus of y^p = Phi_n(x) by the specialized closed form
/// 1 + p(-1 + phi(n)(1 - 1/p)/2 + (1 - gcd(p, phi(n))/p)/2).
pub fn genus_curve(n: u64, p: u64) -> Result<u64, GenusError> {
    if n < 3 {
        return Err(GenusError::IndexTooSmall { n, min: 3 });
    }
    if !is_prime_u64(p) {
        return Err(GenusError::NotPrime(p));
    }
    let phi = euler_phi(n)? as i64;
    let pi = p as i64;
    let half = Rational64::new(1, 2);
    let value = Rational64::from_integer(1)
        + Rational64::from_integer(pi)
            * (Rational64::from_integer(-1)
                + half
                    * Rational64::from_integer(phi)
                    * (Rational64::from_integer(1) - Rational64::new(1, pi))
                + half
                    * (Rational64::from_integer(1)
                        - Rational64::new(gcd(p, phi as u64) as i64, pi)));
    if !value.is_integer() || value.is_negative() {
        return Err(GenusError::InconsistentProfile { value });
    }
    Ok(value.to_integer() as u64)
}

/// Outcome of the finiteness test for rational points on y^p = Phi_n(x).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinitenessOutcome {
    /// The genus is at least 2, so the curve has only finitely many
    /// rational points over any number field.
    GenusAtLeastTwo,
    /// One of the small exceptional pairs where the genus stays below 2.
    SmallGenusException,
}

/// Decides phi(n)(p - 1) > p + gcd(p, phi(n)), which is equivalent to
/// the curve y^p = Phi_n(x) having genus at least 2.
pub fn finiteness_classifier(n: u64, p: u64) -> Result<FinitenessOutcome, GenusError> {
    if n < 3 {
        return Err(GenusError::IndexTooSmall { n, min: 3 });
    }
    if !is_prime_u64(p) {
        return Err(GenusError::NotPrime(p));
    }
    let phi = euler_phi(n)?;
    if phi * (p - 1) > p + gcd(p, phi) {
        Ok(FinitenessOutcome::GenusAtLeastTwo)
    } else {
        Ok(FinitenessOutcome::SmallGenusException)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_matches_gcd_count_oracle() {
        for n in 1..=300u64 {
            let direct = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n).unwrap(), direct, "phi({n})");
        }
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(9).unwrap(), 6);
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert_eq!(euler_phi(360).unwrap(), 96);
        assert_eq!(euler_phi(1_000_000).unwrap(), 400_000);
    }

    #[test]
    fn totient_guards() {
        assert_eq!(
            euler_phi(0),
            Err(GenusError::IndexTooSmall { n: 0, min: 1 })
        );
        assert_eq!(
            euler_phi(EULER_PHI_CAP + 1),
            Err(GenusError::CapExceeded {
                n: EULER_PHI_CAP + 1,
                cap: EULER_PHI_CAP
            })
        );
    }

    #[test]
    fn kummer_formula_examples() {
        // y^2 = Phi_5(x): four simple branch points and a ramified
        // infinite place; genus 1.
        let profile5 = [(1u64, 1u64), (1, 1), (1, 1), (1, 1), (2, 1)];
        assert_eq!(kummer_genus(2, &profile5, 0, 1).unwrap(), 1);

        // y^2 = Phi_7(x): six simple branch points, infinity unramified
        // in the sum (r = 2 = m); genus 2.
        let profile7 = [(1u64, 1u64), (1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (2, 1)];
        assert_eq!(kummer_genus(2, &profile7, 0, 1).unwrap(), 2);

        // No branching over a rational base would give 1 - m < 0: the
        // guard must reject it.
        for m in [2u64, 3, 5] {
            assert!(matches!(
                kummer_genus(m, &[], 0, 1),
                Err(GenusError::InconsistentProfile { .. })
            ));
        }

        // A lone half-ramified point gives genus -1/2: not an integer.
        assert!(matches!(
            kummer_genus(2, &[(1, 1)], 0, 1),
            Err(GenusError::InconsistentProfile { .. })
        ));

        // Guards on m and the ramification indices.
        assert_eq!(
            kummer_genus(1, &[], 0, 1),
            Err(GenusError::BadMultiplicity { m: 1 })
        );
        assert_eq!(
            kummer_genus(4, &[(3, 1)], 0, 1),
            Err(GenusError::RamificationNotDividing { r: 3, m: 4 })
        );
        assert_eq!(
            kummer_genus(4, &[(0, 1)], 0, 1),
            Err(GenusError::RamificationNotDividing { r: 0, m: 4 })
        );

        // With a constant-field extension of degree 2, two simple branch
        // points of degree 2 give 1 + (2/2)(0 - 1 + (1/2)(1/2 * 2 +
        // 1/2 * 2)) = 1.
        assert_eq!(kummer_genus(2, &[(1, 2), (1, 2)], 0, 2).unwrap(), 1);
        assert_eq!(
            kummer_genus(2, &[(1, 1)], 0, 0),
            Err(GenusError::ZeroConstantDegree)
        );
    }

    #[test]
    fn curve_genus_closed_form_examples() {
        assert_eq!(genus_curve(5, 2).unwrap(), 1);
        assert_eq!(genus_curve(7, 2).unwrap(), 2);
        assert_eq!(genus_curve(3, 5).unwrap(), 2);
        assert_eq!(genus_curve(3, 2).unwrap(), 0);
        assert_eq!(genus_curve(9, 3).unwrap(), 4);

        assert_eq!(
            genus_curve(2, 3),
            Err(GenusError::IndexTooSmall { n: 2, min: 3 })
        );
        assert_eq!(genus_curve(9, 4), Err(GenusError::NotPrime(4)));
    }

    #[test]
    fn closed_form_agrees_with_kummer_formula_on_grid() {
        for n in 3..=60u64 {
            for p in [2u64, 3, 5, 7] {
                let profile = ramification_profile(n, p).unwrap();
                assert_eq!(profile.phi_n(), euler_phi(n).unwrap());
                assert_eq!(profile.places().len(), profile.phi_n() as usize + 1);
                let general = kummer_genus(p, profile.places(), 0, 1).unwrap();
                assert_eq!(genus_curve(n, p).unwrap(), general, "n = {n}, p = {p}");
            }
        }
    }

    #[test]
    fn inequality_matches_genus_threshold_on_grid() {
        for n in 3..=60u64 {
            for p in [2u64, 3, 5, 7] {
                let genus = genus_curve(n, p).unwrap();
                let outcome = finiteness_classifier(n, p).unwrap();
                assert_eq!(
                    outcome == FinitenessOutcome::GenusAtLeastTwo,
                    genus >= 2,
                    "n = {n}, p = {p}, genus {genus}"
                );
            }
        }
    }

    #[test]
    fn exception_sweeps_match_known_lists() {
        let exceptions = |p: u64| -> Vec<u64> {
            (3..=200u64)
                .filter(|&n| {
                    finiteness_classifier(n, p).unwrap() == FinitenessOutcome::SmallGenusException
                })
                .collect()
        };
        assert_eq!(exceptions(2), vec![3, 4, 5, 6, 8, 10, 12]);
        assert_eq!(exceptions(3), vec![3, 4, 6]);
        for p in [5u64, 7, 11, 13] {
            assert!(exceptions(p).is_empty(), "p = {p}");
        }
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(
            finiteness_classifier(5, 2).unwrap(),
            FinitenessOutcome::SmallGenusException
        );
        assert_eq!(
            finiteness_classifier(6, 3).unwrap(),
            FinitenessOutcome::SmallGenusException
        );
        assert_eq!(
            finiteness_classifier(9, 3).unwrap(),
            FinitenessOutcome::GenusAtLeastTwo
        );
    }
}
