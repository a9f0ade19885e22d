//! Integer factorization with bounded effort: trial division plus Pollard
//! rho, with deterministic Miller-Rabin certification of every reported
//! prime.  Factors that cannot be certified within the caps stay in the
//! remainder rather than being reported as prime.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::intops::{gcd_u64, is_prime_u64, mul_mod_u64, primes_up_to};

/// Effort caps for integer factorization.
#[derive(Clone, Copy, Debug)]
pub struct EffortLimits {
    /// Trial-divide by all primes up to this bound.
    pub trial_bound: u64,
    /// Iteration budget for each Pollard-rho attempt.
    pub rho_iters: u64,
}

impl Default for EffortLimits {
    fn default() -> Self {
        EffortLimits {
            trial_bound: 1_000_000,
            rho_iters: 100_000,
        }
    }
}

/// Result of a bounded factoring attempt.  `factors` are certified primes
/// with multiplicity, sorted ascending; `remainder` is 1 on success, else
/// the unfactored (or uncertifiable) cofactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorOutcome {
    pub factors: Vec<(BigUint, u32)>,
    pub remainder: BigUint,
}

impl FactorOutcome {
    pub fn is_complete(&self) -> bool {
        self.remainder.is_one()
    }
}

fn default_sieve() -> &'static [u64] {
    static SIEVE: OnceLock<Vec<u64>> = OnceLock::new();
    SIEVE.get_or_init(|| primes_up_to(1_000_000))
}

/// Completely factor a u64.  Always succeeds: trial division to 2^16 then
/// Brent rho, with every piece Miller-Rabin certified.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n < 2 {
        return out;
    }
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut d = 7u64;
    let steps = [4u64, 2, 4, 2, 4, 6, 2, 6]; // wheel mod 30
    let mut i = 0;
    while d <= 65_536 && d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += steps[i];
        i = (i + 1) % steps.len();
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            match out.iter_mut().find(|(p, _)| *p == m) {
                Some((_, e)) => *e += 1,
                None => out.push((m, 1)),
            }
            continue;
        }
        let f = rho_u64(m);
        stack.push(f);
        stack.push(m / f);
    }
    out.sort_unstable();
    out
}

/// Brent-cycle Pollard rho on a u64 known to be composite and odd-ish.
fn rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let g = rho_round_u64(n, c);
        if g != 0 && g != n {
            return g;
        }
        c += 1;
    }
}

fn rho_round_u64(n: u64, c: u64) -> u64 {
    let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
    let mut x = 2u64;
    let mut y = 2u64;
    let mut d = 1u64;
    let mut count = 0u64;
    while d == 1 {
        x = f(x);
        y = f(f(y));
        d = gcd_u64(x.abs_diff(y), n);
        count += 1;
        if count > 1 << 22 {
            return 0;
        }
    }
    d
}

/// Miller-Rabin primality for big integers.  Deterministic (and therefore a
/// proof) below 2^64; larger inputs are never certified here and report
/// `None`, meaning "unknown within this crate's proving range".
pub fn is_prime_big(n: &BigUint) -> Option<bool> {
    n.to_u64().map(is_prime_u64)
}

/// Bounded factorization of a big integer.
pub fn factor_bigint(n: &BigUint, limits: &EffortLimits) -> FactorOutcome {
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rem = n.clone();
    if rem.is_zero() || rem.is_one() {
        return FactorOutcome {
            factors,
            remainder: rem,
        };
    }
    let sieve_vec;
    let sieve: &[u64] = if limits.trial_bound == 1_000_000 {
        default_sieve()
    } else {
        sieve_vec = primes_up_to(limits.trial_bound);
        &sieve_vec
    };
    for &p in sieve {
        let pb = BigUint::from(p);
        if &pb * &pb > rem {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = rem.div_rem(&pb);
            if r.is_zero() {
                rem = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            factors.push((pb, e));
        }
        if rem.is_one() {
            break;
        }
    }
    // Whatever survives trial division is either prime, or gets a bounded
    // rho attempt; uncertifiable pieces are folded back into the remainder.
    let mut leftover = BigUint::one();
    let mut stack = vec![rem];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        match is_prime_big(&m) {
            Some(true) => match factors.iter_mut().find(|(p, _)| *p == m) {
                Some((_, e)) => *e += 1,
                None => factors.push((m, 1)),
            },
            Some(false) => {
                // Composite u64: rho always splits it.
                let v = m.to_u64().unwrap();
                let f = rho_u64(v);
                stack.push(BigUint::from(f));
                stack.push(BigUint::from(v / f));
            }
            None => match rho_bigint(&m, limits.rho_iters) {
                Some(f) => {
                    let q = &m / &f;
                    stack.push(f);
                    stack.push(q);
                }
                None => leftover *= &m,
            },
        }
    }
    factors.sort();
    FactorOutcome {
        factors,
        remainder: leftover,
    }
}

/// One bounded Brent-rho attempt on a big composite.
fn rho_bigint(n: &BigUint, iters: u64) -> Option<BigUint> {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return Some(two);
    }
    for c in 1u32..=3 {
        let cc = BigUint::from(c);
        let step = |x: &BigUint| (x * x + &cc) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut count = 0u64;
        loop {
            x = step(&x);
            y = step(&step(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            let g = diff.gcd(n);
            if g > one && &g < n {
                return Some(g);
            }
            if g == *n {
                break; // cycle collapsed; retry with next c
            }
            count += 1;
            if count >= iters {
                return None;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u64_factorization_reconstructs() {
        for n in [2u64, 12, 8191, 600_851_475_143, 1_000_000_007 * 97] {
            let fs = factor_u64(n);
            let mut prod = 1u64;
            for &(p, e) in &fs {
                assert!(is_prime_u64(p));
                prod *= p.pow(e);
            }
            assert_eq!(prod, n);
        }
        assert!(factor_u64(1).is_empty());
    }

    #[test]
    fn bigint_factorization_small_complete() {
        let n = BigUint::from(2u32.pow(13) + 1u32); // 8193 = 3 * 2731
        let out = factor_bigint(&n, &EffortLimits::default());
        assert!(out.is_complete());
        assert_eq!(
            out.factors,
            vec![(BigUint::from(3u32), 1), (BigUint::from(2731u32), 1)]
        );
    }

    #[test]
    fn bigint_factorization_respects_caps() {
        // Two 40-bit primes: trial division at a tiny bound cannot split the
        // product, and a tiny rho budget gives up cleanly.
        let p = BigUint::from(1_099_511_627_791u64);
        let q = BigUint::from(1_099_511_627_873u64);
        let n = &p * &q;
        let tiny = EffortLimits {
            trial_bound: 100,
            rho_iters: 1,
        };
        let out = factor_bigint(&n, &tiny);
        assert!(!out.is_complete());
        assert_eq!(
            out.factors.iter().fold(BigUint::one(), |acc, (p, e)| acc
                * p.pow(*e)) * &out.remainder,
            n
        );
    }
}
