//! Complete factorization over prime fields: squarefree decomposition,
//! distinct-degree splitting, and seeded Cantor-Zassenhaus equal-degree
//! splitting (with the trace-map variant in characteristic 2).

use num_bigint::BigUint;
use num_traits::One;

use crate::algebra::{pow_mod, FpElem, Poly, PrimeIdealFx};
use crate::algebra::Field;
use crate::rng::SplitMix64;

use super::{FactorError, Factorization};

/// Factor a nonzero polynomial over F_p into `unit * prod q_i^{e_i}` with
/// monic irreducible `q_i`, canonically sorted.  The `seed` drives only the
/// internal equal-degree splitting; the output is independent of it.
pub fn factor_fp(f: &Poly<FpElem>, seed: u64) -> Result<Factorization<FpElem>, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let (unit, monic) = f.monic();
    if monic.is_one() {
        return Ok(Factorization::new_fp(unit, Vec::new()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut factors: Vec<(Poly<FpElem>, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (block, d) in distinct_degree_split(&part) {
            for q in equal_degree_split(&block, d, &mut rng) {
                factors.push((q, mult));
            }
        }
    }
    Ok(Factorization::new_fp(unit, factors))
}

/// Rabin's irreducibility test over F_p.  Errors on the zero polynomial;
/// constants are not irreducible.
pub fn is_irreducible_fp(f: &Poly<FpElem>) -> Result<bool, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let (_, m) = f.monic();
    let n = match m.degree() {
        None | Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(n) => n,
    };
    let p = m.lc().modulus();
    let ctx = m.lc().clone();
    let x = Poly::x(&ctx);
    // h_k = x^(p^k) mod m, built by repeated p-th powers so the exponent
    // p^n never has to be materialized.
    let mut h = x.clone();
    let mut towers: Vec<Poly<FpElem>> = Vec::with_capacity(n);
    for _ in 0..n {
        h = pow_mod(&h, p, &m);
        towers.push(h.clone());
    }
    if towers[n - 1] != x {
        return Ok(false);
    }
    for r in distinct_prime_divisors(n) {
        let g = towers[n / r - 1].sub(&x).gcd(&m);
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Construct a prime ideal of F_p[x] from a generator, certifying
/// irreducibility first.  The generator must be monic.
pub fn certified_prime_fp(gen: &Poly<FpElem>) -> Result<PrimeIdealFx<FpElem>, FactorError> {
    if !gen.is_zero() && gen.degree() >= Some(1) && !gen.is_monic() {
        return Err(FactorError::NotIrreducible(format!(
            "generator {} is not monic",
            gen
        )));
    }
    if !is_irreducible_fp(gen)? {
        let witness = factor_fp(gen, 0)?;
        let name = witness
            .factors()
            .first()
            .map(|(q, _)| q.to_string())
            .unwrap_or_else(|| "1".to_string());
        return Err(FactorError::NotIrreducible(name));
    }
    Ok(PrimeIdealFx::from_monic_irreducible(gen.clone())?)
}

fn distinct_prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// p-th root of a polynomial lying in F_p[x^p]: over the prime field the
/// coefficients are fixed by Frobenius, so the root just re-indexes them.
fn p_th_root(f: &Poly<FpElem>, p: u64) -> Poly<FpElem> {
    let ctx = f.sample().expect("nonzero").clone();
    let n = f.degree().unwrap_or(0);
    let mut coeffs = Vec::with_capacity(n / p as usize + 1);
    let mut i = 0;
    while i <= n {
        coeffs.push(f.coeff(i, &ctx));
        i += p as usize;
    }
    Poly::from_coeffs(coeffs)
}

/// Squarefree decomposition of a monic polynomial in characteristic p:
/// pairwise-coprime monic squarefree parts with their multiplicities.
fn squarefree_decomposition(f: &Poly<FpElem>) -> Vec<(Poly<FpElem>, u32)> {
    let mut out = Vec::new();
    squarefree_into(f, 1, &mut out);
    out
}

fn squarefree_into(f: &Poly<FpElem>, base: u32, out: &mut Vec<(Poly<FpElem>, u32)>) {
    if f.is_one() {
        return;
    }
    let p = f.lc().modulus();
    let df = f.derivative();
    if df.is_zero() {
        // f lies in F_p[x^p]; recurse on its p-th root with multiplied
        // multiplicity.
        let root = p_th_root(f, p);
        squarefree_into(&root, base * p as u32, out);
        return;
    }
    let c = f.gcd(&df);
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut tail = c;
    let mut i: u32 = 1;
    while !w.is_one() {
        let y = w.gcd(&tail);
        let z = w.exact_div(&y).expect("gcd divides");
        if !z.is_one() {
            out.push((z, base * i));
        }
        tail = tail.exact_div(&y).expect("gcd divides");
        w = y;
        i += 1;
    }
    if !tail.is_one() {
        let root = p_th_root(&tail, p);
        squarefree_into(&root, base * p as u32, out);
    }
}

/// Distinct-degree splitting of a monic squarefree polynomial: returns
/// `(product of all irreducible factors of degree d, d)` pairs.
fn distinct_degree_split(f: &Poly<FpElem>) -> Vec<(Poly<FpElem>, usize)> {
    let ctx = f.lc().clone();
    let p = ctx.modulus();
    let x = Poly::x(&ctx);
    let mut out = Vec::new();
    let mut cur = f.clone();
    let mut h = x.clone();
    let mut d = 0usize;
    while cur.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > cur.degree().unwrap_or(0) {
            let deg = cur.degree().unwrap();
            out.push((cur, deg));
            break;
        }
        h = pow_mod(&h, p, &cur);
        let g = h.sub(&x).gcd(&cur);
        if g.degree().unwrap_or(0) > 0 {
            cur = cur.exact_div(&g).expect("gcd divides");
            let (_, hr) = h.divrem(&cur).expect("nonzero modulus");
            h = hr;
            out.push((g, d));
        }
    }
    out
}

/// Split a monic squarefree product of irreducibles, all of degree `d`,
/// into those irreducibles (Cantor-Zassenhaus; trace map when p = 2).
fn equal_degree_split(
    f: &Poly<FpElem>,
    d: usize,
    rng: &mut SplitMix64,
) -> Vec<Poly<FpElem>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.clone()];
    }
    let ctx = f.lc().clone();
    let p = ctx.modulus();
    loop {
        let a = random_poly_below(n, &ctx, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let shared = a.gcd(f);
        let candidate = if shared.degree().unwrap_or(0) > 0 {
            shared
        } else if p == 2 {
            // Trace map sum a + a^2 + ... + a^(2^(d-1)) mod f.
            let mut term = {
                let (_, r) = a.divrem(f).expect("nonzero modulus");
                r
            };
            let mut trace = term.clone();
            for _ in 1..d {
                term = pow_mod(&term, 2, f);
                trace = trace.add(&term);
            }
            trace.gcd(f)
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let b = crate::algebra::pow_mod_big(&a, &e, f);
            b.sub(&Poly::constant(ctx.one())).gcd(f)
        };
        let k = candidate.degree().unwrap_or(0);
        if k > 0 && k < n {
            let (_, g) = candidate.monic();
            let h = f.exact_div(&g).expect("gcd divides");
            let mut out = equal_degree_split(&g, d, rng);
            out.extend(equal_degree_split(&h, d, rng));
            return out;
        }
    }
}

fn random_poly_below(n: usize, ctx: &FpElem, rng: &mut SplitMix64) -> Poly<FpElem> {
    let p = ctx.modulus();
    loop {
        let coeffs: Vec<FpElem> = (0..n)
            .map(|_| FpElem::from_u64(rng.below(p), p))
            .collect();
        let f = Poly::from_coeffs(coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}
