//! Exhaustive search for witness pairs realizing a product of cyclotomic
//! generators as a single cyclotomic element over F_p(x).
//!
//! A product prod_i c_l(a_i x + b_i / c_i x + d_i)^(t_i) equals c_l(f/g)
//! exactly when Phi_l(f, g) = alpha * Psi^l * prod_i P_i^(r_i) with
//! l not dividing r_i, where P_i is the monic form of the i-th generator,
//! together with the residue congruences (f/g)^(r_i) = z_i^(t_i) mod P_i
//! for the canonical ratio root z_i.  Any pair divisible by the required
//! primes satisfies f = z_i^(k_i) * g mod P_i for some k_i in [1, l-1], so
//! instead of enumerating all (f, g) the search enumerates g, the residue
//! indices k_i, and the lifts of the Chinese-remainder solution for f.
//! Pairs where f and g both lie in F[x^p] are skipped: such a pair is the
//! Frobenius stretch of a smaller core pair, and stretching a core witness
//! by x -> x^(p^r) multiplies its effective exponents by p^(2r), so queries
//! recover every stretched solution from the core list by pure modular
//! arithmetic on (k_i, r_i).

use rayon::prelude::*;

use super::K2Error;
use crate::algebra::intops::{is_prime_u64, mul_mod_u64, mult_order_u64, pow_mod_u64};
use crate::algebra::{inv_mod, mul_mod, pow_mod, Field, FpElem, Poly};
use crate::cyclo::{cyclotomic_form, decompose_form, matrix_form, DecompositionOutcome};
use crate::moebius::{essentially_distinct, Mat2};

/// Hard cap on the number of enumerated candidate pairs.
const CANDIDATE_CAP: u128 = 500_000_000;

/// Degree cap for materializing a stretched witness pair.
const WITNESS_DEGREE_CAP: u128 = 10_000_000;

/// Stretched witness values of degree up to this bound are re-verified
/// through the generic decomposition routine.
const DEEP_VERIFY_DEGREE: usize = 600;

// ---------------------------------------------------------------------------
// Raw kernel: dense F_p polynomials as u64 coefficient vectors.
//
// Little-endian coefficients, no trailing zeros, zero = empty vector.  All
// entries are reduced mod p except transiently inside mul_raw, whose
// delayed reduction needs len * (p-1)^2 < 2^64; the candidate cap keeps
// p^(B+1) <= 5 * 10^8, so p < 2^30 and every kernel polynomial is far too
// short to overflow.
// ---------------------------------------------------------------------------

fn trim_raw(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn raw_of(f: &Poly<FpElem>) -> Vec<u64> {
    let mut v: Vec<u64> = f.coeffs().iter().map(|c| c.residue()).collect();
    trim_raw(&mut v);
    v
}

fn poly_of(r: &[u64], p: u64) -> Poly<FpElem> {
    Poly::from_coeffs(r.iter().map(|&c| FpElem::from_u64(c, p)).collect())
}

fn inv_u64(a: u64, p: u64) -> u64 {
    pow_mod_u64(a % p, p - 2, p)
}

fn mul_raw(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    for c in &mut out {
        *c %= p;
    }
    trim_raw(&mut out);
    out
}

fn add_into(acc: &mut Vec<u64>, b: &[u64], p: u64) {
    if acc.len() < b.len() {
        acc.resize(b.len(), 0);
    }
    for (i, &c) in b.iter().enumerate() {
        let s = acc[i] + c;
        acc[i] = if s >= p { s - p } else { s };
    }
    trim_raw(acc);
}

/// Remainder of a by a monic modulus m.
fn rem_monic_raw(a_in: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let mut a = a_in.to_vec();
    while a.len() > dm {
        let top = a.len() - 1;
        let c = a[top];
        if c != 0 {
            let shift = top - dm;
            for (j, &mj) in m.iter().enumerate().take(dm) {
                if mj != 0 {
                    let t = c * mj % p;
                    a[shift + j] = (a[shift + j] + p - t) % p;
                }
            }
        }
        a.pop();
    }
    trim_raw(&mut a);
    a
}

/// Quotient and remainder by a monic modulus m.
fn divrem_monic_raw(a_in: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let dm = m.len() - 1;
    if a_in.len() <= dm {
        return (Vec::new(), a_in.to_vec());
    }
    let mut a = a_in.to_vec();
    let mut q = vec![0u64; a.len() - dm];
    for top in (dm..a.len()).rev() {
        let c = a[top];
        if c != 0 {
            let shift = top - dm;
            q[shift] = c;
            for (j, &mj) in m.iter().enumerate().take(dm) {
                if mj != 0 {
                    let t = c * mj % p;
                    a[shift + j] = (a[shift + j] + p - t) % p;
                }
            }
        }
    }
    a.truncate(dm);
    trim_raw(&mut a);
    (q, a)
}

/// Full valuation at a monic irreducible m along with the cofactor.
fn split_valuation_raw(h: &[u64], m: &[u64], p: u64) -> (u64, Vec<u64>) {
    let mut v = 0;
    let mut cur = h.to_vec();
    loop {
        let (q, r) = divrem_monic_raw(&cur, m, p);
        if !r.is_empty() || q.is_empty() {
            return (v, cur);
        }
        v += 1;
        cur = q;
    }
}

/// Phi_l(f, g) = sum_{j=0}^{l-1} f^j g^(l-1-j) by Horner iteration.
fn phi_value_raw(f: &[u64], g: &[u64], l: u64, p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut gp = g.to_vec();
    for k in 1..l {
        let mut next = mul_raw(&acc, f, p);
        add_into(&mut next, &gp, p);
        acc = next;
        if k + 1 < l {
            gp = mul_raw(&gp, g, p);
        }
    }
    acc
}

/// Whether every nonzero coefficient sits at an index divisible by p,
/// i.e. the polynomial is a composition with x^p.
fn in_frobenius_image(a: &[u64], p: u64) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, &c)| c == 0 || (i as u64) % p == 0)
}

fn gcd_is_constant(a0: &[u64], b0: &[u64], p: u64) -> bool {
    let mut a = a0.to_vec();
    let mut b = b0.to_vec();
    while !b.is_empty() {
        if b.len() == 1 {
            return true;
        }
        let li = inv_u64(*b.last().unwrap(), p);
        let bm: Vec<u64> = b.iter().map(|&c| c * li % p).collect();
        let r = rem_monic_raw(&a, &bm, p);
        a = std::mem::replace(&mut b, r);
    }
    a.len() == 1
}

fn pow_raw(a: &[u64], e: u64, p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = a.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_raw(&result, &base, p);
        }
        e >>= 1;
        if e > 0 {
            base = mul_raw(&base, &base, p);
        }
    }
    result
}

/// Monic l-th root of a monic polynomial, solved coefficient by
/// coefficient from the top; requires p not dividing l.
fn lth_root_monic_raw(c: &[u64], l: u64, p: u64) -> Option<Vec<u64>> {
    let dc = c.len() - 1;
    let lu = l as usize;
    if dc % lu != 0 {
        return None;
    }
    let d = dc / lu;
    let mut psi = vec![0u64; d + 1];
    psi[d] = 1;
    let linv = inv_u64(l % p, p);
    for step in 1..=d {
        let pw = pow_raw(&psi, l, p);
        let idx = dc - step;
        let have = pw.get(idx).copied().unwrap_or(0);
        psi[d - step] = (c[idx] + p - have) % p * linv % p;
    }
    if pow_raw(&psi, l, p).as_slice() == c {
        Some(psi)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Survivors, witnesses, outcomes.
// ---------------------------------------------------------------------------

/// A core pair (f, g) whose form decomposes over the generator basis:
/// Phi_l(f, g) = alpha * Psi^l * prod_i P_i^(r_i) with l not dividing r_i,
/// and f = z_i^(k_i) * g mod P_i.
#[derive(Debug, Clone)]
pub struct Survivor {
    f: Poly<FpElem>,
    g: Poly<FpElem>,
    theta: u64,
    ks: Vec<u64>,
    rs: Vec<u64>,
}

impl Survivor {
    pub fn f(&self) -> &Poly<FpElem> {
        &self.f
    }

    pub fn g(&self) -> &Poly<FpElem> {
        &self.g
    }

    /// max(deg f, deg g): the primary component of the canonical order.
    pub fn theta(&self) -> u64 {
        self.theta
    }

    /// Residue indices k_i with f = z_i^(k_i) * g mod P_i.
    pub fn ks(&self) -> &[u64] {
        &self.ks
    }

    /// Valuations r_i of Phi_l(f, g) at the basis primes.
    pub fn rs(&self) -> &[u64] {
        &self.rs
    }
}

/// A witness pair realizing the queried product: the ratio f/g satisfies
/// prod_i c_l(ratio_i)^(t_i) = c_l(f/g).  `descent` records how often the
/// underlying core pair was stretched by x -> x^p.
#[derive(Debug, Clone)]
pub struct SearchWitness {
    f: Poly<FpElem>,
    g: Poly<FpElem>,
    descent: u32,
}

impl SearchWitness {
    pub fn f(&self) -> &Poly<FpElem> {
        &self.f
    }

    pub fn g(&self) -> &Poly<FpElem> {
        &self.g
    }

    pub fn descent(&self) -> u32 {
        self.descent
    }
}

/// Outcome of a witness query against a completed search.
#[derive(Debug, Clone)]
pub enum BruteForceOutcome {
    /// A witness pair exists; the canonically first one is returned.
    Witness(SearchWitness),
    /// No pair within the degree bound realizes the product.
    NoneWithinBound {
        degree_bound: usize,
        core_pairs_tested: u64,
    },
}

// ---------------------------------------------------------------------------
// The search itself.
// ---------------------------------------------------------------------------

/// Exhaustive enumeration of all core pairs (f, g) over F_p with
/// max(deg f, deg g) <= degree_bound whose form decomposes over the given
/// generator matrices.  Construction runs the full enumeration once;
/// `query` then answers any exponent vector by modular arithmetic on the
/// recorded survivors.
#[derive(Debug)]
pub struct CyclotomicSearch {
    l: u64,
    p: u64,
    generators: Vec<Mat2<FpElem>>,
    degree_bound: usize,
    primes: Vec<Poly<FpElem>>,
    survivors: Vec<Survivor>,
    core_pairs_tested: u64,
}

impl CyclotomicSearch {
    pub fn new(
        l: u64,
        p: u64,
        generators: &[Mat2<FpElem>],
        degree_bound: usize,
    ) -> Result<Self, K2Error> {
        if l < 5 || !is_prime_u64(l) {
            return Err(K2Error::BadSymbolPrime { l });
        }
        if !is_prime_u64(p) {
            return Err(K2Error::NotPrime(p));
        }
        if p == l {
            return Err(K2Error::BadSymbolPrime { l });
        }
        if mult_order_u64(p % l, l) != l - 1 {
            return Err(K2Error::ReducibleOverBase { l, p });
        }
        let n = generators.len();
        if n == 0 {
            return Err(K2Error::EmptyGenerators);
        }
        let ctx = FpElem::new(0, p);
        let roots = ctx.roots_of_unity();
        for i in 0..n {
            for j in (i + 1)..n {
                if !essentially_distinct(&generators[i], &generators[j], &roots) {
                    return Err(K2Error::GeneratorsNotDistinct(i, j));
                }
            }
        }

        // Monic basis primes P_i and canonical ratio roots z_i: the residue
        // of (a_i x + b_i)/(c_i x + d_i) mod P_i, a primitive l-th root of
        // unity in the residue field.
        let mut primes: Vec<Poly<FpElem>> = Vec::with_capacity(n);
        let mut ratio_roots: Vec<Poly<FpElem>> = Vec::with_capacity(n);
        for m in generators {
            let [a, b, c, d] = m.entries();
            let num = Poly::from_coeffs(vec![b.clone(), a.clone()]);
            let den = Poly::from_coeffs(vec![d.clone(), c.clone()]);
            let (_, prime) = matrix_form(l, m)?.into_value().monic();
            debug_assert_eq!(prime.degree(), Some((l - 1) as usize));
            let z = mul_mod(&num, &inv_mod(&den, &prime)?, &prime);
            debug_assert!(pow_mod(&z, l, &prime).is_one());
            debug_assert!(!z.is_one());
            ratio_roots.push(z);
            primes.push(prime);
        }

        // CRT data over M = prod P_i.
        let mut modulus = Poly::constant(ctx.one());
        for prime in &primes {
            modulus = modulus.mul(prime);
        }
        let mut idempotents: Vec<Poly<FpElem>> = Vec::with_capacity(n);
        for prime in &primes {
            let cof = modulus.exact_div(prime)?;
            let e = cof.mul(&inv_mod(&cof, prime)?);
            debug_assert!(mul_mod(&e, &Poly::constant(ctx.one()), prime).is_one());
            idempotents.push(e);
        }

        let deg_m = modulus.degree().expect("product of monic primes");
        let b = degree_bound;
        let combos: u128 = ((l - 1) as u128).pow(n as u32);
        let g_count: u128 = (p as u128)
            .checked_pow(b as u32 + 1)
            .ok_or(K2Error::SearchTooLarge {
                candidates: u128::MAX,
            })?;
        let lift_count: u128 = if deg_m <= b {
            (p as u128)
                .checked_pow((b - deg_m) as u32 + 1)
                .ok_or(K2Error::SearchTooLarge {
                    candidates: u128::MAX,
                })?
        } else {
            1
        };
        let candidates = g_count
            .checked_mul(combos)
            .and_then(|c| c.checked_mul(lift_count))
            .ok_or(K2Error::SearchTooLarge {
                candidates: u128::MAX,
            })?;
        if candidates > CANDIDATE_CAP {
            return Err(K2Error::SearchTooLarge { candidates });
        }

        // Raw kernel data, including z_i^k tables for k in [1, l-1] and the
        // lift polynomials M * h.
        let primes_raw: Vec<Vec<u64>> = primes.iter().map(raw_of).collect();
        let modulus_raw = raw_of(&modulus);
        let idem_raw: Vec<Vec<u64>> = idempotents.iter().map(raw_of).collect();
        let mut zpow_raw: Vec<Vec<Vec<u64>>> = Vec::with_capacity(n);
        for (z, prime) in ratio_roots.iter().zip(&primes) {
            let mut table = Vec::with_capacity((l - 1) as usize);
            let mut cur = z.clone();
            for _ in 1..l {
                table.push(raw_of(&cur));
                cur = mul_mod(&cur, z, prime);
            }
            debug_assert!(cur.is_one());
            zpow_raw.push(table);
        }
        let mut lifts_raw: Vec<Vec<u64>> = Vec::new();
        if deg_m <= b {
            let digits = b - deg_m + 1;
            for h_index in 0..(lift_count as u64) {
                let mut h = Vec::with_capacity(digits);
                let mut d = h_index;
                for _ in 0..digits {
                    h.push(d % p);
                    d /= p;
                }
                trim_raw(&mut h);
                lifts_raw.push(mul_raw(&modulus_raw, &h, p));
            }
        } else {
            lifts_raw.push(Vec::new());
        }

        let (mut found, core_pairs_tested) = (1..g_count as u64)
            .into_par_iter()
            .fold(
                || (Vec::new(), 0u64),
                |mut acc, g_index| {
                    scan_one_g(
                        g_index,
                        l,
                        p,
                        b,
                        &primes_raw,
                        &modulus_raw,
                        &idem_raw,
                        &zpow_raw,
                        &lifts_raw,
                        &mut acc.0,
                        &mut acc.1,
                    );
                    acc
                },
            )
            .reduce(
                || (Vec::new(), 0u64),
                |mut a, bpart| {
                    a.0.extend(bpart.0);
                    a.1 += bpart.1;
                    a
                },
            );

        // Canonical order: theta, deg f, f coefficients from the constant
        // term, deg g, g coefficients.  Distinct survivors always have
        // distinct pairs, so the order is total and deterministic.
        found.sort_by(|x, y| {
            let kx = (x.0.len().max(x.1.len()), x.0.len(), &x.0, x.1.len(), &x.1);
            let ky = (y.0.len().max(y.1.len()), y.0.len(), &y.0, y.1.len(), &y.1);
            kx.cmp(&ky)
        });
        let survivors = found
            .into_iter()
            .map(|(f, g, ks, rs)| Survivor {
                theta: (f.len().max(g.len()) as u64).saturating_sub(1),
                f: poly_of(&f, p),
                g: poly_of(&g, p),
                ks,
                rs,
            })
            .collect();

        Ok(CyclotomicSearch {
            l,
            p,
            generators: generators.to_vec(),
            degree_bound,
            primes,
            survivors,
            core_pairs_tested,
        })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// Monic basis primes, in generator order.
    pub fn primes(&self) -> &[Poly<FpElem>] {
        &self.primes
    }

    /// Decomposable core pairs in canonical order.
    pub fn survivors(&self) -> &[Survivor] {
        &self.survivors
    }

    /// Number of core pairs that passed the cheap filters and were tested
    /// for decomposability.
    pub fn core_pairs_tested(&self) -> u64 {
        self.core_pairs_tested
    }

    /// Answers whether prod_i c_l(ratio_i)^(t_i) is cyclotomic within the
    /// degree bound: scans survivors in canonical order for a descent step
    /// r with k_i * r_i * p^(2r) = t_i mod l for every i, and returns the
    /// first match stretched by x -> x^(p^r).  Witness values of small
    /// degree are re-verified through the generic decomposition routine.
    pub fn query(&self, exponents: &[u64], seed: u64) -> Result<BruteForceOutcome, K2Error> {
        let l = self.l;
        let n = self.generators.len();
        if exponents.len() != n {
            return Err(K2Error::ExponentCountMismatch {
                expected: n,
                got: exponents.len(),
            });
        }
        for &t in exponents {
            if t == 0 || t >= l {
                return Err(K2Error::ExponentOutOfRange { t, max: l - 1 });
            }
        }
        let q = mul_mod_u64(self.p % l, self.p % l, l);
        let period = mult_order_u64(q, l);
        for s in &self.survivors {
            let mut factor = 1u64;
            for r_step in 0..period {
                let matches = (0..n).all(|i| {
                    let lhs = mul_mod_u64(mul_mod_u64(s.ks[i] % l, s.rs[i] % l, l), factor, l);
                    lhs == exponents[i] % l
                });
                if matches {
                    return self.materialize(s, r_step as u32, exponents, seed);
                }
                factor = mul_mod_u64(factor, q, l);
            }
        }
        Ok(BruteForceOutcome::NoneWithinBound {
            degree_bound: self.degree_bound,
            core_pairs_tested: self.core_pairs_tested,
        })
    }

    fn materialize(
        &self,
        s: &Survivor,
        r_step: u32,
        exponents: &[u64],
        seed: u64,
    ) -> Result<BruteForceOutcome, K2Error> {
        let stretch = (self.p as u128).pow(r_step);
        let witness_degree = stretch * s.theta as u128;
        if witness_degree > WITNESS_DEGREE_CAP {
            return Err(K2Error::SearchTooLarge {
                candidates: witness_degree,
            });
        }
        let f = s.f.stretch(stretch as usize);
        let g = s.g.stretch(stretch as usize);
        let value_degree = (self.l - 1) as u128 * witness_degree;
        if value_degree <= DEEP_VERIFY_DEGREE as u128 {
            let form = cyclotomic_form(self.l, f.clone(), g.clone())?;
            match decompose_form(&form, &self.generators, Some(exponents), seed)? {
                DecompositionOutcome::Decomposed(d) => {
                    let expect: Vec<(usize, u64)> = s
                        .rs
                        .iter()
                        .enumerate()
                        .map(|(i, &r)| (i, r * stretch as u64))
                        .collect();
                    assert_eq!(
                        d.exponents(),
                        expect.as_slice(),
                        "stretched valuations disagree with the kernel"
                    );
                }
                DecompositionOutcome::NoDecomposition { reason } => {
                    panic!("survivor failed independent re-verification: {reason}");
                }
            }
        }
        Ok(BruteForceOutcome::Witness(SearchWitness {
            f,
            g,
            descent: r_step,
        }))
    }
}

/// Per-g slice of the enumeration: force f = z_i^(k_i) * g mod P_i through
/// the precomputed Chinese-remainder idempotents, walk all lifts, filter to
/// monic core pairs with trivial gcd, and keep the pairs whose form is
/// alpha * Psi^l * prod P_i^(r_i) with l not dividing any r_i.
#[allow(clippy::too_many_arguments)]
fn scan_one_g(
    g_index: u64,
    l: u64,
    p: u64,
    b: usize,
    primes_raw: &[Vec<u64>],
    modulus_raw: &[u64],
    idem_raw: &[Vec<u64>],
    zpow_raw: &[Vec<Vec<u64>>],
    lifts_raw: &[Vec<u64>],
    out: &mut Vec<(Vec<u64>, Vec<u64>, Vec<u64>, Vec<u64>)>,
    tested: &mut u64,
) {
    let n = primes_raw.len();
    let mut g = Vec::with_capacity(b + 1);
    let mut d = g_index;
    for _ in 0..=b {
        g.push(d % p);
        d /= p;
    }
    trim_raw(&mut g);

    // Residues of g at each prime; a vanishing residue forces P_i | gcd.
    let mut g_res: Vec<Vec<u64>> = Vec::with_capacity(n);
    for prime in primes_raw {
        let r = rem_monic_raw(&g, prime, p);
        if r.is_empty() {
            return;
        }
        g_res.push(r);
    }
    let g_in_frob = in_frobenius_image(&g, p);

    // L[i][k-1] = (z_i^k * g mod P_i) * E_i mod M.
    let mut crt_terms: Vec<Vec<Vec<u64>>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity((l - 1) as usize);
        for zk in &zpow_raw[i] {
            let s = rem_monic_raw(&mul_raw(zk, &g_res[i], p), &primes_raw[i], p);
            let t = rem_monic_raw(&mul_raw(&s, &idem_raw[i], p), modulus_raw, p);
            row.push(t);
        }
        crt_terms.push(row);
    }

    let combos = ((l - 1) as u64).pow(n as u32);
    for combo in 0..combos {
        let mut f0: Vec<u64> = Vec::new();
        let mut ks = Vec::with_capacity(n);
        let mut c = combo;
        for row in crt_terms.iter() {
            let k = (c % (l - 1)) + 1;
            c /= l - 1;
            ks.push(k);
            add_into(&mut f0, &row[(k - 1) as usize], p);
        }
        for lift in lifts_raw {
            let mut f = f0.clone();
            add_into(&mut f, lift, p);
            if f.last() != Some(&1) || f.len() > b + 1 {
                continue;
            }
            if g_in_frob && in_frobenius_image(&f, p) {
                continue;
            }
            if !gcd_is_constant(&f, &g, p) {
                continue;
            }
            *tested += 1;

            let value = phi_value_raw(&f, &g, l, p);
            let mut rs = Vec::with_capacity(n);
            let mut cof = value;
            let mut ok = true;
            for prime in primes_raw {
                let (v, rest) = split_valuation_raw(&cof, prime, p);
                debug_assert!(v >= 1, "forced residue guarantees divisibility");
                if v % l == 0 {
                    ok = false;
                    break;
                }
                rs.push(v);
                cof = rest;
            }
            if !ok {
                continue;
            }
            // Residual must be alpha * Psi^l.
            if cof.len() > 1 {
                let alpha_inv = inv_u64(*cof.last().unwrap(), p);
                let monic: Vec<u64> = cof.iter().map(|&x| x * alpha_inv % p).collect();
                if lth_root_monic_raw(&monic, l, p).is_none() {
                    continue;
                }
            }
            out.push((f, g.clone(), ks.clone(), rs));
        }
    }
}

/// One-shot convenience: build the search for the generators and bound,
/// then query a single exponent vector.
pub fn brute_force_cyclotomicity(
    l: u64,
    p: u64,
    generators: &[Mat2<FpElem>],
    degree_bound: usize,
    exponents: &[u64],
    seed: u64,
) -> Result<BruteForceOutcome, K2Error> {
    CyclotomicSearch::new(l, p, generators, degree_bound)?.query(exponents, seed)
}
