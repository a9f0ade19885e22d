//! Formal symbol products, cyclotomic elements, and tame homomorphisms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::K2Error;
use crate::algebra::intops::{is_prime_u64, mult_order_u64};
use crate::algebra::{
    inv_mod, mul_mod, pow_mod, ratfunc_valuation, split_valuation, Field, FpElem, Poly,
    PrimeIdealFx, RationalFunction,
};
use crate::cyclo::{cyclotomic_form, cyclotomic_poly_in, cyclotomic_poly_q};

/// A formal product of Steinberg symbols {u, v}^e with nonzero entries.
///
/// No K2 relations are applied; two products are compared only through
/// tame-symbol fingerprints.
#[derive(Debug, Clone)]
pub struct SymbolProduct<T> {
    terms: Vec<(T, T, i64)>,
}

impl<T: Clone> SymbolProduct<T> {
    /// The empty product (the identity element).
    pub fn one() -> Self {
        SymbolProduct { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[(T, T, i64)] {
        &self.terms
    }

    /// Concatenates two formal products.
    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        SymbolProduct { terms }
    }

    /// Raises the whole product to an integer power by scaling exponents.
    pub fn pow(&self, e: i64) -> Self {
        SymbolProduct {
            terms: self
                .terms
                .iter()
                .map(|(u, v, k)| (u.clone(), v.clone(), k * e))
                .collect(),
        }
    }
}

impl<K: Field> SymbolProduct<RationalFunction<K>> {
    /// The single symbol {u, v} over F(x).
    pub fn symbol(u: RationalFunction<K>, v: RationalFunction<K>) -> Result<Self, K2Error> {
        if u.is_zero() || v.is_zero() {
            return Err(K2Error::ZeroSymbolEntry);
        }
        Ok(SymbolProduct {
            terms: vec![(u, v, 1)],
        })
    }
}

impl SymbolProduct<BigRational> {
    /// The single symbol {u, v} over Q.  (Named apart from the function
    /// field constructor so both inherent impls stay unambiguous.)
    pub fn symbol_q(u: BigRational, v: BigRational) -> Result<Self, K2Error> {
        if Field::is_zero(&u) || Field::is_zero(&v) {
            return Err(K2Error::ZeroSymbolEntry);
        }
        Ok(SymbolProduct {
            terms: vec![(u, v, 1)],
        })
    }
}

/// The cyclotomic element c_n(a) = {a, Phi_n(a)}, stored with its
/// evaluated second entry.
#[derive(Debug, Clone)]
pub struct CyclotomicElement<T> {
    n: u64,
    a: T,
    phi_a: T,
}

impl<T: Clone> CyclotomicElement<T> {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn phi_value(&self) -> &T {
        &self.phi_a
    }

    /// The element as the one-term symbol product {a, Phi_n(a)}.
    pub fn symbol(&self) -> SymbolProduct<T> {
        SymbolProduct {
            terms: vec![(self.a.clone(), self.phi_a.clone(), 1)],
        }
    }
}

impl<K: Field> CyclotomicElement<RationalFunction<K>> {
    /// Builds c_n(a) over F(x), rejecting a = 0 and Phi_n(a) = 0.
    pub fn over_ratfunc(n: u64, a: RationalFunction<K>) -> Result<Self, K2Error> {
        if a.is_zero() {
            return Err(K2Error::ZeroSymbolEntry);
        }
        let phi = cyclotomic_poly_in(n, a.ctx())?;
        let phi_a = a.apply_poly(&phi);
        if phi_a.is_zero() {
            return Err(K2Error::VanishingValue { n });
        }
        Ok(CyclotomicElement { n, a, phi_a })
    }
}

impl CyclotomicElement<BigRational> {
    /// Builds c_n(a) over Q, rejecting a = 0 and Phi_n(a) = 0.
    pub fn over_q(n: u64, a: BigRational) -> Result<Self, K2Error> {
        if Field::is_zero(&a) {
            return Err(K2Error::ZeroSymbolEntry);
        }
        let phi = cyclotomic_poly_q(n)?;
        let phi_a = phi.evaluate(&a);
        if Field::is_zero(&phi_a) {
            return Err(K2Error::VanishingValue { n });
        }
        Ok(CyclotomicElement { n, a, phi_a })
    }
}

// ---------------------------------------------------------------------------
// Tame homomorphism over F(x).
// ---------------------------------------------------------------------------

/// The unit-part residue of a nonzero rational function at a prime ideal:
/// strip all powers of the generator from numerator and denominator, then
/// reduce the quotient into the residue field.
fn unit_residue<K: Field>(
    w: &RationalFunction<K>,
    ideal: &PrimeIdealFx<K>,
) -> Result<Poly<K>, K2Error> {
    let (_, n0) = split_valuation(w.num(), ideal)?;
    let (_, d0) = split_valuation(w.den(), ideal)?;
    let modulus = ideal.generator();
    let dinv = inv_mod(&d0, modulus)?;
    Ok(mul_mod(&ideal.reduce(&n0), &dinv, modulus))
}

fn pow_mod_signed<K: Field>(
    base: &Poly<K>,
    e: i64,
    modulus: &Poly<K>,
) -> Result<Poly<K>, K2Error> {
    if e >= 0 {
        Ok(pow_mod(base, e as u64, modulus))
    } else {
        let inv = inv_mod(base, modulus)?;
        Ok(pow_mod(&inv, e.unsigned_abs(), modulus))
    }
}

/// Tame homomorphism of a symbol product over F(x) at a prime ideal P:
/// the product over terms of [(-1)^(v(u)v(v)) u^(v(v)) / v^(v(u))]^e
/// reduced into F[x]/(P).  Multiplicative in the product by construction.
pub fn tame_fx<K: Field>(
    s: &SymbolProduct<RationalFunction<K>>,
    ideal: &PrimeIdealFx<K>,
) -> Result<Poly<K>, K2Error> {
    let modulus = ideal.generator();
    let ctx = modulus.lc().clone();
    let mut acc = Poly::constant(ctx.one());
    for (u, v, e) in &s.terms {
        let a = ratfunc_valuation(u, ideal)?;
        let b = ratfunc_valuation(v, ideal)?;
        let ru = unit_residue(u, ideal)?;
        let rv = unit_residue(v, ideal)?;
        let mut term = mul_mod(
            &pow_mod_signed(&ru, b, modulus)?,
            &pow_mod_signed(&rv, -a, modulus)?,
            modulus,
        );
        if (a % 2 != 0) && (b % 2 != 0) {
            term = term.scale(&ctx.from_i64(-1));
        }
        acc = mul_mod(&acc, &pow_mod_signed(&term, *e, modulus)?, modulus);
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Tame homomorphism over Q.
// ---------------------------------------------------------------------------

fn bigint_val(n: &BigInt, q: u64) -> (u64, BigInt) {
    let q = BigInt::from(q);
    let mut v = 0;
    let mut cur = n.clone();
    while (&cur % &q).is_zero() {
        cur /= &q;
        v += 1;
    }
    (v, cur)
}

fn fp_of_coprime_int(n: &BigInt, q: u64) -> FpElem {
    let m = BigInt::from(q);
    let mut r = n % &m;
    if r.is_negative() {
        r += &m;
    }
    let digits = r.to_u64_digits().1;
    FpElem::from_u64(digits.first().copied().unwrap_or(0), q)
}

fn fp_pow_signed(base: &FpElem, e: i64) -> FpElem {
    if e >= 0 {
        base.pow(e as u64)
    } else {
        base.inv().expect("nonzero residue").pow(e.unsigned_abs())
    }
}

/// Tame homomorphism of a symbol product over Q at a rational prime q,
/// using q-adic valuations; the residue lands in F_q.
pub fn tame_q(s: &SymbolProduct<BigRational>, q: u64) -> Result<FpElem, K2Error> {
    if !is_prime_u64(q) {
        return Err(K2Error::NotPrime(q));
    }
    let mut acc = FpElem::new(1, q);
    for (u, v, e) in &s.terms {
        let (a, ru) = rational_val(u, q);
        let (b, rv) = rational_val(v, q);
        let mut term = fp_pow_signed(&ru, b).mul(&fp_pow_signed(&rv, -a));
        if (a % 2 != 0) && (b % 2 != 0) {
            term = term.neg();
        }
        acc = acc.mul(&fp_pow_signed(&term, *e));
    }
    Ok(acc)
}

/// q-adic valuation of a nonzero rational together with the residue of its
/// unit part in F_q.
fn rational_val(x: &BigRational, q: u64) -> (i64, FpElem) {
    let (vn, n0) = bigint_val(x.numer(), q);
    let (vd, d0) = bigint_val(x.denom(), q);
    let unit = fp_of_coprime_int(&n0, q).mul(&fp_of_coprime_int(&d0, q).inv().expect("coprime"));
    (vn as i64 - vd as i64, unit)
}

// ---------------------------------------------------------------------------
// Closed-form tame values of linear cyclotomic elements.
// ---------------------------------------------------------------------------

/// Tame value of c_l(a) for a ratio a = (ax+b)/(cx+d) of polynomials of
/// degree <= 1 with nonzero determinant, at any prime ideal P: the residue
/// is a mod P when P is generated by the monic normalization of
/// Phi_l(ax+b, cx+d), and 1 otherwise.
///
/// Requires l prime >= 5 with Phi_l irreducible over the coefficient field
/// (automatic in characteristic 0).
pub fn cyclo_tame<K: Field>(
    c: &CyclotomicElement<RationalFunction<K>>,
    ideal: &PrimeIdealFx<K>,
) -> Result<Poly<K>, K2Error> {
    let l = c.n();
    if l < 5 || !is_prime_u64(l) {
        return Err(K2Error::BadSymbolPrime { l });
    }
    let a = c.a();
    let f = a.num().clone();
    let g = a.den().clone();
    if f.degree().unwrap_or(0) > 1 || g.degree().unwrap_or(0) > 1 {
        return Err(K2Error::NotLinearRatio);
    }
    let ctx = ideal.generator().lc().clone();
    let det = f
        .coeff(1, &ctx)
        .mul(&g.coeff(0, &ctx))
        .sub(&f.coeff(0, &ctx).mul(&g.coeff(1, &ctx)));
    if det.is_zero() {
        return Err(K2Error::NotLinearRatio);
    }
    let p = ctx.characteristic();
    if p != 0 && mult_order_u64(p % l, l) != l - 1 {
        return Err(K2Error::ReducibleOverBase { l, p });
    }
    let (_, prime) = cyclotomic_form(l, f, g)?.into_value().monic();
    if &prime == ideal.generator() {
        let modulus = ideal.generator();
        let dinv = inv_mod(a.den(), modulus)?;
        Ok(mul_mod(&ideal.reduce(a.num()), &dinv, modulus))
    } else {
        Ok(Poly::constant(ctx.one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qi;
    use crate::factorx::is_irreducible_fp;
    use crate::rng::SplitMix64;

    fn fppoly(p: u64, coeffs: &[i64]) -> Poly<FpElem> {
        Poly::from_i64_coeffs(&FpElem::new(0, p), coeffs)
    }

    fn qpoly(coeffs: &[i64]) -> Poly<BigRational> {
        Poly::from_i64_coeffs(&qi(0), coeffs)
    }

    fn rf<K: Field>(num: Poly<K>, den: Poly<K>) -> RationalFunction<K> {
        RationalFunction::new(num, den).unwrap()
    }

    fn ideal_of<K: Field>(generator: Poly<K>) -> PrimeIdealFx<K> {
        PrimeIdealFx::from_monic_irreducible(generator).unwrap()
    }

    #[test]
    fn tame_of_plain_cyclotomic_symbol_over_q() {
        // {x, Phi_5(x)}: residue x at (Phi_5), residue 1 at (x).
        let x = RationalFunction::x(&qi(0));
        let c = CyclotomicElement::over_ratfunc(5, x.clone()).unwrap();
        let phi5 = qpoly(&[1, 1, 1, 1, 1]);
        let at_phi5 = ideal_of(phi5);
        let res = tame_fx(&c.symbol(), &at_phi5).unwrap();
        assert_eq!(res, qpoly(&[0, 1]));
        assert!(!res.is_one());

        let at_x = ideal_of(qpoly(&[0, 1]));
        assert!(tame_fx(&c.symbol(), &at_x).unwrap().is_one());
    }

    #[test]
    fn steinberg_pair_is_tame_trivial_at_x() {
        let x = RationalFunction::x(&qi(0));
        let one_minus_x = rf(qpoly(&[1, -1]), qpoly(&[1]));
        let s = SymbolProduct::symbol(x, one_minus_x).unwrap();
        let at_x = ideal_of(qpoly(&[0, 1]));
        assert!(tame_fx(&s, &at_x).unwrap().is_one());
    }

    #[test]
    fn tame_q_examples() {
        // {-2, 11} at 11: v(-2) = 0, v(11) = 1, residue (-2)^1 = 9 mod 11.
        let s = SymbolProduct::symbol_q(qi(-2), qi(11)).unwrap();
        assert_eq!(tame_q(&s, 11).unwrap(), FpElem::new(-2, 11));

        // Both valuations zero: residue 1.
        let s = SymbolProduct::symbol_q(qi(3), qi(5)).unwrap();
        assert!(tame_q(&s, 7).unwrap().is_one());

        // {2, 2} at 2: (-1)^(1*1) * 2/2 = -1 = 1 mod 2.
        let s = SymbolProduct::symbol_q(qi(2), qi(2)).unwrap();
        assert!(tame_q(&s, 2).unwrap().is_one());

        // Away from 2 both valuations vanish, so the residue is 1.
        assert!(tame_q(&s, 3).unwrap().is_one());

        // {2, 3} at 3: v(2) = 0, v(3) = 1, residue 2^1 = 2.
        let s = SymbolProduct::symbol_q(qi(2), qi(3)).unwrap();
        assert_eq!(tame_q(&s, 3).unwrap(), FpElem::new(2, 3));
        let s = SymbolProduct::symbol_q(qi(2), qi(2)).unwrap();

        assert!(matches!(
            SymbolProduct::symbol_q(qi(0), qi(2)),
            Err(K2Error::ZeroSymbolEntry)
        ));
        assert!(matches!(tame_q(&s, 6), Err(K2Error::NotPrime(6))));
    }

    fn random_ratfunc(rng: &mut SplitMix64, p: u64) -> RationalFunction<FpElem> {
        let ctx = FpElem::new(0, p);
        loop {
            let deg_n = rng.below(3) as usize;
            let deg_d = rng.below(3) as usize;
            let num = Poly::from_coeffs(
                (0..=deg_n)
                    .map(|_| FpElem::from_u64(rng.below(p), p))
                    .collect::<Vec<_>>(),
            );
            let den = Poly::from_coeffs(
                (0..=deg_d)
                    .map(|_| FpElem::from_u64(rng.below(p), p))
                    .collect::<Vec<_>>(),
            );
            if num.is_zero() || den.is_zero() {
                continue;
            }
            let _ = &ctx;
            return rf(num, den);
        }
    }

    #[test]
    fn tame_fx_is_multiplicative_and_bilinear() {
        let p = 3;
        let mut rng = SplitMix64::new(7);
        let ideals = [
            ideal_of(fppoly(p, &[0, 1])),
            ideal_of(fppoly(p, &[1, 1])),
            ideal_of(fppoly(p, &[1, 0, 1])),
        ];
        for _ in 0..25 {
            let u = random_ratfunc(&mut rng, p);
            let v = random_ratfunc(&mut rng, p);
            let w = random_ratfunc(&mut rng, p);
            for ideal in &ideals {
                let m = ideal.generator();
                // Multiplicativity on formal products.
                let s1 = SymbolProduct::symbol(u.clone(), w.clone()).unwrap();
                let s2 = SymbolProduct::symbol(v.clone(), w.clone()).unwrap();
                let lhs = tame_fx(&s1.mul(&s2), ideal).unwrap();
                let rhs = mul_mod(
                    &tame_fx(&s1, ideal).unwrap(),
                    &tame_fx(&s2, ideal).unwrap(),
                    m,
                );
                assert_eq!(lhs, rhs);
                // Bilinearity shadow: {uv, w} has the same tame value as
                // {u, w}{v, w}.
                let uv = u.mul(&v);
                let joint = SymbolProduct::symbol(uv, w.clone()).unwrap();
                assert_eq!(tame_fx(&joint, ideal).unwrap(), rhs);
            }
        }
    }

    #[test]
    fn steinberg_shadow_vanishes() {
        // tau({u, 1-u}) = 1 for random u with u, 1-u nonzero, at several
        // prime ideals.
        let p = 3;
        let mut rng = SplitMix64::new(19);
        let one = RationalFunction::constant(FpElem::new(1, p));
        let ideals = [
            ideal_of(fppoly(p, &[0, 1])),
            ideal_of(fppoly(p, &[2, 1])),
            ideal_of(fppoly(p, &[1, 0, 1])),
            ideal_of(fppoly(p, &[1, 2, 0, 1])),
        ];
        let mut checked = 0;
        while checked < 50 {
            let u = random_ratfunc(&mut rng, p);
            let w = one.sub(&u);
            if u.is_zero() || w.is_zero() {
                continue;
            }
            checked += 1;
            let s = SymbolProduct::symbol(u, w).unwrap();
            for ideal in &ideals {
                assert!(tame_fx(&s, ideal).unwrap().is_one());
            }
        }
    }

    #[test]
    fn cyclo_tame_linear_cases_over_f3() {
        let p = 3;
        let ctx = FpElem::new(0, p);
        let x = RationalFunction::x(&ctx);
        let phi5 = fppoly(p, &[1, 1, 1, 1, 1]);
        assert!(is_irreducible_fp(&phi5).unwrap());
        let at_phi5 = ideal_of(phi5);

        // c_5(x) at (Phi_5): residue x.
        let c = CyclotomicElement::over_ratfunc(5, x.clone()).unwrap();
        assert_eq!(cyclo_tame(&c, &at_phi5).unwrap(), fppoly(p, &[0, 1]));

        // c_5(x+1) at (Phi_5(x)): the supporting prime is Phi_5(x+1), so
        // the residue here is 1.
        let xp1 = rf(fppoly(p, &[1, 1]), fppoly(p, &[1]));
        let c_shift = CyclotomicElement::over_ratfunc(5, xp1).unwrap();
        assert!(cyclo_tame(&c_shift, &at_phi5).unwrap().is_one());

        // And at its own prime the residue is x + 1.
        let (_, phi5_shift) = cyclotomic_form(5, fppoly(p, &[1, 1]), fppoly(p, &[1]))
            .unwrap()
            .into_value()
            .monic();
        let at_shift = ideal_of(phi5_shift);
        assert_eq!(cyclo_tame(&c_shift, &at_shift).unwrap(), fppoly(p, &[1, 1]));
    }

    #[test]
    fn cyclo_tame_agrees_with_tame_fx() {
        // Dual-path check for c_7 of several linear ratios over F_3 at
        // every involved prime and at unrelated primes.
        let p = 3;
        let ctx = FpElem::new(0, p);
        let ratios = [
            (fppoly(p, &[0, 1]), fppoly(p, &[1])),
            (fppoly(p, &[1, 1]), fppoly(p, &[1])),
            (fppoly(p, &[2, 1]), fppoly(p, &[1])),
            (fppoly(p, &[1]), fppoly(p, &[0, 1])),
            (fppoly(p, &[2, 1]), fppoly(p, &[1, 1])),
        ];
        let mut ideals = vec![
            ideal_of(fppoly(p, &[0, 1])),
            ideal_of(fppoly(p, &[1, 0, 1])),
        ];
        for (f, g) in &ratios {
            let (_, prime) = cyclotomic_form(7, f.clone(), g.clone())
                .unwrap()
                .into_value()
                .monic();
            ideals.push(ideal_of(prime));
        }
        for (f, g) in &ratios {
            let a = rf(f.clone(), g.clone());
            let c = CyclotomicElement::over_ratfunc(7, a).unwrap();
            for ideal in &ideals {
                let closed = cyclo_tame(&c, ideal).unwrap();
                let expanded = tame_fx(&c.symbol(), ideal).unwrap();
                assert_eq!(closed, expanded, "at {}", ideal.generator());
            }
        }
        let _ = ctx;
    }

    #[test]
    fn cyclotomic_element_preconditions() {
        // Phi_1(1) = 0 and Phi_2(-1) = 0 must be rejected.
        assert!(matches!(
            CyclotomicElement::over_q(1, qi(1)),
            Err(K2Error::VanishingValue { n: 1 })
        ));
        assert!(matches!(
            CyclotomicElement::over_q(2, qi(-1)),
            Err(K2Error::VanishingValue { n: 2 })
        ));
        assert!(matches!(
            CyclotomicElement::over_q(5, qi(0)),
            Err(K2Error::ZeroSymbolEntry)
        ));
        let c = CyclotomicElement::over_q(5, qi(2)).unwrap();
        assert_eq!(c.phi_value(), &qi(31));
        assert_eq!(c.symbol().terms().len(), 1);
    }

    #[test]
    fn symbol_product_algebra() {
        let s = SymbolProduct::symbol_q(qi(2), qi(3)).unwrap();
        let t = SymbolProduct::symbol_q(qi(5), qi(7)).unwrap();
        let st = s.mul(&t);
        assert_eq!(st.terms().len(), 2);
        let inv = st.pow(-1);
        assert_eq!(inv.terms()[0].2, -1);
        // Product with its inverse is tame-trivial everywhere.
        for q in [2u64, 3, 5, 7, 11] {
            assert!(tame_q(&st.mul(&inv), q).unwrap().is_one());
        }
        assert!(SymbolProduct::<BigRational>::one().terms().is_empty());
    }
}
