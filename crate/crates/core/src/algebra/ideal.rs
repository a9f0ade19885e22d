//! Prime ideals of F[x] and the valuations they induce on F(x).

use std::fmt;

use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RationalFunction;
use super::AlgebraError;

/// Nonzero prime ideal of F[x], stored by its monic irreducible generator.
///
/// The structural checks here (monic, positive degree) are cheap; actual
/// irreducibility is certified by the constructors in `factorx`, which are
/// the intended entry points.  `from_monic_irreducible` trusts its caller on
/// that one point and is meant for generators that are irreducible by
/// construction (linear polynomials, certified factors).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimeIdealFx<K> {
    gen: Poly<K>,
}

impl<K: Field> PrimeIdealFx<K> {
    pub fn from_monic_irreducible(gen: Poly<K>) -> Result<Self, AlgebraError> {
        if gen.degree().map_or(true, |d| d == 0) || !gen.is_monic() {
            return Err(AlgebraError::NotMonicIrreducibleShape);
        }
        Ok(PrimeIdealFx { gen })
    }

    pub fn generator(&self) -> &Poly<K> {
        &self.gen
    }

    /// Degree of the residue field over F.
    pub fn residue_degree(&self) -> usize {
        self.gen.degree().expect("positive degree")
    }

    /// Canonical representative of h mod the ideal.
    pub fn reduce(&self, h: &Poly<K>) -> Poly<K> {
        h.divrem(&self.gen).expect("nonzero generator").1
    }
}

impl<K: Field> fmt::Display for PrimeIdealFx<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gen)
    }
}

/// Valuation of a nonzero polynomial at a prime ideal: the exact power of
/// the generator dividing it.  The zero polynomial has no valuation.
pub fn poly_valuation<K: Field>(f: &Poly<K>, p: &PrimeIdealFx<K>) -> Result<u64, AlgebraError> {
    Ok(split_valuation(f, p)?.0)
}

/// Valuation together with the cofactor: returns (v, f / gen^v).
pub fn split_valuation<K: Field>(
    f: &Poly<K>,
    p: &PrimeIdealFx<K>,
) -> Result<(u64, Poly<K>), AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroValuation);
    }
    let mut v = 0u64;
    let mut cur = f.clone();
    loop {
        let (q, r) = cur.divrem(p.generator())?;
        if !r.is_zero() {
            return Ok((v, cur));
        }
        v += 1;
        cur = q;
    }
}

/// Valuation of a nonzero rational function: v(num) - v(den).
pub fn ratfunc_valuation<K: Field>(
    r: &RationalFunction<K>,
    p: &PrimeIdealFx<K>,
) -> Result<i64, AlgebraError> {
    if r.is_zero() {
        return Err(AlgebraError::ZeroValuation);
    }
    let vn = poly_valuation(r.num(), p)? as i64;
    let vd = poly_valuation(r.den(), p)? as i64;
    Ok(vn - vd)
}
