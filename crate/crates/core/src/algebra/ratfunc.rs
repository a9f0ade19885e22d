//! Rational functions num/den over a field, kept in lowest terms with a
//! monic denominator.

use std::fmt;

use super::field::Field;
use super::poly::Poly;
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction<K> {
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: Field> RationalFunction<K> {
    /// Build num/den in canonical form: gcd(num, den) = 1, den monic, and
    /// the zero function is 0/1.  Errors on a zero denominator.
    pub fn new(num: Poly<K>, den: Poly<K>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if num.is_zero() {
            let one = Poly::constant(den.lc().one());
            return Ok(RationalFunction { num, den: one });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let (u, den) = den.monic();
        let ui = u.inv().expect("nonzero unit");
        Ok(RationalFunction {
            num: num.scale(&ui),
            den,
        })
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        let one = match p.sample() {
            Some(c) => Poly::constant(c.one()),
            None => {
                // Zero with no context: callers constructing the zero
                // function this way must supply context via `zero_over`.
                panic!("from_poly(zero) has no field context; use zero_over")
            }
        };
        RationalFunction { num: p, den: one }
    }

    pub fn zero_over(ctx: &K) -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::constant(ctx.one()),
        }
    }

    pub fn constant(c: K) -> Self {
        let one = Poly::constant(c.one());
        RationalFunction {
            num: Poly::constant(c),
            den: one,
        }
    }

    /// x as a rational function.
    pub fn x(ctx: &K) -> Self {
        RationalFunction::from_poly(Poly::x(ctx))
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// A field-context element.
    pub fn ctx(&self) -> &K {
        self.den.lc()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RationalFunction::new(num, den).expect("nonzero denominator")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Integer power, negative allowed for nonzero functions.
    pub fn pow(&self, e: i64) -> Result<Self, AlgebraError> {
        if e == 0 {
            return Ok(RationalFunction::constant(self.ctx().one()));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RationalFunction {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Substitute x -> x^k.  Canonical form is preserved: coprimality and a
    /// monic denominator survive coefficient stretching.
    pub fn stretch(&self, k: usize) -> Self {
        RationalFunction {
            num: self.num.stretch(k),
            den: self.den.stretch(k),
        }
    }

    /// Apply a polynomial with coefficients in K to this function.
    pub fn apply_poly(&self, p: &Poly<K>) -> Self {
        let mut acc = Self::zero_over(self.ctx());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Self::constant(c.clone()));
        }
        acc
    }
}

impl<K: Field> fmt::Display for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::{qi, FpElem};
    use super::*;

    fn q_rf(n: &[i64], d: &[i64]) -> RationalFunction<num_rational::BigRational> {
        RationalFunction::new(
            Poly::from_i64_coeffs(&qi(0), n),
            Poly::from_i64_coeffs(&qi(0), d),
        )
        .unwrap()
    }

    #[test]
    fn reduces_to_lowest_terms_with_monic_denominator() {
        // (x^2-1)/(2x+2) = (x-1)/2, and the constant denominator folds into
        // the numerator.
        let r = q_rf(&[-1, 0, 1], &[2, 2]);
        let half = num_rational::BigRational::new(1.into(), 2.into());
        assert_eq!(r.num(), &Poly::from_i64_coeffs(&qi(0), &[-1, 1]).scale(&half));
        assert!(r.den().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        let ctx = FpElem::new(0, 3);
        let r = RationalFunction::new(Poly::x(&ctx), Poly::zero());
        assert_eq!(r, Err(AlgebraError::ZeroDenominator));
    }

    #[test]
    fn field_laws_sample() {
        let a = q_rf(&[1, 1], &[0, 1]); // (x+1)/x
        let b = q_rf(&[2], &[1, 1]); // 2/(x+1)
        assert_eq!(a.mul(&b).mul(&a.inv().unwrap()), b);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.pow(-2).unwrap().mul(&a.pow(2).unwrap()), q_rf(&[1], &[1]));
        assert_eq!(a.div(&b).unwrap().mul(&b), a);
    }

    #[test]
    fn apply_poly_matches_direct_expansion() {
        // Phi_3 = x^2 + x + 1 applied to f = 1/x gives (x^2+x+1)/x^2.
        let ctx = FpElem::new(0, 5);
        let phi3 = Poly::from_i64_coeffs(&ctx, &[1, 1, 1]);
        let f = RationalFunction::new(Poly::constant(ctx.one()), Poly::x(&ctx)).unwrap();
        let v = f.apply_poly(&phi3);
        assert_eq!(v.num(), &phi3);
        assert_eq!(v.den(), &Poly::monomial(ctx.one(), 2));
    }

    #[test]
    fn stretch_preserves_canonical_form() {
        let r = q_rf(&[1, 1], &[0, 1]);
        let s = r.stretch(3);
        assert_eq!(s, q_rf(&[1, 0, 0, 1], &[0, 0, 0, 1]));
    }
}
