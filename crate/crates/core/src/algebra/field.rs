//! The `Field` trait, prime-field elements, and roots-of-unity data.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::intops;
use super::poly::Poly;
use super::zpoly;
use super::AlgebraError;

/// An exactly-representable field element.
///
/// Elements carry their own field context: `zero`, `one`, and `from_i64`
/// produce elements of the same field as the receiver.  This is what lets
/// a dynamic-modulus `FpElem` and a `BigRational` share one polynomial
/// type without threading a separate field descriptor everywhere.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    /// Additive identity of the receiver's field.
    fn zero(&self) -> Self;
    /// Multiplicative identity of the receiver's field.
    fn one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self) -> Option<Self>;
    /// Field characteristic, 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    /// Image of the integer `n` in the receiver's field.
    fn from_i64(&self, n: i64) -> Self;
    /// Parse an element from its canonical text form, in the receiver's field.
    fn parse_elem(&self, s: &str) -> Result<Self, AlgebraError>;
    /// The group W(F) of roots of unity, as far as this crate models it.
    fn roots_of_unity(&self) -> RootsOfUnitySpec<Self>
    where
        Self: Sized;
    /// Sign split for display: (magnitude, is_negative).  Fields without a
    /// sign notion report (self, false).
    fn abs_sign(&self) -> (Self, bool) {
        (self.clone(), false)
    }
    /// Polynomial gcd strategy hook.  The default monic Euclidean algorithm
    /// is right for finite fields; Q overrides it to work on primitive
    /// integer parts with subresultant remainders, which avoids the
    /// coefficient blowup of naive fraction arithmetic.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self>
    where
        Self: Sized,
    {
        Poly::gcd_euclid(a, b)
    }
}

/// Description of the roots of unity W(F) used by essential-distinctness
/// tests.  Every mu in the described set satisfies mu^k = 1 for some k >= 1.
#[derive(Clone, Debug, PartialEq)]
pub enum RootsOfUnitySpec<K> {
    /// W(F) = F^*: correct for every finite field.
    AllNonzero,
    /// W(F) = {1, -1}: correct for Q and any subfield of the reals.
    PlusMinusOne,
    /// Explicit finite list; the caller certifies each entry is a root of
    /// unity.
    Explicit(Vec<K>),
}

impl<K: Field> RootsOfUnitySpec<K> {
    pub fn contains(&self, x: &K) -> bool {
        match self {
            RootsOfUnitySpec::AllNonzero => !x.is_zero(),
            RootsOfUnitySpec::PlusMinusOne => x.is_one() || x.neg().is_one(),
            RootsOfUnitySpec::Explicit(list) => list.iter().any(|m| m == x),
        }
    }
}

/// Element of the prime field F_p, stored as the least nonnegative residue.
///
/// The modulus rides along with the element; mixing moduli in arithmetic is
/// a programming error and panics.  `p` must be prime (checked in debug
/// builds; arithmetic silently assumes it in release builds).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FpElem {
    residue: u64,
    modulus: u64,
}

impl FpElem {
    pub fn new(value: i64, p: u64) -> Self {
        debug_assert!(intops::is_prime_u64(p), "modulus {p} is not prime");
        let m = p as i128;
        let r = ((value as i128 % m) + m) % m;
        FpElem {
            residue: r as u64,
            modulus: p,
        }
    }

    pub fn from_u64(value: u64, p: u64) -> Self {
        debug_assert!(intops::is_prime_u64(p), "modulus {p} is not prime");
        FpElem {
            residue: value % p,
            modulus: p,
        }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn pow(&self, e: u64) -> Self {
        FpElem {
            residue: intops::pow_mod_u64(self.residue, e, self.modulus),
            modulus: self.modulus,
        }
    }

    fn same_field(&self, rhs: &Self) {
        assert!(
            self.modulus == rhs.modulus,
            "field mismatch: F_{} vs F_{}",
            self.modulus,
            rhs.modulus
        );
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Field for FpElem {
    fn zero(&self) -> Self {
        FpElem {
            residue: 0,
            modulus: self.modulus,
        }
    }

    fn one(&self) -> Self {
        FpElem {
            residue: 1 % self.modulus,
            modulus: self.modulus,
        }
    }

    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn is_one(&self) -> bool {
        self.residue == 1 % self.modulus
    }

    fn add(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let mut r = self.residue + rhs.residue; // moduli < 2^63 so no overflow
        if r >= self.modulus {
            r -= self.modulus;
        }
        FpElem {
            residue: r,
            modulus: self.modulus,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let r = if self.residue >= rhs.residue {
            self.residue - rhs.residue
        } else {
            self.residue + self.modulus - rhs.residue
        };
        FpElem {
            residue: r,
            modulus: self.modulus,
        }
    }

    fn neg(&self) -> Self {
        let r = if self.residue == 0 {
            0
        } else {
            self.modulus - self.residue
        };
        FpElem {
            residue: r,
            modulus: self.modulus,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        FpElem {
            residue: intops::mul_mod_u64(self.residue, rhs.residue, self.modulus),
            modulus: self.modulus,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.residue == 0 {
            return None;
        }
        // Fermat: a^(p-2) inverts a in F_p.
        Some(self.pow(self.modulus - 2))
    }

    fn characteristic(&self) -> u64 {
        self.modulus
    }

    fn from_i64(&self, n: i64) -> Self {
        FpElem::new(n, self.modulus)
    }

    fn parse_elem(&self, s: &str) -> Result<Self, AlgebraError> {
        let t = s.trim();
        let v: i64 = t
            .parse()
            .map_err(|_| AlgebraError::Parse(format!("bad F_{} element `{t}`", self.modulus)))?;
        Ok(FpElem::new(v, self.modulus))
    }

    fn roots_of_unity(&self) -> RootsOfUnitySpec<Self> {
        RootsOfUnitySpec::AllNonzero
    }
}

impl Field for BigRational {
    fn zero(&self) -> Self {
        BigRational::from_integer(BigInt::from(0))
    }

    fn one(&self) -> Self {
        BigRational::from_integer(BigInt::from(1))
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn from_i64(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn parse_elem(&self, s: &str) -> Result<Self, AlgebraError> {
        BigRational::from_str(s.trim())
            .map_err(|e| AlgebraError::Parse(format!("bad rational `{s}`: {e}")))
    }

    fn roots_of_unity(&self) -> RootsOfUnitySpec<Self> {
        RootsOfUnitySpec::PlusMinusOne
    }

    fn abs_sign(&self) -> (Self, bool) {
        if num_traits::Signed::is_negative(self) {
            (-self, true)
        } else {
            (self.clone(), false)
        }
    }

    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        zpoly::gcd_q(a, b)
    }
}

/// Convenience constructor for rational constants.
pub fn qi(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
