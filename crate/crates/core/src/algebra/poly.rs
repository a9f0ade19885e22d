//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so
//! the zero polynomial is the empty vector and `degree()` is `None` for it.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero as _;

use super::field::Field;
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    /// Build from lowest-first coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(k: K) -> Self {
        Poly::from_coeffs(vec![k])
    }

    /// c * x^d.
    pub fn monomial(c: K, d: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![c.zero(); d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    /// The indeterminate x over the field of `ctx`.
    pub fn x(ctx: &K) -> Self {
        Poly::monomial(ctx.one(), 1)
    }

    /// Polynomial with the given lowest-first integer coefficients, mapped
    /// into the field of `ctx`.
    pub fn from_i64_coeffs(ctx: &K, coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| ctx.from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of x^i in the field of `ctx` (zero beyond the degree).
    pub fn coeff(&self, i: usize, ctx: &K) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ctx.zero())
    }

    /// Leading coefficient.  Panics on the zero polynomial.
    pub fn lc(&self) -> &K {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    /// Some coefficient to use as field context, if the polynomial is nonzero.
    pub fn sample(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let z = self.coeffs[0].zero();
        let mut out = vec![z; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, k: &K) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let one = match self.sample() {
            Some(c) => Poly::constant(c.one()),
            None => {
                // 0^0 = 1 needs a context we do not have; disallow.
                assert!(e > 0, "0^0 is undefined without field context");
                return Poly::zero();
            }
        };
        let mut base = self.clone();
        let mut acc = one;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZeroPoly);
        }
        let dlc_inv = divisor.lc().inv().expect("nonzero lc in a field");
        let dn = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dn {
            return Ok((Poly::zero(), self.clone()));
        }
        let z = divisor.lc().zero();
        let mut quot = vec![z; rem.len() - dn];
        for i in (dn..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].mul(&dlc_inv);
            let shift = i - dn;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = rem[shift + j].sub(&q.mul(d));
            }
            quot[shift] = q;
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::InexactDivision)
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic normalization: returns (leading unit, monic polynomial).
    /// Panics on the zero polynomial.
    pub fn monic(&self) -> (K, Self) {
        let u = self.lc().clone();
        let ui = u.inv().expect("nonzero lc in a field");
        (u, self.scale(&ui))
    }

    /// Monic gcd generator of the ideal (self, other); the zero polynomial
    /// when both inputs are zero.  Dispatches through the field's strategy
    /// hook (Euclid for finite fields, integer subresultants for Q).
    pub fn gcd(&self, other: &Self) -> Self {
        K::poly_gcd(self, other)
    }

    /// Plain monic Euclidean gcd.
    pub fn gcd_euclid(a: &Self, b: &Self) -> Self {
        let mut f = a.clone();
        let mut g = b.clone();
        while !g.is_zero() {
            let (_, r) = f.divrem(&g).expect("nonzero divisor");
            f = g;
            g = r;
        }
        if f.is_zero() {
            f
        } else {
            f.monic().1
        }
    }

    /// Extended gcd: returns (g, u, v) with u*self + v*other = g, g the
    /// monic gcd (or zero when both inputs are zero).
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (one, zero) = match r0.sample().or(r1.sample()) {
            Some(c) => (Poly::constant(c.one()), Poly::zero()),
            None => return (Poly::zero(), Poly::zero(), Poly::zero()),
        };
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let (u, g) = r0.monic();
        let ui = u.inv().expect("nonzero unit");
        (g, s0.scale(&ui), t0.scale(&ui))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.from_i64(i as i64)))
            .collect();
        Poly::from_coeffs(out)
    }

    pub fn evaluate(&self, x: &K) -> K {
        let mut acc = x.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// self(inner(x)).
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// self(x^k): coefficient stretching, exact for any field.
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k >= 1, "stretch by zero");
        if self.is_zero() {
            return Poly::zero();
        }
        let z = self.coeffs[0].zero();
        let mut out = vec![z; (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Poly::from_coeffs(out)
    }

    /// Resultant of two nonzero polynomials, by the Euclidean recursion.
    /// res(f, g) = lc(f)^deg g * prod g(alpha) over the roots alpha of f.
    pub fn resultant(f: &Self, g: &Self) -> Result<K, AlgebraError> {
        if f.is_zero() || g.is_zero() {
            return Err(AlgebraError::ResultantZeroOperand);
        }
        Ok(Self::res_rec(f.clone(), g.clone()))
    }

    fn res_rec(f: Self, g: Self) -> K {
        let m = f.degree().unwrap();
        let n = g.degree().unwrap();
        if m == 0 {
            return f.lc().pow_k(n as u64);
        }
        if n == 0 {
            return g.lc().pow_k(m as u64);
        }
        if m < n {
            let sign = if (m * n) % 2 == 1 {
                f.lc().one().neg()
            } else {
                f.lc().one()
            };
            return sign.mul(&Self::res_rec(g, f));
        }
        let (_, r) = f.divrem(&g).expect("nonzero divisor");
        if r.is_zero() {
            return g.lc().zero();
        }
        let d = r.degree().unwrap();
        // res(f, g) = (-1)^(mn) lc(g)^(m-d) res(g, r)
        let sign = if (m * n) % 2 == 1 {
            g.lc().one().neg()
        } else {
            g.lc().one()
        };
        sign.mul(&g.lc().pow_k((m - d) as u64))
            .mul(&Self::res_rec(g, r))
    }
}

trait PowK: Field {
    fn pow_k(&self, e: u64) -> Self {
        let mut acc = self.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl<K: Field> PowK for K {}

/// a * b reduced modulo m.
pub fn mul_mod<K: Field>(a: &Poly<K>, b: &Poly<K>, m: &Poly<K>) -> Poly<K> {
    let (_, r) = a.mul(b).divrem(m).expect("nonzero modulus");
    r
}

/// base^e reduced modulo m.
pub fn pow_mod<K: Field>(base: &Poly<K>, e: u64, m: &Poly<K>) -> Poly<K> {
    pow_mod_big(base, &BigUint::from(e), m)
}

/// base^e reduced modulo m, for arbitrarily large exponents.
pub fn pow_mod_big<K: Field>(base: &Poly<K>, e: &BigUint, m: &Poly<K>) -> Poly<K> {
    let ctx = m.sample().expect("nonzero modulus").clone();
    let one = Poly::constant(ctx.one());
    if e.is_zero() {
        let (_, r) = one.divrem(m).expect("nonzero modulus");
        return r;
    }
    let (_, mut b) = base.divrem(m).expect("nonzero modulus");
    let mut acc = one;
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            acc = mul_mod(&acc, &b, m);
        }
        if i + 1 < bits {
            b = mul_mod(&b, &b, m);
        }
    }
    acc
}

/// Inverse of a modulo m, where gcd(a, m) must be constant; errors when a
/// reduces to zero or shares a factor with m.
pub fn inv_mod<K: Field>(a: &Poly<K>, m: &Poly<K>) -> Result<Poly<K>, AlgebraError> {
    let (_, ar) = a.divrem(m)?;
    if ar.is_zero() {
        return Err(AlgebraError::NotInvertible);
    }
    let (g, u, _) = ar.ext_gcd(m);
    if g.degree() != Some(0) {
        return Err(AlgebraError::NotInvertible);
    }
    // g is monic, hence exactly 1: u * ar = 1 (mod m).
    let (_, r) = u.divrem(m)?;
    Ok(r)
}

// ---------------------------------------------------------------------------
// Canonical text encoding: "3*x^2 - 1/2*x + 7".

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (mag, negative) = c.abs_sign();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl<K: Field> Poly<K> {
    /// Parse the canonical text form produced by `Display`.  `ctx` supplies
    /// the field.  Accepts optional whitespace and an optional `*` between
    /// coefficient and variable.
    pub fn parse(s: &str, ctx: &K) -> Result<Self, AlgebraError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(AlgebraError::Parse("empty polynomial".into()));
        }
        // Split into sign-prefixed terms.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = false;
        for (idx, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && idx > 0 {
                if cur.is_empty() {
                    return Err(AlgebraError::Parse(format!("dangling sign in `{s}`")));
                }
                terms.push((sign, std::mem::take(&mut cur)));
                sign = ch == '-';
            } else if ch == '+' || ch == '-' {
                sign = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(AlgebraError::Parse(format!("dangling sign in `{s}`")));
        }
        terms.push((sign, cur));

        let mut acc = Poly::zero();
        for (neg, term) in terms {
            let (coeff_str, power) = match term.find('x') {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let after = &term[pos + 1..];
                    let power = if after.is_empty() {
                        1usize
                    } else if let Some(exp) = after.strip_prefix('^') {
                        exp.parse().map_err(|_| {
                            AlgebraError::Parse(format!("bad exponent in `{term}`"))
                        })?
                    } else {
                        return Err(AlgebraError::Parse(format!("bad term `{term}`")));
                    };
                    (term[..pos].trim_end_matches('*'), power)
                }
            };
            let coeff = if coeff_str.is_empty() {
                ctx.one()
            } else {
                ctx.parse_elem(coeff_str)?
            };
            let coeff = if neg { coeff.neg() } else { coeff };
            acc = acc.add(&Poly::monomial(coeff, power));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::qi;
    use super::*;
    use num_rational::BigRational;

    fn qpoly(cs: &[i64]) -> Poly<BigRational> {
        Poly::from_i64_coeffs(&qi(0), cs)
    }

    fn fpoly(cs: &[i64], p: u64) -> Poly<FpElemCtx> {
        Poly::from_i64_coeffs(&FpElemCtx::new(0, p), cs)
    }

    use super::super::field::FpElem as FpElemCtx;

    #[test]
    fn trims_trailing_zeros() {
        let p = qpoly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(qpoly(&[0]).is_zero());
        assert_eq!(qpoly(&[]).degree(), None);
    }

    #[test]
    fn divrem_reconstructs() {
        // Schoolbook long-division oracle: q*d + r == f and deg r < deg d.
        let f = qpoly(&[1, -3, 0, 5, 2]);
        let d = qpoly(&[2, 1]);
        let (q, r) = f.divrem(&d).unwrap();
        assert_eq!(q.mul(&d).add(&r), f);
        assert!(r.degree().map_or(true, |dr| dr < d.degree().unwrap()));
        assert_eq!(f.divrem(&Poly::zero()), Err(AlgebraError::DivisionByZeroPoly));
    }

    #[test]
    fn divrem_over_fp() {
        let f = fpoly(&[2, 0, 1, 1], 3); // x^3 + x^2 + 2
        let d = fpoly(&[1, 1], 3); // x + 1
        let (q, r) = f.divrem(&d).unwrap();
        assert_eq!(q.mul(&d).add(&r), f);
    }

    #[test]
    fn gcd_of_known_product() {
        let a = qpoly(&[1, 1]); // x + 1
        let b = qpoly(&[-2, 1]); // x - 2
        let c = qpoly(&[3, 1]); // x + 3
        let f = a.mul(&b);
        let g = a.mul(&c);
        assert_eq!(f.gcd(&g), a);
        // gcd(0, g) is the monic normalization of g.
        assert_eq!(Poly::zero().gcd(&g), g.monic().1);
        assert!(Poly::<BigRational>::zero().gcd(&Poly::zero()).is_zero());
    }

    #[test]
    fn ext_gcd_bezout_identity() {
        let f = qpoly(&[1, 0, 1]); // x^2 + 1
        let g = qpoly(&[1, 1]); // x + 1
        let (d, u, v) = f.ext_gcd(&g);
        assert_eq!(u.mul(&f).add(&v.mul(&g)), d);
        assert_eq!(d.degree(), Some(0)); // coprime
        assert!(d.is_monic());
    }

    #[test]
    fn resultant_matches_sylvester_oracle() {
        // Independent oracle: Sylvester matrix determinant by cofactor
        // expansion over Q (test-only, exponential but fine at this size).
        fn sylvester_det(f: &Poly<BigRational>, g: &Poly<BigRational>) -> BigRational {
            let m = f.degree().unwrap();
            let n = g.degree().unwrap();
            let size = m + n;
            let z = qi(0);
            let mut rows = vec![vec![z.clone(); size]; size];
            for i in 0..n {
                for (j, c) in f.coeffs().iter().rev().enumerate() {
                    rows[i][i + j] = c.clone();
                }
            }
            for i in 0..m {
                for (j, c) in g.coeffs().iter().rev().enumerate() {
                    rows[n + i][i + j] = c.clone();
                }
            }
            det(&rows)
        }
        fn det(rows: &[Vec<BigRational>]) -> BigRational {
            let n = rows.len();
            if n == 1 {
                return rows[0][0].clone();
            }
            let mut acc = qi(0);
            for k in 0..n {
                if Field::is_zero(&rows[0][k]) {
                    continue;
                }
                let minor: Vec<Vec<BigRational>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != k)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &rows[0][k] * det(&minor);
                acc = if k % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }

        let cases = [
            (qpoly(&[1, 0, 1]), qpoly(&[1, 1])),
            (qpoly(&[-1, 0, 0, 1]), qpoly(&[2, -3, 1])),
            (qpoly(&[1, 1, 1, 1, 1]), qpoly(&[1, 2, 3, 4])),
            (qpoly(&[5, 0, -2, 1]), qpoly(&[1, 1, 1])),
        ];
        for (f, g) in cases {
            let got = Poly::resultant(&f, &g).unwrap();
            assert_eq!(got, sylvester_det(&f, &g), "f = {f}, g = {g}");
        }
    }

    #[test]
    fn resultant_rejects_zero_operand() {
        let f = qpoly(&[1, 1]);
        assert_eq!(
            Poly::resultant(&f, &Poly::zero()),
            Err(AlgebraError::ResultantZeroOperand)
        );
    }

    #[test]
    fn resultant_zero_iff_common_root() {
        let a = qpoly(&[-2, 1]);
        let f = a.mul(&qpoly(&[1, 1]));
        let g = a.mul(&qpoly(&[7, 1]));
        assert!(Field::is_zero(&Poly::resultant(&f, &g).unwrap()));
    }

    #[test]
    fn derivative_and_eval() {
        let f = qpoly(&[7, -1, 3]); // 3x^2 - x + 7
        assert_eq!(f.derivative(), qpoly(&[-1, 6]));
        assert_eq!(f.evaluate(&qi(2)), qi(17));
        // Char-p wraparound: d/dx of x^3 over F_3 is 0.
        assert!(fpoly(&[0, 0, 0, 1], 3).derivative().is_zero());
    }

    #[test]
    fn compose_and_stretch_agree() {
        let f = fpoly(&[1, 2, 0, 1], 5);
        let x3 = Poly::monomial(FpElemCtx::new(1, 5), 3);
        assert_eq!(f.compose(&x3), f.stretch(3));
    }

    #[test]
    fn modular_ops_match_plain_reduction() {
        let m = fpoly(&[1, 1, 1, 1, 1, 1, 1], 3); // 1 + x + ... + x^6
        let a = fpoly(&[2, 1, 0, 1], 3);
        let b = fpoly(&[1, 0, 2, 2, 1], 3);
        let direct = a.mul(&b).divrem(&m).unwrap().1;
        assert_eq!(mul_mod(&a, &b, &m), direct);
        // pow_mod against oracle repeated multiplication.
        let mut acc = Poly::constant(FpElemCtx::new(1, 3));
        for _ in 0..11 {
            acc = mul_mod(&acc, &a, &m);
        }
        assert_eq!(pow_mod(&a, 11, &m), acc);
        let inv = inv_mod(&a, &m).unwrap();
        assert!(mul_mod(&a, &inv, &m).is_one());
    }

    #[test]
    fn display_canonical_form() {
        let p = Poly::from_coeffs(vec![qi(7), -BigRational::new(1.into(), 2.into()), qi(3)]);
        assert_eq!(p.to_string(), "3*x^2 - 1/2*x + 7");
        assert_eq!(qpoly(&[0, 1]).to_string(), "x");
        assert_eq!(qpoly(&[0, -1]).to_string(), "-x");
        assert_eq!(qpoly(&[]).to_string(), "0");
        assert_eq!(qpoly(&[0, 0, 5]).to_string(), "5*x^2");
        assert_eq!(fpoly(&[1, 2, 1], 3).to_string(), "x^2 + 2*x + 1");
    }

    #[test]
    fn parse_round_trips_bit_exactly() {
        let ctx = qi(0);
        for s in ["3*x^2 - 1/2*x + 7", "x", "-x", "0", "5*x^2", "x^3 + x + 1"] {
            let p = Poly::parse(s, &ctx).unwrap();
            assert_eq!(p.to_string(), s);
        }
        let fctx = FpElemCtx::new(0, 7);
        let p = Poly::parse("x^6 + 3*x + 5", &fctx).unwrap();
        assert_eq!(Poly::parse(&p.to_string(), &fctx).unwrap(), p);
        assert!(Poly::parse("x^", &ctx).is_err());
        assert!(Poly::parse("", &ctx).is_err());
        assert!(Poly::parse("x + + 1", &ctx).is_err());
    }
}
