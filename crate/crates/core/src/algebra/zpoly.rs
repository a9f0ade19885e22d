//! Integer-coefficient polynomial helpers.
//!
//! These back the Q-side operations that would blow up or lose exactness if
//! run naively on fractions: gcd via subresultant remainder sequences on
//! primitive integer parts, exact division for cyclotomic polynomials, and
//! big-integer evaluation.  Representation matches `Poly`: lowest-first,
//! trimmed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};


use super::poly::Poly;

pub type ZPoly = Vec<BigInt>;

pub fn trim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn deg(p: &ZPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

#[cfg(test)]
pub fn mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn scale(a: &ZPoly, k: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c * k).collect())
}

/// Content: gcd of the coefficients, nonnegative.
pub fn content(a: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
    }
    g
}

/// Divide every coefficient exactly by d.
pub fn exact_scalar_div(a: &ZPoly, d: &BigInt) -> ZPoly {
    assert!(!d.is_zero());
    a.iter()
        .map(|c| {
            let (q, r) = c.div_rem(d);
            debug_assert!(r.is_zero(), "inexact scalar division");
            q
        })
        .collect()
}

pub fn primitive_part(a: &ZPoly) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    exact_scalar_div(a, &c)
}

/// Pseudo-remainder: returns r with lc(b)^(deg a - deg b + 1) * a = q*b + r.
pub fn pseudo_rem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = deg(b).expect("pseudo_rem by zero");
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    let da = match deg(&r) {
        Some(d) if d >= db => d,
        _ => {
            // lc(b)^(da-db+1) with da < db means exponent <= 0; scale by
            // enough powers to match the classical definition anyway.
            return trim(r);
        }
    };
    let mut steps = da - db + 1;
    while deg(&r).is_some_and(|d| d >= db) {
        let d = deg(&r).unwrap();
        let lr = r.last().unwrap().clone();
        // r <- lc(b)*r - lr*x^(d-db)*b
        let mut nr = scale(&r, &lb);
        let shift = d - db;
        for (j, c) in b.iter().enumerate() {
            nr[shift + j] -= &lr * c;
        }
        r = trim(nr);
        steps -= 1;
    }
    // Pad remaining scalings so the pseudo-remainder identity holds exactly.
    for _ in 0..steps {
        r = scale(&r, &lb);
    }
    r
}

/// Gcd of integer polynomials by the subresultant remainder sequence
/// (Cohen, Algorithm 3.3.1).  Returns a primitive polynomial with positive
/// leading coefficient; the contents are folded back in by the caller if
/// needed.
pub fn gcd_z(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let a = trim(a.clone());
    let b = trim(b.clone());
    if a.is_empty() {
        return primitive_part(&b);
    }
    if b.is_empty() {
        return primitive_part(&a);
    }
    let (mut big, mut small) = if deg(&a) >= deg(&b) { (a, b) } else { (b, a) };
    let ca = content(&big);
    let cb = content(&small);
    let d = ca.gcd(&cb);
    big = exact_scalar_div(&big, &ca);
    small = exact_scalar_div(&small, &cb);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = deg(&big).unwrap() - deg(&small).unwrap();
        let r = pseudo_rem(&big, &small);
        if r.is_empty() {
            let pp = primitive_part(&small);
            return trim(scale(&pp, &d));
        }
        if deg(&r) == Some(0) {
            return vec![d];
        }
        big = std::mem::take(&mut small);
        let divisor = &g * h.pow(delta as u32);
        small = exact_scalar_div(&r, &divisor);
        g = big.last().unwrap().clone();
        // h <- h^(1-delta) * g^delta, kept in Z by exact division.
        h = if delta == 0 {
            h
        } else {
            let num = g.pow(delta as u32);
            let den = h.pow(delta as u32 - 1);
            let (q, rem) = num.div_rem(&den);
            debug_assert!(rem.is_zero());
            q
        };
    }
}

/// Clear denominators: smallest positive d with d*p integral, plus those
/// integer coefficients.
pub fn clear_denominators(p: &Poly<BigRational>) -> (BigInt, ZPoly) {
    let mut d = BigInt::one();
    for c in p.coeffs() {
        d = d.lcm(c.denom());
    }
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| {
            let scaled = c * BigRational::from_integer(d.clone());
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    (d, coeffs)
}

pub fn to_qpoly(p: &[BigInt]) -> Poly<BigRational> {
    Poly::from_coeffs(p.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

/// Monic gcd over Q, computed on primitive integer parts with subresultant
/// remainders.
pub fn gcd_q(a: &Poly<BigRational>, b: &Poly<BigRational>) -> Poly<BigRational> {
    if a.is_zero() && b.is_zero() {
        return Poly::zero();
    }
    if a.is_zero() {
        return b.monic().1;
    }
    if b.is_zero() {
        return a.monic().1;
    }
    let (_, za) = clear_denominators(a);
    let (_, zb) = clear_denominators(b);
    let g = gcd_z(&za, &zb);
    to_qpoly(&g).monic().1
}

/// Exact division where the divisor is monic; panics on nonzero remainder.
pub fn exact_div_monic(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = deg(b).expect("division by zero polynomial");
    assert!(b.last().unwrap().is_one(), "divisor must be monic");
    let mut r = a.clone();
    let da = match deg(&r) {
        None => return Vec::new(),
        Some(d) => d,
    };
    assert!(da >= db, "inexact division");
    let mut q = vec![BigInt::zero(); da - db + 1];
    while let Some(d) = deg(&r) {
        if d < db {
            break;
        }
        let lr = r.last().unwrap().clone();
        let shift = d - db;
        for (j, c) in b.iter().enumerate() {
            r[shift + j] -= &lr * c;
        }
        r = trim(r);
        q[shift] = lr;
    }
    assert!(r.is_empty(), "inexact division");
    q
}

/// Horner evaluation at a big integer.
pub fn eval_bigint(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}
