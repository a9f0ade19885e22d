//! Newton polygons at a prime: the lower convex hull of the valuation
//! points (i, v_p(a_i)).  The hull constrains the degrees of p-adic
//! factors, which powers several of the rational irreducibility
//! certificates in this module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::intops::{gcd_u64, is_prime_u64};
use crate::algebra::zpoly;
use crate::algebra::Poly;

use super::FactorError;

/// The Newton polygon of a polynomial at a prime, computed on the primitive
/// integer model (denominators cleared, content stripped).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    prime: u64,
    points: Vec<(usize, u64)>,
    vertices: Vec<(usize, u64)>,
}

impl NewtonPolygon {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// All valuation points (i, v_p(a_i)) for nonzero coefficients a_i,
    /// in order of ascending i.
    pub fn points(&self) -> &[(usize, u64)] {
        &self.points
    }

    /// Lower-hull vertices from (0, v_p(a_0)) to (deg f, v_p(lc)).
    pub fn vertices(&self) -> &[(usize, u64)] {
        &self.vertices
    }

    /// Slope magnitude of each hull side, left to right: the valuation drop
    /// divided by the horizontal length.  For p not dividing the leading
    /// coefficient the hull is non-increasing and every entry is >= 0.
    pub fn slopes(&self) -> Vec<BigRational> {
        self.sides()
            .map(|((x0, y0), (x1, y1))| {
                BigRational::new(
                    BigInt::from(y0 as i64 - y1 as i64),
                    BigInt::from((x1 - x0) as i64),
                )
            })
            .collect()
    }

    /// Horizontal lengths of the hull sides; they always partition deg f.
    pub fn side_lengths(&self) -> Vec<usize> {
        self.sides().map(|((x0, _), (x1, _))| x1 - x0).collect()
    }

    /// When every side is rigid -- its valuation drop is coprime to its
    /// length, so it contributes exactly one irreducible p-adic factor --
    /// the side lengths are exactly the p-adic factor degrees.  Returns
    /// those lengths, or None when some side admits several groupings.
    pub fn rigid_factor_degrees(&self) -> Option<Vec<usize>> {
        let mut lengths = Vec::new();
        for ((x0, y0), (x1, y1)) in self.sides() {
            let run = (x1 - x0) as u64;
            let drop = y0.abs_diff(y1);
            if gcd_u64(drop, run) != 1 {
                return None;
            }
            lengths.push(x1 - x0);
        }
        Some(lengths)
    }

    fn sides(&self) -> impl Iterator<Item = ((usize, u64), (usize, u64))> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Compute the Newton polygon of `f` at the prime `p`.  Requires p prime,
/// deg f >= 1, and a nonzero constant term (so the polygon starts at i = 0).
pub fn newton_polygon(f: &Poly<BigRational>, p: u64) -> Result<NewtonPolygon, FactorError> {
    if !is_prime_u64(p) {
        return Err(FactorError::NotPrime(p));
    }
    if f.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Err(FactorError::ConstantPolynomial);
    }
    let (_, z) = zpoly::clear_denominators(f);
    let z = zpoly::primitive_part(&z);
    if z[0].is_zero() {
        return Err(FactorError::ZeroConstantTerm);
    }
    let pb = BigInt::from(p);
    let mut points = Vec::new();
    for (i, a) in z.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        points.push((i, valuation(a, &pb)));
    }
    let vertices = lower_hull(&points);
    Ok(NewtonPolygon {
        prime: p,
        points,
        vertices,
    })
}

fn valuation(a: &BigInt, p: &BigInt) -> u64 {
    let mut v = 0;
    let mut cur = a.abs();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&cur, p);
        if r.is_zero() {
            cur = q;
            v += 1;
        } else {
            return v;
        }
    }
}

/// Monotone-chain lower hull of points already sorted by x with distinct
/// x-coordinates.  Collinear interior points are dropped, so the result
/// lists vertices only.
fn lower_hull(points: &[(usize, u64)]) -> Vec<(usize, u64)> {
    let mut hull: Vec<(usize, u64)> = Vec::new();
    for &(x, y) in points {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 as i128 - a.0 as i128) * (y as i128 - a.1 as i128)
                - (b.1 as i128 - a.1 as i128) * (x as i128 - a.0 as i128);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y));
    }
    hull
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qi;

    fn qpoly(coeffs: &[i64]) -> Poly<BigRational> {
        Poly::from_i64_coeffs(&qi(0), coeffs)
    }

    #[test]
    fn quintic_with_unit_tail() {
        // x^5 + x^4 + 2 at 2: vertices (0,1), (4,0), (5,0); slopes 1/4, 0.
        let f = qpoly(&[2, 0, 0, 0, 1, 1]);
        let np = newton_polygon(&f, 2).unwrap();
        assert_eq!(np.points(), &[(0, 1), (4, 0), (5, 0)]);
        assert_eq!(np.vertices(), &[(0, 1), (4, 0), (5, 0)]);
        assert_eq!(np.slopes(), vec![BigRational::new(1.into(), 4.into()), qi(0)]);
        assert_eq!(np.side_lengths(), vec![4, 1]);
        assert_eq!(np.rigid_factor_degrees(), Some(vec![4, 1]));
    }

    #[test]
    fn cubic_variant() {
        // x^3 + x^2 + 2 at 2: same shape one degree down.
        let f = qpoly(&[2, 0, 1, 1]);
        let np = newton_polygon(&f, 2).unwrap();
        assert_eq!(np.vertices(), &[(0, 1), (2, 0), (3, 0)]);
        assert_eq!(np.side_lengths(), vec![2, 1]);
    }

    #[test]
    fn eisenstein_single_side() {
        // x^4 + 6x + 2 at 2: one side of slope 1/4; rigid, so one p-adic
        // factor of degree 4.
        let f = qpoly(&[2, 6, 0, 0, 1]);
        let np = newton_polygon(&f, 2).unwrap();
        assert_eq!(np.vertices(), &[(0, 1), (4, 0)]);
        assert_eq!(np.rigid_factor_degrees(), Some(vec![4]));
    }

    #[test]
    fn collinear_points_are_not_vertices() {
        // x^3 + 2x^2 + 4x + 8 at 2: all four points sit on one slope-1
        // line; hull has a single non-rigid side (drop 3 over length 3).
        let f = qpoly(&[8, 4, 2, 1]);
        let np = newton_polygon(&f, 2).unwrap();
        assert_eq!(np.points().len(), 4);
        assert_eq!(np.vertices(), &[(0, 3), (3, 0)]);
        assert_eq!(np.rigid_factor_degrees(), None);
    }

    #[test]
    fn denominators_do_not_change_the_polygon() {
        let f = qpoly(&[2, 0, 0, 0, 1, 1]);
        let scaled = f.scale(&BigRational::new(1.into(), 6.into()));
        assert_eq!(
            newton_polygon(&f, 2).unwrap(),
            newton_polygon(&scaled, 2).unwrap()
        );
    }

    #[test]
    fn side_lengths_partition_degree() {
        for coeffs in [
            vec![2i64, 0, 0, 0, 1, 1],
            vec![2, 6, 0, 0, 1],
            vec![8, 4, 2, 1],
            vec![4, 2, 1],
            vec![6, 1, 12],
        ] {
            let f = qpoly(&coeffs);
            let np = newton_polygon(&f, 2).unwrap();
            let total: usize = np.side_lengths().iter().sum();
            assert_eq!(total, f.degree().unwrap());
        }
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            newton_polygon(&qpoly(&[0, 1, 1]), 2),
            Err(FactorError::ZeroConstantTerm)
        ));
        assert!(matches!(
            newton_polygon(&qpoly(&[1, 1]), 4),
            Err(FactorError::NotPrime(4))
        ));
        assert!(matches!(
            newton_polygon(&qpoly(&[5]), 2),
            Err(FactorError::ConstantPolynomial)
        ));
    }
}
