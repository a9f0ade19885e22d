//! Invertible 2x2 matrices over a field, the essential-distinctness
//! relation, PGL(2) classes, and exhaustive enumeration of the
//! distinctness classes of GL(2, F_p).
//!
//! Two matrices A, B fail to be essentially distinct when
//! B = alpha * diag(mu, 1) * swap^eps * A for a nonzero scalar alpha, a
//! root of unity mu, and eps in {0, 1}; the test solves the two resulting
//! row-proportionality patterns exactly.

use crate::algebra::{Field, FpElem, RootsOfUnitySpec};
use crate::algebra::intops::is_prime_u64;

/// Errors from matrix construction and class enumeration.
#[derive(Debug, thiserror::Error)]
pub enum MoebiusError {
    #[error("matrix is singular")]
    Singular,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("class enumeration requires an odd prime, got {0}")]
    OddPrimeRequired(u64),
}

/// An invertible 2x2 matrix [[a, b], [c, d]] over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2<K: Field> {
    a: K,
    b: K,
    c: K,
    d: K,
}

impl<K: Field> Mat2<K> {
    /// Build a matrix, rejecting singular input.
    pub fn new(a: K, b: K, c: K, d: K) -> Result<Self, MoebiusError> {
        let m = Mat2 { a, b, c, d };
        if m.det().is_zero() {
            return Err(MoebiusError::Singular);
        }
        Ok(m)
    }

    pub fn det(&self) -> K {
        self.a.mul(&self.d).sub(&self.c.mul(&self.b))
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [&K; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Matrix product self * other.
    pub fn mul(&self, other: &Self) -> Self {
        Mat2 {
            a: self.a.mul(&other.a).add(&self.b.mul(&other.c)),
            b: self.a.mul(&other.b).add(&self.b.mul(&other.d)),
            c: self.c.mul(&other.a).add(&self.d.mul(&other.c)),
            d: self.c.mul(&other.b).add(&self.d.mul(&other.d)),
        }
    }

    /// Scalar multiple lambda * self; lambda must be nonzero to preserve
    /// invertibility.
    pub fn scale(&self, lambda: &K) -> Result<Self, MoebiusError> {
        if lambda.is_zero() {
            return Err(MoebiusError::Singular);
        }
        Ok(Mat2 {
            a: self.a.mul(lambda),
            b: self.b.mul(lambda),
            c: self.c.mul(lambda),
            d: self.d.mul(lambda),
        })
    }

    fn rows(&self) -> [(&K, &K); 2] {
        [(&self.a, &self.b), (&self.c, &self.d)]
    }
}

/// The class of a matrix in PGL(2, F) = GL(2, F) / scalars, represented by
/// the scalar multiple whose first nonzero entry (row-major) is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PGLClass<K: Field> {
    representative: Mat2<K>,
}

impl<K: Field> PGLClass<K> {
    pub fn new(m: &Mat2<K>) -> Self {
        let lead = m
            .entries()
            .into_iter()
            .find(|e| !e.is_zero())
            .expect("invertible matrix has a nonzero entry")
            .clone();
        let inv = lead.inv().expect("nonzero element");
        let representative = m.scale(&inv).expect("nonzero scalar");
        PGLClass { representative }
    }

    pub fn representative(&self) -> &Mat2<K> {
        &self.representative
    }
}

/// True iff B = lambda * A for some nonzero scalar lambda.
pub fn pgl_equal<K: Field>(a: &Mat2<K>, b: &Mat2<K>) -> bool {
    PGLClass::new(a) == PGLClass::new(b)
}

/// Decide essential distinctness of A and B with respect to the roots of
/// unity W: false exactly when B = alpha * diag(mu, 1) * swap^eps * A with
/// alpha nonzero and mu in W.  Singular matrices cannot be constructed, so
/// both inputs are invertible by type.
pub fn essentially_distinct<K: Field>(
    a: &Mat2<K>,
    b: &Mat2<K>,
    w: &RootsOfUnitySpec<K>,
) -> bool {
    !matches_pattern(a, b, w, false) && !matches_pattern(a, b, w, true)
}

/// Pattern for fixed eps: B.bottom = alpha * S_bottom and
/// B.top = (alpha * mu) * S_top, where (S_top, S_bottom) is (top, bottom)
/// of A for eps = 0 and (bottom, top) for eps = 1.
fn matches_pattern<K: Field>(
    a: &Mat2<K>,
    b: &Mat2<K>,
    w: &RootsOfUnitySpec<K>,
    swapped: bool,
) -> bool {
    let [top_a, bottom_a] = a.rows();
    let (src_top, src_bottom) = if swapped {
        (bottom_a, top_a)
    } else {
        (top_a, bottom_a)
    };
    let [top_b, bottom_b] = b.rows();
    let Some(alpha) = proportional_factor(bottom_b, src_bottom) else {
        return false;
    };
    let Some(nu) = proportional_factor(top_b, src_top) else {
        return false;
    };
    let Some(alpha_inv) = alpha.inv() else {
        return false;
    };
    let mu = nu.mul(&alpha_inv);
    w.contains(&mu)
}

/// The nonzero factor lambda with r = lambda * s, if any.  Rows of
/// invertible matrices are nonzero, so lambda is well defined when it
/// exists.
fn proportional_factor<K: Field>(r: (&K, &K), s: (&K, &K)) -> Option<K> {
    let lambda = if !s.0.is_zero() {
        r.0.mul(&s.0.inv()?)
    } else {
        r.1.mul(&s.1.inv()?)
    };
    if lambda.is_zero() {
        return None;
    }
    if r.0 == &lambda.mul(s.0) && r.1 == &lambda.mul(s.1) {
        Some(lambda)
    } else {
        None
    }
}

/// The essential-distinctness classes of GL(2, F_p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEnumeration {
    /// Lexicographically smallest member of each class, in the order the
    /// classes are first encountered (which is itself lexicographic).
    pub representatives: Vec<Mat2<FpElem>>,
    /// Number of matrices in each class, aligned with `representatives`.
    pub class_sizes: Vec<usize>,
}

impl ClassEnumeration {
    pub fn total_matrices(&self) -> usize {
        self.class_sizes.iter().sum()
    }
}

/// Partition all of GL(2, F_p) (p an odd prime) into essential-distinctness
/// classes by exhaustive scan.  Representatives come out lexicographically
/// smallest-first by entry order (a, b, c, d) on residues.
pub fn enumerate_distinct_classes(p: u64) -> Result<ClassEnumeration, MoebiusError> {
    if !is_prime_u64(p) {
        return Err(MoebiusError::NotPrime(p));
    }
    if p == 2 {
        return Err(MoebiusError::OddPrimeRequired(p));
    }
    let w = RootsOfUnitySpec::AllNonzero;
    let mut representatives: Vec<Mat2<FpElem>> = Vec::new();
    let mut class_sizes: Vec<usize> = Vec::new();
    for m in all_invertible(p) {
        match representatives
            .iter()
            .position(|r| !essentially_distinct(r, &m, &w))
        {
            Some(i) => class_sizes[i] += 1,
            None => {
                representatives.push(m);
                class_sizes.push(1);
            }
        }
    }
    Ok(ClassEnumeration {
        representatives,
        class_sizes,
    })
}

/// All invertible matrices over F_p in lexicographic entry order.
fn all_invertible(p: u64) -> Vec<Mat2<FpElem>> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = Mat2 {
                        a: FpElem::from_u64(a, p),
                        b: FpElem::from_u64(b, p),
                        c: FpElem::from_u64(c, p),
                        d: FpElem::from_u64(d, p),
                    };
                    if !m.det().is_zero() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qi;
    use num_rational::BigRational;

    fn fmat(p: u64, e: [i64; 4]) -> Mat2<FpElem> {
        Mat2::new(
            FpElem::new(e[0], p),
            FpElem::new(e[1], p),
            FpElem::new(e[2], p),
            FpElem::new(e[3], p),
        )
        .unwrap()
    }

    fn qmat(e: [i64; 4]) -> Mat2<BigRational> {
        Mat2::new(qi(e[0]), qi(e[1]), qi(e[2]), qi(e[3])).unwrap()
    }

    #[test]
    fn construction_rejects_singular() {
        assert!(matches!(
            Mat2::new(qi(1), qi(2), qi(2), qi(4)),
            Err(MoebiusError::Singular)
        ));
        assert!(Mat2::new(qi(1), qi(2), qi(3), qi(4)).is_ok());
    }

    #[test]
    fn swap_and_scalar_patterns_are_not_distinct() {
        let w = RootsOfUnitySpec::PlusMinusOne;
        let id = qmat([1, 0, 0, 1]);
        let swap = qmat([0, 1, 1, 0]);
        assert!(!essentially_distinct(&id, &swap, &w));

        // Over F_5 every unit is a root of unity, so diag(2, 1) matches.
        let w5 = RootsOfUnitySpec::AllNonzero;
        let id5 = fmat(5, [1, 0, 0, 1]);
        let diag = fmat(5, [2, 0, 0, 1]);
        assert!(!essentially_distinct(&id5, &diag, &w5));
        // Over Q with W = {1, -1}, diag(2, 1) is essentially distinct
        // from the identity.
        assert!(essentially_distinct(&id, &qmat([2, 0, 0, 1]), &w));
    }

    #[test]
    fn distinct_upper_triangulars_over_q() {
        let w = RootsOfUnitySpec::PlusMinusOne;
        let b1 = qmat([1, 3, 0, 1]);
        let b2 = qmat([1, 4, 0, 1]);
        assert!(essentially_distinct(&b1, &b2, &w));
        assert!(!essentially_distinct(&b1, &b1.clone(), &w));
    }

    #[test]
    fn pgl_examples() {
        assert!(pgl_equal(&qmat([2, 0, 0, 2]), &qmat([1, 0, 0, 1])));
        assert!(!pgl_equal(&qmat([1, 1, 0, 1]), &qmat([1, 2, 0, 1])));
        assert!(pgl_equal(&fmat(3, [0, 2, 2, 2]), &fmat(3, [0, 1, 1, 1])));
    }

    #[test]
    fn pgl_class_normalization() {
        let c = PGLClass::new(&fmat(3, [0, 2, 2, 2]));
        assert_eq!(c.representative(), &fmat(3, [0, 1, 1, 1]));
    }

    #[test]
    fn distinctness_is_symmetric_and_right_invariant_over_f3() {
        let w = RootsOfUnitySpec::AllNonzero;
        let all = all_invertible(3);
        assert_eq!(all.len(), 48);
        let samples = [
            fmat(3, [1, 1, 0, 1]),
            fmat(3, [0, 1, 2, 0]),
            fmat(3, [2, 1, 1, 1]),
        ];
        for a in &all {
            for b in &all {
                let ed = essentially_distinct(a, b, &w);
                assert_eq!(ed, essentially_distinct(b, a, &w), "asymmetry");
                for c in &samples {
                    assert_eq!(
                        ed,
                        essentially_distinct(&a.mul(c), &b.mul(c), &w),
                        "right multiplication changed distinctness"
                    );
                }
            }
        }
    }

    #[test]
    fn pgl_equality_refines_non_distinctness() {
        let w = RootsOfUnitySpec::AllNonzero;
        for a in all_invertible(3) {
            for b in all_invertible(3) {
                if pgl_equal(&a, &b) {
                    assert!(!essentially_distinct(&a, &b, &w));
                }
            }
        }
    }

    #[test]
    fn class_partition_for_p3() {
        let e = enumerate_distinct_classes(3).unwrap();
        assert_eq!(e.representatives.len(), 6);
        assert!(e.class_sizes.iter().all(|&s| s == 8));
        assert_eq!(e.total_matrices(), 48);
        // Partition consistency: every invertible matrix matches exactly
        // one representative.
        let w = RootsOfUnitySpec::AllNonzero;
        for m in all_invertible(3) {
            let hits = e
                .representatives
                .iter()
                .filter(|r| !essentially_distinct(r, &m, &w))
                .count();
            assert_eq!(hits, 1, "matrix in {hits} classes");
        }
    }

    #[test]
    fn class_partition_for_p5() {
        let e = enumerate_distinct_classes(5).unwrap();
        assert_eq!(e.representatives.len(), 15);
        assert!(e.class_sizes.iter().all(|&s| s == 32));
        assert_eq!(e.total_matrices(), 480);
        let w = RootsOfUnitySpec::AllNonzero;
        for m in all_invertible(5) {
            let hits = e
                .representatives
                .iter()
                .filter(|r| !essentially_distinct(r, &m, &w))
                .count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn enumeration_preconditions() {
        assert!(matches!(
            enumerate_distinct_classes(2),
            Err(MoebiusError::OddPrimeRequired(2))
        ));
        assert!(matches!(
            enumerate_distinct_classes(6),
            Err(MoebiusError::NotPrime(6))
        ));
    }
}
