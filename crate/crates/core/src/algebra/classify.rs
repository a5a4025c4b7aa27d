//! Property detection by exhaustive scans over basis tuples.
//!
//! Every property is tested in multilinear form, so it holds on the whole
//! algebra exactly when it holds on all basis tuples. Identities that repeat
//! an argument (alternativity, the Mal'tsev identity) are linearized first.

use serde::{Deserialize, Serialize};

use crate::linalg::Vector;

use super::Algebra;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Property {
    pub holds: bool,
    /// First failing basis tuple in lexicographic order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub associative: Property,
    pub alternative: Property,
    pub commutative: Property,
    pub anticommutative: Property,
    pub jacobi: Property,
    pub malcev: Property,
}

impl PropertyReport {
    /// Names of the properties that hold, in field order.
    pub fn holding(&self) -> Vec<&'static str> {
        [
            ("associative", &self.associative),
            ("alternative", &self.alternative),
            ("commutative", &self.commutative),
            ("anticommutative", &self.anticommutative),
            ("jacobi", &self.jacobi),
            ("malcev", &self.malcev),
        ]
        .into_iter()
        .filter(|(_, p)| p.holds)
        .map(|(n, _)| n)
        .collect()
    }
}

fn scan(dim: usize, arity: usize, mut vanishes: impl FnMut(&[Vector]) -> bool) -> Property {
    let basis: Vec<Vector> = (0..dim).map(|i| Vector::basis(dim, i)).collect();
    let mut idx = vec![0usize; arity];
    let total = dim.pow(arity as u32);
    for _ in 0..total {
        let args: Vec<Vector> = idx.iter().map(|&i| basis[i].clone()).collect();
        if !vanishes(&args) {
            return Property {
                holds: false,
                witness: Some(idx),
            };
        }
        for slot in (0..arity).rev() {
            idx[slot] += 1;
            if idx[slot] < dim {
                break;
            }
            idx[slot] = 0;
        }
    }
    Property {
        holds: true,
        witness: None,
    }
}

/// `J(x,y,z) = (xy)z + (yz)x + (zx)y` for the algebra's own product.
pub(crate) fn product_jacobian(a: &Algebra, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    let t1 = a.mul(&a.mul(x, y), z);
    let t2 = a.mul(&a.mul(y, z), x);
    let t3 = a.mul(&a.mul(z, x), y);
    &(&t1 + &t2) + &t3
}

/// Full linearization of the Mal'tsev identity
/// `[[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]`
/// in its repeated argument: the returned vector vanishes for all `(x,w,y,z)`
/// exactly when the identity holds (characteristic 0). Setting `w = x` gives
/// twice the defect of the original identity.
pub fn malcev_defect(a: &Algebra, x: &Vector, w: &Vector, y: &Vector, z: &Vector) -> Vector {
    let m = |u: &Vector, v: &Vector| a.mul(u, v);
    let lhs = &m(&m(x, y), &m(w, z)) + &m(&m(w, y), &m(x, z));
    let yz = m(y, z);
    let terms = [
        m(&m(&m(x, y), z), w),
        m(&m(&m(w, y), z), x),
        m(&m(&yz, x), w),
        m(&m(&yz, w), x),
        m(&m(&m(z, x), w), y),
        m(&m(&m(z, w), x), y),
    ];
    terms.iter().fold(lhs, |acc, t| &acc - t)
}

pub fn classify(a: &Algebra) -> PropertyReport {
    let n = a.dim();
    PropertyReport {
        associative: scan(n, 3, |v| a.assoc(&v[0], &v[1], &v[2]).is_zero()),
        alternative: scan(n, 3, |v| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            (&a.assoc(x, y, z) + &a.assoc(y, x, z)).is_zero()
                && (&a.assoc(x, y, z) + &a.assoc(x, z, y)).is_zero()
        }),
        commutative: scan(n, 2, |v| a.commutator(&v[0], &v[1]).is_zero()),
        anticommutative: scan(n, 2, |v| {
            (&a.mul(&v[0], &v[1]) + &a.mul(&v[1], &v[0])).is_zero()
        }),
        jacobi: scan(n, 3, |v| product_jacobian(a, &v[0], &v[1], &v[2]).is_zero()),
        malcev: scan(n, 4, |v| {
            malcev_defect(a, &v[0], &v[1], &v[2], &v[3]).is_zero()
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::linalg::Scalar;

    #[test]
    fn quaternions_are_associative() {
        let r = classify(&catalog::quaternions());
        assert!(r.associative.holds);
        assert!(r.alternative.holds);
        assert!(!r.commutative.holds);
    }

    #[test]
    fn octonions_are_alternative_not_associative() {
        let r = classify(&catalog::octonions());
        assert!(!r.associative.holds);
        assert!(r.alternative.holds);
        // (e1 e2) e4 - e1 (e2 e4) = 2 e7 is the first failure in
        // lexicographic order.
        assert_eq!(r.associative.witness, Some(vec![1, 2, 4]));
    }

    #[test]
    fn octonion_gamma_is_malcev_not_lie() {
        let r = classify(catalog::octonion_gamma().as_algebra());
        assert!(r.anticommutative.holds);
        assert!(!r.jacobi.holds);
        assert!(r.malcev.holds);
    }

    #[test]
    fn quaternion_gamma_is_lie() {
        let r = classify(catalog::quaternion_gamma().as_algebra());
        assert!(r.jacobi.holds && r.malcev.holds && r.anticommutative.holds);
    }

    #[test]
    fn non_malcev_fixture_fails_malcev() {
        let r = classify(catalog::non_malcev().as_algebra());
        assert!(r.anticommutative.holds);
        assert!(!r.malcev.holds);
        assert!(!r.jacobi.holds);
    }

    #[test]
    fn commutative_algebras() {
        let r = classify(&catalog::complexes());
        assert!(r.commutative.holds && r.associative.holds);
        assert!(!r.anticommutative.holds);
    }

    /// Independent check of the linearization: on diagonal arguments the
    /// defect is twice the original (quadratic) identity.
    #[test]
    fn linearization_restricts_to_original_identity() {
        let g = catalog::non_malcev();
        let a = g.as_algebra();
        let v = |c: &[i64]| Vector::from_ints(c);
        let (x, y, z) = (v(&[1, 2, -1]), v(&[0, 1, 3]), v(&[2, -1, 1]));
        let m = |u: &Vector, w: &Vector| a.mul(u, w);
        let original = &m(&m(&x, &y), &m(&x, &z))
            - &(&(&m(&m(&m(&x, &y), &z), &x) + &m(&m(&m(&y, &z), &x), &x))
                + &m(&m(&m(&z, &x), &x), &y));
        assert_eq!(
            malcev_defect(a, &x, &x, &y, &z),
            original.scale(&Scalar::integer(2))
        );
        assert!(!original.is_zero());
    }
}
