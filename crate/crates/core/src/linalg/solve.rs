//! Membership tests for spans of matrix families.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{check_dim, denominator_lcm, LinalgError, Scalar, SquareMatrix, Vector};

/// Outcome of [`express_in_family`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// The unique coefficients `c` with `M = sum_i c_i F_i`.
    InSpan(Vector),
    NotInSpan,
}

impl Membership {
    pub fn coefficients(&self) -> Option<&Vector> {
        match self {
            Membership::InSpan(c) => Some(c),
            Membership::NotInSpan => None,
        }
    }
}

/// `sum_i coeffs_i * family_i`; an empty family yields the zero matrix of `dim`.
pub fn linear_combination(
    dim: usize,
    coeffs: &Vector,
    family: &[SquareMatrix],
) -> Result<SquareMatrix, LinalgError> {
    check_dim(family.len(), coeffs.dim())?;
    let mut out = SquareMatrix::zeros(dim);
    for (c, f) in coeffs.iter().zip(family) {
        check_dim(dim, f.dim())?;
        out.add_scaled(c, f);
    }
    Ok(out)
}

/// Expresses `target` as a combination of a linearly independent `family`.
///
/// The entries of the family and target form an `n^2 x (p + 1)` augmented
/// system; each row is scaled to integers and reduced with Bareiss
/// fraction-free elimination. A rank-deficient family is an error rather than
/// `NotInSpan`, since the expression would not be unique.
pub fn express_in_family(
    target: &SquareMatrix,
    family: &[SquareMatrix],
) -> Result<Membership, LinalgError> {
    let n = target.dim();
    for f in family {
        check_dim(n, f.dim())?;
    }
    let p = family.len();

    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for e in 0..n * n {
        let row: Vec<&Scalar> = family
            .iter()
            .map(|f| &f.entries()[e])
            .chain(std::iter::once(&target.entries()[e]))
            .collect();
        if row.iter().all(|s| s.is_zero()) {
            continue;
        }
        let scale = denominator_lcm(row.iter().copied());
        rows.push(
            row.iter()
                .map(|s| s.numer() * (&scale / s.denom()))
                .collect(),
        );
    }

    let mut prev = BigInt::from(1);
    for col in 0..p {
        let Some(pivot) = (col..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            return Err(LinalgError::DependentFamily { index: col, len: p });
        };
        rows.swap(col, pivot);
        let (head, tail) = rows.split_at_mut(col + 1);
        let pr = &head[col];
        for row in tail.iter_mut() {
            for j in col + 1..=p {
                let num = &pr[col] * &row[j] - &row[col] * &pr[j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[col] = BigInt::zero();
        }
        prev = rows[col][col].clone();
    }

    if rows.iter().skip(p).any(|r| !r[p].is_zero()) {
        return Ok(Membership::NotInSpan);
    }

    let mut coeffs = vec![Scalar::ZERO; p];
    for k in (0..p).rev() {
        let mut acc = Scalar::from(rows[k][p].clone());
        for j in k + 1..p {
            acc -= &(Scalar::from(rows[k][j].clone()) * &coeffs[j]);
        }
        coeffs[k] = acc.checked_div(&Scalar::from(rows[k][k].clone()))?;
    }
    Ok(Membership::InSpan(Vector::new(coeffs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn zero_target_has_zero_coefficients() {
        let family = [m(&[&[1, 0], &[0, 0]]), m(&[&[0, 1], &[1, 0]])];
        let got = express_in_family(&SquareMatrix::zeros(2), &family).unwrap();
        assert_eq!(got, Membership::InSpan(Vector::zeros(2)));
    }

    #[test]
    fn recovers_rational_coefficients() {
        let family = [m(&[&[1, 0], &[0, 0]]), m(&[&[0, 3], &[1, 0]])];
        let mut target = family[0].scale(&Scalar::new(-2, 3));
        target.add_scaled(&Scalar::new(1, 7), &family[1]);
        let got = express_in_family(&target, &family).unwrap();
        assert_eq!(
            got,
            Membership::InSpan(Vector::new(vec![Scalar::new(-2, 3), Scalar::new(1, 7)]))
        );
    }

    #[test]
    fn outside_span() {
        let family = [m(&[&[1, 0], &[0, 0]])];
        let got = express_in_family(&m(&[&[0, 0], &[0, 1]]), &family).unwrap();
        assert_eq!(got, Membership::NotInSpan);
        assert_eq!(
            express_in_family(&m(&[&[0, 1], &[0, 0]]), &[]).unwrap(),
            Membership::NotInSpan
        );
    }

    #[test]
    fn dependent_family_is_distinct_from_not_in_span() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let family = [a.clone(), a.scale(&Scalar::integer(2))];
        assert_eq!(
            express_in_family(&a, &family),
            Err(LinalgError::DependentFamily { index: 1, len: 2 })
        );
        let zeros = [SquareMatrix::zeros(2), SquareMatrix::zeros(2)];
        assert!(matches!(
            express_in_family(&SquareMatrix::zeros(2), &zeros),
            Err(LinalgError::DependentFamily { .. })
        ));
    }

    proptest! {
        #[test]
        fn recombination_reproduces_target(
            entries in proptest::collection::vec((-3i64..=3, 1i64..=4), 3 * 9),
            coeffs in proptest::collection::vec((-5i64..=5, 1i64..=5), 3),
        ) {
            let family: Vec<SquareMatrix> = entries
                .chunks(9)
                .map(|c| {
                    let rows = c.chunks(3)
                        .map(|r| r.iter().map(|&(a, b)| Scalar::new(a, b)).collect())
                        .collect();
                    SquareMatrix::from_rows(rows).unwrap()
                })
                .collect();
            let coeffs = Vector::new(coeffs.iter().map(|&(a, b)| Scalar::new(a, b)).collect());
            let target = linear_combination(3, &coeffs, &family).unwrap();
            match express_in_family(&target, &family) {
                Ok(Membership::InSpan(c)) => {
                    prop_assert_eq!(linear_combination(3, &c, &family).unwrap(), target);
                    prop_assert_eq!(c, coeffs);
                }
                Ok(Membership::NotInSpan) => prop_assert!(false, "target built from family"),
                Err(LinalgError::DependentFamily { .. }) => {}
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }
}
