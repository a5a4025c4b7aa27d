use crate::linalg::{Scalar, Vector};

use super::{Algebra, AlgebraError};

/// Doubles a unital algebra: on pairs `(a, b)`,
///
/// `(a, b)(c, d) = (ac + sign * conj(d) b, da + b conj(c))`.
///
/// Basis vectors `0..n` are `(e_i, 0)` and `n..2n` are `(0, e_i)`; the unit
/// stays at its original index. With `sign = -1` the chain
/// reals, complexes, quaternions, octonions is produced.
pub fn cayley_dickson(base: &Algebra, sign: &Scalar) -> Result<Algebra, AlgebraError> {
    let unit = base.require_unit()?;
    let n = base.dim();
    let conj = |i: usize| {
        if i == unit {
            Scalar::ONE
        } else {
            Scalar::integer(-1)
        }
    };
    // Embeds a base vector into the first or second half.
    let lift = |v: &Vector, second: bool| -> Vector {
        let mut out = Vector::zeros(2 * n);
        let offset = if second { n } else { 0 };
        for (k, c) in v.support() {
            out[k + offset] = c.clone();
        }
        out
    };

    let mut products = Vec::with_capacity(4 * n * n);
    for i in 0..2 * n {
        for j in 0..2 * n {
            let product = match (i < n, j < n) {
                // (a,0)(c,0) = (ac, 0)
                (true, true) => lift(base.basis_product(i, j), false),
                // (a,0)(0,d) = (0, da)
                (true, false) => lift(base.basis_product(j - n, i), true),
                // (0,b)(c,0) = (0, b conj(c))
                (false, true) => lift(&base.basis_product(i - n, j).scale(&conj(j)), true),
                // (0,b)(0,d) = (sign conj(d) b, 0)
                (false, false) => {
                    let k = sign * &conj(j - n);
                    lift(&base.basis_product(j - n, i - n).scale(&k), false)
                }
            };
            products.push(product);
        }
    }
    let labels = (0..2 * n).map(|i| format!("e{i}")).collect();
    let name = format!("cd({})", base.name());
    Ok(Algebra::from_products(name, labels, products))
}
