//! Trilinear brackets on an anticommutative algebra `Γ`.
//!
//! With `J` the Jacobian of `Γ`, the tangent associator is `(x,y,z) = -J/6`;
//! this is the value that makes the two displayed forms of the Yamaguti
//! bracket coincide, since
//! `[x,[y,z]] - [y,[x,z]] + [[x,y],z] = 2[[x,y],z] - J(x,y,z)`.
//!
//! Yamaguti: `[x,y,z] = [x,[y,z]] - [y,[x,z]] + [[x,y],z] = 6(x,y,z) + 2[[x,y],z]`.
//!
//! Loos: `3{x,y,z} = 6(x,y,z) + 3[[x,y],z] = [x,y,z] + [[x,y],z]
//!                 = [x,[y,z]] - [y,[x,z]] + 2[[x,y],z]`.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, BracketAlgebra};
use crate::linalg::{check_dim, Scalar, Vector};

/// Which displayed formula produced a bracket value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BracketForm {
    /// Yamaguti, `[x,[y,z]] - [y,[x,z]] + [[x,y],z]`.
    YamagutiNested,
    /// Yamaguti, `6(x,y,z) + 2[[x,y],z]`.
    YamagutiAssociator,
    /// Loos, `(6(x,y,z) + 3[[x,y],z]) / 3`.
    LoosAssociator,
    /// Loos, `([x,y,z] + [[x,y],z]) / 3`.
    LoosYamaguti,
    /// Loos, `([x,[y,z]] - [y,[x,z]] + 2[[x,y],z]) / 3`.
    LoosNested,
}

impl BracketForm {
    pub const YAMAGUTI: [BracketForm; 2] =
        [BracketForm::YamagutiNested, BracketForm::YamagutiAssociator];
    pub const LOOS: [BracketForm; 3] = [
        BracketForm::LoosAssociator,
        BracketForm::LoosYamaguti,
        BracketForm::LoosNested,
    ];
}

/// A bracket value tagged with the formula that computed it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrilinearValue {
    pub value: Vector,
    pub form: BracketForm,
}

fn check3(g: &BracketAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Result<(), AlgebraError> {
    for v in [x, y, z] {
        check_dim(g.dim(), v.dim())?;
    }
    Ok(())
}

fn double(g: &BracketAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    g.br(&g.br(x, y), z)
}

/// `[x,[y,z]] - [y,[x,z]]`.
fn nested(g: &BracketAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    &g.br(x, &g.br(y, z)) - &g.br(y, &g.br(x, z))
}

fn third() -> Scalar {
    Scalar::new(1, 3)
}

pub(crate) fn assoc(g: &BracketAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    g.jac(x, y, z).scale(&Scalar::new(-1, 6))
}

pub(crate) fn yamaguti(g: &BracketAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    &nested(g, x, y, z) + &double(g, x, y, z)
}

pub(crate) fn loos(g: &BracketAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    let mut v = nested(g, x, y, z);
    v.add_scaled(&Scalar::integer(2), &double(g, x, y, z));
    v.scale(&third())
}

/// The tangent associator `(x,y,z) = -J(x,y,z)/6`.
pub fn tangent_associator(
    g: &BracketAlgebra,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector, AlgebraError> {
    check3(g, x, y, z)?;
    Ok(assoc(g, x, y, z))
}

/// The Yamaguti bracket in its division-free nested form.
pub fn yamaguti_bracket(
    g: &BracketAlgebra,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector, AlgebraError> {
    check3(g, x, y, z)?;
    Ok(yamaguti(g, x, y, z))
}

/// The Loos bracket, computed as `([x,[y,z]] - [y,[x,z]] + 2[[x,y],z]) / 3`.
pub fn loos_bracket(
    g: &BracketAlgebra,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector, AlgebraError> {
    check3(g, x, y, z)?;
    Ok(loos(g, x, y, z))
}

/// Evaluates a bracket through one specific displayed formula.
pub fn bracket_via(
    g: &BracketAlgebra,
    form: BracketForm,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<TrilinearValue, AlgebraError> {
    check3(g, x, y, z)?;
    let value = match form {
        BracketForm::YamagutiNested => yamaguti(g, x, y, z),
        BracketForm::YamagutiAssociator => {
            let mut v = assoc(g, x, y, z).scale(&Scalar::integer(6));
            v.add_scaled(&Scalar::integer(2), &double(g, x, y, z));
            v
        }
        BracketForm::LoosAssociator => {
            let mut v = assoc(g, x, y, z).scale(&Scalar::integer(6));
            v.add_scaled(&Scalar::integer(3), &double(g, x, y, z));
            v.scale(&third())
        }
        BracketForm::LoosYamaguti => (&yamaguti(g, x, y, z) + &double(g, x, y, z)).scale(&third()),
        BracketForm::LoosNested => loos(g, x, y, z),
    };
    Ok(TrilinearValue { value, form })
}

/// Values of a trilinear bracket on all basis triples, for fast evaluation on
/// arbitrary vectors by trilinear expansion.
#[derive(Debug, Clone)]
pub struct TrilinearTable {
    dim: usize,
    values: Vec<Vector>,
}

impl TrilinearTable {
    pub fn loos(g: &BracketAlgebra) -> Self {
        Self::build(g, loos)
    }

    pub fn yamaguti(g: &BracketAlgebra) -> Self {
        Self::build(g, yamaguti)
    }

    fn build(
        g: &BracketAlgebra,
        f: fn(&BracketAlgebra, &Vector, &Vector, &Vector) -> Vector,
    ) -> Self {
        let p = g.dim();
        let basis: Vec<Vector> = (0..p).map(|i| g.basis(i)).collect();
        let mut values = Vec::with_capacity(p * p * p);
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    values.push(f(g, x, y, z));
                }
            }
        }
        TrilinearTable { dim: p, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_value(&self, i: usize, j: usize, k: usize) -> &Vector {
        &self.values[(i * self.dim + j) * self.dim + k]
    }

    pub fn eval(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let ab = a * b;
                for (k, c) in z.support() {
                    out.add_scaled(&(&ab * c), self.basis_value(i, j, k));
                }
            }
        }
        out
    }
}
