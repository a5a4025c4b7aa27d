//! Matrix models of the left, right and middle translation families.
//!
//! A [`TranslationTriple`] assigns to every parameter `x` in a bracket algebra
//! `Γ` three `n x n` matrices `L_x`, `R_x`, `M_x`, linear in `x`. Operator
//! brackets are plain matrix commutators throughout.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{validate_index_set, Algebra, AlgebraError, BracketAlgebra};
use crate::linalg::{check_dim, LinalgError, Scalar, SquareMatrix, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("{family} family has {found} matrices, expected one per parameter ({expected})")]
    FamilySize {
        family: Family,
        expected: usize,
        found: usize,
    },
}

/// One of the three translation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
    #[serde(rename = "M")]
    Middle,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Left, Family::Right, Family::Middle];

    pub fn symbol(self) -> &'static str {
        match self {
            Family::Left => "L",
            Family::Right => "R",
            Family::Middle => "M",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `L(x;y) = [L_x, L_y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorPair(pub SquareMatrix);

impl OperatorPair {
    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }
}

#[derive(Debug, Clone)]
pub struct TranslationTriple {
    name: String,
    dim: usize,
    ambient: Option<Algebra>,
    params: BracketAlgebra,
    /// Image of each parameter basis vector in the ambient algebra.
    embedding: Option<Vec<Vector>>,
    left: Vec<SquareMatrix>,
    right: Vec<SquareMatrix>,
    middle: Vec<SquareMatrix>,
}

/// Left multiplication by `e_i`: column `j` is `e_i e_j`.
pub fn left_multiplication(a: &Algebra, i: usize) -> SquareMatrix {
    let cols: Vec<Vector> = (0..a.dim())
        .map(|j| a.basis_product(i, j).clone())
        .collect();
    SquareMatrix::from_columns(&cols).expect("square by construction")
}

/// Right multiplication by `e_i`: column `j` is `e_j e_i`.
pub fn right_multiplication(a: &Algebra, i: usize) -> SquareMatrix {
    let cols: Vec<Vector> = (0..a.dim())
        .map(|j| a.basis_product(j, i).clone())
        .collect();
    SquareMatrix::from_columns(&cols).expect("square by construction")
}

/// The default middle family `M_x = -(L_x + R_x)`.
pub fn negated_sum(left: &SquareMatrix, right: &SquareMatrix) -> SquareMatrix {
    -&(left + right)
}

/// Multiplication model with the default middle convention; see
/// [`multiplication_triple_with`].
pub fn multiplication_triple(
    ambient: &Algebra,
    params: &[usize],
) -> Result<TranslationTriple, OperatorError> {
    multiplication_triple_with(ambient, params, negated_sum)
}

/// `L_i`, `R_i` are left and right multiplication by the ambient basis vector
/// `params[i]`, `M_i = middle(L_i, R_i)`, and `Γ` is the commutator algebra on
/// the span of `params`.
pub fn multiplication_triple_with(
    ambient: &Algebra,
    params: &[usize],
    middle: impl Fn(&SquareMatrix, &SquareMatrix) -> SquareMatrix,
) -> Result<TranslationTriple, OperatorError> {
    ambient.require_unit()?;
    validate_index_set(params, ambient.dim())?;
    let gamma = ambient
        .derived_commutator_algebra(Some(params))?
        .with_name(format!("{}-gamma", ambient.name()));
    let left: Vec<SquareMatrix> = params
        .iter()
        .map(|&i| left_multiplication(ambient, i))
        .collect();
    let right: Vec<SquareMatrix> = params
        .iter()
        .map(|&i| right_multiplication(ambient, i))
        .collect();
    let middle = left.iter().zip(&right).map(|(l, r)| middle(l, r)).collect();
    let embedding = params.iter().map(|&i| ambient.basis(i)).collect();
    Ok(TranslationTriple {
        name: ambient.name().to_string(),
        dim: ambient.dim(),
        ambient: Some(ambient.clone()),
        params: gamma,
        embedding: Some(embedding),
        left,
        right,
        middle,
    })
}

/// All translation matrices zero.
pub fn zero_triple(dim: usize, params: BracketAlgebra) -> TranslationTriple {
    let zeros = vec![SquareMatrix::zeros(dim); params.dim()];
    TranslationTriple {
        name: "zero".to_string(),
        dim,
        ambient: None,
        params,
        embedding: None,
        left: zeros.clone(),
        right: zeros.clone(),
        middle: zeros,
    }
}

impl TranslationTriple {
    /// A model from explicit families, one `dim x dim` matrix per parameter.
    pub fn from_families(
        name: impl Into<String>,
        dim: usize,
        params: BracketAlgebra,
        left: Vec<SquareMatrix>,
        right: Vec<SquareMatrix>,
        middle: Vec<SquareMatrix>,
    ) -> Result<Self, OperatorError> {
        for (family, mats) in Family::ALL.into_iter().zip([&left, &right, &middle]) {
            if mats.len() != params.dim() {
                return Err(OperatorError::FamilySize {
                    family,
                    expected: params.dim(),
                    found: mats.len(),
                });
            }
            for m in mats.iter() {
                check_dim(dim, m.dim())?;
            }
        }
        Ok(TranslationTriple {
            name: name.into(),
            dim,
            ambient: None,
            params,
            embedding: None,
            left,
            right,
            middle,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &BracketAlgebra {
        &self.params
    }

    pub fn param_dim(&self) -> usize {
        self.params.dim()
    }

    pub fn ambient(&self) -> Option<&Algebra> {
        self.ambient.as_ref()
    }

    /// Image of a parameter vector in the ambient algebra, when the model has one.
    pub fn embed(&self, x: &Vector) -> Option<Vector> {
        let basis = self.embedding.as_ref()?;
        let mut out = Vector::zeros(self.dim);
        for (i, c) in x.support() {
            out.add_scaled(c, &basis[i]);
        }
        Some(out)
    }

    pub fn family(&self, f: Family) -> &[SquareMatrix] {
        match f {
            Family::Left => &self.left,
            Family::Right => &self.right,
            Family::Middle => &self.middle,
        }
    }

    /// `F_x = sum_i x_i F_i`.
    pub fn operator(&self, f: Family, x: &Vector) -> Result<SquareMatrix, OperatorError> {
        check_dim(self.param_dim(), x.dim())?;
        Ok(self.op(f, x))
    }

    pub(crate) fn op(&self, f: Family, x: &Vector) -> SquareMatrix {
        let mats = self.family(f);
        let mut support = x.support();
        match (support.next(), support.next()) {
            (None, _) => SquareMatrix::zeros(self.dim),
            (Some((i, c)), None) if c.is_one() => mats[i].clone(),
            _ => {
                let mut out = SquareMatrix::zeros(self.dim);
                for (i, c) in x.support() {
                    out.add_scaled(c, &mats[i]);
                }
                out
            }
        }
    }

    /// `Ŷ(x;y) = [L_x,L_y] + [R_x,R_y] + [M_x,M_y]`, six times the Yamagutian.
    pub fn yamagutian_unnormalized(
        &self,
        x: &Vector,
        y: &Vector,
    ) -> Result<SquareMatrix, OperatorError> {
        check_dim(self.param_dim(), x.dim())?;
        check_dim(self.param_dim(), y.dim())?;
        Ok(self.yhat(x, y))
    }

    pub(crate) fn yhat(&self, x: &Vector, y: &Vector) -> SquareMatrix {
        let mut out = SquareMatrix::zeros(self.dim);
        for f in Family::ALL {
            out.add_scaled(&Scalar::ONE, &self.op(f, x).bracket(&self.op(f, y)));
        }
        out
    }

    /// The Yamagutian `Y(x;y) = Ŷ(x;y) / 6`.
    pub fn yamagutian(&self, x: &Vector, y: &Vector) -> Result<SquareMatrix, OperatorError> {
        Ok(self
            .yamagutian_unnormalized(x, y)?
            .scale(&Scalar::new(1, 6)))
    }

    /// `L(x;y) = [L_x, L_y]`.
    pub fn pair_operator(&self, x: &Vector, y: &Vector) -> Result<OperatorPair, OperatorError> {
        self.family_pair(Family::Left, x, y)
    }

    /// `[F_x, F_y]` for any family.
    pub fn family_pair(
        &self,
        f: Family,
        x: &Vector,
        y: &Vector,
    ) -> Result<OperatorPair, OperatorError> {
        Ok(OperatorPair(
            self.operator(f, x)?.bracket(&self.operator(f, y)?),
        ))
    }
}
