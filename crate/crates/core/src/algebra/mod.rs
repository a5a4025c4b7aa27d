//! Finite-dimensional algebras given by structure constants.

pub mod catalog;
mod cayley_dickson;
pub(crate) mod classify;

pub use cayley_dickson::cayley_dickson;
pub use classify::{classify, malcev_defect, Property, PropertyReport};

use thiserror::Error;

use crate::linalg::{check_dim, LinalgError, Scalar, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra must have dimension at least 1")]
    Empty,
    #[error("expected {expected} basis labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("structure constants: row {i} has {found} entries, expected {expected}")]
    RaggedRow {
        i: usize,
        expected: usize,
        found: usize,
    },
    #[error("structure constants at ({i},{j}) have length {found}, expected {expected}")]
    RaggedEntry {
        i: usize,
        j: usize,
        expected: usize,
        found: usize,
    },
    #[error("algebra {0:?} has no unit element")]
    NotUnital(String),
    #[error("bracket is not anticommutative at basis pair ({i},{j})")]
    NotAnticommutative { i: usize, j: usize },
    #[error("commutator of basis pair ({i},{j}) leaves the selected subspace")]
    NotClosed { i: usize, j: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("basis index {0} selected twice")]
    DuplicateIndex(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A finite-dimensional algebra: `e_i e_j = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    labels: Vec<String>,
    /// Products of basis vectors, row-major in `(i, j)`.
    products: Vec<Vector>,
    unit: Option<usize>,
}

impl Algebra {
    /// Validates a dense structure tensor and detects a two-sided unit among
    /// the basis vectors.
    pub fn from_structure_constants(
        name: impl Into<String>,
        labels: Vec<String>,
        constants: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self, AlgebraError> {
        let dim = constants.len();
        if dim == 0 {
            return Err(AlgebraError::Empty);
        }
        if labels.len() != dim {
            return Err(AlgebraError::LabelCount {
                expected: dim,
                found: labels.len(),
            });
        }
        let mut products = Vec::with_capacity(dim * dim);
        for (i, row) in constants.into_iter().enumerate() {
            if row.len() != dim {
                return Err(AlgebraError::RaggedRow {
                    i,
                    expected: dim,
                    found: row.len(),
                });
            }
            for (j, entry) in row.into_iter().enumerate() {
                if entry.len() != dim {
                    return Err(AlgebraError::RaggedEntry {
                        i,
                        j,
                        expected: dim,
                        found: entry.len(),
                    });
                }
                products.push(Vector::new(entry));
            }
        }
        Ok(Self::from_products(name.into(), labels, products))
    }

    /// Builds from already-shaped basis products (`dim^2` vectors of length `dim`).
    fn from_products(name: String, labels: Vec<String>, products: Vec<Vector>) -> Self {
        let mut algebra = Algebra {
            name,
            labels,
            products,
            unit: None,
        };
        algebra.unit = (0..algebra.dim()).find(|&u| algebra.is_unit(u));
        algebra
    }

    fn is_unit(&self, u: usize) -> bool {
        (0..self.dim()).all(|i| {
            let e_i = Vector::basis(self.dim(), i);
            *self.basis_product(u, i) == e_i && *self.basis_product(i, u) == e_i
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.products[i * self.dim() + j]
    }

    /// The dense tensor `c[i][j][k]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim())
            .map(|i| {
                (0..self.dim())
                    .map(|j| self.basis_product(i, j).coords().to_vec())
                    .collect()
            })
            .collect()
    }

    pub fn multiply(&self, u: &Vector, v: &Vector) -> Result<Vector, AlgebraError> {
        check_dim(self.dim(), u.dim())?;
        check_dim(self.dim(), v.dim())?;
        Ok(self.mul(u, v))
    }

    /// Bilinear product without dimension checks.
    pub(crate) fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (i, a) in u.support() {
            for (j, b) in v.support() {
                out.add_scaled(&(a * b), self.basis_product(i, j));
            }
        }
        out
    }

    /// `uv - vu`.
    pub(crate) fn commutator(&self, u: &Vector, v: &Vector) -> Vector {
        self.mul(u, v) - self.mul(v, u)
    }

    /// The associator `(xy)z - x(yz)`.
    pub fn associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, AlgebraError> {
        for v in [x, y, z] {
            check_dim(self.dim(), v.dim())?;
        }
        Ok(self.assoc(x, y, z))
    }

    pub(crate) fn assoc(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.mul(&self.mul(x, y), z) - self.mul(x, &self.mul(y, z))
    }

    /// Conjugation fixing the unit and negating every other basis vector.
    pub fn conjugate(&self, v: &Vector) -> Result<Vector, AlgebraError> {
        let unit = self.require_unit()?;
        check_dim(self.dim(), v.dim())?;
        Ok(v.iter()
            .enumerate()
            .map(|(i, c)| if i == unit { c.clone() } else { -c })
            .collect())
    }

    pub(crate) fn require_unit(&self) -> Result<usize, AlgebraError> {
        self.unit
            .ok_or_else(|| AlgebraError::NotUnital(self.name.clone()))
    }

    /// The commutator algebra `[u, v] = uv - vu`, optionally restricted to the
    /// span of the basis vectors in `restrict_to` (in the given order).
    pub fn derived_commutator_algebra(
        &self,
        restrict_to: Option<&[usize]>,
    ) -> Result<BracketAlgebra, AlgebraError> {
        let all: Vec<usize> = (0..self.dim()).collect();
        let indices = restrict_to.unwrap_or(&all);
        validate_index_set(indices, self.dim())?;
        if indices.is_empty() {
            return Err(AlgebraError::Empty);
        }
        let p = indices.len();
        let mut products = Vec::with_capacity(p * p);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                let c = self.commutator(&self.basis(i), &self.basis(j));
                let mut restricted = Vector::zeros(p);
                for (k, value) in c.support() {
                    match indices.iter().position(|&x| x == k) {
                        Some(pos) => restricted[pos] = value.clone(),
                        None => return Err(AlgebraError::NotClosed { i, j }),
                    }
                }
                debug_assert!(a < p && b < p);
                products.push(restricted);
            }
        }
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        let name = format!("{}-commutator", self.name);
        // Commutators are anticommutative by construction.
        Ok(BracketAlgebra {
            inner: Algebra::from_products(name, labels, products),
        })
    }
}

pub(crate) fn validate_index_set(indices: &[usize], dim: usize) -> Result<(), AlgebraError> {
    for (n, &i) in indices.iter().enumerate() {
        if i >= dim {
            return Err(AlgebraError::IndexOutOfRange { index: i, dim });
        }
        if indices[..n].contains(&i) {
            return Err(AlgebraError::DuplicateIndex(i));
        }
    }
    Ok(())
}

/// An anticommutative algebra whose product is read as a bracket `[u, v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketAlgebra {
    inner: Algebra,
}

impl BracketAlgebra {
    /// Checks `[e_i, e_j] = -[e_j, e_i]` for every basis pair (including
    /// `[e_i, e_i] = 0`).
    pub fn new(algebra: Algebra) -> Result<Self, AlgebraError> {
        let n = algebra.dim();
        for i in 0..n {
            for j in i..n {
                if *algebra.basis_product(i, j) != -algebra.basis_product(j, i) {
                    return Err(AlgebraError::NotAnticommutative { i, j });
                }
            }
        }
        Ok(BracketAlgebra { inner: algebra })
    }

    pub fn from_structure_constants(
        name: impl Into<String>,
        labels: Vec<String>,
        constants: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self, AlgebraError> {
        Self::new(Algebra::from_structure_constants(name, labels, constants)?)
    }

    pub fn as_algebra(&self) -> &Algebra {
        &self.inner
    }

    pub fn into_algebra(self) -> Algebra {
        self.inner
    }

    pub fn name(&self) -> &str {
        self.inner.name()
    }

    pub fn with_name(self, name: impl Into<String>) -> Self {
        BracketAlgebra {
            inner: self.inner.with_name(name),
        }
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.inner.basis(i)
    }

    pub fn bracket(&self, u: &Vector, v: &Vector) -> Result<Vector, AlgebraError> {
        self.inner.multiply(u, v)
    }

    pub(crate) fn br(&self, u: &Vector, v: &Vector) -> Vector {
        self.inner.mul(u, v)
    }

    /// `J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobian(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, AlgebraError> {
        for v in [x, y, z] {
            check_dim(self.dim(), v.dim())?;
        }
        Ok(self.jac(x, y, z))
    }

    pub(crate) fn jac(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let a = self.br(&self.br(x, y), z);
        let b = self.br(&self.br(y, z), x);
        let c = self.br(&self.br(z, x), y);
        &(&a + &b) + &c
    }
}
