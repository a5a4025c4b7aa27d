use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_dim, LinalgError, Scalar, Vector};

/// A dense `n x n` rational matrix acting on coordinate columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        SquareMatrix {
            dim,
            entries: vec![Scalar::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Scalar::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            check_dim(dim, row.len())?;
            entries.extend(row);
        }
        Ok(SquareMatrix { dim, entries })
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector]) -> Result<Self, LinalgError> {
        let dim = columns.len();
        let mut m = Self::zeros(dim);
        for (j, col) in columns.iter().enumerate() {
            check_dim(dim, col.dim())?;
            for (i, c) in col.iter().enumerate() {
                m.entries[i * dim + j] = c.clone();
            }
        }
        Ok(m)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| Scalar::integer(c)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.entries[row * self.dim + col] = value;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, LinalgError> {
        check_dim(self.dim, v.dim())?;
        let mut out = Vector::zeros(self.dim);
        for (j, x) in v.support() {
            for i in 0..self.dim {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out[i] += &(a * x);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Scalar) -> SquareMatrix {
        if k.is_zero() {
            return Self::zeros(self.dim);
        }
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    /// `self += k * other`. Panics on dimension mismatch.
    pub fn add_scaled(&mut self, k: &Scalar, other: &SquareMatrix) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if k.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += &(k * b);
            }
        }
    }

    pub fn checked_mul(&self, other: &SquareMatrix) -> Result<SquareMatrix, LinalgError> {
        check_dim(self.dim, other.dim)?;
        Ok(self.product(other))
    }

    fn product(&self, other: &SquareMatrix) -> SquareMatrix {
        let n = self.dim;
        let mut out = Self::zeros(n);
        // The operator matrices in this crate are very sparse; skip zero
        // factors in the inner loop.
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// `AB - BA`. Panics on dimension mismatch; see [`mat_commutator`].
    pub fn bracket(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut ab = self.product(other);
        let ba = other.product(self);
        ab.add_scaled(&Scalar::integer(-1), &ba);
        ab
    }
}

/// The matrix commutator `AB - BA`.
pub fn mat_commutator(a: &SquareMatrix, b: &SquareMatrix) -> Result<SquareMatrix, LinalgError> {
    check_dim(a.dim, b.dim)?;
    Ok(a.bracket(b))
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        self.product(rhs)
    }
}

impl Add for &SquareMatrix {
    type Output = SquareMatrix;
    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        let mut out = self.clone();
        out.add_scaled(&Scalar::ONE, rhs);
        out
    }
}

impl Sub for &SquareMatrix {
    type Output = SquareMatrix;
    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        let mut out = self.clone();
        out.add_scaled(&Scalar::integer(-1), rhs);
        out
    }
}

impl Neg for &SquareMatrix {
    type Output = SquareMatrix;
    fn neg(self) -> SquareMatrix {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c}")?;
            }
        }
        write!(f, "]")
    }
}

impl Serialize for SquareMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.rows())
    }
}

impl<'de> Deserialize<'de> for SquareMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Scalar>>::deserialize(deserializer)?;
        SquareMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
