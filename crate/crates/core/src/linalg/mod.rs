//! Exact linear algebra over the rationals.

mod matrix;
mod scalar;
mod solve;
mod vector;

pub use matrix::{mat_commutator, SquareMatrix};
pub use scalar::Scalar;
pub use solve::{express_in_family, linear_combination, Membership};
pub use vector::Vector;

pub(crate) use scalar::denominator_lcm;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix family of {len} is linearly dependent: member {index} lies in the span of earlier members")]
    DependentFamily { index: usize, len: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("not a rational number: {0:?}")]
    ParseScalar(String),
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<(), LinalgError> {
    if expected == found {
        Ok(())
    } else {
        Err(LinalgError::DimensionMismatch { expected, found })
    }
}
