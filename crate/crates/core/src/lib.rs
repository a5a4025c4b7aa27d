//! Exact-arithmetic verification of the identities tying Mal'tsev algebras,
//! Moufang translation operators and Lie triple systems together.
//!
//! The crate is layered bottom-up:
//!
//! * [`linalg`]: rational scalars, vectors, square matrices, span membership.
//! * [`algebra`]: structure-constant algebras, Cayley-Dickson doubling, the
//!   fixture catalog and property classification.
//! * [`brackets`]: the tangent associator, Yamaguti and Loos brackets.
//! * [`operators`]: left/right/middle translation families and the operators
//!   built from them.
//! * [`verifier`]: identity suites with verdicts, counterexamples and reports.
//! * [`format`]: the on-disk algebra file format.

pub mod algebra;
pub mod brackets;
pub mod format;
pub mod linalg;
pub mod operators;
pub mod verifier;

pub use algebra::{cayley_dickson, classify, Algebra, AlgebraError, BracketAlgebra};
pub use linalg::{express_in_family, mat_commutator, Membership, Scalar, SquareMatrix, Vector};
pub use operators::{Family, TranslationTriple};
pub use verifier::{IdentityId, IdentityReport, IdentityVerdict};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
