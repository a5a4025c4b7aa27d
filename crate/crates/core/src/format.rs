//! JSON interchange format for algebras.
//!
//! ```json
//! {
//!   "name": "complexes",
//!   "dim": 2,
//!   "basis": ["e0", "e1"],
//!   "kind": "algebra",
//!   "table": [
//!     {"i": 0, "j": 0, "terms": [[0, "1"]]},
//!     {"i": 0, "j": 1, "terms": [[1, "1"]]},
//!     {"i": 1, "j": 0, "terms": [[1, "1"]]},
//!     {"i": 1, "j": 1, "terms": [[0, "-1"]]}
//!   ]
//! }
//! ```
//!
//! Coefficients are strings holding an integer or `p/q`. Omitted products
//! are zero. `params` optionally selects the basis indices that parametrize
//! the translation operators.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::catalog::CatalogItem;
use crate::algebra::{Algebra, AlgebraError, BracketAlgebra};
use crate::linalg::Scalar;
use crate::operators::OperatorError;
use crate::verifier::Target;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
}

fn invalid(location: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Invalid {
        location: location.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FileKind {
    Algebra,
    Bracket,
}

/// One product `e_i e_j = sum of c e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub kind: FileKind,
    pub table: Vec<TableEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<usize>>,
}

/// A validated algebra file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadedAlgebra {
    Algebra {
        algebra: Algebra,
        params: Option<Vec<usize>>,
    },
    Bracket(BracketAlgebra),
}

impl LoadedAlgebra {
    pub fn algebra(&self) -> &Algebra {
        match self {
            LoadedAlgebra::Algebra { algebra, .. } => algebra,
            LoadedAlgebra::Bracket(g) => g.as_algebra(),
        }
    }

    pub fn into_target(self) -> Result<Target, FormatError> {
        match self {
            LoadedAlgebra::Algebra { algebra, params } => {
                Target::from_algebra(algebra, params.as_deref())
                    .map_err(|e: OperatorError| invalid("params", e.to_string()))
            }
            LoadedAlgebra::Bracket(g) => Ok(Target::Bracket(g)),
        }
    }
}

impl AlgebraFile {
    pub fn from_algebra(a: &Algebra, kind: FileKind) -> Self {
        let dim = a.dim();
        let mut table = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let terms: Vec<(usize, String)> = a
                    .basis_product(i, j)
                    .support()
                    .map(|(k, c)| (k, c.to_string()))
                    .collect();
                if !terms.is_empty() {
                    table.push(TableEntry { i, j, terms });
                }
            }
        }
        AlgebraFile {
            name: a.name().to_string(),
            dim,
            basis: a.labels().to_vec(),
            kind,
            table,
            params: None,
        }
    }

    pub fn from_catalog(item: &CatalogItem) -> Self {
        match item {
            CatalogItem::Algebra(a) => AlgebraFile::from_algebra(a, FileKind::Algebra),
            CatalogItem::Bracket(g) => AlgebraFile::from_algebra(g.as_algebra(), FileKind::Bracket),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("file serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        serde_json::from_str(text).map_err(|e| {
            let suffix = format!(" at line {} column {}", e.line(), e.column());
            let message = e.to_string();
            FormatError::Json {
                line: e.line(),
                column: e.column(),
                message: message
                    .strip_suffix(&suffix)
                    .unwrap_or(&message)
                    .to_string(),
            }
        })
    }

    pub fn read(path: &Path) -> Result<Self, FormatError> {
        let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Checks every index and coefficient and builds the algebra.
    pub fn load(&self) -> Result<LoadedAlgebra, FormatError> {
        let dim = self.dim;
        if dim == 0 {
            return Err(invalid("dim", "must be positive"));
        }
        if self.basis.len() != dim {
            return Err(invalid(
                "basis",
                format!("{} labels for dimension {dim}", self.basis.len()),
            ));
        }
        let mut constants = vec![vec![vec![Scalar::ZERO; dim]; dim]; dim];
        let mut seen = vec![false; dim * dim];
        for (n, entry) in self.table.iter().enumerate() {
            let here = format!("table[{n}]");
            for (name, value) in [("i", entry.i), ("j", entry.j)] {
                if value >= dim {
                    return Err(invalid(
                        &here,
                        format!("{name} = {value} out of range for dimension {dim}"),
                    ));
                }
            }
            let slot = entry.i * dim + entry.j;
            if seen[slot] {
                return Err(invalid(
                    &here,
                    format!("duplicate entry for ({}, {})", entry.i, entry.j),
                ));
            }
            seen[slot] = true;
            for (t, (k, coeff)) in entry.terms.iter().enumerate() {
                let at = format!("{here}.terms[{t}]");
                if *k >= dim {
                    return Err(invalid(
                        at,
                        format!("k = {k} out of range for dimension {dim}"),
                    ));
                }
                let c: Scalar = coeff
                    .parse()
                    .map_err(|e| invalid(&at, format!("coefficient {coeff:?}: {e}")))?;
                constants[entry.i][entry.j][*k] += c;
            }
        }
        let algebra = Algebra::from_structure_constants(&self.name, self.basis.clone(), constants)
            .map_err(|e| invalid("table", e.to_string()))?;
        match self.kind {
            FileKind::Algebra => {
                if let Some(params) = &self.params {
                    crate::algebra::validate_index_set(params, dim)
                        .map_err(|e: AlgebraError| invalid("params", e.to_string()))?;
                }
                Ok(LoadedAlgebra::Algebra {
                    algebra,
                    params: self.params.clone(),
                })
            }
            FileKind::Bracket => {
                if self.params.is_some() {
                    return Err(invalid("params", "only allowed for kind \"algebra\""));
                }
                BracketAlgebra::new(algebra)
                    .map(LoadedAlgebra::Bracket)
                    .map_err(|e| invalid("table", e.to_string()))
            }
        }
    }
}
