//! Identity suites with exact verdicts.
//!
//! Every identity is multilinear in its arguments, so an exhaustive check
//! over basis tuples decides it on the whole space. Exhaustive runs are
//! backed by a small random guard sample evaluated on general vectors, which
//! catches indexing mistakes that a basis-only evaluation could hide.

mod engine;
mod report;
mod suites;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{SquareMatrix, Vector};
use crate::operators::Family;

pub use report::{
    run_suite, same_outcome, CrossCheck, IdentityReport, ReportConfig, Target, TargetInfo,
    TargetKind,
};
pub use suites::{
    calibrate_family, calibrate_reductivity_constant, check_anticommutativity, check_jacobi,
    check_lts_axioms, check_malcev, check_proposition, check_reductivity,
    check_symmetric_relations, check_triple_closure, theorem1_equivalence, Calibration,
    Equivalence, FamilyAgreement,
};

/// Counterexample lists are truncated to this many entries; the failure
/// count stays exact.
pub const MAX_COUNTEREXAMPLES: usize = 10;
/// Random tuples drawn after an exhaustive scan.
pub const DEFAULT_GUARD_SAMPLES: usize = 100;
pub const DEFAULT_RANDOM_SAMPLES: usize = 1000;
/// Sample count for five-argument identities when the exhaustive scan is too
/// large.
pub const DEFAULT_QUINTUPLE_SAMPLES: usize = 20000;
/// Random coordinates are drawn uniformly from `-COORD_BOUND..=COORD_BOUND`.
pub const COORD_BOUND: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite {token:?}; known suites: {}", known.join(", "))]
    UnknownSuite { token: String, known: Vec<String> },
    #[error("suite {id} does not apply to a {kind} target; applicable: {}", applicable.join(", "))]
    Inapplicable {
        id: String,
        kind: TargetKind,
        applicable: Vec<String>,
    },
}

macro_rules! identity_ids {
    ($($variant:ident => $name:literal, $arity:literal;)*) => {
        /// Identifier of one identity suite.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum IdentityId {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            /// Number of arguments quantified over.
            pub fn arity(self) -> usize {
                match self {
                    $(IdentityId::$variant => $arity,)*
                }
            }
        }

        impl FromStr for IdentityId {
            type Err = VerifyError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($name => Ok(IdentityId::$variant),)*
                    _ => Err(VerifyError::UnknownSuite {
                        token: s.to_string(),
                        known: known_tokens(),
                    }),
                }
            }
        }
    };
}

identity_ids! {
    RedL => "red-L", 3;
    RedR => "red-R", 3;
    RedM => "red-M", 3;
    PropL => "prop-L", 3;
    PropR => "prop-R", 3;
    PropM => "prop-M", 3;
    TcL => "tc-L", 3;
    TcR => "tc-R", 3;
    TcM => "tc-M", 3;
    Sym5b => "sym-5b", 3;
    Sym5c => "sym-5c", 4;
    Sym5bR => "sym-5b-R", 3;
    Sym5cR => "sym-5c-R", 4;
    Sym5bM => "sym-5b-M", 3;
    Sym5cM => "sym-5c-M", 4;
    Lts6a => "lts-6a", 3;
    Lts6b => "lts-6b", 3;
    Lts6c => "lts-6c", 5;
    Malcev => "malcev", 4;
    Jacobi => "jacobi", 3;
    Anticomm => "anticomm", 2;
}

/// Suite group names accepted alongside individual ids.
pub const GROUPS: &[&str] = &["all", "operators", "lts"];

fn known_tokens() -> Vec<String> {
    GROUPS
        .iter()
        .copied()
        .chain(IdentityId::ALL.iter().map(|id| id.as_str()))
        .map(String::from)
        .collect()
}

impl IdentityId {
    /// The eleven operator identities as displayed: reductivity, the
    /// proposition and triple closure per family, and the two symmetric-space
    /// relations for the left family.
    pub const OPERATORS: &'static [IdentityId] = &[
        IdentityId::RedL,
        IdentityId::RedR,
        IdentityId::RedM,
        IdentityId::PropL,
        IdentityId::PropR,
        IdentityId::PropM,
        IdentityId::TcL,
        IdentityId::TcR,
        IdentityId::TcM,
        IdentityId::Sym5b,
        IdentityId::Sym5c,
    ];
    /// Symmetric-space relations for the right and middle families.
    pub const SYMMETRIC_ANALOGUES: &'static [IdentityId] = &[
        IdentityId::Sym5bR,
        IdentityId::Sym5cR,
        IdentityId::Sym5bM,
        IdentityId::Sym5cM,
    ];
    pub const LTS: &'static [IdentityId] =
        &[IdentityId::Lts6a, IdentityId::Lts6b, IdentityId::Lts6c];
    /// Identities of a single bracket (or product) algebra.
    pub const ALGEBRAIC: &'static [IdentityId] =
        &[IdentityId::Malcev, IdentityId::Jacobi, IdentityId::Anticomm];

    /// Translation family an operator identity quantifies over.
    pub fn family(self) -> Option<Family> {
        use IdentityId::*;
        match self {
            RedL | PropL | TcL | Sym5b | Sym5c => Some(Family::Left),
            RedR | PropR | TcR | Sym5bR | Sym5cR => Some(Family::Right),
            RedM | PropM | TcM | Sym5bM | Sym5cM => Some(Family::Middle),
            _ => None,
        }
    }

    pub fn is_operator(self) -> bool {
        self.family().is_some()
    }

    /// Random stream key. `sym-5b` is the triple closure identity for `L`,
    /// so the two share their samples and produce identical verdicts.
    pub(crate) fn sampling_key(self) -> usize {
        match self {
            IdentityId::Sym5b => IdentityId::TcL.index(),
            IdentityId::Sym5bR => IdentityId::TcR.index(),
            IdentityId::Sym5bM => IdentityId::TcM.index(),
            id => id.index(),
        }
    }

    pub(crate) fn index(self) -> usize {
        IdentityId::ALL
            .iter()
            .position(|&i| i == self)
            .expect("listed")
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the instances of a verdict were chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleMode {
    Exhaustive,
    Random,
}

impl fmt::Display for SampleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SampleMode::Exhaustive => "exhaustive",
            SampleMode::Random => "random",
        })
    }
}

/// Requested mode; `Auto` picks exhaustive scans when they are small enough.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Auto,
    Exhaustive,
    Random,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Mode::Auto),
            "exhaustive" => Ok(Mode::Exhaustive),
            "random" => Ok(Mode::Random),
            _ => Err(format!(
                "unknown mode {s:?} (expected auto, exhaustive or random)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub mode: Mode,
    /// Random sample count; `None` uses the per-arity default.
    pub samples: Option<usize>,
    pub seed: u64,
    /// Random tuples re-checked after each exhaustive scan.
    pub guard_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            mode: Mode::Auto,
            samples: None,
            seed: 0,
            guard_samples: DEFAULT_GUARD_SAMPLES,
        }
    }
}

impl SuiteConfig {
    pub fn exhaustive() -> Self {
        SuiteConfig {
            mode: Mode::Exhaustive,
            ..Self::default()
        }
    }

    pub fn random(samples: usize, seed: u64) -> Self {
        SuiteConfig {
            mode: Mode::Random,
            samples: Some(samples),
            seed,
            guard_samples: 0,
        }
    }

    /// Mode and instance count for an identity of `arity` over dimension `dim`.
    pub(crate) fn plan(&self, dim: usize, arity: usize) -> (SampleMode, usize) {
        let total = dim.pow(arity as u32);
        let default_samples = if arity >= 5 {
            DEFAULT_QUINTUPLE_SAMPLES
        } else {
            DEFAULT_RANDOM_SAMPLES
        };
        let random = (SampleMode::Random, self.samples.unwrap_or(default_samples));
        match self.mode {
            Mode::Exhaustive => (SampleMode::Exhaustive, total),
            Mode::Random => random,
            Mode::Auto => {
                let small = if arity >= 5 { dim <= 7 } else { dim <= 8 };
                if small {
                    (SampleMode::Exhaustive, total)
                } else {
                    random
                }
            }
        }
    }
}

/// One side of a checked identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Vector(Vector),
    Matrix(SquareMatrix),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Vector(v) => write!(f, "{v}"),
            Value::Matrix(m) => write!(f, "{m}"),
        }
    }
}

/// Arguments of a failing instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Inputs {
    /// Basis indices of the parameter algebra.
    Basis(Vec<usize>),
    Vectors(Vec<Vector>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: Inputs,
    pub lhs: Value,
    pub rhs: Value,
    /// Found by the random guard that follows an exhaustive scan.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub guard: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityVerdict {
    pub id: IdentityId,
    pub mode: SampleMode,
    /// Exactly `p^k` for an exhaustive scan of a `k`-ary identity.
    pub instances_checked: usize,
    pub guard_samples: usize,
    pub passed: bool,
    /// Exact number of failing instances, guard included.
    pub failures: usize,
    /// The first [`MAX_COUNTEREXAMPLES`] failures in canonical order.
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub calibration: Option<Calibration>,
}

pub(crate) fn random_coordinate_range() -> std::ops::RangeInclusive<i64> {
    -COORD_BOUND..=COORD_BOUND
}
