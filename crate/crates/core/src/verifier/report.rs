//! Suite selection, report assembly and rendering.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::suites::{equivalence_from, lts_identity, operator_verdict, product_identity};
use super::{
    Equivalence, IdentityId, IdentityVerdict, Inputs, Mode, SuiteConfig, VerifyError, GROUPS,
};
use crate::algebra::catalog::CatalogItem;
use crate::algebra::{Algebra, BracketAlgebra};
use crate::operators::{multiplication_triple, Family, OperatorError, TranslationTriple};

/// What a suite run is about.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Target {
    /// A plain algebra; only product identities apply.
    Algebra(Algebra),
    /// A bracket algebra `Γ`.
    Bracket(BracketAlgebra),
    /// A translation-operator model together with its `Γ`.
    Model(TranslationTriple),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetKind {
    Algebra,
    Bracket,
    Model,
}

impl fmt::Display for TargetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TargetKind::Algebra => "algebra",
            TargetKind::Bracket => "bracket",
            TargetKind::Model => "model",
        })
    }
}

impl Target {
    /// A unital algebra becomes its multiplication model over `params`, by
    /// default every non-unit basis index. Algebras without a unit, or with
    /// nothing but the unit, are checked as plain algebras.
    pub fn from_algebra(a: Algebra, params: Option<&[usize]>) -> Result<Target, OperatorError> {
        if let Some(params) = params {
            return Ok(Target::Model(multiplication_triple(&a, params)?));
        }
        match a.unit() {
            Some(unit) if a.dim() > 1 => {
                let params: Vec<usize> = (0..a.dim()).filter(|&i| i != unit).collect();
                Ok(Target::Model(multiplication_triple(&a, &params)?))
            }
            _ => Ok(Target::Algebra(a)),
        }
    }

    pub fn from_catalog(item: CatalogItem) -> Target {
        match item {
            CatalogItem::Algebra(a) => {
                Target::from_algebra(a, None).expect("catalog models are closed")
            }
            CatalogItem::Bracket(g) => Target::Bracket(g),
        }
    }

    pub fn kind(&self) -> TargetKind {
        match self {
            Target::Algebra(_) => TargetKind::Algebra,
            Target::Bracket(_) => TargetKind::Bracket,
            Target::Model(_) => TargetKind::Model,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Target::Algebra(a) => a.name(),
            Target::Bracket(g) => g.name(),
            Target::Model(t) => t.name(),
        }
    }

    /// Every suite that can be evaluated on this target, in canonical order.
    pub fn applicable(&self) -> Vec<IdentityId> {
        IdentityId::ALL
            .iter()
            .copied()
            .filter(|id| match self {
                Target::Algebra(_) => IdentityId::ALGEBRAIC.contains(id),
                Target::Bracket(_) => !id.is_operator(),
                Target::Model(_) => true,
            })
            .collect()
    }

    /// The suites selected by `all`: every identity claimed for this kind of
    /// target. The Jacobi identity is only run when requested by name.
    pub fn default_suites(&self) -> Vec<IdentityId> {
        self.applicable()
            .into_iter()
            .filter(|&id| id != IdentityId::Jacobi || matches!(self, Target::Algebra(_)))
            .collect()
    }

    /// Resolves suite tokens (ids or group names) to a sorted, deduplicated
    /// id list.
    pub fn select(&self, tokens: &[impl AsRef<str>]) -> Result<Vec<IdentityId>, VerifyError> {
        let applicable = self.applicable();
        let inapplicable = |id: String| VerifyError::Inapplicable {
            id,
            kind: self.kind(),
            applicable: applicable.iter().map(|i| i.as_str().to_string()).collect(),
        };
        let mut ids = Vec::new();
        for token in tokens {
            let token = token.as_ref().trim();
            let group: Vec<IdentityId> = match token {
                "all" => self.default_suites(),
                "operators" => IdentityId::OPERATORS.to_vec(),
                "lts" => IdentityId::LTS.to_vec(),
                _ => vec![token.parse()?],
            };
            for id in group {
                if !applicable.contains(&id) {
                    return Err(inapplicable(if GROUPS.contains(&token) {
                        token.to_string()
                    } else {
                        id.as_str().to_string()
                    }));
                }
                ids.push(id);
            }
        }
        ids.sort();
        ids.dedup();
        Ok(ids)
    }

    fn gamma(&self) -> Option<&BracketAlgebra> {
        match self {
            Target::Algebra(_) => None,
            Target::Bracket(g) => Some(g),
            Target::Model(t) => Some(t.params()),
        }
    }

    fn product_algebra(&self) -> &Algebra {
        match self {
            Target::Algebra(a) => a,
            Target::Bracket(g) => g.as_algebra(),
            Target::Model(t) => t.params().as_algebra(),
        }
    }

    fn info(&self) -> TargetInfo {
        let (dim, param_dim) = match self {
            Target::Algebra(a) => (a.dim(), None),
            Target::Bracket(g) => (g.dim(), None),
            Target::Model(t) => (t.dim(), Some(t.param_dim())),
        };
        TargetInfo {
            name: self.name().to_string(),
            kind: self.kind(),
            dim,
            param_dim,
            labels: self.product_algebra().labels().to_vec(),
        }
    }

    /// SHA-256 over a canonical JSON rendering of the target's structure.
    fn digest_input(&self) -> serde_json::Value {
        let constants = |a: &Algebra| serde_json::json!(a.structure_constants());
        match self {
            Target::Algebra(a) => serde_json::json!({"kind": "algebra", "table": constants(a)}),
            Target::Bracket(g) => {
                serde_json::json!({"kind": "bracket", "table": constants(g.as_algebra())})
            }
            Target::Model(t) => serde_json::json!({
                "kind": "model",
                "dim": t.dim(),
                "gamma": constants(t.params().as_algebra()),
                "L": t.family(Family::Left),
                "R": t.family(Family::Right),
                "M": t.family(Family::Middle),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetInfo {
    pub name: String,
    pub kind: TargetKind,
    /// Ambient dimension for models, algebra dimension otherwise.
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param_dim: Option<usize>,
    /// Labels of the basis the identities quantify over.
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub suites: Vec<IdentityId>,
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    pub seed: u64,
    pub guard_samples: usize,
}

/// A consistency condition between verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub toolkit: String,
    pub target: TargetInfo,
    pub digest: String,
    pub config: ReportConfig,
    pub verdicts: Vec<IdentityVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<Equivalence>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cross_checks: Vec<CrossCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub passed: bool,
}

/// Conventions behind the operator identities, recorded in every report that
/// runs one.
pub const OPERATOR_NOTES: &[&str] = &[
    "red-*: [Ŷ(x;y),F_z] = F_[x,y,z] with Ŷ = 6Y; calibration is c in [Y(x;y),F_z] = c F_[x,y,z]",
    "red-M: the M family on both sides",
    "prop-R: the outer operator is R_z",
    "tc-*: the left side is the double commutator [[F_x,F_y],F_z]",
    "sym-5c: [F(x;y),F(z;w)] = F({x,y,z};w) + F(z;{x,y,w}) with F(x;y) = [F_x,F_y]",
    "operator brackets are matrix commutators",
];

pub const TANGENT_NOTES: &[&str] = &[
    "the tangent associator is (x,y,z) = -J(x,y,z)/6",
    "the Mal'tsev identity is checked in fully linearized four-argument form",
];

/// Runs the selected suites and assembles a deterministic report.
pub fn run_suite(
    target: &Target,
    suites: &[IdentityId],
    config: &SuiteConfig,
) -> Result<IdentityReport, VerifyError> {
    let applicable = target.applicable();
    let mut ids = suites.to_vec();
    ids.sort();
    ids.dedup();
    if let Some(bad) = ids.iter().find(|id| !applicable.contains(id)) {
        return Err(VerifyError::Inapplicable {
            id: bad.as_str().to_string(),
            kind: target.kind(),
            applicable: applicable.iter().map(|i| i.as_str().to_string()).collect(),
        });
    }

    let verdicts: Vec<IdentityVerdict> = ids
        .iter()
        .map(|&id| match (target, id) {
            (Target::Model(t), id) if id.is_operator() => operator_verdict(t, id, config),
            (_, id) if IdentityId::LTS.contains(&id) => {
                lts_identity(target.gamma().expect("bracket target"), id).run(config)
            }
            (_, id) => product_identity(target.product_algebra(), id).run(config),
        })
        .collect();

    let mut cross_checks = Vec::new();
    let find = |id| verdicts.iter().find(|v: &&IdentityVerdict| v.id == id);
    for (sym, tc) in [
        (IdentityId::Sym5b, IdentityId::TcL),
        (IdentityId::Sym5bR, IdentityId::TcR),
        (IdentityId::Sym5bM, IdentityId::TcM),
    ] {
        if let (Some(a), Some(b)) = (find(sym), find(tc)) {
            cross_checks.push(CrossCheck {
                name: format!("{sym} verdict equals {tc} verdict"),
                holds: same_outcome(a, b),
            });
        }
    }
    let equivalence = match target {
        Target::Model(t) => equivalence_from(&verdicts, t.params()),
        _ => None,
    };
    if let Some(Equivalence::Checked { holds, .. }) = &equivalence {
        cross_checks.push(CrossCheck {
            name: "reductivity and triple closure agree per family".to_string(),
            holds: *holds,
        });
    }

    let mut notes: Vec<String> = Vec::new();
    if ids.iter().any(|id| id.is_operator()) {
        notes.extend(OPERATOR_NOTES.iter().map(|s| s.to_string()));
    }
    if ids.iter().any(|id| !id.is_operator()) {
        notes.extend(TANGENT_NOTES.iter().map(|s| s.to_string()));
    }

    let report_config = ReportConfig {
        suites: ids,
        mode: config.mode,
        samples: config.samples,
        seed: config.seed,
        guard_samples: config.guard_samples,
    };
    let digest_input = serde_json::json!({
        "target": target.digest_input(),
        "config": &report_config,
    });
    let digest = Sha256::digest(digest_input.to_string().as_bytes())
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        });

    let passed = verdicts.iter().all(|v| v.passed) && cross_checks.iter().all(|c| c.holds);
    Ok(IdentityReport {
        toolkit: format!("malcev {}", crate::VERSION),
        target: target.info(),
        digest,
        config: report_config,
        verdicts,
        equivalence,
        cross_checks,
        notes,
        passed,
    })
}

impl IdentityReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn verdict(&self, id: IdentityId) -> Option<&IdentityVerdict> {
        self.verdicts.iter().find(|v| v.id == id)
    }

    fn label_tuple(&self, inputs: &Inputs) -> String {
        match inputs {
            Inputs::Basis(idx) => {
                let labels: Vec<&str> = idx
                    .iter()
                    .map(|&i| self.target.labels.get(i).map(String::as_str).unwrap_or("?"))
                    .collect();
                format!("({})", labels.join(", "))
            }
            Inputs::Vectors(vs) => {
                let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                format!("({})", parts.join(", "))
            }
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let t = &self.target;
        let dims = match t.param_dim {
            Some(p) => format!("n={}, p={}", t.dim, p),
            None => format!("dim={}", t.dim),
        };
        let _ = writeln!(out, "{}", self.toolkit);
        let _ = writeln!(out, "target: {} ({}, {})", t.name, t.kind, dims);
        let _ = writeln!(out, "digest: {}", self.digest);
        let mode = serde_json::to_value(self.config.mode).expect("mode");
        let _ = writeln!(
            out,
            "mode: {}  seed: {}{}",
            mode.as_str().unwrap_or("?"),
            self.config.seed,
            self.config
                .samples
                .map(|s| format!("  samples: {s}"))
                .unwrap_or_default()
        );
        for v in &self.verdicts {
            let status = if v.passed { "PASS" } else { "FAIL" };
            let mut line = format!(
                "{status}  {:<9} {:<10} {} instances",
                v.id.as_str(),
                v.mode.to_string(),
                v.instances_checked
            );
            if v.guard_samples > 0 {
                let _ = write!(line, " + {} guard", v.guard_samples);
            }
            if !v.passed {
                let _ = write!(line, ", {} failures", v.failures);
            }
            if let Some(c) = &v.calibration {
                let _ = write!(line, ", calibration {}", render_calibration(c));
            }
            let _ = writeln!(out, "{line}");
            for c in &v.counterexamples {
                let _ = writeln!(
                    out,
                    "      {}{}: lhs {} rhs {}",
                    if c.guard { "guard " } else { "" },
                    self.label_tuple(&c.inputs),
                    c.lhs,
                    c.rhs
                );
            }
        }
        match &self.equivalence {
            Some(Equivalence::Checked {
                families, holds, ..
            }) => {
                let parts: Vec<String> = families
                    .iter()
                    .map(|a| {
                        format!(
                            "{}: red {} tc {}",
                            a.family,
                            pass(a.reductivity),
                            pass(a.triple_closure)
                        )
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "equivalence: {} ({})",
                    if *holds { "holds" } else { "violated" },
                    parts.join("; ")
                );
            }
            Some(Equivalence::NotApplicable { failed }) => {
                let ids: Vec<&str> = failed.iter().map(|i| i.as_str()).collect();
                let _ = writeln!(
                    out,
                    "equivalence: not applicable ({} failed)",
                    ids.join(", ")
                );
            }
            None => {}
        }
        for c in &self.cross_checks {
            let _ = writeln!(out, "check: {} ... {}", c.name, pass(c.holds));
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let n_pass = self.verdicts.iter().filter(|v| v.passed).count();
        let _ = writeln!(
            out,
            "summary: {}/{} verdicts passed, {}",
            n_pass,
            self.verdicts.len(),
            if self.passed { "OK" } else { "FAILED" }
        );
        out
    }
}

/// Equal apart from the id and the calibration attached to reductivity.
pub fn same_outcome(a: &IdentityVerdict, b: &IdentityVerdict) -> bool {
    a.mode == b.mode
        && a.instances_checked == b.instances_checked
        && a.guard_samples == b.guard_samples
        && a.passed == b.passed
        && a.failures == b.failures
        && a.counterexamples == b.counterexamples
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

fn render_calibration(c: &super::Calibration) -> String {
    match c {
        super::Calibration::Constant(s) => s.to_string(),
        super::Calibration::Indeterminate => "indeterminate".to_string(),
        super::Calibration::Inconsistent => "inconsistent".to_string(),
    }
}
