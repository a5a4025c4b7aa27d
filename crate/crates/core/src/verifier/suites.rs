//! The identity suites.
//!
//! Operator identities (for a family `F` in `L`, `R`, `M`, with `Ŷ = 6Y`):
//!
//! | id      | identity                                                    |
//! |---------|-------------------------------------------------------------|
//! | `red-F` | `[Ŷ(x;y), F_z] = F_{[x,y,z]}`                               |
//! | `prop-F`| `[Ŷ(x;y), F_z] = 3[[F_x,F_y],F_z] - F_{[[x,y],z]}`          |
//! | `tc-F`  | `[[F_x,F_y],F_z] = F_{{x,y,z}}`, and the left side lies in the span of the family |
//! | `sym-5b`| `[F(x;y), F_z] = F_{{x,y,z}}` with `F(x;y) = [F_x,F_y]`     |
//! | `sym-5c`| `[F(x;y), F(z;w)] = F({x,y,z};w) + F(z;{x,y,w})`            |
//!
//! `sym-5b`/`sym-5c` are the left family; `-R`/`-M` suffixes name the others.
//!
//! Lie triple system axioms on `Γ` with the Loos bracket:
//! `lts-6a` `{x,y,z} = -{y,x,z}`, `lts-6b` the cyclic sum vanishes, `lts-6c`
//! `{x,y,{z,w,v}} = {{x,y,z},w,v} + {z,{x,y,w},v} + {z,w,{x,y,v}}`.

use serde::{Deserialize, Serialize};

use super::engine::{Args, Check, Identity};
use super::{IdentityId, IdentityVerdict, SuiteConfig, Value};
use crate::algebra::classify::{malcev_defect, product_jacobian};
use crate::algebra::{Algebra, BracketAlgebra};
use crate::brackets::{self, TrilinearTable};
use crate::linalg::{express_in_family, Membership, Scalar, SquareMatrix, Vector};
use crate::operators::{Family, TranslationTriple};

/// Scalar `c` with `[Y(x;y), F_z] = c F_{[x,y,z]}` for the normalized
/// Yamagutian `Y = Ŷ/6`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Calibration {
    Constant(Scalar),
    /// Every right side vanishes (and so does every left side).
    Indeterminate,
    /// No single constant fits all triples.
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyAgreement {
    pub family: Family,
    pub reductivity: bool,
    pub triple_closure: bool,
    pub agree: bool,
}

/// Whether reductivity and triple closure hold together, family by family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Equivalence {
    /// The proposition failed for these families, so the equivalence makes
    /// no claim.
    NotApplicable { failed: Vec<IdentityId> },
    Checked {
        families: Vec<FamilyAgreement>,
        /// `3{x,y,z} = [x,y,z] + [[x,y],z]` on all basis triples.
        bridge_holds: bool,
        holds: bool,
    },
}

impl Equivalence {
    pub fn holds(&self) -> Option<bool> {
        match self {
            Equivalence::NotApplicable { .. } => None,
            Equivalence::Checked { holds, .. } => Some(*holds),
        }
    }
}

fn triple<'v>(args: &'v Args) -> (&'v Vector, &'v Vector, &'v Vector) {
    (&args.vectors[0], &args.vectors[1], &args.vectors[2])
}

/// Builds the evaluator for an operator identity. Panics if `id` is not one.
pub(crate) fn operator_identity(t: &TranslationTriple, id: IdentityId) -> Identity<'_> {
    use IdentityId::*;
    let f = id.family().expect("operator identity");
    let g = t.params();
    let eval: super::engine::Evaluator<'_> = match id {
        RedL | RedR | RedM => Box::new(move |args| {
            let (x, y, z) = triple(args);
            let lhs = t.yhat(x, y).bracket(&t.op(f, z));
            let rhs = t.op(f, &brackets::yamaguti(g, x, y, z));
            Check::matrices(lhs, rhs)
        }),
        PropL | PropR | PropM => Box::new(move |args| {
            let (x, y, z) = triple(args);
            let fz = t.op(f, z);
            let lhs = t.yhat(x, y).bracket(&fz);
            let mut rhs = t
                .op(f, x)
                .bracket(&t.op(f, y))
                .bracket(&fz)
                .scale(&Scalar::integer(3));
            rhs.add_scaled(&Scalar::integer(-1), &t.op(f, &g.br(&g.br(x, y), z)));
            Check::matrices(lhs, rhs)
        }),
        TcL | TcR | TcM => {
            let family = t.family(f);
            let independent = express_in_family(&SquareMatrix::zeros(t.dim()), family).is_ok();
            Box::new(move |args| {
                let (x, y, z) = triple(args);
                let lhs = t.op(f, x).bracket(&t.op(f, y)).bracket(&t.op(f, z));
                let loos = brackets::loos(g, x, y, z);
                let mut check = Check::matrices(lhs, t.op(f, &loos));
                if check.holds && independent {
                    if let Value::Matrix(m) = &check.lhs {
                        check.holds = matches!(
                            express_in_family(m, family),
                            Ok(Membership::InSpan(c)) if c == loos
                        );
                    }
                }
                check
            })
        }
        Sym5b | Sym5bR | Sym5bM => Box::new(move |args| {
            let (x, y, z) = triple(args);
            let pair = t.op(f, x).bracket(&t.op(f, y));
            let lhs = pair.bracket(&t.op(f, z));
            let rhs = t.op(f, &brackets::loos(g, x, y, z));
            Check::matrices(lhs, rhs)
        }),
        Sym5c | Sym5cR | Sym5cM => {
            let p = g.dim();
            let cache: Vec<SquareMatrix> = (0..p * p)
                .map(|n| t.op(f, &g.basis(n / p)).bracket(&t.op(f, &g.basis(n % p))))
                .collect();
            Box::new(move |args| {
                let v = args.vectors;
                let (x, y, z, w) = (&v[0], &v[1], &v[2], &v[3]);
                let pair = |a: &Vector, b: &Vector| t.op(f, a).bracket(&t.op(f, b));
                let lhs = match args.indices {
                    Some(i) => cache[i[0] * p + i[1]].bracket(&cache[i[2] * p + i[3]]),
                    None => pair(x, y).bracket(&pair(z, w)),
                };
                let mut rhs = pair(&brackets::loos(g, x, y, z), w);
                rhs.add_scaled(&Scalar::ONE, &pair(z, &brackets::loos(g, x, y, w)));
                Check::matrices(lhs, rhs)
            })
        }
        _ => panic!("{id} is not an operator identity"),
    };
    Identity {
        id,
        dim: g.dim(),
        eval,
    }
}

/// Lie triple system axioms for the Loos bracket of `g`.
pub(crate) fn lts_identity(g: &BracketAlgebra, id: IdentityId) -> Identity<'_> {
    let table = TrilinearTable::loos(g);
    let eval: super::engine::Evaluator<'_> = match id {
        IdentityId::Lts6a => Box::new(move |args| {
            let (x, y, z) = triple(args);
            Check::vectors(table.eval(x, y, z), -table.eval(y, x, z))
        }),
        IdentityId::Lts6b => Box::new(move |args| {
            let (x, y, z) = triple(args);
            let sum = &(&table.eval(x, y, z) + &table.eval(y, z, x)) + &table.eval(z, x, y);
            Check::vectors(sum, Vector::zeros(table.dim()))
        }),
        IdentityId::Lts6c => Box::new(move |args| {
            let v = args.vectors;
            let (x, y, z, w, u) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
            let lhs = table.eval(x, y, &table.eval(z, w, u));
            let rhs = &(&table.eval(&table.eval(x, y, z), w, u)
                + &table.eval(z, &table.eval(x, y, w), u))
                + &table.eval(z, w, &table.eval(x, y, u));
            Check::vectors(lhs, rhs)
        }),
        _ => panic!("{id} is not a Lie triple system identity"),
    };
    Identity {
        id,
        dim: g.dim(),
        eval,
    }
}

/// Mal'tsev, Jacobi and anticommutativity identities of an algebra's product.
pub(crate) fn product_identity(a: &Algebra, id: IdentityId) -> Identity<'_> {
    let zero = Vector::zeros(a.dim());
    let eval: super::engine::Evaluator<'_> = match id {
        IdentityId::Malcev => Box::new(move |args| {
            let v = args.vectors;
            Check::vectors(malcev_defect(a, &v[0], &v[1], &v[2], &v[3]), zero.clone())
        }),
        IdentityId::Jacobi => Box::new(move |args| {
            let (x, y, z) = triple(args);
            Check::vectors(product_jacobian(a, x, y, z), zero.clone())
        }),
        IdentityId::Anticomm => Box::new(move |args| {
            let v = args.vectors;
            Check::vectors(a.mul(&v[0], &v[1]), -a.mul(&v[1], &v[0]))
        }),
        _ => panic!("{id} is not a product identity"),
    };
    Identity {
        id,
        dim: a.dim(),
        eval,
    }
}

fn run_operator_ids(
    t: &TranslationTriple,
    ids: &[IdentityId],
    config: &SuiteConfig,
) -> Vec<IdentityVerdict> {
    ids.iter()
        .map(|&id| operator_verdict(t, id, config))
        .collect()
}

pub(crate) fn operator_verdict(
    t: &TranslationTriple,
    id: IdentityId,
    config: &SuiteConfig,
) -> IdentityVerdict {
    let mut verdict = operator_identity(t, id).run(config);
    if matches!(id, IdentityId::RedL | IdentityId::RedR | IdentityId::RedM) {
        verdict.calibration = Some(calibrate_family(t, id.family().expect("family")));
    }
    verdict
}

/// `red-L`, `red-R`, `red-M` in the unnormalized form `[Ŷ(x;y), F_z] = F_{[x,y,z]}`,
/// each carrying the calibrated constant for the normalized Yamagutian.
pub fn check_reductivity(t: &TranslationTriple, config: &SuiteConfig) -> Vec<IdentityVerdict> {
    use IdentityId::*;
    run_operator_ids(t, &[RedL, RedR, RedM], config)
}

pub fn check_proposition(t: &TranslationTriple, config: &SuiteConfig) -> Vec<IdentityVerdict> {
    use IdentityId::*;
    run_operator_ids(t, &[PropL, PropR, PropM], config)
}

pub fn check_triple_closure(t: &TranslationTriple, config: &SuiteConfig) -> Vec<IdentityVerdict> {
    use IdentityId::*;
    run_operator_ids(t, &[TcL, TcR, TcM], config)
}

/// Both symmetric-space relations for all three families, left family first.
pub fn check_symmetric_relations(
    t: &TranslationTriple,
    config: &SuiteConfig,
) -> Vec<IdentityVerdict> {
    use IdentityId::*;
    run_operator_ids(t, &[Sym5b, Sym5c, Sym5bR, Sym5cR, Sym5bM, Sym5cM], config)
}

pub fn check_lts_axioms(g: &BracketAlgebra, config: &SuiteConfig) -> Vec<IdentityVerdict> {
    IdentityId::LTS
        .iter()
        .map(|&id| lts_identity(g, id).run(config))
        .collect()
}

pub fn check_malcev(a: &Algebra, config: &SuiteConfig) -> IdentityVerdict {
    product_identity(a, IdentityId::Malcev).run(config)
}

pub fn check_jacobi(a: &Algebra, config: &SuiteConfig) -> IdentityVerdict {
    product_identity(a, IdentityId::Jacobi).run(config)
}

pub fn check_anticommutativity(a: &Algebra, config: &SuiteConfig) -> IdentityVerdict {
    product_identity(a, IdentityId::Anticomm).run(config)
}

/// Finds the constant `c` with `[Y(x;y), F_z] = c F_{[x,y,z]}` over all basis
/// triples, where `Y = Ŷ/6`. Multilinearity makes the basis scan conclusive.
pub fn calibrate_family(t: &TranslationTriple, f: Family) -> Calibration {
    let g = t.params();
    let p = g.dim();
    let sixth = Scalar::new(1, 6);
    let mut constant: Option<Scalar> = None;
    for x in 0..p {
        for y in 0..p {
            let yx = t.yhat(&g.basis(x), &g.basis(y)).scale(&sixth);
            for z in 0..p {
                let lhs = yx.bracket(&t.op(f, &g.basis(z)));
                let bracket = brackets::yamaguti(g, &g.basis(x), &g.basis(y), &g.basis(z));
                let rhs = t.op(f, &bracket);
                let Some(pos) = rhs.entries().iter().position(|e| !e.is_zero()) else {
                    if lhs.is_zero() {
                        continue;
                    }
                    return Calibration::Inconsistent;
                };
                let c = &lhs.entries()[pos] / &rhs.entries()[pos];
                if lhs != rhs.scale(&c) {
                    return Calibration::Inconsistent;
                }
                match &constant {
                    Some(prev) if *prev != c => return Calibration::Inconsistent,
                    Some(_) => {}
                    None => constant = Some(c),
                }
            }
        }
    }
    match constant {
        Some(c) => Calibration::Constant(c),
        None => Calibration::Indeterminate,
    }
}

/// Calibration for the left family.
pub fn calibrate_reductivity_constant(t: &TranslationTriple) -> Calibration {
    calibrate_family(t, Family::Left)
}

/// `3{x,y,z} = [x,y,z] + [[x,y],z]` on every basis triple.
pub(crate) fn bridge_holds(g: &BracketAlgebra) -> bool {
    let p = g.dim();
    let three = Scalar::integer(3);
    (0..p * p * p).all(|n| {
        let (x, y, z) = (g.basis(n / (p * p)), g.basis(n / p % p), g.basis(n % p));
        let lhs = brackets::loos(g, &x, &y, &z).scale(&three);
        let rhs = &brackets::yamaguti(g, &x, &y, &z) + &g.br(&g.br(&x, &y), &z);
        lhs == rhs
    })
}

/// Derives the equivalence verdict from already computed `prop-*`, `red-*`
/// and `tc-*` verdicts. Returns `None` if any of the nine is missing.
pub(crate) fn equivalence_from(
    verdicts: &[IdentityVerdict],
    g: &BracketAlgebra,
) -> Option<Equivalence> {
    use IdentityId::*;
    let passed = |id: IdentityId| verdicts.iter().find(|v| v.id == id).map(|v| v.passed);
    let mut failed = Vec::new();
    for id in [PropL, PropR, PropM] {
        if !passed(id)? {
            failed.push(id);
        }
    }
    let mut families = Vec::new();
    for (f, red, tc) in [
        (Family::Left, RedL, TcL),
        (Family::Right, RedR, TcR),
        (Family::Middle, RedM, TcM),
    ] {
        let (reductivity, triple_closure) = (passed(red)?, passed(tc)?);
        families.push(FamilyAgreement {
            family: f,
            reductivity,
            triple_closure,
            agree: reductivity == triple_closure,
        });
    }
    if !failed.is_empty() {
        return Some(Equivalence::NotApplicable { failed });
    }
    let bridge_holds = bridge_holds(g);
    let holds = bridge_holds && families.iter().all(|a| a.agree);
    Some(Equivalence::Checked {
        families,
        bridge_holds,
        holds,
    })
}

/// Checks that reductivity and triple closure stand or fall together in each
/// family, provided the proposition holds in all three.
pub fn theorem1_equivalence(t: &TranslationTriple, config: &SuiteConfig) -> Equivalence {
    let mut verdicts = check_proposition(t, config);
    verdicts.extend(check_reductivity(t, config));
    verdicts.extend(check_triple_closure(t, config));
    equivalence_from(&verdicts, t.params()).expect("all nine verdicts computed")
}
