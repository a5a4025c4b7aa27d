//! Built-in fixture algebras.
//!
//! The hypercomplex algebras come from repeated Cayley-Dickson doubling, so
//! the octonion basis is `e0 = 1, e1 = i, e2 = j, e3 = k, e4 = e, e5 = ie,
//! e6 = je, e7 = ke`.

use crate::linalg::{Scalar, Vector};

use super::{cayley_dickson, Algebra, BracketAlgebra};

/// A catalog item: either an ambient algebra or a bracket algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogItem {
    Algebra(Algebra),
    Bracket(BracketAlgebra),
}

impl CatalogItem {
    pub fn name(&self) -> &str {
        match self {
            CatalogItem::Algebra(a) => a.name(),
            CatalogItem::Bracket(b) => b.name(),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        match self {
            CatalogItem::Algebra(a) => a,
            CatalogItem::Bracket(b) => b.as_algebra(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CatalogItem::Algebra(_) => "algebra",
            CatalogItem::Bracket(_) => "bracket",
        }
    }
}

pub const NAMES: &[&str] = &[
    "scalars",
    "complexes",
    "quaternions",
    "octonions",
    "quaternion-gamma",
    "octonion-gamma",
    "non-malcev",
    "octonions-sabotaged",
];

pub fn lookup(name: &str) -> Option<CatalogItem> {
    Some(match name {
        "scalars" => CatalogItem::Algebra(scalars()),
        "complexes" => CatalogItem::Algebra(complexes()),
        "quaternions" => CatalogItem::Algebra(quaternions()),
        "octonions" => CatalogItem::Algebra(octonions()),
        "quaternion-gamma" => CatalogItem::Bracket(quaternion_gamma()),
        "octonion-gamma" => CatalogItem::Bracket(octonion_gamma()),
        "non-malcev" => CatalogItem::Bracket(non_malcev()),
        "octonions-sabotaged" => CatalogItem::Algebra(octonions_sabotaged()),
        _ => return None,
    })
}

pub fn all() -> Vec<CatalogItem> {
    NAMES.iter().filter_map(|n| lookup(n)).collect()
}

fn double(a: &Algebra, name: &str) -> Algebra {
    cayley_dickson(a, &Scalar::integer(-1))
        .expect("catalog algebras are unital")
        .with_name(name)
}

pub fn scalars() -> Algebra {
    Algebra::from_structure_constants("scalars", vec!["e0".into()], vec![vec![vec![Scalar::ONE]]])
        .expect("valid table")
}

pub fn complexes() -> Algebra {
    double(&scalars(), "complexes")
}

pub fn quaternions() -> Algebra {
    double(&complexes(), "quaternions")
}

pub fn octonions() -> Algebra {
    double(&quaternions(), "octonions")
}

/// Commutator algebra on the imaginary quaternions `{e1, e2, e3}`.
pub fn quaternion_gamma() -> BracketAlgebra {
    quaternions()
        .derived_commutator_algebra(Some(&[1, 2, 3]))
        .expect("imaginary quaternions close under commutators")
        .with_name("quaternion-gamma")
}

/// Commutator algebra on the imaginary octonions `{e1, ..., e7}`.
pub fn octonion_gamma() -> BracketAlgebra {
    octonions()
        .derived_commutator_algebra(Some(&[1, 2, 3, 4, 5, 6, 7]))
        .expect("imaginary octonions close under commutators")
        .with_name("octonion-gamma")
}

/// The octonions with the single structure constant `e1 e2 = e3` flipped to
/// `e1 e2 = -e3`. A negative control: the algebra stays unital but loses
/// alternativity.
pub fn octonions_sabotaged() -> Algebra {
    let o = octonions();
    let mut table = o.structure_constants();
    table[1][2][3] = -&table[1][2][3];
    Algebra::from_structure_constants("octonions-sabotaged", o.labels().to_vec(), table)
        .expect("valid table")
}

/// Anticommutative 3-dimensional algebra with `[e1,e2] = e3`, `[e2,e3] = e1`,
/// `[e1,e3] = e1`; it fails the Mal'tsev identity.
pub fn non_malcev() -> BracketAlgebra {
    let mut table = vec![vec![vec![Scalar::ZERO; 3]; 3]; 3];
    let mut set = |i: usize, j: usize, v: Vector| {
        table[j][i] = (-&v).into_coords();
        table[i][j] = v.into_coords();
    };
    set(0, 1, Vector::basis(3, 2));
    set(1, 2, Vector::basis(3, 0));
    set(0, 2, Vector::basis(3, 0));
    BracketAlgebra::from_structure_constants(
        "non-malcev",
        vec!["e1".into(), "e2".into(), "e3".into()],
        table,
    )
    .expect("antisymmetric by construction")
}
