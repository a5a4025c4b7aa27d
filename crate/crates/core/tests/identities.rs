use malcev_core::algebra::catalog;
use malcev_core::operators::{multiplication_triple, zero_triple};
use malcev_core::verifier::*;
use malcev_core::{Family, Scalar, SquareMatrix, TranslationTriple, Vector};

fn basis_only() -> SuiteConfig {
    SuiteConfig {
        guard_samples: 0,
        ..SuiteConfig::exhaustive()
    }
}

fn octonion_model() -> TranslationTriple {
    multiplication_triple(&catalog::octonions(), &[1, 2, 3, 4, 5, 6, 7]).unwrap()
}

fn quaternion_model() -> TranslationTriple {
    multiplication_triple(&catalog::quaternions(), &[1, 2, 3]).unwrap()
}

fn sabotaged_model() -> TranslationTriple {
    multiplication_triple(&catalog::octonions_sabotaged(), &[1, 2, 3, 4, 5, 6, 7]).unwrap()
}

fn all_pass(verdicts: &[IdentityVerdict]) -> bool {
    verdicts.iter().all(|v| v.passed)
}

#[test]
fn octonion_operator_suites_pass_exhaustively() {
    let t = octonion_model();
    let config = SuiteConfig::exhaustive();
    for verdicts in [
        check_reductivity(&t, &config),
        check_proposition(&t, &config),
        check_triple_closure(&t, &config),
    ] {
        assert_eq!(verdicts.len(), 3);
        for v in &verdicts {
            assert!(v.passed, "{}", v.id);
            assert_eq!(v.instances_checked, 343);
            assert_eq!(v.guard_samples, DEFAULT_GUARD_SAMPLES);
        }
    }
    let sym = check_symmetric_relations(&t, &config);
    let counts: Vec<(IdentityId, usize)> =
        sym.iter().map(|v| (v.id, v.instances_checked)).collect();
    assert_eq!(
        counts,
        vec![
            (IdentityId::Sym5b, 343),
            (IdentityId::Sym5c, 2401),
            (IdentityId::Sym5bR, 343),
            (IdentityId::Sym5cR, 2401),
            (IdentityId::Sym5bM, 343),
            (IdentityId::Sym5cM, 2401),
        ]
    );
    assert!(all_pass(&sym));
}

#[test]
fn calibration_constants() {
    let sixth = Calibration::Constant(Scalar::new(1, 6));
    assert_eq!(calibrate_reductivity_constant(&octonion_model()), sixth);
    assert_eq!(calibrate_reductivity_constant(&quaternion_model()), sixth);
    let zero = zero_triple(8, catalog::octonion_gamma());
    assert_eq!(
        calibrate_reductivity_constant(&zero),
        Calibration::Indeterminate
    );
    assert_eq!(
        calibrate_reductivity_constant(&sabotaged_model()),
        Calibration::Inconsistent
    );
}

#[test]
fn zero_model_passes_vacuously() {
    let t = zero_triple(8, catalog::octonion_gamma());
    let config = basis_only();
    assert!(all_pass(&check_proposition(&t, &config)));
    assert!(all_pass(&check_reductivity(&t, &config)));
    assert!(all_pass(&check_triple_closure(&t, &config)));
    assert_eq!(theorem1_equivalence(&t, &config).holds(), Some(true));
}

#[test]
fn equivalence_on_models() {
    let config = basis_only();
    for t in [octonion_model(), quaternion_model()] {
        match theorem1_equivalence(&t, &config) {
            Equivalence::Checked {
                families,
                bridge_holds,
                holds,
            } => {
                assert!(holds && bridge_holds);
                assert!(families.iter().all(|a| a.reductivity && a.triple_closure));
            }
            other => panic!("{other:?}"),
        }
    }
    // the sabotage breaks the proposition, so the equivalence has no
    // hypothesis to check
    let eq = theorem1_equivalence(&sabotaged_model(), &config);
    assert_eq!(
        eq,
        Equivalence::NotApplicable {
            failed: vec![IdentityId::PropL, IdentityId::PropR, IdentityId::PropM]
        }
    );
}

#[test]
fn sabotaged_model_counterexamples() {
    let t = sabotaged_model();
    let config = basis_only();
    let tc = check_triple_closure(&t, &config);
    let failures: Vec<usize> = tc.iter().map(|v| v.failures).collect();
    assert_eq!(failures, vec![128, 128, 108]);
    let red = check_reductivity(&t, &config);
    let failures: Vec<usize> = red.iter().map(|v| v.failures).collect();
    assert_eq!(failures, vec![192, 192, 200]);

    let first = &tc[0].counterexamples[0];
    assert_eq!(first.inputs, Inputs::Basis(vec![0, 1, 0]));
    assert!(!first.guard);
    // [[L_e1, L_e2], L_e1] should be L_{4 e2}; the sabotage breaks it
    let Value::Matrix(lhs) = &first.lhs else {
        panic!("matrix identity")
    };
    let four_e2 = Vector::from_ints(&[0, 4, 0, 0, 0, 0, 0]);
    assert_ne!(lhs, &t.operator(Family::Left, &four_e2).unwrap());
    assert_eq!(tc[0].counterexamples.len(), MAX_COUNTEREXAMPLES);
}

#[test]
fn non_malcev_lts_witness() {
    let g = catalog::non_malcev();
    let verdicts = check_lts_axioms(&g, &basis_only());
    assert!(
        verdicts[0].passed,
        "antisymmetry holds for any anticommutative bracket"
    );
    let c = &verdicts[2];
    assert_eq!(c.id, IdentityId::Lts6c);
    assert!(!c.passed);
    assert_eq!(c.instances_checked, 243);
    assert_eq!(c.failures, 84);
    let w = &c.counterexamples[0];
    assert_eq!(w.inputs, Inputs::Basis(vec![0, 1, 0, 1, 0]));
    assert_eq!(w.lhs, Value::Vector(Vector::from_ints(&[1, 0, 0])));
    assert_eq!(w.rhs, Value::Vector(Vector::from_ints(&[2, 0, 0])));
    assert!(!check_malcev(g.as_algebra(), &basis_only()).passed);
}

#[test]
fn octonion_gamma_is_malcev_not_lie() {
    let g = catalog::octonion_gamma();
    let config = SuiteConfig::exhaustive();
    assert!(check_malcev(g.as_algebra(), &config).passed);
    assert!(check_anticommutativity(g.as_algebra(), &config).passed);
    let jacobi = check_jacobi(g.as_algebra(), &config);
    assert!(!jacobi.passed);
    assert!(all_pass(&check_lts_axioms(&g, &config)));
    assert!(check_jacobi(catalog::quaternion_gamma().as_algebra(), &config).passed);
}

#[test]
fn symmetric_relation_matches_triple_closure() {
    for t in [octonion_model(), sabotaged_model()] {
        for config in [SuiteConfig::exhaustive(), SuiteConfig::random(300, 5)] {
            let tc = check_triple_closure(&t, &config);
            let sym = check_symmetric_relations(&t, &config);
            assert!(same_outcome(&sym[0], &tc[0]));
            assert!(same_outcome(&sym[2], &tc[1]));
            assert!(same_outcome(&sym[4], &tc[2]));
        }
    }
}

#[test]
fn run_suite_selection_and_report() {
    let t = Target::Model(quaternion_model());
    let ids = t.select(&["lts", "red-L", "lts-6a"]).unwrap();
    assert_eq!(
        ids,
        vec![
            IdentityId::RedL,
            IdentityId::Lts6a,
            IdentityId::Lts6b,
            IdentityId::Lts6c
        ]
    );
    let report = run_suite(&t, &ids, &SuiteConfig::default()).unwrap();
    assert!(report.passed);
    assert_eq!(
        report.verdict(IdentityId::RedL).unwrap().calibration,
        Some(Calibration::Constant(Scalar::new(1, 6)))
    );
    let json = report.to_json();
    assert_eq!(IdentityReport::from_json(&json).unwrap(), report);

    let g = Target::Bracket(catalog::octonion_gamma());
    assert!(matches!(
        g.select(&["operators"]),
        Err(VerifyError::Inapplicable { .. })
    ));
    assert!(matches!(
        g.select(&["red-X"]),
        Err(VerifyError::UnknownSuite { .. })
    ));
    assert_eq!(
        g.select(&["all"]).unwrap(),
        vec![
            IdentityId::Lts6a,
            IdentityId::Lts6b,
            IdentityId::Lts6c,
            IdentityId::Malcev,
            IdentityId::Anticomm
        ]
    );
}

#[test]
fn failing_report_is_marked() {
    let t = Target::from_catalog(catalog::lookup("octonions-sabotaged").unwrap());
    let ids = t.select(&["tc-L", "sym-5b"]).unwrap();
    let report = run_suite(&t, &ids, &SuiteConfig::exhaustive()).unwrap();
    assert!(!report.passed);
    assert!(report.cross_checks.iter().all(|c| c.holds));
    let text = report.render_text();
    assert!(text.contains("FAIL  tc-L"), "{text}");
    assert!(text.contains("(e1, e2, e1): lhs"), "{text}");
}

#[test]
fn random_mode_is_reproducible() {
    let t = Target::from_catalog(catalog::lookup("octonions").unwrap());
    let ids = t.select(&["tc-M", "malcev"]).unwrap();
    let a = run_suite(&t, &ids, &SuiteConfig::random(200, 42)).unwrap();
    let b = run_suite(&t, &ids, &SuiteConfig::random(200, 42)).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    let c = run_suite(&t, &ids, &SuiteConfig::random(200, 43)).unwrap();
    assert_ne!(a.digest, c.digest);
}

#[test]
fn adjoint_model_of_a_lie_algebra() {
    // L_x = ad x on the imaginary quaternions, R = -L, M = 0
    let g = catalog::quaternion_gamma();
    let ad: Vec<SquareMatrix> = (0..3)
        .map(|i| {
            let columns: Vec<Vector> = (0..3)
                .map(|j| g.bracket(&g.basis(i), &g.basis(j)).unwrap())
                .collect();
            SquareMatrix::from_columns(&columns).unwrap()
        })
        .collect();
    let neg: Vec<SquareMatrix> = ad.iter().map(|m| -m).collect();
    let zeros = vec![SquareMatrix::zeros(3); 3];
    let t = TranslationTriple::from_families("ad", 3, g, ad, neg, zeros).unwrap();
    assert_eq!(
        theorem1_equivalence(&t, &SuiteConfig::exhaustive()).holds(),
        Some(true)
    );
    assert_eq!(
        calibrate_reductivity_constant(&t),
        Calibration::Constant(Scalar::new(1, 6))
    );
}
