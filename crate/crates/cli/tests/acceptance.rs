//! Acceptance checks. Runs without the libtest harness so every criterion
//! prints one PASS or FAIL line.

use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use malcev_core::algebra::catalog;
use malcev_core::brackets::{bracket_via, loos_bracket, yamaguti_bracket, BracketForm};
use malcev_core::operators::{multiplication_triple, zero_triple};
use malcev_core::verifier::*;
use malcev_core::{BracketAlgebra, Family, Scalar, TranslationTriple, Vector};

type Error = Box<dyn std::error::Error>;
type Outcome = Result<String, Error>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(msg.into().into())
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

fn exhaustive_pass(verdicts: &[IdentityVerdict], counts: &[usize]) -> Result<(), Error> {
    ensure(verdicts.len() == counts.len(), "verdict count")?;
    for (v, &n) in verdicts.iter().zip(counts) {
        ensure(
            v.mode == SampleMode::Exhaustive,
            format!("{} not exhaustive", v.id),
        )?;
        ensure(
            v.instances_checked == n,
            format!(
                "{} checked {} instances, expected {n}",
                v.id, v.instances_checked
            ),
        )?;
        ensure(
            v.passed,
            format!("{} failed {} instances", v.id, v.failures),
        )?;
    }
    Ok(())
}

/// Octonion Γ index `k` is the octonion `e_{k+1}`.
fn g(k: usize) -> Vector {
    Vector::basis(7, k - 1)
}

fn lts_axioms() -> Outcome {
    let start = Instant::now();
    let verdicts = check_lts_axioms(&catalog::octonion_gamma(), &SuiteConfig::exhaustive());
    let elapsed = start.elapsed();
    exhaustive_pass(&verdicts, &[343, 343, 16807])?;
    ensure(
        elapsed < Duration::from_secs(60),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "343 + 343 + 16807 basis tuples in {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn triple_closure() -> Outcome {
    let t = octonion_model();
    exhaustive_pass(
        &check_triple_closure(&t, &SuiteConfig::exhaustive()),
        &[343; 3],
    )?;
    let lhs = t
        .family_pair(Family::Left, &g(1), &g(2))?
        .0
        .bracket(&t.operator(Family::Left, &g(1))?);
    let four_e2 = g(2).scale(&Scalar::integer(4));
    ensure(
        lhs == t.operator(Family::Left, &four_e2)?,
        "[[L_e1,L_e2],L_e1] != L_4e2",
    )?;
    ensure(
        loos_bracket(t.params(), &g(1), &g(2), &g(1))? == four_e2,
        "{e1,e2,e1} != 4e2",
    )?;
    Ok("tc-L/R/M over 343 triples; [[L_e1,L_e2],L_e1] = L_{4e2}".into())
}

fn reductivity() -> Outcome {
    exhaustive_pass(
        &check_reductivity(&octonion_model(), &SuiteConfig::exhaustive()),
        &[343; 3],
    )?;
    let sixth = Calibration::Constant(Scalar::new(1, 6));
    for t in [octonion_model(), quaternion_model()] {
        let c = calibrate_reductivity_constant(&t);
        ensure(c == sixth, format!("{} calibrates to {c:?}", t.name()))?;
    }
    Ok("red-L/R/M over 343 triples; constant 1/6 for octonions and quaternions".into())
}

fn proposition() -> Outcome {
    let config = SuiteConfig::exhaustive();
    exhaustive_pass(&check_proposition(&octonion_model(), &config), &[343; 3])?;
    exhaustive_pass(&check_proposition(&quaternion_model(), &config), &[27; 3])?;
    let zero = zero_triple(8, catalog::octonion_gamma());
    exhaustive_pass(&check_proposition(&zero, &config), &[343; 3])?;
    Ok("prop-L/R/M in the octonion, quaternion and zero models".into())
}

fn equivalence() -> Outcome {
    let config = SuiteConfig::exhaustive();
    let zero = zero_triple(8, catalog::octonion_gamma());
    for t in [octonion_model(), quaternion_model(), zero] {
        let eq = theorem1_equivalence(&t, &config);
        ensure(eq.holds() == Some(true), format!("{}: {eq:?}", t.name()))?;
    }
    // the sabotaged model breaks the hypothesis; red and tc still agree
    // per family, both failing
    let t = sabotaged_model();
    let eq = theorem1_equivalence(&t, &config);
    ensure(
        matches!(eq, Equivalence::NotApplicable { .. }),
        format!("sabotaged: {eq:?}"),
    )?;
    let red = check_reductivity(&t, &config);
    let tc = check_triple_closure(&t, &config);
    for (r, c) in red.iter().zip(&tc) {
        ensure(
            !r.passed && !c.passed,
            format!("{} / {} not both failing", r.id, c.id),
        )?;
    }
    Ok("agreement on octonion, quaternion, zero; sabotaged model fails both sides".into())
}

fn symmetric_relations() -> Outcome {
    let config = SuiteConfig::exhaustive();
    let t = octonion_model();
    exhaustive_pass(
        &check_symmetric_relations(&t, &config),
        &[343, 2401, 343, 2401, 343, 2401],
    )?;
    for t in [octonion_model(), sabotaged_model()] {
        let sym = check_symmetric_relations(&t, &config);
        let tc = check_triple_closure(&t, &config);
        ensure(
            same_outcome(&sym[0], &tc[0]),
            format!("{}: sym-5b and tc-L verdicts differ", t.name()),
        )?;
    }
    Ok("5b over 343 triples, 5c over 2401 quadruples per family; 5b verdict = tc-L verdict".into())
}

fn forms_agree(g: &BracketAlgebra) -> Result<(), Error> {
    let p = g.dim();
    for n in 0..p * p * p {
        let (x, y, z) = (g.basis(n / (p * p)), g.basis(n / p % p), g.basis(n % p));
        for forms in [&BracketForm::YAMAGUTI[..], &BracketForm::LOOS[..]] {
            let values: Vec<Vector> = forms
                .iter()
                .map(|&f| bracket_via(g, f, &x, &y, &z).map(|v| v.value))
                .collect::<Result<_, _>>()?;
            ensure(
                values.windows(2).all(|w| w[0] == w[1]),
                format!("{}: forms disagree on basis triple {n}", g.name()),
            )?;
        }
    }
    Ok(())
}

fn bracket_forms() -> Outcome {
    let mut names = Vec::new();
    for item in catalog::all() {
        let g = match &item {
            catalog::CatalogItem::Bracket(g) => g.clone(),
            catalog::CatalogItem::Algebra(a) => a.derived_commutator_algebra(None)?,
        };
        forms_agree(&g)?;
        names.push(item.name().to_string());
    }
    ensure(
        names.iter().any(|n| n == "non-malcev"),
        "non-malcev fixture missing",
    )?;
    Ok(format!("{} catalog algebras", names.len()))
}

fn malcev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_malcev"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn first_counterexample(out: &Output, id: &str) -> Result<serde_json::Value, Error> {
    let report: serde_json::Value = serde_json::from_slice(&out.stdout)?;
    let verdicts = report["verdicts"].as_array().ok_or("no verdicts")?;
    let v = verdicts
        .iter()
        .find(|v| v["id"] == id)
        .ok_or_else(|| format!("no {id} verdict"))?;
    Ok(v["counterexamples"][0]["inputs"].clone())
}

fn negative_control() -> Outcome {
    let out = malcev(&[
        "verify",
        "--algebra",
        "non-malcev",
        "--suite",
        "lts-6c",
        "--format",
        "json",
    ]);
    ensure(
        out.status.code() == Some(1),
        format!("non-malcev exit {:?}", out.status.code()),
    )?;
    let witness = first_counterexample(&out, "lts-6c")?;
    ensure(
        witness["basis"] == serde_json::json!([0, 1, 0, 1, 0]),
        format!("witness {witness}"),
    )?;

    let out = malcev(&[
        "verify",
        "--algebra",
        "octonions-sabotaged",
        "--suite",
        "red-L,red-R,red-M,tc-L,tc-R,tc-M",
        "--format",
        "json",
    ]);
    ensure(
        out.status.code() == Some(1),
        format!("sabotaged exit {:?}", out.status.code()),
    )?;
    let cx = first_counterexample(&out, "tc-L")?;
    ensure(
        cx["basis"] == serde_json::json!([0, 1, 0]),
        format!("counterexample {cx}"),
    )?;
    Ok("non-malcev lts-6c witness (e1,e2,e1,e2,e1); sabotaged tc-L at (e1,e2,e1); exit 1".into())
}

fn cross_layer() -> Outcome {
    let t = octonion_model();
    let gamma = t.params();
    let o = t.ambient().ok_or("no ambient")?;
    let embed = |v: &Vector| t.embed(v).expect("octonion model embeds");
    for n in 0..343 {
        let (x, y, z) = (g(n / 49 + 1), g(n / 7 % 7 + 1), g(n % 7 + 1));
        let lhs = t.yamagutian_unnormalized(&x, &y)?.apply(&embed(&z))?;
        ensure(
            lhs == embed(&yamaguti_bracket(gamma, &x, &y, &z)?),
            format!("Ŷ at triple {n}"),
        )?;
        let jac = embed(&gamma.jacobian(&x, &y, &z)?);
        let assoc = o.associator(&embed(&x), &embed(&y), &embed(&z))?;
        ensure(
            jac == assoc.scale(&Scalar::integer(6)),
            format!("J at triple {n}"),
        )?;
    }
    let e7 = g(7);
    let y = t
        .yamagutian_unnormalized(&g(1), &g(2))?
        .apply(&embed(&g(4)))?;
    ensure(
        y == embed(&e7.scale(&Scalar::integer(-4))),
        "Ŷ(e1;e2)e4 != -4e7",
    )?;
    ensure(
        gamma.jacobian(&g(1), &g(2), &g(4))? == e7.scale(&Scalar::integer(12)),
        "J(e1,e2,e4) != 12e7",
    )?;
    let assoc = o.associator(&embed(&g(1)), &embed(&g(2)), &embed(&g(4)))?;
    ensure(
        assoc == embed(&e7.scale(&Scalar::integer(2))),
        "(e1,e2,e4) != 2e7",
    )?;
    Ok("343 triples; Ŷ(e1;e2)e4 = -4e7, J(e1,e2,e4) = 12e7 = 6 * 2e7".into())
}

fn determinism() -> Outcome {
    let args = [
        "verify",
        "--algebra",
        "octonions",
        "--suite",
        "all",
        "--mode",
        "random",
        "--samples",
        "1000",
        "--seed",
        "42",
        "--format",
        "json",
    ];
    let a = malcev(&args);
    let b = malcev(&args);
    ensure(
        a.status.code() == Some(0),
        format!("exit {:?}", a.status.code()),
    )?;
    ensure(
        !a.stdout.is_empty() && a.stdout == b.stdout,
        "reports differ",
    )?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("LTS axioms on the octonion bracket algebra", lts_axioms),
        ("triple closure in the octonion model", triple_closure),
        ("reductivity and calibration", reductivity),
        (
            "proposition in octonion, quaternion and zero models",
            proposition,
        ),
        ("reductivity / triple closure equivalence", equivalence),
        ("symmetric-space relations", symmetric_relations),
        ("bracket-form consistency", bracket_forms),
        ("negative controls", negative_control),
        ("cross-layer consistency", cross_layer),
        ("determinism of structured reports", determinism),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", n + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
