//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcalc::difcalc::{Calculus, OneForm, VectorField};
use qcalc::funalg::{FunElement, FunKey, FunctionAlgebra};
use qcalc::qlie::{
    check_ad_covariance, fit_sudbery, l_matrices, rep_matrices_from_cg, structure_constants, QuantumLieAlgebra,
    SudberyFit, DIM,
};
use qcalc::qscalar::{int, s_pow};
use qcalc::repcat::hopf::{check_relations, Representation, GENERATORS};
use qcalc::repcat::{build_irrep, cg_system, flip, r_matrix};
use qcalc::verifier::dump::{self, check_golden, GoldenStatus};
use qcalc::verifier::oracle::{classical_cg, classical_structure_constants};
use qcalc::verifier::{
    default_golden_dir, render, run, Format, Status, VerifyConfig, BICOVARIANCE_SAMPLES, DEFAULT_SEED, RANDOM_TRIPLES,
};
use qcalc::{Matrix, ScalarMatrix};

type Outcome = Result<(), String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: qcalc::Error) -> String {
    e.to_string()
}

fn calc() -> &'static Calculus {
    static C: OnceLock<Calculus> = OnceLock::new();
    C.get_or_init(|| Calculus::new(4).expect("calculus at cutoff 4"))
}

fn fit() -> &'static SudberyFit {
    static F: OnceLock<SudberyFit> = OnceLock::new();
    F.get_or_init(|| fit_sudbery(&dump::default_sudbery_pairs()).expect("fit on {0,1,2}²"))
}

fn fundamentals() -> Vec<FunElement> {
    FunKey::all(1).map(FunElement::basis).collect()
}

fn algebra_relations() -> Outcome {
    for two_j in 0..=8 {
        check_relations(build_irrep(two_j).as_ref()).map_err(|r| format!("twoJ = {two_j}: {r}"))?;
    }
    Ok(())
}

fn cg_suite() -> Outcome {
    for mu in 0..=4 {
        for nu in 0..=4 {
            let cg = cg_system(mu, nu).map_err(err)?;
            cg.check().map_err(|e| format!("{mu} ⊗ {nu}: {e}"))?;
            for c in &cg.components {
                check((&c.project * &c.embed).is_identity(), || format!("{mu} ⊗ {nu}: p∘e, λ = {}", c.two_j))?;
            }
            for (lambda, expected) in classical_cg(mu, nu) {
                let got = cg.classical_embed(lambda).map_err(err)?;
                check(got == expected, || format!("{mu} ⊗ {nu}: classical oracle, λ = {lambda}"))?;
            }
        }
    }
    Ok(())
}

fn yang_baxter_and_rtt() -> Outcome {
    let r = r_matrix(1, 1).map_err(err)?;
    let i2: ScalarMatrix = Matrix::identity(2);
    let r12 = r.kron(&i2);
    let r23 = i2.kron(&r);
    let p23 = i2.kron(&flip(1, 1));
    let r13 = &(&p23 * &r12) * &p23;
    check(&(&r12 * &r13) * &r23 == &(&r23 * &r13) * &r12, || "Yang-Baxter".into())?;

    let alg = FunctionAlgebra::new(4);
    let plain = alg.rtt_check().map_err(err)?;
    check(plain.len() == 16 && plain.iter().all(|(_, ok)| *ok), || format!("RTT: {plain:?}"))?;
    let scaled = alg.rtt_check_with(&r.scale(&(s_pow(-2) - int(5)))).map_err(err)?;
    check(scaled == plain, || "RTT under rescaled R".into())
}

fn quantum_lie_algebra() -> Outcome {
    for mu in 0..=3 {
        check_ad_covariance(mu, &rep_matrices_from_cg(mu).map_err(err)?).map_err(|e| format!("cg: {e}"))?;
        check_ad_covariance(mu, l_matrices(mu).map_err(err)?.as_ref()).map_err(|e| format!("L: {e}"))?;
    }
    let c = structure_constants().map_err(err)?;
    let oracle = classical_structure_constants();
    for k in 0..DIM {
        for j in 0..DIM {
            for i in 0..DIM {
                let x = c[k][j][i].eval_classical().map_err(err)?;
                let y = c[k][i][j].eval_classical().map_err(err)?;
                check(x == -y, || format!("antisymmetry c[{k}][{j}][{i}]"))?;
                check(x == oracle[k * 9 + j * 3 + i], || format!("classical oracle c[{k}][{j}][{i}]"))?;
            }
        }
    }
    let qla = QuantumLieAlgebra::l_operator_realization(4).map_err(err)?;
    check(
        qla.normalization.len() == 4 && qla.normalization.values().all(|x| !num_traits::Zero::is_zero(x)),
        || "normalization scalars".into(),
    )
}

fn sudbery() -> Outcome {
    let fit = fit_sudbery(&dump::grid(&[1, 2])).map_err(err)?;
    check(fit.residual_is_zero().map_err(err)?, || "residual".into())?;
    check(fit.c_is_central(), || "C not central".into())?;
    for (mu, m) in fit.c.iter() {
        let v = build_irrep(mu);
        for g in GENERATORS {
            check(m.commutes_with(v.generator(g)), || format!("C vs {g} on twoJ = {mu}"))?;
        }
    }
    check(fit.classical_limit_is_trivial().map_err(err)?, || "classical limit".into())
}

fn function_algebra() -> Outcome {
    let alg = FunctionAlgebra::new(4);
    let fund = fundamentals();
    for x in &fund {
        for y in &fund {
            for z in &fund {
                let lhs = alg.product(&alg.product(x, y).map_err(err)?, z).map_err(err)?;
                let rhs = alg.product(x, &alg.product(y, z).map_err(err)?).map_err(err)?;
                check(lhs == rhs, || format!("({x})({y})({z})"))?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut draw = || {
        let j = rng.gen_range(0..=2u32);
        let d = j as usize + 1;
        FunElement::basis(FunKey::new(j, rng.gen_range(0..d), rng.gen_range(0..d)))
    };
    for _ in 0..RANDOM_TRIPLES {
        let (x, y, z) = (draw(), draw(), draw());
        let lhs = alg.product(&alg.product(&x, &y).map_err(err)?, &z).map_err(err)?;
        let rhs = alg.product(&x, &alg.product(&y, &z).map_err(err)?).map_err(err)?;
        check(lhs == rhs, || format!("seeded ({x})({y})({z})"))?;
    }
    let one = FunElement::unit();
    for j in 0..=2 {
        for k in FunKey::all(j) {
            let x = FunElement::basis(k);
            check(alg.product(&one, &x).map_err(err)? == x, || format!("1·{k}"))?;
            check(alg.product(&x, &one).map_err(err)? == x, || format!("{k}·1"))?;
            let d = x.coproduct();
            check(d.counit_left() == x && d.counit_right() == x, || format!("counit on {k}"))?;
        }
    }
    for x in &fund {
        for y in &fund {
            let xy = alg.product(x, y).map_err(err)?;
            check(xy.counit() == x.counit() * y.counit(), || format!("ε(({x})({y}))"))?;
            let d = alg.tensor_product(&x.coproduct(), &y.coproduct()).map_err(err)?;
            check(xy.coproduct() == d, || format!("Δ(({x})({y}))"))?;
        }
    }
    Ok(())
}

fn calculus() -> Outcome {
    let c = calc();
    for two_j in 0..=3 {
        for key in FunKey::all(two_j) {
            let a = FunElement::basis(key);
            for converse in [false, true] {
                let bad = c.check_left_right(&a, converse).map_err(err)?;
                check(bad.is_none(), || format!("field relation on {key}, converse = {converse}"))?;
            }
        }
    }
    let mut pairs: Vec<(FunElement, FunElement)> = Vec::new();
    for a in fundamentals() {
        for b in fundamentals() {
            pairs.push((a.clone(), b));
        }
    }
    for ((j1, r1, c1), (j2, r2, c2)) in BICOVARIANCE_SAMPLES {
        pairs.push((FunElement::basis(FunKey::new(j1, r1, c1)), FunElement::basis(FunKey::new(j2, r2, c2))));
    }
    for (a, b) in &pairs {
        let r = c.check_bicovariance(a, b).map_err(err)?;
        check(r.left && r.right, || format!("bicovariance a = {a}, b = {b}"))?;
    }
    let failed = c.check_completeness().map_err(err)?;
    check(failed.is_empty(), || format!("completeness fails for {failed:?}"))?;
    for i in 0..DIM {
        for j in 0..DIM {
            let p = c.pair(&OneForm::basis(i), &VectorField::basis(j)).map_err(err)?;
            let expected = if i == j { FunElement::unit() } else { FunElement::zero() };
            check(p == expected, || format!("<ω_{i}, t_{j}>"))?;
        }
    }
    let v = VectorField {
        coeffs: [FunElement::t(0, 1), FunElement::t(1, 1), FunElement::unit()],
    };
    for a in fundamentals() {
        let lhs = c.pair(&c.exterior_d(&a).map_err(err)?, &v).map_err(err)?;
        check(lhs == c.apply_field(&v, &a).map_err(err)?, || format!("<da, v> on {a}"))?;
    }
    Ok(())
}

fn leibniz() -> Outcome {
    let (c, f) = (calc(), fit());
    for a in fundamentals() {
        for b in fundamentals() {
            let r = c.leibniz_analysis(&a, &b, f).map_err(err)?;
            check(r.generalized_defect.is_zero(), || format!("generalized defect a = {a}, b = {b}"))?;
            check(r.classical_limits_vanish().map_err(err)?, || format!("s = 1 defects a = {a}, b = {b}"))?;
        }
    }
    let t = FunElement::t(0, 0);
    let r = c.leibniz_analysis(&t, &t, f).map_err(err)?;
    check(!r.classical_defect.is_zero(), || "classical defect vanishes for T11".into())
}

fn determinism() -> Outcome {
    let config = VerifyConfig {
        format: Format::Records,
        ..VerifyConfig::default()
    };
    let first = run(&config).map_err(err)?;
    let second = run(&config).map_err(err)?;
    let (a, b) = (render(&first, Format::Records), render(&second, Format::Records));
    check(a == b, || "two runs differ".into())?;
    let failing: Vec<_> = first.iter().filter(|r| r.status != Status::Pass).map(|r| r.check.clone()).collect();
    check(failing.is_empty(), || format!("verify-all: {failing:?}"))?;

    let dir = default_golden_dir();
    let artifacts = [
        ("structure-constants.json", dump::structure_constants_json().map_err(err)?),
        ("gamma.json", dump::gamma_json(calc()).map_err(err)?),
        ("d-table.json", dump::d_table_json(calc()).map_err(err)?),
    ];
    for (name, value) in artifacts {
        let status = check_golden(&dir, name, &dump::to_text(&value), false).map_err(err)?;
        check(status == GoldenStatus::Match, || format!("{name}: {status:?}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("algebra relations for twoJ ≤ 8", algebra_relations),
        ("Clebsch-Gordan invariants and classical oracle for μ, ν ≤ 4", cg_suite),
        ("Yang-Baxter, RTT and R rescaling", yang_baxter_and_rtt),
        ("ad-covariance, structure constants, realization scalars", quantum_lie_algebra),
        ("Sudbery fit on {1,2}²", sudbery),
        ("function algebra associativity, unit, counit, coproduct", function_algebra),
        ("calculus field relation, bicovariance, completeness, duality", calculus),
        ("generalized and classical Leibniz", leibniz),
        ("deterministic reports and stable golden files", determinism),
    ];
    let mut failures = 0;
    for (n, (name, body)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name}", n + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
