use std::sync::OnceLock;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::dump::{self, check_golden, default_sudbery_pairs, grid, GoldenStatus};
use super::oracle::{classical_cg, classical_structure_constants};
use super::{ensure, Recorder, Suite, Verdict, VerifyConfig};
use crate::difcalc::{Calculus, OneForm, VectorField};
use crate::error::{Error, Result};
use crate::funalg::{FunElement, FunKey, FunctionAlgebra};
use crate::matrix::Matrix;
use crate::qlie::lop::{quantum_trace, tensor_action};
use crate::qlie::{
    check_ad_covariance, fit_sudbery, l_matrices, rep_matrices_from_cg, structure_constants, QuantumLieAlgebra,
    SudberyFit, ADJOINT, DIM,
};
use crate::qscalar::{int, s_pow};
use crate::repcat::hopf::{check_relations, Representation, GENERATORS};
use crate::repcat::module::is_intertwiner;
use crate::repcat::{braiding, build_irrep, cg_system, flip, r_matrix, tensor};
use crate::{Rational, ScalarMatrix};

/// Pairs `(a, b)` with both factors of label 2 or mixed labels, used for the
/// bicovariance of `a·db` beyond the fundamental pairs.
pub const BICOVARIANCE_SAMPLES: [((u32, usize, usize), (u32, usize, usize)); 5] = [
    ((2, 0, 0), (2, 1, 1)),
    ((2, 0, 2), (2, 2, 0)),
    ((2, 1, 0), (2, 0, 1)),
    ((1, 0, 1), (2, 2, 1)),
    ((2, 2, 2), (1, 1, 0)),
];

/// Pairs for `Δ(ab) = Δ(a)Δ(b)` beyond the fundamental ones.
const COPRODUCT_SAMPLES: [((u32, usize, usize), (u32, usize, usize)); 3] =
    [((1, 0, 1), (2, 1, 2)), ((2, 0, 0), (2, 2, 2)), ((2, 1, 0), (1, 1, 1))];

pub const RANDOM_TRIPLES: usize = 50;

pub(crate) struct Context<'a> {
    config: &'a VerifyConfig,
    calculus: OnceLock<Result<Calculus>>,
    fit: OnceLock<Result<SudberyFit>>,
}

impl<'a> Context<'a> {
    pub(crate) fn new(config: &'a VerifyConfig) -> Self {
        Self {
            config,
            calculus: OnceLock::new(),
            fit: OnceLock::new(),
        }
    }

    fn max(&self) -> u32 {
        self.config.max_two_j
    }

    fn calculus(&self) -> Result<&Calculus> {
        self.calculus
            .get_or_init(|| Calculus::new(self.max()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn fit(&self) -> Result<&SudberyFit> {
        self.fit
            .get_or_init(|| fit_sudbery(&default_sudbery_pairs()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn golden(&self, name: &str, value: Result<serde_json::Value>) -> Result<Verdict> {
        let text = dump::to_text(&value?);
        let dir = &self.config.golden_dir;
        Ok(match check_golden(dir, name, &text, self.config.regen_golden)? {
            GoldenStatus::Match => Ok(None),
            GoldenStatus::Regenerated => Ok(Some(format!("regenerated {}", dir.join(name).display()))),
            GoldenStatus::Missing => Err(format!(
                "no pinned file {}; run with --regen-golden",
                dir.join(name).display()
            )),
            GoldenStatus::Differs { line } => Err(format!("{name} differs from the pinned file at line {line}")),
        })
    }
}

pub(crate) fn run_suite(ctx: &Context, rec: &mut Recorder) {
    match rec.suite {
        Suite::Algebra => algebra(ctx, rec),
        Suite::Calculus => calculus(ctx, rec),
        Suite::Cg => cg(ctx, rec),
        Suite::ClassicalLimit => classical_limit(ctx, rec),
        Suite::Leibniz => leibniz(ctx, rec),
        Suite::Qlie => qlie(ctx, rec),
        Suite::Rmatrix => rmatrix(ctx, rec),
        Suite::Rtt => rtt(ctx, rec),
        Suite::Sudbery => sudbery(ctx, rec),
    }
}

fn fundamentals() -> Vec<FunElement> {
    FunKey::all(1).map(FunElement::basis).collect()
}

fn key((j, r, c): (u32, usize, usize)) -> FunElement {
    FunElement::basis(FunKey::new(j, r, c))
}

fn classical(m: &ScalarMatrix) -> Result<Matrix<Rational>> {
    m.try_map(|x| x.eval_classical())
}

fn algebra(ctx: &Context, rec: &mut Recorder) {
    for two_j in 0..=ctx.max().max(8) {
        rec.check(format!("relations twoJ={two_j}"), || {
            Ok(check_relations(build_irrep(two_j).as_ref()).map(|()| None))
        });
    }
}

fn cg(ctx: &Context, rec: &mut Recorder) {
    let max = ctx.max();
    for mu in 0..=max {
        for nu in 0..=max {
            rec.check(format!("invariants {mu}x{nu}"), || {
                let cg = cg_system(mu, nu)?;
                Ok(match cg.check() {
                    Ok(()) => Ok(None),
                    Err(e) => Err(e.to_string()),
                })
            });
            rec.check(format!("classical oracle {mu}x{nu}"), || {
                let cg = cg_system(mu, nu)?;
                let oracle = classical_cg(mu, nu);
                if cg.labels() != oracle.iter().map(|(l, _)| *l).collect::<Vec<_>>() {
                    return Ok(Err(format!("labels {:?}", cg.labels())));
                }
                for (lambda, expected) in oracle {
                    if cg.classical_embed(lambda)? != expected {
                        return Ok(Err(format!("embedding of twoJ = {lambda}")));
                    }
                }
                Ok(Ok(None))
            });
        }
    }
}

fn id(n: u32) -> ScalarMatrix {
    Matrix::identity(n as usize + 1)
}

fn rmatrix(ctx: &Context, rec: &mut Recorder) {
    rec.check("yang-baxter r(1,1)", || {
        let r = r_matrix(1, 1)?;
        let i2 = id(1);
        let r12 = r.kron(&i2);
        let r23 = i2.kron(&r);
        let p23 = i2.kron(&flip(1, 1));
        let r13 = &(&p23 * &r12) * &p23;
        let lhs = &(&r12 * &r13) * &r23;
        let rhs = &(&r23 * &r13) * &r12;
        Ok(ensure(lhs == rhs, || "R12 R13 R23 ≠ R23 R13 R12".into()))
    });
    for (a, b, c) in [(1, 1, 2), (1, 2, 1), (2, 1, 1), (1, 2, 2)] {
        rec.check(format!("braid relation {a},{b},{c}"), || {
            let r = |x, y| braiding(x, y).map(|m| m.as_ref().clone());
            let lhs = &(&r(b, c)?.kron(&id(a)) * &id(b).kron(&r(a, c)?)) * &r(a, b)?.kron(&id(c));
            let rhs = &(&id(c).kron(&r(a, b)?) * &r(a, c)?.kron(&id(b))) * &id(a).kron(&r(b, c)?);
            Ok(ensure(lhs == rhs, || "braid relation fails".into()))
        });
    }
    let max = ctx.max().min(3);
    for mu in 1..=max {
        for nu in 1..=max {
            rec.check(format!("braiding intertwines {mu}x{nu}"), || {
                let (v, w) = (build_irrep(mu), build_irrep(nu));
                let src = tensor(v.as_ref(), w.as_ref());
                let dst = tensor(w.as_ref(), v.as_ref());
                Ok(ensure(is_intertwiner(braiding(mu, nu)?.as_ref(), &src, &dst), || {
                    "Ř is not a module map".into()
                }))
            });
        }
    }
}

fn rtt(ctx: &Context, rec: &mut Recorder) {
    let alg = FunctionAlgebra::new(ctx.max());
    let fund = fundamentals();

    rec.check("associativity fundamental triples", || {
        let mut count = 0;
        for x in &fund {
            for y in &fund {
                let xy = alg.product(x, y)?;
                for z in &fund {
                    if alg.product(&xy, z)? != alg.product(x, &alg.product(y, z)?)? {
                        return Ok(Err(format!("({x}) ({y}) ({z})")));
                    }
                    count += 1;
                }
            }
        }
        Ok(Ok(Some(format!("{count} triples"))))
    });

    rec.check(format!("associativity seeded triples seed={}", ctx.config.seed), || {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.config.seed);
        let mut draw = || {
            let j = rng.gen_range(0..=2u32);
            let d = j as usize + 1;
            FunElement::basis(FunKey::new(j, rng.gen_range(0..d), rng.gen_range(0..d)))
        };
        for _ in 0..RANDOM_TRIPLES {
            let (x, y, z) = (draw(), draw(), draw());
            let lhs = alg.product(&alg.product(&x, &y)?, &z)?;
            let rhs = alg.product(&x, &alg.product(&y, &z)?)?;
            if lhs != rhs {
                return Ok(Err(format!("({x}) ({y}) ({z})")));
            }
        }
        Ok(Ok(Some(format!("{RANDOM_TRIPLES} triples"))))
    });

    rec.check("unit", || {
        let one = FunElement::unit();
        for j in 0..=2 {
            for k in FunKey::all(j) {
                let x = FunElement::basis(k);
                if alg.product(&one, &x)? != x || alg.product(&x, &one)? != x {
                    return Ok(Err(format!("{k}")));
                }
            }
        }
        Ok(Ok(None))
    });

    rec.check("counit", || {
        for j in 0..=ctx.max() {
            for k in FunKey::all(j) {
                let x = FunElement::basis(k);
                let d = x.coproduct();
                if d.counit_left() != x || d.counit_right() != x {
                    return Ok(Err(format!("(ε ⊗ 1)Δ or (1 ⊗ ε)Δ on {k}")));
                }
            }
        }
        for x in &fund {
            for y in &fund {
                if alg.product(x, y)?.counit() != x.counit() * y.counit() {
                    return Ok(Err(format!("ε(({x})({y}))")));
                }
            }
        }
        Ok(Ok(None))
    });

    rec.check("coproduct is multiplicative", || {
        let mut pairs: Vec<(FunElement, FunElement)> = Vec::new();
        for x in &fund {
            for y in &fund {
                pairs.push((x.clone(), y.clone()));
            }
        }
        pairs.extend(COPRODUCT_SAMPLES.iter().map(|&(a, b)| (key(a), key(b))));
        for (x, y) in &pairs {
            let lhs = alg.product(x, y)?.coproduct();
            let rhs = alg.tensor_product(&x.coproduct(), &y.coproduct())?;
            if lhs != rhs {
                return Ok(Err(format!("Δ(({x})({y}))")));
            }
        }
        Ok(Ok(Some(format!("{} pairs", pairs.len()))))
    });

    rec.check("rtt relations", || {
        let failed: Vec<String> = alg
            .rtt_check()?
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|((a, b, c, d), _)| format!("T{a}{b} T{c}{d}"))
            .collect();
        Ok(ensure(failed.is_empty(), || failed.join(", ")).map(|_| Some("16 relations".into())))
    });

    rec.check("rtt relations under rescaled R", || {
        let scale = s_pow(2) + int(3);
        let ok = alg.rtt_check_with(&r_matrix(1, 1)?.scale(&scale))?.iter().all(|(_, ok)| *ok);
        Ok(ensure(ok, || "rescaling R changed the outcome".into()))
    });

    for two_j in 1..=2 {
        rec.check(format!("functional matrix inverse twoJ={two_j}"), || {
            let x = alg.invert_fun_matrix(two_j)?;
            let counits: Vec<Vec<_>> = x.iter().map(|row| row.iter().map(FunElement::counit).collect()).collect();
            let ok = counits
                .iter()
                .enumerate()
                .all(|(a, row)| row.iter().enumerate().all(|(b, e)| e.is_one() == (a == b) && (a == b || e.is_zero())));
            Ok(ensure(ok, || "ε(X) is not the identity".into()))
        });
    }
}

fn qlie(ctx: &Context, rec: &mut Recorder) {
    for mu in 0..=3 {
        rec.check(format!("ad-covariance cg twoJ={mu}"), || {
            Ok(check_ad_covariance(mu, &rep_matrices_from_cg(mu)?).map(|()| None))
        });
        rec.check(format!("ad-covariance realization twoJ={mu}"), || {
            Ok(check_ad_covariance(mu, l_matrices(mu)?.as_ref()).map(|()| None))
        });
    }

    rec.check("structure constants antisymmetric at s=1", || {
        let c = structure_constants()?;
        for k in 0..DIM {
            for j in 0..DIM {
                for i in 0..DIM {
                    if c[k][j][i].eval_classical()? != -c[k][i][j].eval_classical()? {
                        return Ok(Err(format!("c[{k}][{j}][{i}]")));
                    }
                }
            }
        }
        Ok(Ok(None))
    });

    rec.check("structure constants classical oracle", || {
        let c = structure_constants()?;
        let oracle = classical_structure_constants();
        for (n, expected) in oracle.iter().enumerate() {
            let (k, j, i) = (n / 9, (n / 3) % 3, n % 3);
            let got = c[k][j][i].eval_classical()?;
            if got != *expected {
                return Ok(Err(format!("c[{k}][{j}][{i}] = {got} at s = 1, oracle {expected}")));
            }
        }
        Ok(Ok(None))
    });

    rec.check("structure constants match adjoint matrices", || {
        let c = structure_constants()?;
        let t = rep_matrices_from_cg(ADJOINT)?;
        for k in 0..DIM {
            for j in 0..DIM {
                for i in 0..DIM {
                    if c[k][j][i] != t[i][(k, j)] {
                        return Ok(Err(format!("c[{k}][{j}][{i}]")));
                    }
                }
            }
        }
        Ok(Ok(None))
    });

    rec.check("realization proportional to cg", || {
        let qla = QuantumLieAlgebra::l_operator_realization(ctx.max())?;
        let detail = qla
            .normalization
            .iter()
            .map(|(mu, x)| format!("twoJ={mu}: {x}"))
            .collect::<Vec<_>>()
            .join("; ");
        Ok(ensure(qla.normalization.values().all(|x| !x.is_zero()), || detail.clone()).map(|_| Some(detail)))
    });

    for mu in 0..=2 {
        rec.check(format!("quantum trace central twoJ={mu}"), || {
            let tr = quantum_trace(mu)?;
            let v = build_irrep(mu);
            Ok(ensure(GENERATORS.iter().all(|&g| tr.commutes_with(v.generator(g))), || {
                "trace does not commute".into()
            }))
        });
    }

    for (mu, nu) in [(1, 1), (1, 2), (2, 1)] {
        rec.check(format!("tensor action paths agree {mu}x{nu}"), || {
            for i in 0..DIM {
                match tensor_action(mu, nu, i) {
                    Ok(_) => {}
                    Err(e @ Error::PathDisagreement(_)) => return Ok(Err(e.to_string())),
                    Err(e) => return Err(e),
                }
            }
            Ok(Ok(None))
        });
    }

    rec.check("golden structure-constants", || {
        ctx.golden("structure-constants.json", dump::structure_constants_json())
    });
}

fn sudbery(_ctx: &Context, rec: &mut Recorder) {
    for (name, labels) in [("{1,2}^2", &[1u32, 2][..]), ("{0,1,2}^2", &[0, 1, 2][..])] {
        let fit = fit_sudbery(&grid(labels));
        let fit = fit.as_ref().map_err(Clone::clone);
        rec.check(format!("fit {name} solvable"), || {
            let f = fit.clone()?;
            Ok(Ok(Some(format!("{} unknowns, {} equations", f.unknowns, f.equations))))
        });
        rec.check(format!("fit {name} residual"), || {
            let f = fit.clone()?;
            Ok(ensure(f.residual_is_zero()?, || "Δ(t) − C ⊗ t − t ⊗ f ≠ 0".into()))
        });
        rec.check(format!("fit {name} C central"), || {
            let f = fit.clone()?;
            let detail = f.c.scalars().map(|m| {
                m.iter().map(|(mu, x)| format!("C on twoJ={mu}: {x}")).collect::<Vec<_>>().join("; ")
            });
            Ok(ensure(f.c_is_central(), || "π(C) is not central".into()).map(|_| detail))
        });
        rec.check(format!("fit {name} classical limit"), || {
            let f = fit.clone()?;
            Ok(ensure(f.classical_limit_is_trivial()?, || "C ↛ 1 or f ↛ δ at s = 1".into()))
        });
    }
    rec.check("fit {0,1,2}^2 counit", || {
        let f = fit_sudbery(&grid(&[0, 1, 2]))?;
        Ok(ensure(f.counit_consistent()?, || "ε(f_j^i) ≠ δ_j^i".into()))
    });
}

fn calculus(ctx: &Context, rec: &mut Recorder) {
    for two_j in 0..=3 {
        for (direction, converse) in [("left-from-right", false), ("right-from-left", true)] {
            rec.check(format!("field relation {direction} twoJ={two_j}"), || {
                let calc = ctx.calculus()?;
                for key in FunKey::all(two_j) {
                    if let Some(i) = calc.check_left_right(&FunElement::basis(key), converse)? {
                        return Ok(Err(format!("{key}, i = {i}")));
                    }
                }
                Ok(Ok(None))
            });
        }
    }

    rec.check("bicovariance fundamental pairs", || {
        let calc = ctx.calculus()?;
        for a in fundamentals() {
            for b in fundamentals() {
                let r = calc.check_bicovariance(&a, &b)?;
                if !(r.left && r.right) {
                    return Ok(Err(format!("a = {a}, b = {b}, left {}, right {}", r.left, r.right)));
                }
            }
        }
        Ok(Ok(Some("16 pairs".into())))
    });

    rec.check("bicovariance twoJ=2 samples", || {
        let calc = ctx.calculus()?;
        for (x, y) in BICOVARIANCE_SAMPLES {
            let (a, b) = (key(x), key(y));
            let r = calc.check_bicovariance(&a, &b)?;
            if !(r.left && r.right) {
                return Ok(Err(format!("a = {a}, b = {b}, left {}, right {}", r.left, r.right)));
            }
        }
        Ok(Ok(Some(format!("{} pairs", BICOVARIANCE_SAMPLES.len()))))
    });

    rec.check("coaction compatibility", || {
        let calc = ctx.calculus()?;
        for i in 0..DIM {
            for b in fundamentals() {
                let mut omega = OneForm::zero();
                omega.coeffs[i] = b.clone();
                if !calc.check_coaction_compatibility(&omega)? {
                    return Ok(Err(format!("{omega}")));
                }
            }
        }
        Ok(Ok(None))
    });

    for i in 0..DIM {
        rec.check(format!("completeness omega{i}"), || {
            let failed = ctx.calculus()?.check_completeness()?;
            Ok(ensure(!failed.contains(&i), || format!("reconstruction of ω^L_{i}")))
        });
    }

    rec.check("duality invariant basis", || {
        let calc = ctx.calculus()?;
        for i in 0..DIM {
            for j in 0..DIM {
                let p = calc.pair(&OneForm::basis(i), &VectorField::basis(j))?;
                let expected = if i == j { FunElement::unit() } else { FunElement::zero() };
                if p != expected {
                    return Ok(Err(format!("<ω_{i}, t_{j}> = {p}")));
                }
            }
        }
        Ok(Ok(None))
    });

    rec.check("duality exterior derivative", || {
        let calc = ctx.calculus()?;
        let fields = [
            VectorField {
                coeffs: [FunElement::t(0, 1), FunElement::zero(), FunElement::t(1, 0)],
            },
            VectorField {
                coeffs: [FunElement::unit(), FunElement::t(1, 1), FunElement::unit()],
            },
        ];
        for v in &fields {
            for a in fundamentals() {
                if calc.pair(&calc.exterior_d(&a)?, v)? != calc.apply_field(v, &a)? {
                    return Ok(Err(format!("a = {a}")));
                }
            }
        }
        Ok(Ok(None))
    });

    rec.check("right-invariant expansion of d", || {
        let calc = ctx.calculus()?;
        for two_j in 1..=2 {
            for key in FunKey::all(two_j) {
                let a = FunElement::basis(key);
                if calc.exterior_d(&a)? != calc.exterior_d_right(&a)? {
                    return Ok(Err(format!("{key}")));
                }
            }
        }
        Ok(Ok(None))
    });

    rec.check("gamma symmetric", || {
        let g = ctx.calculus()?.gamma_metric()?;
        Ok(ensure(g == g.transpose(), || "γ ≠ γᵀ".into()))
    });

    rec.check("golden gamma", || ctx.golden("gamma.json", dump::gamma_json(ctx.calculus()?)));
    rec.check("golden d-table", || ctx.golden("d-table.json", dump::d_table_json(ctx.calculus()?)));
}

fn leibniz(ctx: &Context, rec: &mut Recorder) {
    rec.check("generalized rule fundamental pairs", || {
        let (calc, fit) = (ctx.calculus()?, ctx.fit()?);
        for a in fundamentals() {
            for b in fundamentals() {
                let r = calc.leibniz_analysis(&a, &b, fit)?;
                if !r.generalized_defect.is_zero() {
                    return Ok(Err(format!("a = {a}, b = {b}: {}", r.generalized_defect)));
                }
            }
        }
        Ok(Ok(Some("16 pairs".into())))
    });

    rec.check("classical rule fails for T11 T11", || {
        let (calc, fit) = (ctx.calculus()?, ctx.fit()?);
        let t = FunElement::t(0, 0);
        let r = calc.leibniz_analysis(&t, &t, fit)?;
        Ok(ensure(!r.classical_defect.is_zero(), || "classical defect vanishes".into()))
    });

    rec.check("defects vanish at s=1", || {
        let (calc, fit) = (ctx.calculus()?, ctx.fit()?);
        for a in fundamentals() {
            for b in fundamentals() {
                if !calc.leibniz_analysis(&a, &b, fit)?.classical_limits_vanish()? {
                    return Ok(Err(format!("a = {a}, b = {b}")));
                }
            }
        }
        Ok(Ok(None))
    });

    rec.check("right multiplication by unit", || {
        let (calc, fit) = (ctx.calculus()?, ctx.fit()?);
        for i in 0..DIM {
            let w = calc.right_multiply_form(&OneForm::basis(i), &FunElement::unit(), fit)?;
            if w != OneForm::basis(i) {
                return Ok(Err(format!("ω_{i} · 1 = {w}")));
            }
        }
        Ok(Ok(None))
    });

    rec.check("right multiplication commutes at s=1", || {
        let (calc, fit) = (ctx.calculus()?, ctx.fit()?);
        for a in fundamentals() {
            for i in 0..DIM {
                let wa = calc.right_multiply_form(&OneForm::basis(i), &a, fit)?;
                let aw = calc.left_multiply(&a, &OneForm::basis(i))?;
                if !wa.sub(&aw).vanishes_classically()? {
                    return Ok(Err(format!("ω_{i}, a = {a}")));
                }
            }
        }
        Ok(Ok(None))
    });

    rec.check("bimodule defect", || {
        // (ω·a)·b − ω·(ab) is nonzero at generic s, since C is not grouplike,
        // and vanishes at s = 1.
        let (calc, fit) = (ctx.calculus()?, ctx.fit()?);
        let (a, b) = (FunElement::t(0, 0), FunElement::t(1, 1));
        let w = OneForm::basis(1);
        let lhs = calc.right_multiply_form(&calc.right_multiply_form(&w, &a, fit)?, &b, fit)?;
        let rhs = calc.right_multiply_form(&w, &calc.alg.product(&a, &b)?, fit)?;
        let defect = lhs.sub(&rhs);
        Ok(ensure(defect.vanishes_classically()?, || format!("{defect}"))
            .map(|_| Some(format!("generic-s defect nonzero: {}", !defect.is_zero()))))
    });
}

fn classical_limit(ctx: &Context, rec: &mut Recorder) {
    for mu in 0..=2 {
        for nu in 0..=2 {
            rec.check(format!("braiding is flip {mu}x{nu}"), || {
                Ok(ensure(classical(braiding(mu, nu)?.as_ref())? == classical(&flip(mu, nu))?, || {
                    "Ř(s = 1) ≠ P".into()
                }))
            });
        }
    }

    rec.check("r-matrix identity 1x1", || {
        Ok(ensure(classical(&r_matrix(1, 1)?)?.is_identity(), || "R(s = 1) ≠ 1".into()))
    });

    for mu in 1..=3 {
        rec.check(format!("lie bracket twoJ={mu}"), || {
            // [π(t^i), π(t^j)] = Σ_k c[k][j][i] π(t^k) at s = 1, with c read
            // from the adjoint matrices of the same realization.
            let t: Vec<_> = l_matrices(mu)?.iter().map(classical).collect::<Result<_>>()?;
            let c: Vec<_> = l_matrices(ADJOINT)?.iter().map(classical).collect::<Result<_>>()?;
            let d = mu as usize + 1;
            for i in 0..DIM {
                for j in 0..DIM {
                    let lhs = &(&t[i] * &t[j]) - &(&t[j] * &t[i]);
                    let rhs = Matrix::linear_combination((0..DIM).map(|k| (c[i][(k, j)].clone(), &t[k])), d, d);
                    if lhs != rhs {
                        return Ok(Err(format!("[t^{i}, t^{j}]")));
                    }
                }
            }
            Ok(Ok(None))
        });
    }

    rec.check("function algebra commutative", || {
        let alg = FunctionAlgebra::new(ctx.max());
        for x in fundamentals() {
            for y in fundamentals() {
                let d = &alg.product(&x, &y)? - &alg.product(&y, &x)?;
                if !d.eval_classical()?.is_empty() {
                    return Ok(Err(format!("({x})({y})")));
                }
            }
        }
        Ok(Ok(None))
    });

    rec.check("gamma is the killing form", || {
        let calc = ctx.calculus()?;
        let g = classical(&calc.gamma_metric()?)?;
        let fund = calc.qla.rep(1)?;
        let four = Rational::from_integer(4.into());
        for i in 0..DIM {
            for j in 0..DIM {
                let k = (&fund[i] * &fund[j]).trace().eval_classical()? * &four;
                if k != g[(i, j)] {
                    return Ok(Err(format!("γ[{i}][{j}] = {}, 4 tr(t^{i} t^{j}) = {k}", g[(i, j)])));
                }
            }
        }
        Ok(Ok(None))
    });

    rec.check("sudbery data trivial at s=1", || {
        Ok(ensure(ctx.fit()?.classical_limit_is_trivial()?, || "C ↛ 1 or f ↛ δ".into()))
    });

    rec.check("completeness at s=1", || {
        let rec = ctx.calculus()?.completeness_reconstruction()?;
        for (i, w) in rec.iter().enumerate() {
            if !w.sub(&OneForm::basis(i)).vanishes_classically()? {
                return Ok(Err(format!("ω_{i}")));
            }
        }
        Ok(Ok(None))
    });
}
