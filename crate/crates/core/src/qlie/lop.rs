//! Coherent realization of the quantum Lie algebra through the monodromy
//! `L⁺S(L⁻)` of the fundamental representation.
//!
//! On `V_μ ⊗ V_1` the monodromy `Z = Ř^{1μ} Ř^{μ1}` has 2×2 blocks
//! `Q_a^b = Z[(·, a), (·, b)]`, each an operator on `V_μ`. The matrix
//! `(Q_a^b − δ_a^b)/(q − q⁻¹)` transforms as `V_1 ⊗ V_1^∨`; its adjoint part,
//! read through the embedding of `V_2` into `V_1 ⊗ V_1^∨`, gives `π^μ(t^i)`.
//! The remaining singlet part is the quantum trace.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::memo::Memo;
use crate::qscalar::{q, q_minus_qinv};
use crate::repcat::braiding::braiding;
use crate::repcat::cg::cg_system;
use crate::repcat::irrep::build_irrep;
use crate::repcat::module::{right_dual_rep, tensor, Component};
use crate::{QScalar, ScalarMatrix};

pub type Triple = [ScalarMatrix; 3];

/// Monodromy `Ř^{1μ} Ř^{μ1}` acting on `V_μ ⊗ V_1`.
pub fn monodromy(mu: u32) -> Result<ScalarMatrix> {
    Ok(braiding(1, mu)?.as_ref() * braiding(mu, 1)?.as_ref())
}

fn block(z: &ScalarMatrix, dim: usize, a: usize, b: usize) -> ScalarMatrix {
    Matrix::from_fn(dim, dim, |m, n| z[(m * 2 + a, n * 2 + b)].clone())
}

static ADJOINT_IN_END: Memo<(), Arc<(Component, Component)>> = Memo::new();

/// The adjoint and trivial summands of `V_1 ⊗ V_1^∨`, with index
/// `b · 2 + a` for `v_b ⊗ v^a`.
pub fn fundamental_endomorphisms() -> Result<Arc<(Component, Component)>> {
    ADJOINT_IN_END.get_or_try_insert(&(), || {
        let v = build_irrep(1);
        let comps = tensor(v.as_ref(), &right_dual_rep(v.as_ref())).decompose()?;
        let find = |l| {
            comps
                .iter()
                .find(|c| c.two_j == l)
                .cloned()
                .ok_or_else(|| Error::NotSemisimple(format!("V_1 ⊗ V_1^∨ lacks twoJ = {l}")))
        };
        Ok(Arc::new((find(2)?, find(0)?)))
    })
}

static L_MATRICES: Memo<u32, Arc<Triple>> = Memo::new();

/// `π^μ(t^i)` of the monodromy realization.
pub fn l_matrices(mu: u32) -> Result<Arc<Triple>> {
    L_MATRICES.get_or_try_insert(&mu, || {
        let z = monodromy(mu)?;
        Ok(Arc::new(extract(&z, mu as usize + 1)?))
    })
}

/// Reads `t^i` off a monodromy acting on `W ⊗ V_1` with `dim W = dim`.
fn extract(z: &ScalarMatrix, dim: usize) -> Result<Triple> {
    let ends = fundamental_endomorphisms()?;
    let embed = &ends.0.embed;
    let scale = q_minus_qinv().try_inv().expect("q − q⁻¹ ≠ 0");
    let mut out: Vec<ScalarMatrix> = Vec::with_capacity(3);
    for i in 0..3 {
        let mut t = Matrix::zeros(dim, dim);
        for a in 0..2 {
            for b in 0..2 {
                let c = &embed[(b * 2 + a, i)];
                if c.is_zero() {
                    continue;
                }
                let mut qab = block(z, dim, a, b);
                if a == b {
                    qab = &qab - &Matrix::identity(dim);
                }
                t = &t + &qab.scale(&(c * &scale));
            }
        }
        out.push(t);
    }
    Ok(out.try_into().expect("three matrices"))
}

/// `Σ_a D_a Q_a^a` with `D = π^1(K⁻¹) = diag(q⁻¹, q)`, the weighting that
/// is central for this coproduct and basis order.
pub fn quantum_trace(mu: u32) -> Result<ScalarMatrix> {
    let z = monodromy(mu)?;
    let dim = mu as usize + 1;
    let d = [q().try_inv().expect("q ≠ 0"), q()];
    Ok(&block(&z, dim, 0, 0).scale(&d[0]) + &block(&z, dim, 1, 1).scale(&d[1]))
}

/// `π^{μ⊗ν}(t^i)` from the blockwise action on the Clebsch-Gordan summands.
pub fn tensor_action_blockwise(mu: u32, nu: u32, i: usize) -> Result<ScalarMatrix> {
    let cg = cg_system(mu, nu)?;
    let mut out = Matrix::zeros(cg.dim(), cg.dim());
    for c in &cg.components {
        let t = l_matrices(c.two_j)?;
        out = &out + &(&(&c.embed * &t[i]) * &c.project);
    }
    Ok(out)
}

/// `π^{μ⊗ν}(t^i)` from the monodromy of `V_1` around `V_μ ⊗ V_ν`, built from
/// the single-factor braidings by the hexagon relations.
pub fn tensor_action_hexagon(mu: u32, nu: u32, i: usize) -> Result<ScalarMatrix> {
    Ok(tensor_hexagon_all(mu, nu)?[i].clone())
}

fn tensor_hexagon_all(mu: u32, nu: u32) -> Result<Triple> {
    let id = |n: u32| Matrix::<QScalar>::identity(n as usize + 1);
    // V_μ V_ν V_1 → V_μ V_1 V_ν → V_1 V_μ V_ν
    let out = &braiding(mu, 1)?.kron(&id(nu)) * &id(mu).kron(braiding(nu, 1)?.as_ref());
    // V_1 V_μ V_ν → V_μ V_1 V_ν → V_μ V_ν V_1
    let back = &id(mu).kron(braiding(1, nu)?.as_ref()) * &braiding(1, mu)?.kron(&id(nu));
    extract(&(&back * &out), (mu as usize + 1) * (nu as usize + 1))
}

/// `π^{μ⊗ν}(t^i)`, computed both ways; disagreement is an error.
pub fn tensor_action(mu: u32, nu: u32, i: usize) -> Result<ScalarMatrix> {
    let blockwise = tensor_action_blockwise(mu, nu, i)?;
    let hexagon = tensor_action_hexagon(mu, nu, i)?;
    if blockwise != hexagon {
        return Err(Error::PathDisagreement(format!("t^{i} on V_{mu} ⊗ V_{nu}")));
    }
    Ok(blockwise)
}

/// The scalar `λ` with `a = λ · b` entrywise, if any.
pub fn proportionality(a: &[ScalarMatrix], b: &[ScalarMatrix]) -> Option<QScalar> {
    let mut ratio: Option<QScalar> = None;
    for (x, y) in a.iter().zip(b) {
        for (u, v) in x.entries().iter().zip(y.entries()) {
            match (u.is_zero(), v.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let r = u / v;
                    match &ratio {
                        None => ratio = Some(r),
                        Some(prev) if *prev == r => {}
                        Some(_) => return None,
                    }
                }
                _ => return None,
            }
        }
    }
    ratio.or_else(|| Some(QScalar::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::{int, rational};
    use crate::repcat::hopf::GENERATORS;
    use crate::repcat::hopf::Representation;

    #[test]
    fn trivial_irrep_is_killed() {
        for t in l_matrices(0).unwrap().iter() {
            assert!(t.is_zero());
        }
    }

    #[test]
    fn classical_generators_on_fundamental() {
        let t = l_matrices(1).unwrap();
        let c: Vec<_> = t.iter().map(|m| m.try_map(|x| x.eval_classical()).unwrap()).collect();
        let r = |n| rational(n, 1);
        assert_eq!(c[0], Matrix::from_rows(vec![vec![r(0), r(1)], vec![r(0), r(0)]]));
        assert_eq!(c[1], Matrix::from_rows(vec![vec![r(-1), r(0)], vec![r(0), r(1)]]));
        assert_eq!(c[2], Matrix::from_rows(vec![vec![r(0), r(0)], vec![r(-1), r(0)]]));
        assert_eq!(t[0][(0, 1)], crate::qscalar::s_pow(-2));
    }

    #[test]
    fn quantum_trace_is_central() {
        for mu in 0..=2 {
            let tr = quantum_trace(mu).unwrap();
            let v = build_irrep(mu);
            for g in GENERATORS {
                assert!(tr.commutes_with(v.generator(g)), "μ = {mu}, {g}");
            }
        }
    }

    #[test]
    fn other_trace_weighting_is_not_central() {
        let z = monodromy(1).unwrap();
        let tr = &block(&z, 2, 0, 0).scale(&q()) + &block(&z, 2, 1, 1).scale(&q().try_inv().unwrap());
        let v = build_irrep(1);
        assert!(!GENERATORS.iter().all(|&g| tr.commutes_with(v.generator(g))));
    }

    #[test]
    fn paths_agree() {
        for (mu, nu) in [(1, 1), (1, 2), (2, 1), (0, 2)] {
            for i in 0..3 {
                tensor_action(mu, nu, i).unwrap();
            }
        }
    }

    #[test]
    fn trivial_left_factor() {
        for i in 0..3 {
            assert_eq!(tensor_action_blockwise(0, 2, i).unwrap(), l_matrices(2).unwrap()[i]);
        }
    }

    #[test]
    fn singlet_block_vanishes() {
        let cg = cg_system(1, 1).unwrap();
        let singlet = cg.component(0).unwrap();
        for i in 0..3 {
            let t = tensor_action(1, 1, i).unwrap();
            let b = &(&singlet.project * &t) * &singlet.embed;
            assert_eq!(b, Matrix::from_rows(vec![vec![int(0)]]));
        }
    }

    #[test]
    fn proportionality_detects_mismatch() {
        let a = [Matrix::identity(2)];
        let b = [Matrix::diagonal(vec![int(1), int(2)])];
        assert!(proportionality(&a, &b).is_none());
        let c = [Matrix::identity(2).scale(&int(3))];
        assert_eq!(proportionality(&c, &a), Some(int(3)));
    }
}
