//! The quantum Lie algebra of sl₂ inside U_q(sl₂).
//!
//! The basis `t^0, t^1, t^2` is ordered by adjoint weight, highest first.
//! Two constructions are kept side by side: matrices read directly from
//! Clebsch-Gordan data (one arbitrary scale per irrep) and the coherent
//! monodromy realization in [`lop`], which fixes those scales.

pub mod functional;
pub mod lop;
pub mod sudbery;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

pub use functional::UqFunctional;
pub use lop::{l_matrices, tensor_action, Triple};
pub use sudbery::{fit_sudbery, SudberyFit};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::repcat::cg::cg_system;
use crate::repcat::hopf::{antipode_inverse_word, coproduct, Representation, GENERATORS};
use crate::repcat::irrep::build_irrep;
use crate::{QScalar, ScalarMatrix};

/// Label of the adjoint representation.
pub const ADJOINT: u32 = 2;

/// Number of basis elements `t^i`.
pub const DIM: usize = 3;

/// `c[k][j][i]`, the coefficient of `t^k` in `[t^i, t^j]`.
pub type StructureConstants = [[[QScalar; DIM]; DIM]; DIM];

/// `π^μ(t^i)` read from the `λ = μ` summand of `V_μ ⊗ V_2`:
/// `π^μ(t^i)_a^b = project[a][b · 3 + i]`.
pub fn rep_matrices_from_cg(mu: u32) -> Result<Triple> {
    let d = mu as usize + 1;
    let Some(component) = cg_system(mu, ADJOINT)?.component(mu).cloned() else {
        return Ok(std::array::from_fn(|_| Matrix::zeros(d, d)));
    };
    let p = &component.project;
    Ok(std::array::from_fn(|i| Matrix::from_fn(d, d, |a, b| p[(a, b * DIM + i)].clone())))
}

/// Rearranges adjoint matrices into `c[k][j][i] = π^Ψ(t^i)_k^j`.
fn rearrange(adjoint: &Triple) -> StructureConstants {
    std::array::from_fn(|k| std::array::from_fn(|j| std::array::from_fn(|i| adjoint[i][(k, j)].clone())))
}

/// Structure constants from the adjoint summand of `V_2 ⊗ V_2`.
pub fn structure_constants() -> Result<StructureConstants> {
    let cg = cg_system(ADJOINT, ADJOINT)?;
    let p = &cg
        .component(ADJOINT)
        .ok_or_else(|| Error::NotSemisimple("V_2 ⊗ V_2 lacks the adjoint".into()))?
        .project;
    Ok(std::array::from_fn(|k| {
        std::array::from_fn(|j| std::array::from_fn(|i| p[(k, j * DIM + i)].clone()))
    }))
}

/// Checks `Σ π(x₍₂₎) π(t^i) π(S⁻¹x₍₁₎) = Σ_j π(t^j) π^Ψ_j^i(x)` for E, F, K.
pub fn check_ad_covariance(mu: u32, t: &Triple) -> std::result::Result<(), String> {
    let v = build_irrep(mu);
    let adj = build_irrep(ADJOINT);
    for g in GENERATORS {
        let psi = adj.generator(g);
        for i in 0..DIM {
            let mut lhs = Matrix::zeros(v.dim(), v.dim());
            for (x1, x2) in coproduct(g) {
                let sx1 = antipode_inverse_word(&x1).matrix(v.as_ref());
                lhs = &lhs + &(&(&x2.matrix(v.as_ref()) * &t[i]) * &sx1);
            }
            let rhs = Matrix::linear_combination((0..DIM).map(|j| (psi[(j, i)].clone(), &t[j])), v.dim(), v.dim());
            if lhs != rhs {
                return Err(format!("ad({g}) t^{i} on V_{mu}"));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuantumLieAlgebra {
    pub max_two_j: u32,
    pub structure_constants: StructureConstants,
    /// `π^μ(t^i)` for `μ ≤ max_two_j`.
    pub rep_matrices: BTreeMap<u32, Triple>,
    /// `λ_μ` with `π^μ_L(t^i) = λ_μ π^μ_CG(t^i)`, for `1 ≤ μ ≤ max_two_j`.
    pub normalization: BTreeMap<u32, QScalar>,
}

impl QuantumLieAlgebra {
    /// The monodromy realization on all irreps up to `max_two_j`, checked for
    /// ad-covariance and proportionality to the Clebsch-Gordan matrices.
    pub fn l_operator_realization(max_two_j: u32) -> Result<Self> {
        let mut rep_matrices = BTreeMap::new();
        let mut normalization = BTreeMap::new();
        for mu in 0..=max_two_j.max(ADJOINT) {
            let t = l_matrices(mu)?.as_ref().clone();
            check_ad_covariance(mu, &t).map_err(Error::Proportionality)?;
            if mu > 0 {
                let cg = rep_matrices_from_cg(mu)?;
                let ratio = lop::proportionality(&t, &cg)
                    .filter(|r| !r.is_zero())
                    .ok_or_else(|| Error::Proportionality(format!("twoJ = {mu}")))?;
                normalization.insert(mu, ratio);
            }
            rep_matrices.insert(mu, t);
        }
        let structure_constants = rearrange(&rep_matrices[&ADJOINT]);
        Ok(Self {
            max_two_j,
            structure_constants,
            rep_matrices,
            normalization,
        })
    }

    pub fn rep(&self, mu: u32) -> Result<&Triple> {
        self.rep_matrices.get(&mu).ok_or(Error::Cutoff {
            two_j: mu,
            max_two_j: self.max_two_j,
        })
    }

    /// `t^i` as a functional on the covered irreps.
    pub fn generator(&self, i: usize) -> UqFunctional {
        self.rep_matrices.iter().map(|(&mu, t)| (mu, t[i].clone())).collect()
    }

    /// `[x, y]` for `x = Σ x_i t^i`, `y = Σ y_j t^j`.
    pub fn bracket(&self, x: &[QScalar; DIM], y: &[QScalar; DIM]) -> [QScalar; DIM] {
        std::array::from_fn(|k| {
            let mut acc = QScalar::zero();
            for i in 0..DIM {
                for j in 0..DIM {
                    let c = &self.structure_constants[k][j][i];
                    if !c.is_zero() {
                        acc = acc + &(&x[i] * &y[j]) * c;
                    }
                }
            }
            acc
        })
    }
}

/// Comparison of `c_k^{ji}(s)` with `−c_k^{ij}(s⁻¹)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AntisymmetryReport {
    pub table: StructureConstants,
    pub conjugate: StructureConstants,
    /// `d_k` with `c_k^{ji} = d_k · conjugate_k^{ji}` for all `i, j`, if one exists.
    pub rescaling: [Option<QScalar>; DIM],
}

pub fn q_antisymmetry_report(c: &StructureConstants) -> AntisymmetryReport {
    let conjugate: StructureConstants =
        std::array::from_fn(|k| std::array::from_fn(|j| std::array::from_fn(|i| -c[k][i][j].bar())));
    let rescaling = std::array::from_fn(|k| {
        let lhs: Vec<ScalarMatrix> = vec![Matrix::from_fn(DIM, DIM, |j, i| c[k][j][i].clone())];
        let rhs: Vec<ScalarMatrix> = vec![Matrix::from_fn(DIM, DIM, |j, i| conjugate[k][j][i].clone())];
        lop::proportionality(&lhs, &rhs)
    });
    AntisymmetryReport {
        table: c.clone(),
        conjugate,
        rescaling,
    }
}

impl AntisymmetryReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for k in 0..DIM {
            for j in 0..DIM {
                for i in 0..DIM {
                    let (a, b) = (&self.table[k][j][i], &self.conjugate[k][j][i]);
                    if a.is_zero() && b.is_zero() {
                        continue;
                    }
                    let _ = writeln!(out, "c[{k}][{j}][{i}]\t{a}\t{b}");
                }
            }
        }
        for (k, d) in self.rescaling.iter().enumerate() {
            match d {
                Some(d) => {
                    let _ = writeln!(out, "d[{k}]\t{d}");
                }
                None => {
                    let _ = writeln!(out, "d[{k}]\tnone");
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::{int, rational};
    use crate::Rational;

    fn classical(c: &StructureConstants) -> Vec<Rational> {
        c.iter().flatten().flatten().map(|x| x.eval_classical().unwrap()).collect()
    }

    #[test]
    fn cg_matrices_vanish_on_trivial() {
        for t in rep_matrices_from_cg(0).unwrap() {
            assert_eq!(t, Matrix::from_rows(vec![vec![int(0)]]));
        }
    }

    #[test]
    fn cg_matrices_are_covariant() {
        for mu in 0..=3 {
            check_ad_covariance(mu, &rep_matrices_from_cg(mu).unwrap()).unwrap();
        }
    }

    #[test]
    fn structure_constants_match_adjoint_matrices() {
        assert_eq!(structure_constants().unwrap(), rearrange(&rep_matrices_from_cg(ADJOINT).unwrap()));
    }

    #[test]
    fn highest_weight_bracket_vanishes() {
        let c = structure_constants().unwrap();
        for k in 0..DIM {
            assert!(c[k][0][0].is_zero());
        }
    }

    #[test]
    fn classical_antisymmetry() {
        let c = structure_constants().unwrap();
        let cl = classical(&c);
        for k in 0..DIM {
            for j in 0..DIM {
                for i in 0..DIM {
                    assert_eq!(cl[k * 9 + j * 3 + i], -cl[k * 9 + i * 3 + j].clone());
                }
            }
        }
    }

    #[test]
    fn classical_values_follow_sl2() {
        // With t^0 ∝ e, t^1 ∝ h, t^2 ∝ f the only classical brackets are the
        // sl₂ ones, so c[k][j][i] ≠ 0 at s = 1 only when wt(i) + wt(j) = wt(k)
        // with weights 2, 0, −2.
        let cl = classical(&structure_constants().unwrap());
        let wt = |i: usize| 2 - 2 * i as i64;
        for k in 0..DIM {
            for j in 0..DIM {
                for i in 0..DIM {
                    if wt(i) + wt(j) != wt(k) || i == j {
                        assert_eq!(cl[k * 9 + j * 3 + i], rational(0, 1), "c[{k}][{j}][{i}]");
                    } else {
                        assert_ne!(cl[k * 9 + j * 3 + i], rational(0, 1), "c[{k}][{j}][{i}]");
                    }
                }
            }
        }
    }

    #[test]
    fn realization_is_coherent() {
        let qla = QuantumLieAlgebra::l_operator_realization(3).unwrap();
        assert_eq!(qla.normalization.len(), 3);
        assert!(qla.normalization.values().all(|x| !x.is_zero()));
        assert_eq!(qla.structure_constants, rearrange(qla.rep(ADJOINT).unwrap()));
        assert!(matches!(qla.rep(4), Err(Error::Cutoff { two_j: 4, .. })));
        let n1 = &qla.normalization[&1];
        let s2 = crate::qscalar::s_pow(2);
        let expected = -((s2.pow(2) + &s2 + int(1)) * (s2.pow(2) - &s2 + int(1))) / crate::qscalar::s_pow(6);
        assert_eq!(*n1, expected);
    }

    #[test]
    fn antisymmetry_report_classical_agreement() {
        let r = q_antisymmetry_report(&structure_constants().unwrap());
        assert_eq!(classical(&r.table), classical(&r.conjugate));
        assert_eq!(r.render(), q_antisymmetry_report(&structure_constants().unwrap()).render());
    }
}
