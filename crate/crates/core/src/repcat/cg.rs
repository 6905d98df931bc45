//! Clebsch-Gordan decomposition of `V_μ ⊗ V_ν`.

use std::sync::Arc;

use super::irrep::build_irrep;
use super::module::{decompose, is_intertwiner, tensor, Component};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::memo::Memo;
use crate::ScalarMatrix;

/// `V_μ ⊗ V_ν ≅ ⊕_λ V_λ` with one [`Component`] per `λ = μ+ν, μ+ν−2, …, |μ−ν|`.
#[derive(Clone, Debug, PartialEq)]
pub struct CgSystem {
    pub mu: u32,
    pub nu: u32,
    pub components: Vec<Component>,
}

impl CgSystem {
    pub fn dim(&self) -> usize {
        (self.mu as usize + 1) * (self.nu as usize + 1)
    }

    pub fn labels(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.two_j).collect()
    }

    pub fn component(&self, lambda: u32) -> Option<&Component> {
        self.components.iter().find(|c| c.two_j == lambda)
    }

    /// Checks that every embedding and projection intertwines and that they
    /// resolve the identity.
    pub fn check(&self) -> Result<()> {
        let v = build_irrep(self.mu);
        let w = build_irrep(self.nu);
        let t = tensor(v.as_ref(), w.as_ref());
        let n = t.dim();
        let mut resolution = Matrix::zeros(n, n);
        for c in &self.components {
            let lam = build_irrep(c.two_j);
            if !is_intertwiner(&c.embed, lam.as_ref(), &t) {
                return Err(Error::NotSemisimple(format!("embedding of twoJ = {} is not a module map", c.two_j)));
            }
            if !is_intertwiner(&c.project, &t, lam.as_ref()) {
                return Err(Error::NotSemisimple(format!("projection onto twoJ = {} is not a module map", c.two_j)));
            }
            if !(&c.project * &c.embed).is_identity() {
                return Err(Error::NotSemisimple(format!("projection ∘ embedding ≠ 1 on twoJ = {}", c.two_j)));
            }
            resolution = &resolution + &(&c.embed * &c.project);
        }
        if !resolution.is_identity() {
            return Err(Error::NotSemisimple("Σ embed ∘ project ≠ 1".into()));
        }
        Ok(())
    }

    /// Classical values of the embedding for `λ`.
    pub fn classical_embed(&self, lambda: u32) -> Result<crate::RationalMatrix> {
        let c = self
            .component(lambda)
            .ok_or_else(|| Error::DimensionMismatch(format!("no component twoJ = {lambda}")))?;
        c.embed.try_map(|x| x.eval_classical())
    }
}

static CG: Memo<(u32, u32), Arc<CgSystem>> = Memo::new();

pub fn cg_system(mu: u32, nu: u32) -> Result<Arc<CgSystem>> {
    CG.get_or_try_insert(&(mu, nu), || {
        let v = build_irrep(mu);
        let w = build_irrep(nu);
        let components = decompose(&tensor(v.as_ref(), w.as_ref()))?;
        Ok(Arc::new(CgSystem { mu, nu, components }))
    })
}

/// `Σ_λ coeff(λ) · embed_λ ∘ project_λ` for a map on `V_μ ⊗ V_ν`, or with the
/// embeddings of another system when the target differs.
pub(crate) fn blockwise(
    source: &CgSystem,
    target: &CgSystem,
    mut coeff: impl FnMut(&Component, &Component) -> Result<crate::QScalar>,
) -> Result<ScalarMatrix> {
    let mut out = Matrix::zeros(target.dim(), source.dim());
    for src in &source.components {
        let tgt = target
            .component(src.two_j)
            .ok_or_else(|| Error::DimensionMismatch(format!("target lacks twoJ = {}", src.two_j)))?;
        let k = coeff(src, tgt)?;
        out = &out + &(&tgt.embed * &src.project).scale(&k);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::rational;
    use crate::{Rational, RationalMatrix};
    use num_traits::{One, Zero};

    /// Classical highest-weight vectors by direct recursion over ℚ.
    ///
    /// The kernel of E on weight `λ` in `V_μ ⊗ V_ν` with the classical
    /// `E v_k = (n − k + 1) v_{k−1}` is spanned by `Σ_a c_a v_a ⊗ v_{k−a}`
    /// with `c_{a+1} (μ − a) = −c_a (ν − k + a + 1)`.
    fn classical_hw(mu: u32, nu: u32, lambda: u32) -> Vec<Rational> {
        let (m, n) = (mu as i64, nu as i64);
        let k = (m + n - lambda as i64) / 2;
        let mut out = vec![Rational::zero(); ((m + 1) * (n + 1)) as usize];
        let mut c = Rational::one();
        for a in 0..=k {
            let b = k - a;
            if a <= m && b <= n && b >= 0 {
                out[(a * (n + 1) + b) as usize] = c.clone();
            }
            if a < m {
                c = -c * rational(n - k + a + 1, m - a);
            }
        }
        out
    }

    #[test]
    fn labels_follow_clebsch_gordan_rule() {
        for mu in 0..=4 {
            for nu in 0..=4 {
                let cg = cg_system(mu, nu).unwrap();
                let expected: Vec<u32> = (0..=mu.min(nu)).map(|k| mu + nu - 2 * k).collect();
                assert_eq!(cg.labels(), expected, "({mu}, {nu})");
            }
        }
    }

    #[test]
    fn invariants_hold() {
        for mu in 0..=3 {
            for nu in 0..=3 {
                cg_system(mu, nu).unwrap().check().unwrap();
            }
        }
    }

    #[test]
    fn classical_limit_matches_recursion() {
        for (mu, nu) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 4)] {
            let cg = cg_system(mu, nu).unwrap();
            for lambda in cg.labels() {
                let embed: RationalMatrix = cg.classical_embed(lambda).unwrap();
                assert_eq!(embed.column(0), classical_hw(mu, nu, lambda), "({mu}, {nu}) -> {lambda}");
            }
        }
    }

    #[test]
    fn memoized_instances_are_shared() {
        let a = cg_system(2, 1).unwrap();
        let b = cg_system(2, 1).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
