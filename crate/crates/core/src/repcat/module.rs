//! Finite-dimensional modules given by explicit generator matrices, their
//! tensor products and duals, and the highest-weight decomposition.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::hopf::{antipode, antipode_inverse, coproduct, Generator, Representation, GENERATORS};
use super::irrep::{diagonal_inverse, Irrep};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::qscalar::qint;
use crate::{QScalar, ScalarMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleRep {
    pub e: ScalarMatrix,
    pub f: ScalarMatrix,
    pub k: ScalarMatrix,
}

/// One irreducible summand: `embed` is `dim M × (two_j + 1)` and its columns
/// are the Irrep-convention basis of the summand; `project` is the matching
/// block of rows of the inverse change of basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub two_j: u32,
    pub embed: ScalarMatrix,
    pub project: ScalarMatrix,
}

impl Component {
    pub fn highest_weight_vector(&self) -> Vec<QScalar> {
        self.embed.column(0)
    }
}

impl Representation for ModuleRep {
    fn dim(&self) -> usize {
        self.k.rows()
    }

    fn generator(&self, g: Generator) -> &ScalarMatrix {
        match g {
            Generator::E => &self.e,
            Generator::F => &self.f,
            Generator::K => &self.k,
        }
    }

    fn k_inverse(&self) -> ScalarMatrix {
        diagonal_inverse(&self.k)
    }
}

impl From<&Irrep> for ModuleRep {
    fn from(v: &Irrep) -> Self {
        Self {
            e: v.e.clone(),
            f: v.f.clone(),
            k: v.k.clone(),
        }
    }
}

impl ModuleRep {
    pub fn dim(&self) -> usize {
        self.k.rows()
    }

    /// Weights `m` with `K = q^m` on each basis vector; K must be diagonal
    /// with entries that are even powers of s.
    pub fn weights(&self) -> Result<Vec<i64>> {
        if !self.k.is_diagonal() {
            return Err(Error::NotSemisimple("K is not diagonal".into()));
        }
        (0..self.dim())
            .map(|i| {
                let terms = self.k[(i, i)].laurent_terms().unwrap_or_default();
                match terms.as_slice() {
                    [(e, c)] if c.is_one() && e % 2 == 0 => Ok(e / 2),
                    _ => Err(Error::NotSemisimple(format!("K entry {} is not a power of q", self.k[(i, i)]))),
                }
            })
            .collect()
    }

    pub fn decompose(&self) -> Result<Vec<Component>> {
        decompose(self)
    }
}

/// Tensor product through Δ(E) = E⊗1 + K⊗E, Δ(F) = F⊗K⁻¹ + 1⊗F, Δ(K) = K⊗K.
pub fn tensor<A, B>(a: &A, b: &B) -> ModuleRep
where
    A: Representation + ?Sized,
    B: Representation + ?Sized,
{
    let act = |g: Generator| {
        let mut out = Matrix::zeros(a.dim() * b.dim(), a.dim() * b.dim());
        for (left, right) in coproduct(g) {
            out = &out + &left.matrix(a).kron(&right.matrix(b));
        }
        out
    };
    ModuleRep {
        e: act(Generator::E),
        f: act(Generator::F),
        k: act(Generator::K),
    }
}

/// Left dual: x acts as the transpose of π(S(x)).
pub fn dual_rep<A: Representation + ?Sized>(a: &A) -> ModuleRep {
    let act = |g: Generator| antipode(g).matrix(a).transpose();
    ModuleRep {
        e: act(Generator::E),
        f: act(Generator::F),
        k: act(Generator::K),
    }
}

/// Right dual: x acts as the transpose of π(S⁻¹(x)). With this dual the
/// evaluation `V ⊗ V^∨ → 1`, `v_c ⊗ v^a ↦ δ_c^a`, is a module map.
pub fn right_dual_rep<A: Representation + ?Sized>(a: &A) -> ModuleRep {
    let act = |g: Generator| antipode_inverse(g).matrix(a).transpose();
    ModuleRep {
        e: act(Generator::E),
        f: act(Generator::F),
        k: act(Generator::K),
    }
}

/// Whether `map: A → B` commutes with E, F and K.
pub fn is_intertwiner<A, B>(map: &ScalarMatrix, a: &A, b: &B) -> bool
where
    A: Representation + ?Sized,
    B: Representation + ?Sized,
{
    GENERATORS
        .iter()
        .all(|&g| &(b.generator(g) * map) == &(map * a.generator(g)))
}

/// Highest-weight decomposition.
///
/// For each weight `m ≥ 0`, from the top down, the kernel of E on the weight
/// space gives the highest-weight vectors (scaled so the first nonzero
/// coordinate is 1); descendants are `F^k w / [k]!`, which is exactly the
/// basis in which the summand carries the [`Irrep`] matrices.
pub fn decompose(m: &ModuleRep) -> Result<Vec<Component>> {
    let dim = m.dim();
    let weights = m.weights()?;
    let mut by_weight: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, &w) in weights.iter().enumerate() {
        by_weight.entry(w).or_default().push(i);
    }

    let mut columns: Vec<(u32, Vec<Vec<QScalar>>)> = Vec::new();
    for (&w, idx) in by_weight.iter().rev() {
        if w < 0 {
            break;
        }
        let restricted = Matrix::from_fn(dim, idx.len(), |r, c| m.e[(r, idx[c])].clone());
        for kernel_vec in restricted.nullspace() {
            let mut v = vec![QScalar::zero(); dim];
            for (c, x) in idx.iter().zip(kernel_vec) {
                v[*c] = x;
            }
            let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("kernel vector is nonzero");
            let inv = lead.try_inv().expect("nonzero lead");
            let v: Vec<QScalar> = v.into_iter().map(|x| x * &inv).collect();
            let mut basis = vec![v];
            for k in 0..w as usize {
                let next = m.f.mul_vec(basis.last().expect("nonempty"));
                let inv = qint(k as i64 + 1).try_inv().expect("[k] ≠ 0");
                basis.push(next.into_iter().map(|x| x * &inv).collect());
            }
            if !m.f.mul_vec(basis.last().expect("nonempty")).iter().all(Zero::is_zero) {
                return Err(Error::NotSemisimple(format!("F string from weight {w} does not terminate")));
            }
            columns.push((w as u32, basis));
        }
    }

    let total: usize = columns.iter().map(|(_, b)| b.len()).sum();
    if total != dim {
        return Err(Error::NotSemisimple(format!("highest-weight vectors span {total} of {dim} dimensions")));
    }

    // invert the change of basis one weight block at a time
    let mut col_weight = Vec::with_capacity(dim);
    let mut all_cols = Vec::with_capacity(dim);
    for (two_j, basis) in &columns {
        for (k, v) in basis.iter().enumerate() {
            col_weight.push(*two_j as i64 - 2 * k as i64);
            all_cols.push(v.clone());
        }
    }
    let mut inverse = Matrix::zeros(dim, dim);
    for (&w, rows) in &by_weight {
        let cols: Vec<usize> = (0..dim).filter(|&c| col_weight[c] == w).collect();
        if cols.len() != rows.len() {
            return Err(Error::NotSemisimple(format!("weight {w} block is not square")));
        }
        let block = Matrix::from_fn(rows.len(), cols.len(), |r, c| all_cols[cols[c]][rows[r]].clone());
        let inv = block
            .inverse()
            .ok_or_else(|| Error::NotSemisimple(format!("weight {w} block is singular")))?;
        for (ci, &c) in cols.iter().enumerate() {
            for (ri, &r) in rows.iter().enumerate() {
                inverse[(c, r)] = inv[(ci, ri)].clone();
            }
        }
    }

    let mut out = Vec::with_capacity(columns.len());
    let mut offset = 0;
    for (two_j, basis) in columns {
        let width = basis.len();
        let embed = Matrix::from_fn(dim, width, |r, c| basis[c][r].clone());
        let project = inverse.block(offset, 0, width, dim);
        out.push(Component { two_j, embed, project });
        offset += width;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::{int, q};
    use crate::repcat::hopf::check_relations;
    use crate::repcat::irrep::build_irrep;

    #[test]
    fn fund_tensor_fund_k() {
        let v = build_irrep(1);
        let t = tensor(v.as_ref(), v.as_ref());
        assert_eq!(t.k, Matrix::diagonal(vec![q().pow(2), int(1), int(1), q().pow(2).try_inv().unwrap()]));
        assert_eq!(t.dim(), 4);
    }

    #[test]
    fn relations_on_fund_tensor_adjoint() {
        let t = tensor(build_irrep(1).as_ref(), build_irrep(2).as_ref());
        check_relations(&t).unwrap();
        assert_eq!(t.dim(), 6);
    }

    #[test]
    fn singlet_highest_weight_vector() {
        let v = build_irrep(1);
        let comps = tensor(v.as_ref(), v.as_ref()).decompose().unwrap();
        let labels: Vec<u32> = comps.iter().map(|c| c.two_j).collect();
        assert_eq!(labels, vec![2, 0]);
        // oracle: solve Δ(E)(x v0⊗v1 + y v1⊗v0) = 0 directly; Δ(E) sends
        // v0⊗v1 ↦ K v0 ⊗ E v1 = q v0⊗v0 and v1⊗v0 ↦ E v1 ⊗ v0 = v0⊗v0,
        // so q x + y = 0 and with x = 1, y = −q.
        let singlet = comps[1].highest_weight_vector();
        assert_eq!(singlet, vec![int(0), int(1), -q(), int(0)]);
        let classical: Vec<_> = singlet.iter().map(|x| x.eval_classical().unwrap()).collect();
        assert_eq!(classical, vec![0, 1, -1, 0].into_iter().map(|n| crate::qscalar::rational(n, 1)).collect::<Vec<_>>());
    }

    #[test]
    fn adjoint_squared_labels() {
        let w = build_irrep(2);
        let labels: Vec<u32> = tensor(w.as_ref(), w.as_ref()).decompose().unwrap().iter().map(|c| c.two_j).collect();
        assert_eq!(labels, vec![4, 2, 0]);
    }

    #[test]
    fn duals_are_self_dual() {
        for two_j in [1, 2] {
            let v = build_irrep(two_j);
            let d = dual_rep(v.as_ref());
            check_relations(&d).unwrap();
            let comps = d.decompose().unwrap();
            assert_eq!(comps.len(), 1);
            assert_eq!(comps[0].two_j, two_j);
            let rd = right_dual_rep(v.as_ref());
            check_relations(&rd).unwrap();
            assert_eq!(rd.decompose().unwrap()[0].two_j, two_j);
        }
    }

    #[test]
    fn double_dual_intertwiner_is_k() {
        // Solve φ π(x) = π**(x) φ for φ on the fundamental and the adjoint; the
        // solution space is one-dimensional and spanned by π(K⁻¹) (S²(x) = K⁻¹ x K).
        for two_j in [1u32, 2] {
            let v = build_irrep(two_j);
            let dd = dual_rep(&dual_rep(v.as_ref()));
            let n = v.dim();
            let mut rows = Vec::new();
            for g in GENERATORS {
                let a = v.generator(g);
                let b = dd.generator(g);
                // (φ a − b φ)[r][c] = Σ_k φ[r][k] a[k][c] − b[r][k] φ[k][c]
                for r in 0..n {
                    for c in 0..n {
                        let mut row = vec![QScalar::zero(); n * n];
                        for k in 0..n {
                            row[r * n + k] = &row[r * n + k] + &a[(k, c)];
                            row[k * n + c] = &row[k * n + c] - &b[(r, k)];
                        }
                        rows.push(row);
                    }
                }
            }
            let ker = Matrix::from_rows(rows).nullspace();
            assert_eq!(ker.len(), 1);
            let phi = Matrix::from_fn(n, n, |r, c| ker[0][r * n + c].clone());
            let kinv = v.k_inverse();
            let ratio = &kinv[(0, 0)] / &phi[(0, 0)];
            assert_eq!(phi.scale(&ratio), kinv);
            assert!(is_intertwiner(&phi, v.as_ref(), &dd));
        }
    }

    #[test]
    fn projections_invert_embeddings() {
        let t = tensor(build_irrep(2).as_ref(), build_irrep(3).as_ref());
        let comps = t.decompose().unwrap();
        let mut sum = Matrix::zeros(t.dim(), t.dim());
        for c in &comps {
            assert!((&c.project * &c.embed).is_identity());
            sum = &sum + &(&c.embed * &c.project);
        }
        assert!(sum.is_identity());
    }
}
