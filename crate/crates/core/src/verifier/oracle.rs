//! Classical (`s = 1`) Clebsch-Gordan data computed from scratch with the
//! integer sl₂ matrices, independent of the quantum decomposition.

use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::{Rational, RationalMatrix};

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `(e, f)` on the classical irrep `n`, with `f v_k = (k+1) v_{k+1}` and
/// `e v_k = (n−k+1) v_{k−1}`.
pub fn classical_irrep(n: u32) -> (RationalMatrix, RationalMatrix) {
    let d = n as usize + 1;
    let mut e = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    for k in 0..d {
        if k + 1 < d {
            f[(k + 1, k)] = r(k as i64 + 1);
        }
        if k >= 1 {
            e[(k - 1, k)] = r(n as i64 - k as i64 + 1);
        }
    }
    (e, f)
}

fn primitive_tensor(x: &RationalMatrix, y: &RationalMatrix) -> RationalMatrix {
    &x.kron(&Matrix::identity(y.rows())) + &Matrix::identity(x.rows()).kron(y)
}

/// Classical embedding `V_λ → V_μ ⊗ V_ν` per label, highest label first.
///
/// The highest weight vector spans the kernel of `e` on the weight-`λ`
/// subspace and is scaled so its first nonzero coordinate is 1; column `k`
/// is `f^k w / k!`.
pub fn classical_cg(mu: u32, nu: u32) -> Vec<(u32, RationalMatrix)> {
    let (e1, f1) = classical_irrep(mu);
    let (e2, f2) = classical_irrep(nu);
    let e = primitive_tensor(&e1, &e2);
    let f = primitive_tensor(&f1, &f2);
    let dn = nu as usize + 1;
    let dim = (mu as usize + 1) * dn;
    let weight = |idx: usize| mu as i64 - 2 * (idx / dn) as i64 + nu as i64 - 2 * (idx % dn) as i64;

    let mut out = Vec::new();
    for k in 0..=mu.min(nu) {
        let lambda = mu + nu - 2 * k;
        let support: Vec<usize> = (0..dim).filter(|&i| weight(i) == lambda as i64).collect();
        let restricted = Matrix::from_fn(dim, support.len(), |row, c| e[(row, support[c])].clone());
        let kernel = restricted.nullspace();
        assert_eq!(kernel.len(), 1, "highest weight space of λ = {lambda} in {mu} ⊗ {nu}");
        let mut w = vec![Rational::zero(); dim];
        for (c, &i) in support.iter().enumerate() {
            w[i] = kernel[0][c].clone();
        }
        let lead = w.iter().find(|x| !x.is_zero()).cloned().expect("nonzero kernel vector");
        for x in &mut w {
            *x = &*x / &lead;
        }

        let d = lambda as usize + 1;
        let mut embed = Matrix::zeros(dim, d);
        let mut v = w;
        let mut fact = Rational::one();
        for col in 0..d {
            if col > 0 {
                v = f.mul_vec(&v);
                fact = fact * r(col as i64);
            }
            for (row, x) in v.iter().enumerate() {
                embed[(row, col)] = x / &fact;
            }
        }
        out.push((lambda, embed));
    }
    out
}

/// Classical projections, from inverting the full change of basis.
pub fn classical_projections(mu: u32, nu: u32) -> Vec<(u32, RationalMatrix)> {
    let embeds = classical_cg(mu, nu);
    let dim = (mu as usize + 1) * (nu as usize + 1);
    let mut basis = Matrix::zeros(dim, dim);
    let mut offset = 0;
    for (_, m) in &embeds {
        for row in 0..dim {
            for col in 0..m.cols() {
                basis[(row, offset + col)] = m[(row, col)].clone();
            }
        }
        offset += m.cols();
    }
    let inv = basis.inverse().expect("classical change of basis is invertible");
    let mut offset = 0;
    embeds
        .iter()
        .map(|(l, m)| {
            let p = inv.block(offset, 0, m.cols(), dim);
            offset += m.cols();
            (*l, p)
        })
        .collect()
}

/// Classical `c[k][j][i]` read from the adjoint projection of `V_2 ⊗ V_2`.
pub fn classical_structure_constants() -> Vec<Rational> {
    let (_, p) = classical_projections(2, 2).into_iter().find(|(l, _)| *l == 2).expect("adjoint summand");
    let mut out = Vec::with_capacity(27);
    for k in 0..3 {
        for j in 0..3 {
            for i in 0..3 {
                out.push(p[(k, j * 3 + i)].clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singlet_of_two_doublets() {
        let cg = classical_cg(1, 1);
        let (l, m) = &cg[1];
        assert_eq!(*l, 0);
        assert_eq!(m.column(0), vec![r(0), r(1), r(-1), r(0)]);
    }

    #[test]
    fn triplet_lowest_vector() {
        let (_, m) = &classical_cg(1, 1)[0];
        assert_eq!(m.column(2), vec![r(0), r(0), r(0), r(1)]);
        assert_eq!(m.column(1), vec![r(0), r(1), r(1), r(0)]);
    }

    #[test]
    fn projections_invert_embeddings() {
        for (mu, nu) in [(1, 2), (2, 2), (3, 1)] {
            let e = classical_cg(mu, nu);
            let p = classical_projections(mu, nu);
            for ((_, e), (_, p)) in e.iter().zip(&p) {
                assert!((p * e).is_identity());
            }
        }
    }

    #[test]
    fn classical_bracket_is_antisymmetric() {
        let c = classical_structure_constants();
        for k in 0..3 {
            for j in 0..3 {
                for i in 0..3 {
                    assert_eq!(c[k * 9 + j * 3 + i], -c[k * 9 + i * 3 + j].clone());
                }
            }
        }
    }
}
