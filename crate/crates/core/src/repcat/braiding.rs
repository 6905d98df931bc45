//! Braiding `Ř^{μν}: V_μ ⊗ V_ν → V_ν ⊗ V_μ` and the R-matrix.
//!
//! The braiding acts on the summand `V_λ` by a scalar relative to the two
//! Clebsch-Gordan systems. With `k = (μ + ν − λ)/2` that scalar is
//! `s^{μ(ν − 2k)} / x`, where `x` is the coefficient of `v_k ⊗ v_0` in the
//! highest-weight vector of `V_λ ⊂ V_ν ⊗ V_μ`. For `μ = ν` this is
//! `(−1)^k s^{(λ(λ+2) − μ(μ+2) − ν(ν+2))/2}`.

use std::sync::Arc;

use num_traits::One;

use super::cg::{blockwise, cg_system};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::memo::Memo;
use crate::qscalar::s_pow;
use crate::{QScalar, RationalMatrix, ScalarMatrix};

/// The permutation `v_a ⊗ w_b ↦ w_b ⊗ v_a` from `V_μ ⊗ V_ν` to `V_ν ⊗ V_μ`.
pub fn flip(mu: u32, nu: u32) -> ScalarMatrix {
    let (dm, dn) = (mu as usize + 1, nu as usize + 1);
    let mut out = Matrix::zeros(dm * dn, dm * dn);
    for a in 0..dm {
        for b in 0..dn {
            out[(b * dm + a, a * dn + b)] = QScalar::one();
        }
    }
    out
}

/// Exponent of s in the eigenvalue of `Ř^{μμ}` on `V_λ`.
pub fn casimir_exponent(mu: u32, nu: u32, lambda: u32) -> i64 {
    let c = |n: u32| n as i64 * (n as i64 + 2);
    (c(lambda) - c(mu) - c(nu)) / 2
}

/// The scalar by which the braiding acts on each summand, as `(λ, β_λ)`.
pub fn braiding_scalars(mu: u32, nu: u32) -> Result<Vec<(u32, QScalar)>> {
    let target = cg_system(nu, mu)?;
    let mut out = Vec::new();
    for lambda in cg_system(mu, nu)?.labels() {
        let k = (mu + nu - lambda) / 2;
        let hw = target
            .component(lambda)
            .ok_or_else(|| Error::DimensionMismatch(format!("V_{nu} ⊗ V_{mu} lacks twoJ = {lambda}")))?
            .highest_weight_vector();
        let x = &hw[k as usize * (mu as usize + 1)];
        let inv = x
            .try_inv()
            .ok_or_else(|| Error::BraidingConvention(format!("v_{k} ⊗ v_0 does not occur in the twoJ = {lambda} vector")))?;
        out.push((lambda, s_pow(mu as i64 * (nu as i64 - 2 * k as i64)) * inv));
    }
    Ok(out)
}

static BRAIDINGS: Memo<(u32, u32), Arc<ScalarMatrix>> = Memo::new();

/// `Ř^{μν}`. At `s = 1` it must reduce to [`flip`]; otherwise this fails with
/// [`Error::BraidingConvention`].
pub fn braiding(mu: u32, nu: u32) -> Result<Arc<ScalarMatrix>> {
    BRAIDINGS.get_or_try_insert(&(mu, nu), || {
        let scalars = braiding_scalars(mu, nu)?;
        let source = cg_system(mu, nu)?;
        let target = cg_system(nu, mu)?;
        let m = blockwise(&source, &target, |c, _| {
            Ok(scalars
                .iter()
                .find(|(l, _)| *l == c.two_j)
                .map(|(_, b)| b.clone())
                .expect("scalar for every label"))
        })?;
        let classical: RationalMatrix = m
            .try_map(|x| x.eval_classical())
            .map_err(|e| Error::BraidingConvention(e.to_string()))?;
        let expected: RationalMatrix = flip(mu, nu).map(|x| x.eval_classical().expect("integer entries"));
        if classical != expected {
            return Err(Error::BraidingConvention(format!("Ř^({mu},{nu}) at s = 1 is not the flip")));
        }
        Ok(Arc::new(m))
    })
}

/// `R^{μν} = flip ∘ Ř^{μν}`, an endomorphism of `V_μ ⊗ V_ν`.
pub fn r_matrix(mu: u32, nu: u32) -> Result<ScalarMatrix> {
    Ok(&flip(nu, mu) * braiding(mu, nu)?.as_ref())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::{int, q, q_minus_qinv, qfact, s};
    use crate::repcat::irrep::build_irrep;
    use crate::repcat::module::{is_intertwiner, tensor};

    /// Universal R-matrix in the factorized form
    /// `Θ = Σ_n (−1)^n q^{−n(n−1)/2} (q − q⁻¹)^n / [n]! · F^n ⊗ E^n`
    /// composed with `v_a ⊗ v_b ↦ q^{−wt(a) wt(b)/2} v_a ⊗ v_b` and the flip.
    /// It is the inverse braiding `V_n ⊗ V_m → V_m ⊗ V_n`.
    fn inverse_braiding_oracle(m: u32, n: u32) -> ScalarMatrix {
        let vm = build_irrep(m);
        let vn = build_irrep(n);
        let (dm, dn) = (vm.dim(), vn.dim());
        let mut theta = Matrix::zeros(dm * dn, dm * dn);
        let mut fpow = Matrix::identity(dm);
        let mut epow = Matrix::identity(dn);
        for k in 0..=m.min(n) as i64 {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            let coeff = sign * s_pow(-k * (k - 1)) * q_minus_qinv().pow(k as u32) / qfact(k as u32);
            theta = &theta + &fpow.kron(&epow).scale(&coeff);
            fpow = &fpow * &vm.f;
            epow = &epow * &vn.e;
        }
        let diag = Matrix::diagonal(
            (0..dm * dn)
                .map(|i| {
                    let (a, b) = (i / dn, i % dn);
                    s_pow(-(vm.weight(a)) * vn.weight(b))
                })
                .collect(),
        );
        &(&theta * &diag) * &flip(n, m)
    }

    #[test]
    fn fundamental_eigenvalues() {
        let scalars = braiding_scalars(1, 1).unwrap();
        assert_eq!(scalars, vec![(2, s()), (0, -s_pow(-3))]);
    }

    #[test]
    fn diagonal_scalars_are_casimir_powers() {
        for mu in 0..=4 {
            for (lambda, beta) in braiding_scalars(mu, mu).unwrap() {
                let k = (2 * mu - lambda) / 2;
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                assert_eq!(beta, sign * s_pow(casimir_exponent(mu, mu, lambda)), "μ = {mu}, λ = {lambda}");
            }
        }
    }

    #[test]
    fn inverse_of_universal_r() {
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 1)] {
            let b = braiding(m, n).unwrap();
            assert!((b.as_ref() * &inverse_braiding_oracle(m, n)).is_identity(), "({m}, {n})");
        }
    }

    #[test]
    fn braiding_is_module_map() {
        for (m, n) in [(1, 2), (2, 2), (3, 1)] {
            let src = tensor(build_irrep(m).as_ref(), build_irrep(n).as_ref());
            let dst = tensor(build_irrep(n).as_ref(), build_irrep(m).as_ref());
            assert!(is_intertwiner(&braiding(m, n).unwrap(), &src, &dst));
        }
    }

    fn id(n: u32) -> ScalarMatrix {
        Matrix::identity(n as usize + 1)
    }

    fn ybe_holds(a: u32, b: u32, c: u32) -> bool {
        // (Ř_bc ⊗ 1)(1 ⊗ Ř_ac)(Ř_ab ⊗ 1) = (1 ⊗ Ř_ab)(Ř_ac ⊗ 1)(1 ⊗ Ř_bc)
        let r = |x, y| braiding(x, y).unwrap().as_ref().clone();
        let lhs = &(&r(b, c).kron(&id(a)) * &id(b).kron(&r(a, c))) * &r(a, b).kron(&id(c));
        let rhs = &(&id(c).kron(&r(a, b)) * &r(a, c).kron(&id(b))) * &id(a).kron(&r(b, c));
        lhs == rhs
    }

    #[test]
    fn yang_baxter_mixed_labels() {
        for (a, b, c) in [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1), (1, 2, 2)] {
            assert!(ybe_holds(a, b, c), "({a}, {b}, {c})");
        }
    }

    #[test]
    fn r_matrix_fundamental() {
        let r = r_matrix(1, 1).unwrap();
        let qq = q();
        assert_eq!(r[(0, 0)], s());
        assert_eq!(r[(3, 3)], s());
        assert_eq!(r[(1, 1)], s_pow(-1));
        assert_eq!(r[(2, 2)], s_pow(-1));
        // off-diagonal entry (q − q⁻¹) s⁻¹ in one corner, zero in the other
        let off = (r[(1, 2)].clone(), r[(2, 1)].clone());
        assert!(off == (int(0), (qq.clone() - qq.try_inv().unwrap()) * s_pow(-1)) || off == ((qq.clone() - qq.try_inv().unwrap()) * s_pow(-1), int(0)));
    }

    #[test]
    fn flip_is_involution() {
        assert!((&flip(2, 3) * &flip(3, 2)).is_identity());
    }
}
