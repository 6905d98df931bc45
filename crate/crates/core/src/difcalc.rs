//! First-order bicovariant differential calculus on the function algebra.
//!
//! Vector fields are free right modules on `t^i_L` and one-forms are free
//! left modules on `ω^L_i`, dual to each other by `ω^L_i(t^j_L) = δ_i^j`.
//! The differential is `da = t^i_L(a) ω^L_i`, with
//!
//! ```text
//! t^i_L(π^μ_a^b) = Σ_c π^μ_a^c π^μ(t^i)_c^b
//! t^i_R(π^μ_a^b) = Σ_c π^μ(t^i)_a^c π^μ_c^b
//! ω^R_i = π^Ψ_i^j ω^L_j
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::funalg::{add_term, FunElement, FunKey, FunctionAlgebra};
use crate::matrix::Matrix;
use crate::qlie::{QuantumLieAlgebra, SudberyFit, UqFunctional, ADJOINT, DIM};
use crate::{QScalar, ScalarMatrix};

/// `Σ_i a_i ω^L_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OneForm {
    pub coeffs: [FunElement; DIM],
}

/// `Σ_i t^i_L · a_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VectorField {
    pub coeffs: [FunElement; DIM],
}

impl OneForm {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `ω^L_i`.
    pub fn basis(i: usize) -> Self {
        let mut out = Self::zero();
        out.coeffs[i] = FunElement::unit();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FunElement::is_zero)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        }
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| self.coeffs[i].scale(c)),
        }
    }

    /// Whether every coefficient vanishes at `s = 1`.
    pub fn vanishes_classically(&self) -> Result<bool> {
        for c in &self.coeffs {
            if !c.eval_classical()?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(ε(a_0), ε(a_1), ε(a_2))`.
    pub fn counits(&self) -> [QScalar; DIM] {
        std::array::from_fn(|i| self.coeffs[i].counit())
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "w{i}: {c}")?;
        }
        Ok(())
    }
}

impl VectorField {
    /// `t^i_L`.
    pub fn basis(i: usize) -> Self {
        let mut out = Self::default();
        out.coeffs[i] = FunElement::unit();
        out
    }
}

/// Terms `x ⊗ y ω^L_i` of an element of `F ⊗ Ω`, keyed by `(x, y, i)`.
pub type LeftCoaction = BTreeMap<(FunKey, FunKey, usize), QScalar>;
/// Terms `x ω^R_i ⊗ y` of an element of `Ω ⊗ F`, keyed by `(x, i, y)`.
pub type RightCoaction = BTreeMap<(FunKey, usize, FunKey), QScalar>;
/// Terms `x ⊗ y ω^L_i ⊗ z` of an element of `F ⊗ Ω ⊗ F`.
pub type TwoSidedCoaction = BTreeMap<(FunKey, FunKey, usize, FunKey), QScalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicovarianceReport {
    pub left: bool,
    pub right: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizReport {
    /// `d(ab) − a·db − (da)·b`.
    pub classical_defect: OneForm,
    /// `d(ab) − c(a)·db − (da)·b`.
    pub generalized_defect: OneForm,
}

impl LeibnizReport {
    pub fn classical_limits_vanish(&self) -> Result<bool> {
        Ok(self.classical_defect.vanishes_classically()? && self.generalized_defect.vanishes_classically()?)
    }
}

/// Which index of the fitted `f` multiplies the incoming form in
/// `ω_j · a = a₍₁₎ f(a₍₂₎) ω_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FPlacement {
    /// `f[j][i]`, the coefficient matrix of the coproduct as fitted.
    Coproduct,
    /// `f[i][j]`.
    Transposed,
}

pub struct Calculus {
    pub alg: FunctionAlgebra,
    pub qla: QuantumLieAlgebra,
    /// The functional matrix `π^Ψ` and its inverse.
    adjoint: Vec<Vec<FunElement>>,
    adjoint_inverse: Vec<Vec<FunElement>>,
}

impl Calculus {
    pub fn new(max_two_j: u32) -> Result<Self> {
        let alg = FunctionAlgebra::new(max_two_j);
        let qla = QuantumLieAlgebra::l_operator_realization(max_two_j)?;
        let adjoint = FunctionAlgebra::functional_matrix(ADJOINT);
        let adjoint_inverse = alg.invert_fun_matrix(ADJOINT)?;
        Ok(Self {
            alg,
            qla,
            adjoint,
            adjoint_inverse,
        })
    }

    pub fn adjoint_inverse(&self) -> &[Vec<FunElement>] {
        &self.adjoint_inverse
    }

    fn field(&self, i: usize, a: &FunElement, left: bool) -> Result<FunElement> {
        let mut out = FunElement::zero();
        for (k, v) in a.terms() {
            let t = &self.qla.rep(k.two_j)?[i];
            let d = k.two_j as usize + 1;
            for c in 0..d {
                let (key, entry) = if left {
                    (FunKey::new(k.two_j, k.row, c), &t[(c, k.col)])
                } else {
                    (FunKey::new(k.two_j, c, k.col), &t[(k.row, c)])
                };
                if !entry.is_zero() {
                    out = &out + &FunElement::term(key, v * entry);
                }
            }
        }
        Ok(out)
    }

    /// `t^i_L(a) = a₍₁₎ t^i(a₍₂₎)`.
    pub fn left_field(&self, i: usize, a: &FunElement) -> Result<FunElement> {
        self.field(i, a, true)
    }

    /// `t^i_R(a) = t^i(a₍₁₎) a₍₂₎`.
    pub fn right_field(&self, i: usize, a: &FunElement) -> Result<FunElement> {
        self.field(i, a, false)
    }

    /// `v(a) = Σ_i t^i_L(a) b_i`.
    pub fn apply_field(&self, v: &VectorField, a: &FunElement) -> Result<FunElement> {
        let mut out = FunElement::zero();
        for i in 0..DIM {
            if !v.coeffs[i].is_zero() {
                out = &out + &self.alg.product(&self.left_field(i, a)?, &v.coeffs[i])?;
            }
        }
        Ok(out)
    }

    /// Returns the first `i` for which `t^i_L(a) = Σ_j t^j_R(a) π^Ψ_j^i`
    /// fails, checking the converse `t^i_R(a) = Σ_j t^j_L(a) ((π^Ψ)⁻¹)_j^i`
    /// when `converse` is set.
    pub fn check_left_right(&self, a: &FunElement, converse: bool) -> Result<Option<usize>> {
        let (from, matrix): (fn(&Self, usize, &FunElement) -> Result<FunElement>, _) = if converse {
            (Self::left_field, &self.adjoint_inverse)
        } else {
            (Self::right_field, &self.adjoint)
        };
        let sources: Vec<FunElement> = (0..DIM).map(|j| from(self, j, a)).collect::<Result<_>>()?;
        for i in 0..DIM {
            let target = if converse { self.right_field(i, a)? } else { self.left_field(i, a)? };
            let mut sum = FunElement::zero();
            for (j, src) in sources.iter().enumerate() {
                if !src.is_zero() {
                    sum = &sum + &self.alg.product(src, &matrix[j][i])?;
                }
            }
            if sum != target {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn exterior_d(&self, a: &FunElement) -> Result<OneForm> {
        Ok(OneForm {
            coeffs: [self.left_field(0, a)?, self.left_field(1, a)?, self.left_field(2, a)?],
        })
    }

    /// `Σ_i t^i_R(a) ω^R_i`, rewritten in the `ω^L` basis.
    pub fn exterior_d_right(&self, a: &FunElement) -> Result<OneForm> {
        let coeffs = [self.right_field(0, a)?, self.right_field(1, a)?, self.right_field(2, a)?];
        self.from_right_basis(&coeffs)
    }

    /// `Σ_j c_j ω^R_j` in the `ω^L` basis.
    pub fn from_right_basis(&self, c: &[FunElement; DIM]) -> Result<OneForm> {
        self.change_basis(c, &self.adjoint)
    }

    /// Coefficients of `ω` in the `ω^R` basis.
    pub fn to_right_basis(&self, omega: &OneForm) -> Result<[FunElement; DIM]> {
        Ok(self.change_basis(&omega.coeffs, &self.adjoint_inverse)?.coeffs)
    }

    fn change_basis(&self, c: &[FunElement; DIM], m: &[Vec<FunElement>]) -> Result<OneForm> {
        let mut out = OneForm::zero();
        for (j, cj) in c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            for k in 0..DIM {
                out.coeffs[k] = &out.coeffs[k] + &self.alg.product(cj, &m[j][k])?;
            }
        }
        Ok(out)
    }

    /// `b · ω`.
    pub fn left_multiply(&self, b: &FunElement, omega: &OneForm) -> Result<OneForm> {
        let mut out = OneForm::zero();
        for i in 0..DIM {
            if !omega.coeffs[i].is_zero() {
                out.coeffs[i] = self.alg.product(b, &omega.coeffs[i])?;
            }
        }
        Ok(out)
    }

    /// `ω(v) = Σ_i a_i b_i`.
    pub fn pair(&self, omega: &OneForm, v: &VectorField) -> Result<FunElement> {
        let mut out = FunElement::zero();
        for i in 0..DIM {
            if !omega.coeffs[i].is_zero() && !v.coeffs[i].is_zero() {
                out = &out + &self.alg.product(&omega.coeffs[i], &v.coeffs[i])?;
            }
        }
        Ok(out)
    }

    pub fn delta_left(&self, omega: &OneForm) -> LeftCoaction {
        let mut out = LeftCoaction::new();
        for (i, c) in omega.coeffs.iter().enumerate() {
            for ((x, y), v) in c.coproduct().terms() {
                add_term(&mut out, (*x, *y, i), v.clone());
            }
        }
        out
    }

    pub fn delta_right(&self, omega: &OneForm) -> Result<RightCoaction> {
        let mut out = RightCoaction::new();
        for (i, c) in self.to_right_basis(omega)?.iter().enumerate() {
            for ((x, y), v) in c.coproduct().terms() {
                add_term(&mut out, (*x, i, *y), v.clone());
            }
        }
        Ok(out)
    }

    /// `Δ_L(a db) = Δ(a)(1 ⊗ d)Δ(b)` and `Δ_R(a db) = Δ(a)(d ⊗ 1)Δ(b)`.
    pub fn check_bicovariance(&self, a: &FunElement, b: &FunElement) -> Result<BicovarianceReport> {
        let adb = self.left_multiply(a, &self.exterior_d(b)?)?;
        let (da, db) = (a.coproduct(), b.coproduct());

        let mut rhs_left = LeftCoaction::new();
        let mut rhs_right = RightCoaction::new();
        for i in 0..DIM {
            let l = self.alg.tensor_product(&da, &db.map_right(|k| self.left_field(i, &FunElement::basis(k)))?)?;
            for ((x, y), v) in l.terms() {
                add_term(&mut rhs_left, (*x, *y, i), v.clone());
            }
            let r = self.alg.tensor_product(&da, &db.map_left(|k| self.right_field(i, &FunElement::basis(k)))?)?;
            for ((x, y), v) in r.terms() {
                add_term(&mut rhs_right, (*x, i, *y), v.clone());
            }
        }
        Ok(BicovarianceReport {
            left: self.delta_left(&adb) == rhs_left,
            right: self.delta_right(&adb)? == rhs_right,
        })
    }

    /// `(1 ⊗ Δ_R)Δ_L(ω) = (Δ_L ⊗ 1)Δ_R(ω)`.
    pub fn check_coaction_compatibility(&self, omega: &OneForm) -> Result<bool> {
        let mut lhs = TwoSidedCoaction::new();
        for ((x, y, i), v) in self.delta_left(omega) {
            let mut single = OneForm::zero();
            single.coeffs[i] = FunElement::term(y, v);
            for ((p, j, r), w) in self.delta_right(&single)? {
                let form = self.from_right_basis(&unit_at(j, FunElement::basis(p)))?;
                for (k, c) in form.coeffs.iter().enumerate() {
                    for (key, u) in c.terms() {
                        add_term(&mut lhs, (x, *key, k, r), &w * u);
                    }
                }
            }
        }
        let mut rhs = TwoSidedCoaction::new();
        for ((p, j, r), w) in self.delta_right(omega)? {
            let form = self.from_right_basis(&unit_at(j, FunElement::term(p, w)))?;
            for ((x, y, k), u) in self.delta_left(&form) {
                add_term(&mut rhs, (x, y, k, r), u);
            }
        }
        Ok(lhs == rhs)
    }

    /// `γ^{ij} = tr(π^Ψ(t^i) π^Ψ(t^j))`.
    pub fn gamma_metric(&self) -> Result<ScalarMatrix> {
        let t = self.qla.rep(ADJOINT)?;
        Ok(Matrix::from_fn(DIM, DIM, |i, j| (&t[i] * &t[j]).trace()))
    }

    pub fn gamma_inverse(&self) -> Result<ScalarMatrix> {
        self.gamma_metric()?
            .inverse()
            .ok_or_else(|| Error::Singular("γ metric".into()))
    }

    /// `(γ⁻¹)_{ij} π^Ψ(t^j)_a^b ((π^Ψ)⁻¹)_b^c dπ^Ψ_c^a` for `i = 0, 1, 2`.
    pub fn completeness_reconstruction(&self) -> Result<[OneForm; DIM]> {
        let g_inv = self.gamma_inverse()?;
        let t = self.qla.rep(ADJOINT)?;
        let d = ADJOINT as usize + 1;
        // M^j = Σ_{a,b,c} π^Ψ(t^j)_a^b X_b^c dπ_c^a
        let mut pieces: Vec<OneForm> = Vec::with_capacity(DIM);
        for tj in t.iter() {
            let mut acc = OneForm::zero();
            for a in 0..d {
                for b in 0..d {
                    let s = &tj[(a, b)];
                    if s.is_zero() {
                        continue;
                    }
                    for c in 0..d {
                        let dpi = self.exterior_d(&self.adjoint[c][a])?;
                        acc = acc.add(&self.left_multiply(&self.adjoint_inverse[b][c], &dpi)?.scale(s));
                    }
                }
            }
            pieces.push(acc);
        }
        Ok(std::array::from_fn(|i| {
            (0..DIM).fold(OneForm::zero(), |acc, j| acc.add(&pieces[j].scale(&g_inv[(i, j)])))
        }))
    }

    /// Returns the indices `i` where the reconstruction of `ω^L_i` fails.
    pub fn check_completeness(&self) -> Result<Vec<usize>> {
        let rec = self.completeness_reconstruction()?;
        Ok((0..DIM).filter(|&i| rec[i] != OneForm::basis(i)).collect())
    }

    /// `a₍₁₎ u(a₍₂₎)`.
    pub fn convolve(&self, a: &FunElement, u: &UqFunctional) -> Result<FunElement> {
        let mut out = FunElement::zero();
        for ((x, y), v) in a.coproduct().terms() {
            let e = FunElement::basis(*y).evaluate(u)?;
            if !e.is_zero() {
                out = &out + &FunElement::term(*x, v * &e);
            }
        }
        Ok(out)
    }

    /// `ω · a` with `ω_j · a = a₍₁₎ f_j^i(a₍₂₎) ω_i`.
    pub fn right_multiply_form(&self, omega: &OneForm, a: &FunElement, fit: &SudberyFit) -> Result<OneForm> {
        self.right_multiply_placed(omega, a, fit, FPlacement::Coproduct)
    }

    pub fn right_multiply_placed(
        &self,
        omega: &OneForm,
        a: &FunElement,
        fit: &SudberyFit,
        placement: FPlacement,
    ) -> Result<OneForm> {
        let mut out = OneForm::zero();
        for j in 0..DIM {
            if omega.coeffs[j].is_zero() {
                continue;
            }
            for i in 0..DIM {
                let f = match placement {
                    FPlacement::Coproduct => &fit.f[j][i],
                    FPlacement::Transposed => &fit.f[i][j],
                };
                let factor = self.convolve(a, f)?;
                if !factor.is_zero() {
                    out.coeffs[i] = &out.coeffs[i] + &self.alg.product(&omega.coeffs[j], &factor)?;
                }
            }
        }
        Ok(out)
    }

    /// `c(a) = a₍₁₎ C(a₍₂₎)`.
    pub fn c_map(&self, a: &FunElement, fit: &SudberyFit) -> Result<FunElement> {
        self.convolve(a, &fit.c)
    }

    pub fn leibniz_analysis(&self, a: &FunElement, b: &FunElement, fit: &SudberyFit) -> Result<LeibnizReport> {
        self.leibniz_placed(a, b, fit, FPlacement::Coproduct)
    }

    pub fn leibniz_placed(
        &self,
        a: &FunElement,
        b: &FunElement,
        fit: &SudberyFit,
        placement: FPlacement,
    ) -> Result<LeibnizReport> {
        let d_ab = self.exterior_d(&self.alg.product(a, b)?)?;
        let db = self.exterior_d(b)?;
        let da_b = self.right_multiply_placed(&self.exterior_d(a)?, b, fit, placement)?;
        let a_db = self.left_multiply(a, &db)?;
        let ca_db = self.left_multiply(&self.c_map(a, fit)?, &db)?;
        Ok(LeibnizReport {
            classical_defect: d_ab.sub(&a_db).sub(&da_b),
            generalized_defect: d_ab.sub(&ca_db).sub(&da_b),
        })
    }
}

fn unit_at(j: usize, x: FunElement) -> [FunElement; DIM] {
    let mut out: [FunElement; DIM] = Default::default();
    out[j] = x;
    out
}

impl From<[FunElement; DIM]> for OneForm {
    fn from(coeffs: [FunElement; DIM]) -> Self {
        Self { coeffs }
    }
}
