//! The quantized algebra of functions, spanned by the matrix-element
//! functionals `π^μ_a^b`.
//!
//! The product of two functionals is the matrix element of the tensor
//! product representation, expanded through Clebsch-Gordan data:
//!
//! ```text
//! π^μ_a^b · π^ν_c^d = Σ_λ Σ_{i,j} embed_λ[(a,c), i] · project_λ[j, (b,d)] · π^λ_i^j
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::qlie::UqFunctional;
use crate::repcat::braiding::r_matrix;
use crate::repcat::cg::cg_system;
use crate::sparse::{LinearSystem, SparseRow};
use crate::{QScalar, Rational, ScalarMatrix};

/// The functional `π^{two_j}_row^col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunKey {
    pub two_j: u32,
    pub row: usize,
    pub col: usize,
}

impl FunKey {
    pub fn new(two_j: u32, row: usize, col: usize) -> Self {
        debug_assert!(row <= two_j as usize && col <= two_j as usize);
        Self { two_j, row, col }
    }

    /// All keys of the irrep `two_j`, row-major.
    pub fn all(two_j: u32) -> impl Iterator<Item = FunKey> {
        let d = two_j as usize + 1;
        (0..d).flat_map(move |row| (0..d).map(move |col| FunKey::new(two_j, row, col)))
    }
}

impl fmt::Display for FunKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi{}[{}][{}]", self.two_j, self.row, self.col)
    }
}

pub(crate) fn add_term<K: Ord>(map: &mut BTreeMap<K, QScalar>, key: K, value: QScalar) {
    if value.is_zero() {
        return;
    }
    match map.remove(&key) {
        Some(old) => {
            let sum = old + value;
            if !sum.is_zero() {
                map.insert(key, sum);
            }
        }
        None => {
            map.insert(key, value);
        }
    }
}

/// A finite combination of matrix-element functionals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FunElement {
    terms: BTreeMap<FunKey, QScalar>,
}

impl FunElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `π^0_0^0`, the unit.
    pub fn unit() -> Self {
        Self::basis(FunKey::new(0, 0, 0))
    }

    pub fn basis(key: FunKey) -> Self {
        Self::term(key, QScalar::one())
    }

    pub fn term(key: FunKey, c: QScalar) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, key, c);
        Self { terms }
    }

    /// Matrix element `T_a^b` of the fundamental.
    pub fn t(a: usize, b: usize) -> Self {
        Self::basis(FunKey::new(1, a, b))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (FunKey, QScalar)>) -> Self {
        let mut out = BTreeMap::new();
        for (k, v) in terms {
            add_term(&mut out, k, v);
        }
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FunKey, &QScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &FunKey) -> QScalar {
        self.terms.get(key).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn max_label(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.two_j).max()
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(&QScalar) -> QScalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, f(v))))
    }

    pub fn counit(&self) -> QScalar {
        self.terms
            .iter()
            .filter(|(k, _)| k.row == k.col)
            .fold(QScalar::zero(), |acc, (_, v)| acc + v)
    }

    /// `Δ(π^μ_a^b) = Σ_c π^μ_a^c ⊗ π^μ_c^b`, extended linearly.
    pub fn coproduct(&self) -> FunTensor {
        let mut out = BTreeMap::new();
        for (k, v) in &self.terms {
            for c in 0..=k.two_j as usize {
                add_term(
                    &mut out,
                    (FunKey::new(k.two_j, k.row, c), FunKey::new(k.two_j, c, k.col)),
                    v.clone(),
                );
            }
        }
        FunTensor { terms: out }
    }

    /// The pairing `⟨a, u⟩ = Σ coeff · π^μ(u)[row][col]`.
    pub fn evaluate(&self, u: &UqFunctional) -> Result<QScalar> {
        let mut acc = QScalar::zero();
        for (k, v) in &self.terms {
            acc = acc + v * &u.get(k.two_j)?[(k.row, k.col)];
        }
        Ok(acc)
    }

    /// Coefficients at `s = 1`.
    pub fn eval_classical(&self) -> Result<BTreeMap<FunKey, Rational>> {
        self.terms
            .iter()
            .map(|(k, v)| Ok((*k, v.eval_classical()?)))
            .filter(|r| !matches!(r, Ok((_, v)) if v.is_zero()))
            .collect()
    }

    /// `(twoJ, a, b, scalar)` records in key order.
    pub fn records(&self) -> Vec<(u32, usize, usize, String)> {
        self.terms
            .iter()
            .map(|(k, v)| (k.two_j, k.row, k.col, v.to_string()))
            .collect()
    }
}

impl fmt::Display for FunElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, v)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({v})*{k}")?;
        }
        Ok(())
    }
}

impl Add for &FunElement {
    type Output = FunElement;

    fn add(self, rhs: &FunElement) -> FunElement {
        let mut terms = self.terms.clone();
        for (k, v) in &rhs.terms {
            add_term(&mut terms, *k, v.clone());
        }
        FunElement { terms }
    }
}

impl Sub for &FunElement {
    type Output = FunElement;

    fn sub(self, rhs: &FunElement) -> FunElement {
        self + &(-rhs)
    }
}

impl Neg for &FunElement {
    type Output = FunElement;

    fn neg(self) -> FunElement {
        FunElement {
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }
}

/// An element of `F ⊗ F`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FunTensor {
    terms: BTreeMap<(FunKey, FunKey), QScalar>,
}

impl FunTensor {
    pub fn from_terms(terms: impl IntoIterator<Item = ((FunKey, FunKey), QScalar)>) -> Self {
        let mut out = BTreeMap::new();
        for (k, v) in terms {
            add_term(&mut out, k, v);
        }
        Self { terms: out }
    }

    /// `(f ⊗ id)` for a linear map given on basis functionals.
    pub fn map_left(&self, mut f: impl FnMut(FunKey) -> Result<FunElement>) -> Result<FunTensor> {
        let mut out = BTreeMap::new();
        for ((l, r), v) in &self.terms {
            for (k, c) in &f(*l)?.terms {
                add_term(&mut out, (*k, *r), v * c);
            }
        }
        Ok(FunTensor { terms: out })
    }

    /// `(id ⊗ f)` for a linear map given on basis functionals.
    pub fn map_right(&self, mut f: impl FnMut(FunKey) -> Result<FunElement>) -> Result<FunTensor> {
        let mut out = BTreeMap::new();
        for ((l, r), v) in &self.terms {
            for (k, c) in &f(*r)?.terms {
                add_term(&mut out, (*l, *k), v * c);
            }
        }
        Ok(FunTensor { terms: out })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(FunKey, FunKey), &QScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(ε ⊗ id)`.
    pub fn counit_left(&self) -> FunElement {
        FunElement::from_terms(
            self.terms
                .iter()
                .filter(|((l, _), _)| l.row == l.col)
                .map(|((_, r), v)| (*r, v.clone())),
        )
    }

    /// `(id ⊗ ε)`.
    pub fn counit_right(&self) -> FunElement {
        FunElement::from_terms(
            self.terms
                .iter()
                .filter(|((_, r), _)| r.row == r.col)
                .map(|((l, _), v)| (*l, v.clone())),
        )
    }
}

static BASIS_PRODUCTS: Memo<(FunKey, FunKey), Arc<FunElement>> = Memo::new();

fn basis_product(x: FunKey, y: FunKey) -> Result<Arc<FunElement>> {
    BASIS_PRODUCTS.get_or_try_insert(&(x, y), || {
        let cg = cg_system(x.two_j, y.two_j)?;
        let dn = y.two_j as usize + 1;
        let (r, c) = (x.row * dn + y.row, x.col * dn + y.col);
        let mut out = BTreeMap::new();
        for comp in &cg.components {
            let d = comp.two_j as usize + 1;
            for i in 0..d {
                let e = &comp.embed[(r, i)];
                if e.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let p = &comp.project[(j, c)];
                    if !p.is_zero() {
                        add_term(&mut out, FunKey::new(comp.two_j, i, j), e * p);
                    }
                }
            }
        }
        Ok(Arc::new(FunElement { terms: out }))
    })
}

/// The function algebra with products restricted to factors of label at
/// most `max_two_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FunctionAlgebra {
    pub max_two_j: u32,
}

impl FunctionAlgebra {
    pub fn new(max_two_j: u32) -> Self {
        Self { max_two_j }
    }

    fn admit(&self, a: &FunElement) -> Result<()> {
        match a.max_label() {
            Some(l) if l > self.max_two_j => Err(Error::Cutoff {
                two_j: l,
                max_two_j: self.max_two_j,
            }),
            _ => Ok(()),
        }
    }

    pub fn product(&self, a: &FunElement, b: &FunElement) -> Result<FunElement> {
        self.admit(a)?;
        self.admit(b)?;
        let mut out = BTreeMap::new();
        for (ka, va) in &a.terms {
            for (kb, vb) in &b.terms {
                let coeff = va * vb;
                for (k, v) in &basis_product(*ka, *kb)?.terms {
                    add_term(&mut out, *k, &coeff * v);
                }
            }
        }
        Ok(FunElement { terms: out })
    }

    /// Componentwise product in `F ⊗ F`.
    pub fn tensor_product(&self, x: &FunTensor, y: &FunTensor) -> Result<FunTensor> {
        let mut out = BTreeMap::new();
        for ((xl, xr), xv) in &x.terms {
            for ((yl, yr), yv) in &y.terms {
                let left = self.product(&FunElement::basis(*xl), &FunElement::basis(*yl))?;
                let right = self.product(&FunElement::basis(*xr), &FunElement::basis(*yr))?;
                let coeff = xv * yv;
                for (l, lv) in &left.terms {
                    for (r, rv) in &right.terms {
                        add_term(&mut out, (*l, *r), &(&coeff * lv) * rv);
                    }
                }
            }
        }
        Ok(FunTensor { terms: out })
    }

    /// The matrix `(π^μ_a^b)_{a,b}` of functionals.
    pub fn functional_matrix(two_j: u32) -> Vec<Vec<FunElement>> {
        let d = two_j as usize + 1;
        (0..d)
            .map(|a| (0..d).map(|b| FunElement::basis(FunKey::new(two_j, a, b))).collect())
            .collect()
    }

    /// `(Σ_b m_a^b X_b^c)` for square matrices of functionals.
    pub fn matrix_product(&self, m: &[Vec<FunElement>], x: &[Vec<FunElement>]) -> Result<Vec<Vec<FunElement>>> {
        let n = m.len();
        let mut out = vec![vec![FunElement::zero(); n]; n];
        for (a, row) in out.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                for b in 0..n {
                    *entry = &*entry + &self.product(&m[a][b], &x[b][c])?;
                }
            }
        }
        Ok(out)
    }

    /// The inverse of the functional matrix of `two_j`, with entries in the
    /// span of the same functionals, checked on both sides.
    pub fn invert_fun_matrix(&self, two_j: u32) -> Result<Vec<Vec<FunElement>>> {
        let d = two_j as usize + 1;
        let m = Self::functional_matrix(two_j);
        let ansatz: Vec<FunKey> = FunKey::all(two_j).collect();
        let unknown = |b: usize, k: usize| b * ansatz.len() + k;
        let mut x = vec![vec![FunElement::zero(); d]; d];
        for c in 0..d {
            let mut system = LinearSystem::new(d * ansatz.len());
            for a in 0..d {
                // Σ_b Σ_k x_{b,k} (π_a^b · π_k) = δ_ac · unit, one equation per output key
                let mut rows: BTreeMap<FunKey, SparseRow<QScalar>> = BTreeMap::new();
                for b in 0..d {
                    for (k, key) in ansatz.iter().enumerate() {
                        let p = self.product(&m[a][b], &FunElement::basis(*key))?;
                        for (out_key, v) in &p.terms {
                            add_term(rows.entry(*out_key).or_default(), unknown(b, k), v.clone());
                        }
                    }
                }
                let unit_key = FunKey::new(0, 0, 0);
                rows.entry(unit_key).or_default();
                for (out_key, row) in rows {
                    let rhs = if out_key == unit_key && a == c { QScalar::one() } else { QScalar::zero() };
                    system.add_equation(row, rhs);
                }
            }
            let sol = system
                .solve()
                .map_err(|e| Error::Singular(format!("functional matrix of twoJ = {two_j}: {e:?}")))?;
            for (b, row) in x.iter_mut().enumerate() {
                row[c] = FunElement::from_terms(ansatz.iter().enumerate().map(|(k, key)| (*key, sol[unknown(b, k)].clone())));
            }
        }
        let identity = |p: &Vec<Vec<FunElement>>| {
            p.iter().enumerate().all(|(a, row)| {
                row.iter()
                    .enumerate()
                    .all(|(c, e)| *e == if a == c { FunElement::unit() } else { FunElement::zero() })
            })
        };
        if !identity(&self.matrix_product(&m, &x)?) || !identity(&self.matrix_product(&x, &m)?) {
            return Err(Error::Singular(format!("functional matrix of twoJ = {two_j} has no two-sided inverse")));
        }
        Ok(x)
    }

    /// Checks `T_a^b T_c^d = (R⁻¹)_{ac}^{a'c'} T_{c'}^{d'} T_{a'}^{b'} R_{b'd'}^{bd}`
    /// with `R_{ab}^{cd} = r[(a,b), (c,d)]`, returning the status of each of
    /// the 16 relations keyed by `(a, b, c, d)`.
    pub fn rtt_check_with(&self, r: &ScalarMatrix) -> Result<Vec<((usize, usize, usize, usize), bool)>> {
        let r_inv = r.inverse().ok_or_else(|| Error::Singular("R-matrix".into()))?;
        let idx = |x: usize, y: usize| x * 2 + y;
        let mut out = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        let lhs = self.product(&FunElement::t(a, b), &FunElement::t(c, d))?;
                        let mut rhs = FunElement::zero();
                        for a2 in 0..2 {
                            for c2 in 0..2 {
                                let ri = &r_inv[(idx(a, c), idx(a2, c2))];
                                if ri.is_zero() {
                                    continue;
                                }
                                for b2 in 0..2 {
                                    for d2 in 0..2 {
                                        let rr = &r[(idx(b2, d2), idx(b, d))];
                                        if rr.is_zero() {
                                            continue;
                                        }
                                        let p = self.product(&FunElement::t(c2, d2), &FunElement::t(a2, b2))?;
                                        rhs = &rhs + &p.scale(&(ri * rr));
                                    }
                                }
                            }
                        }
                        out.push(((a, b, c, d), lhs == rhs));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn rtt_check(&self) -> Result<Vec<((usize, usize, usize, usize), bool)>> {
        self.rtt_check_with(&r_matrix(1, 1)?)
    }
}
