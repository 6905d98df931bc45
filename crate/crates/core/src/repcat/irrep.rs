use std::sync::Arc;

use num_traits::Zero;

use super::hopf::{Generator, Representation};
use crate::matrix::Matrix;
use crate::memo::Memo;
use crate::qscalar::{qint, s_pow};
use crate::ScalarMatrix;

/// The irreducible module of dimension `two_j + 1`, basis `v_0 … v_{two_j}`
/// ordered from the highest weight down:
///
/// ```text
/// K v_k = q^(two_j − 2k) v_k
/// F v_k = [k + 1] v_{k+1}
/// E v_k = [two_j − k + 1] v_{k−1}
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct Irrep {
    pub two_j: u32,
    pub e: ScalarMatrix,
    pub f: ScalarMatrix,
    pub k: ScalarMatrix,
}

impl Irrep {
    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    /// The weight `two_j − 2k` of basis vector `v_k`.
    pub fn weight(&self, k: usize) -> i64 {
        self.two_j as i64 - 2 * k as i64
    }
}

impl Representation for Irrep {
    fn dim(&self) -> usize {
        Irrep::dim(self)
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

pub(crate) fn diagonal_inverse(k: &ScalarMatrix) -> ScalarMatrix {
    debug_assert!(k.is_diagonal());
    Matrix::diagonal(
        (0..k.rows())
            .map(|i| k[(i, i)].try_inv().expect("K is invertible"))
            .collect(),
    )
}

static IRREPS: Memo<u32, Arc<Irrep>> = Memo::new();

fn construct(two_j: u32) -> Irrep {
    let n = two_j as usize;
    let d = n + 1;
    let mut e = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    let mut k = Matrix::zeros(d, d);
    for idx in 0..d {
        k[(idx, idx)] = s_pow(2 * (n as i64 - 2 * idx as i64));
        if idx + 1 < d {
            f[(idx + 1, idx)] = qint(idx as i64 + 1);
        }
        if idx >= 1 {
            e[(idx - 1, idx)] = qint((n - idx + 1) as i64);
        }
    }
    debug_assert!(!k[(0, 0)].is_zero());
    Irrep { two_j, e, f, k }
}

/// The irrep with label `two_j`, memoized per process.
pub fn build_irrep(two_j: u32) -> Arc<Irrep> {
    IRREPS
        .get_or_try_insert::<std::convert::Infallible>(&two_j, || Ok(Arc::new(construct(two_j))))
        .unwrap_or_else(|e| match e {})
}
