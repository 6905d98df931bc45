use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::{QScalar, RationalMatrix, ScalarMatrix};

/// An element of U_q(sl₂) known only through its action `π^μ(u)` on a finite
/// set of irreps.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct UqFunctional {
    family: BTreeMap<u32, ScalarMatrix>,
}

impl UqFunctional {
    pub fn new() -> Self {
        Self::default()
    }

    /// The unit element on the given labels.
    pub fn unit(labels: impl IntoIterator<Item = u32>) -> Self {
        Self::scalar(QScalar::one(), labels)
    }

    pub fn zero(labels: impl IntoIterator<Item = u32>) -> Self {
        Self::scalar(QScalar::zero(), labels)
    }

    pub fn scalar(c: QScalar, labels: impl IntoIterator<Item = u32>) -> Self {
        let family = labels
            .into_iter()
            .map(|l| (l, Matrix::identity(l as usize + 1).scale(&c)))
            .collect();
        Self { family }
    }

    pub fn insert(&mut self, two_j: u32, m: ScalarMatrix) {
        debug_assert_eq!(m.rows(), two_j as usize + 1);
        self.family.insert(two_j, m);
    }

    pub fn get(&self, two_j: u32) -> Result<&ScalarMatrix> {
        self.family.get(&two_j).ok_or(Error::UnsupportedEvaluation { two_j })
    }

    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.family.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &ScalarMatrix)> {
        self.family.iter().map(|(k, v)| (*k, v))
    }

    pub fn eval_classical(&self) -> Result<BTreeMap<u32, RationalMatrix>> {
        self.family
            .iter()
            .map(|(&l, m)| Ok((l, m.try_map(|x| x.eval_classical())?)))
            .collect()
    }

    /// Whether each matrix is `c_μ · 1`, returning the scalars.
    pub fn scalars(&self) -> Option<BTreeMap<u32, QScalar>> {
        self.family
            .iter()
            .map(|(&l, m)| {
                let c = m[(0, 0)].clone();
                (m.is_diagonal() && (0..m.rows()).all(|r| m[(r, r)] == c)).then_some((l, c))
            })
            .collect()
    }
}

impl FromIterator<(u32, ScalarMatrix)> for UqFunctional {
    fn from_iter<I: IntoIterator<Item = (u32, ScalarMatrix)>>(iter: I) -> Self {
        Self {
            family: iter.into_iter().collect(),
        }
    }
}
