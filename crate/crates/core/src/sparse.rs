//! Incremental sparse Gaussian elimination for overdetermined exact systems.
//!
//! Equations are reduced against the current echelon rows as they arrive, so
//! redundant equations cost one reduction and never accumulate.

use std::collections::BTreeMap;

use crate::field::Field;

pub type SparseRow<F> = BTreeMap<usize, F>;

#[derive(Clone, Debug, PartialEq)]
pub enum SolveFailure<F> {
    /// Equation `equation` reduced to `0 = residual` with `residual ≠ 0`.
    Inconsistent { equation: usize, residual: F },
    /// These unknowns are not determined by the equations.
    Underdetermined { free: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct LinearSystem<F> {
    unknowns: usize,
    equations: usize,
    // leading column -> (row normalized to leading coefficient 1, rhs)
    pivots: BTreeMap<usize, (SparseRow<F>, F)>,
    inconsistency: Option<(usize, F)>,
}

impl<F: Field> LinearSystem<F> {
    pub fn new(unknowns: usize) -> Self {
        Self {
            unknowns,
            equations: 0,
            pivots: BTreeMap::new(),
            inconsistency: None,
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equations(&self) -> usize {
        self.equations
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `Σ coeffs[j] x_j = rhs`.
    pub fn add_equation(&mut self, coeffs: SparseRow<F>, rhs: F) {
        let index = self.equations;
        self.equations += 1;
        let mut row: SparseRow<F> = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        debug_assert!(row.keys().all(|&k| k < self.unknowns));
        let mut rhs = rhs;
        loop {
            let Some((&lead, lead_coeff)) = row.iter().next() else {
                if !rhs.is_zero() && self.inconsistency.is_none() {
                    self.inconsistency = Some((index, rhs));
                }
                return;
            };
            match self.pivots.get(&lead) {
                Some((prow, prhs)) => {
                    let factor = lead_coeff.clone();
                    for (&c, v) in prow {
                        let delta = factor.clone() * v.clone();
                        let entry = row.remove(&c).unwrap_or_else(F::zero) - delta;
                        if !entry.is_zero() {
                            row.insert(c, entry);
                        }
                    }
                    rhs = rhs - factor * prhs.clone();
                }
                None => {
                    let inv = lead_coeff.try_inv().expect("nonzero leading coefficient");
                    let normalized: SparseRow<F> =
                        row.into_iter().map(|(c, v)| (c, v * inv.clone())).collect();
                    self.pivots.insert(lead, (normalized, rhs * inv));
                    return;
                }
            }
        }
    }

    /// The unique solution, or why there is none.
    pub fn solve(&self) -> Result<Vec<F>, SolveFailure<F>> {
        if let Some((equation, residual)) = &self.inconsistency {
            return Err(SolveFailure::Inconsistent {
                equation: *equation,
                residual: residual.clone(),
            });
        }
        let free: Vec<usize> = (0..self.unknowns).filter(|c| !self.pivots.contains_key(c)).collect();
        if !free.is_empty() {
            return Err(SolveFailure::Underdetermined { free });
        }
        let mut values: Vec<Option<F>> = vec![None; self.unknowns];
        for (&lead, (row, rhs)) in self.pivots.iter().rev() {
            let mut v = rhs.clone();
            for (&c, coeff) in row.range(lead + 1..) {
                let known = values[c].as_ref().expect("back substitution order");
                v = v - coeff.clone() * known.clone();
            }
            values[lead] = Some(v);
        }
        Ok(values.into_iter().map(|v| v.expect("every unknown has a pivot")).collect())
    }
}
