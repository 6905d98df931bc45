//! Fit of `Δ(t^i) = C ⊗ t^i + Σ_j t^j ⊗ f_j^i` on pairs of irreps.
//!
//! The unknowns are the full matrices `π^μ(C)` and `π^ν(f_j^i)`; all pairs
//! are solved in one system so the fitted family is consistent by
//! construction. Without further constraints `C → C + γ_j t^j`,
//! `f_j^i → f_j^i − γ_j t^i` is a solution family, so centrality of `C` is
//! imposed as extra equations.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::functional::UqFunctional;
use super::lop::{l_matrices, tensor_action};
use super::DIM;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::repcat::hopf::{Representation, GENERATORS};
use crate::repcat::irrep::build_irrep;
use crate::sparse::{LinearSystem, SolveFailure, SparseRow};
use crate::QScalar;

#[derive(Clone, Debug, PartialEq)]
pub struct SudberyFit {
    pub pairs: Vec<(u32, u32)>,
    pub c: UqFunctional,
    /// `f[j][i]`, the right factor paired with `t^j` in `Δ(t^i)`.
    pub f: [[UqFunctional; DIM]; DIM],
    pub unknowns: usize,
    pub equations: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Unknown {
    C { mu: u32, row: usize, col: usize },
    F { nu: u32, j: usize, i: usize, row: usize, col: usize },
}

struct Indexer(BTreeMap<Unknown, usize>);

impl Indexer {
    fn index(&mut self, u: Unknown) -> usize {
        let next = self.0.len();
        *self.0.entry(u).or_insert(next)
    }
}

fn accumulate(row: &mut SparseRow<QScalar>, k: usize, v: &QScalar) {
    if v.is_zero() {
        return;
    }
    let e = row.remove(&k).unwrap_or_else(QScalar::zero) + v;
    if !e.is_zero() {
        row.insert(k, e);
    }
}

pub fn fit_sudbery(pairs: &[(u32, u32)]) -> Result<SudberyFit> {
    let lefts: BTreeSet<u32> = pairs.iter().map(|p| p.0).collect();
    let rights: BTreeSet<u32> = pairs.iter().map(|p| p.1).collect();

    let mut idx = Indexer(BTreeMap::new());
    for &mu in &lefts {
        let d = mu as usize + 1;
        for row in 0..d {
            for col in 0..d {
                idx.index(Unknown::C { mu, row, col });
            }
        }
    }
    for &nu in &rights {
        let d = nu as usize + 1;
        for j in 0..DIM {
            for i in 0..DIM {
                for row in 0..d {
                    for col in 0..d {
                        idx.index(Unknown::F { nu, j, i, row, col });
                    }
                }
            }
        }
    }

    let mut equations: Vec<(SparseRow<QScalar>, QScalar)> = Vec::new();
    for &(mu, nu) in pairs {
        let tm = l_matrices(mu)?;
        let tn = l_matrices(nu)?;
        let (dm, dn) = (mu as usize + 1, nu as usize + 1);
        for i in 0..DIM {
            let action = tensor_action(mu, nu, i)?;
            for x in 0..dm {
                for y in 0..dm {
                    for p in 0..dn {
                        for r in 0..dn {
                            let mut row = SparseRow::new();
                            let c = idx.index(Unknown::C { mu, row: x, col: y });
                            accumulate(&mut row, c, &tn[i][(p, r)]);
                            for (j, tj) in tm.iter().enumerate() {
                                let f = idx.index(Unknown::F { nu, j, i, row: p, col: r });
                                accumulate(&mut row, f, &tj[(x, y)]);
                            }
                            equations.push((row, action[(x * dn + p, y * dn + r)].clone()));
                        }
                    }
                }
            }
        }
    }
    for &mu in &lefts {
        let v = build_irrep(mu);
        let d = v.dim();
        for g in GENERATORS {
            let m = v.generator(g);
            for x in 0..d {
                for y in 0..d {
                    // (C M − M C)[x][y] = 0
                    let mut row = SparseRow::new();
                    for z in 0..d {
                        accumulate(&mut row, idx.index(Unknown::C { mu, row: x, col: z }), &m[(z, y)]);
                        accumulate(&mut row, idx.index(Unknown::C { mu, row: z, col: y }), &-m[(x, z)].clone());
                    }
                    equations.push((row, QScalar::zero()));
                }
            }
        }
    }

    let unknowns = idx.0.len();
    let mut system = LinearSystem::new(unknowns);
    let equation_count = equations.len();
    for (row, rhs) in equations {
        system.add_equation(row, rhs);
    }
    let solution = system.solve().map_err(|failure| match failure {
        SolveFailure::Inconsistent { equation, residual } => Error::NotSudberyForm {
            residual: format!("equation {equation}: 0 = {residual}"),
        },
        SolveFailure::Underdetermined { free } => Error::NotSudberyForm {
            residual: format!("{} undetermined unknowns", free.len()),
        },
    })?;

    let value = |u: Unknown| solution[idx.0[&u]].clone();
    let c: UqFunctional = lefts
        .iter()
        .map(|&mu| {
            let d = mu as usize + 1;
            (mu, Matrix::from_fn(d, d, |row, col| value(Unknown::C { mu, row, col })))
        })
        .collect();
    let f = std::array::from_fn(|j| {
        std::array::from_fn(|i| {
            rights
                .iter()
                .map(|&nu| {
                    let d = nu as usize + 1;
                    (nu, Matrix::from_fn(d, d, |row, col| value(Unknown::F { nu, j, i, row, col })))
                })
                .collect()
        })
    });
    Ok(SudberyFit {
        pairs: pairs.to_vec(),
        c,
        f,
        unknowns,
        equations: equation_count,
    })
}

impl SudberyFit {
    /// Recomputes `Δ(t^i) − C ⊗ t^i − Σ_j t^j ⊗ f_j^i` on every pair.
    pub fn residual_is_zero(&self) -> Result<bool> {
        for &(mu, nu) in &self.pairs {
            let tm = l_matrices(mu)?;
            let tn = l_matrices(nu)?;
            for i in 0..DIM {
                let mut rhs = self.c.get(mu)?.kron(&tn[i]);
                for j in 0..DIM {
                    rhs = &rhs + &tm[j].kron(self.f[j][i].get(nu)?);
                }
                if rhs != tensor_action(mu, nu, i)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether every `π^μ(C)` commutes with E, F and K.
    pub fn c_is_central(&self) -> bool {
        self.c.iter().all(|(mu, m)| {
            let v = build_irrep(mu);
            GENERATORS.iter().all(|&g| m.commutes_with(v.generator(g)))
        })
    }

    /// Whether `C → 1` and `f_j^i → δ_j^i` at `s = 1`.
    pub fn classical_limit_is_trivial(&self) -> Result<bool> {
        if !self.c.eval_classical()?.values().all(|m| m.is_identity()) {
            return Ok(false);
        }
        for j in 0..DIM {
            for i in 0..DIM {
                for (_, m) in self.f[j][i].eval_classical()? {
                    let ok = if i == j { m.is_identity() } else { m.is_zero() };
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `ε(f_j^i) = δ_j^i`, read on the trivial irrep when it is covered.
    pub fn counit_consistent(&self) -> Result<bool> {
        for j in 0..DIM {
            for i in 0..DIM {
                let e = &self.f[j][i].get(0)?[(0, 0)];
                let expected = if i == j { QScalar::one() } else { QScalar::zero() };
                if *e != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
