//! Representations of U_q(sl₂): irreducibles, tensor products, duals,
//! Clebsch-Gordan decompositions and the braiding.

pub mod braiding;
pub mod cg;
pub mod hopf;
pub mod irrep;
pub mod module;

pub use braiding::{braiding, braiding_scalars, flip, r_matrix};
pub use cg::{cg_system, CgSystem};
pub use hopf::{Generator, Representation};
pub use irrep::{build_irrep, Irrep};
pub use module::{decompose, dual_rep, right_dual_rep, tensor, Component, ModuleRep};
