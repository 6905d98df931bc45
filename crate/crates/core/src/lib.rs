//! Exact computer algebra for the quantum Lie algebra of sl₂ and the
//! first-order differential calculus it generates on the quantum group.
//!
//! All arithmetic happens in ℚ(s) with q = s². The arithmetic and linear
//! algebra kernels are generic over [`Field`]; the representation theory is
//! written for [`QScalar`].

pub mod difcalc;
pub mod error;
mod memo;
pub mod field;
pub mod funalg;
pub mod matrix;
pub mod poly;
pub mod qlie;
pub mod qscalar;
pub mod ratfunc;
pub mod repcat;
pub mod sparse;
pub mod verifier;

pub use error::{Error, Result};
pub use field::Field;
pub use matrix::Matrix;
pub use poly::Poly;
pub use ratfunc::RatFunc;

/// Exact rationals, the coefficient field of [`QScalar`].
pub type Rational = num_rational::BigRational;

/// An element of ℚ(s), the universal coefficient type.
pub type QScalar = RatFunc<Rational>;

/// Matrices over ℚ(s).
pub type ScalarMatrix = Matrix<QScalar>;

/// Matrices over ℚ, used for classical-limit comparisons.
pub type RationalMatrix = Matrix<Rational>;
