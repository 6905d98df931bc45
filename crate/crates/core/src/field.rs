//! The scalar abstraction shared by the polynomial, rational-function and
//! matrix kernels.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative field with exact (or, for `f64`, approximate) arithmetic.
///
/// Everything above this trait is written against it, so the same Gaussian
/// elimination runs over `BigRational`, over `QScalar` and over `f64`.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self>;

    /// Embeds a small integer.
    fn from_i64(n: i64) -> Self;

    /// Whether the value is exactly `1`.
    fn is_one_value(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
}

impl Field for f64 {
    fn try_inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }

    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_inverse() {
        let x = BigRational::from_i64(-3);
        assert_eq!(x.try_inv().unwrap() * x, BigRational::one());
        assert!(BigRational::zero().try_inv().is_none());
    }

    #[test]
    fn float_inverse() {
        assert_eq!(4.0_f64.try_inv(), Some(0.25));
        assert_eq!(0.0_f64.try_inv(), None);
    }
}
