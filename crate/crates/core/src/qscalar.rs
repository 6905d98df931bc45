//! The coefficient field ℚ(s) with q = s², and the standard q-numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::{QScalar, Rational};

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a scalar.
pub fn int(n: i64) -> QScalar {
    QScalar::from_i64(n)
}

/// The generator `s`.
pub fn s() -> QScalar {
    s_pow(1)
}

/// `s^k`; `q^m` is `s_pow(2 * m)`.
pub fn s_pow(k: i64) -> QScalar {
    QScalar::monomial(Rational::one(), k)
}

/// `q = s²`.
pub fn q() -> QScalar {
    s_pow(2)
}

/// `q - q⁻¹`.
pub fn q_minus_qinv() -> QScalar {
    s_pow(2) - s_pow(-2)
}

/// The symmetric q-integer `[n] = (qⁿ − q⁻ⁿ)/(q − q⁻¹) = q^(n−1) + q^(n−3) + … + q^(1−n)`.
pub fn qint(n: i64) -> QScalar {
    if n == 0 {
        return QScalar::zero();
    }
    let m = n.unsigned_abs() as usize;
    // exponents of s: 2(m-1), 2(m-3), ..., -2(m-1)
    let mut coeffs = vec![Rational::zero(); 4 * (m - 1) + 1];
    for j in 0..m {
        coeffs[4 * j] = Rational::one();
    }
    let value = QScalar::from_laurent(-2 * (m as i64 - 1), coeffs);
    if n < 0 {
        -value
    } else {
        value
    }
}

/// `[n]! = [1][2]…[n]`, with `[0]! = 1`.
pub fn qfact(n: u32) -> QScalar {
    (1..=n as i64).fold(QScalar::one(), |acc, k| acc * qint(k))
}

/// Gaussian binomial `[n choose k] = [n]! / ([k]! [n−k]!)`.
pub fn qbinom(n: u32, k: u32) -> QScalar {
    if k > n {
        return QScalar::zero();
    }
    qfact(n) / (qfact(k) * qfact(n - k))
}

impl QScalar {
    /// Value in the classical limit `s = 1`.
    pub fn eval_classical(&self) -> Result<Rational> {
        self.eval_at(&Rational::one())
            .map_err(|_| Error::ClassicalPole(self.to_string()))
    }

    /// Value at an arbitrary rational point, used to spot-check identities.
    pub fn eval_rational(&self, x: &Rational) -> Result<Rational> {
        self.eval_at(x)
    }
}
