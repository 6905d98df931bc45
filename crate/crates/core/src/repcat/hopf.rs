//! Hopf structure of U_q(sl₂) on generators.
//!
//! Conventions (used everywhere in the crate):
//!
//! ```text
//! K E K⁻¹ = q² E      K F K⁻¹ = q⁻² F      [E, F] = (K − K⁻¹)/(q − q⁻¹)
//! Δ(E) = E⊗1 + K⊗E    Δ(F) = F⊗K⁻¹ + 1⊗F   Δ(K) = K⊗K
//! S(E) = −K⁻¹E        S(F) = −FK           S(K) = K⁻¹
//! S⁻¹(E) = −EK⁻¹      S⁻¹(F) = −KF         S⁻¹(K) = K⁻¹
//! ```

use std::fmt;

use num_traits::One;

use crate::matrix::Matrix;
use crate::qscalar::int;
use crate::{QScalar, ScalarMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E,
    F,
    K,
}

pub const GENERATORS: [Generator; 3] = [Generator::E, Generator::F, Generator::K];

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Generator::E => "E",
            Generator::F => "F",
            Generator::K => "K",
        };
        f.write_str(name)
    }
}

/// Anything carrying matrices for E, F and an invertible diagonal K.
pub trait Representation {
    fn dim(&self) -> usize;
    fn generator(&self, g: Generator) -> &ScalarMatrix;
    fn k_inverse(&self) -> ScalarMatrix;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    E,
    F,
    K,
    KInv,
}

/// `sign · letters[0] · letters[1] · …`; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub sign: i64,
    pub letters: Vec<Letter>,
}

impl Word {
    fn new(sign: i64, letters: &[Letter]) -> Self {
        Self {
            sign,
            letters: letters.to_vec(),
        }
    }

    pub fn unit() -> Self {
        Self::new(1, &[])
    }

    pub fn matrix<R: Representation + ?Sized>(&self, rep: &R) -> ScalarMatrix {
        let mut m = Matrix::identity(rep.dim());
        for l in &self.letters {
            let factor = match l {
                Letter::E => rep.generator(Generator::E).clone(),
                Letter::F => rep.generator(Generator::F).clone(),
                Letter::K => rep.generator(Generator::K).clone(),
                Letter::KInv => rep.k_inverse(),
            };
            m = &m * &factor;
        }
        if self.sign == 1 {
            m
        } else {
            m.scale(&int(self.sign))
        }
    }
}

/// Δ(x) as a list of `(x₍₁₎, x₍₂₎)`.
pub fn coproduct(x: Generator) -> Vec<(Word, Word)> {
    use Letter::*;
    match x {
        Generator::E => vec![(Word::new(1, &[E]), Word::unit()), (Word::new(1, &[K]), Word::new(1, &[E]))],
        Generator::F => vec![(Word::new(1, &[F]), Word::new(1, &[KInv])), (Word::unit(), Word::new(1, &[F]))],
        Generator::K => vec![(Word::new(1, &[K]), Word::new(1, &[K]))],
    }
}

pub fn antipode(x: Generator) -> Word {
    use Letter::*;
    match x {
        Generator::E => Word::new(-1, &[KInv, E]),
        Generator::F => Word::new(-1, &[F, K]),
        Generator::K => Word::new(1, &[KInv]),
    }
}

pub fn antipode_inverse(x: Generator) -> Word {
    use Letter::*;
    match x {
        Generator::E => Word::new(-1, &[E, KInv]),
        Generator::F => Word::new(-1, &[K, F]),
        Generator::K => Word::new(1, &[KInv]),
    }
}

/// S⁻¹ applied to a word: reverses the order and maps each letter.
pub fn antipode_inverse_word(w: &Word) -> Word {
    let mut sign = w.sign;
    let mut letters = Vec::new();
    for l in w.letters.iter().rev() {
        let image = match l {
            Letter::E => antipode_inverse(Generator::E),
            Letter::F => antipode_inverse(Generator::F),
            Letter::K => antipode_inverse(Generator::K),
            Letter::KInv => Word::new(1, &[Letter::K]),
        };
        sign *= image.sign;
        letters.extend(image.letters);
    }
    Word { sign, letters }
}

/// Checks the three defining relations exactly; returns the first violated one.
pub fn check_relations<R: Representation + ?Sized>(rep: &R) -> Result<(), String> {
    let e = rep.generator(Generator::E);
    let f = rep.generator(Generator::F);
    let k = rep.generator(Generator::K);
    let kinv = rep.k_inverse();
    let q2 = crate::qscalar::s_pow(4);
    if &(k * e) != &(e * k).scale(&q2) {
        return Err("K E = q² E K".into());
    }
    if &(k * f) != &(f * k).scale(&q2.try_inv().expect("q² ≠ 0")) {
        return Err("K F = q⁻² F K".into());
    }
    let lhs = &(e * f) - &(f * e);
    let rhs = (k - &kinv).scale(&(QScalar::one() / crate::qscalar::q_minus_qinv()));
    if lhs != rhs {
        return Err("E F − F E = (K − K⁻¹)/(q − q⁻¹)".into());
    }
    Ok(())
}
