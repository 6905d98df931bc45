use num_traits::{One, Zero};
use proptest::prelude::*;

use qcalc::qscalar::{int, s, s_pow};
use qcalc::{QScalar, Rational};

fn laurent() -> impl Strategy<Value = QScalar> {
    (-4i64..=2, prop::collection::vec(-5i64..=5, 0..5)).prop_map(|(lowest, coeffs)| {
        QScalar::from_laurent(lowest, coeffs.into_iter().map(|c| Rational::from_integer(c.into())).collect())
    })
}

fn scalar() -> impl Strategy<Value = QScalar> {
    (laurent(), laurent()).prop_map(|(n, d)| match d.try_inv() {
        Some(inv) => n * inv,
        None => n,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &QScalar::one(), a.clone());
    }

    #[test]
    fn inverses(a in scalar()) {
        match a.try_inv() {
            Some(inv) => prop_assert!((&a * &inv).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn bar_is_an_involutive_ring_map(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn display_parses_back(a in scalar()) {
        let text = a.to_string();
        let back: QScalar = text.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn classical_evaluation_is_multiplicative(a in laurent(), b in laurent()) {
        let ab = (&a * &b).eval_classical().unwrap();
        prop_assert_eq!(ab, a.eval_classical().unwrap() * b.eval_classical().unwrap());
    }
}

#[test]
fn bar_inverts_s() {
    assert_eq!(s().bar(), s_pow(-1));
    assert_eq!((s() + int(2)).bar(), s_pow(-1) + int(2));
}

#[test]
fn canonical_text() {
    let x: QScalar = "-2/3*s^-2 + 1 + 1/2*s^4".parse().unwrap();
    assert_eq!(x.to_string(), "-2/3*s^-2 + 1 + 1/2*s^4");
    let y: QScalar = "(1 + s^8)/(s^2 + s^6)".parse().unwrap();
    assert_eq!(y.to_string(), "(1 + s^8)/(s^2 + s^6)");
    assert!("1 + + s".parse::<QScalar>().is_err());
}
