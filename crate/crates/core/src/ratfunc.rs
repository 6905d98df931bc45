//! Rational functions in one indeterminate `s`, kept in reduced form.
//!
//! The canonical form is `num / den` with `gcd(num, den) = 1` and `den`
//! monic, so two values are equal exactly when their representations are.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn constant(c: F) -> Self {
        Self {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(num: Poly<F>) -> Self {
        Self {
            num,
            den: Poly::one(),
        }
    }

    /// `num / den`, reduced.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    /// `c · s^k` for any integer `k`.
    pub fn monomial(c: F, k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::monomial(c, k as usize))
        } else {
            Self::canonical(Poly::constant(c), Poly::monomial(F::one(), k.unsigned_abs() as usize))
        }
    }

    /// `Σ_i coeffs[i] · s^(lowest + i)`, cleared into numerator/denominator form.
    pub fn from_laurent(lowest: i64, coeffs: Vec<F>) -> Self {
        let body = Poly::from_coeffs(coeffs);
        if lowest >= 0 {
            Self::from_poly(body.shift_up(lowest as usize))
        } else {
            Self::canonical(body, Poly::monomial(F::one(), lowest.unsigned_abs() as usize))
        }
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    /// Terms `(exponent, coefficient)` in ascending order when the value is a
    /// Laurent polynomial (denominator a power of `s`).
    pub fn laurent_terms(&self) -> Option<Vec<(i64, F)>> {
        let k = self.den.as_unit_monomial()? as i64;
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as i64 - k, c.clone()))
                .collect(),
        )
    }

    pub fn is_laurent(&self) -> bool {
        self.den.as_unit_monomial().is_some()
    }

    /// The value as a constant of the coefficient field, if it is one.
    pub fn as_constant(&self) -> Option<F> {
        match (self.num.degree(), self.den.is_one()) {
            (None, _) => Some(F::zero()),
            (Some(0), true) => Some(self.num.coeffs()[0].clone()),
            _ => None,
        }
    }

    fn canonical(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lc = den.leading().expect("nonzero denominator").clone();
        let (mut num, mut den) = if lc.is_one_value() {
            (num, den)
        } else {
            let inv = lc.try_inv().expect("nonzero leading coefficient");
            (num.scale(&inv), den.scale(&inv))
        };
        let common_s = num.low_order().min(den.low_order());
        if common_s > 0 {
            num = num.shift_down(common_s);
            den = den.shift_down(common_s);
        }
        if den.degree() != Some(den.low_order()) {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.exact_div(&g);
                den = den.exact_div(&g).monic();
            }
        }
        Self { num, den }
    }

    pub fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::canonical(self.den.clone(), self.num.clone()))
        }
    }

    /// Substitution `s → 1/s`.
    pub fn bar(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let n = self.num.degree().unwrap_or(0);
        let m = self.den.degree().unwrap_or(0);
        let rn = self.num.reversed();
        let rd = self.den.reversed();
        if m >= n {
            Self::canonical(rn.shift_up(m - n), rd)
        } else {
            Self::canonical(rn, rd.shift_up(n - m))
        }
    }

    /// Value at `s = x`, failing at a pole.
    pub fn eval_at(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> RatFunc<G> {
        RatFunc::canonical(self.num.map(f), self.den.map(f))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl<F: Field> Zero for RatFunc<F> {
    fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFunc<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> Add for &RatFunc<F> {
    type Output = RatFunc<F>;

    fn add(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        if let (Some(k), Some(l)) = (self.den.as_unit_monomial(), rhs.den.as_unit_monomial()) {
            let m = k.max(l);
            let num = &self.num.shift_up(m - k) + &rhs.num.shift_up(m - l);
            return RatFunc::canonical(num, Poly::monomial(F::one(), m));
        }
        let g = self.den.gcd(&rhs.den);
        let d1 = self.den.exact_div(&g);
        let d2 = rhs.den.exact_div(&g);
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        RatFunc::canonical(num, &self.den * &d2)
    }
}

impl<F: Field> Sub for &RatFunc<F> {
    type Output = RatFunc<F>;

    fn sub(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;

    fn neg(self) -> RatFunc<F> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: Field> Mul for &RatFunc<F> {
    type Output = RatFunc<F>;

    fn mul(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero();
        }
        let mono = self.den.as_unit_monomial().is_some() && rhs.den.as_unit_monomial().is_some();
        if mono {
            return RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den);
        }
        // cross-cancel so the product is already reduced up to a unit
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1);
        let d2 = rhs.den.exact_div(&g1);
        let n2 = rhs.num.exact_div(&g2);
        let d1 = self.den.exact_div(&g2);
        RatFunc::canonical(&n1 * &n2, &d1 * &d2)
    }
}

impl<F: Field> Div for &RatFunc<F> {
    type Output = RatFunc<F>;

    /// Panics on division by zero; use [`RatFunc::try_inv`] for a checked form.
    fn div(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        self * &rhs.try_inv().expect("rational function division by zero")
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<F: Field> $tr for RatFunc<F> {
            type Output = RatFunc<F>;

            fn $method(self, rhs: RatFunc<F>) -> RatFunc<F> {
                (&self).$method(&rhs)
            }
        }

        impl<F: Field> $tr<&RatFunc<F>> for RatFunc<F> {
            type Output = RatFunc<F>;

            fn $method(self, rhs: &RatFunc<F>) -> RatFunc<F> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl<F: Field> Neg for RatFunc<F> {
    type Output = RatFunc<F>;

    fn neg(self) -> RatFunc<F> {
        -&self
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn try_inv(&self) -> Option<Self> {
        RatFunc::try_inv(self)
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }
}

// ---------------------------------------------------------------------------
// Text form: `-2/3*s^-2 + 1 + 1/2*s^4`, or `(<poly>)/(<poly>)`.

fn write_terms<F>(f: &mut fmt::Formatter<'_>, terms: &[(i64, F)]) -> fmt::Result
where
    F: Field + Signed + fmt::Display,
{
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (e, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if idx == 0 {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        match (*e, mag.is_one_value()) {
            (0, _) => write!(f, "{mag}")?,
            (e, true) => write!(f, "s^{e}")?,
            (e, false) => write!(f, "{mag}*s^{e}")?,
        }
    }
    Ok(())
}

fn poly_terms<F: Field>(p: &Poly<F>) -> Vec<(i64, F)> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (e as i64, c.clone()))
        .collect()
}

impl<F> fmt::Display for RatFunc<F>
where
    F: Field + Signed + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.laurent_terms() {
            Some(terms) => write_terms(f, &terms),
            None => {
                write!(f, "(")?;
                write_terms(f, &poly_terms(&self.num))?;
                write!(f, ")/(")?;
                write_terms(f, &poly_terms(&self.den))?;
                write!(f, ")")
            }
        }
    }
}

fn parse_err(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn parse_term<F: Field + FromStr>(term: &str, whole: &str) -> Result<(i64, F)> {
    let term = term.trim();
    if term.is_empty() {
        return Err(parse_err(whole, "empty term"));
    }
    let (coeff_part, power_part) = match term.find('s') {
        None => (term, None),
        Some(pos) => {
            let coeff = term[..pos].trim().trim_end_matches('*').trim();
            (coeff, Some(term[pos + 1..].trim()))
        }
    };
    let coeff = if coeff_part.is_empty() {
        F::one()
    } else {
        coeff_part
            .parse::<F>()
            .map_err(|_| parse_err(whole, format!("bad coefficient `{coeff_part}`")))?
    };
    let exp = match power_part {
        None => 0,
        Some("") => 1,
        Some(p) => {
            let p = p
                .strip_prefix('^')
                .ok_or_else(|| parse_err(whole, format!("expected `^` in `{term}`")))?;
            p.trim()
                .parse::<i64>()
                .map_err(|_| parse_err(whole, format!("bad exponent `{p}`")))?
        }
    };
    Ok((exp, coeff))
}

fn parse_sum<F: Field + FromStr>(text: &str, whole: &str) -> Result<RatFunc<F>> {
    // split on top-level + / - that are not part of an exponent or a leading sign
    let bytes = text.as_bytes();
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut prev_significant: Option<u8> = None;
    let mut signed = false;
    for &b in bytes {
        match b {
            b'+' | b'-' if !matches!(prev_significant, None | Some(b'^') | Some(b'*') | Some(b'/')) => {
                terms.push((negative, std::mem::take(&mut current)));
                negative = b == b'-';
                prev_significant = None;
            }
            b'+' | b'-' if terms.is_empty() && current.trim().is_empty() && !signed => {
                negative = b == b'-';
                signed = true;
            }
            b'+' | b'-' if prev_significant.is_some() => {
                current.push(b as char);
                prev_significant = Some(b);
            }
            b'+' | b'-' => return Err(parse_err(whole, "sign without a term")),
            b' ' => current.push(' '),
            _ => {
                current.push(b as char);
                prev_significant = Some(b);
            }
        }
    }
    terms.push((negative, current));
    let mut acc = RatFunc::zero();
    for (neg, t) in terms {
        let (e, c) = parse_term::<F>(&t, whole)?;
        let c = if neg { -c } else { c };
        acc = acc + RatFunc::monomial(c, e);
    }
    Ok(acc)
}

impl<F: Field + FromStr> FromStr for RatFunc<F> {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let text = input.trim();
        if let Some(rest) = text.strip_prefix('(') {
            let close = rest
                .find(')')
                .ok_or_else(|| parse_err(input, "unbalanced parenthesis"))?;
            let num = parse_sum::<F>(&rest[..close], input)?;
            let tail = rest[close + 1..].trim();
            let den_text = tail
                .strip_prefix('/')
                .map(str::trim)
                .and_then(|t| t.strip_prefix('('))
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| parse_err(input, "expected `/(<poly>)`"))?;
            let den = parse_sum::<F>(den_text, input)?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(&num / &den)
        } else {
            parse_sum(text, input)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type R = RatFunc<BigRational>;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn laurent_display() {
        let x = R::monomial(r(-2, 3), -2) + R::constant(r(1, 1)) + R::monomial(r(1, 2), 4);
        assert_eq!(x.to_string(), "-2/3*s^-2 + 1 + 1/2*s^4");
        assert_eq!(R::zero().to_string(), "0");
        assert_eq!((R::monomial(r(1, 1), 3) - R::monomial(r(2, 1), 1)).to_string(), "-2*s^1 + s^3");
    }

    #[test]
    fn rational_display_and_parse() {
        let s = R::monomial(r(1, 1), 1);
        let x = R::one() / (s.clone() - R::one());
        assert_eq!(x.to_string(), "(1)/(-1 + s^1)");
        assert_eq!(x.to_string().parse::<R>().unwrap(), x);
        let y: R = "-2/3*s^-2 + 1 + 1/2*s^4".parse().unwrap();
        assert_eq!(y.to_string(), "-2/3*s^-2 + 1 + 1/2*s^4");
        assert_eq!("s - s^-1".parse::<R>().unwrap(), s.clone() - s.try_inv().unwrap());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("2*t^3".parse::<R>().is_err());
        assert!("(1)/(0)".parse::<R>().is_err());
        assert!("(1 + s".parse::<R>().is_err());
        assert!("1 + + s".parse::<R>().is_err());
        assert!("1 - -s".parse::<R>().is_err());
        assert!("--1".parse::<R>().is_err());
        assert_eq!("-s".parse::<R>().unwrap(), -R::monomial(r(1, 1), 1));
        assert_eq!("2*s^-1 - 1".parse::<R>().unwrap().to_string(), "2*s^-1 - 1");
    }

    #[test]
    fn canonical_cancels_common_factors() {
        // (s^2 - 1)/(s - 1) = s + 1
        let num = Poly::from_coeffs(vec![r(-1, 1), r(0, 1), r(1, 1)]);
        let den = Poly::from_coeffs(vec![r(-1, 1), r(1, 1)]);
        let x = R::new(num, den).unwrap();
        assert_eq!(x, R::monomial(r(1, 1), 1) + R::one());
        assert!(R::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn bar_swaps_exponents() {
        let x: R = "s^3 - 2".parse().unwrap();
        let y: R = "s^-3 - 2".parse().unwrap();
        assert_eq!(x.bar(), y);
        let z: R = "(1 + s^1)/(2 + s^3)".parse().unwrap();
        assert_eq!(z.bar().bar(), z);
    }
}
