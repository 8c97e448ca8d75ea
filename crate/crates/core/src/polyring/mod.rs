//! Exact polynomial arithmetic in the Hecke parameter `ξ`.
//!
//! [`XiPoly`] is the scalar ring `ℤ[ξ]` of the algebra: a dense, canonical
//! coefficient vector with arbitrary-precision integers. The rational
//! function machinery in [`frac`] is only used while solving for the class
//! elements, and [`qhalf`] restates results over `ℤ[q^{1/2}, q^{-1/2}]`.

pub mod frac;
pub mod qhalf;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use frac::{QPoly, RatXiFrac};
pub use qhalf::QHalfLaurent;

/// A polynomial in `ξ` with integer coefficients.
///
/// `coeffs[i]` is the coefficient of `ξ^i`. Trailing zeros are never stored,
/// so the zero polynomial is the empty vector and structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XiPoly {
    coeffs: Vec<BigInt>,
}

impl XiPoly {
    pub fn zero() -> Self {
        XiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XiPoly::constant(BigInt::one())
    }

    /// The indeterminate `ξ` itself.
    pub fn xi() -> Self {
        XiPoly::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        XiPoly::from_coeffs(vec![c.into()])
    }

    /// `c·ξ^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return XiPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        XiPoly { coeffs }
    }

    /// `ξ^degree`.
    pub fn xi_pow(degree: usize) -> Self {
        XiPoly::monomial(BigInt::one(), degree)
    }

    /// Builds a polynomial from low-to-high coefficients, normalizing away
    /// trailing zeros.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        let mut p = XiPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `ξ^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Membership in `ℕ[ξ]`: every coefficient is non-negative.
    pub fn is_nonneg(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Partial order on `ℤ[ξ]` induced by `ℕ[ξ]`: `self ≤ other` iff
    /// `other − self ∈ ℕ[ξ]`.
    pub fn leq(&self, other: &XiPoly) -> bool {
        (other - self).is_nonneg()
    }

    /// Multiplication by `ξ^k`.
    pub fn shift(&self, k: usize) -> XiPoly {
        if self.is_zero() {
            return XiPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        XiPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> XiPoly {
        if c.is_zero() {
            return XiPoly::zero();
        }
        XiPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `self + c·other`, in place.
    pub fn add_scaled(&mut self, other: &XiPoly, c: &XiPoly) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let len = other.coeffs.len() + c.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        for (i, a) in other.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in c.coeffs.iter().enumerate() {
                self.coeffs[i + j] += a * b;
            }
        }
        self.normalize();
    }

    /// `ξ·self`, in place.
    pub fn mul_xi_in_place(&mut self) {
        if !self.is_zero() {
            self.coeffs.insert(0, BigInt::zero());
        }
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact division by a nonzero integer; `None` when some coefficient is
    /// not divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<XiPoly> {
        if d.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !(c % d).is_zero() {
                return None;
            }
            out.push(c / d);
        }
        Some(XiPoly { coeffs: out })
    }

    /// Substitutes `ξ = q^{1/2} − q^{−1/2}` and multiplies by
    /// `q^{length_shift/2}`.
    pub fn to_q_half(&self, length_shift: i64) -> QHalfLaurent {
        QHalfLaurent::from_xi_poly(self, length_shift)
    }
}

impl From<i64> for XiPoly {
    fn from(c: i64) -> Self {
        XiPoly::constant(c)
    }
}

impl From<BigInt> for XiPoly {
    fn from(c: BigInt) -> Self {
        XiPoly::constant(c)
    }
}

impl AddAssign<&XiPoly> for XiPoly {
    fn add_assign(&mut self, rhs: &XiPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&XiPoly> for XiPoly {
    fn sub_assign(&mut self, rhs: &XiPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl Add<&XiPoly> for &XiPoly {
    type Output = XiPoly;
    fn add(self, rhs: &XiPoly) -> XiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for XiPoly {
    type Output = XiPoly;
    fn add(mut self, rhs: XiPoly) -> XiPoly {
        self += &rhs;
        self
    }
}

impl Sub<&XiPoly> for &XiPoly {
    type Output = XiPoly;
    fn sub(self, rhs: &XiPoly) -> XiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for XiPoly {
    type Output = XiPoly;
    fn sub(mut self, rhs: XiPoly) -> XiPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&XiPoly> for &XiPoly {
    type Output = XiPoly;
    fn mul(self, rhs: &XiPoly) -> XiPoly {
        let mut out = XiPoly::zero();
        out.add_scaled(self, rhs);
        out
    }
}

impl Mul for XiPoly {
    type Output = XiPoly;
    fn mul(self, rhs: XiPoly) -> XiPoly {
        &self * &rhs
    }
}

impl Neg for &XiPoly {
    type Output = XiPoly;
    fn neg(self) -> XiPoly {
        XiPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for XiPoly {
    type Output = XiPoly;
    fn neg(self) -> XiPoly {
        -&self
    }
}

/// Renders as e.g. `3 + 2*x + x^3`, lowest degree first, with `x` for `ξ`.
impl fmt::Display for XiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let var = match deg {
                0 => String::new(),
                1 => "x".to_string(),
                d => format!("x^{d}"),
            };
            if deg == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

/// Error returned when a polynomial string cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial term `{0}`")]
pub struct ParsePolyError(pub String);

/// Parses the text rendering produced by `Display` (`x` stands for `ξ`).
impl FromStr for XiPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParsePolyError(s.to_string()));
        }
        let mut terms = Vec::new();
        let mut current = String::new();
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);

        let mut out = XiPoly::zero();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            let bad = || ParsePolyError(term.clone());
            let (coeff, deg) = match body.find('x') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let c = match &body[..pos] {
                        "" => BigInt::one(),
                        prefix => prefix
                            .strip_suffix('*')
                            .ok_or_else(bad)?
                            .parse::<BigInt>()
                            .map_err(|_| bad())?,
                    };
                    let d = match &body[pos + 1..] {
                        "" => 1,
                        rest => rest
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<usize>()
                            .map_err(|_| bad())?,
                    };
                    (c, d)
                }
            };
            let coeff = if neg { -coeff } else { coeff };
            out += &XiPoly::monomial(coeff, deg);
        }
        Ok(out)
    }
}

/// Serializes as the JSON integer array `[c0, c1, ...]`.
impl Serialize for XiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&bigint_to_json(c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for XiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<serde_json::Number>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|n| {
                n.to_string()
                    .parse::<BigInt>()
                    .map_err(|_| serde::de::Error::custom(format!("non-integer coefficient {n}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(XiPoly::from_coeffs(coeffs))
    }
}

/// An arbitrary-precision integer as a JSON number.
pub fn bigint_to_json(c: &BigInt) -> serde_json::Number {
    // arbitrary_precision keeps every digit
    c.to_string()
        .parse()
        .expect("integer literal is a valid JSON number")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> XiPoly {
        XiPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&XiPoly::zero() + &p(&[3, 0, 1]), p(&[3, 0, 1]));
        assert!((&p(&[1, 0, 1]) + &p(&[-1, 0, -1])).is_zero());
        assert_eq!(&p(&[0, 3]) + &p(&[0, 1, 1]), p(&[0, 4, 1]));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&XiPoly::xi() * &XiPoly::xi_pow(2), XiPoly::xi_pow(3));
        assert!((&p(&[1, 1]) * &XiPoly::zero()).is_zero());
        // ξ^{n-2}·ξ at n = 3
        assert_eq!(&XiPoly::xi_pow(1) * &XiPoly::xi(), XiPoly::xi_pow(2));
    }

    #[test]
    fn nonneg_examples() {
        assert!(p(&[3, 0, 1]).is_nonneg());
        assert!(!p(&[-1, 1]).is_nonneg());
        assert!(XiPoly::zero().is_nonneg());
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.coeffs().len(), 2);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(XiPoly::zero().degree(), None);
        assert_eq!(p(&[0, 0]), XiPoly::zero());
    }

    #[test]
    fn text_rendering() {
        assert_eq!(p(&[3, 2, 0, 1]).to_string(), "3 + 2*x + x^3");
        assert_eq!(XiPoly::monomial(11, 3).to_string(), "11*x^3");
        assert_eq!(p(&[-1, 1]).to_string(), "-1 + x");
        assert_eq!(p(&[0, -1, -2]).to_string(), "-x - 2*x^2");
        assert_eq!(XiPoly::zero().to_string(), "0");
        assert_eq!(XiPoly::one().to_string(), "1");
    }

    #[test]
    fn text_parse_inverts_display() {
        for c in [
            vec![3, 2, 0, 1],
            vec![-1, 1],
            vec![0, -1, -2],
            vec![],
            vec![0, 0, 7],
        ] {
            let q = p(&c);
            assert_eq!(q.to_string().parse::<XiPoly>().unwrap(), q);
        }
        assert!("3 + y".parse::<XiPoly>().is_err());
    }

    #[test]
    fn json_is_coefficient_array() {
        let q = p(&[3, 2, 0, 1]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[3,2,0,1]");
        let big = XiPoly::constant("123456789012345678901234567890".parse::<BigInt>().unwrap());
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, "[123456789012345678901234567890]");
        assert_eq!(serde_json::from_str::<XiPoly>(&s).unwrap(), big);
        assert_eq!(
            serde_json::from_str::<XiPoly>("[1,0,0]").unwrap(),
            XiPoly::one()
        );
    }

    #[test]
    fn shift_scale_and_div_exact() {
        assert_eq!(p(&[1, 1]).shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[2, 4]).div_exact(&BigInt::from(2)), Some(p(&[1, 2])));
        assert_eq!(p(&[2, 3]).div_exact(&BigInt::from(2)), None);
        assert_eq!(p(&[1, 2]).scale(&BigInt::from(-3)), p(&[-3, -6]));
        assert_eq!(p(&[1, 2, 1]).eval(&BigInt::from(2)), BigInt::from(9));
    }

    fn small_poly() -> impl Strategy<Value = XiPoly> {
        prop::collection::vec(-4i64..=4, 0..5).prop_map(XiPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn normalizing_is_idempotent(c in prop::collection::vec(-3i64..=3, 0..6)) {
            let once = XiPoly::from_coeffs(c);
            let twice = XiPoly::from_coeffs(once.coeffs().to_vec());
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn q_half_is_multiplicative(a in small_poly(), b in small_poly()) {
            prop_assert_eq!((&a * &b).to_q_half(0), &a.to_q_half(0) * &b.to_q_half(0));
        }
    }
}
