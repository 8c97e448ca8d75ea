//! Laurent polynomials in `q^{1/2}`, for translating results to the
//! classical presentation with `T̃_s = q^{-1/2} T_s` and `ξ = q^{1/2} − q^{-1/2}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::XiPoly;

/// An element of `ℤ[q^{1/2}, q^{-1/2}]`.
///
/// Keys are doubled exponents: key `e` stands for `q^{e/2}`. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QHalfLaurent {
    terms: BTreeMap<i64, BigInt>,
}

/// JSON form of one term: `{"exp2": e, "coeff": c}` for `c·q^{e/2}`.
#[derive(Serialize, Deserialize)]
struct Term {
    exp2: i64,
    coeff: serde_json::Number,
}

impl QHalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·q^{exp2/2}`.
    pub fn monomial(c: impl Into<BigInt>, exp2: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(exp2, c.into());
        out
    }

    fn add_term(&mut self, exp2: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp2).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp2);
        }
    }

    pub fn from_xi_poly(p: &XiPoly, length_shift: i64) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // (q^{1/2} - q^{-1/2})^k = Σ_j C(k,j) (-1)^j q^{(k-2j)/2}
            for j in 0..=k {
                let mut b = binomial(BigInt::from(k), BigInt::from(j)) * c;
                if j % 2 == 1 {
                    b = -b;
                }
                out.add_term(k as i64 - 2 * j as i64 + length_shift, b);
            }
        }
        out
    }

    /// Iterates `(doubled exponent, coefficient)` in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| Term {
                exp2: *e,
                coeff: super::bigint_to_json(c),
            })
            .collect();
        serde_json::to_value(terms).expect("terms serialize")
    }
}

impl Add<&QHalfLaurent> for &QHalfLaurent {
    type Output = QHalfLaurent;
    fn add(self, rhs: &QHalfLaurent) -> QHalfLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Mul<&QHalfLaurent> for &QHalfLaurent {
    type Output = QHalfLaurent;
    fn mul(self, rhs: &QHalfLaurent) -> QHalfLaurent {
        let mut out = QHalfLaurent::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

fn q_power(exp2: i64) -> String {
    if exp2 % 2 != 0 {
        return format!("q^({exp2}/2)");
    }
    match exp2 / 2 {
        1 => "q".to_string(),
        e if e < 0 => format!("q^({e})"),
        e => format!("q^{e}"),
    }
}

/// Highest power first, e.g. `q - 2 + q^(-1)`.
impl fmt::Display for QHalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&q_power(*e))?;
            } else {
                write!(f, "{mag}*{}", q_power(*e))?;
            }
        }
        Ok(())
    }
}
