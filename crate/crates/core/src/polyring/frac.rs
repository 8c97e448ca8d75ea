//! Rational functions in `ξ` over `ℚ`, used only to invert the small
//! coefficient matrix that defines the class elements.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::XiPoly;

/// Polynomial in `ξ` with rational coefficients, canonical (no trailing
/// zeros).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly {
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    fn scale(&self, c: &BigRational) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Scales so the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => QPoly::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dl = d
            .leading()
            .expect("division by the zero polynomial")
            .clone();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The integer polynomial with the same coefficients, if they are all
    /// integers.
    pub fn to_xi_poly(&self) -> Option<XiPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<BigInt>>>()
            .map(XiPoly::from_coeffs)
    }
}

impl From<&XiPoly> for QPoly {
    fn from(p: &XiPoly) -> Self {
        QPoly::from_coeffs(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigRational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        QPoly::from_coeffs(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

/// A reduced fraction of rational polynomials in `ξ` with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatXiFrac {
    num: QPoly,
    den: QPoly,
}

impl RatXiFrac {
    pub fn zero() -> Self {
        RatXiFrac {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatXiFrac {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    /// `None` if `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = QPoly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero").recip();
        Some(RatXiFrac {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as an element of `ℤ[ξ]`, when it is one.
    pub fn to_xi_poly(&self) -> Option<XiPoly> {
        if self.den != QPoly::one() {
            return None;
        }
        self.num.to_xi_poly()
    }

    /// `None` for zero.
    pub fn recip(&self) -> Option<RatXiFrac> {
        RatXiFrac::new(self.den.clone(), self.num.clone())
    }
}

impl From<&XiPoly> for RatXiFrac {
    fn from(p: &XiPoly) -> Self {
        RatXiFrac {
            num: QPoly::from(p),
            den: QPoly::one(),
        }
    }
}

impl Add<&RatXiFrac> for &RatXiFrac {
    type Output = RatXiFrac;
    fn add(self, rhs: &RatXiFrac) -> RatXiFrac {
        if self.den == rhs.den {
            return RatXiFrac::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        RatXiFrac::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero den")
    }
}

impl Neg for &RatXiFrac {
    type Output = RatXiFrac;
    fn neg(self) -> RatXiFrac {
        RatXiFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub<&RatXiFrac> for &RatXiFrac {
    type Output = RatXiFrac;
    fn sub(self, rhs: &RatXiFrac) -> RatXiFrac {
        self + &(-rhs)
    }
}

impl Mul<&RatXiFrac> for &RatXiFrac {
    type Output = RatXiFrac;
    fn mul(self, rhs: &RatXiFrac) -> RatXiFrac {
        if self.is_zero() || rhs.is_zero() {
            return RatXiFrac::zero();
        }
        RatXiFrac::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero den")
    }
}

impl Div<&RatXiFrac> for &RatXiFrac {
    type Output = RatXiFrac;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatXiFrac) -> RatXiFrac {
        self * &rhs.recip().expect("division by zero fraction")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| match d {
                0 => format!("{c}"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{d}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Display for RatXiFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Inverts a square matrix over `ℚ(ξ)` by Gauss–Jordan elimination.
///
/// Returns `None` when the matrix is singular.
pub fn invert_matrix(m: &[Vec<RatXiFrac>]) -> Option<Vec<Vec<RatXiFrac>>> {
    let size = m.len();
    assert!(
        m.iter().all(|row| row.len() == size),
        "matrix must be square"
    );
    let mut a: Vec<Vec<RatXiFrac>> = m.to_vec();
    let mut inv: Vec<Vec<RatXiFrac>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        RatXiFrac::one()
                    } else {
                        RatXiFrac::zero()
                    }
                })
                .collect()
        })
        .collect();

    for col in 0..size {
        let pivot = (col..size).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].recip().expect("pivot is nonzero");
        for j in 0..size {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..size {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..size {
                let da = &factor * &a[col][j];
                a[r][j] = &a[r][j] - &da;
                let di = &factor * &inv[col][j];
                inv[r][j] = &inv[r][j] - &di;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(c: &[i64]) -> XiPoly {
        XiPoly::from_coeffs(c.to_vec())
    }

    fn fr(c: &[i64]) -> RatXiFrac {
        RatXiFrac::from(&xp(c))
    }

    #[test]
    fn fractions_reduce() {
        // (ξ^2 - 1)/(ξ - 1) = ξ + 1
        let f = RatXiFrac::new(QPoly::from(&xp(&[-1, 0, 1])), QPoly::from(&xp(&[-1, 1]))).unwrap();
        assert_eq!(f.to_xi_poly(), Some(xp(&[1, 1])));
        // 2ξ / 4ξ^2 = (1/2) / ξ
        let g = RatXiFrac::new(QPoly::from(&xp(&[0, 2])), QPoly::from(&xp(&[0, 0, 4]))).unwrap();
        assert_eq!(g.denominator(), &QPoly::from(&xp(&[0, 1])));
        assert!(g.to_xi_poly().is_none());
        assert!(RatXiFrac::new(QPoly::one(), QPoly::zero()).is_none());
    }

    #[test]
    fn field_operations() {
        let a = fr(&[1, 1]);
        let b = fr(&[0, 3]);
        let q = &a / &b;
        assert_eq!(&q * &b, a);
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn gcd_is_monic() {
        let a = QPoly::from(&xp(&[0, 2, 2])); // 2ξ(1+ξ)
        let b = QPoly::from(&xp(&[0, 0, 3])); // 3ξ^2
        assert_eq!(QPoly::gcd(&a, &b), QPoly::from(&xp(&[0, 1])));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn inverts_triangular_matrix() {
        // the n = 3 transition matrix: rows b, columns Γ
        let m = vec![
            vec![fr(&[6]), fr(&[0, 3]), fr(&[0, 0, 1])],
            vec![fr(&[]), fr(&[1]), fr(&[0, 1])],
            vec![fr(&[]), fr(&[]), fr(&[1])],
        ];
        let inv = invert_matrix(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = RatXiFrac::zero();
                for k in 0..3 {
                    acc = &acc + &(&m[i][k] * &inv[k][j]);
                }
                let want = if i == j {
                    RatXiFrac::one()
                } else {
                    RatXiFrac::zero()
                };
                assert_eq!(acc, want, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let m = vec![vec![fr(&[1, 1]), fr(&[2, 2])], vec![fr(&[1]), fr(&[2])]];
        assert!(invert_matrix(&m).is_none());
    }
}
