//! Dense polynomials in one variable with exact big-integer coefficients.
//!
//! These carry the polynomial-valued tree statistics (partial Wiener, Wiener,
//! degree sequence and exit-distance polynomials). Coefficient `i` is the
//! coefficient of `x^i`; trailing zeros are never stored, so the zero
//! polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::monomial(1, 0)
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Self {
        IntPolynomial::monomial(1, k)
    }

    /// Builds from coefficients listed lowest degree first.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = IntPolynomial {
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

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `[x^k] p`.
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k)),
        )
    }

    fn filter_exponents(&self, keep: impl Fn(usize) -> bool) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().enumerate().map(|(k, c)| {
            if keep(k) {
                c.clone()
            } else {
                BigInt::zero()
            }
        }))
    }

    pub fn even_part(&self) -> IntPolynomial {
        self.filter_exponents(|k| k % 2 == 0)
    }

    pub fn odd_part(&self) -> IntPolynomial {
        self.filter_exponents(|k| k % 2 == 1)
    }

    /// `x * p`.
    pub fn scale_by_x(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    fn add_scaled(&mut self, other: &IntPolynomial, negate: bool) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if negate {
                *a -= b;
            } else {
                *a += b;
            }
        }
        self.normalize();
    }
}

impl From<BigInt> for IntPolynomial {
    fn from(c: BigInt) -> Self {
        IntPolynomial::from_coeffs([c])
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        self.add_scaled(rhs, false);
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        self.add_scaled(rhs, true);
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self -= &rhs;
        self
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(mut self) -> IntPolynomial {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// Renders as `c0 + c1*x + c2*x^2`, lowest degree first, zero terms omitted.
/// Negative coefficients are written as a subtraction; the zero polynomial
/// renders as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{c}")?,
                (true, true) => write!(f, "-{}", c.abs())?,
                (false, false) => write!(f, " + {c}")?,
                (false, true) => write!(f, " - {}", c.abs())?,
            }
            match k {
                0 => {}
                1 => f.write_str("*x")?,
                _ => write!(f, "*x^{k}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl One for IntPolynomial {
    fn one() -> Self {
        IntPolynomial::one()
    }
}

impl Zero for IntPolynomial {
    fn zero() -> Self {
        IntPolynomial::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}
