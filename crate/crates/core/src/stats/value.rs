use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::Error;
use crate::poly::IntPolynomial;

/// Exponent of the alpha-parameterized statistics.
///
/// Integer exponents are computed exactly; anything else falls back to `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Integer(i32),
    Real(f64),
}

impl Exponent {
    /// `-1/2`, the classic Randic connectivity index.
    pub const CONNECTIVITY: Exponent = Exponent::Real(-0.5);

    pub fn as_f64(self) -> f64 {
        match self {
            Exponent::Integer(a) => a as f64,
            Exponent::Real(a) => a,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Integer(a) => write!(f, "{a}"),
            Exponent::Real(a) => write!(f, "{a}"),
        }
    }
}

/// Accepts integers (`2`, `-1`), fractions (`-1/2`) and decimals (`0.5`).
/// Whatever denotes an integer becomes [`Exponent::Integer`].
impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidInput(format!("cannot parse exponent {s:?}"));
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            let den: i64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            if num % den == 0 {
                return i32::try_from(num / den)
                    .map(Exponent::Integer)
                    .map_err(|_| bad());
            }
            return Ok(Exponent::Real(num as f64 / den as f64));
        }
        if let Ok(a) = s.parse::<i32>() {
            return Ok(Exponent::Integer(a));
        }
        let a: f64 = s.parse().map_err(|_| bad())?;
        if !a.is_finite() {
            return Err(bad());
        }
        if a.fract() == 0.0 && a.abs() <= i32::MAX as f64 {
            Ok(Exponent::Integer(a as i32))
        } else {
            Ok(Exponent::Real(a))
        }
    }
}

/// Optional parameters for a statistic query.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StatParams {
    pub alpha: Option<Exponent>,
    pub k: Option<u32>,
}

impl StatParams {
    pub fn alpha(alpha: Exponent) -> Self {
        StatParams {
            alpha: Some(alpha),
            k: None,
        }
    }

    pub fn k(k: u32) -> Self {
        StatParams {
            alpha: None,
            k: Some(k),
        }
    }
}

/// Value of a statistic.
#[derive(Debug, Clone, PartialEq)]
pub enum StatValue {
    Integer(BigInt),
    /// Only produced by alpha statistics with a negative integer exponent.
    Rational(BigRational),
    Polynomial(IntPolynomial),
    /// Non-integer exponents; no exactness claim.
    Float(f64),
}

impl StatValue {
    /// Integer if the denominator is 1, rational otherwise.
    pub fn from_rational(q: BigRational) -> Self {
        if q.denom().is_one() {
            StatValue::Integer(q.to_integer())
        } else {
            StatValue::Rational(q)
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            StatValue::Integer(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_polynomial(&self) -> Option<&IntPolynomial> {
        match self {
            StatValue::Polynomial(p) => Some(p),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> Option<f64> {
        match self {
            StatValue::Integer(v) => v.to_f64(),
            StatValue::Rational(q) => q.to_f64(),
            StatValue::Float(x) => Some(*x),
            StatValue::Polynomial(_) => None,
        }
    }

    /// Exact equality for exact values; for floats `|a - b| <= tol * (1 + |a|)`.
    pub fn agrees_with(&self, other: &StatValue, tol: f64) -> bool {
        match (self, other) {
            (StatValue::Float(_), _) | (_, StatValue::Float(_)) => {
                match (self.to_f64(), other.to_f64()) {
                    (Some(a), Some(b)) => (a - b).abs() <= tol * (1.0 + a.abs()),
                    _ => false,
                }
            }
            _ => self == other,
        }
    }
}

impl fmt::Display for StatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatValue::Integer(v) => write!(f, "{v}"),
            StatValue::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            StatValue::Polynomial(p) => write!(f, "{p}"),
            StatValue::Float(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_parsing() {
        let parse = |s: &str| s.parse::<Exponent>().unwrap();
        assert_eq!(parse("1"), Exponent::Integer(1));
        assert_eq!(parse("-2"), Exponent::Integer(-2));
        assert_eq!(parse("4/2"), Exponent::Integer(2));
        assert_eq!(parse("3.0"), Exponent::Integer(3));
        assert_eq!(parse("-1/2"), Exponent::Real(-0.5));
        assert_eq!(parse("0.25"), Exponent::Real(0.25));
        for bad in ["", "x", "1/0", "nan", "inf", "1/2/3"] {
            assert!(bad.parse::<Exponent>().is_err(), "{bad}");
        }
    }

    #[test]
    fn rational_display() {
        let q = BigRational::new(BigInt::from(-3), BigInt::from(6));
        assert_eq!(StatValue::from_rational(q).to_string(), "-1/2");
        let q = BigRational::new(BigInt::from(6), BigInt::from(3));
        assert_eq!(StatValue::from_rational(q), StatValue::Integer(2.into()));
    }

    #[test]
    fn float_agreement() {
        let a = StatValue::Float(1.0);
        assert!(a.agrees_with(&StatValue::Float(1.0 + 1e-12), 1e-9));
        assert!(!a.agrees_with(&StatValue::Float(1.001), 1e-9));
        assert!(a.agrees_with(&StatValue::Integer(1.into()), 1e-9));
        assert!(!StatValue::Integer(1.into()).agrees_with(&StatValue::Integer(2.into()), 1e-9));
    }
}
