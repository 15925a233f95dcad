//! The two exponent-parameterized statistics, carried as a pair because the
//! general Randic recursion needs the level-1 degree power sum `A_α` of each
//! branch.
//!
//! Integer exponents run over exact rationals (negative exponents produce
//! fractions); real exponents over `f64`.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::stats::value::Exponent;

pub trait AlphaField:
    Clone + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn zero() -> Self;

    /// `base^alpha` for `base >= 1`.
    fn power(base: u32, alpha: Exponent) -> Self;
}

impl AlphaField for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn power(base: u32, alpha: Exponent) -> Self {
        debug_assert!(base >= 1);
        match alpha {
            Exponent::Integer(a) => Pow::pow(BigRational::from(BigInt::from(base)), a),
            Exponent::Real(_) => panic!("exact arithmetic needs an integer exponent"),
        }
    }
}

impl AlphaField for f64 {
    fn zero() -> Self {
        0.0
    }

    fn power(base: u32, alpha: Exponent) -> Self {
        debug_assert!(base >= 1);
        match alpha {
            Exponent::Integer(a) => (base as f64).powi(a),
            Exponent::Real(a) => (base as f64).powf(a),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaProfile<F> {
    /// `A_α`: sum of `deg^α` over the level-1 vertices.
    pub level1_power_sum: F,
    /// `R_α`: sum of `(deg(i) deg(j))^α` over the edges.
    pub randic: F,
}

impl<F: AlphaField> AlphaProfile<F> {
    pub fn single_vertex() -> Self {
        AlphaProfile {
            level1_power_sum: F::zero(),
            randic: F::zero(),
        }
    }

    /// `p_t` from `t`, where the root of `τ(t)` has degree `omega_t`.
    pub fn graft(t: &Self, omega_t: u32, alpha: Exponent) -> Self {
        let raised = F::power(1 + omega_t, alpha);
        let mut randic = t.randic.clone() + raised.clone();
        // edges below the old root see its degree grow by one; for t = 1
        // there are none (and 0^α may not exist)
        if omega_t > 0 {
            randic =
                randic + t.level1_power_sum.clone() * (raised.clone() - F::power(omega_t, alpha));
        }
        AlphaProfile {
            level1_power_sum: raised,
            randic,
        }
    }

    /// `r * s` from `r` and `s`, whose roots have degrees `omega_r`, `omega_s >= 1`.
    pub fn join(r: &Self, omega_r: u32, s: &Self, omega_s: u32, alpha: Exponent) -> Self {
        let merged = F::power(omega_r + omega_s, alpha);
        let randic = r.randic.clone()
            + s.randic.clone()
            + r.level1_power_sum.clone() * (merged.clone() - F::power(omega_r, alpha))
            + s.level1_power_sum.clone() * (merged - F::power(omega_s, alpha));
        AlphaProfile {
            level1_power_sum: r.level1_power_sum.clone() + s.level1_power_sum.clone(),
            randic,
        }
    }
}
