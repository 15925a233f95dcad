//! Tree statistics computed directly from the Matula number.
//!
//! [`StatsEngine`] never builds the tree. It factors `n`, recurses on the
//! order `t` of a prime `n = p_t` or on the split `n = r * s` with `r` the
//! smallest prime factor, and combines the results with the formulas in
//! [`TreeProfile`] and [`AlphaProfile`]. Results are memoized per `n` (and
//! per exponent for exact alpha statistics).
//!
//! An engine is single-threaded (`&mut self`); use one engine per thread.
//! The prime table behind it is shared and thread-safe.

mod alpha;
mod name;
mod profile;
mod value;

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

pub use alpha::{AlphaField, AlphaProfile};
pub use name::{StatKind, StatName};
pub use profile::{Count, TreeProfile};
pub use value::{Exponent, StatParams, StatValue};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::primes::PrimeTable;

/// How `τ(n)` is assembled from smaller trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decomposition {
    SingleVertex,
    /// `n = p_t`.
    Prime {
        order: u64,
    },
    /// `n = r * s` with `r` the smallest prime factor.
    Composite {
        r: u64,
        s: u64,
    },
}

pub struct StatsEngine {
    primes: Arc<PrimeTable>,
    profiles: HashMap<u64, Arc<TreeProfile>>,
    exact_alpha: HashMap<(u64, i32), Arc<AlphaProfile<BigRational>>>,
}

impl Default for StatsEngine {
    fn default() -> Self {
        StatsEngine::new()
    }
}

impl StatsEngine {
    /// Engine on the global prime table.
    pub fn new() -> Self {
        StatsEngine::with_primes(PrimeTable::global())
    }

    pub fn with_primes(primes: Arc<PrimeTable>) -> Self {
        StatsEngine {
            primes,
            profiles: HashMap::new(),
            exact_alpha: HashMap::new(),
        }
    }

    pub fn primes(&self) -> &Arc<PrimeTable> {
        &self.primes
    }

    /// Number of memoized profiles.
    pub fn cached(&self) -> usize {
        self.profiles.len()
    }

    pub fn clear_cache(&mut self) {
        self.profiles.clear();
        self.exact_alpha.clear();
    }

    pub fn decompose(&self, n: u64) -> Result<Decomposition> {
        match n {
            0 => Err(Error::InvalidInput("Matula numbers start at 1".into())),
            1 => Ok(Decomposition::SingleVertex),
            _ => {
                let r = self.primes.smallest_prime_factor(n)?;
                if r == n {
                    Ok(Decomposition::Prime {
                        order: self.primes.prime_index(n)?,
                    })
                } else {
                    Ok(Decomposition::Composite { r, s: n / r })
                }
            }
        }
    }

    /// All parameter-free statistics of `τ(n)`.
    pub fn profile(&mut self, n: u64) -> Result<Arc<TreeProfile>> {
        if let Some(p) = self.profiles.get(&n) {
            return Ok(p.clone());
        }
        let profile = match self.decompose(n)? {
            Decomposition::SingleVertex => TreeProfile::single_vertex(),
            Decomposition::Prime { order } => TreeProfile::graft(&*self.profile(order)?)?,
            Decomposition::Composite { r, s } => {
                let (r, s) = (self.profile(r)?, self.profile(s)?);
                TreeProfile::join(&r, &s)?
            }
        };
        let profile = Arc::new(profile);
        self.profiles.insert(n, profile.clone());
        Ok(profile)
    }

    /// Profile of `τ(r * s)` assembled from the given split rather than the
    /// canonical one.
    pub fn profile_via_split(&mut self, r: u64, s: u64) -> Result<TreeProfile> {
        let (r, s) = (self.profile(r)?, self.profile(s)?);
        TreeProfile::join(&r, &s)
    }

    fn expect_kind(name: StatName, kind: StatKind) -> Result<()> {
        if name.kind() == kind {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "{name} is a {:?} statistic, not {kind:?}",
                name.kind()
            )))
        }
    }

    pub fn scalar_stat(&mut self, name: StatName, n: u64) -> Result<BigInt> {
        Self::expect_kind(name, StatKind::Scalar)?;
        Ok(self.profile(n)?.scalar(name).unwrap().into())
    }

    /// NK, MZ1 or MZ2. The recursive value is checked against the product
    /// over the degree multiset read off the degree sequence polynomial.
    pub fn multiplicative_stat(&mut self, name: StatName, n: u64) -> Result<BigInt> {
        Self::expect_kind(name, StatKind::Multiplicative)?;
        let profile = self.profile(n)?;
        let value = profile.multiplicative(name).unwrap().clone();
        if n > 1 {
            let from_degrees = degree_product(&profile.degree_seq_poly, |d| match name {
                StatName::Nk => 1,
                StatName::Mz1 => 2,
                _ => d,
            });
            if from_degrees != value {
                return Err(Error::InternalIntegrity(format!(
                    "{name}({n}): recursion gives {value}, degree multiset gives {from_degrees}"
                )));
            }
        }
        Ok(value)
    }

    pub fn poly_stat(&mut self, name: StatName, n: u64) -> Result<IntPolynomial> {
        Self::expect_kind(name, StatKind::Polynomial)?;
        Ok(self.profile(n)?.polynomial(name).unwrap().clone())
    }

    pub fn derived_stat(&mut self, name: StatName, n: u64, k: Option<u32>) -> Result<StatValue> {
        Self::expect_kind(name, StatKind::Derived)?;
        self.profile(n)?.derived(name, k).map(StatValue::Integer)
    }

    fn exact_alpha_profile(
        &mut self,
        n: u64,
        alpha: i32,
    ) -> Result<Arc<AlphaProfile<BigRational>>> {
        if let Some(p) = self.exact_alpha.get(&(n, alpha)) {
            return Ok(p.clone());
        }
        let exponent = Exponent::Integer(alpha);
        let profile = match self.decompose(n)? {
            Decomposition::SingleVertex => AlphaProfile::single_vertex(),
            Decomposition::Prime { order } => {
                let omega = self.profile(order)?.omega;
                AlphaProfile::graft(&*self.exact_alpha_profile(order, alpha)?, omega, exponent)
            }
            Decomposition::Composite { r, s } => {
                let (wr, ws) = (self.profile(r)?.omega, self.profile(s)?.omega);
                let pr = self.exact_alpha_profile(r, alpha)?;
                let ps = self.exact_alpha_profile(s, alpha)?;
                AlphaProfile::join(&pr, wr, &ps, ws, exponent)
            }
        };
        let profile = Arc::new(profile);
        self.exact_alpha.insert((n, alpha), profile.clone());
        Ok(profile)
    }

    /// Real exponents are not memoized.
    fn float_alpha_profile(&mut self, n: u64, alpha: Exponent) -> Result<AlphaProfile<f64>> {
        Ok(match self.decompose(n)? {
            Decomposition::SingleVertex => AlphaProfile::single_vertex(),
            Decomposition::Prime { order } => {
                let omega = self.profile(order)?.omega;
                AlphaProfile::graft(&self.float_alpha_profile(order, alpha)?, omega, alpha)
            }
            Decomposition::Composite { r, s } => {
                let (wr, ws) = (self.profile(r)?.omega, self.profile(s)?.omega);
                let pr = self.float_alpha_profile(r, alpha)?;
                let ps = self.float_alpha_profile(s, alpha)?;
                AlphaProfile::join(&pr, wr, &ps, ws, alpha)
            }
        })
    }

    fn alpha_stat(
        &mut self,
        n: u64,
        alpha: Exponent,
        pick: impl Fn(&AlphaProfile<BigRational>) -> &BigRational,
        pick_f64: impl Fn(&AlphaProfile<f64>) -> f64,
    ) -> Result<StatValue> {
        match alpha {
            Exponent::Integer(a) => {
                let p = self.exact_alpha_profile(n, a)?;
                Ok(StatValue::from_rational(pick(&p).clone()))
            }
            Exponent::Real(_) => Ok(StatValue::Float(pick_f64(
                &self.float_alpha_profile(n, alpha)?,
            ))),
        }
    }

    /// Sum of `deg^α` over the level-1 vertices.
    pub fn a_alpha(&mut self, n: u64, alpha: Exponent) -> Result<StatValue> {
        self.alpha_stat(n, alpha, |p| &p.level1_power_sum, |p| p.level1_power_sum)
    }

    /// General Randic index; `R_1` is the second Zagreb index.
    pub fn randic(&mut self, n: u64, alpha: Exponent) -> Result<StatValue> {
        self.alpha_stat(n, alpha, |p| &p.randic, |p| p.randic)
    }

    /// Both alpha statistics of `τ(r * s)` assembled from the given split.
    pub fn alpha_via_split(
        &mut self,
        r: u64,
        s: u64,
        alpha: Exponent,
    ) -> Result<(StatValue, StatValue)> {
        let (wr, ws) = (self.profile(r)?.omega, self.profile(s)?.omega);
        Ok(match alpha {
            Exponent::Integer(a) => {
                let pr = self.exact_alpha_profile(r, a)?;
                let ps = self.exact_alpha_profile(s, a)?;
                let p = AlphaProfile::join(&pr, wr, &ps, ws, alpha);
                (
                    StatValue::from_rational(p.level1_power_sum),
                    StatValue::from_rational(p.randic),
                )
            }
            Exponent::Real(_) => {
                let pr = self.float_alpha_profile(r, alpha)?;
                let ps = self.float_alpha_profile(s, alpha)?;
                let p = AlphaProfile::join(&pr, wr, &ps, ws, alpha);
                (
                    StatValue::Float(p.level1_power_sum),
                    StatValue::Float(p.randic),
                )
            }
        })
    }

    /// Any statistic. `A_ALPHA` defaults to `α = 1`, `R_ALPHA` to `α = -1/2`,
    /// `POLARITY` to `k = 3`.
    pub fn stat(&mut self, name: StatName, n: u64, params: &StatParams) -> Result<StatValue> {
        match name.kind() {
            StatKind::Scalar => self.scalar_stat(name, n).map(StatValue::Integer),
            StatKind::Multiplicative => self.multiplicative_stat(name, n).map(StatValue::Integer),
            StatKind::Polynomial => self.poly_stat(name, n).map(StatValue::Polynomial),
            StatKind::Derived => self.derived_stat(name, n, params.k),
            StatKind::Alpha => {
                let alpha = params.alpha.unwrap_or(default_alpha(name));
                if name == StatName::AAlpha {
                    self.a_alpha(n, alpha)
                } else {
                    self.randic(n, alpha)
                }
            }
        }
    }
}

pub fn default_alpha(name: StatName) -> Exponent {
    match name {
        StatName::RAlpha => Exponent::CONNECTIVITY,
        _ => Exponent::Integer(1),
    }
}

/// `∏ d^(e(d))` over the degrees `d` in a degree sequence polynomial, each
/// counted with its multiplicity.
fn degree_product(dsp: &IntPolynomial, exponent: impl Fn(u32) -> u32) -> BigInt {
    let mut out = BigInt::from(1);
    for (d, count) in dsp.coeffs().iter().enumerate() {
        if count.is_zero() {
            continue;
        }
        let d = d as u32;
        let times = u32::try_from(count).expect("vertex count fits in u32");
        out *= Pow::pow(BigInt::from(d), exponent(d) * times);
    }
    out
}
