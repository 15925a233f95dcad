//! Prime generation, prime order (`p_m` has order `m`) and factorization.
//!
//! A [`PrimeTable`] owns a lazily grown, segmented sieve of Eratosthenes. The
//! sieve starts at a configurable bound and extends itself when a query needs
//! larger primes, up to a hard ceiling; past the ceiling every query fails
//! with [`Error::CapacityExceeded`]. Readers share the table under a read
//! lock and growth is serialized behind the write lock, so a single table can
//! be used from many threads.

use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

pub const DEFAULT_INITIAL_BOUND: u64 = 1_000_000;
pub const DEFAULT_CEILING: u64 = 1_000_000_000;

const SEGMENT_LEN: u64 = 1 << 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    /// Bound sieved on first use.
    pub initial_bound: u64,
    /// No prime above this value is ever generated. Must fit in a `u32`.
    pub ceiling: u64,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            initial_bound: DEFAULT_INITIAL_BOUND,
            ceiling: DEFAULT_CEILING,
        }
    }
}

#[derive(Debug, Default)]
struct Sieve {
    /// Every prime `<= bound`, ascending.
    primes: Vec<u32>,
    bound: u64,
}

impl Sieve {
    fn sieve_initial(&mut self, bound: u64) {
        let len = bound as usize + 1;
        let mut composite = vec![false; len];
        let mut primes = Vec::new();
        for i in 2..len {
            if composite[i] {
                continue;
            }
            primes.push(i as u32);
            let mut j = i * i;
            while j < len {
                composite[j] = true;
                j += i;
            }
        }
        self.primes = primes;
        self.bound = bound;
    }

    /// Extends the sieve to cover `(bound, target]`. `target` must not exceed
    /// `bound^2`, so the primes already present suffice as sieving primes.
    fn extend_to(&mut self, target: u64) {
        debug_assert!(target <= self.bound.saturating_mul(self.bound));
        let mut lo = self.bound + 1;
        while lo <= target {
            let hi = (lo + SEGMENT_LEN - 1).min(target);
            let mut composite = vec![false; (hi - lo + 1) as usize];
            for &p in &self.primes {
                let p = p as u64;
                if p * p > hi {
                    break;
                }
                let mut m = (p * p).max(lo.div_ceil(p) * p);
                while m <= hi {
                    composite[(m - lo) as usize] = true;
                    m += p;
                }
            }
            let start = self.primes.len();
            self.primes.extend(
                composite
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| !c)
                    .map(|(i, _)| (lo + i as u64) as u32),
            );
            debug_assert!(self.primes[start..].windows(2).all(|w| w[0] < w[1]));
            self.bound = hi;
            lo = hi + 1;
        }
    }
}

/// Lazily grown table of primes shared by every Matula computation.
#[derive(Debug)]
pub struct PrimeTable {
    config: SieveConfig,
    sieve: RwLock<Sieve>,
}

impl Default for PrimeTable {
    fn default() -> Self {
        PrimeTable::new(SieveConfig::default())
    }
}

impl PrimeTable {
    pub fn new(config: SieveConfig) -> Self {
        assert!(
            config.ceiling <= u32::MAX as u64,
            "sieve ceiling must fit in a u32"
        );
        assert!(config.ceiling >= 2, "sieve ceiling must be at least 2");
        PrimeTable {
            config,
            sieve: RwLock::new(Sieve::default()),
        }
    }

    /// The process-wide table with the default configuration.
    pub fn global() -> Arc<PrimeTable> {
        static GLOBAL: OnceLock<Arc<PrimeTable>> = OnceLock::new();
        GLOBAL
            .get_or_init(|| Arc::new(PrimeTable::default()))
            .clone()
    }

    pub fn config(&self) -> SieveConfig {
        self.config
    }

    /// Largest value the sieve currently covers (0 before first use).
    pub fn sieved_bound(&self) -> u64 {
        self.sieve.read().unwrap().bound
    }

    /// Makes sure every prime `<= target` is known.
    fn ensure_bound(&self, target: u64) -> Result<()> {
        if target > self.config.ceiling {
            return Err(Error::CapacityExceeded(format!(
                "primes up to {target} requested, sieve ceiling is {}",
                self.config.ceiling
            )));
        }
        if self.sieve.read().unwrap().bound >= target {
            return Ok(());
        }
        let mut sieve = self.sieve.write().unwrap();
        if sieve.bound == 0 {
            let initial = self.config.initial_bound.clamp(2, self.config.ceiling);
            sieve.sieve_initial(initial);
        }
        while sieve.bound < target {
            let next = target
                .max(sieve.bound.saturating_mul(2))
                .min(sieve.bound.saturating_mul(sieve.bound))
                .min(self.config.ceiling);
            sieve.extend_to(next);
        }
        Ok(())
    }

    /// The `m`-th prime, `p_1 = 2`.
    pub fn nth_prime(&self, m: u64) -> Result<u64> {
        if m == 0 {
            return Err(Error::InvalidInput("prime order must be at least 1".into()));
        }
        loop {
            {
                let sieve = self.sieve.read().unwrap();
                if let Some(&p) = usize::try_from(m - 1)
                    .ok()
                    .and_then(|i| sieve.primes.get(i))
                {
                    return Ok(p as u64);
                }
                if sieve.bound >= self.config.ceiling {
                    return Err(Error::CapacityExceeded(format!(
                        "the {m}-th prime lies beyond the sieve ceiling {}",
                        self.config.ceiling
                    )));
                }
            }
            let current = self.sieved_bound();
            let target = nth_prime_upper_bound(m)
                .max(current.saturating_mul(2))
                .min(self.config.ceiling);
            self.ensure_bound(target)?;
        }
    }

    /// The order `m` of the prime `p`, i.e. `nth_prime(m) == p`.
    pub fn prime_index(&self, p: u64) -> Result<u64> {
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        self.ensure_bound(p)?;
        let sieve = self.sieve.read().unwrap();
        match sieve.primes.binary_search(&(p as u32)) {
            Ok(i) => Ok(i as u64 + 1),
            Err(_) => Err(Error::NotPrime(p)),
        }
    }

    /// Smallest prime factor of `n >= 2`.
    pub fn smallest_prime_factor(&self, n: u64) -> Result<u64> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("{n} has no prime factor")));
        }
        Ok(self.trial_divide(n, true)?.first().map_or(n, |&(p, _)| p))
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        Ok(n >= 2 && self.smallest_prime_factor(n)? == n)
    }

    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        if n == 0 {
            return Err(Error::InvalidInput("0 has no factorization".into()));
        }
        let factors = self.trial_divide(n, false)?;
        let omega = factors.iter().map(|&(_, k)| k).sum();
        Ok(Factorization { factors, omega })
    }

    /// Trial division by sieved primes up to the square root of the
    /// remaining cofactor. With `first_only` the search stops after the first
    /// prime found (whose multiplicity is then not meaningful).
    fn trial_divide(&self, n: u64, first_only: bool) -> Result<Vec<(u64, u32)>> {
        let mut factors = Vec::new();
        let mut rest = n;
        let mut index = 0usize;
        'outer: while rest > 1 {
            let root = rest.isqrt();
            self.ensure_bound(root)?;
            let sieve = self.sieve.read().unwrap();
            while let Some(&p) = sieve.primes.get(index) {
                let p = p as u64;
                if p > root {
                    break 'outer;
                }
                if rest.is_multiple_of(p) {
                    let mut k = 0;
                    while rest.is_multiple_of(p) {
                        rest /= p;
                        k += 1;
                    }
                    factors.push((p, k));
                    if first_only {
                        return Ok(factors);
                    }
                    index += 1;
                    // the cofactor shrank; re-derive its square root
                    continue 'outer;
                }
                index += 1;
            }
            // every sieved prime up to the square root has been tried
            break;
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Ok(factors)
    }
}

/// Rosser's bound: `p_m < m (ln m + ln ln m)` for `m >= 6`.
fn nth_prime_upper_bound(m: u64) -> u64 {
    if m < 6 {
        return 13;
    }
    let m = m as f64;
    (m * (m.ln() + m.ln().ln())).ceil() as u64 + 1
}

/// Prime factorization `n = p1^k1 * p2^k2 * ...` with `Ω(n) = k1 + k2 + ...`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
    omega: u32,
}

impl Factorization {
    /// `(prime, multiplicity)` pairs, ascending by prime.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of prime factors counted with multiplicity.
    pub fn omega(&self) -> u32 {
        self.omega
    }

    pub fn is_prime(&self) -> bool {
        self.omega == 1
    }

    /// Every prime factor repeated by its multiplicity, ascending.
    pub fn prime_factors(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors
            .iter()
            .flat_map(|&(p, k)| std::iter::repeat_n(p, k as usize))
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> u128 {
        self.prime_factors().map(u128::from).product()
    }

    /// Every divisor `d` with `1 < d < n`, ascending.
    pub fn proper_divisors(&self) -> Vec<u64> {
        let mut divisors = vec![1u64];
        for &(p, k) in &self.factors {
            let mut next = Vec::with_capacity(divisors.len() * (k as usize + 1));
            for &d in &divisors {
                let mut x = d;
                next.push(x);
                for _ in 0..k {
                    x *= p;
                    next.push(x);
                }
            }
            divisors = next;
        }
        divisors.sort_unstable();
        let n = self.value() as u64;
        divisors.retain(|&d| d != 1 && d != n);
        divisors
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, k)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if k == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{k}")?;
            }
        }
        Ok(())
    }
}

/// [`PrimeTable::nth_prime`] on the global table.
pub fn nth_prime(m: u64) -> Result<u64> {
    PrimeTable::global().nth_prime(m)
}

/// [`PrimeTable::prime_index`] on the global table.
pub fn prime_index(p: u64) -> Result<u64> {
    PrimeTable::global().prime_index(p)
}

/// [`PrimeTable::factorize`] on the global table.
pub fn factorize(n: u64) -> Result<Factorization> {
    PrimeTable::global().factorize(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_is_prime(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    fn small_table() -> PrimeTable {
        PrimeTable::new(SieveConfig {
            initial_bound: 10,
            ceiling: 200_000,
        })
    }

    #[test]
    fn first_primes() {
        let table = small_table();
        let expected = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];
        for (m, &p) in expected.iter().enumerate() {
            assert_eq!(table.nth_prime(m as u64 + 1).unwrap(), p);
        }
        assert_eq!(table.nth_prime(7).unwrap(), 17);
    }

    #[test]
    fn order_of_379721() {
        let table = PrimeTable::default();
        assert_eq!(table.nth_prime(32277).unwrap(), 379721);
        assert_eq!(table.prime_index(379721).unwrap(), 32277);
        assert_eq!(table.prime_index(17).unwrap(), 7);
        assert_eq!(table.prime_index(2).unwrap(), 1);
    }

    #[test]
    fn segmented_growth_matches_naive() {
        let table = small_table();
        assert_eq!(table.prime_index(99_991).unwrap(), 9592);
        let sieve = table.sieve.read().unwrap();
        let naive: Vec<u32> = (2..=sieve.bound)
            .filter(|&n| naive_is_prime(n))
            .map(|n| n as u32)
            .collect();
        assert_eq!(sieve.primes, naive);
    }

    #[test]
    fn not_prime() {
        let table = small_table();
        for n in [0, 1, 4, 9, 32277] {
            assert!(matches!(table.prime_index(n), Err(Error::NotPrime(m)) if m == n));
        }
    }

    #[test]
    fn capacity_exceeded() {
        let table = small_table();
        assert!(matches!(
            table.prime_index(200_003),
            Err(Error::CapacityExceeded(_))
        ));
        assert!(matches!(
            table.nth_prime(1_000_000),
            Err(Error::CapacityExceeded(_))
        ));
        // cofactor whose square root is beyond the ceiling
        let big = 1_000_000_007u64 * 1_000_000_009;
        assert!(matches!(
            table.factorize(big),
            Err(Error::CapacityExceeded(_))
        ));
    }

    #[test]
    fn nth_prime_zero_is_invalid() {
        assert!(matches!(
            small_table().nth_prime(0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn factorize_worked_example() {
        let table = PrimeTable::default();
        let f = table.factorize(987654321).unwrap();
        assert_eq!(f.factors(), &[(3, 2), (17, 2), (379721, 1)]);
        assert_eq!(f.omega(), 5);
        assert_eq!(f.to_string(), "3^2 * 17^2 * 379721");

        let f = table.factorize(32277).unwrap();
        assert_eq!(f.factors(), &[(3, 1), (7, 1), (29, 1), (53, 1)]);
    }

    #[test]
    fn factorize_one_and_zero() {
        let table = small_table();
        let one = table.factorize(1).unwrap();
        assert!(one.factors().is_empty());
        assert_eq!(one.omega(), 0);
        assert_eq!(one.value(), 1);
        assert!(matches!(table.factorize(0), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn proper_divisors_of_12() {
        let f = small_table().factorize(12).unwrap();
        assert_eq!(f.proper_divisors(), vec![2, 3, 4, 6]);
    }

    #[test]
    fn concurrent_growth() {
        let table = Arc::new(small_table());
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let table = table.clone();
                std::thread::spawn(move || table.nth_prime(2000 + 1000 * i).unwrap())
            })
            .collect();
        let got: Vec<u64> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(got, vec![17389, 27449, 37813, 48611]);
    }

    proptest! {
        #[test]
        fn factorization_recomposes(n in 1u64..2_000_000) {
            let f = factorize(n).unwrap();
            prop_assert_eq!(f.value(), n as u128);
            prop_assert_eq!(f.omega(), f.factors().iter().map(|&(_, k)| k).sum::<u32>());
            prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            for &(p, _) in f.factors() {
                prop_assert!(naive_is_prime(p));
            }
        }

        #[test]
        fn omega_is_additive(r in 1u64..50_000, s in 1u64..50_000) {
            let n = r * s;
            prop_assert_eq!(
                factorize(n).unwrap().omega(),
                factorize(r).unwrap().omega() + factorize(s).unwrap().omega()
            );
        }

        #[test]
        fn index_roundtrip(m in 1u64..50_000) {
            let p = nth_prime(m).unwrap();
            prop_assert_eq!(prime_index(p).unwrap(), m);
            prop_assert!(nth_prime(m + 1).unwrap() > p);
        }
    }
}
