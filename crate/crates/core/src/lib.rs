//! Matula numbers: a bijection between the positive integers and rooted
//! trees, and a library of tree statistics computed straight from the number.
//!
//! ```
//! use matula::{decode, StatName, StatsEngine};
//!
//! let tree = decode(987654321).unwrap();
//! assert_eq!(tree.root_degree(), 5);
//!
//! let mut engine = StatsEngine::new();
//! let edp = engine.poly_stat(StatName::Edp, 987654321).unwrap();
//! assert_eq!(edp.to_string(), "15 + 9*x + 5*x^2");
//! ```

pub mod bfile;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod primes;
pub mod stats;
pub mod tree;

pub use error::{Error, ParseError, Result};
pub use poly::IntPolynomial;
pub use primes::{factorize, nth_prime, prime_index, Factorization, PrimeTable, SieveConfig};
pub use stats::{Exponent, StatKind, StatName, StatParams, StatValue, StatsEngine, TreeProfile};
pub use tree::{decode, encode, RootedTree};
