use std::fmt;

/// A malformed canonical tree string, with the byte offset of the problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at byte {}", self.message, self.offset)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(#[from] ParseError),

    #[error("tree has {vertices} vertices, oracle budget is {budget}")]
    BudgetExceeded { vertices: usize, budget: usize },

    /// A value that must be integral by construction came out fractional.
    /// This always indicates a bug, never bad user input.
    #[error("internal integrity error: {0}")]
    InternalIntegrity(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
