use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: u64 },

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} exceeds the configured limit ({value} > {limit})")]
    GuardExceeded {
        what: &'static str,
        value: String,
        limit: String,
    },

    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),

    #[error("pattern is not alpha-acyclic")]
    NotAlphaAcyclic,

    #[error("pattern is not a forest")]
    NotAForest,

    #[error("orientation contains a directed cycle")]
    DirectedCycle,

    #[error("helper graph search exhausted its budget after {tried} candidates ({found} of {needed} rows)")]
    SearchExhausted {
        tried: usize,
        found: usize,
        needed: usize,
    },

    /// An internal invariant failed. Always a bug in this crate.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn guard(what: &'static str, value: impl ToString, limit: impl ToString) -> Self {
        Error::GuardExceeded {
            what,
            value: value.to_string(),
            limit: limit.to_string(),
        }
    }
}
