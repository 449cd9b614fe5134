use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime modulus in the supported range")]
    NotPrime(u32),

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("operands live in different algebras ({0})")]
    ParentMismatch(String),

    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("linear map is not multiplicative: {0}")]
    NotMultiplicative(String),

    #[error("action axiom fails: {0}")]
    Action(String),

    #[error("{what} = {value} outside the supported range {min}..={max}")]
    Range {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid simplicial data: {0}")]
    Simplicial(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown name `{name}` referenced from {location}")]
    UnknownName { name: String, location: String },
}

impl Error {
    pub(crate) fn dim(context: impl Into<String>, expected: usize, found: usize) -> Self {
        Error::Dimension {
            context: context.into(),
            expected,
            found,
        }
    }
}
