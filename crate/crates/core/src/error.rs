use thiserror::Error;

/// Errors raised by the group engine and the verification harness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: bad permutation, degree mismatch, bad cycle string.
    #[error("input error: {0}")]
    Input(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An enumeration or search would exceed its configured budget.
    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    Budget {
        what: String,
        needed: u128,
        budget: u128,
    },

    /// Group-file syntax error, with the 1-based line number.
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("order mismatch: expected {expected}, computed {computed}")]
    OrderMismatch { expected: u128, computed: u128 },

    #[error("unknown group id `{0}`")]
    UnknownGroup(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn budget(what: impl Into<String>, needed: u128, budget: u128) -> Self {
        Error::Budget {
            what: what.into(),
            needed,
            budget,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
