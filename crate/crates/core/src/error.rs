use thiserror::Error;

/// Errors raised by graph construction, the exact algebra routines and the sweeps.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),

    /// A brute-force enumeration was asked for a graph larger than its cap.
    #[error("graph order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    /// The floating eigensolver did not converge or failed its residual check.
    #[error("eigensolver failure: {0}")]
    Numeric(String),

    /// An operation's structural precondition does not hold.
    #[error("not applicable: {0}")]
    Inapplicable(String),

    /// A sweep found a graph contradicting a proven statement.
    #[error("{check} violated by {graph}")]
    Violation { check: String, graph: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
