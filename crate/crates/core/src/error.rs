use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed edge-list or graph6 input.
    #[error("format error on line {line}: {msg}")]
    Format { line: usize, msg: String },

    /// A covering that does not fit the graph it is paired with.
    #[error("invalid covering: {0}")]
    InvalidCovering(String),

    /// Structural mismatch between related objects (e.g. a multigraph whose
    /// underlying graph is not the expected one).
    #[error("structural error: {0}")]
    Structural(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    /// An exact search ran past its time budget. No partial answer is reported.
    #[error("time budget exceeded during {0}")]
    BudgetExceeded(&'static str),

    /// Two independent evaluation routes that must agree did not.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn format(line: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            line,
            msg: msg.into(),
        }
    }
}
