use thiserror::Error;

/// Library-wide error type.
///
/// The string before the first `:` in the display form is a stable error
/// code (`domain-error`, `unsupported-parameter`, `degenerate-configuration`,
/// `resource-limit`, `search-failure`, `parse-error`, `io-error`); callers
/// such as the CLI rely on these codes staying fixed.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain-error: {0}")]
    Domain(String),

    /// Parameter combination for which no formula is implemented on purpose
    /// (as opposed to an invalid argument).
    #[error("unsupported-parameter: {0}")]
    Unsupported(String),

    /// Point configuration violates the distinctness/finiteness invariants.
    #[error("degenerate-configuration: {0}")]
    Degenerate(String),

    /// Work would exceed a combinatorial safety limit.
    #[error("resource-limit: {0}")]
    ResourceLimit(String),

    /// Optimization finished without a single feasible evaluation.
    #[error("search-failure: {0}")]
    SearchFailure(String),

    /// Malformed input text (point files, numbers).
    #[error("parse-error: {0}")]
    Parse(String),

    #[error("io-error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-parsable code for this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain-error",
            Error::Unsupported(_) => "unsupported-parameter",
            Error::Degenerate(_) => "degenerate-configuration",
            Error::ResourceLimit(_) => "resource-limit",
            Error::SearchFailure(_) => "search-failure",
            Error::Parse(_) => "parse-error",
            Error::Io(_) => "io-error",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
