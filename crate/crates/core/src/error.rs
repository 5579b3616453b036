use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library.
///
/// The variants map onto the CLI exit-code contract: `Domain` and
/// `Invariant` are checked negative results (exit 1), everything else is a
/// usage, input or resource problem (exit 2).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands or arguments that do not fit together (mixed fields, bad
    /// shapes, Hermitian form over a prime field, ...).
    #[error("usage error: {0}")]
    Usage(String),
    /// A mathematically meaningful precondition failed (not LCD, k too small, ...).
    #[error("{0}")]
    Domain(String),
    /// An enumeration or search would exceed the configured budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A constructed object failed a property that the construction guarantees.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
