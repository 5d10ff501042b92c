use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A slice range does not fit the buffer or the requested sections overlap.
    #[error("index range error: {0}")]
    IndexRange(String),

    #[error("recursive swap rotation supports at most {limit} elements (got {n}); use the iterative variant")]
    DepthGuard { n: usize, limit: usize },

    #[error("invariant checking is limited to {limit} elements (got {n})")]
    CheckLimit { n: usize, limit: usize },

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
