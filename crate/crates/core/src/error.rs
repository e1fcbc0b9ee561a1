use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("unsupported order {order} (limit is {limit})")]
    UnsupportedOrder { order: usize, limit: usize },
    #[error("label arithmetic overflowed: {0}")]
    Overflow(String),
    #[error("{path}: {message}")]
    Document { path: String, message: String },
}

impl Error {
    /// Stable machine-readable tag for the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::InvalidGraph(_) => "invalid-graph",
            Error::InvalidLabeling(_) => "invalid-labeling",
            Error::PreconditionViolation(_) => "precondition-violation",
            Error::UnsupportedOrder { .. } => "unsupported-order",
            Error::Overflow(_) => "overflow",
            Error::Document { .. } => "document",
        }
    }

    pub(crate) fn document(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Document {
            path: path.into(),
            message: message.into(),
        }
    }
}
