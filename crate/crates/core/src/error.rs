use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("form {0} is not positive definite")]
    NotPositiveDefinite(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("pole at s = {0}")]
    Pole(String),
    #[error("precision loss: {0}")]
    PrecisionLoss(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("did not converge: {0}")]
    NonConvergence(String),
    #[error("quadrature failed: {0}")]
    Quadrature(String),
    #[error("hypothesis not satisfied: {0}")]
    HypothesisRejected(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by the library.
    pub fn is_user_error(&self) -> bool {
        matches!(
            self,
            Error::NotPositiveDefinite(_)
                | Error::InvalidArgument(_)
                | Error::Domain(_)
                | Error::Pole(_)
                | Error::PrecisionLoss(_)
                | Error::Resource(_)
                | Error::HypothesisRejected(_)
                | Error::Parse(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
