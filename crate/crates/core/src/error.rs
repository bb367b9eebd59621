use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid group descriptor `{0}`: {1}")]
    InvalidDescriptor(String, String),

    #[error("cochain is not a cocycle; first failing tuple {0:?}")]
    NotCocycle(Vec<usize>),

    #[error("cochain mismatch: {0}")]
    CochainMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("representation check failed: {0}")]
    NotProjective(String),

    #[error("non-integral multiplicity {value} for basis element {index}")]
    NonIntegralMultiplicity { index: usize, value: String },

    #[error("irreducible splitting did not converge after {0} attempts")]
    SplittingFailed(usize),

    #[error("cocycles expected to be cohomologous are not: {0}")]
    NotCohomologous(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
