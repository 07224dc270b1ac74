use thiserror::Error;

/// Errors shared by every layer of the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("configured bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("lattice closure did not stabilize within {0} iterations")]
    LatticeUnstable(usize),

    #[error("meataxe step limit exceeded after {0} attempts")]
    MeataxeStepLimit(usize),

    #[error("validation failure: {0}")]
    Validation(String),

    #[error("unidentified composition factor of dimension {0}")]
    UnidentifiedFactor(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
