use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual input; `pos` is the 1-based character position.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A partition does not fit the staircase bound for the requested size.
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    /// A size limit configured in `Caps` would be exceeded.
    #[error("capacity exceeded for {what}: requested {requested}, cap {cap}")]
    Capacity {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    /// Operation only defined when q is specialised to the third root of unity.
    #[error("operation requires the cyclotomic domain (q = e^(2*pi*i/3)): {0}")]
    RequiresOmega(&'static str),

    /// Variable index outside 1..=nvars.
    #[error("variable index {index} out of range (nvars = {nvars})")]
    VarIndex { index: usize, nvars: usize },

    /// A linear system that a theorem guarantees to be solvable was not.
    #[error("singular matrix: {0}")]
    Singular(String),

    /// Kernel of an operator had unexpected dimension.
    #[error("kernel dimension {found}, expected {expected}")]
    KernelDimension { expected: usize, found: usize },

    /// Neither (or both) of two candidate conventions matched the calibration data.
    #[error("unresolved convention: {0}")]
    UnresolvedConvention(String),

    /// An exact cross-check failed; this falsifies the identity under test.
    #[error("falsified: {context}: {detail}")]
    Falsified { context: String, detail: String },

    /// Modular rational reconstruction did not converge.
    #[error("rational reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidShape(_) | Error::VarIndex { .. } => 2,
            Error::Capacity { .. } => 3,
            _ => 1,
        }
    }
}
