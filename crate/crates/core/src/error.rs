use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by every module of the simulator.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} qubits, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// An operation that requires a Hermitian-flagged sum received one that is not.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("resource guard: {0}")]
    Resource(String),

    #[error("index out of range: {0}")]
    Index(String),

    /// A term acts with X or Y on a qubit that tapering assumed to be a Z symmetry.
    #[error("symmetry violation: {0}")]
    Symmetry(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("out of range: {0}")]
    Range(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A numerical invariant (norm, entropy symmetry, ...) failed at run time.
    #[error("numerical invariant `{invariant}` violated: {detail}")]
    Numerical { invariant: String, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn numerical(invariant: &str, detail: impl Into<String>) -> Self {
        Error::Numerical {
            invariant: invariant.to_string(),
            detail: detail.into(),
        }
    }
}
