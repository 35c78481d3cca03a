use thiserror::Error;

/// Errors produced by the exact core, certificate builders and parsers.
///
/// Matrix positions in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of bounds for dimension {n}")]
    IndexOutOfBounds { index: usize, n: usize },

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("matrix must have at least one row")]
    EmptyMatrix,

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("matrix is not symmetric at ({row},{col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("leading principal minor Δ{k} vanishes")]
    DegeneratePivot { k: usize },

    #[error("malformed minor chain: {0}")]
    MalformedChain(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NonConvergence { sweeps: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Errors from the form, matrix and number grammars. Positions are byte
/// offsets into the source text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },

    #[error("unknown variable `{name}` at {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("term at {pos} is not quadratic: {reason}")]
    NonQuadraticTerm { pos: usize, reason: String },

    #[error("variable `{name}` at {pos} mixes the x,y,z and x1..xn alphabets")]
    MixedAlphabet { name: String, pos: usize },

    #[error("invalid number `{text}`")]
    InvalidNumber { text: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
