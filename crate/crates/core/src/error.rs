use thiserror::Error;

/// Errors raised by the exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix has determinant {det}, expected +1 or -1")]
    NotUnimodular { det: String },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("quiver contains a directed cycle")]
    CyclicQuiver,

    #[error("arrow {source_vertex}->{target} references a vertex outside 1..={n}")]
    VertexOutOfRange {
        source_vertex: usize,
        target: usize,
        n: usize,
    },

    #[error("dimension vector entry {value} at position {index} is negative")]
    NegativeDimension { index: usize, value: String },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("underlying graph is not a tree: {0}")]
    NotATree(&'static str),

    #[error("invalid weights {weights:?}: need at least two weights, each >= 2")]
    InvalidWeights { weights: Vec<u64> },

    #[error("offset {ell} lies outside the coefficient window 0..={max}")]
    OutOfWindow { ell: usize, max: usize },

    #[error(
        "triple ({a},{b},{c}) is outside the hypotheses of the canonical coefficient formulas"
    )]
    OutsideLemmaHypotheses { a: usize, b: usize, c: usize },

    #[error("coefficient of x^{degree} is {found}, expected 1 (trace -1)")]
    TraceMismatch { degree: usize, found: String },

    #[error(
        "power sums do not reconstruct an integer polynomial (coefficient {coeff} at x^{degree})"
    )]
    NonIntegerResult { degree: usize, coeff: String },
}

impl Error {
    /// Short machine-readable tag, used on the CLI error stream.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonSquare { .. } => "non-square",
            Error::NotUnimodular { .. } => "not-unimodular",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::CyclicQuiver => "cyclic-quiver",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::NegativeDimension { .. } => "negative-dimension",
            Error::EmptyInput(_) => "empty-input",
            Error::NotATree(_) => "not-a-tree",
            Error::InvalidWeights { .. } => "invalid-weights",
            Error::OutOfWindow { .. } => "out-of-window",
            Error::OutsideLemmaHypotheses { .. } => "outside-hypotheses",
            Error::TraceMismatch { .. } => "trace-mismatch",
            Error::NonIntegerResult { .. } => "non-integer-result",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
