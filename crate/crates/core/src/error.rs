use thiserror::Error;

/// Errors raised by the algebra, the solvers and the decision engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("matrix must be square, found {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix or vector has no entries")]
    Empty,

    #[error("entry {value} at ({row}, {col}) is negative or not finite")]
    InvalidEntry { row: usize, col: usize, value: f64 },

    #[error("conjugate transpose of a zero matrix is undefined")]
    ZeroMatrix,

    #[error("vector is zero")]
    ZeroVector,

    #[error("{what} must be positive")]
    NotPositive { what: &'static str },

    #[error("Tr(A) = {tr} exceeds 1; the Kleene star is undefined")]
    TrExceedsOne { tr: f64 },

    #[error("no positive solution: Tr(A) = {tr} exceeds 1")]
    NoPositiveSolution { tr: f64 },

    #[error("spectral radius is zero")]
    ZeroSpectralRadius,

    #[error("matrix {matrix} is not reciprocal: {violation}")]
    NotReciprocal {
        matrix: String,
        violation: crate::ahp::ReciprocalViolation,
    },

    #[error("invalid decision problem: {0}")]
    InvalidProblem(String),

    #[error("power iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn mismatch(expected: impl ToString, found: impl ToString) -> Error {
    Error::DimensionMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}
