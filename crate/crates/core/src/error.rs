use thiserror::Error;

/// Failure modes shared by every algorithm in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no closure: the series 1 + a + a^2 + ... diverges for {value} in {semiring}")]
    NoClosure { semiring: String, value: String },

    #[error("no inverse: {value} is not invertible in {semiring}")]
    NoInverse { semiring: String, value: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not strictly triangular")]
    NotTriangular,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("split {split} is outside 1..={max}")]
    BadSplit { split: usize, max: usize },

    #[error("entry ({row}, {col}) lies outside the declared band (p={p}, q={q})")]
    BandViolation { row: usize, col: usize, p: usize, q: usize },

    #[error("{0} is not idempotent")]
    NotIdempotentSemiring(String),

    #[error("invalid interval: lower bound {lower} is not below upper bound {upper}")]
    InvalidInterval { lower: String, upper: String },

    #[error("no path from node {from} to node {to}")]
    NoPath { from: usize, to: usize },

    #[error("closure entry ({from}, {to}) is not attained by any finite path")]
    UnboundedPath { from: usize, to: usize },

    #[error("iteration did not converge: {0}")]
    NoConvergence(String),

    #[error("unknown method `{0}`")]
    UnknownMethod(String),

    #[error("unknown semiring `{0}`")]
    UnknownSemiring(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
