use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("{mu} is not contained in {lambda}")]
    NotContained { lambda: String, mu: String },

    #[error("r too small: r = {r} but the partition has {len} rows")]
    RTooSmall { r: usize, len: usize },

    #[error("{name} must be positive")]
    NonPositive { name: &'static str },

    #[error("no divisor-basis decomposition: polynomial is not pre-CSP modulo {m}")]
    NoDecomposition { m: usize },

    #[error("no removal sequence: the {d}-quotient of {shape} does not exist")]
    NoRemovalSequence { shape: String, d: usize },

    #[error("cores differ: residue class sizes of {shape} mod {d} do not match")]
    CoresDiffer { shape: String, d: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("{d} does not divide {n}")]
    NotDivisor { d: usize, n: usize },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
