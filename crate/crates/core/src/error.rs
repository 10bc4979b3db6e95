use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A divided difference left a remainder. Always an internal bug.
    #[error("division by {divisor} is not exact")]
    InexactDivision { divisor: &'static str },

    #[error("scalar polynomial is not W(B2)-invariant")]
    NotInvariant,

    #[error("result is not a scalar multiple of p12")]
    NotMultipleOfP12,

    #[error("n = {n} is not supported by the operator backend (max {max})")]
    UnsupportedN { n: usize, max: usize },

    #[error("hypergeometric series does not converge: {0}")]
    NonConvergent(String),

    #[error("tolerance {tol:e} unreachable: {reason}")]
    TolUnreachable { tol: f64, reason: String },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("parameters outside the admissible region: {0}")]
    Region(String),

    #[error("pole of the gamma function at {0}")]
    Pole(f64),

    #[error("degenerate lower parameter: {0}")]
    Degenerate(String),

    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
