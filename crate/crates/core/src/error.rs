use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of the Gamma function at x = {0}")]
    Pole(f64),
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("series term overflowed at k = {k} (z = {z})")]
    Overflow { k: usize, z: f64 },
    #[error("missing datum: {0}")]
    MissingDatum(String),
    #[error("sampled functions live on different grids")]
    GridMismatch,
    #[error("grid too coarse: {0} nodes, need at least {1}")]
    GridTooCoarse(usize, usize),
    #[error("operation requires a uniform grid")]
    GridNotUniform,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("degenerate denominator {value:e} (threshold {threshold:e})")]
    DegenerateDenominator { value: f64, threshold: f64 },
    #[error("bracket error: {0}")]
    Bracket(String),
    #[error("no sign change on [{lo}, {hi}]: R(lo) = {r_lo:e}, R(hi) = {r_hi:e}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        r_lo: f64,
        r_hi: f64,
        /// Coarse scan of the residual curve, `(alpha, R(alpha))`.
        curve: Vec<(f64, f64)>,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
