//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("activation-pattern index {index} out of range (codebook holds {codebook_size})")]
    SapIndexOutOfRange { index: usize, codebook_size: usize },
    #[error("activation pattern has {got} indices, expected {expected}")]
    InvalidPattern { expected: usize, got: usize },
    #[error("activation pattern lies outside the codebook")]
    UnusedPattern,
    #[error("({re}, {im}) is not a constellation point")]
    InvalidSymbol { re: f64, im: f64 },
    #[error("empty symbol list")]
    EmptySymbols,
    #[error("subblock amplitude floor {0} is not a constellation amplitude level")]
    InvalidAmplitudeFloor(f64),
    #[error("vector length {got} does not match expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("PAPR is undefined for an all-zero signal")]
    ZeroSignal,
    #[error("tap count {taps} out of range 1..={max}")]
    TapsOutOfRange { taps: usize, max: usize },
    #[error("degenerate pairwise case: both signal terms vanish")]
    DegeneratePepCase,
    #[error("invalid pairwise case: {0}")]
    InvalidPepCase(String),
    #[error("empty distance support")]
    EmptySupport,
    #[error("base radius {r0} leaves a non-positive robustness metric (needs r0 < {max})")]
    NonPositiveMetric { r0: f64, max: f64 },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
