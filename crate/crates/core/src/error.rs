//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("regularity index k must be at least 2, got {0}")]
    InvalidRegularity(u64),

    #[error("n = {n} outside supported range [{lo}, {hi}]")]
    OutOfRange { n: u64, lo: u64, hi: u64 },

    #[error("predicate window [{from}, {to}] does not fit a table with n_max = {n_max}")]
    WindowOutOfBounds { from: i64, to: u64, n_max: u64 },

    #[error("empty range: lo = {lo} > hi = {hi}")]
    EmptyRange { lo: u64, hi: u64 },

    #[error("n = {n} is below the validity threshold {threshold} of this bound")]
    BelowThreshold { n: u64, threshold: u64 },

    #[error("square root of an interval with negative lower endpoint")]
    NegativeSqrt,

    #[error("Bessel argument must be nonnegative")]
    NegativeBessel,

    #[error("nonpositive argument where a positive one is required")]
    NonPositive,

    #[error("division by an interval containing zero")]
    DivisionByZero,

    #[error("comparison undecidable at the precision cap of {cap} bits")]
    PrecisionCap { cap: u32 },

    #[error("zero polynomial has no positivity certificate")]
    ZeroPolynomial,

    #[error("ray start must be positive, got {0}")]
    NonPositiveRay(String),

    #[error("malformed report: {0}")]
    MalformedReport(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
