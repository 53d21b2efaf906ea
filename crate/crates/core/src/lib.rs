//! Exact and rigorous machinery for Briggs-type inequalities of partition
//! counting functions.
//!
//! The crate is organised around five concerns:
//!
//! - [`series`]: exact tables of p(n), p̄(n), p_k(n), p̄_k(n) via sparse
//!   pentagonal series arithmetic, plus an independent brute-force oracle.
//! - [`inequality`]: exact big-integer evaluation of log-concavity and the
//!   Briggs / strengthened Briggs predicates, range verification and
//!   threshold discovery.
//! - [`interval`]: arbitrary-precision interval arithmetic with dyadic
//!   endpoints and outward rounding, including certified enclosures of π,
//!   exp, sqrt and the modified Bessel function I₁.
//! - [`bounds`]: the explicit asymptotic sandwich bounds for all four
//!   counting functions and the error-term machinery behind them.
//! - [`certificates`]: exact reconstruction of the proof polynomials over
//!   ℚ[π] and replayable positivity certificates on rays [x₀, ∞).

pub mod bounds;
pub mod certificates;
pub mod error;
pub mod inequality;
pub mod interval;
pub mod series;

pub use error::Error;
pub use inequality::{InequalityKind, VerificationReport};
pub use interval::IntervalReal;
pub use series::{NaturalSeq, PartitionKind};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
