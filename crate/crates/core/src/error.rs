use crate::exact::Int;
use thiserror::Error;

/// Errors surfaced by sail and invariant computations.
#[derive(Debug, Error)]
pub enum KleinError {
    #[error("operator is not hyperbolic: {0}")]
    NotHyperbolic(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("unit group is rank deficient after enumeration up to height {height}")]
    RankDeficient { height: i64 },
    #[error("sail construction did not stabilize after {steps} growth steps ({hint})")]
    NonTermination { steps: usize, hint: String },
    #[error("quotient inconsistent: {0}")]
    QuotientInconsistent(String),
    #[error("det(I - A) = {0}, not a unit; conjugation identity does not apply")]
    NonUnimodularIntermediate(Int),
    #[error("norm {0} exceeds the configured maximum {1}; classification beyond it is exploratory")]
    NormGuard(u64, u64),
    #[error("certified precision exhausted: {0}")]
    Precision(String),
}
