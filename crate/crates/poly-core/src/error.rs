use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// A variable with a negative exponent was bound to zero, or a
    /// denominator factor collapsed to zero.
    #[error("pole at substitution")]
    PoleAtSubstitution,
    /// An evaluation point sent a variable with a negative exponent to zero.
    #[error("pole at evaluation")]
    PoleAtEvaluation,
    /// A negative power was requested of a polynomial that is not a single
    /// monomial; only monomials are invertible in the Laurent ring.
    #[error("cannot invert a non-monomial polynomial")]
    NonMonomialInverse,
    #[error("exponent overflow")]
    ExponentOverflow,
    /// Evaluation requires every variable that actually occurs to be bound.
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}
