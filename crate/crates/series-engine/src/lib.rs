//! Power-series side of the local Hecke computation: expansion of the
//! rational presentations, term-by-term comparison against the coset
//! enumeration, and reconstruction of numerators from enumerated data.

pub mod compare;
pub mod error;
pub mod interpolate;
pub mod reconstruct;
pub mod series;

pub use compare::{
    closed_form_image, compare_with_oracle, count_point, substitute_prime, OracleComparison,
};
pub use error::SeriesError;
pub use interpolate::{eval_poly, lagrange_fit};
pub use reconstruct::{
    oracle_series, reconstruct_genus2_numerator, reconstruct_numerator, GENUS2_DEGREE_BOUND,
    GENUS2_FIT_PRIMES,
};
pub use series::{series_coefficients, truncated_denominator, truncated_product};

pub(crate) fn big(n: impl Into<num_bigint::BigInt>) -> poly_core::Coeff {
    poly_core::Coeff::from_integer(n.into())
}
