//! Brute-force oracle for local Hecke operators on the symplectic
//! similitude group: enumerate the left cosets of `T(p^delta)` through their
//! Hermite normal forms, classify them by elementary divisors, and push the
//! sum through the spherical map into the Satake polynomial ring.
//!
//! Everything here is deliberately independent of the closed-form rational
//! presentation so the two can be compared term by term.

mod enumerate;
mod error;
mod matrix;
mod smith;
mod spherical;

pub use enumerate::{
    count_by_profile, count_by_type, diagonal_types, estimate_cosets, materialize, total_count,
    visit_cosets, CosetSpec, EnumConfig,
};
pub use error::OracleError;
pub use matrix::Matrix;
pub use smith::{smith_diagonal, DivisorChain};
pub use spherical::{
    spherical_classes, spherical_image, spherical_monomial, ClassSummary, NormalizationOrder,
};
