//! Symmetrized coefficient tables for the genus-4 spinor Hecke series.
//!
//! The local series at a prime `p` has an exact rational presentation
//! `P(X) / Q(X)` in the Satake parameters `x0, .., x4`: the denominator is
//! the product of `2^4` linear factors indexed by subsets of the parameters
//! and the numerator is a degree-14 polynomial whose coefficients are short
//! combinations of symmetrized monomials. This crate holds that coefficient
//! table, expands it into the polynomial ring of `poly-core`, and implements
//! the symmetry checks (coefficient pairing and whole-polynomial inversion)
//! that pin the table down, plus the Siegel projection `x4 -> 0` connecting
//! genus 4 to genus 3.

mod builders;
mod checks;
pub mod data;
mod error;
mod ktable;
mod latex;
mod orbit;

pub use builders::{
    denominator_factors, hecke_series, numerator, siegel_project, siegel_project_poly, MAX_GENUS,
};
pub use checks::{
    check_duality, check_functional_equation, check_remark_relation, duality_residual,
    functional_equation_residuals, remark_residual,
};
pub use error::SymError;
pub use ktable::{KTable, EMBEDDED_TABLE_JSON};
pub use latex::{latex_denominator, latex_numerator_table};
pub use orbit::{orbit_size, sym_poly, SymConvention};
