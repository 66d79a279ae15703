//! Term-by-term comparison of the closed-form presentation against the
//! coset enumeration.
//!
//! The degree-`delta` series coefficient of `P(X)/Q(X)` lives in
//! `Q(p)[x0..xn]`, while the enumerated image of the Hecke operator at a
//! concrete prime lives in `Q[x0..xn]`. The comparison therefore substitutes
//! the prime into the closed form and matches polynomials exactly. As an
//! independent cross-check, both sides are evaluated at the point that sends
//! every normalized coset monomial to 1; there the image collapses to the raw
//! coset count.

use std::collections::BTreeMap;

use hecke_oracle::{
    count_by_profile, spherical_monomial, CosetSpec, EnumConfig, NormalizationOrder,
};
use poly_core::{coeff_pow, Coeff, MultiPoly, Var};
use sym_table::{hecke_series, SymConvention};

use crate::big;
use crate::error::SeriesError;
use crate::series::series_coefficients;

/// Evaluates the residue characteristic to a concrete prime.
pub fn substitute_prime(poly: &MultiPoly, p: i128) -> Result<MultiPoly, SeriesError> {
    Ok(poly.substitute_var(Var::P, &MultiPoly::constant(big(p)))?)
}

/// Coefficient of `X^delta` in the genus-n presentation, with the prime
/// substituted.
pub fn closed_form_image(
    genus: usize,
    p: i128,
    delta: u32,
    convention: SymConvention,
) -> Result<MultiPoly, SeriesError> {
    let rf = hecke_series(genus, convention)?;
    let s = series_coefficients(&rf, delta)?;
    substitute_prime(&s[delta as usize], p)
}

/// The point `x0 = p^(n(n+1)/2)`, `xi = p^-(n+1-i)` at which every
/// normalized coset monomial (descending order) evaluates to 1, so an image
/// polynomial evaluates to its coset count.
pub fn count_point(genus: usize, p: i128) -> Result<BTreeMap<Var, Coeff>, SeriesError> {
    let base = big(p);
    let tri = (genus * (genus + 1) / 2) as i32;
    let mut point = BTreeMap::new();
    point.insert(Var::P, base.clone());
    point.insert(Var::X0, coeff_pow(&base, tri)?);
    for i in 1..=genus {
        let e = (genus + 1 - i) as i32;
        point.insert(Var::satake(i), coeff_pow(&base, -e)?);
    }
    Ok(point)
}

/// Outcome of one verification of the presentation at `(genus, p, delta)`.
#[derive(Clone, Debug)]
pub struct OracleComparison {
    pub genus: usize,
    pub p: i128,
    pub delta: u32,
    /// Series coefficient of the closed form, prime substituted.
    pub closed_form: MultiPoly,
    /// Count-weighted sum of normalized monomials over the enumerated cosets.
    pub oracle: MultiPoly,
    pub coset_count: u128,
    pub images_match: bool,
    /// Closed form evaluated at [`count_point`] equals the coset count.
    pub count_matches: bool,
}

impl OracleComparison {
    pub fn matches(&self) -> bool {
        self.images_match && self.count_matches
    }
}

/// Expands the presentation to degree `delta`, enumerates the cosets of the
/// Hecke operator at `p^delta`, and compares the two images.
pub fn compare_with_oracle(
    genus: usize,
    p: i128,
    delta: u32,
    convention: SymConvention,
    order: NormalizationOrder,
    config: &EnumConfig,
) -> Result<OracleComparison, SeriesError> {
    let closed_form = closed_form_image(genus, p, delta, convention)?;
    let spec = CosetSpec::new(genus, p, delta);
    let profiles = count_by_profile(&spec, config)?;
    let coset_count: u128 = profiles.values().sum();
    let mut oracle = MultiPoly::zero();
    for (profile, count) in &profiles {
        let m = spherical_monomial(genus, p, delta, profile, order);
        oracle = &oracle + &m.mul_scalar(&big(*count));
    }
    let images_match = closed_form == oracle;
    let at_count_point = closed_form.eval(&count_point(genus, p)?)?;
    let count_matches = at_count_point == big(coset_count);
    Ok(OracleComparison {
        genus,
        p,
        delta,
        closed_form,
        oracle,
        coset_count,
        images_match,
        count_matches,
    })
}
