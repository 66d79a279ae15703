//! Numerator reconstruction from enumerated coset data.
//!
//! With the denominator `Q(X)` known and series coefficients `S_0, S_1, ...`
//! enumerated at a prime, the candidate numerator coefficients are the
//! convolution `p_k = sum_{j<=k} q_j S_(k-j)`. If the series really equals
//! `P(X)/Q(X)` with `deg P <= D`, every convolution coefficient past `D`
//! vanishes, so a nonzero tail rejects the degree bound. Running this at
//! several primes and fitting each monomial coefficient as a polynomial in
//! `p` (after clearing the bounded denominator power) recovers the symbolic
//! numerator, with the primes left out of each fit serving as exact checks.

use std::collections::BTreeSet;

use hecke_oracle::{
    estimate_cosets, spherical_image, CosetSpec, EnumConfig, NormalizationOrder, OracleError,
};
use num_traits::Zero;
use poly_core::{coeff_pow, Coeff, ExpVec, MultiPoly, Var};
use sym_table::denominator_factors;

use crate::big;
use crate::error::SeriesError;
use crate::interpolate::{eval_poly, lagrange_fit};
use crate::series::truncated_product;

/// Enumerated images of the Hecke operators at `p^0 .. p^up_to`.
pub fn oracle_series(
    genus: usize,
    p: i128,
    up_to: u32,
    order: NormalizationOrder,
    config: &EnumConfig,
) -> Result<Vec<MultiPoly>, SeriesError> {
    (0..=up_to)
        .map(|delta| Ok(spherical_image(&CosetSpec::new(genus, p, delta), config, order)?))
        .collect()
}

/// Convolves a series with the expanded denominator, returning the numerator
/// coefficients up to `degree_bound`. Every convolution coefficient past the
/// bound must vanish. The denominator must start at 1 and carry no negative
/// `X`-powers; the series must reach past the bound.
pub fn reconstruct_numerator(
    series: &[MultiPoly],
    denominator: &MultiPoly,
    degree_bound: usize,
) -> Result<Vec<MultiPoly>, SeriesError> {
    assert!(
        series.len() > degree_bound,
        "series too short for the degree bound"
    );
    let q_parts = denominator.by_powers_of(Var::X);
    match q_parts.get(&0) {
        Some(c) if c.is_one() => {}
        _ => return Err(SeriesError::NonUnitDenominator),
    }
    if q_parts.keys().any(|&k| k < 0) {
        return Err(SeriesError::NonUnitDenominator);
    }
    let mut out = Vec::with_capacity(degree_bound + 1);
    for k in 0..series.len() {
        let mut acc = MultiPoly::zero();
        for (&j, qj) in q_parts.range(0..=k as i32) {
            acc = &acc + &(qj * &series[k - j as usize]);
        }
        if k <= degree_bound {
            out.push(acc);
        } else if !acc.is_zero() {
            return Err(SeriesError::InconsistentSeries);
        }
    }
    Ok(out)
}

/// Primes at which the genus-2 reconstruction enumerates cosets. The primes
/// left out of each polynomial fit double as exact held-out checks.
pub const GENUS2_FIT_PRIMES: [i128; 9] = [2, 3, 5, 7, 11, 13, 17, 19, 23];

/// Degree of the genus-2 numerator in `X`, as forced by the functional
/// equation of the genus-2 series.
pub const GENUS2_DEGREE_BOUND: usize = 2;

/// Reconstructs the symbolic genus-2 numerator from coset enumeration alone.
///
/// At each prime the numeric numerator comes from [`reconstruct_numerator`];
/// at `p <= 3` the series is enumerated one degree past the bound so the
/// vanishing of the tail is actually checked. The coefficient of each
/// monomial, scaled by `p^(3k)` to clear its denominator, is a polynomial in
/// `p` of degree at most `3k + 2`; it is fitted through the first
/// `min(3k + 3, 8)` primes and verified exactly at every remaining prime.
pub fn reconstruct_genus2_numerator(config: &EnumConfig) -> Result<MultiPoly, SeriesError> {
    let genus = 2usize;
    let tri = 3i32;
    let order = NormalizationOrder::Descending;
    let depth = |p: i128| -> u32 {
        if p <= 3 {
            GENUS2_DEGREE_BOUND as u32 + 1
        } else {
            GENUS2_DEGREE_BOUND as u32
        }
    };
    // Fail fast if any of the planned enumerations would blow the budget.
    for &p in GENUS2_FIT_PRIMES.iter() {
        let estimate = estimate_cosets(&CosetSpec::new(genus, p, depth(p)))?;
        if estimate > config.budget {
            return Err(OracleError::BudgetExceeded {
                estimate,
                budget: config.budget,
            }
            .into());
        }
    }
    let factors = denominator_factors(genus)?;
    let mut per_prime: Vec<(i128, Vec<MultiPoly>)> = Vec::new();
    for &p in GENUS2_FIT_PRIMES.iter() {
        let up_to = depth(p);
        let series = oracle_series(genus, p, up_to, order, config)?;
        let q = truncated_product(&factors, up_to);
        per_prime.push((p, reconstruct_numerator(&series, &q, GENUS2_DEGREE_BOUND)?));
    }
    let mut numerator = MultiPoly::zero();
    for k in 0..=GENUS2_DEGREE_BOUND {
        let lift = tri * k as i32;
        let mut support: BTreeSet<ExpVec> = BTreeSet::new();
        for (_, nums) in &per_prime {
            support.extend(nums[k].terms().map(|(e, _)| *e));
        }
        let nodes = (3 * k + 3).min(GENUS2_FIT_PRIMES.len() - 1);
        for e in support {
            let lifted = |entry: &(i128, Vec<MultiPoly>)| -> Result<Coeff, SeriesError> {
                let scale = coeff_pow(&big(entry.0), lift)?;
                Ok(entry.1[k].coeff_of(&e) * scale)
            };
            let mut points = Vec::with_capacity(nodes);
            for entry in &per_prime[..nodes] {
                points.push((big(entry.0), lifted(entry)?));
            }
            let fit = lagrange_fit(&points);
            for entry in &per_prime[nodes..] {
                if eval_poly(&fit, &big(entry.0)) != lifted(entry)? {
                    return Err(SeriesError::InterpolationMismatch(entry.0));
                }
            }
            for (d, c) in fit.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let exps = e.with(Var::P, d as i32 - lift).with(Var::X, k as i32);
                numerator = &numerator + &MultiPoly::monomial(exps, c.clone());
            }
        }
    }
    Ok(numerator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compare::substitute_prime;
    use sym_table::{numerator, SymConvention};

    #[test]
    fn genus_one_numerator_is_one() {
        let factors = denominator_factors(1).unwrap();
        let q = truncated_product(&factors, 6);
        for p in [2i128, 3] {
            let series = oracle_series(
                1,
                p,
                6,
                NormalizationOrder::Descending,
                &EnumConfig::default(),
            )
            .unwrap();
            let nums = reconstruct_numerator(&series, &q, 0).unwrap();
            assert_eq!(nums, vec![MultiPoly::one()]);
        }
    }

    #[test]
    fn genus_two_convolution_recovers_the_numeric_numerator() {
        let factors = denominator_factors(2).unwrap();
        let series = oracle_series(
            2,
            2,
            3,
            NormalizationOrder::Descending,
            &EnumConfig::default(),
        )
        .unwrap();
        let q = truncated_product(&factors, 3);
        let nums = reconstruct_numerator(&series, &q, 2).unwrap();
        let closed =
            substitute_prime(&numerator(2, SymConvention::OrbitSum).unwrap(), 2).unwrap();
        let parts = closed.by_powers_of(Var::X);
        for (k, num) in nums.iter().enumerate() {
            let expect = parts
                .get(&(k as i32))
                .cloned()
                .unwrap_or_else(MultiPoly::zero);
            assert_eq!(num, &expect, "degree {k}");
        }
    }

    #[test]
    fn underestimated_degree_bound_is_rejected() {
        let factors = denominator_factors(2).unwrap();
        let series = oracle_series(
            2,
            2,
            3,
            NormalizationOrder::Descending,
            &EnumConfig::default(),
        )
        .unwrap();
        let q = truncated_product(&factors, 3);
        let err = reconstruct_numerator(&series, &q, 1).unwrap_err();
        assert_eq!(err.to_string(), "inconsistent series / wrong degree bound");
    }

    #[test]
    fn wrong_denominator_leaves_a_tail() {
        let mut factors = denominator_factors(2).unwrap();
        factors.pop();
        let series = oracle_series(
            2,
            2,
            3,
            NormalizationOrder::Descending,
            &EnumConfig::default(),
        )
        .unwrap();
        let q = truncated_product(&factors, 3);
        assert!(matches!(
            reconstruct_numerator(&series, &q, 2),
            Err(SeriesError::InconsistentSeries)
        ));
    }

    #[test]
    fn default_budget_refuses_the_reconstruction() {
        let err = reconstruct_genus2_numerator(&EnumConfig::default()).unwrap_err();
        assert!(matches!(
            err,
            SeriesError::Oracle(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn symbolic_reconstruction_matches_the_closed_form() {
        let config = EnumConfig {
            budget: 1_000_000_000,
            workers: 1,
        };
        let got = reconstruct_genus2_numerator(&config).unwrap();
        assert_eq!(got, numerator(2, SymConvention::OrbitSum).unwrap());
    }
}
