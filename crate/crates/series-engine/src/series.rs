//! Power-series expansion of the rational presentations in the series
//! variable `X`.
//!
//! With `Q(X) = 1 + q_1 X + q_2 X^2 + ...` the coefficients `S_d` of
//! `P(X)/Q(X)` obey `S_d = p_d - sum_{j=1..d} q_j S_(d-j)`, so only the
//! truncation of the expanded denominator up to `X^d` is ever formed, never
//! the full product of its factors.

use poly_core::{MultiPoly, RationalFunction, Var};

use crate::error::SeriesError;

/// Product of `a` and `b` with every `X`-power above `bound` discarded.
fn mul_truncated(a: &MultiPoly, b: &MultiPoly, bound: i32) -> MultiPoly {
    let a_parts = a.by_powers_of(Var::X);
    let b_parts = b.by_powers_of(Var::X);
    let mut out = MultiPoly::zero();
    for (&da, pa) in &a_parts {
        for (&db, pb) in &b_parts {
            if da + db > bound {
                continue;
            }
            let x_shift = poly_core::ExpVec::zero().with(Var::X, da + db);
            out = &out + &(pa * pb).mul_monomial(&x_shift, &poly_core::coeff_int(1));
        }
    }
    out
}

/// Product of `factors`, truncated above `X^bound`.
pub fn truncated_product(factors: &[MultiPoly], bound: u32) -> MultiPoly {
    let mut q = MultiPoly::one();
    for f in factors {
        q = mul_truncated(&q, f, bound as i32);
    }
    q
}

/// Expanded denominator of `rf`, truncated above `X^bound`.
pub fn truncated_denominator(rf: &RationalFunction, bound: u32) -> MultiPoly {
    truncated_product(&rf.denominator_factors, bound)
}

/// The first `up_to + 1` series coefficients of `rf` in `X`. Each returned
/// polynomial is free of `X`. The denominator must have constant term 1 and
/// no negative `X`-powers.
pub fn series_coefficients(
    rf: &RationalFunction,
    up_to: u32,
) -> Result<Vec<MultiPoly>, SeriesError> {
    let bound = up_to as i32;
    let q_parts = truncated_denominator(rf, up_to).by_powers_of(Var::X);
    match q_parts.get(&0) {
        Some(c) if c.is_one() => {}
        _ => return Err(SeriesError::NonUnitDenominator),
    }
    if q_parts.keys().any(|&k| k < 0) {
        return Err(SeriesError::NonUnitDenominator);
    }
    if rf.numerator.min_degree_in(Var::X).unwrap_or(0) < 0 {
        return Err(SeriesError::NonUnitDenominator);
    }
    let p_parts = rf.numerator.by_powers_of(Var::X);
    let mut s: Vec<MultiPoly> = Vec::with_capacity(up_to as usize + 1);
    for d in 0..=bound {
        let mut acc = p_parts.get(&d).cloned().unwrap_or_else(MultiPoly::zero);
        for j in 1..=d {
            if let Some(qj) = q_parts.get(&j) {
                acc = &acc - &(qj * &s[(d - j) as usize]);
            }
        }
        s.push(acc);
    }
    Ok(s)
}
