//! Construction of the local series presentation for genus 1 through 4.
//!
//! The denominator of the genus-n series is the product over all subsets `S`
//! of `{1..n}` of `1 - x0 (prod of x_i for i in S) X`, giving `2^n` linear
//! factors. The numerator is 1 for genus 1, the classical quadratic
//! correction for genus 2, the expanded coefficient table for genus 4, and
//! for genus 3 the image of the genus-4 numerator under the Siegel projection
//! `x4 -> 0`.

use std::collections::BTreeMap;

use poly_core::{coeff_int, ExpVec, MultiPoly, PolyError, RationalFunction, Var};

use crate::error::SymError;
use crate::ktable::KTable;
use crate::orbit::SymConvention;

pub const MAX_GENUS: usize = 4;

fn check_genus(genus: usize) -> Result<(), SymError> {
    if (1..=MAX_GENUS).contains(&genus) {
        Ok(())
    } else {
        Err(SymError::UnsupportedGenus(genus))
    }
}

/// All subsets of `{1..genus}`, ordered by size and then lexicographically.
fn subsets(genus: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..(1 << genus))
        .map(|mask| (1..=genus).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// The `2^genus` linear denominator factors `1 - x0 (prod x_i) X`.
pub fn denominator_factors(genus: usize) -> Result<Vec<MultiPoly>, SymError> {
    check_genus(genus)?;
    Ok(subsets(genus)
        .into_iter()
        .map(|s| {
            let mut exps = ExpVec::of(Var::X0, 1).with(Var::X, 1);
            for i in s {
                exps = exps.with(Var::satake(i), 1);
            }
            &MultiPoly::one() - &MultiPoly::monomial(exps, coeff_int(1))
        })
        .collect())
}

/// The numerator polynomial of the genus-n series.
pub fn numerator(genus: usize, convention: SymConvention) -> Result<MultiPoly, SymError> {
    check_genus(genus)?;
    Ok(match genus {
        1 => MultiPoly::one(),
        // 1 - p^-1 x0^2 x1 x2 X^2
        2 => {
            &MultiPoly::one()
                - &MultiPoly::monomial(
                    ExpVec::of(Var::P, -1)
                        .with(Var::X0, 2)
                        .with(Var::X1, 1)
                        .with(Var::X2, 1)
                        .with(Var::X, 2),
                    coeff_int(1),
                )
        }
        3 => siegel_project_poly(&numerator(4, convention)?)?,
        _ => KTable::build(convention).numerator(),
    })
}

/// The full rational presentation of the genus-n series.
pub fn hecke_series(genus: usize, convention: SymConvention) -> Result<RationalFunction, SymError> {
    Ok(RationalFunction::new(
        numerator(genus, convention)?,
        denominator_factors(genus)?,
    ))
}

/// Sends `x4` to zero.
pub fn siegel_project_poly(poly: &MultiPoly) -> Result<MultiPoly, PolyError> {
    poly.substitute_var(Var::X4, &MultiPoly::zero())
}

/// Sends `x4` to zero across a rational function, dropping the denominator
/// factors that collapse to 1.
pub fn siegel_project(rf: &RationalFunction) -> Result<RationalFunction, PolyError> {
    let mut bindings = BTreeMap::new();
    bindings.insert(Var::X4, MultiPoly::zero());
    rf.substitute(&bindings)
}
