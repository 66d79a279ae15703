//! Internal-consistency checks on the numerator table.
//!
//! Three symmetries constrain the table tightly enough that a single wrong
//! coefficient anywhere breaks at least one of them:
//!
//! * a pairing between the coefficients of `X^k` and `X^(14-k)` that inverts
//!   `p` and the Satake variables while rescaling `x0`;
//! * the same pairing assembled into one identity on the whole numerator
//!   (the duality check), with `X` reflected through the extreme root
//!   monomial `x0^2 x1..xn`;
//! * a plain inversion symmetry relating `P(x0,..,xn,X)` to
//!   `P(1/x0,..,1/xn,p/X)` without touching `p`.
//!
//! The plain inversion symmetry holds for genus 1 through 3 only. At genus 4
//! the candidate transform squares to `p^2` times the identity instead of
//! the identity (the prefactor exponents `2^(n-1)-1` and `n(n-1)/2` stop
//! agreeing at `n = 4`), so no choice of prefactor makes it hold; the
//! duality form is the symmetry that survives at every genus.

use std::collections::BTreeMap;

use poly_core::{coeff_int, ExpVec, MultiPoly, Var};

use crate::error::SymError;
use crate::ktable::KTable;

/// The genus-4 pairing transform: maps the coefficient of `X^k` onto a
/// candidate for the coefficient of `X^(14-k)`.
fn pairing_transform(k: usize, coeff: &MultiPoly) -> Result<MultiPoly, SymError> {
    let mut bindings = BTreeMap::new();
    // p -> 1/p, x0 -> x0 x1 x2 x3 x4, xi -> 1/xi.
    bindings.insert(Var::P, MultiPoly::var_pow(Var::P, -1));
    bindings.insert(
        Var::X0,
        MultiPoly::monomial(
            ExpVec::of(Var::X0, 1)
                .with(Var::X1, 1)
                .with(Var::X2, 1)
                .with(Var::X3, 1)
                .with(Var::X4, 1),
            coeff_int(1),
        ),
    );
    for i in 1..=4 {
        bindings.insert(Var::satake(i), MultiPoly::var_pow(Var::satake(i), -1));
    }
    let substituted = coeff.substitute(&bindings)?;
    // Times -p^-6 (x0^2 x1 x2 x3 x4)^(7-k).
    let m = 7 - k as i32;
    let prefactor = ExpVec::of(Var::P, -6)
        .with(Var::X0, 2 * m)
        .with(Var::X1, m)
        .with(Var::X2, m)
        .with(Var::X3, m)
        .with(Var::X4, m);
    Ok(substituted.mul_monomial(&prefactor, &coeff_int(-1)))
}

/// Residuals `K_(14-k) - transform(K_k)` for `k = 0..=14`. The table passes
/// the pairing check exactly when every residual is zero.
pub fn functional_equation_residuals(table: &KTable) -> Result<Vec<MultiPoly>, SymError> {
    (0..table.len())
        .map(|k| {
            let transformed = pairing_transform(k, table.coefficient(k))?;
            Ok(table.coefficient(table.len() - 1 - k) - &transformed)
        })
        .collect()
}

pub fn check_functional_equation(table: &KTable) -> Result<(), SymError> {
    let residuals = functional_equation_residuals(table)?;
    let bad: Vec<usize> = residuals
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_zero())
        .map(|(k, _)| k)
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(SymError::Json(format!(
            "functional equation fails at k = {bad:?}"
        )))
    }
}

fn guard_numerator_shape(poly: &MultiPoly, genus: usize) -> Result<(), SymError> {
    if !(1..=4).contains(&genus) {
        return Err(SymError::UnsupportedGenus(genus));
    }
    for i in (genus + 1)..=4 {
        if poly.degree_in(Var::satake(i)) != Some(0) && !poly.is_zero() {
            return Err(SymError::VariableBeyondGenus {
                genus,
                var: Var::satake(i).name(),
            });
        }
    }
    let bound = (1 << genus) - 2;
    let found = poly.degree_in(Var::X).unwrap_or(0);
    if found > bound || poly.min_degree_in(Var::X).unwrap_or(0) < 0 {
        return Err(SymError::DegreeBound {
            genus,
            found,
            bound,
        });
    }
    Ok(())
}

/// Residual of the plain inversion symmetry for a genus-n numerator:
/// `P - (-1)^(n-1) (x0^2 x1..xn X^2)^(2^(n-1)-1) p^(-n(n-1)/2) P(1/x0,..,1/xn,p/X)`.
pub fn remark_residual(poly: &MultiPoly, genus: usize) -> Result<MultiPoly, SymError> {
    guard_numerator_shape(poly, genus)?;
    let bound = (1 << genus) - 2;

    let mut bindings = BTreeMap::new();
    bindings.insert(Var::X0, MultiPoly::var_pow(Var::X0, -1));
    for i in 1..=genus {
        bindings.insert(Var::satake(i), MultiPoly::var_pow(Var::satake(i), -1));
    }
    // X -> p/X.
    bindings.insert(
        Var::X,
        MultiPoly::monomial(ExpVec::of(Var::P, 1).with(Var::X, -1), coeff_int(1)),
    );
    let inverted = poly.substitute(&bindings)?;

    let half = bound / 2; // 2^(n-1) - 1
    let mut prefactor = ExpVec::of(Var::X0, 2 * half).with(Var::X, 2 * half);
    for i in 1..=genus {
        prefactor = prefactor.with(Var::satake(i), half);
    }
    prefactor = prefactor.with(Var::P, -((genus * (genus - 1) / 2) as i32));
    let sign = if genus % 2 == 1 { 1 } else { -1 };
    let transformed = inverted.mul_monomial(&prefactor, &coeff_int(sign));
    Ok(poly - &transformed)
}

pub fn check_remark_relation(poly: &MultiPoly, genus: usize) -> Result<(), SymError> {
    let residual = remark_residual(poly, genus)?;
    if residual.is_zero() {
        Ok(())
    } else {
        Err(SymError::Json(format!(
            "inversion symmetry fails for genus {genus}: residual has {} terms",
            residual.num_terms()
        )))
    }
}

/// Residual of the duality symmetry for a genus-n numerator:
/// `P - (-1)^(n-1) p^(-n(n-1)/2) (x0^2 x1..xn)^(2^(n-1)-1) X^(2^n-2)
///      P(1/p, x0 x1..xn, 1/x1,..,1/xn, 1/(x0^2 x1..xn X))`.
///
/// This is the coefficient pairing summed into a single polynomial identity,
/// and unlike the plain inversion it holds at every genus. It is checked by
/// direct substitution, independent of the per-coefficient pairing code.
pub fn duality_residual(poly: &MultiPoly, genus: usize) -> Result<MultiPoly, SymError> {
    guard_numerator_shape(poly, genus)?;
    let bound: i32 = (1 << genus) - 2;
    let half = bound / 2; // 2^(n-1) - 1

    let mut bindings = BTreeMap::new();
    bindings.insert(Var::P, MultiPoly::var_pow(Var::P, -1));
    // x0 -> x0 x1 .. xn.
    let mut x0_image = ExpVec::of(Var::X0, 1);
    for i in 1..=genus {
        x0_image = x0_image.with(Var::satake(i), 1);
    }
    bindings.insert(Var::X0, MultiPoly::monomial(x0_image, coeff_int(1)));
    for i in 1..=genus {
        bindings.insert(Var::satake(i), MultiPoly::var_pow(Var::satake(i), -1));
    }
    // X -> 1/(x0^2 x1..xn X).
    let mut x_image = ExpVec::of(Var::X0, -2).with(Var::X, -1);
    for i in 1..=genus {
        x_image = x_image.with(Var::satake(i), -1);
    }
    bindings.insert(Var::X, MultiPoly::monomial(x_image, coeff_int(1)));
    let inverted = poly.substitute(&bindings)?;

    let mut prefactor = ExpVec::of(Var::X0, 2 * half).with(Var::X, bound);
    for i in 1..=genus {
        prefactor = prefactor.with(Var::satake(i), half);
    }
    prefactor = prefactor.with(Var::P, -((genus * (genus - 1) / 2) as i32));
    let sign = if genus % 2 == 1 { 1 } else { -1 };
    let transformed = inverted.mul_monomial(&prefactor, &coeff_int(sign));
    Ok(poly - &transformed)
}

pub fn check_duality(poly: &MultiPoly, genus: usize) -> Result<(), SymError> {
    let residual = duality_residual(poly, genus)?;
    if residual.is_zero() {
        Ok(())
    } else {
        Err(SymError::Json(format!(
            "duality fails for genus {genus}: residual has {} terms",
            residual.num_terms()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::numerator;
    use crate::orbit::SymConvention;

    #[test]
    fn table_satisfies_the_pairing() {
        let table = KTable::build(SymConvention::OrbitSum);
        let residuals = functional_equation_residuals(&table).unwrap();
        assert_eq!(residuals.len(), 15);
        for (k, r) in residuals.iter().enumerate() {
            assert!(r.is_zero(), "nonzero residual at k = {k}: {r}");
        }
        assert!(check_functional_equation(&table).is_ok());
    }

    #[test]
    fn single_coefficient_mutation_breaks_the_pairing() {
        let table = KTable::build(SymConvention::OrbitSum);
        // Nudge one term of the X^2 coefficient by 1/p.
        let bad = table.coefficient(2)
            + &MultiPoly::monomial(
                ExpVec::of(Var::P, -1)
                    .with(Var::X0, 2)
                    .with(Var::X1, 1)
                    .with(Var::X2, 1)
                    .with(Var::X3, 1)
                    .with(Var::X4, 1),
                coeff_int(1),
            );
        let mutated = table.with_coefficient(2, bad);
        let residuals = functional_equation_residuals(&mutated).unwrap();
        assert!(!residuals[2].is_zero() || !residuals[12].is_zero());
        assert!(check_functional_equation(&mutated).is_err());
    }

    #[test]
    fn full_group_convention_passes_the_pairing_but_not_normalization() {
        // A signature and its complement (7 - each entry) share the same
        // multiplicity pattern, hence the same stabilizer order, so weighting
        // every orbit by its stabilizer rescales both sides of each pairing
        // identity together and the pairing cannot tell the conventions
        // apart.
        let table = KTable::build(SymConvention::FullGroup);
        for (k, r) in functional_equation_residuals(&table)
            .unwrap()
            .iter()
            .enumerate()
        {
            assert!(r.is_zero(), "nonzero residual at k = {k}");
        }
        // What does tell them apart: any series starts at 1, but the empty
        // signature picks up the full group order under this convention.
        assert_eq!(table.coefficient(0), &MultiPoly::int(24));
    }

    #[test]
    fn numerators_satisfy_the_inversion_symmetry_up_to_genus_three() {
        for genus in 1..=3 {
            let p = numerator(genus, SymConvention::OrbitSum).unwrap();
            let residual = remark_residual(&p, genus).unwrap();
            assert!(residual.is_zero(), "genus {genus}: residual {residual}");
        }
    }

    #[test]
    fn numerators_satisfy_the_duality_at_every_genus() {
        for genus in 1..=4 {
            let p = numerator(genus, SymConvention::OrbitSum).unwrap();
            let residual = duality_residual(&p, genus).unwrap();
            assert!(residual.is_zero(), "genus {genus}: residual {residual}");
            assert!(check_duality(&p, genus).is_ok());
        }
    }

    #[test]
    fn single_coefficient_mutation_breaks_the_duality() {
        let table = KTable::build(SymConvention::OrbitSum);
        let bad = table.coefficient(2)
            + &MultiPoly::monomial(
                ExpVec::of(Var::P, -1)
                    .with(Var::X0, 2)
                    .with(Var::X1, 1)
                    .with(Var::X2, 1)
                    .with(Var::X3, 1)
                    .with(Var::X4, 1),
                coeff_int(1),
            );
        let mutated = table.with_coefficient(2, bad);
        let residual = duality_residual(&mutated.numerator(), 4).unwrap();
        assert!(!residual.is_zero());
    }

    #[test]
    fn genus_four_has_no_naive_inversion_symmetry() {
        // The obstruction is visible at the ends: the transform sends the
        // constant coefficient 1 to p^2 regardless of how the prefactor power
        // of p is chosen.
        let p4 = numerator(4, SymConvention::OrbitSum).unwrap();
        let residual = remark_residual(&p4, 4).unwrap();
        assert!(!residual.is_zero());
        assert_eq!(
            residual.coeff_of_power(Var::X, 0),
            &MultiPoly::int(1) - &MultiPoly::monomial(ExpVec::of(Var::P, 2), coeff_int(1))
        );
    }

    #[test]
    fn inversion_symmetry_guards_its_degree_bound() {
        let too_big = MultiPoly::var_pow(Var::X, 3);
        assert_eq!(
            remark_residual(&too_big, 1),
            Err(SymError::DegreeBound {
                genus: 1,
                found: 3,
                bound: 0
            })
        );
        let crossed = MultiPoly::var(Var::X4);
        assert!(matches!(
            remark_residual(&crossed, 2),
            Err(SymError::VariableBeyondGenus { genus: 2, .. })
        ));
    }
}
