//! Rational functions kept as a numerator and a factored denominator.
//!
//! The denominator stays as a list of factors because that is the shape the
//! series algebra wants: specializations drop factors that collapse to
//! constants instead of expanding a degree-16 product only to refactor it.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::PolyError;
use crate::exponent::Var;
use crate::json::{poly_from_json, poly_to_json};
use crate::poly::{Coeff, MultiPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    pub numerator: MultiPoly,
    pub denominator_factors: Vec<MultiPoly>,
}

impl RationalFunction {
    pub fn new(numerator: MultiPoly, denominator_factors: Vec<MultiPoly>) -> Self {
        RationalFunction {
            numerator,
            denominator_factors,
        }
    }

    pub fn from_poly(numerator: MultiPoly) -> Self {
        RationalFunction::new(numerator, Vec::new())
    }

    /// The product of the denominator factors.
    pub fn expanded_denominator(&self) -> MultiPoly {
        let mut q = MultiPoly::one();
        for f in &self.denominator_factors {
            q = &q * f;
        }
        q
    }

    /// Substitutes into the numerator and every factor. A factor that
    /// collapses to a nonzero constant is folded into the numerator; one that
    /// collapses to zero is a pole.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<Var, MultiPoly>,
    ) -> Result<RationalFunction, PolyError> {
        let mut numerator = self.numerator.substitute(bindings)?;
        let mut factors = Vec::with_capacity(self.denominator_factors.len());
        for f in &self.denominator_factors {
            let g = f.substitute(bindings)?;
            if g.is_zero() {
                return Err(PolyError::PoleAtSubstitution);
            }
            match g.coeff_of(&crate::exponent::ExpVec::zero()) {
                c if g.num_terms() == 1 && !c.is_zero() => {
                    if !c.is_one() {
                        numerator = numerator.mul_scalar(&c.recip());
                    }
                }
                _ => factors.push(g),
            }
        }
        Ok(RationalFunction::new(numerator, factors))
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &BTreeMap<Var, Coeff>) -> Result<Coeff, PolyError> {
        let mut value = self.numerator.eval(point)?;
        for f in &self.denominator_factors {
            let d = f.eval(point)?;
            if d.is_zero() {
                return Err(PolyError::PoleAtEvaluation);
            }
            value /= d;
        }
        Ok(value)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "numerator": poly_to_json(&self.numerator),
            "denominator_factors": self
                .denominator_factors
                .iter()
                .map(poly_to_json)
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self, PolyError> {
        let numerator = poly_from_json(
            value
                .get("numerator")
                .ok_or_else(|| PolyError::Json("missing \"numerator\"".into()))?,
        )?;
        let factors = value
            .get("denominator_factors")
            .and_then(Value::as_array)
            .ok_or_else(|| PolyError::Json("missing \"denominator_factors\"".into()))?
            .iter()
            .map(poly_from_json)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RationalFunction::new(numerator, factors))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator_factors.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({}) / ", self.numerator)?;
        for factor in &self.denominator_factors {
            write!(f, "({})", factor)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::ExpVec;
    use crate::poly::coeff_int;

    fn one_minus(m: MultiPoly) -> MultiPoly {
        &MultiPoly::one() - &m
    }

    #[test]
    fn substitution_drops_factors_that_become_one() {
        // (1 - x4 X) becomes 1 under x4 -> 0 and disappears.
        let keep = one_minus(MultiPoly::monomial(
            ExpVec::of(Var::X1, 1).with(Var::X, 1),
            coeff_int(1),
        ));
        let drop = one_minus(MultiPoly::monomial(
            ExpVec::of(Var::X4, 1).with(Var::X, 1),
            coeff_int(1),
        ));
        let rf = RationalFunction::new(MultiPoly::one(), vec![keep.clone(), drop]);
        let mut bindings = BTreeMap::new();
        bindings.insert(Var::X4, MultiPoly::zero());
        let projected = rf.substitute(&bindings).unwrap();
        assert_eq!(projected.denominator_factors, vec![keep]);
        assert!(projected.numerator.is_one());
    }

    #[test]
    fn substitution_folds_constant_factors_into_numerator() {
        // (1 - x1) becomes 1/2 under x1 -> 1/2, scaling the numerator by 2.
        let rf = RationalFunction::new(
            MultiPoly::var(Var::P),
            vec![one_minus(MultiPoly::var(Var::X1))],
        );
        let mut bindings = BTreeMap::new();
        bindings.insert(
            Var::X1,
            MultiPoly::constant(crate::poly::coeff_ratio(1, 2)),
        );
        let out = rf.substitute(&bindings).unwrap();
        assert!(out.denominator_factors.is_empty());
        assert_eq!(out.numerator, MultiPoly::var(Var::P).mul_scalar(&coeff_int(2)));
    }

    #[test]
    fn substitution_into_a_vanishing_factor_is_a_pole() {
        let rf = RationalFunction::new(
            MultiPoly::one(),
            vec![one_minus(MultiPoly::var(Var::X1))],
        );
        let mut bindings = BTreeMap::new();
        bindings.insert(Var::X1, MultiPoly::one());
        assert_eq!(rf.substitute(&bindings), Err(PolyError::PoleAtSubstitution));
    }

    #[test]
    fn eval_divides_by_each_factor() {
        let rf = RationalFunction::new(
            MultiPoly::var(Var::P),
            vec![one_minus(MultiPoly::var(Var::X))],
        );
        let mut point = BTreeMap::new();
        point.insert(Var::P, coeff_int(7));
        point.insert(Var::X, crate::poly::coeff_ratio(1, 2));
        assert_eq!(rf.eval(&point).unwrap(), coeff_int(14));
        point.insert(Var::X, coeff_int(1));
        assert_eq!(rf.eval(&point), Err(PolyError::PoleAtEvaluation));
    }

    #[test]
    fn json_round_trip() {
        let rf = RationalFunction::new(
            MultiPoly::var(Var::X0),
            vec![
                one_minus(MultiPoly::var(Var::X)),
                one_minus(&MultiPoly::var(Var::X0) * &MultiPoly::var(Var::X)),
            ],
        );
        assert_eq!(RationalFunction::from_json(&rf.to_json()).unwrap(), rf);
    }
}
