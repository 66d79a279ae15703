//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`ExpVec`], so iteration order is
//! the canonical lexicographic term order and two equal polynomials always
//! have identical representations. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::PolyError;
use crate::exponent::{ExpVec, Var};

/// Exact rational coefficient. Always stored in lowest terms with a positive
/// denominator; `num_rational` maintains both invariants.
pub type Coeff = BigRational;

/// Coefficient from an integer.
pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Coefficient from a numerator and denominator. Panics on a zero denominator.
pub fn coeff_ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact power of a rational, with negative exponents allowed for nonzero
/// bases.
pub fn coeff_pow(base: &Coeff, e: i32) -> Result<Coeff, PolyError> {
    if e == 0 {
        return Ok(Coeff::one());
    }
    if base.is_zero() {
        if e < 0 {
            return Err(PolyError::PoleAtEvaluation);
        }
        return Ok(Coeff::zero());
    }
    Ok(base.pow(e))
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<ExpVec, Coeff>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MultiPoly::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExpVec::zero(), c);
        }
        MultiPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        MultiPoly::constant(coeff_int(n))
    }

    /// The single monomial `c * vars^exps`.
    pub fn monomial(exps: ExpVec, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { terms }
    }

    /// The variable itself, `var^1`.
    pub fn var(var: Var) -> Self {
        MultiPoly::var_pow(var, 1)
    }

    /// `var^e` with a unit coefficient.
    pub fn var_pow(var: Var, e: i32) -> Self {
        MultiPoly::monomial(ExpVec::of(var, e), Coeff::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ExpVec::zero())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (ascending lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Coeff)> {
        self.terms.iter()
    }

    /// The coefficient of an exact monomial, zero if absent.
    pub fn coeff_of(&self, exps: &ExpVec) -> Coeff {
        self.terms.get(exps).cloned().unwrap_or_else(Coeff::zero)
    }

    /// If the polynomial is a single term, returns it.
    pub fn as_monomial(&self) -> Option<(ExpVec, Coeff)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((*e, c.clone()))
        } else {
            None
        }
    }

    pub(crate) fn insert_term(&mut self, exps: ExpVec, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ExpVec, Coeff)>) -> Self {
        let mut out = MultiPoly::zero();
        for (e, c) in terms {
            out.insert_term(e, c);
        }
        out
    }

    pub fn mul_scalar(&self, c: &Coeff) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, t)| (*e, t * c)).collect(),
        }
    }

    /// Multiplies by the single monomial `c * vars^exps`. Panics on exponent
    /// overflow; exponent magnitudes in this crate stay far below `i32` range.
    pub fn mul_monomial(&self, exps: &ExpVec, c: &Coeff) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, t)| (e.checked_add(exps).expect("exponent overflow"), t * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self^e` for signed `e`; negative powers require a nonzero monomial.
    pub fn pow_signed(&self, e: i32) -> Result<MultiPoly, PolyError> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        if self.is_zero() {
            return Err(PolyError::PoleAtSubstitution);
        }
        let (exps, c) = self.as_monomial().ok_or(PolyError::NonMonomialInverse)?;
        let inv = MultiPoly::monomial(exps.checked_neg()?, c.recip());
        Ok(inv.pow(e.unsigned_abs()))
    }

    /// Largest exponent of `var` over all terms. `None` for the zero
    /// polynomial.
    pub fn degree_in(&self, var: Var) -> Option<i32> {
        self.terms.keys().map(|e| e.get(var)).max()
    }

    /// Smallest exponent of `var` over all terms.
    pub fn min_degree_in(&self, var: Var) -> Option<i32> {
        self.terms.keys().map(|e| e.get(var)).min()
    }

    /// Splits into coefficient polynomials of `var`: the entry at `k` is the
    /// coefficient of `var^k`, with `var` cleared from its exponents.
    pub fn by_powers_of(&self, var: Var) -> BTreeMap<i32, MultiPoly> {
        let mut out: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e.get(var);
            out.entry(k)
                .or_default()
                .insert_term(e.with(var, 0), c.clone());
        }
        out
    }

    /// The coefficient of `var^k`, with `var` cleared from the result.
    pub fn coeff_of_power(&self, var: Var, k: i32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            if e.get(var) == k {
                out.insert_term(e.with(var, 0), c.clone());
            }
        }
        out
    }

    /// Variables that occur with a nonzero exponent.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|e| e.get(v) != 0))
            .collect()
    }

    /// True if every exponent of every variable except `p` is non-negative.
    pub fn is_p_laurent_only(&self) -> bool {
        self.terms.keys().all(|e| {
            Var::ALL
                .into_iter()
                .filter(|&v| v != Var::P)
                .all(|v| e.get(v) >= 0)
        })
    }

    /// Replaces each bound variable by its binding polynomial. Unbound
    /// variables persist. A variable occurring with a negative exponent must
    /// be bound to a nonzero monomial (or left unbound); binding it to zero
    /// is a pole and binding it to a multi-term polynomial is not invertible.
    pub fn substitute(&self, bindings: &BTreeMap<Var, MultiPoly>) -> Result<MultiPoly, PolyError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let mut out = MultiPoly::zero();
        for (exps, c) in &self.terms {
            let mut acc = MultiPoly::constant(c.clone());
            for (var, e) in exps.iter_nonzero() {
                match bindings.get(&var) {
                    None => acc = acc.mul_monomial(&ExpVec::of(var, e), &Coeff::one()),
                    Some(b) => {
                        if b.is_zero() && e < 0 {
                            return Err(PolyError::PoleAtSubstitution);
                        }
                        acc = &acc * &b.pow_signed(e)?;
                        if acc.is_zero() {
                            break;
                        }
                    }
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Substitution of a single variable.
    pub fn substitute_var(&self, var: Var, value: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let mut bindings = BTreeMap::new();
        bindings.insert(var, value.clone());
        self.substitute(&bindings)
    }

    /// Full evaluation at a rational point. Every variable that occurs must be
    /// bound, and a variable with a negative exponent must not be sent to
    /// zero.
    pub fn eval(&self, point: &BTreeMap<Var, Coeff>) -> Result<Coeff, PolyError> {
        let mut total = Coeff::zero();
        for (exps, c) in &self.terms {
            let mut acc = c.clone();
            for (var, e) in exps.iter_nonzero() {
                let v = point
                    .get(&var)
                    .ok_or_else(|| PolyError::UnboundVariable(var.name().to_string()))?;
                acc *= coeff_pow(v, e)?;
                if acc.is_zero() {
                    break;
                }
            }
            total += acc;
        }
        Ok(total)
    }

    /// Maximum absolute exponent over all terms and variables, a cheap guard
    /// used by sanity checks.
    pub fn max_abs_exponent(&self) -> i32 {
        self.terms
            .keys()
            .flat_map(|e| Var::ALL.into_iter().map(move |v| e.get(v).abs()))
            .max()
            .unwrap_or(0)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        // Clone the larger side and fold the smaller one in.
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (e, c) in &small.terms {
            big.insert_term(*e, c.clone());
        }
        big
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert_term(ea.checked_add(eb).expect("exponent overflow"), ca * cb);
            }
        }
        out
    }
}

impl std::fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}
