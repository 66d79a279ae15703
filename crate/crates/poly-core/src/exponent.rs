//! Variable set and packed exponent vectors.
//!
//! All polynomials in this crate live in the Laurent ring
//! `Q[p^±1, x0^±1, x1^±1, x2^±1, x3^±1, x4^±1, X^±1]`. The variable order
//! `(p, x0, x1, x2, x3, x4, X)` is fixed; exponent vectors compare
//! lexicographically in that order, which gives every polynomial a canonical
//! term order for printing and serialization.

use crate::error::PolyError;

/// Number of variables in the fixed ring.
pub const NVARS: usize = 7;

/// A variable of the fixed seven-variable ring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    /// The residue characteristic, the only variable allowed to keep a
    /// negative exponent in externally exposed results.
    P = 0,
    /// Similitude character of the Satake parametrization.
    X0 = 1,
    X1 = 2,
    X2 = 3,
    X3 = 4,
    X4 = 5,
    /// The generating-series variable.
    X = 6,
}

impl Var {
    /// All variables in canonical order.
    pub const ALL: [Var; NVARS] = [
        Var::P,
        Var::X0,
        Var::X1,
        Var::X2,
        Var::X3,
        Var::X4,
        Var::X,
    ];

    /// The Satake variables `x1..x4` in order.
    pub const SATAKE: [Var; 4] = [Var::X1, Var::X2, Var::X3, Var::X4];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::P => "p",
            Var::X0 => "x0",
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::X3 => "x3",
            Var::X4 => "x4",
            Var::X => "X",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }

    /// The i-th Satake variable, `satake(1) = x1`, ..., `satake(4) = x4`.
    pub fn satake(i: usize) -> Var {
        Var::SATAKE[i - 1]
    }
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector of a single monomial. Exponents are signed and bounded by
/// machine range; arithmetic is overflow-checked.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct ExpVec([i32; NVARS]);

impl ExpVec {
    pub fn zero() -> Self {
        ExpVec([0; NVARS])
    }

    /// The exponent vector of `var^e`.
    pub fn of(var: Var, e: i32) -> Self {
        let mut v = ExpVec::zero();
        v.0[var.index()] = e;
        v
    }

    pub fn get(&self, var: Var) -> i32 {
        self.0[var.index()]
    }

    /// Returns a copy with the exponent of `var` replaced by `e`.
    pub fn with(mut self, var: Var, e: i32) -> Self {
        self.0[var.index()] = e;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn checked_add(&self, other: &ExpVec) -> Result<ExpVec, PolyError> {
        let mut out = [0i32; NVARS];
        for i in 0..NVARS {
            out[i] = self.0[i]
                .checked_add(other.0[i])
                .ok_or(PolyError::ExponentOverflow)?;
        }
        Ok(ExpVec(out))
    }

    pub fn checked_neg(&self) -> Result<ExpVec, PolyError> {
        let mut out = [0i32; NVARS];
        for i in 0..NVARS {
            out[i] = self.0[i].checked_neg().ok_or(PolyError::ExponentOverflow)?;
        }
        Ok(ExpVec(out))
    }

    pub fn checked_scale(&self, k: i32) -> Result<ExpVec, PolyError> {
        let mut out = [0i32; NVARS];
        for i in 0..NVARS {
            out[i] = self.0[i]
                .checked_mul(k)
                .ok_or(PolyError::ExponentOverflow)?;
        }
        Ok(ExpVec(out))
    }

    /// Variables with nonzero exponent, in canonical order.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        Var::ALL
            .iter()
            .copied()
            .filter_map(move |v| match self.get(v) {
                0 => None,
                e => Some((v, e)),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_lex_over_fixed_variable_order() {
        let a = ExpVec::of(Var::P, 1);
        let b = ExpVec::of(Var::X0, 5);
        assert!(a > b, "p^1 sorts after x0^5 in lex order");
        let c = ExpVec::of(Var::X1, -1);
        assert!(ExpVec::zero() > c);
    }

    #[test]
    fn add_and_overflow() {
        let a = ExpVec::of(Var::X, 3).with(Var::P, -2);
        let b = ExpVec::of(Var::X, 1);
        assert_eq!(a.checked_add(&b).unwrap().get(Var::X), 4);
        let big = ExpVec::of(Var::P, i32::MAX);
        assert!(big.checked_add(&ExpVec::of(Var::P, 1)).is_err());
    }

    #[test]
    fn var_name_round_trip() {
        for v in Var::ALL {
            assert_eq!(Var::from_name(v.name()), Some(v));
        }
        assert_eq!(Var::from_name("x5"), None);
    }
}
