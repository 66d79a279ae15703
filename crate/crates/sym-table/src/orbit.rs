//! Symmetrizations of monomials in the Satake variables `x1..x4`.
//!
//! `sym_poly([i1,i2,i3,i4], _)` is the symmetrization of the monomial
//! `x1^i1 x2^i2 x3^i3 x4^i4` under the permutation action of `S_4` on the
//! variables. Two conventions are in circulation and they differ whenever the
//! exponent tuple has repeats:
//!
//! * [`SymConvention::OrbitSum`]: each distinct monomial in the orbit appears
//!   once, with coefficient 1.
//! * [`SymConvention::FullGroup`]: the sum runs over all 24 permutations, so
//!   each distinct monomial is weighted by the order of the stabilizer of the
//!   exponent tuple.
//!
//! The coefficient tables in this crate are stated for the orbit-sum
//! convention; the other one is kept so that downstream checks can
//! demonstrate that it is inconsistent with the series they verify.

use std::collections::BTreeMap;

use poly_core::{coeff_int, ExpVec, MultiPoly, Var};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SymConvention {
    #[default]
    OrbitSum,
    FullGroup,
}

impl SymConvention {
    pub fn name(self) -> &'static str {
        match self {
            SymConvention::OrbitSum => "orbit-sum",
            SymConvention::FullGroup => "full-group",
        }
    }

    pub fn from_name(name: &str) -> Option<SymConvention> {
        match name {
            "orbit-sum" => Some(SymConvention::OrbitSum),
            "full-group" => Some(SymConvention::FullGroup),
            _ => None,
        }
    }
}

/// All 24 permutations of `{0,1,2,3}` in lexicographic order.
fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            if b == a {
                continue;
            }
            for c in 0..4 {
                if c == a || c == b {
                    continue;
                }
                let d = 6 - a - b - c;
                out.push([a, b, c, d]);
            }
        }
    }
    out
}

/// The symmetrized exponent tuples with their multiplicities over all 24
/// permutations.
fn orbit_with_multiplicity(sig: [i32; 4]) -> BTreeMap<[i32; 4], i64> {
    let mut orbit = BTreeMap::new();
    for perm in permutations4() {
        let image = [sig[perm[0]], sig[perm[1]], sig[perm[2]], sig[perm[3]]];
        *orbit.entry(image).or_insert(0) += 1;
    }
    orbit
}

/// Number of distinct monomials in the orbit, `4! / prod(multiplicities!)`.
pub fn orbit_size(sig: [i32; 4]) -> usize {
    orbit_with_multiplicity(sig).len()
}

/// The symmetrization of `x1^i1 x2^i2 x3^i3 x4^i4` under `S_4`.
pub fn sym_poly(sig: [i32; 4], convention: SymConvention) -> MultiPoly {
    let orbit = orbit_with_multiplicity(sig);
    MultiPoly::from_terms(orbit.into_iter().map(|(tuple, mult)| {
        let mut exps = ExpVec::zero();
        for (i, e) in tuple.into_iter().enumerate() {
            exps = exps.with(Var::satake(i + 1), e);
        }
        let c = match convention {
            SymConvention::OrbitSum => 1,
            SymConvention::FullGroup => mult,
        };
        (exps, coeff_int(c))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn permutation_table_is_the_whole_group() {
        let perms = permutations4();
        assert_eq!(perms.len(), 24);
        let distinct: BTreeSet<[usize; 4]> = perms.into_iter().collect();
        assert_eq!(distinct.len(), 24);
    }

    #[test]
    fn orbit_sizes_follow_the_multinomial_count() {
        assert_eq!(orbit_size([1, 1, 1, 1]), 1);
        assert_eq!(orbit_size([2, 1, 1, 1]), 4);
        assert_eq!(orbit_size([2, 2, 1, 1]), 6);
        assert_eq!(orbit_size([2, 1, 1, 0]), 12);
        assert_eq!(orbit_size([3, 2, 1, 0]), 24);
    }

    #[test]
    fn orbit_sum_has_unit_coefficients() {
        let s = sym_poly([2, 2, 1, 1], SymConvention::OrbitSum);
        assert_eq!(s.num_terms(), 6);
        for (_, c) in s.terms() {
            assert_eq!(c, &coeff_int(1));
        }
    }

    #[test]
    fn full_group_weights_by_stabilizer_order() {
        // (7,7,7,7) is fixed by all of S_4.
        let s = sym_poly([7, 7, 7, 7], SymConvention::FullGroup);
        assert_eq!(s.num_terms(), 1);
        assert_eq!(s.terms().next().unwrap().1, &coeff_int(24));
        // (2,2,1,1) has stabilizer order 4.
        let t = sym_poly([2, 2, 1, 1], SymConvention::FullGroup);
        assert_eq!(t.num_terms(), 6);
        for (_, c) in t.terms() {
            assert_eq!(c, &coeff_int(4));
        }
    }

    #[test]
    fn sym_poly_is_invariant_under_variable_swaps() {
        // Swapping any two Satake variables leaves the polynomial unchanged.
        let s = sym_poly([5, 4, 3, 2], SymConvention::OrbitSum);
        for (a, b) in [(1, 2), (1, 3), (2, 4), (3, 4)] {
            let mut bindings = std::collections::BTreeMap::new();
            bindings.insert(Var::satake(a), MultiPoly::var(Var::satake(b)));
            bindings.insert(Var::satake(b), MultiPoly::var(Var::satake(a)));
            assert_eq!(s.substitute(&bindings).unwrap(), s);
        }
    }
}
