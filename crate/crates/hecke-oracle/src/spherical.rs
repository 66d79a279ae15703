//! Spherical image of a coset sum: each representative with diagonal
//! valuations `(a_1, ..., a_n)` and similitude norm `p^delta` maps to the
//! monomial
//!
//! ```text
//! x0^delta * p^(-delta*n(n+1)/2) * prod_i (x_i * p^(n+1-i))^(a_i)
//! ```
//!
//! and the image of the sum is the count-weighted total. The enumeration
//! runs at a concrete prime, so the power of `p` is evaluated into the
//! rational coefficient and images live in `Q[x0, x1, ..., xn]`; matching
//! them against a closed form means substituting the same prime there. The
//! per-variable weight `n+1-i` pairs the normalization with descending
//! diagonal position; the ascending variant is kept selectable to expose
//! what breaks under the other pairing.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use poly_core::{coeff_pow, Coeff, ExpVec, MultiPoly, Var};

use crate::enumerate::{count_by_profile, visit_cosets, CosetSpec, EnumConfig};
use crate::error::OracleError;
use crate::smith::DivisorChain;

/// How diagonal positions are weighted inside the spherical monomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum NormalizationOrder {
    #[default]
    Descending,
    Ascending,
}

impl NormalizationOrder {
    pub fn name(&self) -> &'static str {
        match self {
            NormalizationOrder::Descending => "descending",
            NormalizationOrder::Ascending => "ascending",
        }
    }

    pub fn from_name(name: &str) -> Option<NormalizationOrder> {
        match name {
            "descending" => Some(NormalizationOrder::Descending),
            "ascending" => Some(NormalizationOrder::Ascending),
            _ => None,
        }
    }

    fn weight(&self, genus: usize, i: usize) -> i32 {
        match self {
            NormalizationOrder::Descending => (genus + 1 - i) as i32,
            NormalizationOrder::Ascending => i as i32,
        }
    }
}

/// The monomial attached to one coset with the given diagonal valuation
/// profile, at the concrete prime `p`.
pub fn spherical_monomial(
    genus: usize,
    p: i128,
    delta: u32,
    profile: &[u32],
    order: NormalizationOrder,
) -> MultiPoly {
    assert_eq!(profile.len(), genus, "profile length must match the genus");
    let tri = (genus * (genus + 1) / 2) as i32;
    let mut e = ExpVec::zero().with(Var::X0, delta as i32);
    let mut p_exp = -(delta as i32) * tri;
    for (idx, &a) in profile.iter().enumerate() {
        let i = idx + 1;
        e = e.with(Var::satake(i), a as i32);
        p_exp += a as i32 * order.weight(genus, i);
    }
    let base = Coeff::from_integer(BigInt::from(p));
    let c = coeff_pow(&base, p_exp).expect("prime base is nonzero");
    MultiPoly::from_terms(vec![(e, c)])
}

fn count_coeff(count: u128) -> Coeff {
    BigRational::from_integer(BigInt::from(count))
}

/// Spherical image of the full degree-`p^delta` coset sum, computed from
/// per-profile counts.
pub fn spherical_image(
    spec: &CosetSpec,
    config: &EnumConfig,
    order: NormalizationOrder,
) -> Result<MultiPoly, OracleError> {
    let mut image = MultiPoly::zero();
    for (profile, count) in count_by_profile(spec, config)? {
        let term = spherical_monomial(spec.genus, spec.p, spec.delta, &profile, order)
            .mul_scalar(&count_coeff(count));
        image = &image + &term;
    }
    Ok(image)
}

/// Count and spherical image of one elementary-divisor class.
#[derive(Clone, Debug)]
pub struct ClassSummary {
    pub count: u128,
    pub image: MultiPoly,
}

/// Splits the coset sum by elementary divisor chain, streaming over the
/// representatives. Each class carries its coset count and partial image.
pub fn spherical_classes(
    spec: &CosetSpec,
    config: &EnumConfig,
    order: NormalizationOrder,
) -> Result<BTreeMap<DivisorChain, ClassSummary>, OracleError> {
    let mut classes: BTreeMap<DivisorChain, ClassSummary> = BTreeMap::new();
    let mut failure: Option<OracleError> = None;
    let genus = spec.genus;
    let delta = spec.delta;
    let p = spec.p;
    visit_cosets(spec, config, |m| {
        if failure.is_some() {
            return;
        }
        match DivisorChain::classify(m, p, delta) {
            Err(e) => failure = Some(e),
            Ok(chain) => {
                let profile: Vec<u32> = (0..genus)
                    .map(|i| {
                        let mut d = m.get(i, i);
                        let mut v = 0u32;
                        while d % p == 0 {
                            d /= p;
                            v += 1;
                        }
                        v
                    })
                    .collect();
                let term = spherical_monomial(genus, p, delta, &profile, order);
                let entry = classes.entry(chain).or_insert_with(|| ClassSummary {
                    count: 0,
                    image: MultiPoly::zero(),
                });
                entry.count += 1;
                entry.image = &entry.image + &term;
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(classes),
    }
}
