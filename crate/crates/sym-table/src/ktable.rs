//! The expanded numerator coefficient table.

use poly_core::{
    coeff_int, parse_poly, poly_from_json, poly_to_json, ExpVec, MultiPoly, Var,
};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::data::{KSpec, KTABLE_GENUS4};
use crate::error::SymError;
use crate::orbit::{sym_poly, SymConvention};

/// Embedded copy of the expanded table, regenerated by
/// `cargo run -p sym-table --example gen_table`.
pub const EMBEDDED_TABLE_JSON: &str = include_str!("../data/ktable-genus4.json");

/// The fifteen coefficients of the genus-4 numerator, expanded into the
/// polynomial ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KTable {
    convention: SymConvention,
    coefficients: Vec<MultiPoly>,
}

fn expand_spec(spec: &KSpec, convention: SymConvention) -> MultiPoly {
    if spec.sign == 0 {
        return MultiPoly::zero();
    }
    let mut body = MultiPoly::zero();
    for group in spec.groups {
        let c = parse_poly(group.p_coeff).expect("static table coefficient parses");
        let mut syms = MultiPoly::zero();
        for &sig in group.signatures {
            syms = &syms + &sym_poly(sig, convention);
        }
        body = &body + &(&c * &syms);
    }
    let prefactor = ExpVec::of(Var::X0, spec.x0_pow).with(Var::P, spec.p_pow);
    body.mul_monomial(&prefactor, &coeff_int(spec.sign))
}

impl KTable {
    /// Expands the static table under the given symmetrization convention.
    pub fn build(convention: SymConvention) -> KTable {
        KTable {
            convention,
            coefficients: KTABLE_GENUS4
                .iter()
                .map(|spec| expand_spec(spec, convention))
                .collect(),
        }
    }

    pub fn convention(&self) -> SymConvention {
        self.convention
    }

    /// Number of coefficients, one per power of `X` from 0 through 14.
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, k: usize) -> &MultiPoly {
        &self.coefficients[k]
    }

    pub fn coefficients(&self) -> &[MultiPoly] {
        &self.coefficients
    }

    /// Replaces one coefficient, for negative-control experiments.
    pub fn with_coefficient(mut self, k: usize, value: MultiPoly) -> KTable {
        self.coefficients[k] = value;
        self
    }

    /// The full numerator polynomial, sum of coefficient times `X^k`.
    pub fn numerator(&self) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (k, coeff) in self.coefficients.iter().enumerate() {
            p = &p + &coeff.mul_monomial(&ExpVec::of(Var::X, k as i32), &coeff_int(1));
        }
        p
    }

    pub fn to_json(&self) -> Value {
        json!({
            "genus": 4,
            "convention": self.convention.name(),
            "coefficients": self
                .coefficients
                .iter()
                .map(poly_to_json)
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<KTable, SymError> {
        let convention = value
            .get("convention")
            .and_then(Value::as_str)
            .and_then(SymConvention::from_name)
            .ok_or_else(|| SymError::Json("missing or unknown \"convention\"".into()))?;
        let coefficients = value
            .get("coefficients")
            .and_then(Value::as_array)
            .ok_or_else(|| SymError::Json("missing \"coefficients\"".into()))?
            .iter()
            .map(poly_from_json)
            .collect::<Result<Vec<_>, _>>()?;
        if coefficients.len() != KTABLE_GENUS4.len() {
            return Err(SymError::Json(format!(
                "expected {} coefficients, found {}",
                KTABLE_GENUS4.len(),
                coefficients.len()
            )));
        }
        Ok(KTable {
            convention,
            coefficients,
        })
    }

    /// The embedded expanded table shipped with the crate.
    pub fn embedded() -> Result<KTable, SymError> {
        let value: Value = serde_json::from_str(EMBEDDED_TABLE_JSON)
            .map_err(|e| SymError::Json(format!("invalid embedded JSON: {e}")))?;
        KTable::from_json(&value)
    }

    /// SHA-256 over the canonical JSON form; reports embed this so results
    /// can be tied to the exact table they were computed from.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.to_json().to_string().as_bytes());
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}
