//! JSON form for polynomials.
//!
//! A polynomial is an array of term objects in ascending canonical order:
//!
//! ```json
//! [
//!   {"c": [1, 2], "e": {"p": -2, "x0": 2}},
//!   {"c": [4, 1], "e": {"X": 1}}
//! ]
//! ```
//!
//! `c` is `[numerator, denominator]` in lowest terms with a positive
//! denominator. Components that fit in an `i64` are JSON numbers; anything
//! larger is a decimal string, so values survive readers that parse JSON
//! numbers as doubles. `e` lists only nonzero exponents.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::error::PolyError;
use crate::exponent::{ExpVec, Var};
use crate::poly::{Coeff, MultiPoly};

fn bigint_to_value(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn bigint_from_value(v: &Value) -> Result<BigInt, PolyError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| PolyError::Json(format!("non-integer number {n}"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| PolyError::Json(format!("bad integer string {s:?}"))),
        other => Err(PolyError::Json(format!(
            "expected an integer, found {other}"
        ))),
    }
}

pub fn poly_to_json(poly: &MultiPoly) -> Value {
    let terms: Vec<Value> = poly
        .terms()
        .map(|(exps, coeff)| {
            let mut e = Map::new();
            for (var, k) in exps.iter_nonzero() {
                e.insert(var.name().to_string(), json!(k));
            }
            json!({
                "c": [bigint_to_value(coeff.numer()), bigint_to_value(coeff.denom())],
                "e": Value::Object(e),
            })
        })
        .collect();
    Value::Array(terms)
}

pub fn poly_from_json(value: &Value) -> Result<MultiPoly, PolyError> {
    let terms = value
        .as_array()
        .ok_or_else(|| PolyError::Json("polynomial must be an array of terms".into()))?;
    let mut out = MultiPoly::zero();
    for term in terms {
        let obj = term
            .as_object()
            .ok_or_else(|| PolyError::Json("term must be an object".into()))?;
        let c = obj
            .get("c")
            .and_then(Value::as_array)
            .ok_or_else(|| PolyError::Json("term is missing \"c\": [num, den]".into()))?;
        if c.len() != 2 {
            return Err(PolyError::Json("\"c\" must have exactly two entries".into()));
        }
        let numer = bigint_from_value(&c[0])?;
        let denom = bigint_from_value(&c[1])?;
        if denom == BigInt::from(0) {
            return Err(PolyError::Json("zero denominator".into()));
        }
        let coeff: Coeff = BigRational::new(numer, denom);
        let mut exps = ExpVec::zero();
        if let Some(e) = obj.get("e") {
            let map = e
                .as_object()
                .ok_or_else(|| PolyError::Json("\"e\" must be an object".into()))?;
            for (name, val) in map {
                let var = Var::from_name(name)
                    .ok_or_else(|| PolyError::Json(format!("unknown variable {name:?}")))?;
                let k = val
                    .as_i64()
                    .and_then(|k| i32::try_from(k).ok())
                    .ok_or_else(|| PolyError::Json(format!("bad exponent for {name}")))?;
                exps = exps.with(var, k);
            }
        }
        out.insert_term(exps, coeff);
    }
    Ok(out)
}

pub fn poly_to_json_string(poly: &MultiPoly) -> String {
    poly_to_json(poly).to_string()
}

pub fn poly_from_json_str(s: &str) -> Result<MultiPoly, PolyError> {
    let value: Value =
        serde_json::from_str(s).map_err(|e| PolyError::Json(format!("invalid JSON: {e}")))?;
    poly_from_json(&value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{coeff_int, coeff_ratio};

    #[test]
    fn round_trip_preserves_terms() {
        let poly = MultiPoly::from_terms([
            (ExpVec::of(Var::P, -2).with(Var::X0, 2), coeff_ratio(1, 2)),
            (ExpVec::of(Var::X, 1), coeff_int(4)),
            (ExpVec::zero(), coeff_int(-3)),
        ]);
        let value = poly_to_json(&poly);
        assert_eq!(poly_from_json(&value).unwrap(), poly);
    }

    #[test]
    fn terms_are_listed_in_ascending_canonical_order() {
        let poly = MultiPoly::from_terms([
            (ExpVec::of(Var::P, 2), coeff_int(2)),
            (ExpVec::of(Var::P, 1), coeff_int(4)),
            (ExpVec::zero(), coeff_int(1)),
        ]);
        let value = poly_to_json(&poly);
        let terms = value.as_array().unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0]["e"], json!({}));
        assert_eq!(terms[1]["e"], json!({"p": 1}));
        assert_eq!(terms[2]["e"], json!({"p": 2}));
        assert_eq!(terms[2]["c"], json!([2, 1]));
    }

    #[test]
    fn huge_coefficients_become_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let poly = MultiPoly::constant(BigRational::from_integer(big));
        let value = poly_to_json(&poly);
        assert_eq!(
            value[0]["c"][0],
            json!("123456789012345678901234567890")
        );
        assert_eq!(value[0]["c"][1], json!(1));
        assert_eq!(poly_from_json(&value).unwrap(), poly);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        for s in [
            "{}",
            "[{\"c\": [1]}]",
            "[{\"c\": [1, 0]}]",
            "[{\"c\": [1.5, 1]}]",
            "[{\"c\": [1, 1], \"e\": {\"q\": 1}}]",
            "[{\"c\": [1, 1], \"e\": {\"p\": 1.5}}]",
        ] {
            assert!(poly_from_json_str(s).is_err(), "expected failure for {s}");
        }
    }

    #[test]
    fn zero_terms_collapse() {
        // Duplicate exponent entries accumulate; exact cancellation vanishes.
        let s = "[{\"c\": [1, 1], \"e\": {\"p\": 1}}, {\"c\": [-1, 1], \"e\": {\"p\": 1}}]";
        assert!(poly_from_json_str(s).unwrap().is_zero());
    }
}
