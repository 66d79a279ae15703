//! Report output. Every invocation prints exactly one JSON document to
//! stdout, shaped as
//!
//! ```text
//! { "results": { ... , "pass": bool }, "meta": { budget, timing_ms, workers } }
//! ```
//!
//! The `results` subtree depends only on the mathematical inputs, never on
//! timing or thread count, so two runs with the same parameters serialize
//! byte-identically there. Timing and execution parameters live in `meta`.

use std::time::Instant;

use serde_json::{json, Value};

use crate::Ctx;

/// A `u128` as JSON: a plain number while it fits in `u64`, a decimal string
/// beyond that, so large coset counts survive transit exactly.
pub fn num(n: u128) -> Value {
    u64::try_from(n)
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(n.to_string()))
}

pub fn print(results: &Value, ctx: &Ctx, started: Instant) {
    let report = json!({
        "results": results,
        "meta": {
            "budget": num(ctx.config.budget),
            "timing_ms": started.elapsed().as_millis() as u64,
            "workers": ctx.config.workers,
        },
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
}
