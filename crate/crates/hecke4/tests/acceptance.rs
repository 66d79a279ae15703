//! Acceptance gate: one test per shipped claim, each printing a single
//! `criterion N: PASS` or `criterion N: FAIL` line before asserting. The
//! checks drive the compiled binary wherever a command exists for the claim
//! and fall back to the libraries for the purely symbolic identities.

mod common;

use common::hecke4;
use poly_core::{coeff_int, ExpVec, MultiPoly, Var};
use serde_json::Value;
use sym_table::{
    check_duality, check_functional_equation, functional_equation_residuals, numerator, KTable,
    SymConvention,
};

fn verdict(n: usize, ok: bool) {
    println!("criterion {n}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed");
}

fn cosets(results: &Value, delta: u64) -> u64 {
    results["deltas"]
        .as_array()
        .unwrap()
        .iter()
        .find(|d| d["delta"] == serde_json::json!(delta))
        .unwrap()["cosets"]
        .as_u64()
        .unwrap()
}

/// -x0^14 p^-6 (x1 x2 x3 x4)^7, the closed form of the top coefficient.
fn top_coefficient() -> MultiPoly {
    let mut e = ExpVec::of(Var::P, -6).with(Var::X0, 14);
    for i in 1..=4 {
        e = e.with(Var::satake(i), 7);
    }
    MultiPoly::monomial(e, coeff_int(-1))
}

#[test]
fn criterion_01_functional_equation_holds_and_mutations_break_it() {
    let table = KTable::build(SymConvention::OrbitSum);
    let mut ok = check_functional_equation(&table).is_ok();
    for k in 0..table.len() {
        let mutated = table
            .clone()
            .with_coefficient(k, table.coefficient(k) + &MultiPoly::one());
        let residuals = functional_equation_residuals(&mutated).expect("residuals computable");
        ok &= residuals.iter().any(|r| !r.is_zero());
    }
    let run = hecke4(&["verify", "funceq"]);
    ok &= run.status == 0 && run.results()["pass"] == Value::Bool(true);
    verdict(1, ok);
}

#[test]
fn criterion_02_inversion_identity_at_genus_four() {
    let poly = numerator(4, SymConvention::OrbitSum).expect("genus-4 numerator");
    let mut ok = check_duality(&poly, 4).is_ok();
    let run = hecke4(&["verify", "remark", "--genus", "4"]);
    ok &= run.status == 0
        && run.results()["duality_holds"] == Value::Bool(true)
        && run.results()["pass"] == Value::Bool(true);
    verdict(2, ok);
}

#[test]
fn criterion_03_table_boundary_values() {
    let table = KTable::build(SymConvention::OrbitSum);
    let ok = table.coefficient(0).is_one()
        && table.coefficient(1).is_zero()
        && table.coefficient(13).is_zero()
        && *table.coefficient(14) == top_coefficient();
    verdict(3, ok);
}

#[test]
fn criterion_04_oracle_equivalence_at_genus_four() {
    let at_two = hecke4(&["verify", "oracle", "--genus", "4", "--p", "2", "--max-delta", "2"]);
    let mut ok = at_two.status == 0 && at_two.results()["pass"] == Value::Bool(true);
    if ok {
        ok &= cosets(at_two.results(), 1) == 2295;
        let deep = cosets(at_two.results(), 2);
        ok &= deep == 3_127_831 && (1_000_000..10_000_000).contains(&deep);
    }
    let at_three = hecke4(&["verify", "oracle", "--genus", "4", "--p", "3", "--max-delta", "1"]);
    ok &= at_three.status == 0 && at_three.results()["pass"] == Value::Bool(true);
    verdict(4, ok);
}

#[test]
fn criterion_05_degree_one_count_law() {
    let mut ok = true;
    for genus in 1..=4 {
        for p in ["2", "3", "5"] {
            let run = hecke4(&[
                "verify", "counts", "--genus", &genus.to_string(), "--p", p,
            ]);
            ok &= run.status == 0
                && run.results()["product_formula_matches"] == Value::Bool(true)
                && run.results()["closed_form_matches"] == Value::Bool(true);
        }
    }
    verdict(5, ok);
}

#[test]
fn criterion_06_genus_one_closed_form() {
    let rebuilt = hecke4(&["reconstruct", "--genus", "1"]);
    let mut ok = rebuilt.status == 0 && rebuilt.results()["pass"] == Value::Bool(true);
    if ok {
        for row in rebuilt.results()["runs"].as_array().unwrap() {
            ok &= row["numerator_is_one"] == Value::Bool(true);
        }
    }
    for p in ["2", "3", "5"] {
        let run = hecke4(&["verify", "oracle", "--genus", "1", "--p", p, "--max-delta", "6"]);
        ok &= run.status == 0 && run.results()["pass"] == Value::Bool(true);
    }
    verdict(6, ok);
}

#[test]
fn criterion_07_genus_two_symbolic_pipeline() {
    // The p = 23 depth-2 enumeration exceeds the default coset budget, so the
    // run must refuse until the budget is raised explicitly.
    let refused = hecke4(&["reconstruct", "--genus", "2", "--symbolic"]);
    let mut ok = refused.status == 2
        && refused.stderr.contains("raise the budget to proceed");
    let run = hecke4(&[
        "reconstruct", "--genus", "2", "--symbolic", "--budget", "1000000000",
    ]);
    ok &= run.status == 0
        && run.results()["matches_closed_form"] == Value::Bool(true)
        && run.results()["inversion_symmetry_holds"] == Value::Bool(true)
        && run.results()["duality_holds"] == Value::Bool(true)
        && run.results()["tail_checked_at"] == serde_json::json!([2, 3])
        && run.results()["pass"] == Value::Bool(true);
    verdict(7, ok);
}

#[test]
fn criterion_08_siegel_projection() {
    let run = hecke4(&["verify", "siegel", "--p", "2", "--max-delta", "3"]);
    let mut ok = run.status == 0
        && run.results()["denominator_projects"] == Value::Bool(true)
        && run.results()["numerator_projects"] == Value::Bool(true)
        && run.results()["pass"] == Value::Bool(true);
    if ok {
        ok &= run.results()["deltas"].as_array().unwrap().len() == 4;
    }
    verdict(8, ok);
}

#[test]
fn criterion_09_convention_discrimination() {
    let fg_funceq = hecke4(&["verify", "funceq", "--sym-convention", "full-group"]);
    let mut ok = fg_funceq.status == 1 && fg_funceq.results()["pass"] == Value::Bool(false);
    if ok {
        let failing = fg_funceq.results()["failing_k"].as_array().unwrap();
        ok &= failing.contains(&serde_json::json!(0));
    }
    let fg_oracle = hecke4(&[
        "verify", "oracle", "--genus", "4", "--p", "2", "--max-delta", "2",
        "--sym-convention", "full-group",
    ]);
    ok &= fg_oracle.status == 1 && fg_oracle.results()["pass"] == Value::Bool(false);
    if ok {
        let deltas = fg_oracle.results()["deltas"].as_array().unwrap();
        ok &= deltas[2]["images_match"] == Value::Bool(false);
    }
    // The shipped convention passes the same checks (depth 2 is covered by
    // criterion 4; depth 1 keeps this test self-contained).
    let os_funceq = hecke4(&["verify", "funceq"]);
    ok &= os_funceq.status == 0;
    let os_oracle = hecke4(&["verify", "oracle", "--genus", "4", "--p", "2", "--max-delta", "1"]);
    ok &= os_oracle.status == 0;
    verdict(9, ok);
}

#[test]
fn criterion_10_reports_are_deterministic_across_workers() {
    let commands: [&[&str]; 5] = [
        &["verify", "oracle", "--genus", "4", "--p", "2", "--max-delta", "2"],
        &["verify", "counts", "--genus", "4", "--p", "2"],
        &["reconstruct", "--genus", "1"],
        &["reconstruct", "--genus", "2", "--symbolic", "--budget", "1000000000"],
        &["verify", "siegel", "--p", "2", "--max-delta", "3"],
    ];
    let mut ok = true;
    for base in commands {
        let mut reference: Option<String> = None;
        // 0 resolves to one worker per core, the machine maximum.
        for workers in ["1", "2", "0"] {
            let mut args = base.to_vec();
            args.extend_from_slice(&["--workers", workers]);
            let run = hecke4(&args);
            ok &= run.status == 0;
            let serialized = serde_json::to_string(run.results()).expect("serializable");
            match &reference {
                None => reference = Some(serialized),
                Some(expected) => ok &= *expected == serialized,
            }
        }
    }
    verdict(10, ok);
}
