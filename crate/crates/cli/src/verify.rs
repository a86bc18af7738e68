//! The comparison ledger: every closed-form statement that applies to the
//! input, next to the computed value. Mismatches are data, not errors.

use homlie::cohomology::{
    adjoint_b2_verify, faithful_h1_hom_report, faithful_h1_report, squares_to_zero, trivial_cohomology_report,
};
use homlie::derivations::{der_block_check, der_dim_compare, der_space, der_table, meta_heisenberg};
use homlie::representations::{minimal_faithful, trivial_rep};
use homlie::{Error, HeisenbergAlgebra};
use serde_json::{json, Value};

use crate::commands::{to_value, Failure, Outcome};

struct Check {
    name: &'static str,
    status: &'static str,
    detail: Value,
}

fn judged(name: &'static str, ok: bool, detail: Value) -> Check {
    Check {
        name,
        status: if ok { "match" } else { "mismatch" },
        detail,
    }
}

fn skipped(name: &'static str, reason: impl Into<String>) -> Check {
    Check {
        name,
        status: "skipped",
        detail: json!({ "reason": reason.into() }),
    }
}

/// Run `f`; an input-type error means the statement does not apply.
fn attempt(name: &'static str, f: impl FnOnce() -> Outcome<Check>) -> Outcome<Check> {
    match f() {
        Err(Failure::Input(reason)) => Ok(skipped(name, reason)),
        other => other,
    }
}

fn needs_block_diagonal(h: &HeisenbergAlgebra) -> Outcome<()> {
    if h.is_block_diagonal() {
        Ok(())
    } else {
        Err(Error::NotBlockDiagonal("alpha is not diag(X, Y, lambda)".into()).into())
    }
}

pub fn verify(h: &HeisenbergAlgebra, k: i64, r: i64) -> Outcome<Value> {
    let l = h.algebra();
    let checks = vec![
        attempt("derivation_table", || {
            let rows = der_table(k)?;
            Ok(judged("derivation_table", rows.iter().all(|r| r.consistent()), to_value(&rows)?))
        })?,
        attempt("der_dim_formula", || {
            needs_block_diagonal(h)?;
            let c = der_dim_compare(h, k)?;
            Ok(judged("der_dim_formula", c.matches, to_value(&c)?))
        })?,
        attempt("der_block_theorem", || {
            needs_block_diagonal(h)?;
            let space = der_space(l, k)?;
            let passes = space
                .generators
                .iter()
                .map(|g| der_block_check(h, g, k).map(|c| c.pass))
                .collect::<homlie::Result<Vec<bool>>>()?;
            Ok(judged(
                "der_block_theorem",
                passes.iter().all(|p| *p),
                json!({ "generators": space.dim, "pass": passes }),
            ))
        })?,
        attempt("meta_heisenberg", || {
            let mh = meta_heisenberg(h, k)?;
            let ok = mh.i_k_is_derivation && mh.i_k_star_is_derivation && mh.validation.all_ok();
            Ok(judged(
                "meta_heisenberg",
                ok,
                json!({
                    "i_k_is_derivation": mh.i_k_is_derivation,
                    "i_k_star_is_derivation": mh.i_k_star_is_derivation,
                    "validation": to_value(&mh.validation)?,
                }),
            ))
        })?,
        attempt("trivial_h2", || {
            let rep = trivial_cohomology_report(h, 1, r)?;
            Ok(judged("trivial_h2", rep.all_match(), to_value(&rep)?))
        })?,
        attempt("faithful_h1", || {
            let rep = faithful_h1_report(h, r)?;
            Ok(judged("faithful_h1", rep.all_match(), to_value(&rep)?))
        })?,
        attempt("faithful_h1_hom", || {
            let rep = faithful_h1_hom_report(h, r)?;
            Ok(judged("faithful_h1_hom", rep.all_match(), to_value(&rep)?))
        })?,
        attempt("adjoint_lists", || {
            let rep = adjoint_b2_verify(h, r)?;
            let ok = rep.b2_ok() && rep.b2_list_spans_b2 && rep.flagged.is_empty();
            Ok(judged("adjoint_lists", ok, to_value(&rep)?))
        })?,
        attempt("complex", || {
            let reps = [
                ("trivial", trivial_rep(l, 1)?),
                ("adjoint", l.adjoint_rep()?),
                ("faithful", minimal_faithful(h)?),
            ];
            let mut rows = Vec::new();
            let mut ok = true;
            for (name, rep) in &reps {
                for hom in [false, true] {
                    for deg in [1, 2] {
                        let zero = squares_to_zero(l, rep, deg, r, hom)?;
                        ok &= zero;
                        rows.push(json!({"rep": name, "degree": deg, "hom_restricted": hom, "squares_to_zero": zero}));
                    }
                }
            }
            Ok(judged("complex", ok, Value::Array(rows)))
        })?,
    ];
    let count = |s: &str| checks.iter().filter(|c| c.status == s).count();
    Ok(json!({
        "m": h.m(),
        "lambda": to_value(h.lambda())?,
        "k": k,
        "r": r,
        "matches": count("match"),
        "mismatches": count("mismatch"),
        "skipped": count("skipped"),
        "checks": checks
            .iter()
            .map(|c| json!({"name": c.name, "status": c.status, "detail": c.detail}))
            .collect::<Vec<_>>(),
    }))
}
