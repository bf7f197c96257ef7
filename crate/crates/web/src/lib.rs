//! WebAssembly bindings for the explorer page in `www/`.
//!
//! Every export takes a preset name and returns a JSON document; failures
//! come back as `{"error": "..."}` so the page has a single code path.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use semiring_core::construct::preset;
use semiring_core::lift::lift_nilidempotent;
use semiring_core::theorem::{Check, Profile, Theorem};
use semiring_core::FiniteSemiring;

const SUGGESTED: &[&str] = &[
    "t2b",
    "bool",
    "zmod:4",
    "z2x-sq",
    "z3x-sqm1",
    "m2z2",
    "bxy-presentation",
    "product:bool*bool",
    "product:bool*zmod:2",
    "triangular:2:zmod:2",
];

fn respond(outcome: Result<Value, String>) -> String {
    outcome
        .unwrap_or_else(|message| json!({ "error": message }))
        .to_string()
}

fn load(name: &str) -> Result<FiniteSemiring, String> {
    preset(name).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn presets() -> String {
    json!(SUGGESTED).to_string()
}

/// Tables plus one class record per element.
#[wasm_bindgen]
pub fn classify(name: &str) -> String {
    respond(load(name).map(|s| {
        let c = s.classify();
        let elements: Vec<Value> = s
            .elements()
            .map(|a| {
                json!({
                    "label": s.label(a),
                    "idempotent": c.idempotents.contains(a),
                    "nilpotent": c.nilpotents.contains(a),
                    "nilidempotent": c.nilidempotents.contains(a),
                    "central": c.center.contains(a),
                    "unit": c.units.contains(a),
                    "invertible": c.additively_invertible.contains(a),
                })
            })
            .collect();
        json!({
            "name": name,
            "order": s.order(),
            "elements": elements,
            "add": s.add_rows(),
            "mul": s.mul_rows(),
            "commutative": s.is_commutative(),
            "boolean": c.is_boolean(),
        })
    }))
}

fn check_json(s: &FiniteSemiring, c: &Check) -> Value {
    json!({
        "name": c.name,
        "holds": c.holds,
        "witness": c.witness.as_ref().map(|w| w.iter().map(|&a| s.label(a)).collect::<Vec<_>>()),
    })
}

/// Verdicts of all four theorems.
#[wasm_bindgen]
pub fn check(name: &str) -> String {
    respond(load(name).map(|s| {
        let profile = Profile::compute(&s);
        let reports: Vec<Value> = Theorem::ALL
            .iter()
            .map(|&t| {
                let r = profile.report(t);
                json!({
                    "theorem": t.id(),
                    "verdict": r.verdict.to_string(),
                    "hypotheses": r.hypotheses.iter().map(|c| check_json(&s, c)).collect::<Vec<_>>(),
                    "conclusions": r.conclusions.iter().map(|c| check_json(&s, c)).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "name": name, "reports": reports })
    }))
}

#[wasm_bindgen]
pub fn lift(name: &str, label: &str) -> String {
    respond(load(name).and_then(|s| {
        let g = s
            .index_of(label)
            .ok_or_else(|| format!("no element labelled `{label}`"))?;
        let t = lift_nilidempotent(&s, g).map_err(|e| e.to_string())?;
        let l = |a: usize| s.label(a).to_string();
        Ok(json!({
            "g0": l(t.g0),
            "z0": l(t.z0),
            "steps": t.steps.iter().map(|st| json!({ "g": l(st.g), "z": l(st.z), "w": l(st.w) })).collect::<Vec<_>>(),
            "f": l(t.f),
            "correction": l(t.correction),
            "iterations": t.iterations,
        }))
    }))
}
