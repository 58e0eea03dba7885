//! WebAssembly bindings for the browser demo. Every entry point takes an algebra
//! document as JSON text and returns a JSON string; errors come back as `{"error": ...}`.

use std::sync::Arc;

use homnov::cohomology::h2;
use homnov::constructions::xi_family;
use homnov::exactlin::{format_scalar, parse_scalar};
use homnov::superalgebra::*;
use homnov::{AlgebraDocument, Parity, Verdict};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn verdict(name: &str, v: &Verdict) -> Value {
    json!({
        "name": name,
        "holds": v.holds(),
        "violation": v.violation().map(ToString::to_string),
    })
}

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn parse(doc: &str) -> Result<AlgebraDocument, String> {
    AlgebraDocument::parse(doc).map_err(|e| e.to_string())
}

/// Every axiom that applies to the document: the algebra predicates, plus the
/// derivation, Rota-Baxter and quadratic checks when `D`, `P` with `weight`, or `form` are present.
pub fn axioms(doc: &str) -> Result<Value, String> {
    let doc = parse(doc)?;
    let a = &doc.algebra;
    let mut out = vec![
        verdict("multiplicative", &is_multiplicative(a)),
        verdict("hom-left-symmetric", &is_hom_left_symmetric(a)),
        verdict("hom-novikov identity", &satisfies_hom_novikov_identity(a)),
        verdict("hom-novikov", &is_hom_novikov(a)),
        verdict("hom-associative", &is_hom_associative(a)),
        verdict("supercommutative", &is_supercommutative(a)),
        verdict("hom-lie", &is_hom_lie(a)),
    ];
    let err = |e: homnov::Error| e.to_string();
    if doc.maps.contains_key("D") {
        let d = doc.map("D").map_err(err)?;
        out.push(verdict("derivation D", &is_derivation(a, &d).map_err(err)?));
    }
    if let (true, Some(w)) = (doc.maps.contains_key("P"), &doc.weight) {
        let p = doc.map("P").map_err(err)?;
        out.push(verdict("rota-baxter P", &is_rota_baxter(a, &p, w).map_err(err)?));
    }
    if let Some(b) = &doc.form {
        out.push(verdict("quadratic", &is_quadratic_hom_novikov(a, b).map_err(err)?));
    }
    Ok(json!({ "dim": a.dim(), "involutive": is_involutive(a), "regular": is_regular(a), "checks": out }))
}

/// `C²`, `Z²`, `B²` and `H²` dimensions for both parities.
pub fn cohomology(doc: &str) -> Result<Value, String> {
    let a = Arc::new(parse(doc)?.algebra);
    let reports = Parity::BOTH
        .iter()
        .map(|&p| h2(&a, p).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    serde_json::to_value(reports).map_err(|e| e.to_string())
}

/// Builds `x ∗_ξ y = x D(y) + ξ xy` for each comma-separated `ξ` and checks it is Hom-Novikov.
pub fn xi_scan(doc: &str, xis: &str) -> Result<Value, String> {
    let doc = parse(doc)?;
    let d = doc.map("D").map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for text in xis.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let xi = parse_scalar(text).map_err(|e| format!("xi {text:?}: {e}"))?;
        let row = match xi_family(&doc.algebra, &d, &xi) {
            Ok(b) => {
                let v = is_hom_novikov(&b);
                json!({
                    "xi": format_scalar(&xi),
                    "holds": v.holds(),
                    "violation": v.violation().map(ToString::to_string),
                    "document": AlgebraDocument::new(b).emit(),
                })
            }
            Err(e) => json!({ "xi": format_scalar(&xi), "error": e.to_string() }),
        };
        rows.push(row);
    }
    Ok(Value::Array(rows))
}

#[wasm_bindgen(js_name = checkAxioms)]
pub fn check_axioms_js(doc: &str) -> String {
    respond(axioms(doc))
}

#[wasm_bindgen(js_name = cohomology)]
pub fn cohomology_js(doc: &str) -> String {
    respond(cohomology(doc))
}

#[wasm_bindgen(js_name = xiScan)]
pub fn xi_scan_js(doc: &str, xis: &str) -> String {
    respond(xi_scan(doc, xis))
}
