//! Browser bindings: every export takes plain strings or numbers and
//! returns a JSON string, either `{"ok": ...}` or `{"error": "..."}`.

use polystab::format::{self, graph_json, report_json};
use polystab::polymatroid::{analytic_spread, is_polymatroidal, relation_graph, veronese_type};
use polystab::stability::full_report;
use polystab::MonomialIdeal;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn wrap(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => json!({ "ok": v }).to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn parse(text: &str) -> Result<MonomialIdeal, String> {
    let doc = format::parse_ideal(text, None).map_err(|e| e.to_string())?;
    if doc.ideal.is_unit() {
        return Err("the unit ideal has no associated primes".into());
    }
    Ok(doc.ideal)
}

fn analyze(ideal: &MonomialIdeal) -> Result<Value, String> {
    let graph = relation_graph(ideal);
    let spread = analytic_spread(ideal).ok();
    let report = if is_polymatroidal(ideal) {
        Some(report_json(&full_report(ideal).map_err(|e| e.to_string())?))
    } else {
        None
    };
    Ok(json!({
        "ideal": ideal.to_string(),
        "polymatroidal": report.is_some(),
        "graph": graph_json(&graph, spread),
        "report": report,
    }))
}

/// Stability report and relation graph of the ideal in `text`.
pub fn report_value(text: &str) -> Result<Value, String> {
    analyze(&parse(text)?)
}

/// Veronese-type ideal `I(d; caps)` together with its report.
pub fn veronese_value(degree: u32, caps: &[u32]) -> Result<Value, String> {
    let ideal = veronese_type(caps.len(), degree, caps).map_err(|e| e.to_string())?;
    analyze(&ideal)
}

/// Relation graph alone; cheap enough to recompute on every keystroke.
pub fn graph_value(text: &str) -> Result<Value, String> {
    let ideal = parse(text)?;
    Ok(graph_json(
        &relation_graph(&ideal),
        analytic_spread(&ideal).ok(),
    ))
}

#[wasm_bindgen]
pub fn report(text: &str) -> String {
    wrap(report_value(text))
}

#[wasm_bindgen]
pub fn veronese(degree: u32, caps: Vec<u32>) -> String {
    wrap(veronese_value(degree, &caps))
}

#[wasm_bindgen]
pub fn graph(text: &str) -> String {
    wrap(graph_value(text))
}
