//! Browser bindings: generate an embedding, run the dual decomposition on it, and print the
//! bound table. Each export has a plain-Rust twin so the logic is testable natively.

use serde_json::{json, Value};
use surfwidth::decomposition::{self, TreeMode};
use surfwidth::report::{self, ReportOptions};
use surfwidth::spanning::TreeSearchOptions;
use surfwidth::{generators, io, EmbeddedGraph};
use wasm_bindgen::prelude::*;

/// Kept small so a browser tab stays responsive.
const SEARCH_BUDGET: u64 = 2_000_000;
const WIDTH_LIMIT: usize = 16;

fn search() -> TreeSearchOptions {
    TreeSearchOptions {
        node_budget: SEARCH_BUDGET,
    }
}

fn parse_params(params: &str) -> Result<Vec<usize>, String> {
    params
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| format!("parameter `{t}` is not a non-negative integer"))
        })
        .collect()
}

fn summary(g: &EmbeddedGraph) -> Value {
    let s = g.surface();
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "faces": g.face_count(),
        "chi": s.chi,
        "orientable": s.orientable,
        "surface": s.name(),
        "polyhedral": g.is_polyhedral(),
    })
}

/// `{ "emb": <.emb text>, "summary": {...} }` for a named generator.
pub fn generate_json(name: &str, params: &str) -> Result<String, String> {
    let params = parse_params(params)?;
    let g = generators::by_name(name, &params).map_err(|e| e.to_string())?;
    Ok(json!({ "emb": io::write_emb(&g), "summary": summary(&g) }).to_string())
}

/// Tree, edge-assignment, bags and apex set of the dual construction, as JSON.
pub fn dual_decomposition_json(emb: &str, hamiltonian: bool) -> Result<String, String> {
    let g = io::parse_emb(emb).map_err(|e| e.to_string())?;
    let mode = if hamiltonian {
        TreeMode::HamPath
    } else {
        TreeMode::Tree3
    };
    let dd = decomposition::dual_decomposition(&g, mode, search()).map_err(|e| e.to_string())?;
    let faces: Vec<Vec<usize>> = g.face_vertices();
    let bags: Vec<Vec<usize>> = dd
        .bags
        .bags
        .iter()
        .map(|b| b.iter().copied().collect())
        .collect();
    let reduced: Vec<Vec<usize>> = dd
        .reduced
        .bags
        .iter()
        .map(|b| b.iter().copied().collect())
        .collect();
    let tau: Vec<usize> = dd.tau().iter().map(|(_, e)| e).collect();
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|e| [e.u, e.v]).collect();
    Ok(json!({
        "summary": summary(&g),
        "mode": mode.name(),
        "edges": edges,
        "tree": dd.tree.edge_ids().collect::<Vec<_>>(),
        "avoided": dd.construction.avoided.edge_ids().collect::<Vec<_>>(),
        "faces": faces,
        "tau": tau,
        "residual": dd.residual.edge_ids().collect::<Vec<_>>(),
        "bags": bags,
        "apex": dd.apex.0.iter().copied().collect::<Vec<_>>(),
        "apex_bound": decomposition::apex_bound(dd.surface.chi, mode),
        "reduced_bags": reduced,
        "max_reduced_bag": dd.reduced.max_bag_size(),
    })
    .to_string())
}

/// The rendered bound table.
pub fn report_text(emb: &str, name: &str) -> Result<String, String> {
    let g = io::parse_emb(emb).map_err(|e| e.to_string())?;
    let options = ReportOptions {
        limit: WIDTH_LIMIT,
        search: search(),
        hamiltonian: true,
    };
    let rows = report::build_report(name, &g, &options).map_err(|e| e.to_string())?;
    Ok(report::render(&rows))
}

#[wasm_bindgen]
pub fn generate(name: &str, params: &str) -> Result<String, JsValue> {
    generate_json(name, params).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = dualDecomposition)]
pub fn dual_decomposition(emb: &str, hamiltonian: bool) -> Result<String, JsValue> {
    dual_decomposition_json(emb, hamiltonian).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn report(emb: &str, name: &str) -> Result<String, JsValue> {
    report_text(emb, name).map_err(|e| JsValue::from_str(&e))
}
