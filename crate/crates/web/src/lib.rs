//! Browser bindings: analyze an involution, inspect the Coxeter element of
//! T_{p,q,r}, and tabulate μ(p,q,r). Every function returns a JSON string.

use cremona_core::diagram::{adjacency, Diagram};
use cremona_core::exact::interval::parse_rational;
use cremona_core::exact::scalar::Field;
use cremona_core::fixtures;
use cremona_core::orbit::trace::parse_alpha;
use cremona_core::pipeline::{analyze as run_analysis, default_oracle_depth, AnalyzeOptions};
use cremona_core::spectral::gram::lambda_two;
use cremona_core::spectral::{classify_and_report, classify_signature, gram_matrix, length_from_mu, mu_table as table};
use num_rational::BigRational;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Orbit bound ceiling in the browser, to keep the page responsive.
const MAX_BOUND: usize = 5_000;
const MAX_ARM: usize = 200;
const MAX_P: usize = 16;

fn tol() -> BigRational {
    parse_rational("1e-12").expect("literal")
}

fn to_json(v: &impl serde::Serialize) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// Runs the full pipeline on α, given as nine entries separated by commas,
/// semicolons or whitespace, over `field` ("q" or "fp:<p>").
#[wasm_bindgen]
pub fn analyze(field: &str, alpha: &str, bound: usize) -> Result<String, String> {
    if bound == 0 || bound > MAX_BOUND {
        return Err(format!("bound must lie in 1..={MAX_BOUND}"));
    }
    let field: Field = field.parse().map_err(|e: cremona_core::Error| e.to_string())?;
    let entries: Vec<String> = alpha
        .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    let alpha = parse_alpha(field, &entries).map_err(|e| e.to_string())?;
    let opts = AnalyzeOptions { bound, tol: tol(), oracle_depth: Some(default_oracle_depth(field)), cross_check: true };
    to_json(&run_analysis(&alpha, &opts).map_err(|e| e.to_string())?)
}

/// Signature, type, order or spectral radius of the Coxeter element of T_{p,q,r}.
#[wasm_bindgen]
pub fn coxeter(p: usize, q: usize, r: usize) -> Result<String, String> {
    if [p, q, r].iter().any(|&a| a == 0 || a > MAX_ARM) {
        return Err(format!("arm lengths must lie in 1..={MAX_ARM}"));
    }
    let diagram = Diagram::tree(p, q, r);
    let adj = adjacency(&diagram).ok_or("tree has no adjacency matrix")?;
    let gram = gram_matrix(&adj, lambda_two(), diagram.to_string()).map_err(|e| e.to_string())?;
    let signature = classify_signature(&gram).map_err(|e| e.to_string())?;
    let report = classify_and_report(&diagram, None, &tol()).map_err(|e| e.to_string())?;
    to_json(&json!({"diagram": diagram.to_string(), "signature": signature, "report": report}))
}

/// μ(p,q,r) and L = 2 arccosh(μ/2) for 2 ≤ p ≤ q ≤ r ≤ p_max, 1/p + 1/q + 1/r ≤ 1.
#[wasm_bindgen]
pub fn mu_table(p_max: usize) -> Result<String, String> {
    if p_max > MAX_P {
        return Err(format!("p_max is limited to {MAX_P} here"));
    }
    let mut rows = Vec::new();
    for m in table(p_max, &tol()).map_err(|e| e.to_string())? {
        let (_, len) = length_from_mu(m.interval(), &tol()).map_err(|e| e.to_string())?;
        rows.push(json!({
            "arms": m.arms,
            "mu": m.interval().mid_f64(),
            "width": m.interval().width_f64(),
            "L": (len.lo + len.hi) / 2.0,
            "affine": m.is_two(),
        }));
    }
    to_json(&rows)
}

/// The shipped fixtures: name, field, α as text and the recorded bound.
#[wasm_bindgen]
pub fn fixtures_json() -> Result<String, String> {
    let rows: Vec<_> = fixtures::all()
        .into_iter()
        .map(|f| {
            let alpha = f.alpha.iter().map(|row| row.join(", ")).collect::<Vec<_>>().join("; ");
            json!({"name": f.name, "description": f.description, "field": f.field, "alpha": alpha, "bound": f.bound})
        })
        .collect();
    to_json(&rows)
}
