//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every export returns a JSON string. The `*_json` functions hold the logic
//! and run natively, so they are what the tests exercise.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use vwq_core::format::{to_json_value, CanonicalRational};
use vwq_core::mock_modular::{
    check_double_s, check_s_matrix, check_sduality_p2, check_t_periodicity, UpperHalfPoint,
};
use vwq_core::partition::{z_vb_p122, z_vb_p2, z_vb_p222, Surface};
use vwq_core::tautological::{compare_monopole, CurveModel};
use vwq_core::Rational;

/// Largest order the page will ask for; keeps the exact arithmetic snappy.
pub const MAX_ORDER: u32 = 40;

fn rational(r: &Rational) -> Value {
    json!(CanonicalRational::from(r))
}

fn check_order(order: u32) -> Result<(), String> {
    if order == 0 || order > MAX_ORDER {
        return Err(format!(
            "order must be between 1 and {MAX_ORDER}, got {order}"
        ));
    }
    Ok(())
}

/// Series as `[{"exp": "-1/8", "coeff": "1"}, ...]` plus its window.
fn series_view(s: &vwq_core::FracExpSeries) -> Value {
    let terms: Vec<Value> = s
        .terms()
        .map(|(e, c)| json!({"exp": e.to_string(), "coeff": c.to_string()}))
        .collect();
    json!({"terms": terms, "truncation": s.truncation().to_string(), "raw": to_json_value(s)})
}

pub fn monopole_json(genus: u32, gerbe: u32, order: u32) -> Result<String, String> {
    check_order(order)?;
    let cm = CurveModel::new(genus, gerbe).map_err(|e| e.to_string())?;
    let c = compare_monopole(&cm, order).map_err(|e| e.to_string())?;
    Ok(json!({
        "computed": series_view(&c.computed),
        "closed_form": series_view(&c.closed_form),
        "identical": c.identical,
        "ratio": c.ratio.as_ref().map(rational),
    })
    .to_string())
}

pub fn partition_json(surface: &str, c1: i64, lambda: u8, order: u32) -> Result<String, String> {
    check_order(order)?;
    let surface: Surface = surface
        .parse()
        .map_err(|e: vwq_core::partition::PartitionError| e.to_string())?;
    let p = match surface {
        Surface::P2 => z_vb_p2(c1, order),
        Surface::P122 => z_vb_p122(c1, order),
        Surface::P222 => z_vb_p222(c1, lambda, order),
    }
    .map_err(|e| e.to_string())?;
    let mut v = series_view(&p.series);
    v["floor"] = json!(p.floor.to_string());
    Ok(v.to_string())
}

pub fn transform_json(re: f64, im: f64, check: &str, tol: f64) -> Result<String, String> {
    let tau = UpperHalfPoint::new(re, im).map_err(|e| e.to_string())?;
    let report = match check {
        "sduality" => check_sduality_p2(tau, tol),
        "s-matrix" => check_s_matrix(tau, tol),
        "t" => check_t_periodicity(tau, tol),
        "double-s" => check_double_s(tau, tol),
        other => return Err(format!("unknown check {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Monopole series next to its closed form.
#[wasm_bindgen]
pub fn monopole(genus: u32, gerbe: u32, order: u32) -> Result<String, JsError> {
    js(monopole_json(genus, gerbe, order))
}

/// Vector-bundle partition function of `p2`, `p122` or `p222`.
#[wasm_bindgen]
pub fn partition(surface: &str, c1: i64, lambda: u8, order: u32) -> Result<String, JsError> {
    js(partition_json(surface, c1, lambda, order))
}

/// One of the modular transformation checks at `tau = re + i im`.
#[wasm_bindgen]
pub fn transform(re: f64, im: f64, check: &str, tol: f64) -> Result<String, JsError> {
    js(transform_json(re, im, check, tol))
}
