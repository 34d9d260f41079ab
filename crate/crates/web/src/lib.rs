//! Browser bindings: series expansion, triangle removal with diagrams, identity checks.
//!
//! Each export returns a JSON string; errors surface as thrown strings on the JS side.
//! The plain functions are native Rust so they can be tested without a browser; the
//! exports take 32-bit integers so JS passes ordinary numbers rather than BigInts.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use qpartition_core::double_series::{r_series, DoubleSeriesParams};
use qpartition_core::identities::{self, VerificationReport};
use qpartition_core::partitions::{generating_function, remove_triangle, render_diagram, GapRule, Partition};

/// Orders above this make the page unresponsive; the CLI has no such cap.
pub const MAX_ORDER: i64 = 400;

#[derive(Serialize)]
pub struct Term {
    pub xpow: usize,
    pub qpow: i64,
    pub coeff: String,
}

#[derive(Serialize)]
pub struct Expansion {
    pub trunc: i64,
    pub terms: Vec<Term>,
}

#[derive(Serialize)]
pub struct TriangleMap {
    pub d: u64,
    pub source: Partition,
    pub image: Partition,
    pub source_diagram: String,
    pub image_diagram: String,
}

#[derive(Serialize)]
pub struct Listed {
    pub id: &'static str,
    pub citation: &'static str,
}

fn check_order(order: i64) -> Result<(), String> {
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(format!("order must be in 1..={MAX_ORDER}, got {order}"));
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// Nonzero coefficients of `f_family(x)` below `q^order`, up to `x^xdeg`.
pub fn expand_family(family: &str, order: i64, xdeg: usize) -> Result<Expansion, String> {
    check_order(order)?;
    let rule = GapRule::by_name(family).map_err(|e| e.to_string())?;
    let f = generating_function(&rule, order, xdeg);
    let terms = f
        .x_coeffs()
        .iter()
        .enumerate()
        .flat_map(|(xpow, c)| {
            (c.valuation()..c.trunc())
                .map(move |qpow| (qpow, c.coeff(qpow).expect("below trunc")))
                .filter(|(_, v)| *v != 0.into())
                .map(move |(qpow, v)| Term {
                    xpow,
                    qpow,
                    coeff: v.to_string(),
                })
        })
        .collect();
    Ok(Expansion { trunc: order, terms })
}

/// Nonzero coefficients of `R(s,t,l,u,v,w)` below `q^order`.
pub fn expand_r(params: &[i64], order: i64) -> Result<Expansion, String> {
    check_order(order)?;
    let [s, t, l, u, v, w] = params else {
        return Err(format!("R takes 6 parameters, got {}", params.len()));
    };
    let r = r_series(&DoubleSeriesParams::new(*s, *t, *l, *u, *v, *w), order).map_err(|e| e.to_string())?;
    let terms = (r.valuation()..r.trunc())
        .map(|qpow| (qpow, r.coeff(qpow).expect("below trunc")))
        .filter(|(_, v)| *v != 0.into())
        .map(|(qpow, v)| Term {
            xpow: 0,
            qpow,
            coeff: v.to_string(),
        })
        .collect();
    Ok(Expansion { trunc: order, terms })
}

/// Parts separated by `+`, `,` or whitespace.
pub fn parse_partition(text: &str) -> Result<Partition, String> {
    let parts = text
        .split(|c: char| c == '+' || c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|_| format!("bad part `{t}`")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

pub fn triangle_map(text: &str, d: u64) -> Result<TriangleMap, String> {
    let source = parse_partition(text)?;
    let image = remove_triangle(&source, d).map_err(|e| e.to_string())?;
    Ok(TriangleMap {
        d,
        source_diagram: render_diagram(&source, d),
        image_diagram: render_diagram(&image, d),
        source,
        image,
    })
}

/// Runs one registry check. Timing is left to the caller: the wasm target has no clock.
pub fn verify(id: &str, order: i64, xdeg: usize) -> Result<VerificationReport, String> {
    check_order(order)?;
    let entry = identities::find(id).map_err(|e| e.to_string())?;
    let outcome = entry.check(order, xdeg).map_err(|e| e.to_string())?;
    Ok(VerificationReport::new(entry, order, xdeg, outcome, 0))
}

#[wasm_bindgen]
pub fn expand_series(series: &str, params: &str, order: i32, xdeg: u32) -> Result<String, JsValue> {
    let (order, xdeg) = (i64::from(order), xdeg as usize);
    let out = if series == "R" {
        let params = params
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| format!("bad parameter `{t}`")))
            .collect::<Result<Vec<_>, _>>()?;
        expand_r(&params, order)
    } else {
        expand_family(series, order, xdeg)
    };
    Ok(to_json(&out?)?)
}

#[wasm_bindgen]
pub fn map_partition(parts: &str, d: u32) -> Result<String, JsValue> {
    Ok(to_json(&triangle_map(parts, u64::from(d))?)?)
}

#[wasm_bindgen]
pub fn verify_identity(id: &str, order: i32, xdeg: u32) -> Result<String, JsValue> {
    Ok(to_json(&verify(id, i64::from(order), xdeg as usize)?)?)
}

#[wasm_bindgen]
pub fn list_identities() -> String {
    let listed: Vec<Listed> = identities::registry()
        .iter()
        .map(|e| Listed {
            id: e.id,
            citation: e.citation,
        })
        .collect();
    to_json(&listed).expect("plain strings serialize")
}
