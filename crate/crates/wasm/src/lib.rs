//! Browser bindings. Every export returns a JSON string; the `*_json`
//! functions hold the logic so they can be tested off the browser.

use std::f64::consts::PI;

use lapco::enumerate::{enumerate_family_guarded, Restriction};
use lapco::families::{build_u, FamilySpec};
use lapco::graph::{classify, Graph};
use lapco::poset::{compare, minimal_elements, strict_indices};
use lapco::spectra::{laplacian_coefficients, lel, CoeffVector};
use lapco::verify::{hex, p_formula, predicted_set};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest order the page may enumerate; keeps the tab responsive.
pub const BROWSER_MAX_N: usize = 10;

#[derive(Serialize)]
pub struct Drawing {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub cycle: Vec<usize>,
    pub positions: Vec<(f64, f64)>,
    pub coefficients: Vec<String>,
    pub polynomial: String,
    pub lel: f64,
}

/// Places the cycle on a circle and each hanging tree in the angular wedge
/// of its cycle vertex, one ring per depth. Coordinates lie in [-1, 1].
pub fn layout(g: &Graph) -> Vec<(f64, f64)> {
    let n = g.order();
    let report = classify(g);
    let cycle = report.cycle_vertices;
    if cycle.is_empty() {
        return vec![(0.0, 0.0); n];
    }
    let mut on_cycle = vec![false; n];
    for &c in &cycle {
        on_cycle[c] = true;
    }
    let mut depth = vec![0usize; n];
    let mut children = vec![Vec::new(); n];
    let mut seen = on_cycle.clone();
    for &r in &cycle {
        let mut stack = vec![r];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    depth[y] = depth[x] + 1;
                    children[x].push(y);
                    stack.push(y);
                }
            }
        }
    }
    let max_depth = depth.iter().copied().max().unwrap_or(0);
    let ring = 0.35;
    let step = if max_depth == 0 {
        0.0
    } else {
        (1.0 - ring) / max_depth as f64
    };

    fn leaves_below(v: usize, children: &[Vec<usize>]) -> usize {
        if children[v].is_empty() {
            1
        } else {
            children[v].iter().map(|&c| leaves_below(c, children)).sum()
        }
    }
    fn place(v: usize, lo: f64, hi: f64, children: &[Vec<usize>], angle: &mut [f64]) {
        angle[v] = (lo + hi) / 2.0;
        let total = leaves_below(v, children) as f64;
        let mut start = lo;
        for &c in &children[v] {
            let width = (hi - lo) * leaves_below(c, children) as f64 / total;
            place(c, start, start + width, children, angle);
            start += width;
        }
    }

    let g_len = cycle.len() as f64;
    let mut angle = vec![0.0; n];
    for (i, &r) in cycle.iter().enumerate() {
        let centre = 2.0 * PI * i as f64 / g_len - PI / 2.0;
        let half = PI / g_len * 0.9;
        place(r, centre - half, centre + half, &children, &mut angle);
        angle[r] = centre;
    }
    (0..n)
        .map(|v| {
            let radius = ring + step * depth[v] as f64;
            (radius * angle[v].cos(), radius * angle[v].sin())
        })
        .collect()
}

pub fn drawing(g: &Graph) -> Drawing {
    let c = laplacian_coefficients(g);
    Drawing {
        n: g.order(),
        edges: g.edges().to_vec(),
        cycle: classify(g).cycle_vertices,
        positions: layout(g),
        coefficients: c.to_decimal_strings(),
        polynomial: c.polynomial_string(),
        lel: lel(g),
    }
}

fn to_json<T: Serialize>(t: &T) -> String {
    serde_json::to_string(t).expect("plain data serializes")
}

fn build(n: usize, l: usize, g: usize, p: usize) -> Result<Graph, String> {
    build_u(FamilySpec::new(n, l, g, p)).map_err(|e| e.to_string())
}

pub fn family_graph_json(n: usize, l: usize, g: usize, p: usize) -> Result<String, String> {
    Ok(to_json(&drawing(&build(n, l, g, p)?)))
}

#[derive(Serialize)]
struct Comparison {
    left: Drawing,
    right: Drawing,
    verdict: lapco::poset::PosetRel,
    left_below_at: Vec<usize>,
    left_above_at: Vec<usize>,
}

pub fn compare_members_json(
    n: usize,
    l: usize,
    g: usize,
    p: usize,
    q: usize,
) -> Result<String, String> {
    let (a, b) = (build(n, l, g, p)?, build(n, l, g, q)?);
    let (ca, cb): (CoeffVector, CoeffVector) =
        (laplacian_coefficients(&a), laplacian_coefficients(&b));
    let verdict = compare(&ca, &cb).map_err(|e| e.to_string())?;
    let (below, above) = strict_indices(&ca, &cb);
    Ok(to_json(&Comparison {
        left: drawing(&a),
        right: drawing(&b),
        verdict,
        left_below_at: below,
        left_above_at: above,
    }))
}

#[derive(Serialize)]
struct MinimalView {
    family_size: usize,
    p_formula: i64,
    predicted: Vec<String>,
    matches_prediction: bool,
    minimal: Vec<MinimalMember>,
}

#[derive(Serialize)]
struct MinimalMember {
    form: String,
    predicted: bool,
    drawing: Drawing,
}

fn restriction(name: &str) -> Result<Restriction, String> {
    match name {
        "full" => Ok(Restriction::Full),
        "one_attachment" => Ok(Restriction::OneAttachment),
        "two_attachments" => Ok(Restriction::TwoAttachments),
        other => Err(format!("unknown restriction {other:?}")),
    }
}

pub fn minimal_family_json(n: usize, l: usize, g: usize, which: &str) -> Result<String, String> {
    let r = restriction(which)?;
    let catalog = enumerate_family_guarded(n, Some(l), Some(g), r, BROWSER_MAX_N)
        .map_err(|e| e.to_string())?;
    if catalog.is_empty() {
        return Err("family is empty".into());
    }
    let predicted: Vec<String> = match predicted_set(n, l, g) {
        Ok((set, _)) => set.iter().map(|(_, f, _)| hex(f)).collect(),
        Err(_) => Vec::new(),
    };
    let minimal = minimal_elements(&catalog);
    let mut observed: Vec<String> = minimal.members.iter().map(|m| hex(&m.form)).collect();
    observed.sort();
    let mut expected = predicted.clone();
    expected.sort();
    Ok(to_json(&MinimalView {
        family_size: catalog.len(),
        p_formula: p_formula(n, l, g),
        matches_prediction: observed == expected,
        minimal: minimal
            .members
            .iter()
            .map(|m| MinimalMember {
                form: hex(&m.form),
                predicted: predicted.contains(&hex(&m.form)),
                drawing: drawing(&m.graph),
            })
            .collect(),
        predicted,
    }))
}

#[wasm_bindgen]
pub fn family_graph(n: usize, l: usize, g: usize, p: usize) -> Result<String, JsValue> {
    family_graph_json(n, l, g, p).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn compare_members(
    n: usize,
    l: usize,
    g: usize,
    p: usize,
    q: usize,
) -> Result<String, JsValue> {
    compare_members_json(n, l, g, p, q).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn minimal_family(n: usize, l: usize, g: usize, restriction: &str) -> Result<String, JsValue> {
    minimal_family_json(n, l, g, restriction).map_err(|e| JsValue::from_str(&e))
}
