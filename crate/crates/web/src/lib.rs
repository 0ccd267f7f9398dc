//! WebAssembly bindings for the browser demo in `www/`. Each export takes and
//! returns JSON text; the `*_json` functions hold the logic so they can be
//! tested natively.

use serde_json::{json, Value};
use topolab::compactness::{is_compact_subset, way_below, way_below_closed_form};
use topolab::enumerate::EXHAUSTIVE_LIMIT;
use topolab::json::{parse_space, pretty};
use topolab::maps::{closed_map_witness, is_proper};
use topolab::preorder::specialization_preorder;
use topolab::{ContinuousMap, Error, FiniteSpace, PointSet};
use wasm_bindgen::prelude::*;

/// Spaces larger than this are refused, to keep the page responsive.
pub const MAX_DEMO_POINTS: usize = 6;

/// Bound on the test spaces `Z` of the properness criteria.
pub const PROPER_Z_BOUND: usize = 2;

fn load(text: &str) -> Result<FiniteSpace, String> {
    let x = parse_space(text).map_err(|e| e.to_string())?;
    if x.n() > MAX_DEMO_POINTS {
        return Err(format!("the demo handles at most {MAX_DEMO_POINTS} points"));
    }
    Ok(x)
}

fn set(s: PointSet) -> Value {
    json!(s.to_vec())
}

/// Height of each point in the specialization order: the length of the
/// longest strictly increasing chain ending at it.
fn levels(x: &FiniteSpace) -> Vec<usize> {
    let p = specialization_preorder(x);
    let n = x.n();
    let strict = |a: usize, b: usize| p.leq(a, b) && !p.leq(b, a);
    let mut level = vec![0; n];
    for _ in 0..n {
        for b in 0..n {
            for a in 0..n {
                if strict(a, b) {
                    level[b] = level[b].max(level[a] + 1);
                }
            }
        }
    }
    level
}

pub fn explore_json(space: &str) -> Result<String, String> {
    let x = load(space)?;
    let (covers, equivalent) = specialization_preorder(&x).hasse_edges();
    let class = x.diagonal_class();
    let t0 = (0..x.n()).all(|a| (0..a).all(|b| !(x.leq(a, b) && x.leq(b, a))));
    let compact: Vec<Value> = PointSet::all_subsets(x.n())
        .filter(|&q| is_compact_subset(&x, q).unwrap_or(false))
        .map(set)
        .collect();
    let report = json!({
        "points": x.n(),
        "labels": (0..x.n()).map(|i| x.labels().map_or(i.to_string(), |l| l[i].clone())).collect::<Vec<_>>(),
        "opens": x.opens().iter().map(|&u| set(u)).collect::<Vec<_>>(),
        "neighbourhoods": x.neighbourhoods().iter().map(|&u| set(u)).collect::<Vec<_>>(),
        "levels": levels(&x),
        "covers": covers,
        "equivalent": equivalent,
        "t0": t0,
        "hausdorff": class.hausdorff,
        "discrete": class.discrete,
        "compact_subsets": compact,
    });
    Ok(pretty(&report))
}

pub fn way_below_json(space: &str) -> Result<String, String> {
    let x = load(space)?;
    let definitional = x.n() <= EXHAUSTIVE_LIMIT;
    let subsets: Vec<PointSet> = PointSet::all_subsets(x.n()).collect();
    let mut matrix = Vec::with_capacity(subsets.len());
    for &s in &subsets {
        let row = subsets
            .iter()
            .map(|&t| {
                if definitional {
                    way_below(&x, s, t)
                } else {
                    way_below_closed_form(&x, s, t)
                }
            })
            .collect::<Result<Vec<bool>, _>>()
            .map_err(|e| e.to_string())?;
        matrix.push(row);
    }
    let report = json!({
        "method": if definitional { "open covers" } else { "least open neighbourhood" },
        "subsets": subsets.iter().map(|&s| set(s)).collect::<Vec<_>>(),
        "matrix": matrix,
    });
    Ok(pretty(&report))
}

pub fn check_map_json(dom: &str, cod: &str, graph: &str) -> Result<String, String> {
    let (x, y) = (load(dom)?, load(cod)?);
    let graph: Vec<usize> = serde_json::from_str(graph).map_err(|e| format!("graph: {e}"))?;
    let f = match ContinuousMap::new(&x, &y, graph) {
        Ok(f) => f,
        Err(Error::NotContinuous { witness }) => {
            return Ok(pretty(
                &json!({"continuous": false, "open_with_non_open_preimage": set(witness)}),
            ));
        }
        Err(e) => return Err(e.to_string()),
    };
    let witness = closed_map_witness(&f);
    let v = is_proper(&f, PROPER_Z_BOUND).map_err(|e| e.to_string())?;
    let report = json!({
        "continuous": true,
        "closed": witness.is_none(),
        "closed_set_with_non_closed_image": witness.map(set),
        "fibers": f.fibers().into_iter().map(set).collect::<Vec<_>>(),
        "proper": {
            "z_bound": PROPER_Z_BOUND,
            "closed_products": v.closed_products,
            "open_quantified": v.open_quantified,
            "compact_preimages": v.compact_preimages,
            "compact_fibers": v.compact_fibers,
            "indexed_fibers": v.indexed_fibers,
            "agree": v.agree(),
        },
    });
    Ok(pretty(&report))
}

/// Opens, Hasse diagram and separation properties of a space.
#[wasm_bindgen]
pub fn explore(space: &str) -> Result<String, JsValue> {
    explore_json(space).map_err(|e| JsValue::from_str(&e))
}

/// Way-below relation between all pairs of subsets.
#[wasm_bindgen(js_name = wayBelow)]
pub fn way_below_matrix(space: &str) -> Result<String, JsValue> {
    way_below_json(space).map_err(|e| JsValue::from_str(&e))
}

/// Continuity, closedness and properness of a map given by its graph.
#[wasm_bindgen(js_name = checkMap)]
pub fn check_map(dom: &str, cod: &str, graph: &str) -> Result<String, JsValue> {
    check_map_json(dom, cod, graph).map_err(|e| JsValue::from_str(&e))
}
