//! Browser bindings. Each exported function returns a JSON string; the
//! logic lives in plain functions so it can be tested natively.

use serde::Serialize;
use spos_core::{
    closed_form_s, delta_k_positive, make_space, positive_roots, ClosedFormMode, FamilyTag,
    LieType, ParamKind, ParamRange, Params, SValueReport,
};
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct SpaceView {
    label: String,
    ambient: String,
    report: SValueReport,
    s_table: usize,
    s_corrected: usize,
    delta_sets: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct RootsView {
    lie_type: String,
    count: usize,
    highest_root: Option<Vec<i32>>,
    by_height: Vec<Vec<Vec<i32>>>,
}

#[derive(Serialize)]
struct SweepPoint {
    params: String,
    rank: usize,
    dimension: usize,
    s: usize,
    s_table: usize,
    s_corrected: usize,
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// Zero means "not given" for the numeric parameters.
fn params_for(family: FamilyTag, n: u32, p: u32, q: u32) -> Result<Params, String> {
    match family.param_kind() {
        ParamKind::Fixed => Ok(Params::none()),
        ParamKind::N if n > 0 => Ok(Params::n(n)),
        ParamKind::N => Err(format!("{family} needs n")),
        ParamKind::PQ if p > 0 && q > 0 => Ok(Params::pq(p, q)),
        ParamKind::PQ => Err(format!("{family} needs p and q")),
    }
}

pub fn space_report_json(family: &str, n: u32, p: u32, q: u32) -> Result<String, String> {
    let family: FamilyTag = family
        .parse()
        .map_err(|e: spos_core::Error| e.to_string())?;
    let space = make_space(family, params_for(family, n, p, q)?).map_err(|e| e.to_string())?;
    let delta_sets = (1..=space.r())
        .map(|k| {
            delta_k_positive(&space, k)
                .map(|roots| roots.iter().map(ToString::to_string).collect())
                .map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    to_json(&SpaceView {
        label: space.label().to_string(),
        ambient: space.ambient().to_string(),
        report: SValueReport::compute(&space),
        s_table: closed_form_s(&space, ClosedFormMode::Table),
        s_corrected: closed_form_s(&space, ClosedFormMode::Corrected),
        delta_sets,
    })
}

pub fn root_system_json(lie_type: &str) -> Result<String, String> {
    let t: LieType = lie_type
        .parse()
        .map_err(|e: spos_core::Error| e.to_string())?;
    let system = positive_roots(t);
    let top = system.positive_roots().last().map_or(0, |r| r.height()) as usize;
    let mut by_height = vec![Vec::new(); top];
    for r in system.positive_roots() {
        by_height[r.height() as usize - 1].push(r.coeffs().to_vec());
    }
    to_json(&RootsView {
        lie_type: t.to_string(),
        count: system.len(),
        highest_root: system.highest_root().ok().map(|r| r.coeffs().to_vec()),
        by_height,
    })
}

/// Enumerated versus closed-form `s` over a parameter range. For `p,q`
/// families every pair `p ≤ q` in the range is included.
pub fn family_sweep_json(family: &str, lo: u32, hi: u32) -> Result<String, String> {
    const MAX_HI: u32 = 16;
    let family: FamilyTag = family
        .parse()
        .map_err(|e: spos_core::Error| e.to_string())?;
    if lo > hi || hi > MAX_HI {
        return Err(format!("range must satisfy lo ≤ hi ≤ {MAX_HI}"));
    }
    let range = match family.param_kind() {
        ParamKind::Fixed => ParamRange::Fixed,
        ParamKind::N => ParamRange::N(lo..=hi),
        ParamKind::PQ => ParamRange::PQ(lo..=hi, lo..=hi),
    };
    let points = range
        .params()
        .into_iter()
        .filter_map(|params| make_space(family, params).ok())
        .map(|space| {
            let rep = SValueReport::compute(&space);
            SweepPoint {
                params: space.params().to_string(),
                rank: space.r(),
                dimension: space.dimension(),
                s: rep.s,
                s_table: closed_form_s(&space, ClosedFormMode::Table),
                s_corrected: closed_form_s(&space, ClosedFormMode::Corrected),
            }
        })
        .collect::<Vec<_>>();
    if points.is_empty() {
        return Err(format!("no valid {family} instances in {lo}..{hi}"));
    }
    to_json(&points)
}

#[wasm_bindgen]
pub fn space_report(family: &str, n: u32, p: u32, q: u32) -> Result<String, JsValue> {
    space_report_json(family, n, p, q).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn root_system(lie_type: &str) -> Result<String, JsValue> {
    root_system_json(lie_type).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn family_sweep(family: &str, lo: u32, hi: u32) -> Result<String, JsValue> {
    family_sweep_json(family, lo, hi).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn report_for_exceptional_space() {
        let v = parse(space_report_json("EVI", 0, 0, 0));
        assert_eq!(v["report"]["s_k"], serde_json::json!([31, 17, 11, 22]));
        assert_eq!(v["report"]["s"], 31);
        assert_eq!(v["delta_sets"].as_array().unwrap().len(), 4);
        assert_eq!(v["delta_sets"][0].as_array().unwrap().len(), 27);
    }

    #[test]
    fn report_shows_exception() {
        let v = parse(space_report_json("diii", 6, 0, 0));
        assert_eq!(
            (v["report"]["s"].as_u64(), v["s_table"].as_u64()),
            (Some(15), Some(13))
        );
    }

    #[test]
    fn report_errors() {
        assert!(space_report_json("AIII", 0, 2, 0).is_err());
        assert!(space_report_json("DIII", 2, 0, 0)
            .unwrap_err()
            .contains("n ≥ 3"));
        assert!(space_report_json("nope", 1, 0, 0).is_err());
    }

    #[test]
    fn roots_grouped_by_height() {
        let v = parse(root_system_json("G2"));
        assert_eq!(v["count"], 6);
        assert_eq!(v["highest_root"], serde_json::json!([3, 2]));
        let sizes: Vec<usize> = v["by_height"]
            .as_array()
            .unwrap()
            .iter()
            .map(|h| h.as_array().unwrap().len())
            .collect();
        assert_eq!(sizes, vec![2, 1, 1, 1, 1]);
        assert_eq!(parse(root_system_json("D2"))["highest_root"], Value::Null);
        assert!(root_system_json("Q7").is_err());
    }

    #[test]
    fn sweep_diii() {
        let v = parse(family_sweep_json("DIII", 3, 10));
        let pts = v.as_array().unwrap();
        assert_eq!(pts.len(), 8);
        let off: Vec<&str> = pts
            .iter()
            .filter(|p| p["s"] != p["s_table"])
            .map(|p| p["params"].as_str().unwrap())
            .collect();
        assert_eq!(off, vec!["n=4", "n=6"]);
    }

    #[test]
    fn sweep_skips_invalid_pairs_and_bounds_range() {
        let v = parse(family_sweep_json("BDI", 1, 3));
        assert!(v
            .as_array()
            .unwrap()
            .iter()
            .all(|p| p["params"] != "p=1 q=2"));
        assert!(family_sweep_json("AI", 5, 2).is_err());
        assert!(family_sweep_json("AI", 2, 40).is_err());
        assert!(family_sweep_json("DIII", 1, 2).is_err());
    }
}
