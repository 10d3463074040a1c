//! Combinatorial auction winner determination.
//!
//! Items carry uniform base values. Each bid requests a uniform random
//! bundle of distinct items and offers the bundle's total base value
//! scaled by a uniform factor in [0.8, 1.5], rounded up to at least 1.
//! Binary variables accept bids; every item appearing in some bundle
//! gets an `<= 1` no-double-sale row; the objective maximizes revenue.
//! Items no bid requests get no row.

use std::collections::BTreeMap;

use super::{ClassSchema, GenError, ParamSpec};
use crate::instance::{CsrMatrix, MilpInstance, ObjSense, RowSense, VarType};
use crate::rng::Rng;

pub fn schema() -> ClassSchema {
    ClassSchema {
        class_id: "CA",
        full_name: "Combinatorial Auction",
        params: vec![
            ParamSpec { name: "n_items", default: 150.0, min: 2.0, max: 1e5, integer: true, size_param: true },
            ParamSpec { name: "n_bids", default: 400.0, min: 1.0, max: 1e6, integer: true, size_param: true },
            ParamSpec { name: "min_bundle", default: 2.0, min: 1.0, max: 1e4, integer: true, size_param: false },
            ParamSpec { name: "max_bundle", default: 8.0, min: 1.0, max: 1e4, integer: true, size_param: false },
        ],
    }
}

pub fn generate(params: &BTreeMap<String, f64>, rng: &mut Rng) -> Result<MilpInstance, GenError> {
    let n_items = params["n_items"] as usize;
    let n_bids = params["n_bids"] as usize;
    let min_bundle = (params["min_bundle"] as usize).min(n_items);
    let max_bundle = (params["max_bundle"] as usize).min(n_items);
    if min_bundle > max_bundle {
        return Err(GenError::InvalidParams(
            "min_bundle exceeds max_bundle".into(),
        ));
    }

    let values: Vec<f64> = (0..n_items).map(|_| (rng.below(100) + 1) as f64).collect();
    let mut prices = Vec::with_capacity(n_bids);
    let mut bundles: Vec<Vec<usize>> = Vec::with_capacity(n_bids);
    for _ in 0..n_bids {
        let size = rng.int_range(min_bundle as i64, max_bundle as i64) as usize;
        let bundle = rng.choice_without_replacement(n_items, size);
        let base: f64 = bundle.iter().map(|&i| values[i]).sum();
        let price = (base * rng.uniform(0.8, 1.5)).ceil().max(1.0);
        prices.push(price);
        bundles.push(bundle);
    }

    // rows only for items some bundle requests
    let mut item_row = vec![usize::MAX; n_items];
    let mut m = 0usize;
    for bundle in &bundles {
        for &i in bundle {
            if item_row[i] == usize::MAX {
                item_row[i] = m;
                m += 1;
            }
        }
    }
    if m == 0 {
        return Err(GenError::InvalidParams("no item is requested by any bid".into()));
    }

    let mut triplets = Vec::new();
    for (bid, bundle) in bundles.iter().enumerate() {
        for &i in bundle {
            triplets.push((item_row[i], bid, 1.0));
        }
    }

    Ok(MilpInstance {
        name: String::new(),
        objective_sense: ObjSense::Maximize,
        c: prices,
        rows: CsrMatrix::from_triplets(m, n_bids, triplets),
        senses: vec![RowSense::Le; m],
        b: vec![1.0; m],
        l: vec![0.0; n_bids],
        u: vec![1.0; n_bids],
        integrality: vec![VarType::Binary; n_bids],
    })
}
