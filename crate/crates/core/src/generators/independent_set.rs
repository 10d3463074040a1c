//! Maximum-weight independent set on an Erdos-Renyi graph G(n, p).
//!
//! One binary variable per node with a uniform integer weight in
//! `[1, max_weight]`; each sampled edge contributes the constraint
//! `x_u + x_v <= 1`; the objective maximizes total selected weight.

use std::collections::BTreeMap;

use super::{ClassSchema, GenError, ParamSpec};
use crate::instance::{CsrMatrix, MilpInstance, ObjSense, RowSense, VarType};
use crate::rng::Rng;

pub fn schema() -> ClassSchema {
    ClassSchema {
        class_id: "IS",
        full_name: "Maximum Independent Set",
        params: vec![
            ParamSpec { name: "n_nodes", default: 300.0, min: 2.0, max: 1e5, integer: true, size_param: true },
            ParamSpec { name: "edge_prob", default: 0.03, min: 1e-6, max: 1.0, integer: false, size_param: false },
            ParamSpec { name: "max_weight", default: 100.0, min: 1.0, max: 1e6, integer: true, size_param: false },
        ],
    }
}

pub fn generate(params: &BTreeMap<String, f64>, rng: &mut Rng) -> Result<MilpInstance, GenError> {
    let n = params["n_nodes"] as usize;
    let p = params["edge_prob"];
    let max_weight = params["max_weight"] as u64;

    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.next_f64() < p {
                edges.push((i, j));
            }
        }
    }
    if edges.is_empty() {
        return Err(GenError::InvalidParams(
            "sampled graph has no edges; raise edge_prob or n_nodes".into(),
        ));
    }

    let c: Vec<f64> = (0..n).map(|_| (rng.below(max_weight) + 1) as f64).collect();
    let mut triplets = Vec::with_capacity(2 * edges.len());
    for (row, &(u, v)) in edges.iter().enumerate() {
        triplets.push((row, u, 1.0));
        triplets.push((row, v, 1.0));
    }
    let m = edges.len();
    Ok(MilpInstance {
        name: String::new(),
        objective_sense: ObjSense::Maximize,
        c,
        rows: CsrMatrix::from_triplets(m, n, triplets),
        senses: vec![RowSense::Le; m],
        b: vec![1.0; m],
        l: vec![0.0; n],
        u: vec![1.0; n],
        integrality: vec![VarType::Binary; n],
    })
}
