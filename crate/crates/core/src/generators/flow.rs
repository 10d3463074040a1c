//! Fixed-charge network flow on a random DAG.
//!
//! Nodes are topologically ordered 0..N-1. Arcs always include the
//! chain `i -> i+1` (capacities at least `demand`, so the instance is
//! feasible by construction) plus `extra_arcs` distinct forward arcs.
//! One unit-commodity flow of `demand` goes from node 0 to node N-1.
//! Per arc: continuous flow in [0, cap] and a binary activation with
//! `flow - cap * y <= 0`; objective minimizes flow plus fixed costs.
//!
//! Variable order: all flow variables first, then all activations.

use std::collections::BTreeMap;

use super::{ClassSchema, GenError, ParamSpec};
use crate::instance::{CsrMatrix, MilpInstance, ObjSense, RowSense, VarType};
use crate::rng::Rng;

pub fn schema() -> ClassSchema {
    ClassSchema {
        class_id: "FCNF",
        full_name: "Fixed-Charge Network Flow",
        params: vec![
            ParamSpec { name: "n_nodes", default: 30.0, min: 3.0, max: 1e4, integer: true, size_param: true },
            ParamSpec { name: "extra_arcs", default: 60.0, min: 0.0, max: 1e5, integer: true, size_param: true },
            ParamSpec { name: "demand", default: 50.0, min: 1.0, max: 1e6, integer: true, size_param: false },
        ],
    }
}

pub fn generate(params: &BTreeMap<String, f64>, rng: &mut Rng) -> Result<MilpInstance, GenError> {
    let n_nodes = params["n_nodes"] as usize;
    let extra = params["extra_arcs"] as usize;
    let demand = params["demand"];

    let mut arcs: Vec<(usize, usize)> = (0..n_nodes - 1).map(|i| (i, i + 1)).collect();
    let mut present: std::collections::HashSet<(usize, usize)> = arcs.iter().copied().collect();
    let mut attempts = 0usize;
    while arcs.len() < n_nodes - 1 + extra && attempts < 20 * (extra + 1) {
        attempts += 1;
        let i = rng.below(n_nodes as u64 - 1) as usize;
        let j = i + 1 + rng.below((n_nodes - i - 1) as u64) as usize;
        if present.insert((i, j)) {
            arcs.push((i, j));
        }
    }

    let a = arcs.len();
    let cap: Vec<f64> = arcs
        .iter()
        .map(|&(i, j)| {
            if j == i + 1 {
                rng.int_range(demand as i64, 2 * demand as i64) as f64
            } else {
                rng.int_range((demand / 4.0).floor() as i64 + 1, 2 * demand as i64) as f64
            }
        })
        .collect();
    let flow_cost: Vec<f64> = (0..a).map(|_| rng.int_range(1, 20) as f64).collect();
    let fixed_cost: Vec<f64> = (0..a).map(|_| rng.int_range(50, 250) as f64).collect();

    let n = 2 * a;
    let mut c = vec![0.0; n];
    let mut l = vec![0.0; n];
    let mut u = vec![0.0; n];
    let mut integrality = vec![VarType::Continuous; n];
    for (k, _) in arcs.iter().enumerate() {
        c[k] = flow_cost[k];
        u[k] = cap[k];
        c[a + k] = fixed_cost[k];
        l[a + k] = 0.0;
        u[a + k] = 1.0;
        integrality[a + k] = VarType::Binary;
    }

    // conservation: inflow - outflow = b_v  (source -demand, sink +demand)
    let mut triplets = Vec::new();
    for (k, &(i, j)) in arcs.iter().enumerate() {
        triplets.push((j, k, 1.0));
        triplets.push((i, k, -1.0));
    }
    for k in 0..a {
        triplets.push((n_nodes + k, k, 1.0));
        triplets.push((n_nodes + k, a + k, -cap[k]));
    }
    let m = n_nodes + a;
    let mut senses = vec![RowSense::Eq; n_nodes];
    senses.extend(std::iter::repeat(RowSense::Le).take(a));
    let mut b = vec![0.0; n_nodes];
    b[0] = -demand;
    b[n_nodes - 1] = demand;
    b.extend(std::iter::repeat(0.0).take(a));

    Ok(MilpInstance {
        name: String::new(),
        objective_sense: ObjSense::Minimize,
        c,
        rows: CsrMatrix::from_triplets(m, n, triplets),
        senses,
        b,
        l,
        u,
        integrality,
    })
}
