//! Multiple knapsack and generalized assignment.
//!
//! `KS`: items have uniform integer weights and profits in [10, 100];
//! variable `x[i*K + k]` packs item `i` into knapsack `k`. Each item may
//! be packed at most once; each knapsack's total weight is capped at
//! `capacity_ratio * total_weight / n_knapsacks`; profit is maximized.
//!
//! `GA`: every task must go to exactly one agent (equality rows);
//! task-agent weights in [5, 25] and costs in [1, 50] are uniform
//! integers; each agent's capacity is `capacity_ratio` times its average
//! load under a uniform random assignment; cost is minimized.

use std::collections::BTreeMap;

use super::{ClassSchema, GenError, ParamSpec};
use crate::instance::{CsrMatrix, MilpInstance, ObjSense, RowSense, VarType};
use crate::rng::Rng;

pub fn schema() -> ClassSchema {
    ClassSchema {
        class_id: "KS",
        full_name: "Multiple Knapsack",
        params: vec![
            ParamSpec { name: "n_items", default: 150.0, min: 2.0, max: 1e5, integer: true, size_param: true },
            ParamSpec { name: "n_knapsacks", default: 5.0, min: 1.0, max: 1e3, integer: true, size_param: true },
            ParamSpec { name: "capacity_ratio", default: 0.5, min: 0.05, max: 1.0, integer: false, size_param: false },
        ],
    }
}

pub fn generate(params: &BTreeMap<String, f64>, rng: &mut Rng) -> Result<MilpInstance, GenError> {
    let n_items = params["n_items"] as usize;
    let k = params["n_knapsacks"] as usize;
    let ratio = params["capacity_ratio"];

    let weights: Vec<f64> = (0..n_items).map(|_| rng.int_range(10, 100) as f64).collect();
    let profits: Vec<f64> = (0..n_items).map(|_| rng.int_range(10, 100) as f64).collect();
    let total_weight: f64 = weights.iter().sum();
    let capacity = ((ratio * total_weight / k as f64).floor()).max(1.0);

    let n = n_items * k;
    let mut c = vec![0.0; n];
    let mut triplets = Vec::with_capacity(2 * n);
    for i in 0..n_items {
        for kk in 0..k {
            let j = i * k + kk;
            c[j] = profits[i];
            triplets.push((i, j, 1.0));
            triplets.push((n_items + kk, j, weights[i]));
        }
    }
    let m = n_items + k;
    let mut b = vec![1.0; n_items];
    b.extend(std::iter::repeat(capacity).take(k));
    let mut senses = vec![RowSense::Le; n_items];
    senses.extend(std::iter::repeat(RowSense::Le).take(k));

    Ok(MilpInstance {
        name: String::new(),
        objective_sense: ObjSense::Maximize,
        c,
        rows: CsrMatrix::from_triplets(m, n, triplets),
        senses,
        b,
        l: vec![0.0; n],
        u: vec![1.0; n],
        integrality: vec![VarType::Binary; n],
    })
}

pub fn assignment_schema() -> ClassSchema {
    ClassSchema {
        class_id: "GA",
        full_name: "Generalized Assignment",
        params: vec![
            ParamSpec { name: "n_tasks", default: 120.0, min: 2.0, max: 1e5, integer: true, size_param: true },
            ParamSpec { name: "n_agents", default: 8.0, min: 1.0, max: 1e3, integer: true, size_param: true },
            ParamSpec { name: "capacity_ratio", default: 1.6, min: 1.05, max: 10.0, integer: false, size_param: false },
        ],
    }
}

pub fn generate_assignment(
    params: &BTreeMap<String, f64>,
    rng: &mut Rng,
) -> Result<MilpInstance, GenError> {
    let n_tasks = params["n_tasks"] as usize;
    let n_agents = params["n_agents"] as usize;
    let ratio = params["capacity_ratio"];

    let mut w = vec![vec![0.0; n_agents]; n_tasks];
    let mut cost = vec![vec![0.0; n_agents]; n_tasks];
    for i in 0..n_tasks {
        for j in 0..n_agents {
            w[i][j] = rng.int_range(5, 25) as f64;
            cost[i][j] = rng.int_range(1, 50) as f64;
        }
    }
    let mean_load: f64 =
        w.iter().flatten().sum::<f64>() / (n_agents * n_agents) as f64;
    let capacity = (ratio * mean_load).ceil().max(1.0);

    let n = n_tasks * n_agents;
    let mut c = vec![0.0; n];
    let mut triplets = Vec::with_capacity(2 * n);
    for i in 0..n_tasks {
        for j in 0..n_agents {
            let v = i * n_agents + j;
            c[v] = cost[i][j];
            triplets.push((i, v, 1.0));
            triplets.push((n_tasks + j, v, w[i][j]));
        }
    }
    let m = n_tasks + n_agents;
    let mut senses = vec![RowSense::Eq; n_tasks];
    senses.extend(std::iter::repeat(RowSense::Le).take(n_agents));
    let mut b = vec![1.0; n_tasks];
    b.extend(std::iter::repeat(capacity).take(n_agents));

    Ok(MilpInstance {
        name: String::new(),
        objective_sense: ObjSense::Minimize,
        c,
        rows: CsrMatrix::from_triplets(m, n, triplets),
        senses,
        b,
        l: vec![0.0; n],
        u: vec![1.0; n],
        integrality: vec![VarType::Binary; n],
    })
}
