//! Traveling salesman, Miller-Tucker-Zemlin formulation.
//!
//! Cities are uniform points in a square; distances are rounded
//! Euclidean lengths (at least 1). Binary `x[i -> j]` selects directed
//! tour arcs, with one outgoing and one incoming arc per city. City 0
//! is the depot; cities 1..n carry continuous order variables
//! `t_i in [1, n-1]` with the subtour-elimination rows
//! `t_i - t_j + (n-1) x[i -> j] <= n-2` for distinct i, j >= 1.
//!
//! Variable order: the `n * (n-1)` arc variables row-major (skipping
//! the diagonal), then the `n - 1` order variables.

use std::collections::BTreeMap;

use super::{ClassSchema, GenError, ParamSpec};
use crate::instance::{CsrMatrix, MilpInstance, ObjSense, RowSense, VarType};
use crate::rng::Rng;

pub fn schema() -> ClassSchema {
    ClassSchema {
        class_id: "TSP",
        full_name: "Traveling Salesman Problem",
        params: vec![
            ParamSpec { name: "n_cities", default: 15.0, min: 3.0, max: 300.0, integer: true, size_param: true },
            ParamSpec { name: "coord_range", default: 100.0, min: 1.0, max: 1e6, integer: false, size_param: false },
        ],
    }
}

fn arc_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i != j);
    i * (n - 1) + if j < i { j } else { j - 1 }
}

pub fn generate(params: &BTreeMap<String, f64>, rng: &mut Rng) -> Result<MilpInstance, GenError> {
    let n = params["n_cities"] as usize;
    let range = params["coord_range"];

    let coords: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.uniform(0.0, range), rng.uniform(0.0, range)))
        .collect();
    let dist = |i: usize, j: usize| -> f64 {
        let dx = coords[i].0 - coords[j].0;
        let dy = coords[i].1 - coords[j].1;
        (dx.hypot(dy)).round().max(1.0)
    };

    let n_arcs = n * (n - 1);
    let n_vars = n_arcs + (n - 1);
    let mut c = vec![0.0; n_vars];
    let mut l = vec![0.0; n_vars];
    let mut u = vec![1.0; n_vars];
    let mut integrality = vec![VarType::Binary; n_vars];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                c[arc_index(i, j, n)] = dist(i, j);
            }
        }
    }
    for i in 1..n {
        let v = n_arcs + i - 1;
        integrality[v] = VarType::Continuous;
        l[v] = 1.0;
        u[v] = (n - 1) as f64;
    }

    let mut triplets = Vec::new();
    let mut senses = Vec::new();
    let mut b = Vec::new();
    // out-degree and in-degree rows
    for i in 0..n {
        for j in 0..n {
            if i != j {
                triplets.push((i, arc_index(i, j, n), 1.0));
            }
        }
        senses.push(RowSense::Eq);
        b.push(1.0);
    }
    for j in 0..n {
        for i in 0..n {
            if i != j {
                triplets.push((n + j, arc_index(i, j, n), 1.0));
            }
        }
        senses.push(RowSense::Eq);
        b.push(1.0);
    }
    // MTZ rows
    let mut row = 2 * n;
    for i in 1..n {
        for j in 1..n {
            if i == j {
                continue;
            }
            triplets.push((row, n_arcs + i - 1, 1.0));
            triplets.push((row, n_arcs + j - 1, -1.0));
            triplets.push((row, arc_index(i, j, n), (n - 1) as f64));
            senses.push(RowSense::Le);
            b.push((n - 2) as f64);
            row += 1;
        }
    }

    Ok(MilpInstance {
        name: String::new(),
        objective_sense: ObjSense::Minimize,
        c,
        rows: CsrMatrix::from_triplets(row, n_vars, triplets),
        senses,
        b,
        l,
        u,
        integrality,
    })
}
