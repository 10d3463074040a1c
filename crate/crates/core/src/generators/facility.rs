//! Capacitated facility location.
//!
//! Binary `y_j` opens facility `j`; continuous `x[i][j]` in [0, 1] is
//! the fraction of customer `i` served from `j`. Every customer must be
//! fully served (equality rows); per-facility load `sum_i d_i x_ij`
//! may not exceed `cap_j y_j`. Capacities are rescaled so the total is
//! `capacity_ratio` times total demand, which keeps the all-open
//! assignment feasible. Objective: opening costs plus assignment costs.
//!
//! Variable order: the `n_facilities` opening variables first, then the
//! assignment block in customer-major order.

use std::collections::BTreeMap;

use super::{ClassSchema, GenError, ParamSpec};
use crate::instance::{CsrMatrix, MilpInstance, ObjSense, RowSense, VarType};
use crate::rng::Rng;

pub fn schema() -> ClassSchema {
    ClassSchema {
        class_id: "CFL",
        full_name: "Capacitated Facility Location",
        params: vec![
            ParamSpec { name: "n_customers", default: 60.0, min: 2.0, max: 1e4, integer: true, size_param: true },
            ParamSpec { name: "n_facilities", default: 12.0, min: 2.0, max: 1e3, integer: true, size_param: true },
            ParamSpec { name: "capacity_ratio", default: 2.0, min: 1.1, max: 10.0, integer: false, size_param: false },
        ],
    }
}

pub fn generate(params: &BTreeMap<String, f64>, rng: &mut Rng) -> Result<MilpInstance, GenError> {
    let n_cust = params["n_customers"] as usize;
    let n_fac = params["n_facilities"] as usize;
    let ratio = params["capacity_ratio"];

    let demand: Vec<f64> = (0..n_cust).map(|_| rng.int_range(5, 35) as f64).collect();
    let raw_cap: Vec<f64> = (0..n_fac).map(|_| rng.int_range(10, 160) as f64).collect();
    let open_cost: Vec<f64> = (0..n_fac).map(|_| rng.int_range(100, 1100) as f64).collect();
    let total_demand: f64 = demand.iter().sum();
    let raw_total: f64 = raw_cap.iter().sum();
    let mut cap: Vec<f64> = raw_cap
        .iter()
        .map(|v| (v * ratio * total_demand / raw_total).round().max(1.0))
        .collect();
    let shortfall = total_demand - cap.iter().sum::<f64>();
    if shortfall > 0.0 {
        cap[0] += shortfall.ceil();
    }

    let n = n_fac + n_cust * n_fac;
    let mut c = vec![0.0; n];
    let mut l = vec![0.0; n];
    let mut u = vec![1.0; n];
    let mut integrality = vec![VarType::Binary; n];
    for j in 0..n_fac {
        c[j] = open_cost[j];
    }
    let mut triplets = Vec::new();
    for i in 0..n_cust {
        for j in 0..n_fac {
            let v = n_fac + i * n_fac + j;
            c[v] = rng.int_range(1, 100) as f64;
            integrality[v] = VarType::Continuous;
            l[v] = 0.0;
            u[v] = 1.0;
            triplets.push((i, v, 1.0));
            triplets.push((n_cust + j, v, demand[i]));
        }
    }
    for j in 0..n_fac {
        triplets.push((n_cust + j, j, -cap[j]));
    }

    let m = n_cust + n_fac;
    let mut senses = vec![RowSense::Eq; n_cust];
    senses.extend(std::iter::repeat(RowSense::Le).take(n_fac));
    let mut b = vec![1.0; n_cust];
    b.extend(std::iter::repeat(0.0).take(n_fac));

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
