//! Set cover generator.
//!
//! Construction, in order:
//! 1. `nnzrs = floor(n_rows * n_cols * density)` column indices drawn
//!    uniformly; the first `2 * n_cols` slots are overwritten with each
//!    column repeated twice, so every column ends up with >= 2 rows.
//! 2. Per-column row counts are the multiplicities in that index vector.
//! 3. The first `n_rows` slots are overwritten with a permutation of the
//!    rows, so every row ends up in >= 1 column; columns straddling or
//!    beyond that prefix complete their row sets with distinct rows
//!    drawn from the remaining ones.
//! 4. Costs are uniform integers in `[1, max_coef]`; every row becomes a
//!    `>= 1` covering constraint over binary column-selection variables.
//!
//! The forcing steps permute slots without adding any, so the emitted
//! matrix has exactly `nnzrs` nonzeros.

use std::collections::BTreeMap;

use super::{ClassSchema, GenError, ParamSpec};
use crate::instance::{CsrMatrix, MilpInstance, ObjSense, RowSense, VarType};
use crate::rng::Rng;

pub fn schema() -> ClassSchema {
    ClassSchema {
        class_id: "SC",
        full_name: "Set Cover",
        params: vec![
            ParamSpec { name: "n_rows", default: 750.0, min: 3.0, max: 1e5, integer: true, size_param: true },
            ParamSpec { name: "n_cols", default: 1500.0, min: 2.0, max: 2e5, integer: true, size_param: true },
            ParamSpec { name: "density", default: 0.05, min: 1e-6, max: 1.0, integer: false, size_param: false },
            ParamSpec { name: "max_coef", default: 100.0, min: 1.0, max: 1e6, integer: true, size_param: false },
        ],
    }
}

pub fn generate(params: &BTreeMap<String, f64>, rng: &mut Rng) -> Result<MilpInstance, GenError> {
    let n_rows = params["n_rows"] as usize;
    let n_cols = params["n_cols"] as usize;
    let density = params["density"];
    let max_coef = params["max_coef"] as u64;

    let nnzrs = (n_rows as f64 * n_cols as f64 * density) as usize;
    if nnzrs < 2 * n_cols {
        return Err(GenError::InvalidParams(format!(
            "density {density} yields {nnzrs} nonzeros, fewer than the 2 per column required \
             (needs density * n_rows >= 2)"
        )));
    }
    if nnzrs < n_rows {
        return Err(GenError::InvalidParams(format!(
            "density {density} yields {nnzrs} nonzeros, fewer than one per row"
        )));
    }

    let mut indices: Vec<usize> = (0..nnzrs).map(|_| rng.below(n_cols as u64) as usize).collect();
    for j in 0..n_cols {
        indices[2 * j] = j;
        indices[2 * j + 1] = j;
    }
    let mut col_nrows = vec![0usize; n_cols];
    for &j in &indices {
        col_nrows[j] += 1;
    }

    let perm = rng.permutation(n_rows);
    indices[..n_rows].copy_from_slice(&perm);

    let mut i = 0usize;
    let mut indptr = Vec::with_capacity(n_cols + 1);
    indptr.push(0usize);
    for &cnt in &col_nrows {
        if cnt > n_rows {
            return Err(GenError::InvalidParams(format!(
                "a column drew {cnt} rows but only {n_rows} exist; lower the density"
            )));
        }
        if i >= n_rows {
            let rows = rng.choice_without_replacement(n_rows, cnt);
            indices[i..i + cnt].copy_from_slice(&rows);
        } else if i + cnt > n_rows {
            let mut used = vec![false; n_rows];
            for &r in &indices[i..n_rows] {
                used[r] = true;
            }
            let remaining: Vec<usize> = (0..n_rows).filter(|&r| !used[r]).collect();
            let extra = rng.choice_from_slice(&remaining, i + cnt - n_rows);
            indices[n_rows..i + cnt].copy_from_slice(&extra);
        }
        i += cnt;
        indptr.push(i);
    }

    let c: Vec<f64> = (0..n_cols).map(|_| (rng.below(max_coef) + 1) as f64).collect();

    let mut triplets = Vec::with_capacity(nnzrs);
    for j in 0..n_cols {
        for &row in &indices[indptr[j]..indptr[j + 1]] {
            triplets.push((row, j, 1.0));
        }
    }

    Ok(MilpInstance {
        name: String::new(),
        objective_sense: ObjSense::Minimize,
        c,
        rows: CsrMatrix::from_triplets(n_rows, n_cols, triplets),
        senses: vec![RowSense::Ge; n_rows],
        b: vec![1.0; n_rows],
        l: vec![0.0; n_cols],
        u: vec![1.0; n_cols],
        integrality: vec![VarType::Binary; n_cols],
    })
}
