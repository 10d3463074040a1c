//! MILP instance data model and structural statistics.
//!
//! An instance is the problem `min/max c'x  s.t.  A x {<=,>=,=} b,
//! l <= x <= u`, with a subset of variables restricted to integers.
//! Instances are immutable after construction and safe to share across
//! threads; every constructor path runs [`MilpInstance::validate`].

use thiserror::Error;

/// Objective direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjSense {
    Minimize,
    Maximize,
}

/// Row comparison sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSense {
    /// `a'x <= b`
    Le,
    /// `a'x >= b`
    Ge,
    /// `a'x == b`
    Eq,
}

/// Variable integrality class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarType {
    Binary,
    Integer,
    ImpliedInteger,
    Continuous,
}

impl VarType {
    /// True for any integer-restricted class (binary, integer, implied).
    pub fn is_integral(self) -> bool {
        !matches!(self, VarType::Continuous)
    }
}

/// Sparse matrix in compressed-row form.
///
/// Invariants: column indices strictly increasing within each row, no
/// explicitly stored zeros, all values finite.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix {
    pub n_rows: usize,
    pub n_cols: usize,
    /// Length `n_rows + 1`; row `i` occupies `row_starts[i]..row_starts[i+1]`.
    pub row_starts: Vec<usize>,
    pub col_indices: Vec<usize>,
    pub values: Vec<f64>,
}

impl CsrMatrix {
    /// Builds a CSR matrix from (row, col, value) triplets. Entries are
    /// sorted; zero values are dropped; duplicate coordinates are summed.
    pub fn from_triplets(
        n_rows: usize,
        n_cols: usize,
        mut triplets: Vec<(usize, usize, f64)>,
    ) -> Self {
        triplets.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut merged: Vec<(usize, usize, f64)> = Vec::with_capacity(triplets.len());
        for (r, c, v) in triplets {
            match merged.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => merged.push((r, c, v)),
            }
        }
        let mut row_starts = vec![0usize; n_rows + 1];
        let mut col_indices = Vec::with_capacity(merged.len());
        let mut values = Vec::with_capacity(merged.len());
        for (r, c, v) in merged {
            if v == 0.0 {
                continue;
            }
            row_starts[r + 1] += 1;
            col_indices.push(c);
            values.push(v);
        }
        for i in 0..n_rows {
            row_starts[i + 1] += row_starts[i];
        }
        CsrMatrix {
            n_rows,
            n_cols,
            row_starts,
            col_indices,
            values,
        }
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Column indices and values of row `i`.
    pub fn row(&self, i: usize) -> (&[usize], &[f64]) {
        let range = self.row_starts[i]..self.row_starts[i + 1];
        (&self.col_indices[range.clone()], &self.values[range])
    }

    /// Euclidean norm of row `i`.
    pub fn row_norm(&self, i: usize) -> f64 {
        let (_, vals) = self.row(i);
        vals.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// `A x` for a dense `x`.
    pub fn mat_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n_cols);
        (0..self.n_rows)
            .map(|i| {
                let (cols, vals) = self.row(i);
                cols.iter().zip(vals).map(|(&j, &v)| v * x[j]).sum()
            })
            .collect()
    }

    /// Number of nonzeros in each column.
    pub fn col_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n_cols];
        for &j in &self.col_indices {
            deg[j] += 1;
        }
        deg
    }
}

/// Violations detected by [`MilpInstance::validate`].
#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("instance has no variables or no constraints")]
    EmptyProblem,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("row {0} has no nonzero entries")]
    EmptyRow(usize),
    #[error("row {row}: column indices not strictly increasing or out of range")]
    BadRowIndices { row: usize },
    #[error("nonfinite coefficient in {0}")]
    NonFinite(&'static str),
    #[error("variable {0}: lower bound exceeds upper bound")]
    BoundOrder(usize),
    #[error("variable {0}: binary variable must have bounds [0, 1]")]
    BadBinaryBounds(usize),
    #[error("explicit zero stored in constraint matrix at row {0}")]
    StoredZero(usize),
}

/// A mixed-integer linear program.
#[derive(Debug, Clone, PartialEq)]
pub struct MilpInstance {
    pub name: String,
    pub objective_sense: ObjSense,
    /// Objective coefficients, length `n`.
    pub c: Vec<f64>,
    /// Constraint matrix, `m x n`.
    pub rows: CsrMatrix,
    /// Row senses, length `m`.
    pub senses: Vec<RowSense>,
    /// Right-hand sides, length `m`.
    pub b: Vec<f64>,
    /// Lower bounds, length `n`; `-inf` allowed.
    pub l: Vec<f64>,
    /// Upper bounds, length `n`; `+inf` allowed.
    pub u: Vec<f64>,
    /// Integrality class per variable, length `n`.
    pub integrality: Vec<VarType>,
}

impl MilpInstance {
    pub fn n_vars(&self) -> usize {
        self.c.len()
    }

    pub fn n_cons(&self) -> usize {
        self.b.len()
    }

    /// Checks every structural invariant, returning the first violation.
    pub fn validate(&self) -> Result<(), InstanceError> {
        let n = self.n_vars();
        let m = self.n_cons();
        if n == 0 || m == 0 {
            return Err(InstanceError::EmptyProblem);
        }
        if self.rows.n_rows != m || self.rows.n_cols != n {
            return Err(InstanceError::DimensionMismatch(format!(
                "matrix is {}x{}, expected {}x{}",
                self.rows.n_rows, self.rows.n_cols, m, n
            )));
        }
        for (label, len) in [
            ("senses", self.senses.len()),
            ("l", self.l.len()),
            ("u", self.u.len()),
            ("integrality", self.integrality.len()),
        ] {
            let expected = if label == "senses" { m } else { n };
            if len != expected {
                return Err(InstanceError::DimensionMismatch(format!(
                    "{label} has length {len}, expected {expected}"
                )));
            }
        }
        if !self.c.iter().all(|v| v.is_finite()) {
            return Err(InstanceError::NonFinite("objective"));
        }
        if !self.b.iter().all(|v| v.is_finite()) {
            return Err(InstanceError::NonFinite("rhs"));
        }
        for i in 0..m {
            let (cols, vals) = self.rows.row(i);
            if cols.is_empty() {
                return Err(InstanceError::EmptyRow(i));
            }
            if !cols.windows(2).all(|w| w[0] < w[1]) || *cols.last().unwrap() >= n {
                return Err(InstanceError::BadRowIndices { row: i });
            }
            if vals.iter().any(|v| !v.is_finite()) {
                return Err(InstanceError::NonFinite("constraint matrix"));
            }
            if vals.iter().any(|v| *v == 0.0) {
                return Err(InstanceError::StoredZero(i));
            }
        }
        for j in 0..n {
            if self.l[j].is_nan() || self.u[j].is_nan() {
                return Err(InstanceError::NonFinite("bounds"));
            }
            if self.l[j] > self.u[j] {
                return Err(InstanceError::BoundOrder(j));
            }
            if self.integrality[j] == VarType::Binary && (self.l[j] != 0.0 || self.u[j] != 1.0) {
                return Err(InstanceError::BadBinaryBounds(j));
            }
        }
        Ok(())
    }
}

/// The fixed set of structural descriptors used by the JS-divergence
/// baseline. All values are finite for valid instances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructStats {
    pub n_vars: f64,
    pub n_cons: f64,
    /// nnz / (m * n), in (0, 1].
    pub nnz_density: f64,
    /// Fraction of integer-restricted variables (binary included).
    pub frac_integer_vars: f64,
    pub frac_binary_vars: f64,
    /// nnz / n.
    pub mean_var_degree: f64,
    /// nnz / m.
    pub mean_cons_degree: f64,
    pub mean_abs_coef: f64,
    /// Population standard deviation of |A_ij| over stored entries.
    pub std_abs_coef: f64,
    pub mean_rhs: f64,
    pub mean_obj_coef: f64,
}

impl StructStats {
    pub const FIELD_NAMES: [&'static str; 11] = [
        "n_vars",
        "n_cons",
        "nnz_density",
        "frac_integer_vars",
        "frac_binary_vars",
        "mean_var_degree",
        "mean_cons_degree",
        "mean_abs_coef",
        "std_abs_coef",
        "mean_rhs",
        "mean_obj_coef",
    ];

    /// Field values in the order of [`Self::FIELD_NAMES`].
    pub fn as_array(&self) -> [f64; 11] {
        [
            self.n_vars,
            self.n_cons,
            self.nnz_density,
            self.frac_integer_vars,
            self.frac_binary_vars,
            self.mean_var_degree,
            self.mean_cons_degree,
            self.mean_abs_coef,
            self.std_abs_coef,
            self.mean_rhs,
            self.mean_obj_coef,
        ]
    }
}

/// Computes the 11 structural statistics of a valid instance.
pub fn instance_stats(inst: &MilpInstance) -> StructStats {
    let n = inst.n_vars() as f64;
    let m = inst.n_cons() as f64;
    let nnz = inst.rows.nnz() as f64;
    let n_integer = inst
        .integrality
        .iter()
        .filter(|t| t.is_integral())
        .count() as f64;
    let n_binary = inst
        .integrality
        .iter()
        .filter(|t| **t == VarType::Binary)
        .count() as f64;
    let mean_abs = inst.rows.values.iter().map(|v| v.abs()).sum::<f64>() / nnz;
    let var_abs = inst
        .rows
        .values
        .iter()
        .map(|v| {
            let d = v.abs() - mean_abs;
            d * d
        })
        .sum::<f64>()
        / nnz;
    StructStats {
        n_vars: n,
        n_cons: m,
        nnz_density: nnz / (m * n),
        frac_integer_vars: n_integer / n,
        frac_binary_vars: n_binary / n,
        mean_var_degree: nnz / n,
        mean_cons_degree: nnz / m,
        mean_abs_coef: mean_abs,
        std_abs_coef: var_abs.sqrt(),
        mean_rhs: inst.b.iter().sum::<f64>() / m,
        mean_obj_coef: inst.c.iter().sum::<f64>() / n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_2x2() -> MilpInstance {
        MilpInstance {
            name: "id2".into(),
            objective_sense: ObjSense::Minimize,
            c: vec![1.0, 1.0],
            rows: CsrMatrix::from_triplets(2, 2, vec![(0, 0, 1.0), (1, 1, 1.0)]),
            senses: vec![RowSense::Le, RowSense::Le],
            b: vec![1.0, 1.0],
            l: vec![0.0, 0.0],
            u: vec![1.0, 1.0],
            integrality: vec![VarType::Binary, VarType::Binary],
        }
    }

    #[test]
    fn stats_identity_2x2() {
        let inst = identity_2x2();
        inst.validate().unwrap();
        let s = instance_stats(&inst);
        assert_eq!(s.nnz_density, 0.5);
        assert_eq!(s.frac_binary_vars, 1.0);
        assert_eq!(s.mean_var_degree, 1.0);
    }

    #[test]
    fn stats_single_var_single_cons() {
        let inst = MilpInstance {
            name: "one".into(),
            objective_sense: ObjSense::Minimize,
            c: vec![2.0],
            rows: CsrMatrix::from_triplets(1, 1, vec![(0, 0, 3.0)]),
            senses: vec![RowSense::Ge],
            b: vec![1.0],
            l: vec![0.0],
            u: vec![f64::INFINITY],
            integrality: vec![VarType::Continuous],
        };
        inst.validate().unwrap();
        let s = instance_stats(&inst);
        assert_eq!(s.n_vars, 1.0);
        assert_eq!(s.n_cons, 1.0);
        assert_eq!(s.mean_cons_degree, 1.0);
    }

    #[test]
    fn validate_rejects_empty_row() {
        let mut inst = identity_2x2();
        inst.rows = CsrMatrix::from_triplets(2, 2, vec![(0, 0, 1.0), (0, 1, 1.0)]);
        assert!(matches!(inst.validate(), Err(InstanceError::EmptyRow(1))));
    }

    #[test]
    fn validate_rejects_binary_bad_bounds() {
        let mut inst = identity_2x2();
        inst.u[0] = 2.0;
        assert!(matches!(
            inst.validate(),
            Err(InstanceError::BadBinaryBounds(0))
        ));
    }

    #[test]
    fn validate_rejects_crossed_bounds() {
        let mut inst = identity_2x2();
        inst.integrality[1] = VarType::Continuous;
        inst.l[1] = 2.0;
        assert!(matches!(inst.validate(), Err(InstanceError::BoundOrder(1))));
    }

    #[test]
    fn triplets_sum_duplicates_and_drop_zeros() {
        let m = CsrMatrix::from_triplets(2, 2, vec![(0, 0, 1.0), (0, 0, 2.0), (1, 1, 0.0), (1, 0, 4.0)]);
        assert_eq!(m.nnz(), 2);
        assert_eq!(m.row(0), (&[0usize][..], &[3.0][..]));
        assert_eq!(m.row(1), (&[0usize][..], &[4.0][..]));
    }

    #[test]
    fn stats_permutation_invariant() {
        // simultaneous row and column reordering leaves every statistic fixed
        let inst = MilpInstance {
            name: "p".into(),
            objective_sense: ObjSense::Minimize,
            c: vec![1.0, 2.0, 3.0],
            rows: CsrMatrix::from_triplets(
                2,
                3,
                vec![(0, 0, 1.0), (0, 2, 5.0), (1, 1, -2.0), (1, 2, 0.5)],
            ),
            senses: vec![RowSense::Le, RowSense::Ge],
            b: vec![1.0, -1.0],
            l: vec![0.0; 3],
            u: vec![1.0, 10.0, f64::INFINITY],
            integrality: vec![VarType::Binary, VarType::Integer, VarType::Continuous],
        };
        let perm_rows = [1usize, 0];
        let perm_cols = [2usize, 0, 1]; // new index of old column j
        let mut trips = Vec::new();
        for i in 0..2 {
            let (cols, vals) = inst.rows.row(i);
            for (&j, &v) in cols.iter().zip(vals) {
                trips.push((perm_rows[i], perm_cols[j], v));
            }
        }
        let mut c = vec![0.0; 3];
        let mut l = vec![0.0; 3];
        let mut u = vec![0.0; 3];
        let mut integ = vec![VarType::Continuous; 3];
        for j in 0..3 {
            c[perm_cols[j]] = inst.c[j];
            l[perm_cols[j]] = inst.l[j];
            u[perm_cols[j]] = inst.u[j];
            integ[perm_cols[j]] = inst.integrality[j];
        }
        let mut senses = vec![RowSense::Le; 2];
        let mut b = vec![0.0; 2];
        for i in 0..2 {
            senses[perm_rows[i]] = inst.senses[i];
            b[perm_rows[i]] = inst.b[i];
        }
        let permuted = MilpInstance {
            name: inst.name.clone(),
            objective_sense: inst.objective_sense,
            c,
            rows: CsrMatrix::from_triplets(2, 3, trips),
            senses,
            b,
            l,
            u,
            integrality: integ,
        };
        let sa = instance_stats(&inst).as_array();
        let sb = instance_stats(&permuted).as_array();
        for (x, y) in sa.iter().zip(sb.iter()) {
            assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
    }
}
