//! Native, seed-reproducible MILP generators.
//!
//! Each registered class is a parameterized procedure that emits a
//! [`MilpInstance`] deterministically from `(class_id, params, seed)`.
//! Randomness comes exclusively from the SplitMix64 stream in
//! [`crate::rng`], so any conforming reimplementation reproduces the
//! same instances bit-exactly.
//!
//! Formulations:
//! * `SC` — set cover; the sparsity-pattern construction mirrors the
//!   classic generator: nnz count is `floor(n_rows * n_cols * density)`,
//!   every column gets at least two rows, every row at least one column,
//!   costs are uniform integers in `[1, max_coef]`, rows are `>= 1`
//!   covering constraints over binary variables.
//! * `IS` — maximum-weight independent set on an Erdos-Renyi graph.
//! * `CA` — combinatorial auction winner determination; bundles are
//!   uniform random item subsets, bid prices scale with bundle value.
//! * `KS` — multiple knapsack with uniform integer weights and profits.
//! * `CFL` — capacitated facility location with binary openings and
//!   fractional assignments.
//! * `FCNF` — fixed-charge network flow on a random DAG that always
//!   contains the chain `0 -> 1 -> ... -> N-1`, with big-M activation.
//! * `TSP` — traveling salesman on random plane points,
//!   Miller-Tucker-Zemlin subtour elimination.
//! * `GA` — generalized assignment with per-agent knapsack capacities.

mod auction;
mod describe;
mod facility;
mod flow;
mod independent_set;
mod knapsack;
mod set_cover;
mod tsp;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::instance::MilpInstance;
use crate::rng::Rng;

pub use describe::{class_description, instance_description};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("unknown generator class '{0}'")]
    UnknownClass(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// One declared parameter of a generator class.
#[derive(Debug, Clone)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: f64,
    pub min: f64,
    pub max: f64,
    /// Rounded to an integer whenever scaled or jittered.
    pub integer: bool,
    /// Scaled by [`scale_params`] and perturbed by [`jitter_params`].
    pub size_param: bool,
}

/// Declared interface of a generator class.
#[derive(Debug, Clone)]
pub struct ClassSchema {
    pub class_id: &'static str,
    pub full_name: &'static str,
    pub params: Vec<ParamSpec>,
}

impl ClassSchema {
    pub fn default_params(&self) -> BTreeMap<String, f64> {
        self.params
            .iter()
            .map(|p| (p.name.to_string(), p.default))
            .collect()
    }

    /// Fills absent parameters with defaults and checks ranges and
    /// unknown names.
    pub fn resolve(&self, params: &BTreeMap<String, f64>) -> Result<BTreeMap<String, f64>, GenError> {
        for key in params.keys() {
            if !self.params.iter().any(|p| p.name == key) {
                return Err(GenError::InvalidParams(format!(
                    "class {} has no parameter '{key}'",
                    self.class_id
                )));
            }
        }
        let mut resolved = BTreeMap::new();
        for p in &self.params {
            let mut v = params.get(p.name).copied().unwrap_or(p.default);
            if p.integer {
                v = v.round();
            }
            if !v.is_finite() || v < p.min || v > p.max {
                return Err(GenError::InvalidParams(format!(
                    "{}={v} outside [{}, {}]",
                    p.name, p.min, p.max
                )));
            }
            resolved.insert(p.name.to_string(), v);
        }
        Ok(resolved)
    }
}

/// A retrievable generator invocation: the native stand-in for a piece
/// of instance-construction code.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub class_id: String,
    pub params: BTreeMap<String, f64>,
    pub seed: u64,
    pub description: String,
}

impl GeneratorSpec {
    /// Spec with the class defaults and the class-level description.
    pub fn with_defaults(class_id: &str, seed: u64) -> Result<Self, GenError> {
        let schema = class_schema(class_id)
            .ok_or_else(|| GenError::UnknownClass(class_id.to_string()))?;
        Ok(GeneratorSpec {
            class_id: class_id.to_string(),
            params: schema.default_params(),
            seed,
            description: class_description(class_id),
        })
    }
}

/// All registered classes, in a fixed order.
pub fn list_classes() -> Vec<ClassSchema> {
    vec![
        set_cover::schema(),
        independent_set::schema(),
        auction::schema(),
        knapsack::schema(),
        facility::schema(),
        flow::schema(),
        tsp::schema(),
        knapsack::assignment_schema(),
    ]
}

/// Schema lookup; absent for unknown ids.
pub fn class_schema(class_id: &str) -> Option<ClassSchema> {
    list_classes().into_iter().find(|s| s.class_id == class_id)
}

/// Runs the class procedure for the given spec.
pub fn generate_instance(spec: &GeneratorSpec) -> Result<MilpInstance, GenError> {
    let schema = class_schema(&spec.class_id)
        .ok_or_else(|| GenError::UnknownClass(spec.class_id.clone()))?;
    let params = schema.resolve(&spec.params)?;
    let mut rng = Rng::new(spec.seed);
    let mut inst = match spec.class_id.as_str() {
        "SC" => set_cover::generate(&params, &mut rng)?,
        "IS" => independent_set::generate(&params, &mut rng)?,
        "CA" => auction::generate(&params, &mut rng)?,
        "KS" => knapsack::generate(&params, &mut rng)?,
        "CFL" => facility::generate(&params, &mut rng)?,
        "FCNF" => flow::generate(&params, &mut rng)?,
        "TSP" => tsp::generate(&params, &mut rng)?,
        "GA" => knapsack::generate_assignment(&params, &mut rng)?,
        other => return Err(GenError::UnknownClass(other.to_string())),
    };
    inst.name = format!("{}_{}", spec.class_id, spec.seed);
    debug_assert!(inst.validate().is_ok(), "{:?}", inst.validate());
    Ok(inst)
}

/// Multiplies every size parameter by `factor`, rounding integer
/// parameters; fails if a scaled value leaves its declared range.
pub fn scale_params(
    class_id: &str,
    params: &BTreeMap<String, f64>,
    factor: f64,
) -> Result<BTreeMap<String, f64>, GenError> {
    if !(factor > 0.0) {
        return Err(GenError::InvalidParams(format!("factor {factor} not > 0")));
    }
    let schema = class_schema(class_id)
        .ok_or_else(|| GenError::UnknownClass(class_id.to_string()))?;
    let resolved = schema.resolve(params)?;
    let mut out = BTreeMap::new();
    for p in &schema.params {
        let v = resolved[p.name];
        let scaled = if p.size_param {
            let s = if p.integer { (v * factor).round() } else { v * factor };
            if s < p.min || s > p.max {
                return Err(GenError::InvalidParams(format!(
                    "scaled {}={s} outside [{}, {}]",
                    p.name, p.min, p.max
                )));
            }
            s
        } else {
            v
        };
        out.insert(p.name.to_string(), scaled);
    }
    Ok(out)
}

/// Perturbs each size parameter by an independent uniform factor in
/// [0.8, 1.25], clamping back into the declared range. Deterministic in
/// `seed`; factors are drawn in schema order.
pub fn jitter_params(
    class_id: &str,
    params: &BTreeMap<String, f64>,
    seed: u64,
) -> Result<BTreeMap<String, f64>, GenError> {
    let schema = class_schema(class_id)
        .ok_or_else(|| GenError::UnknownClass(class_id.to_string()))?;
    let resolved = schema.resolve(params)?;
    let mut rng = Rng::new(seed);
    let mut out = BTreeMap::new();
    for p in &schema.params {
        let v = resolved[p.name];
        let jittered = if p.size_param {
            let f = rng.uniform(0.8, 1.25);
            let s = if p.integer { (v * f).round() } else { v * f };
            s.clamp(p.min, p.max)
        } else {
            v
        };
        out.insert(p.name.to_string(), jittered);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{RowSense, VarType};
    use crate::mps::write_mps;

    #[test]
    fn registry_has_the_eight_classes() {
        let classes = list_classes();
        assert!(classes.len() >= 8);
        let ids: Vec<&str> = classes.iter().map(|s| s.class_id).collect();
        for id in ["SC", "IS", "CA", "KS", "CFL", "FCNF", "TSP", "GA"] {
            assert!(ids.contains(&id), "missing {id}");
        }
    }

    #[test]
    fn sc_schema_matches_reference_defaults() {
        let s = class_schema("SC").unwrap();
        let d = s.default_params();
        assert_eq!(d["n_rows"], 750.0);
        assert_eq!(d["n_cols"], 1500.0);
        assert_eq!(d["density"], 0.05);
        assert_eq!(d["max_coef"], 100.0);
    }

    #[test]
    fn unknown_class_schema_is_absent() {
        assert!(class_schema("NOPE").is_none());
    }

    #[test]
    fn sc_default_shape_and_types() {
        let spec = GeneratorSpec::with_defaults("SC", 42).unwrap();
        let inst = generate_instance(&spec).unwrap();
        assert_eq!(inst.n_cons(), 750);
        assert_eq!(inst.n_vars(), 1500);
        assert!(inst.integrality.iter().all(|t| *t == VarType::Binary));
        assert!(inst.senses.iter().all(|s| *s == RowSense::Ge));
        assert!(inst.b.iter().all(|v| *v == 1.0));
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = GeneratorSpec::with_defaults("SC", 7).unwrap();
        let a = write_mps(&generate_instance(&spec).unwrap());
        let b = write_mps(&generate_instance(&spec).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn sc_forcing_guarantees_degrees() {
        let mut spec = GeneratorSpec::with_defaults("SC", 3).unwrap();
        spec.params.insert("n_rows".into(), 10.0);
        spec.params.insert("n_cols".into(), 20.0);
        spec.params.insert("density".into(), 0.3);
        let inst = generate_instance(&spec).unwrap();
        let col_deg = inst.rows.col_degrees();
        assert!(col_deg.iter().all(|&d| d >= 2), "{col_deg:?}");
        for i in 0..inst.n_cons() {
            assert!(!inst.rows.row(i).0.is_empty());
        }
        assert_eq!(inst.rows.nnz(), (10.0_f64 * 20.0 * 0.3) as usize);
    }

    #[test]
    fn sc_nnz_matches_exactly_at_defaults() {
        let spec = GeneratorSpec::with_defaults("SC", 99).unwrap();
        let inst = generate_instance(&spec).unwrap();
        assert_eq!(inst.rows.nnz(), (750.0_f64 * 1500.0 * 0.05) as usize);
    }

    #[test]
    fn sc_rejects_impossible_density() {
        let mut spec = GeneratorSpec::with_defaults("SC", 1).unwrap();
        spec.params.insert("n_rows".into(), 10.0);
        spec.params.insert("density".into(), 0.05);
        // floor(10 * 1500 * 0.05) = 750 < 2 * 1500
        assert!(matches!(
            generate_instance(&spec),
            Err(GenError::InvalidParams(_))
        ));
    }

    #[test]
    fn scale_params_scales_only_size_params() {
        let s = class_schema("SC").unwrap();
        let scaled = scale_params("SC", &s.default_params(), 2.0).unwrap();
        assert_eq!(scaled["n_rows"], 1500.0);
        assert_eq!(scaled["n_cols"], 3000.0);
        assert_eq!(scaled["density"], 0.05);
        assert_eq!(scaled["max_coef"], 100.0);
    }

    #[test]
    fn scale_params_identity_at_factor_one() {
        for schema in list_classes() {
            let d = schema.default_params();
            let scaled = scale_params(schema.class_id, &d, 1.0).unwrap();
            assert_eq!(scaled, d);
        }
    }

    #[test]
    fn scale_params_tsp_halves_cities() {
        let mut p = class_schema("TSP").unwrap().default_params();
        p.insert("n_cities".into(), 20.0);
        let scaled = scale_params("TSP", &p, 0.5).unwrap();
        assert_eq!(scaled["n_cities"], 10.0);
    }

    #[test]
    fn scale_params_rejects_out_of_range() {
        let p = class_schema("TSP").unwrap().default_params();
        assert!(matches!(
            scale_params("TSP", &p, 1e9),
            Err(GenError::InvalidParams(_))
        ));
    }

    #[test]
    fn jitter_stays_valid_and_varies() {
        let schema = class_schema("SC").unwrap();
        let d = schema.default_params();
        let mut collisions = 0;
        for s in 0..100u64 {
            let a = jitter_params("SC", &d, 2 * s).unwrap();
            let b = jitter_params("SC", &d, 2 * s + 1).unwrap();
            schema.resolve(&a).unwrap();
            schema.resolve(&b).unwrap();
            if a["n_rows"] == b["n_rows"] {
                collisions += 1;
            }
        }
        assert!(collisions < 5, "{collisions} collisions in 100 pairs");
    }

    #[test]
    fn every_class_generates_valid_instances() {
        for schema in list_classes() {
            let spec = GeneratorSpec::with_defaults(schema.class_id, 5).unwrap();
            let inst = generate_instance(&spec).unwrap();
            inst.validate()
                .unwrap_or_else(|e| panic!("{}: {e}", schema.class_id));
            assert!(inst.n_vars() >= 1 && inst.n_cons() >= 1);
        }
    }
}
