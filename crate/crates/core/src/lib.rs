//! MILP instance generation by generator retrieval.
//!
//! The pipeline: native generators emit MILP instances; an embedded
//! simplex/branch-and-bound solver produces solution features; instances
//! become bipartite variable/constraint graphs; a contrastively trained
//! embedding model maps graphs and textual descriptions into one space;
//! cosine similarity of instance embeddings ranks library generators,
//! and the best-matching generator is executed to produce new instances.

pub mod generators;
pub mod instance;
pub mod mps;
pub mod rng;

pub use instance::{
    instance_stats, CsrMatrix, InstanceError, MilpInstance, ObjSense, RowSense, StructStats,
    VarType,
};
