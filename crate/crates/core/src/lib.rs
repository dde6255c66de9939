//! Exact locating-dominating sets on graphs and functigraphs.
//!
//! The crate computes the location-domination number `λ(G)` exactly, builds
//! functigraphs `F_G^f`, and checks closed-form values of `λ(F_G^f)` for
//! complete graphs, complete graphs minus a matching, and a few extremal
//! families against the solver.

pub mod cli;
pub mod error;
pub mod functigraph;
pub mod generators;
pub mod graph;
pub mod io;
pub mod solver;
pub mod theorems;

pub use error::{Error, Result};
pub use functigraph::{Functigraph, FunctionClass, FunctionKind, FunctionMap, Signature};
pub use graph::{Graph, TwinClass, TwinKind, TwinPartition, VertexSet, MAX_ORDER};
pub use solver::{
    info_lower_bound, is_locating_dominating, lambda_exact, lambda_oracle, trace, twin_lower_bound,
    SearchStats, SolveOptions, SolveResult,
};
