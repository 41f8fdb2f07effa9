//! Digraph coloring laboratory: loopless digraphs, a seeded random digraph
//! model, exact solvers for the dichromatic number / maximum acyclic set /
//! minimum feedback vertex set, closed-form bound evaluators, girth-pruning
//! construction pipelines, and cycle-packing decompositions.
//!
//! Vertices are dense ids `0..n`. Digraphs are immutable after construction
//! and safe to share across threads; every query is read-only.

pub mod bounds;
pub mod construct;
pub mod digraph;
pub mod eposa;
pub mod model;
pub mod solver;

#[cfg(test)]
pub(crate) mod testutil;

/// Concrete scalar used by reports and the `f64` bound evaluators.
///
/// The evaluators in [`bounds`] are generic over [`num_traits::Float`];
/// everything downstream (certificates, experiment summaries) pins this.
pub type Real = f64;

pub use digraph::{CycleWitness, Digraph, GraphError};
pub use solver::{Budget, ColoringAssignment};
