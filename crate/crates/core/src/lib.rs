//! Exact subgraph counting on bounded-degeneracy host graphs.
//!
//! Patterns are classified by whether their homomorphism, embedding
//! (`inj`) and induced-copy (`ind`) counts admit near-linear algorithms on
//! degenerate hosts. Counts are computed exactly:
//!
//! * `hom` through a join-tree dynamic program over every acyclic
//!   orientation of the pattern, evaluated on a degeneracy orientation of
//!   the host ([`hom`]);
//! * `inj` and `ind` by Möbius inversion over partitions and supergraphs
//!   of the pattern ([`counting`]);
//! * a brute-force [`oracle`] supplies ground truth for everything.
//!
//! The [`gadgets`] module holds the graph transformations used to move
//! counts between problems, together with exact checkers for the counting
//! identities they satisfy.

pub mod acyclicity;
pub mod bigcount;
pub mod cli;
pub mod counting;
pub mod error;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod hom;
pub mod oracle;
pub mod pattern;

pub use bigcount::{BigCount, SignedCount};
pub use error::{Error, Result};
pub use graph::{Graph, OrientedGraph};
pub use pattern::Pattern;

/// Default cap on pattern vertex count.
pub const MAX_PATTERN_SIZE: usize = 10;

/// Soft limits guarding every exponential enumeration in the crate.
#[derive(Clone, Debug, PartialEq)]
pub struct Limits {
    /// Largest pattern accepted by enumerations over partitions or subsets.
    pub max_pattern: usize,
    /// Largest number of non-edges for supergraph enumeration.
    pub max_non_edges: usize,
    /// Largest edge count for acyclic-orientation enumeration.
    pub max_orientation_edges: usize,
    /// Largest vertex count for the obstruction subset scan.
    pub max_obstruction_vertices: usize,
    /// Upper bound on the brute-force search tree size.
    pub oracle_budget: f64,
    /// Largest vertex count of a tensor product.
    pub max_tensor_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pattern: MAX_PATTERN_SIZE,
            max_non_edges: 20,
            max_orientation_edges: 25,
            max_obstruction_vertices: 12,
            oracle_budget: 1e9,
            max_tensor_vertices: 20_000_000,
        }
    }
}

impl Limits {
    /// Limits with the oracle budget lifted; for callers that know the
    /// search is small even though the bound is loose.
    pub fn unbounded_oracle() -> Self {
        Limits {
            oracle_budget: f64::INFINITY,
            ..Limits::default()
        }
    }
}
