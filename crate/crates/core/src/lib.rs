//! Construction and verification of high-girth cover graphs of uniquely
//! generated posets, their greedy colorings, and grounded curve families
//! whose disjointness graph is a prescribed cover graph.

pub mod construction;
pub mod curve;
pub mod exec;
pub mod format;
pub mod graph;
pub mod poset;
pub mod prob;

pub use exec::Exec;
pub use graph::{Girth, Graph, GraphError};
pub use poset::{CoverDag, Poset, PosetError};

/// Default node budget for the branch-and-bound independence search.
pub const DEFAULT_MIS_BUDGET: u64 = 2_000_000;
