//! Finite graph/tree machinery: the cone decomposition `T_G` of a graph,
//! comparability graphs of trees, exact clique-minor and chromatic-number
//! search, greedy subdivisions, `(k, l)`-connectedness and Kurepa-style
//! minor families, together with the corpus checks that cross-validate them.
//!
//! Vertices are always `0..n` and every canonical ordering derives from the
//! vertex index.

pub mod check;
pub mod coloring;
pub mod corpus;
pub mod decomposition;
pub mod generators;
pub mod graph;
pub mod minors;
pub mod par;
pub mod partition;
pub mod rng;
pub mod tree;

use thiserror::Error;

pub use coloring::Coloring;
pub use decomposition::Decomposition;
pub use graph::{Graph, Separator, VertexSet};
pub use minors::{MinorWitness, SubdivisionWitness};
pub use partition::TreePartition;
pub use tree::{SpecializingFunction, Tree};

/// Version tag written into every JSON artifact.
pub const SCHEMA_VERSION: u32 = 1;

/// An exact solver refused an instance that is larger than its configured guard.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what}: {actual} exceeds the exact-search limit of {limit}")]
pub struct LimitExceeded {
    pub what: &'static str,
    pub limit: usize,
    pub actual: usize,
}

impl LimitExceeded {
    pub(crate) fn check(what: &'static str, actual: usize, limit: usize) -> Result<(), Self> {
        if actual > limit {
            Err(LimitExceeded {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}
