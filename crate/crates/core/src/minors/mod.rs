//! Clique minors: witnesses, exact search, Hadwiger number, greedy
//! subdivisions and Kurepa-style minor families.

mod kurepa;
mod search;
mod subdivision;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::{LimitExceeded, SCHEMA_VERSION};

pub use kurepa::{kurepa_family_check, KurepaReport, PairReport, WitnessReport};
pub use search::{find_clique_minor, find_clique_minor_with, hadwiger_number, hadwiger_number_with, MinorLimits};
pub use subdivision::{greedy_subdivision, verify_subdivision, SubdivisionCheck, SubdivisionViolation, SubdivisionWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("clique size must be at least 1")]
    ZeroK,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("witness {index} claims K_{found} but the family is checked for K_{expected}")]
    MixedK {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error(transparent)]
    Limit(#[from] LimitExceeded),
    #[error("malformed witness JSON: {0}")]
    Json(String),
}

/// Branch sets of a `K_k` minor, kept sorted by least member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinorWitness {
    branch_sets: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    schema: u32,
    k: usize,
    branch_sets: Vec<VertexSet>,
}

impl MinorWitness {
    pub fn new(mut branch_sets: Vec<VertexSet>) -> Self {
        branch_sets.sort_by_key(|s| s.first());
        MinorWitness { branch_sets }
    }

    pub fn k(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn branch_sets(&self) -> &[VertexSet] {
        &self.branch_sets
    }

    /// All vertices used by the witness.
    pub fn union(&self) -> VertexSet {
        self.branch_sets.iter().flat_map(VertexSet::iter).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&WitnessJson {
            schema: SCHEMA_VERSION,
            k: self.k(),
            branch_sets: self.branch_sets.clone(),
        })
        .expect("witnesses always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, MinorError> {
        let raw: WitnessJson =
            serde_json::from_str(text).map_err(|e| MinorError::Json(e.to_string()))?;
        if raw.k != raw.branch_sets.len() {
            return Err(MinorError::Json(format!(
                "k = {} but {} branch sets given",
                raw.k,
                raw.branch_sets.len()
            )));
        }
        Ok(MinorWitness::new(raw.branch_sets))
    }
}

/// First violated clause of a minor witness, by branch-set index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorViolation {
    Empty(usize),
    OutOfRange { set: usize, vertex: usize },
    Overlap { first: usize, second: usize, vertex: usize },
    Disconnected(usize),
    NotAdjacent(usize, usize),
}

impl fmt::Display for MinorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorViolation::Empty(i) => write!(f, "branch set {i} is empty"),
            MinorViolation::OutOfRange { set, vertex } => {
                write!(f, "branch set {set} contains out-of-range vertex {vertex}")
            }
            MinorViolation::Overlap { first, second, vertex } => {
                write!(f, "branch sets {first} and {second} share vertex {vertex}")
            }
            MinorViolation::Disconnected(i) => write!(f, "branch set {i} is not connected"),
            MinorViolation::NotAdjacent(a, b) => {
                write!(f, "branch sets {a} and {b} are not joined by an edge")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorCheck {
    pub violation: Option<MinorViolation>,
}

impl MinorCheck {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

fn sets_adjacent(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    a.iter().any(|u| g.neighbors(u).iter().any(|&v| b.contains(v)))
}

/// Checks that the branch sets are non-empty, disjoint, connected and
/// pairwise joined by an edge of `g`.
pub fn verify_minor(g: &Graph, w: &MinorWitness) -> MinorCheck {
    let violation = (|| {
        let sets = w.branch_sets();
        let mut owner: Vec<Option<usize>> = vec![None; g.n()];
        for (i, set) in sets.iter().enumerate() {
            if set.is_empty() {
                return Some(MinorViolation::Empty(i));
            }
            for v in set.iter() {
                if v >= g.n() {
                    return Some(MinorViolation::OutOfRange { set: i, vertex: v });
                }
                if let Some(first) = owner[v].replace(i) {
                    return Some(MinorViolation::Overlap { first, second: i, vertex: v });
                }
            }
        }
        if let Some(i) = sets.iter().position(|s| !g.is_connected_set(s)) {
            return Some(MinorViolation::Disconnected(i));
        }
        for a in 0..sets.len() {
            for b in a + 1..sets.len() {
                if !sets_adjacent(g, &sets[a], &sets[b]) {
                    return Some(MinorViolation::NotAdjacent(a, b));
                }
            }
        }
        None
    })();
    MinorCheck { violation }
}
