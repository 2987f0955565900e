use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::SCHEMA_VERSION;

use super::{verify_minor, MinorError, MinorWitness};

/// Branch vertices of a `K_m` subdivision and the interiors of its
/// connecting paths. The path for a pair `(a, b)` with `a < b` (as vertex
/// ids) lists interior vertices in order from `a` to `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionWitness {
    branch_vertices: Vec<usize>,
    paths: BTreeMap<(usize, usize), Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SubdivisionJson {
    schema: u32,
    branch_vertices: Vec<usize>,
    paths: BTreeMap<String, Vec<usize>>,
}

fn pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl SubdivisionWitness {
    /// Paths are re-keyed so that the smaller endpoint comes first; a path
    /// given as `(b, a)` is reversed accordingly.
    pub fn new(
        branch_vertices: Vec<usize>,
        paths: impl IntoIterator<Item = ((usize, usize), Vec<usize>)>,
    ) -> Self {
        let paths = paths
            .into_iter()
            .map(|((a, b), mut p)| {
                if a > b {
                    p.reverse();
                }
                (pair(a, b), p)
            })
            .collect();
        SubdivisionWitness {
            branch_vertices,
            paths,
        }
    }

    pub fn m(&self) -> usize {
        self.branch_vertices.len()
    }

    pub fn branch_vertices(&self) -> &[usize] {
        &self.branch_vertices
    }

    /// Interior of the path between branch vertices `a` and `b`, read from `a`.
    pub fn path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let p = self.paths.get(&pair(a, b))?;
        let mut p = p.clone();
        if a > b {
            p.reverse();
        }
        Some(p)
    }

    pub fn paths(&self) -> impl Iterator<Item = ((usize, usize), &[usize])> {
        self.paths.iter().map(|(&k, p)| (k, p.as_slice()))
    }

    /// Contracts each path interior into the branch set of its smaller endpoint.
    pub fn to_minor_witness(&self) -> MinorWitness {
        let mut sets: BTreeMap<usize, Vec<usize>> =
            self.branch_vertices.iter().map(|&v| (v, vec![v])).collect();
        for (&(a, _), interior) in &self.paths {
            if let Some(set) = sets.get_mut(&a) {
                set.extend_from_slice(interior);
            }
        }
        MinorWitness::new(sets.into_values().map(VertexSet::from).collect())
    }

    pub fn to_json(&self) -> String {
        let paths = self
            .paths
            .iter()
            .map(|(&(a, b), p)| (format!("{a}-{b}"), p.clone()))
            .collect();
        serde_json::to_string(&SubdivisionJson {
            schema: SCHEMA_VERSION,
            branch_vertices: self.branch_vertices.clone(),
            paths,
        })
        .expect("witnesses always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, MinorError> {
        let raw: SubdivisionJson =
            serde_json::from_str(text).map_err(|e| MinorError::Json(e.to_string()))?;
        let mut paths = Vec::with_capacity(raw.paths.len());
        for (key, p) in raw.paths {
            let parsed = key
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
            let Some(ends) = parsed else {
                return Err(MinorError::Json(format!("bad path key {key:?}")));
            };
            paths.push((ends, p));
        }
        Ok(SubdivisionWitness::new(raw.branch_vertices, paths))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubdivisionViolation {
    VertexOutOfRange(usize),
    RepeatedBranchVertex(usize),
    MissingPath(usize, usize),
    UnexpectedPath(usize, usize),
    NotAPath { ends: (usize, usize), from: usize, to: usize },
    SharedInterior { vertex: usize },
    ContractedMinor(String),
}

impl fmt::Display for SubdivisionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexOutOfRange(v) => write!(f, "vertex {v} is out of range"),
            Self::RepeatedBranchVertex(v) => write!(f, "branch vertex {v} is listed twice"),
            Self::MissingPath(a, b) => write!(f, "no path between branch vertices {a} and {b}"),
            Self::UnexpectedPath(a, b) => {
                write!(f, "path {a}-{b} does not join two branch vertices")
            }
            Self::NotAPath { ends: (a, b), from, to } => {
                write!(f, "path {a}-{b} steps from {from} to non-neighbour {to}")
            }
            Self::SharedInterior { vertex } => {
                write!(f, "vertex {vertex} is used twice as a branch or interior vertex")
            }
            Self::ContractedMinor(why) => write!(f, "contracted minor is invalid: {why}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionCheck {
    pub violation: Option<SubdivisionViolation>,
}

impl SubdivisionCheck {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn verify_subdivision(g: &Graph, w: &SubdivisionWitness) -> SubdivisionCheck {
    let violation = (|| {
        use SubdivisionViolation as V;
        let n = g.n();
        let mut used = vec![false; n];
        for &v in &w.branch_vertices {
            if v >= n {
                return Some(V::VertexOutOfRange(v));
            }
            if std::mem::replace(&mut used[v], true) {
                return Some(V::RepeatedBranchVertex(v));
            }
        }
        for &(a, b) in w.paths.keys() {
            if a == b || a >= n || b >= n || !used[a] || !used[b] {
                return Some(V::UnexpectedPath(a, b));
            }
        }
        let mut sorted = w.branch_vertices.clone();
        sorted.sort_unstable();
        for (i, &a) in sorted.iter().enumerate() {
            for &b in &sorted[i + 1..] {
                let Some(interior) = w.paths.get(&(a, b)) else {
                    return Some(V::MissingPath(a, b));
                };
                if let Some(&v) = interior.iter().find(|&&v| v >= n) {
                    return Some(V::VertexOutOfRange(v));
                }
                let walk: Vec<usize> = std::iter::once(a)
                    .chain(interior.iter().copied())
                    .chain(std::iter::once(b))
                    .collect();
                if let Some(step) = walk.windows(2).find(|s| !g.adjacent(s[0], s[1])) {
                    return Some(V::NotAPath {
                        ends: (a, b),
                        from: step[0],
                        to: step[1],
                    });
                }
                for &v in interior {
                    if std::mem::replace(&mut used[v], true) {
                        return Some(V::SharedInterior { vertex: v });
                    }
                }
            }
        }
        verify_minor(g, &w.to_minor_witness())
            .violation
            .map(|v| V::ContractedMinor(v.to_string()))
    })();
    SubdivisionCheck { violation }
}

/// Shortest path from `src` to `dst` through vertices with `free[v]`,
/// exploring neighbours in increasing order. Returns the interior.
fn shortest_interior(g: &Graph, src: usize, dst: usize, free: &[bool]) -> Option<Vec<usize>> {
    if g.adjacent(src, dst) {
        return Some(Vec::new());
    }
    let mut prev = vec![usize::MAX; g.n()];
    prev[src] = src;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if prev[v] != usize::MAX {
                continue;
            }
            if v == dst {
                let mut interior = Vec::new();
                let mut cur = u;
                while cur != src {
                    interior.push(cur);
                    cur = prev[cur];
                }
                interior.reverse();
                return Some(interior);
            }
            if free[v] {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    None
}

/// Builds a clique subdivision greedily. Candidates are tried once each in
/// order of decreasing degree (ties by id); a candidate becomes a branch
/// vertex if it can be joined to every earlier branch vertex by shortest
/// paths through vertices not used so far. The result is a lower bound on
/// the largest clique subdivision and always verifies.
pub fn greedy_subdivision(g: &Graph) -> Result<SubdivisionWitness, MinorError> {
    if g.n() == 0 {
        return Err(MinorError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(MinorError::Disconnected);
    }
    let mut candidates: Vec<usize> = (0..g.n()).collect();
    candidates.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut free = vec![true; g.n()];
    let mut branch: Vec<usize> = Vec::new();
    let mut paths = BTreeMap::new();
    for v in candidates {
        if !free[v] {
            continue;
        }
        free[v] = false;
        let mut trial_free = free.clone();
        let mut new_paths = Vec::with_capacity(branch.len());
        for &b in &branch {
            match shortest_interior(g, b, v, &trial_free) {
                Some(interior) => {
                    for &x in &interior {
                        trial_free[x] = false;
                    }
                    new_paths.push((pair(b, v), if b < v { interior } else { rev(interior) }));
                }
                None => break,
            }
        }
        if new_paths.len() == branch.len() {
            free = trial_free;
            branch.push(v);
            paths.extend(new_paths);
        } else {
            free[v] = true;
        }
    }
    Ok(SubdivisionWitness {
        branch_vertices: branch,
        paths,
    })
}

fn rev(mut v: Vec<usize>) -> Vec<usize> {
    v.reverse();
    v
}
