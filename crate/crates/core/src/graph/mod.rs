//! Finite simple undirected graphs on the vertex set `0..n`.

mod connectivity;
mod io;
mod separator;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use io::ParseError;
pub use separator::Separator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} is not in the restricting set")]
    NotInSet(usize),
    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),
    #[error("vertex set must be non-empty")]
    EmptySet,
    #[error("part {0} is empty")]
    EmptyPart(usize),
    #[error("part {0} does not induce a connected subgraph")]
    DisconnectedPart(usize),
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// Builds a set from an already sorted, duplicate-free vector.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn without(&self, v: usize) -> VertexSet {
        VertexSet(self.iter().filter(|&u| u != v).collect())
    }

    /// Indicator vector over `0..n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An immutable finite simple graph. Adjacency lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut degree_sum = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: degree_sum / 2,
        })
    }

    /// Graph on `n <= 64` vertices from adjacency bitmasks.
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        let edges = (0..n).flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| masks[u] >> v & 1 == 1)
                .map(move |v| (u, v))
        });
        Graph::from_edges(n, edges).expect("bitmask adjacency is always simple")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n()).collect())
    }

    /// Adjacency bitmasks, available for graphs on at most 64 vertices.
    pub fn masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect(),
        )
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        set.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// Subgraph induced by `set`, relabelled so that the i-th smallest member becomes vertex i.
    pub fn induced(&self, set: &VertexSet) -> Graph {
        let index = |v: usize| set.as_slice().binary_search(&v).ok();
        let adj = set
            .iter()
            .map(|u| self.adj[u].iter().filter_map(|&v| index(v)).collect())
            .collect::<Vec<Vec<usize>>>();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, edge_count }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let edges = (0..n).flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| !self.adjacent(u, v))
                .map(move |v| (u, v))
        });
        Graph::from_edges(n, edges).expect("complement of a simple graph is simple")
    }

    /// Components of the subgraph induced by the vertices flagged in `alive`,
    /// each sorted, listed by least member.
    pub(crate) fn components_where(&self, alive: &[bool]) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if !alive[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &v in &self.adj[u] {
                    if alive[v] && !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(VertexSet(members));
        }
        out
    }

    /// Connected components, sorted by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_where(&vec![true; self.n()])
    }

    /// Components of the subgraph induced by `within`, in ambient vertex ids.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        self.components_where(&within.mask(self.n()))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_connected_set(&self, set: &VertexSet) -> bool {
        !set.is_empty() && self.components_within(set).len() == 1
    }

    /// BFS distances from `source` inside the subgraph induced by `alive`.
    pub(crate) fn distances_where(&self, alive: &[bool], source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &v in &self.adj[u] {
                if alive[v] && dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Length of a shortest `u`–`v` path using only vertices of `within`;
    /// `None` when no such path exists.
    pub fn distance(
        &self,
        within: &VertexSet,
        u: usize,
        v: usize,
    ) -> Result<Option<usize>, GraphError> {
        self.check_set(within)?;
        for w in [u, v] {
            if !within.contains(w) {
                return Err(GraphError::NotInSet(w));
            }
        }
        Ok(self.distances_where(&within.mask(self.n()), u)[v])
    }

    /// Contracts each part to a single vertex; part `i` becomes vertex `i`.
    pub fn quotient(&self, parts: &[VertexSet]) -> Result<Graph, GraphError> {
        let mut owner = vec![None; self.n()];
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(GraphError::EmptyPart(i));
            }
            self.check_set(part)?;
            for v in part.iter() {
                if owner[v].replace(i).is_some() {
                    return Err(GraphError::Overlap(v));
                }
            }
            if !self.is_connected_set(part) {
                return Err(GraphError::DisconnectedPart(i));
            }
        }
        let edges = self.edges().filter_map(|(u, v)| match (owner[u], owner[v]) {
            (Some(a), Some(b)) if a != b => Some((a, b)),
            _ => None,
        });
        Graph::from_edges(parts.len(), edges)
    }

    /// True when no edge joins two members of `set`.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|u| self.adj[u].iter().all(|&v| !set.contains(v)))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let members = set.as_slice();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    /// A maximum clique (branch and bound with a greedy colouring bound).
    /// Among maximum cliques the search returns the first one it meets.
    pub fn max_clique(&self) -> VertexSet {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let mut best = Vec::new();
        let mut current = Vec::new();
        self.expand_clique(&mut current, order, &mut best);
        best.into_iter().collect()
    }

    fn expand_clique(&self, current: &mut Vec<usize>, candidates: Vec<usize>, best: &mut Vec<usize>) {
        if candidates.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        // Greedy colouring of the candidates bounds the clique they can still add.
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut bound = Vec::with_capacity(candidates.len());
        for &v in &candidates {
            let class = classes
                .iter()
                .position(|c| c.iter().all(|&u| !self.adjacent(u, v)));
            let class = match class {
                Some(c) => c,
                None => {
                    classes.push(Vec::new());
                    classes.len() - 1
                }
            };
            classes[class].push(v);
            bound.push((class + 1, v));
        }
        bound.sort_by_key(|&(c, v)| (c, std::cmp::Reverse(v)));
        let mut remaining: Vec<usize> = bound.iter().map(|&(_, v)| v).collect();
        while let Some((colors, v)) = bound.pop() {
            if current.len() + colors <= best.len() {
                return;
            }
            remaining.pop();
            current.push(v);
            let next = remaining
                .iter()
                .copied()
                .filter(|&u| self.adjacent(u, v))
                .collect();
            self.expand_clique(current, next, best);
            current.pop();
        }
    }

    pub fn clique_number(&self) -> usize {
        self.max_clique().len()
    }

    pub fn independence_number(&self) -> usize {
        self.complement().clique_number()
    }
}
