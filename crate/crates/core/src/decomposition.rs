//! The cone decomposition `T_G` of a finite graph.
//!
//! Every node `t` carries a vertex `x_t` and a cone `C_t` containing it. Each
//! component of the graph yields a root whose vertex is the component's least
//! vertex and whose cone is the whole component. The children of `t`
//! correspond to the components `D` of `C_t - x_t`; the child's vertex is a
//! neighbour of `x_t` inside `D` at minimum distance (within `D`) from the
//! least vertex of `D`, ties going to the smaller vertex id.
//!
//! Nodes are numbered level by level, and children by the least vertex of
//! their cone, so node order is canonical.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{Graph, VertexSet};
use crate::minors::{verify_minor, MinorWitness};
use crate::tree::{Tree, TreeError};
use crate::SCHEMA_VERSION;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("decomposition has {nodes} nodes but the graph has {vertices} vertices")]
    Universe { nodes: usize, vertices: usize },
    #[error("node {node} refers to vertex {vertex}, outside the graph")]
    VertexOutOfRange { node: usize, vertex: usize },
    #[error("{field} has {actual} entries for {expected} nodes")]
    LengthMismatch {
        field: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("f-edge ({0}, {1}) is out of range or a loop")]
    BadEdge(usize, usize),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("invalid minor witness: {0}")]
    InvalidWitness(String),
    #[error("branch set {0} has no least carrying node")]
    NoLeastNode(usize),
    #[error("nodes {0} and {1} are comparable, not an antichain")]
    NotAntichain(usize, usize),
    #[error("malformed decomposition JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    tree: Tree,
    branch_vertex: Vec<usize>,
    cone: Vec<VertexSet>,
    f_edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct NodeJson {
    id: usize,
    parent: Option<usize>,
    vertex: usize,
    cone: VertexSet,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    schema: u32,
    nodes: Vec<NodeJson>,
    f_edges: Vec<[usize; 2]>,
}

/// Builds `T_G`; disconnected graphs give one root per component.
pub fn decompose(g: &Graph) -> Decomposition {
    let n = g.n();
    let mut parent: Vec<Option<usize>> = Vec::with_capacity(n);
    let mut branch_vertex = Vec::with_capacity(n);
    let mut cone: Vec<VertexSet> = Vec::with_capacity(n);

    let mut level = Vec::new();
    for component in g.components() {
        level.push(parent.len());
        parent.push(None);
        branch_vertex.push(component.first().expect("components are non-empty"));
        cone.push(component);
    }
    while !level.is_empty() {
        let mut next = Vec::new();
        for t in level {
            let x = branch_vertex[t];
            let rest = cone[t].without(x);
            for part in g.components_within(&rest) {
                let y = part.first().expect("components are non-empty");
                let dist = g.distances_where(&part.mask(n), y);
                let chosen = part
                    .iter()
                    .filter(|&c| g.adjacent(c, x))
                    .min_by_key(|&c| (dist[c], c))
                    .expect("a component of C_t - x_t touches x_t");
                next.push(parent.len());
                parent.push(Some(t));
                branch_vertex.push(chosen);
                cone.push(part);
            }
        }
        level = next;
    }

    let mut node_of = vec![0; n];
    for (t, &v) in branch_vertex.iter().enumerate() {
        node_of[v] = t;
    }
    let mut f_edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (node_of[u], node_of[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    f_edges.sort_unstable();

    Decomposition {
        tree: Tree::from_parents(parent).expect("construction only links to earlier nodes"),
        branch_vertex,
        cone,
        f_edges,
    }
}

impl Decomposition {
    /// Assembles a decomposition from raw parts without checking the
    /// construction rules; see [`verify_decomposition`].
    pub fn from_parts(
        tree: Tree,
        branch_vertex: Vec<usize>,
        cone: Vec<VertexSet>,
        f_edges: Vec<(usize, usize)>,
    ) -> Result<Self, DecompositionError> {
        let expected = tree.len();
        for (field, actual) in [("branch_vertex", branch_vertex.len()), ("cone", cone.len())] {
            if actual != expected {
                return Err(DecompositionError::LengthMismatch {
                    field,
                    expected,
                    actual,
                });
            }
        }
        let mut f_edges: Vec<(usize, usize)> = f_edges
            .into_iter()
            .map(|(a, b)| {
                if a == b || a.max(b) >= expected {
                    Err(DecompositionError::BadEdge(a, b))
                } else {
                    Ok((a.min(b), a.max(b)))
                }
            })
            .collect::<Result<_, _>>()?;
        f_edges.sort_unstable();
        f_edges.dedup();
        Ok(Decomposition {
            tree,
            branch_vertex,
            cone,
            f_edges,
        })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }

    /// The vertex `x_t` carried by node `t`.
    pub fn branch_vertex(&self, t: usize) -> usize {
        self.branch_vertex[t]
    }

    pub fn branch_vertices(&self) -> &[usize] {
        &self.branch_vertex
    }

    pub fn cone(&self, t: usize) -> &VertexSet {
        &self.cone[t]
    }

    /// Node pairs `(a, b)`, `a < b`, whose vertices are adjacent in the graph.
    pub fn f_edges(&self) -> &[(usize, usize)] {
        &self.f_edges
    }

    /// The graph `(T, F)` on the tree's nodes.
    pub fn f_graph(&self) -> Graph {
        Graph::from_edges(self.len(), self.f_edges.iter().copied())
            .expect("f-edges are validated on construction")
    }

    /// Node carrying each vertex, when the branch vertices are a bijection onto `0..len`.
    pub fn node_of_vertex(&self) -> Option<Vec<usize>> {
        let mut node_of = vec![None; self.len()];
        for (t, &v) in self.branch_vertex.iter().enumerate() {
            if v >= self.len() || node_of[v].replace(t).is_some() {
                return None;
            }
        }
        node_of.into_iter().collect()
    }

    /// The graph the decomposition was built from, recovered by carrying the
    /// f-edges back through the vertex/node bijection.
    pub fn underlying_graph(&self) -> Option<Graph> {
        self.node_of_vertex()?;
        let edges = self
            .f_edges
            .iter()
            .map(|&(a, b)| (self.branch_vertex[a], self.branch_vertex[b]));
        Graph::from_edges(self.len(), edges).ok()
    }

    pub fn to_json(&self) -> String {
        let nodes = (0..self.len())
            .map(|t| NodeJson {
                id: t,
                parent: self.tree.parent(t),
                vertex: self.branch_vertex[t],
                cone: self.cone[t].clone(),
            })
            .collect();
        let doc = DecompositionJson {
            schema: SCHEMA_VERSION,
            nodes,
            f_edges: self.f_edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&doc).expect("decompositions always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, DecompositionError> {
        let doc: DecompositionJson =
            serde_json::from_str(text).map_err(|e| DecompositionError::Json(e.to_string()))?;
        let mut nodes = doc.nodes;
        nodes.sort_by_key(|node| node.id);
        if nodes.iter().enumerate().any(|(i, node)| node.id != i) {
            return Err(DecompositionError::Json(
                "node ids must be 0..len".to_string(),
            ));
        }
        let tree = Tree::from_parents(nodes.iter().map(|node| node.parent).collect())?;
        let branch_vertex = nodes.iter().map(|node| node.vertex).collect();
        let cone = nodes.into_iter().map(|node| node.cone).collect();
        let f_edges = doc.f_edges.into_iter().map(|[a, b]| (a, b)).collect();
        Decomposition::from_parts(tree, branch_vertex, cone, f_edges)
    }

    /// DOT rendering of the tree, labelling each node with its vertex.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n");
        for t in 0..self.len() {
            out.push_str(&format!("  {t} [label=\"{t}:{}\"];\n", self.branch_vertex[t]));
        }
        for t in 0..self.len() {
            if let Some(p) = self.tree.parent(t) {
                out.push_str(&format!("  {p} -> {t};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Outcome of one named check of [`verify_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }
}

pub const CHECK_NAMES: [&str; 12] = [
    "partition",
    "vertex-in-cone",
    "cone-connected",
    "root-cones-are-components",
    "child-cones-are-components",
    "cone-nesting-matches-order",
    "successor-rule",
    "f-edges-match-graph",
    "comparability-subgraph",
    "t-graph",
    "quotient-reproduces-graph",
    "consumption-trace",
];

struct Recorder(Vec<CheckOutcome>);

impl Recorder {
    fn record(&mut self, name: &'static str, failure: Option<String>) {
        self.0.push(CheckOutcome {
            name,
            passed: failure.is_none(),
            detail: failure,
        });
    }
}

fn first_failure<I: IntoIterator<Item = Option<String>>>(items: I) -> Option<String> {
    items.into_iter().flatten().next()
}

/// Checks `d` against the construction rules for `g`, one outcome per rule.
pub fn verify_decomposition(
    g: &Graph,
    d: &Decomposition,
) -> Result<VerificationReport, DecompositionError> {
    let n = g.n();
    if d.len() != n {
        return Err(DecompositionError::Universe {
            nodes: d.len(),
            vertices: n,
        });
    }
    for t in 0..n {
        let v = d.branch_vertex[t];
        if let Some(bad) = std::iter::once(v).chain(d.cone[t].iter()).find(|&v| v >= n) {
            return Err(DecompositionError::VertexOutOfRange { node: t, vertex: bad });
        }
    }
    let tree = &d.tree;
    let mut rec = Recorder(Vec::new());
    let node_of = d.node_of_vertex();
    let needs_partition = || Some("requires a valid partition".to_string());

    rec.record(
        "partition",
        node_of
            .is_none()
            .then(|| "branch vertices are not a bijection onto the vertex set".to_string()),
    );
    rec.record(
        "vertex-in-cone",
        first_failure((0..n).map(|t| {
            (!d.cone[t].contains(d.branch_vertex[t]))
                .then(|| format!("node {t}: vertex {} outside its cone", d.branch_vertex[t]))
        })),
    );
    rec.record(
        "cone-connected",
        first_failure((0..n).map(|t| {
            (!g.is_connected_set(&d.cone[t])).then(|| format!("node {t}: cone is not connected"))
        })),
    );

    let mut roots: Vec<VertexSet> = tree.roots().map(|r| d.cone[r].clone()).collect();
    roots.sort();
    rec.record(
        "root-cones-are-components",
        (roots != g.components()).then(|| "root cones differ from the components".to_string()),
    );

    rec.record(
        "child-cones-are-components",
        first_failure((0..n).map(|t| {
            let mut expected = g.components_within(&d.cone[t].without(d.branch_vertex[t]));
            expected.sort();
            let mut actual: Vec<VertexSet> =
                tree.children(t).iter().map(|&c| d.cone[c].clone()).collect();
            actual.sort();
            (expected != actual).then(|| {
                format!("node {t}: child cones are not the components of its cone minus its vertex")
            })
        })),
    );

    rec.record(
        "cone-nesting-matches-order",
        first_failure((0..n).flat_map(|s| (0..n).map(move |t| (s, t))).map(|(s, t)| {
            let proper = d.cone[t].len() < d.cone[s].len() && d.cone[t].is_subset(&d.cone[s]);
            (s != t && tree.lt(s, t) != proper).then(|| {
                format!("nodes {s}, {t}: tree order and cone containment disagree")
            })
        })),
    );

    rec.record(
        "successor-rule",
        first_failure((0..n).map(|t| {
            let x = d.branch_vertex[t];
            let cone = &d.cone[t];
            let Some(y) = cone.first() else {
                return Some(format!("node {t}: empty cone"));
            };
            match tree.parent(t) {
                None => (x != y).then(|| format!("root {t}: vertex {x} is not the least of its cone")),
                Some(s) => {
                    let xs = d.branch_vertex[s];
                    if !g.adjacent(x, xs) {
                        return Some(format!("node {t}: vertex {x} not adjacent to parent vertex {xs}"));
                    }
                    let dist = g.distances_where(&cone.mask(n), y);
                    let best = cone
                        .iter()
                        .filter(|&c| g.adjacent(c, xs))
                        .min_by_key(|&c| (dist[c], c));
                    (best != Some(x)).then(|| {
                        format!("node {t}: vertex {x} is not the closest neighbour of {xs} to {y}")
                    })
                }
            }
        })),
    );

    match &node_of {
        None => {
            for name in ["f-edges-match-graph", "quotient-reproduces-graph", "consumption-trace"] {
                rec.record(name, needs_partition());
            }
        }
        Some(node_of) => {
            let mut transported: Vec<(usize, usize)> = g
                .edges()
                .map(|(u, v)| {
                    let (a, b) = (node_of[u], node_of[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            transported.sort_unstable();
            rec.record(
                "f-edges-match-graph",
                (transported != d.f_edges)
                    .then(|| "f-edges differ from the graph's edges".to_string()),
            );
        }
    }

    rec.record(
        "comparability-subgraph",
        first_failure(d.f_edges.iter().map(|&(a, b)| {
            (!tree.comparable(a, b)).then(|| format!("f-edge ({a}, {b}) joins incomparable nodes"))
        })),
    );
    let f_graph = d.f_graph();
    rec.record(
        "t-graph",
        (!tree.is_t_graph(&f_graph)?)
            .then(|| "(T, F) is not a T-graph".to_string()),
    );

    if let Some(node_of) = &node_of {
        let blocks: Vec<VertexSet> = d.branch_vertex.iter().map(|&v| VertexSet::singleton(v)).collect();
        let quotient = g.quotient(&blocks).ok();
        rec.record(
            "quotient-reproduces-graph",
            (quotient.as_ref() != Some(&f_graph))
                .then(|| "contracting the blocks does not give (T, F)".to_string()),
        );
        rec.record(
            "consumption-trace",
            first_failure((0..n).map(|t| {
                let cone = &d.cone[t];
                let y = cone.first()?;
                let carrier = node_of[y];
                let dist = g.distances_where(&cone.mask(n), d.branch_vertex[t])[y];
                let ok = tree.le(t, carrier)
                    && dist.is_some_and(|dist| tree.ht(carrier) - tree.ht(t) <= dist);
                (!ok).then(|| {
                    format!("node {t}: least cone vertex {y} is not consumed within its distance")
                })
            })),
        );
    }

    // Keep the report in the canonical check order.
    rec.0
        .sort_by_key(|c| CHECK_NAMES.iter().position(|&name| name == c.name));
    Ok(VerificationReport { checks: rec.0 })
}

/// Colours each vertex by the height of the node carrying it. Proper because
/// adjacent vertices sit on comparable, hence differently high, nodes.
pub fn level_coloring(d: &Decomposition) -> Coloring {
    let mut colors = vec![0; d.len()];
    for t in 0..d.len() {
        colors[d.branch_vertex[t]] = d.tree.ht(t);
    }
    Coloring::new(colors)
}

/// For each branch set of a clique-minor witness, the least node carrying
/// one of its vertices. The returned nodes form a chain, sorted by height.
pub fn chain_from_minor(
    d: &Decomposition,
    w: &MinorWitness,
) -> Result<Vec<usize>, DecompositionError> {
    let (Some(g), Some(node_of)) = (d.underlying_graph(), d.node_of_vertex()) else {
        return Err(DecompositionError::InvalidWitness(
            "decomposition does not partition its vertices".into(),
        ));
    };
    let check = verify_minor(&g, w);
    if let Some(violation) = check.violation {
        return Err(DecompositionError::InvalidWitness(violation.to_string()));
    }
    let tree = &d.tree;
    let mut chain = Vec::with_capacity(w.k());
    for (i, set) in w.branch_sets().iter().enumerate() {
        let nodes: Vec<usize> = set.iter().map(|v| node_of[v]).collect();
        let least = *nodes
            .iter()
            .min_by_key(|&&t| (tree.ht(t), t))
            .expect("branch sets are non-empty");
        if !nodes.iter().all(|&t| tree.le(least, t)) {
            return Err(DecompositionError::NoLeastNode(i));
        }
        chain.push(least);
    }
    chain.sort_by_key(|&t| (tree.ht(t), t));
    Ok(chain)
}

/// Vertices carried by the nodes of an antichain; independent in the graph.
pub fn independent_from_antichain(
    d: &Decomposition,
    antichain: &[usize],
) -> Result<VertexSet, DecompositionError> {
    for (i, &s) in antichain.iter().enumerate() {
        if s >= d.len() {
            return Err(TreeError::NodeOutOfRange { node: s, len: d.len() }.into());
        }
        if let Some(&t) = antichain[i + 1..].iter().find(|&&t| d.tree.comparable(s, t)) {
            return Err(DecompositionError::NotAntichain(s, t));
        }
    }
    Ok(antichain.iter().map(|&t| d.branch_vertex[t]).collect())
}
