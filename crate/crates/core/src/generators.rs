//! Deterministic graph families and seeded random graphs and trees.
//!
//! Vertex numbering is part of each family's contract:
//! - `path(n)`: `0 - 1 - ... - n-1`.
//! - `cycle(n)`: the path plus the edge `n-1 - 0`.
//! - `complete_bipartite(a, b)`: parts `0..a` and `a..a+b`.
//! - `apex_cliques(sizes)`: apex `0`, then one clique per size in consecutive blocks.
//! - `subdivided_complete(k)`: branch vertices `0..k`, then one subdivision
//!   vertex per pair `{i, j}` in lexicographic pair order.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::rng::Lcg;
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("{family}: {reason}")]
    Invalid { family: &'static str, reason: String },
    #[error("unknown generator family {0:?}")]
    UnknownFamily(String),
    #[error("generator spec must look like gen:<family>:<params>, found {0:?}")]
    Syntax(String),
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GeneratorError {
    GeneratorError::Invalid {
        family,
        reason: reason.into(),
    }
}

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generated edges are in range and loop-free")
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(invalid("cycle", "needs at least 3 vertices"));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GeneratorError> {
    if a == 0 || b == 0 {
        return Err(invalid("complete-bipartite", "both parts must be non-empty"));
    }
    Ok(build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))))
}

/// Disjoint cliques of strictly increasing sizes plus an apex joined to everything.
pub fn apex_cliques(sizes: &[usize]) -> Result<Graph, GeneratorError> {
    if sizes.is_empty() {
        return Err(invalid("apex-cliques", "needs at least one clique size"));
    }
    if sizes[0] == 0 {
        return Err(invalid("apex-cliques", "clique sizes must be positive"));
    }
    if let Some(w) = sizes.windows(2).find(|w| w[0] >= w[1]) {
        return Err(invalid(
            "apex-cliques",
            format!("sizes must be strictly increasing, found {} then {}", w[0], w[1]),
        ));
    }
    let n = 1 + sizes.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    let mut start = 1;
    for &s in sizes {
        for a in start..start + s {
            edges.extend((a + 1..start + s).map(|b| (a, b)));
        }
        start += s;
    }
    Ok(build(n, edges))
}

/// `K_k` with every edge subdivided once.
pub fn subdivided_complete(k: usize) -> Result<Graph, GeneratorError> {
    if k < 2 {
        return Err(invalid("subdivided-complete", "k must be at least 2"));
    }
    let mut edges = Vec::with_capacity(k * (k - 1));
    let mut mid = k;
    for a in 0..k {
        for b in a + 1..k {
            edges.push((a, mid));
            edges.push((b, mid));
            mid += 1;
        }
    }
    Ok(build(mid, edges))
}

pub fn comparability_of(t: &Tree) -> Graph {
    t.comparability_graph()
}

/// Random rooted tree on `nodes >= 1` nodes: node `i > 0` hangs below a
/// uniformly chosen earlier node.
pub fn random_tree(nodes: usize, seed: u64) -> Result<Tree, GeneratorError> {
    if nodes == 0 {
        return Err(invalid("random-tree", "needs at least one node"));
    }
    let mut rng = Lcg::new(seed);
    let parents = (0..nodes)
        .map(|i| (i > 0).then(|| rng.below(i)))
        .collect();
    Ok(Tree::from_parents(parents).expect("parents precede their children"))
}

/// Erdős–Rényi graph on `n >= 1` vertices, made connected: each pair `u < v`
/// in lexicographic order becomes an edge with probability `p`; then every
/// component other than the one holding vertex 0, in order of least vertex,
/// gets one random edge to a random vertex of the components before it.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(invalid("random", "needs at least one vertex"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid("random", format!("edge probability {p} is not in [0, 1]")));
    }
    let mut rng = Lcg::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    let components = build(n, edges.iter().copied()).components();
    let mut earlier: Vec<usize> = components[0].iter().collect();
    for c in &components[1..] {
        let members: Vec<usize> = c.iter().collect();
        let inside = members[rng.below(members.len())];
        let outside = earlier[rng.below(earlier.len())];
        edges.push((outside, inside));
        earlier.extend(members);
    }
    Ok(build(n, edges))
}

/// A parsed `gen:<family>:<params>` specification.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    ApexCliques(Vec<usize>),
    SubdividedComplete(usize),
    Random { n: usize, p: f64, seed: u64 },
    TreeComparability { nodes: usize, seed: u64 },
}

pub const FAMILIES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "complete-bipartite",
    "apex-cliques",
    "subdivided-complete",
    "random",
    "tree-comparability",
];

impl GeneratorSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GeneratorSpec::Path(_) => "path",
            GeneratorSpec::Cycle(_) => "cycle",
            GeneratorSpec::Complete(_) => "complete",
            GeneratorSpec::CompleteBipartite(..) => "complete-bipartite",
            GeneratorSpec::ApexCliques(_) => "apex-cliques",
            GeneratorSpec::SubdividedComplete(_) => "subdivided-complete",
            GeneratorSpec::Random { .. } => "random",
            GeneratorSpec::TreeComparability { .. } => "tree-comparability",
        }
    }

    pub fn generate(&self) -> Result<Graph, GeneratorError> {
        match self {
            GeneratorSpec::Path(n) => Ok(path(*n)),
            GeneratorSpec::Cycle(n) => cycle(*n),
            GeneratorSpec::Complete(n) => Ok(complete(*n)),
            GeneratorSpec::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
            GeneratorSpec::ApexCliques(sizes) => apex_cliques(sizes),
            GeneratorSpec::SubdividedComplete(k) => subdivided_complete(*k),
            GeneratorSpec::Random { n, p, seed } => random_connected(*n, *p, *seed),
            GeneratorSpec::TreeComparability { nodes, seed } => {
                random_tree(*nodes, *seed).map(|t| comparability_of(&t))
            }
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GeneratorError;

    /// Accepts `gen:<family>:<p1>,<p2>,...`; the `gen:` prefix is optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.strip_prefix("gen:").unwrap_or(s);
        let (name, params) = body
            .split_once(':')
            .ok_or_else(|| GeneratorError::Syntax(s.to_string()))?;
        let family = *FAMILIES
            .iter()
            .find(|&&f| f == name)
            .ok_or_else(|| GeneratorError::UnknownFamily(name.to_string()))?;
        let fields: Vec<&str> = params.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize, GeneratorError> {
            fields
                .get(i)
                .and_then(|f| f.parse().ok())
                .ok_or_else(|| invalid(family, format!("parameter {} must be a non-negative integer", i + 1)))
        };
        let arity = |k: usize| -> Result<(), GeneratorError> {
            if fields.len() == k {
                Ok(())
            } else {
                Err(invalid(family, format!("expected {k} parameter(s), found {}", fields.len())))
            }
        };
        let spec = match family {
            "path" | "cycle" | "complete" | "subdivided-complete" => {
                arity(1)?;
                let n = int(0)?;
                match family {
                    "path" => GeneratorSpec::Path(n),
                    "cycle" => GeneratorSpec::Cycle(n),
                    "complete" => GeneratorSpec::Complete(n),
                    _ => GeneratorSpec::SubdividedComplete(n),
                }
            }
            "complete-bipartite" => {
                arity(2)?;
                GeneratorSpec::CompleteBipartite(int(0)?, int(1)?)
            }
            "apex-cliques" => GeneratorSpec::ApexCliques(
                (0..fields.len()).map(int).collect::<Result<_, _>>()?,
            ),
            "random" => {
                arity(3)?;
                let p = fields[1]
                    .parse()
                    .map_err(|_| invalid(family, "edge probability must be a number"))?;
                GeneratorSpec::Random {
                    n: int(0)?,
                    p,
                    seed: int(2)? as u64,
                }
            }
            _ => {
                arity(2)?;
                GeneratorSpec::TreeComparability {
                    nodes: int(0)?,
                    seed: int(1)? as u64,
                }
            }
        };
        Ok(spec)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gen:{}:", self.family())?;
        match self {
            GeneratorSpec::Path(n)
            | GeneratorSpec::Cycle(n)
            | GeneratorSpec::Complete(n)
            | GeneratorSpec::SubdividedComplete(n) => write!(f, "{n}"),
            GeneratorSpec::CompleteBipartite(a, b) => write!(f, "{a},{b}"),
            GeneratorSpec::ApexCliques(sizes) => {
                let parts: Vec<String> = sizes.iter().map(usize::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
            GeneratorSpec::Random { n, p, seed } => write!(f, "{n},{p},{seed}"),
            GeneratorSpec::TreeComparability { nodes, seed } => write!(f, "{nodes},{seed}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(path(3).edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert!(cycle(2).is_err());
        assert_eq!(complete(4).edge_count(), 6);
        let star = complete_bipartite(1, 3).unwrap();
        assert_eq!(star.edges().collect::<Vec<_>>(), [(0, 1), (0, 2), (0, 3)]);
        assert!(complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn apex_cliques_counts() {
        assert_eq!(apex_cliques(&[1]).unwrap(), complete(2));
        let g = apex_cliques(&[2, 3]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 9));
        let g = apex_cliques(&[2, 3, 4]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 1 + 3 + 6 + 9));
        assert!(apex_cliques(&[3, 3]).is_err());
        assert!(apex_cliques(&[]).is_err());
    }

    #[test]
    fn subdivided_complete_shape() {
        assert_eq!(subdivided_complete(2).unwrap().edges().collect::<Vec<_>>(), [(0, 2), (1, 2)]);
        let g = subdivided_complete(4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 12));
        assert!(g.neighbors(4) == [0, 1] && g.neighbors(9) == [2, 3]);
        assert!(subdivided_complete(1).is_err());
    }

    #[test]
    fn random_is_seeded_and_connected() {
        assert_eq!(random_tree(10, 42).unwrap(), random_tree(10, 42).unwrap());
        for seed in 0..50 {
            let g = random_connected(9, 0.1, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g, random_connected(9, 0.1, seed).unwrap());
        }
        assert_eq!(random_connected(6, 1.0, 3).unwrap(), complete(6));
        assert!(random_connected(3, 1.5, 0).is_err());
    }

    #[test]
    fn spec_parsing() {
        let cases = [
            ("gen:cycle:5", GeneratorSpec::Cycle(5)),
            ("gen:complete-bipartite:2,2", GeneratorSpec::CompleteBipartite(2, 2)),
            ("gen:apex-cliques:2,3", GeneratorSpec::ApexCliques(vec![2, 3])),
            ("gen:random:10,0.3,7", GeneratorSpec::Random { n: 10, p: 0.3, seed: 7 }),
            ("gen:tree-comparability:8,1", GeneratorSpec::TreeComparability { nodes: 8, seed: 1 }),
        ];
        for (text, spec) in cases {
            assert_eq!(text.parse::<GeneratorSpec>().unwrap(), spec);
            assert_eq!(spec.to_string(), text);
        }
        assert!(matches!("gen:nope:1".parse::<GeneratorSpec>(), Err(GeneratorError::UnknownFamily(_))));
        assert!(matches!("gen:cycle".parse::<GeneratorSpec>(), Err(GeneratorError::Syntax(_))));
        assert!("gen:cycle:x".parse::<GeneratorSpec>().is_err());
        assert!("gen:complete-bipartite:2".parse::<GeneratorSpec>().is_err());
    }
}
