//! Tree partitions: a rooted forest whose nodes carry connected vertex
//! blocks, with edges only between blocks of comparable nodes. Colouring a
//! graph from a specializing function on such a tree.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{Graph, ParseError, VertexSet};
use crate::tree::{SpecializingFunction, Tree, TreeError};

/// The violated clause of a tree partition or of its specializing function.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("tree has {nodes} nodes but {blocks} blocks are given")]
    BlockCount { nodes: usize, blocks: usize },
    #[error("block of node {0} is empty")]
    EmptyBlock(usize),
    #[error("block of node {node} contains vertex {vertex}, which is out of range")]
    VertexOutOfRange { node: usize, vertex: usize },
    #[error("vertex {vertex} lies in the blocks of nodes {first} and {second}")]
    Overlap { vertex: usize, first: usize, second: usize },
    #[error("vertex {0} lies in no block")]
    Uncovered(usize),
    #[error("block of node {0} does not induce a connected subgraph")]
    DisconnectedBlock(usize),
    #[error("edge {u}-{v} joins blocks of incomparable nodes {s} and {t}")]
    IncomparableEdge { u: usize, v: usize, s: usize, t: usize },
    #[error("block of node {0} has no edge to its parent's block")]
    DetachedFromParent(usize),
    #[error("labelling is not specializing: nodes {0} and {1} are comparable and share a label")]
    NotSpecializing(usize, usize),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePartition {
    tree: Tree,
    blocks: Vec<VertexSet>,
}

impl TreePartition {
    /// Pairs a tree with its blocks without checking them against a graph.
    pub fn new(tree: Tree, blocks: Vec<VertexSet>) -> Result<Self, PartitionError> {
        if tree.len() != blocks.len() {
            return Err(PartitionError::BlockCount {
                nodes: tree.len(),
                blocks: blocks.len(),
            });
        }
        Ok(TreePartition { tree, blocks })
    }

    /// Singleton blocks, one per node of a decomposition.
    pub fn from_decomposition(d: &crate::decomposition::Decomposition) -> Self {
        TreePartition {
            tree: d.tree().clone(),
            blocks: d
                .branch_vertices()
                .iter()
                .map(|&v| VertexSet::singleton(v))
                .collect(),
        }
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block(&self, t: usize) -> &VertexSet {
        &self.blocks[t]
    }

    /// Largest block size.
    pub fn max_block(&self) -> usize {
        self.blocks.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Checks every clause against `g`, reporting the first one violated.
    pub fn validate(&self, g: &Graph) -> Result<(), PartitionError> {
        let owner = self.owners(g)?;
        for (t, block) in self.blocks.iter().enumerate() {
            if !g.is_connected_set(block) {
                return Err(PartitionError::DisconnectedBlock(t));
            }
        }
        for (u, v) in g.edges() {
            let (s, t) = (owner[u], owner[v]);
            if !self.tree.comparable(s, t) {
                return Err(PartitionError::IncomparableEdge { u, v, s, t });
            }
        }
        for t in 0..self.tree.len() {
            if let Some(p) = self.tree.parent(t) {
                let joined = self.blocks[t]
                    .iter()
                    .any(|u| g.neighbors(u).iter().any(|&v| owner[v] == p));
                if !joined {
                    return Err(PartitionError::DetachedFromParent(t));
                }
            }
        }
        Ok(())
    }

    fn owners(&self, g: &Graph) -> Result<Vec<usize>, PartitionError> {
        let mut owner = vec![usize::MAX; g.n()];
        for (t, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock(t));
            }
            for v in block.iter() {
                if v >= g.n() {
                    return Err(PartitionError::VertexOutOfRange { node: t, vertex: v });
                }
                if owner[v] != usize::MAX {
                    return Err(PartitionError::Overlap {
                        vertex: v,
                        first: owner[v],
                        second: t,
                    });
                }
                owner[v] = t;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(PartitionError::Uncovered(v));
        }
        Ok(owner)
    }

    /// One line per node, `node parent v1 v2 ...`, roots with parent `-1`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut rows: Vec<(usize, Option<usize>, VertexSet, usize)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| ParseError { line, message };
            let mut tokens = content.split_whitespace();
            let (Some(node), Some(parent)) = (tokens.next(), tokens.next()) else {
                return Err(err(format!("expected `node parent v1 v2 ...`, found {content:?}")));
            };
            let node: usize = node.parse().map_err(|_| err(format!("bad node id {node:?}")))?;
            let parent = match parent.parse::<i64>() {
                Ok(-1) => None,
                Ok(p) if p >= 0 => Some(p as usize),
                _ => return Err(err(format!("bad parent {parent:?}"))),
            };
            let block = tokens
                .map(|tok| tok.parse::<usize>().map_err(|_| err(format!("bad vertex {tok:?}"))))
                .collect::<Result<VertexSet, _>>()?;
            rows.push((node, parent, block, line));
        }
        let len = rows.len();
        let mut parents = vec![None; len];
        let mut blocks = vec![VertexSet::new(); len];
        let mut seen = vec![false; len];
        for (node, parent, block, line) in rows {
            if node >= len || std::mem::replace(&mut seen[node], true) {
                return Err(ParseError {
                    line,
                    message: format!("node ids must be a permutation of 0..{len}"),
                });
            }
            parents[node] = parent;
            blocks[node] = block;
        }
        let tree = Tree::from_parents(parents).map_err(|e| ParseError {
            line: 0,
            message: e.to_string(),
        })?;
        Ok(TreePartition { tree, blocks })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (t, block) in self.blocks.iter().enumerate() {
            let parent = self.tree.parent(t).map_or(-1, |p| p as i64);
            let _ = write!(out, "{t} {parent}");
            for v in block.iter() {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }
}

/// Colours `v` in the block of node `t` by `f(t) * B + rank`, where `B` is
/// the largest block size and `rank` the position of `v` in its block.
pub fn coloring_from_specializing(
    g: &Graph,
    p: &TreePartition,
    f: &SpecializingFunction,
) -> Result<Coloring, PartitionError> {
    p.validate(g)?;
    let tree = p.tree();
    if !tree.is_specializing(f)? {
        let (s, t) = (0..tree.len())
            .find_map(|t| tree.ancestors(t).find(|&s| f.label(s) == f.label(t)).map(|s| (s, t)))
            .expect("a non-specializing labelling has a clash");
        return Err(PartitionError::NotSpecializing(s, t));
    }
    let width = p.max_block();
    let mut colors = vec![0; g.n()];
    for (t, block) in p.blocks().iter().enumerate() {
        for (rank, v) in block.iter().enumerate() {
            colors[v] = f.label(t) * width + rank;
        }
    }
    Ok(Coloring::new(colors))
}
