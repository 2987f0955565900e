//! Finite rooted forests viewed as posets: `s <= t` iff `s` is an ancestor of `t`
//! (or `t` itself).

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, ParseError};

/// Branch and antichain enumeration refuse trees with more maximal sets than this.
pub const MAX_ENUMERATED: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("node {node} has parent {parent}, which is out of range")]
    ParentOutOfRange { node: usize, parent: usize },
    #[error("node {0} lies on a parent cycle")]
    Cycle(usize),
    #[error("node {node} is out of range for a tree with {len} nodes")]
    NodeOutOfRange { node: usize, len: usize },
    #[error("expected {expected} entries, found {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("label {label} at node {node} is not below the colour count {k}")]
    LabelOutOfRange { node: usize, label: usize, k: usize },
    #[error("{count} maximal sets exceed the enumeration limit {limit}")]
    TooMany { count: u128, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    parent: Vec<Option<usize>>,
    height: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a forest from a parent map (`None` marks a root). Children of
    /// every node are kept in increasing node order.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Tree, TreeError> {
        let len = parent.len();
        let mut children = vec![Vec::new(); len];
        for (node, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= len {
                    return Err(TreeError::ParentOutOfRange { node, parent: p });
                }
                children[p].push(node);
            }
        }
        let mut height = vec![usize::MAX; len];
        let mut stack = Vec::new();
        for start in 0..len {
            let mut t = start;
            while height[t] == usize::MAX {
                if stack.len() > len {
                    return Err(TreeError::Cycle(start));
                }
                stack.push(t);
                match parent[t] {
                    None => break,
                    Some(p) => t = p,
                }
            }
            while let Some(t) = stack.pop() {
                height[t] = match parent[t] {
                    None => 0,
                    Some(p) => height[p] + 1,
                };
            }
        }
        Ok(Tree {
            parent,
            height,
            children,
        })
    }

    /// A single chain `0 < 1 < ... < len-1`.
    pub fn chain(len: usize) -> Tree {
        Tree::from_parents((0..len).map(|t| t.checked_sub(1)).collect())
            .expect("a chain is a valid tree")
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.parent[t]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Height of a node: the number of its strict predecessors.
    pub fn ht(&self, t: usize) -> usize {
        self.height[t]
    }

    pub fn children(&self, t: usize) -> &[usize] {
        &self.children[t]
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&t| self.parent[t].is_none())
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&t| self.children[t].is_empty())
            .collect()
    }

    /// Length of a longest chain (0 for the empty tree).
    pub fn height(&self) -> usize {
        self.height.iter().map(|h| h + 1).max().unwrap_or(0)
    }

    fn check_node(&self, t: usize) -> Result<(), TreeError> {
        if t < self.len() {
            Ok(())
        } else {
            Err(TreeError::NodeOutOfRange {
                node: t,
                len: self.len(),
            })
        }
    }

    /// `s <= t` in tree order.
    pub fn le(&self, s: usize, mut t: usize) -> bool {
        while self.height[t] > self.height[s] {
            t = self.parent[t].expect("non-root nodes have parents");
        }
        s == t
    }

    pub fn lt(&self, s: usize, t: usize) -> bool {
        s != t && self.le(s, t)
    }

    pub fn comparable(&self, s: usize, t: usize) -> bool {
        self.le(s, t) || self.le(t, s)
    }

    /// Strict predecessors of `t`, nearest first.
    pub fn ancestors(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(self.parent[t], move |&s| self.parent[s])
    }

    /// Graph on the nodes with an edge between every comparable pair.
    pub fn comparability_graph(&self) -> Graph {
        let edges = (0..self.len()).flat_map(|t| self.ancestors(t).map(move |s| (s, t)));
        Graph::from_edges(self.len(), edges).expect("tree order is irreflexive")
    }

    /// Graph whose edges join every non-root node to its parent.
    pub fn parent_graph(&self) -> Graph {
        let edges = (0..self.len()).filter_map(|t| self.parent[t].map(|p| (p, t)));
        Graph::from_edges(self.len(), edges).expect("tree order is irreflexive")
    }

    /// Nodes grouped by height, each level in increasing node order.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let mut levels = vec![Vec::new(); self.height()];
        for t in 0..self.len() {
            levels[self.height[t]].push(t);
        }
        levels
    }

    pub fn is_chain(&self, nodes: &[usize]) -> Result<bool, TreeError> {
        nodes.iter().try_for_each(|&t| self.check_node(t))?;
        Ok(nodes
            .iter()
            .enumerate()
            .all(|(i, &s)| nodes[i + 1..].iter().all(|&t| self.comparable(s, t))))
    }

    pub fn is_antichain(&self, nodes: &[usize]) -> Result<bool, TreeError> {
        nodes.iter().try_for_each(|&t| self.check_node(t))?;
        Ok(nodes
            .iter()
            .enumerate()
            .all(|(i, &s)| nodes[i + 1..].iter().all(|&t| !self.comparable(s, t))))
    }

    /// Size of a largest antichain, by Dilworth's theorem: the number of
    /// nodes minus a maximum matching in the strict-order bipartite graph.
    pub fn width(&self) -> usize {
        let len = self.len();
        let above: Vec<Vec<usize>> = (0..len)
            .map(|s| (0..len).filter(|&t| self.lt(s, t)).collect())
            .collect();
        let mut matched_to: Vec<Option<usize>> = vec![None; len];
        let mut matching = 0;
        for s in 0..len {
            let mut visited = vec![false; len];
            if augment(s, &above, &mut matched_to, &mut visited) {
                matching += 1;
            }
        }
        len - matching
    }

    /// `(largest antichain, longest chain)`.
    pub fn width_and_height(&self) -> (usize, usize) {
        (self.width(), self.height())
    }

    /// Maximal chains, each listed root first. Their number equals the number of leaves.
    pub fn branches(&self) -> Result<Vec<Vec<usize>>, TreeError> {
        let leaves = self.leaves();
        if leaves.len() > MAX_ENUMERATED {
            return Err(TreeError::TooMany {
                count: leaves.len() as u128,
                limit: MAX_ENUMERATED,
            });
        }
        Ok(leaves.into_iter().map(|leaf| self.branch_to(leaf)).collect())
    }

    /// The chain from the root down to `t`.
    pub fn branch_to(&self, t: usize) -> Vec<usize> {
        let mut chain: Vec<usize> = self.ancestors(t).collect();
        chain.reverse();
        chain.push(t);
        chain
    }

    fn antichain_count(&self, t: usize) -> u128 {
        let below = self.children[t]
            .iter()
            .fold(1u128, |acc, &c| acc.saturating_mul(self.antichain_count(c)));
        if self.children[t].is_empty() {
            1
        } else {
            below.saturating_add(1)
        }
    }

    fn antichains_below(&self, t: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![t]];
        if !self.children[t].is_empty() {
            out.extend(product(
                self.children[t].iter().map(|&c| self.antichains_below(c)),
            ));
        }
        out
    }

    /// Every maximal antichain, each sorted. In a forest these are obtained by
    /// picking, in each subtree, either its root or a maximal antichain of
    /// every child subtree.
    pub fn maximal_antichains(&self) -> Result<Vec<Vec<usize>>, TreeError> {
        let count = self
            .roots()
            .fold(1u128, |acc, r| acc.saturating_mul(self.antichain_count(r)));
        if count > MAX_ENUMERATED as u128 {
            return Err(TreeError::TooMany {
                count,
                limit: MAX_ENUMERATED,
            });
        }
        if self.is_empty() {
            return Ok(Vec::new());
        }
        let mut all: Vec<Vec<usize>> = product(self.roots().map(|r| self.antichains_below(r)));
        for a in &mut all {
            a.sort_unstable();
        }
        Ok(all)
    }

    pub fn is_specializing(&self, f: &SpecializingFunction) -> Result<bool, TreeError> {
        if f.labels.len() != self.len() {
            return Err(TreeError::LengthMismatch {
                expected: self.len(),
                actual: f.labels.len(),
            });
        }
        Ok((0..self.len()).all(|t| self.ancestors(t).all(|s| f.labels[s] != f.labels[t])))
    }

    /// `h` is a T-graph on this tree: every edge joins comparable nodes, and
    /// every non-root node is adjacent to its parent.
    pub fn is_t_graph(&self, h: &Graph) -> Result<bool, TreeError> {
        if h.n() != self.len() {
            return Err(TreeError::LengthMismatch {
                expected: self.len(),
                actual: h.n(),
            });
        }
        let comparable_edges = h.edges().all(|(s, t)| self.comparable(s, t));
        let parent_edges =
            (0..self.len()).all(|t| self.parent[t].is_none_or(|p| h.adjacent(p, t)));
        Ok(comparable_edges && parent_edges)
    }

    /// One `node parent height` line per node; roots carry parent `-1`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in 0..self.len() {
            let parent = self.parent[t].map_or(-1, |p| p as i64);
            let _ = writeln!(out, "{t} {parent} {}", self.height[t]);
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Tree, ParseError> {
        let mut rows: Vec<(usize, Option<usize>, usize, usize)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| ParseError { line, message };
            let fields: Vec<&str> = content.split_whitespace().collect();
            let [node, parent, height] = fields.as_slice() else {
                return Err(err(format!("expected `node parent height`, found {content:?}")));
            };
            let node: usize = node
                .parse()
                .map_err(|_| err(format!("bad node id {node:?}")))?;
            let parent: i64 = parent
                .parse()
                .map_err(|_| err(format!("bad parent {parent:?}")))?;
            let height: usize = height
                .parse()
                .map_err(|_| err(format!("bad height {height:?}")))?;
            let parent = match parent {
                -1 => None,
                p if p >= 0 => Some(p as usize),
                p => return Err(err(format!("bad parent {p}"))),
            };
            rows.push((node, parent, height, line));
        }
        let len = rows.len();
        let mut parent = vec![None; len];
        let mut seen = vec![false; len];
        for &(node, p, _, line) in &rows {
            if node >= len || std::mem::replace(&mut seen[node], true) {
                return Err(ParseError {
                    line,
                    message: format!("node ids must be a permutation of 0..{len}"),
                });
            }
            parent[node] = p;
        }
        let tree = Tree::from_parents(parent).map_err(|e| ParseError {
            line: 0,
            message: e.to_string(),
        })?;
        for &(node, _, height, line) in &rows {
            if tree.ht(node) != height {
                return Err(ParseError {
                    line,
                    message: format!(
                        "node {node} declares height {height} but its height is {}",
                        tree.ht(node)
                    ),
                });
            }
        }
        Ok(tree)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n");
        for t in 0..self.len() {
            let _ = writeln!(out, "  {t};");
        }
        for t in 0..self.len() {
            if let Some(p) = self.parent[t] {
                let _ = writeln!(out, "  {p} -> {t};");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn augment(
    s: usize,
    above: &[Vec<usize>],
    matched_to: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &t in &above[s] {
        if visited[t] {
            continue;
        }
        visited[t] = true;
        if matched_to[t].is_none_or(|other| augment(other, above, matched_to, visited)) {
            matched_to[t] = Some(s);
            return true;
        }
    }
    false
}

/// Cartesian product of lists of node sets, concatenating the chosen sets.
fn product(factors: impl Iterator<Item = Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    factors.fold(vec![Vec::new()], |acc, options| {
        acc.iter()
            .flat_map(|prefix| {
                options.iter().map(move |choice| {
                    let mut joined = prefix.clone();
                    joined.extend_from_slice(choice);
                    joined
                })
            })
            .collect()
    })
}

/// A node labelling into `0..k`; specializing when injective on every chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializingFunction {
    labels: Vec<usize>,
    k: usize,
}

impl SpecializingFunction {
    pub fn new(labels: Vec<usize>, k: usize) -> Result<Self, TreeError> {
        if let Some((node, &label)) = labels.iter().enumerate().find(|(_, &l)| l >= k) {
            return Err(TreeError::LabelOutOfRange { node, label, k });
        }
        Ok(SpecializingFunction { labels, k })
    }

    /// `f = ht`, using as many labels as the tree is high.
    pub fn heights(tree: &Tree) -> Self {
        SpecializingFunction {
            labels: (0..tree.len()).map(|t| tree.ht(t)).collect(),
            k: tree.height(),
        }
    }

    pub fn label(&self, t: usize) -> usize {
        self.labels[t]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> Tree {
        Tree::from_parents(vec![None, Some(0), Some(0), Some(0)]).unwrap()
    }

    /// Complete binary tree with 7 nodes, heap-numbered.
    fn binary7() -> Tree {
        Tree::from_parents((0..7).map(|t: usize| t.checked_sub(1).map(|p| p / 2)).collect()).unwrap()
    }

    fn brute_width(t: &Tree) -> usize {
        (0u32..1 << t.len())
            .filter(|&mask| {
                let nodes: Vec<usize> = (0..t.len()).filter(|&i| mask >> i & 1 == 1).collect();
                t.is_antichain(&nodes).unwrap()
            })
            .map(u32::count_ones)
            .max()
            .unwrap() as usize
    }

    #[test]
    fn rejects_cycles_and_bad_parents() {
        assert_eq!(
            Tree::from_parents(vec![Some(1), Some(0)]),
            Err(TreeError::Cycle(0))
        );
        assert_eq!(
            Tree::from_parents(vec![Some(0)]),
            Err(TreeError::Cycle(0))
        );
        assert!(matches!(
            Tree::from_parents(vec![None, Some(5)]),
            Err(TreeError::ParentOutOfRange { node: 1, parent: 5 })
        ));
    }

    #[test]
    fn heights_follow_parents() {
        let t = Tree::from_parents(vec![Some(2), None, Some(1), Some(0)]).unwrap();
        assert_eq!((0..4).map(|x| t.ht(x)).collect::<Vec<_>>(), vec![2, 0, 1, 3]);
        assert_eq!(t.height(), 4);
    }

    #[test]
    fn comparability_graph_examples() {
        let k3 = Tree::chain(3).comparability_graph();
        assert_eq!(k3.edge_count(), 3);
        let s = star().comparability_graph();
        assert_eq!(s, Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap());
        let b = binary7().comparability_graph();
        assert_eq!(b.clique_number(), 3);
        assert_eq!(b.independence_number(), 4);
    }

    #[test]
    fn levels_examples() {
        assert_eq!(Tree::chain(3).levels(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(star().levels(), vec![vec![0], vec![1, 2, 3]]);
        let forest = Tree::from_parents(vec![None, None]).unwrap();
        assert_eq!(forest.levels(), vec![vec![0, 1]]);
    }

    #[test]
    fn chain_and_antichain_examples() {
        assert!(Tree::chain(3).is_chain(&[0, 1, 2]).unwrap());
        assert!(star().is_antichain(&[1, 2, 3]).unwrap());
        let t = Tree::chain(3);
        assert!(t.is_chain(&[1, 2]).unwrap());
        assert!(!t.is_antichain(&[1, 2]).unwrap());
        assert!(t.is_chain(&[4]).is_err());
    }

    #[test]
    fn width_and_height_examples() {
        assert_eq!(Tree::chain(3).width_and_height(), (1, 3));
        assert_eq!(star().width_and_height(), (3, 2));
        assert_eq!(binary7().width_and_height(), (4, 3));
        assert_eq!(brute_width(&binary7()), 4);
        assert_eq!(Tree::from_parents(vec![]).unwrap().width_and_height(), (0, 0));
    }

    #[test]
    fn dilworth_width_matches_leaves_and_brute_force() {
        let trees = [
            Tree::from_parents(vec![None, Some(0), Some(1), Some(1), None, Some(4), Some(2)]).unwrap(),
            binary7(),
            star(),
            Tree::chain(5),
        ];
        for t in &trees {
            assert_eq!(t.width(), t.leaves().len());
            assert_eq!(t.width(), brute_width(t));
        }
    }

    #[test]
    fn specializing_examples() {
        let b = binary7();
        assert!(b.is_specializing(&SpecializingFunction::heights(&b)).unwrap());
        assert_eq!(SpecializingFunction::heights(&b).k(), 3);
        let constant = SpecializingFunction::new(vec![0, 0], 1).unwrap();
        assert!(!Tree::chain(2).is_specializing(&constant).unwrap());
        // No 2-labelling specializes a tree containing a 3-chain.
        let any_two = (0u32..1 << 7).any(|mask| {
            let labels = (0..7).map(|i| (mask >> i & 1) as usize).collect();
            b.is_specializing(&SpecializingFunction::new(labels, 2).unwrap())
                .unwrap()
        });
        assert!(!any_two);
        assert!(SpecializingFunction::new(vec![0, 3], 2).is_err());
    }

    #[test]
    fn t_graph_examples() {
        for t in [binary7(), star(), Tree::chain(4)] {
            assert!(t.is_t_graph(&t.comparability_graph()).unwrap());
            assert!(t.is_t_graph(&t.parent_graph()).unwrap());
        }
        assert!(!Tree::chain(2).is_t_graph(&Graph::empty(2)).unwrap());
        let bad = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        assert!(!star().is_t_graph(&bad).unwrap());
        assert!(star().is_t_graph(&Graph::empty(3)).is_err());
    }

    #[test]
    fn branches_and_antichains() {
        let b = binary7();
        assert_eq!(
            b.branches().unwrap(),
            vec![vec![0, 1, 3], vec![0, 1, 4], vec![0, 2, 5], vec![0, 2, 6]]
        );
        let antichains = b.maximal_antichains().unwrap();
        // {0}, {1,2}, {1,5,6}, {3,4,2}, {3,4,5,6}
        assert_eq!(antichains.len(), 5);
        for a in &antichains {
            assert!(b.is_antichain(a).unwrap());
            for t in 0..7 {
                assert!(a.contains(&t) || a.iter().any(|&s| b.comparable(s, t)));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let t = Tree::from_parents(vec![None, Some(0), Some(0), None, Some(2)]).unwrap();
        let text = t.to_text();
        assert_eq!(text, "0 -1 0\n1 0 1\n2 0 1\n3 -1 0\n4 2 2\n");
        assert_eq!(Tree::parse_text(&text).unwrap(), t);
        assert!(Tree::parse_text("0 -1 1\n").is_err());
        assert_eq!(Tree::parse_text("0 -1 0\n0 -1 0\n").unwrap_err().line, 2);
    }
}
