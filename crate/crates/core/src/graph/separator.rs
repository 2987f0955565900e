use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, VertexSet};

/// A vertex set whose removal separates two query sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separator {
    pub vertices: VertexSet,
}

impl Separator {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: usize) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Breadth-first augmenting paths; returns the flow value, capped at `limit`.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let mut via = vec![usize::MAX; self.out.len()];
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                for &arc in &self.out[u] {
                    let v = self.head[arc];
                    if self.cap[arc] > 0 && v != source && via[v] == usize::MAX {
                        via[v] = arc;
                        if v == sink {
                            reached = true;
                            break;
                        }
                        queue.push_back(v);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut push = usize::MAX;
            let mut v = sink;
            while v != source {
                let arc = via[v];
                push = push.min(self.cap[arc]);
                v = self.head[arc ^ 1];
            }
            let mut v = sink;
            while v != source {
                let arc = via[v];
                self.cap[arc] -= push;
                self.cap[arc ^ 1] += push;
                v = self.head[arc ^ 1];
            }
            flow += push;
        }
        flow
    }

    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &arc in &self.out[u] {
                let v = self.head[arc];
                if self.cap[arc] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

impl Graph {
    fn check_separator_query(&self, x: &VertexSet, y: &VertexSet) -> Result<(), GraphError> {
        if x.is_empty() || y.is_empty() {
            return Err(GraphError::EmptySet);
        }
        self.check_set(x)?;
        self.check_set(y)?;
        match x.iter().find(|&v| y.contains(v)) {
            Some(v) => Err(GraphError::Overlap(v)),
            None => Ok(()),
        }
    }

    /// Vertex-split flow network: vertex `v` becomes `2v -> 2v+1`; the
    /// source is `2n`, the sink `2n+1`. Vertices for which `unit` is false
    /// get unbounded capacity.
    fn separator_cut(&self, x: &VertexSet, y: &VertexSet, unit: impl Fn(usize) -> bool) -> Separator {
        let n = self.n();
        let inf = n + 1;
        let (source, sink) = (2 * n, 2 * n + 1);
        let mut net = FlowNetwork::new(2 * n + 2);
        for v in 0..n {
            net.add_arc(2 * v, 2 * v + 1, if unit(v) { 1 } else { inf });
        }
        for (u, v) in self.edges() {
            net.add_arc(2 * u + 1, 2 * v, inf);
            net.add_arc(2 * v + 1, 2 * u, inf);
        }
        for v in x.iter() {
            net.add_arc(source, 2 * v, inf);
        }
        for v in y.iter() {
            net.add_arc(2 * v + 1, sink, inf);
        }
        let flow = net.max_flow(source, sink, inf);
        debug_assert!(flow < inf);
        let reach = net.residual_reachable(source);
        let vertices = (0..n)
            .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
            .collect::<VertexSet>();
        debug_assert_eq!(vertices.len(), flow);
        Separator { vertices }
    }

    /// A minimum vertex set `S`, disjoint from `x ∪ y`, such that `x` and `y`
    /// lie in different components of `g - S`. `None` when some vertex of `x`
    /// is adjacent to some vertex of `y`, since then no such `S` exists.
    pub fn min_separator(
        &self,
        x: &VertexSet,
        y: &VertexSet,
    ) -> Result<Option<Separator>, GraphError> {
        self.check_separator_query(x, y)?;
        if x.iter().any(|u| self.neighbors(u).iter().any(|&v| y.contains(v))) {
            return Ok(None);
        }
        Ok(Some(
            self.separator_cut(x, y, |v| !x.contains(v) && !y.contains(v)),
        ))
    }

    /// A minimum vertex set meeting every `x`–`y` path, allowed to contain
    /// vertices of `x` and `y` themselves. Its size is the maximum number of
    /// vertex-disjoint `x`–`y` paths.
    pub fn min_separator_meeting(
        &self,
        x: &VertexSet,
        y: &VertexSet,
    ) -> Result<Separator, GraphError> {
        self.check_separator_query(x, y)?;
        Ok(self.separator_cut(x, y, |_| true))
    }
}
