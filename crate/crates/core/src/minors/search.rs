use crate::graph::{Graph, VertexSet};
use crate::LimitExceeded;

use super::{MinorError, MinorWitness};

/// Size guards for the exact minor search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorLimits {
    pub max_vertices: usize,
    pub max_k: usize,
}

impl Default for MinorLimits {
    fn default() -> Self {
        MinorLimits {
            max_vertices: 16,
            max_k: 8,
        }
    }
}

fn neighborhood(adj: &[u64], mut set: u64) -> u64 {
    let mut out = 0;
    while set != 0 {
        let v = set.trailing_zeros() as usize;
        set &= set - 1;
        out |= adj[v];
    }
    out
}

/// Vertices of `allowed` reachable from the lowest vertex of `seed` (which must lie in `allowed`).
fn flood(adj: &[u64], seed: u64, allowed: u64) -> u64 {
    let mut reach = seed & seed.wrapping_neg();
    let mut frontier = reach;
    while frontier != 0 {
        let next = neighborhood(adj, frontier) & allowed & !reach;
        reach |= next;
        frontier = next;
    }
    reach
}

/// Partition search on one connected component.
///
/// In a connected graph any `K_k` minor can be grown, by absorbing unused
/// vertices into adjacent branch sets, into one whose branch sets cover every
/// vertex. So it suffices to look for partitions into exactly `k` connected,
/// pairwise adjacent parts. Vertices are assigned in BFS order from a
/// highest-degree vertex; each goes to a fresh part or an existing one, and a
/// partial assignment survives only if every part can still become connected
/// and every pair of parts can still become adjacent through unassigned vertices.
struct PartitionSearch<'a> {
    adj: &'a [u64],
    k: usize,
    order: Vec<usize>,
    /// `unassigned[i]` is the mask of `order[i..]`.
    unassigned: Vec<u64>,
    parts: Vec<u64>,
}

impl PartitionSearch<'_> {
    fn feasible(&self, free: u64) -> bool {
        if self.parts.len() + (free.count_ones() as usize) < self.k {
            return false;
        }
        let mut reach = Vec::with_capacity(self.parts.len());
        for &part in &self.parts {
            let r = flood(self.adj, part, part | free);
            if part & !r != 0 {
                return false;
            }
            reach.push(r);
        }
        for p in 0..self.parts.len() {
            let around_part = neighborhood(self.adj, self.parts[p]);
            let around_reach = neighborhood(self.adj, reach[p]) | reach[p];
            for q in p + 1..self.parts.len() {
                if around_part & self.parts[q] != 0 {
                    continue;
                }
                if free == 0 || around_reach & reach[q] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return self.parts.len() == self.k;
        }
        let bit = 1u64 << self.order[i];
        let free = self.unassigned[i + 1];
        if self.parts.len() < self.k {
            self.parts.push(bit);
            if self.feasible(free) && self.run(i + 1) {
                return true;
            }
            self.parts.pop();
        }
        for p in 0..self.parts.len() {
            self.parts[p] |= bit;
            if self.feasible(free) && self.run(i + 1) {
                return true;
            }
            self.parts[p] &= !bit;
        }
        false
    }
}

fn bfs_order(adj: &[u64], component: u64) -> Vec<usize> {
    let start = (0..adj.len())
        .filter(|&v| component >> v & 1 == 1)
        .max_by_key(|&v| ((adj[v] & component).count_ones(), std::cmp::Reverse(v)))
        .expect("component is non-empty");
    let mut order = vec![start];
    let mut seen = 1u64 << start;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        let mut next = adj[u] & component & !seen;
        seen |= next;
        while next != 0 {
            order.push(next.trailing_zeros() as usize);
            next &= next - 1;
        }
    }
    order
}

fn search_component(adj: &[u64], component: u64, k: usize) -> Option<Vec<u64>> {
    let size = component.count_ones() as usize;
    if size < k {
        return None;
    }
    let edges: usize = (0..adj.len())
        .filter(|&v| component >> v & 1 == 1)
        .map(|v| (adj[v] & component).count_ones() as usize)
        .sum::<usize>()
        / 2;
    // Contracting k connected parts that cover `size` vertices deletes at
    // least `size - k` edges, and K_k needs k(k-1)/2 of the remaining ones.
    if edges + k < size + k * (k - 1) / 2 {
        return None;
    }
    let order = bfs_order(adj, component);
    let mut unassigned = vec![0u64; order.len() + 1];
    for i in (0..order.len()).rev() {
        unassigned[i] = unassigned[i + 1] | 1 << order[i];
    }
    let mut search = PartitionSearch {
        adj,
        k,
        order,
        unassigned,
        parts: Vec::with_capacity(k),
    };
    search.run(0).then_some(search.parts)
}

fn mask_to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Exact `K_k`-minor search with the default [`MinorLimits`].
pub fn find_clique_minor(g: &Graph, k: usize) -> Result<Option<MinorWitness>, MinorError> {
    find_clique_minor_with(g, k, MinorLimits::default())
}

pub fn find_clique_minor_with(
    g: &Graph,
    k: usize,
    limits: MinorLimits,
) -> Result<Option<MinorWitness>, MinorError> {
    if k == 0 {
        return Err(MinorError::ZeroK);
    }
    LimitExceeded::check("minor search vertex count", g.n(), limits.max_vertices.min(64))?;
    LimitExceeded::check("minor search clique size", k, limits.max_k)?;
    if k > g.n() {
        return Ok(None);
    }
    let adj = g.masks().expect("n <= 64 was checked");
    for component in g.components() {
        let mask = component.iter().fold(0u64, |m, v| m | 1 << v);
        if let Some(parts) = search_component(&adj, mask, k) {
            let sets = parts.into_iter().map(mask_to_set).collect();
            return Ok(Some(MinorWitness::new(sets)));
        }
    }
    Ok(None)
}

/// Largest `k` with a `K_k` minor, with a witness.
pub fn hadwiger_number(g: &Graph) -> Result<(usize, MinorWitness), MinorError> {
    hadwiger_number_with(g, MinorLimits::default())
}

pub fn hadwiger_number_with(
    g: &Graph,
    limits: MinorLimits,
) -> Result<(usize, MinorWitness), MinorError> {
    if g.n() == 0 {
        return Err(MinorError::EmptyGraph);
    }
    LimitExceeded::check("minor search vertex count", g.n(), limits.max_vertices.min(64))?;
    let clique = g.max_clique();
    let mut best = MinorWitness::new(clique.iter().map(VertexSet::singleton).collect());
    loop {
        let k = best.k() + 1;
        if k > g.n() {
            return Ok((best.k(), best));
        }
        match find_clique_minor_with(g, k, limits)? {
            Some(w) => best = w,
            None => return Ok((best.k(), best)),
        }
    }
}
