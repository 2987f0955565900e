//! Brute-force oracles shared by the integration tests. Each one follows the
//! textbook definition directly and uses none of the library's algorithms
//! beyond reading adjacency.

#![allow(dead_code)]

use arbor::Graph;

pub fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

/// Every labelled graph (connected or not) on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0..1u64 << pairs.len()).map(move |bits| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// Visits every set partition of `0..n` as a restricted-growth string.
pub fn for_each_partition(n: usize, mut visit: impl FnMut(&[usize], usize)) {
    fn go(labels: &mut Vec<usize>, n: usize, blocks: usize, visit: &mut dyn FnMut(&[usize], usize)) {
        if labels.len() == n {
            visit(labels, blocks);
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            go(labels, n, blocks.max(b + 1), visit);
            labels.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, 0, &mut visit);
}

/// Whether `mask` induces a connected subgraph (flood fill on bitmasks).
pub fn mask_connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let mut reach = mask & mask.wrapping_neg();
    loop {
        let mut next = reach;
        for v in 0..adj.len() {
            if reach >> v & 1 == 1 {
                next |= adj[v] & mask;
            }
        }
        if next == reach {
            return reach == mask;
        }
        reach = next;
    }
}

/// For every `k`, whether some assignment of each vertex to one of `k`
/// branch sets or to "unused" yields a valid `K_k` minor. Enumerates set
/// partitions of `V + {unused}`, so labels are not permuted redundantly.
pub fn minor_oracle(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let adj = adjacency(g);
    let mut found = vec![false; n + 1];
    found[0] = true;
    for_each_partition(n + 1, |labels, blocks| {
        let unused = labels[n];
        let sets: Vec<u64> = (0..blocks)
            .filter(|&b| b != unused)
            .map(|b| (0..n).filter(|&v| labels[v] == b).fold(0u64, |m, v| m | 1 << v))
            .collect();
        let k = sets.len();
        if found[k] || !sets.iter().all(|&s| mask_connected(&adj, s)) {
            return;
        }
        let touches = |a: u64, b: u64| (0..n).any(|v| a >> v & 1 == 1 && adj[v] & b != 0);
        if (0..k).all(|i| (i + 1..k).all(|j| touches(sets[i], sets[j]))) {
            found[k] = true;
        }
    });
    found
}

pub fn hadwiger_oracle(g: &Graph) -> usize {
    minor_oracle(g).iter().rposition(|&f| f).unwrap()
}

/// Fewest independent blocks in a set partition of the vertices.
pub fn chromatic_oracle(g: &Graph) -> usize {
    let n = g.n();
    let adj = adjacency(g);
    let mut best = n;
    for_each_partition(n, |labels, blocks| {
        if blocks < best && (0..n).all(|v| (0..n).all(|u| labels[u] != labels[v] || adj[v] >> u & 1 == 0)) {
            best = blocks;
        }
    });
    best
}

pub fn clique_oracle(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0..1u64 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || adj[v] & s == s & !(1 << v)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn independence_oracle(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0..1u64 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Number of components of `g - removed`, by union-find over the edge list.
pub fn components_without(g: &Graph, removed: u64) -> usize {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if removed >> u & 1 == 0 && removed >> v & 1 == 0 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
    }
    (0..n)
        .filter(|&v| removed >> v & 1 == 0 && find(&mut parent, v) == v)
        .count()
}

/// `(k, l)`-connectedness by scanning all vertex bitmasks in counting order.
pub fn kl_oracle(g: &Graph, k: usize, l: usize) -> bool {
    (0..1u64 << g.n())
        .filter(|s| (s.count_ones() as usize) < k)
        .all(|s| {
            let c = components_without(g, s);
            c >= 1 && c < l
        })
}

/// Size of a smallest vertex set avoiding `x | y` whose removal leaves no
/// `x`–`y` path, or `None` when some `x` vertex is adjacent to a `y` vertex.
pub fn separator_oracle(g: &Graph, x: u64, y: u64) -> Option<usize> {
    let adj = adjacency(g);
    let n = g.n();
    let separated = |s: u64| {
        let alive = !s & ((1u64 << n) - 1);
        let mut reach = x & alive;
        loop {
            let mut next = reach;
            for v in 0..n {
                if reach >> v & 1 == 1 {
                    next |= adj[v] & alive;
                }
            }
            if next == reach {
                return reach & y == 0;
            }
            reach = next;
        }
    };
    (0..1u64 << n)
        .filter(|&s| s & (x | y) == 0 && separated(s))
        .map(|s| s.count_ones() as usize)
        .min()
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None; g.n()];
    for start in 0..g.n() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let s = side[u].unwrap();
            for &v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(!s);
                        stack.push(v);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}
