//! Graph corpora: every labelled connected graph on `n` vertices, one
//! representative per isomorphism class, and seeded random samples.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::generators::random_connected;
use crate::graph::Graph;
use crate::rng::Lcg;

/// Largest `n` for which exhaustive enumeration is offered.
pub const MAX_EXHAUSTIVE: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("corpus spec must be exhaustive:N, classes:N, random:COUNT,N,P,SEED or mixed:COUNT,MAX_N,SEED; found {0:?}")]
    Syntax(String),
    #[error("{0}")]
    Invalid(String),
}

/// Which graphs to check.
#[derive(Debug, Clone, PartialEq)]
pub enum CorpusSpec {
    /// All labelled connected graphs with `1..=max_n` vertices.
    Exhaustive { max_n: usize },
    /// One labelled representative per isomorphism class of connected
    /// graphs with `1..=max_n` vertices.
    Classes { max_n: usize },
    /// `count` connected graphs on `n` vertices; graph `i` uses seed `seed + i`.
    Random { count: usize, n: usize, p: f64, seed: u64 },
    /// `count` connected graphs of varying size `1..=max_n` and density.
    Mixed { count: usize, max_n: usize, seed: u64 },
}

impl CorpusSpec {
    pub fn generate(&self) -> Result<Vec<Graph>, CorpusError> {
        match *self {
            CorpusSpec::Exhaustive { max_n } => {
                check_exhaustive(max_n)?;
                Ok((1..=max_n).flat_map(labelled_connected).collect())
            }
            CorpusSpec::Classes { max_n } => {
                check_exhaustive(max_n)?;
                Ok((1..=max_n).flat_map(connected_classes).collect())
            }
            CorpusSpec::Random { count, n, p, seed } => random_corpus(count, n, p, seed),
            CorpusSpec::Mixed { count, max_n, seed } => mixed_corpus(count, max_n, seed),
        }
    }
}

fn check_exhaustive(max_n: usize) -> Result<(), CorpusError> {
    if max_n > MAX_EXHAUSTIVE {
        return Err(CorpusError::Invalid(format!(
            "exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE}"
        )));
    }
    Ok(())
}

impl FromStr for CorpusSpec {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || CorpusError::Syntax(s.to_string());
        let (kind, params) = s.split_once(':').ok_or_else(syntax)?;
        let fields: Vec<&str> = params.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize, CorpusError> {
            fields.get(i).and_then(|f| f.parse().ok()).ok_or_else(syntax)
        };
        let spec = match (kind, fields.len()) {
            ("exhaustive", 1) => CorpusSpec::Exhaustive { max_n: int(0)? },
            ("classes", 1) => CorpusSpec::Classes { max_n: int(0)? },
            ("random", 4) => CorpusSpec::Random {
                count: int(0)?,
                n: int(1)?,
                p: fields[2].parse().map_err(|_| syntax())?,
                seed: int(3)? as u64,
            },
            ("mixed", 3) => CorpusSpec::Mixed {
                count: int(0)?,
                max_n: int(1)?,
                seed: int(2)? as u64,
            },
            _ => return Err(syntax()),
        };
        Ok(spec)
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::Exhaustive { max_n } => write!(f, "exhaustive:{max_n}"),
            CorpusSpec::Classes { max_n } => write!(f, "classes:{max_n}"),
            CorpusSpec::Random { count, n, p, seed } => write!(f, "random:{count},{n},{p},{seed}"),
            CorpusSpec::Mixed { count, max_n, seed } => write!(f, "mixed:{count},{max_n},{seed}"),
        }
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn from_bits(n: usize, pairs: &[(usize, usize)], bits: u64) -> Graph {
    let mut masks = vec![0u64; n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if bits >> i & 1 == 1 {
            masks[a] |= 1 << b;
            masks[b] |= 1 << a;
        }
    }
    Graph::from_masks(&masks)
}

/// Every connected graph on vertex set `0..n`, ordered by the bitmask of
/// its edges over the lexicographic pair list.
pub fn labelled_connected(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_EXHAUSTIVE, "exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE}");
    let pairs = pairs(n);
    (0..1u64 << pairs.len())
        .map(|bits| from_bits(n, &pairs, bits))
        .filter(Graph::is_connected)
        .collect()
}

/// Canonical adjacency code: the largest code over all vertex orders that
/// sort vertices by a refined degree invariant. Equal codes iff isomorphic.
fn canonical_code(masks: &[u64]) -> u64 {
    let n = masks.len();
    let degree: Vec<u32> = masks.iter().map(|m| m.count_ones()).collect();
    let invariant: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut around: Vec<u32> =
                (0..n).filter(|&u| masks[v] >> u & 1 == 1).map(|u| degree[u]).collect();
            around.sort_unstable();
            (degree[v], around)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| invariant[a].cmp(&invariant[b]));
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || invariant[order[i]] != invariant[order[start]] {
            cells.push((start, i));
            start = i;
        }
    }
    let mut best = 0;
    permute_cells(&mut order, &cells, 0, masks, &mut best);
    best
}

fn permute_cells(order: &mut [usize], cells: &[(usize, usize)], cell: usize, masks: &[u64], best: &mut u64) {
    let Some(&(lo, hi)) = cells.get(cell) else {
        let n = order.len();
        let mut code = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                code = code << 1 | (masks[order[i]] >> order[j] & 1);
            }
        }
        *best = (*best).max(code);
        return;
    };
    heap_permute(order, lo, hi, hi - lo, &mut |o| permute_cells(o, cells, cell + 1, masks, best));
}

/// Heap's algorithm on `order[lo..lo + k]`, calling `visit` for each arrangement.
fn heap_permute(order: &mut [usize], lo: usize, hi: usize, k: usize, visit: &mut dyn FnMut(&mut [usize])) {
    if k <= 1 {
        visit(order);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(order, lo, hi, k - 1, visit);
        if k % 2 == 0 {
            order.swap(lo + i, lo + k - 1);
        } else {
            order.swap(lo, lo + k - 1);
        }
    }
    heap_permute(order, lo, hi, k - 1, visit);
}

fn all_classes(n: usize) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for smaller in all_classes(n - 1) {
        for subset in 0..1u64 << (n - 1) {
            let mut masks = smaller.clone();
            for (v, m) in masks.iter_mut().enumerate() {
                *m |= (subset >> v & 1) << (n - 1);
            }
            masks.push(subset);
            if seen.insert(canonical_code(&masks)) {
                out.push(masks);
            }
        }
    }
    out
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in a fixed order.
pub fn connected_classes(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_EXHAUSTIVE, "exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE}");
    all_classes(n)
        .iter()
        .map(|m| Graph::from_masks(m))
        .filter(Graph::is_connected)
        .collect()
}

pub fn random_corpus(count: usize, n: usize, p: f64, seed: u64) -> Result<Vec<Graph>, CorpusError> {
    (0..count)
        .map(|i| {
            random_connected(n, p, seed.wrapping_add(i as u64))
                .map_err(|e| CorpusError::Invalid(e.to_string()))
        })
        .collect()
}

/// Graph `i` draws `n` in `1..=max_n` and `p` in `[0.1, 0.9)` from seed
/// `seed + i`, then samples with the next value of that stream as its seed.
pub fn mixed_corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<Graph>, CorpusError> {
    if max_n == 0 {
        return Err(CorpusError::Invalid("mixed corpus needs max_n >= 1".into()));
    }
    Ok((0..count)
        .map(|i| {
            let mut rng = Lcg::new(seed.wrapping_add(i as u64));
            let n = 1 + rng.below(max_n);
            let p = 0.1 + 0.8 * rng.next_f64();
            random_connected(n, p, rng.next_u64()).expect("parameters are in range")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_counts() {
        // Labelled connected graphs: 1, 1, 4, 38, 728.
        let counts: Vec<usize> = (1..=5).map(|n| labelled_connected(n).len()).collect();
        assert_eq!(counts, [1, 1, 4, 38, 728]);
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_classes(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_classes(n).len()).collect();
        assert_eq!(connected, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let p = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let q = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let code = |g: &Graph| canonical_code(&g.masks().unwrap());
        assert_eq!(code(&p), code(&q));
        assert_ne!(code(&p), code(&star));
    }

    #[test]
    fn spec_round_trip() {
        for text in ["exhaustive:6", "classes:7", "random:1000,10,0.3,7", "mixed:10000,12,1"] {
            assert_eq!(text.parse::<CorpusSpec>().unwrap().to_string(), text);
        }
        assert!("random:1,2".parse::<CorpusSpec>().is_err());
        assert!("exhaustive:9".parse::<CorpusSpec>().unwrap().generate().is_err());
    }

    #[test]
    fn random_corpora_are_connected_and_seeded() {
        let a = mixed_corpus(50, 12, 3).unwrap();
        assert!(a.iter().all(Graph::is_connected));
        assert_eq!(a, mixed_corpus(50, 12, 3).unwrap());
        assert_eq!(random_corpus(3, 5, 0.5, 9).unwrap()[1], random_connected(5, 0.5, 10).unwrap());
    }
}
