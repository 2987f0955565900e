//! Proper colourings: validation, DSATUR upper bounds, exact chromatic
//! number, and combining colourings of the parts of a vertex partition.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::{LimitExceeded, SCHEMA_VERSION};

/// Default guard for [`chromatic_number`].
pub const DEFAULT_MAX_EXACT_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("colouring covers {actual} vertices but the graph has {expected}")]
    Partial { expected: usize, actual: usize },
    #[error("parts do not partition the vertex set (vertex {0} is missing or repeated)")]
    NotPartition(usize),
    #[error("{parts} parts but {colorings} colourings")]
    CountMismatch { parts: usize, colorings: usize },
    #[error("colouring of part {0} is not proper on the subgraph it induces")]
    ImproperPart(usize),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

/// A colour for every vertex; colours are non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    schema: u32,
    colors: Vec<usize>,
    count: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colours used.
    pub fn count(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Renumbers colours by first occurrence, so the result uses `0..count`.
    pub fn canonical(&self) -> Coloring {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| match map.iter().find(|&&(old, _)| old == c) {
                Some(&(_, new)) => new,
                None => {
                    map.push((c, map.len()));
                    map.len() - 1
                }
            })
            .collect();
        Coloring { colors }
    }

    /// Colour classes in order of colour value.
    pub fn classes(&self) -> Vec<VertexSet> {
        let max = self.colors.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); max];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(VertexSet::from_sorted)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColoringJson {
            schema: SCHEMA_VERSION,
            colors: self.colors.clone(),
            count: self.count(),
        })
        .expect("colourings always serialize")
    }

    pub fn from_json(text: &str) -> Result<Coloring, serde_json::Error> {
        let raw: ColoringJson = serde_json::from_str(text)?;
        Ok(Coloring { colors: raw.colors })
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::Partial {
            expected: g.n(),
            actual: c.len(),
        });
    }
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// DSATUR: repeatedly colour the vertex seeing the most distinct colours
/// (ties: higher degree, then lower id) with the least free colour.
pub fn dsatur_bound(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by_key(|&v| (saturation[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncoloured vertex remains");
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        color[v] = Some(c);
        for &u in g.neighbors(v) {
            let marks = &mut seen[u];
            if marks.len() <= c {
                marks.resize(c + 1, false);
            }
            if !marks[c] {
                marks[c] = true;
                saturation[u] += 1;
            }
        }
    }
    Coloring::new(color.into_iter().map(|c| c.unwrap_or(0)).collect())
}

struct KColorSearch<'a> {
    adj: &'a [u64],
    k: usize,
    color: Vec<Option<usize>>,
    class: Vec<u64>,
}

impl KColorSearch<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.class.iter().filter(|&&m| self.adj[v] & m != 0).count()
    }

    fn solve(&mut self, remaining: u64, used: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let mut best: Option<(usize, u32, usize)> = None;
        let mut bits = remaining;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let key = (self.saturation(v), (self.adj[v] & remaining).count_ones(), v);
            let better = match best {
                None => true,
                Some((s, d, _)) => (key.0, key.1) > (s, d),
            };
            if better {
                best = Some(key);
            }
        }
        let (_, _, v) = best.expect("remaining is non-empty");
        let rest = remaining & !(1 << v);
        for c in 0..self.k.min(used + 1) {
            if self.adj[v] & self.class[c] != 0 {
                continue;
            }
            self.color[v] = Some(c);
            self.class[c] |= 1 << v;
            if self.solve(rest, used.max(c + 1)) {
                return true;
            }
            self.class[c] &= !(1 << v);
            self.color[v] = None;
        }
        false
    }
}

/// Tries to colour with `k` colours, the vertices of `clique` pre-coloured `0..|clique|`.
fn k_colorable(adj: &[u64], k: usize, clique: &VertexSet) -> Option<Coloring> {
    let n = adj.len();
    if clique.len() > k {
        return None;
    }
    let mut search = KColorSearch {
        adj,
        k,
        color: vec![None; n],
        class: vec![0; k],
    };
    let mut remaining = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for (c, v) in clique.iter().enumerate() {
        search.color[v] = Some(c);
        search.class[c] |= 1 << v;
        remaining &= !(1 << v);
    }
    search
        .solve(remaining, clique.len())
        .then(|| Coloring::new(search.color.into_iter().map(|c| c.unwrap_or(0)).collect()))
}

/// Exact chromatic number with a witness using exactly that many colours,
/// refusing graphs with more than [`DEFAULT_MAX_EXACT_VERTICES`] vertices.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring), LimitExceeded> {
    chromatic_number_with_limit(g, DEFAULT_MAX_EXACT_VERTICES)
}

/// Exact chromatic number: a maximum clique gives the lower bound, DSATUR
/// the upper bound, and the values in between are decided by backtracking
/// in saturation order with the clique pre-coloured.
pub fn chromatic_number_with_limit(
    g: &Graph,
    max_vertices: usize,
) -> Result<(usize, Coloring), LimitExceeded> {
    LimitExceeded::check("chromatic number vertex count", g.n(), max_vertices.min(64))?;
    if g.n() == 0 {
        return Ok((0, Coloring::new(Vec::new())));
    }
    let adj = g.masks().expect("n <= 64 was checked");
    let clique = g.max_clique();
    let upper = dsatur_bound(g);
    for k in clique.len()..upper.count() {
        if let Some(c) = k_colorable(&adj, k, &clique) {
            return Ok((k, c.canonical()));
        }
    }
    Ok((upper.count(), upper.canonical()))
}

/// Combines proper colourings of the parts of a vertex partition into one
/// proper colouring of `g`: vertex `v` in part `i` with inner colour `c`
/// gets `i * K + c`, where `K` is the largest inner colour count.
/// `colorings[i]` colours the subgraph induced by `parts[i]`, indexed by
/// position within the (sorted) part.
pub fn combine_part_colorings(
    g: &Graph,
    parts: &[VertexSet],
    colorings: &[Coloring],
) -> Result<Coloring, ColoringError> {
    if parts.len() != colorings.len() {
        return Err(ColoringError::CountMismatch {
            parts: parts.len(),
            colorings: colorings.len(),
        });
    }
    let mut owner: Vec<Option<(usize, usize)>> = vec![None; g.n()];
    for (i, part) in parts.iter().enumerate() {
        g.check_set(part)?;
        for (pos, v) in part.iter().enumerate() {
            if owner[v].replace((i, pos)).is_some() {
                return Err(ColoringError::NotPartition(v));
            }
        }
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        return Err(ColoringError::NotPartition(v));
    }
    let mut inner = Vec::with_capacity(parts.len());
    for (i, (part, coloring)) in parts.iter().zip(colorings).enumerate() {
        let sub = g.induced(part);
        match is_proper(&sub, coloring) {
            Ok(true) => inner.push(coloring.canonical()),
            _ => return Err(ColoringError::ImproperPart(i)),
        }
    }
    let width = inner.iter().map(Coloring::count).max().unwrap_or(1).max(1);
    let colors = owner
        .into_iter()
        .map(|o| {
            let (i, pos) = o.expect("every vertex is owned");
            i * width + inner[i].color(pos)
        })
        .collect();
    Ok(Coloring::new(colors))
}
