use super::{Graph, VertexSet};

/// A removal set witnessing that a graph is not `(k, l)`-connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlViolation {
    pub removed: VertexSet,
    pub components: usize,
}

/// Calls `visit` on every subset of `0..n` with fewer than `k` elements,
/// by increasing size and lexicographically within a size. Stops early when
/// `visit` returns `false`.
fn for_each_small_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut subset: Vec<usize> = Vec::with_capacity(k);
    for size in 0..k.min(n + 1) {
        subset.clear();
        subset.extend(0..size);
        loop {
            if !visit(&subset) {
                return;
            }
            let Some(i) = (0..size).rev().find(|&i| subset[i] < n - size + i) else {
                break;
            };
            subset[i] += 1;
            for j in i + 1..size {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }
}

impl Graph {
    fn components_after_removal(&self, removed: &[usize]) -> usize {
        let mut alive = vec![true; self.n()];
        for &v in removed {
            alive[v] = false;
        }
        self.components_where(&alive).len()
    }

    /// First subset `S` (by size, then lexicographically) with `|S| < k` whose
    /// removal leaves zero components or at least `l` components.
    pub fn kl_violation(&self, k: usize, l: usize) -> Option<KlViolation> {
        let mut found = None;
        for_each_small_subset(self.n(), k, |subset| {
            let components = self.components_after_removal(subset);
            if components == 0 || components >= l {
                found = Some(KlViolation {
                    removed: VertexSet::from_sorted(subset.to_vec()),
                    components,
                });
                false
            } else {
                true
            }
        });
        found
    }

    /// Removing fewer than `k` vertices always leaves at least one and fewer
    /// than `l` components. Enumerates every such removal set.
    pub fn is_kl_connected(&self, k: usize, l: usize) -> bool {
        self.kl_violation(k, l).is_none()
    }

    /// Minimum and maximum number of components left after removing fewer
    /// than `k` vertices, over all such removals. `None` when `k == 0`.
    ///
    /// The graph is `(k, l)`-connected iff `min >= 1 && max < l`.
    pub fn component_count_bounds(&self, k: usize) -> Option<(usize, usize)> {
        let mut bounds: Option<(usize, usize)> = None;
        for_each_small_subset(self.n(), k, |subset| {
            let c = self.components_after_removal(subset);
            bounds = Some(match bounds {
                None => (c, c),
                Some((lo, hi)) => (lo.min(c), hi.max(c)),
            });
            true
        });
        bounds
    }

    /// The graph stays connected and non-empty after removing any fewer than
    /// `k` vertices.
    ///
    /// Decided through Menger's theorem: at least `k` vertices, connected,
    /// and every non-adjacent pair needs at least `k` vertices to separate it.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        let n = self.n();
        if n < k || !self.is_connected() {
            return false;
        }
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacent(u, v) {
                    continue;
                }
                let sep = self
                    .min_separator(&VertexSet::singleton(u), &VertexSet::singleton(v))
                    .expect("distinct singletons are valid separator queries");
                if sep.is_some_and(|s| s.size() < k) {
                    return false;
                }
            }
        }
        true
    }
}
