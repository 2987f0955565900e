use serde::Serialize;

use crate::decomposition::{chain_from_minor, Decomposition};
use crate::graph::{Graph, Separator};
use crate::par::{self, Execution};

use super::{verify_minor, MinorError, MinorWitness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub valid: bool,
    pub violation: Option<String>,
    /// Nodes of the decomposition chain extracted from the witness, when a
    /// decomposition was supplied and the witness is valid.
    pub chain: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub first: usize,
    pub second: usize,
    /// Minimum separator avoiding both unions; `None` when the unions touch
    /// or overlap, so that no such separator exists.
    pub separator: Option<Separator>,
    /// Minimum separator allowed to meet the unions, recorded when it is
    /// smaller than the disjoint one or the disjoint one does not exist.
    pub meeting: Option<Separator>,
    pub separated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KurepaReport {
    pub schema: u32,
    pub k: usize,
    pub witnesses: Vec<WitnessReport>,
    pub pairs: Vec<PairReport>,
    /// Whether the extracted chains are pairwise distinct as node sets.
    /// Reported only; it is not part of the verdict.
    pub chains_distinct: Option<bool>,
    pub verdict: bool,
}

/// Checks that `family` is a family of valid `K_k` minors whose unions are
/// pairwise separated by fewer than `k` vertices.
pub fn kurepa_family_check(
    g: &Graph,
    family: &[MinorWitness],
    k: usize,
    decomposition: Option<&Decomposition>,
    exec: Execution,
) -> Result<KurepaReport, MinorError> {
    if k == 0 {
        return Err(MinorError::ZeroK);
    }
    if let Some((index, w)) = family.iter().enumerate().find(|(_, w)| w.k() != k) {
        return Err(MinorError::MixedK {
            index,
            found: w.k(),
            expected: k,
        });
    }
    let witnesses: Vec<WitnessReport> = family
        .iter()
        .map(|w| {
            let violation = verify_minor(g, w).violation.map(|v| v.to_string());
            let chain = match (decomposition, &violation) {
                (Some(d), None) => chain_from_minor(d, w).ok(),
                _ => None,
            };
            WitnessReport {
                valid: violation.is_none(),
                violation,
                chain,
            }
        })
        .collect();
    let unions: Vec<_> = family.iter().map(MinorWitness::union).collect();
    let index_pairs: Vec<(usize, usize)> = (0..family.len())
        .flat_map(|a| (a + 1..family.len()).map(move |b| (a, b)))
        .collect();
    let pairs = par::map(exec, &index_pairs, |&(a, b)| {
        let (x, y) = (&unions[a], &unions[b]);
        let in_range = x.iter().chain(y.iter()).all(|v| v < g.n());
        if !in_range || x.is_empty() || y.is_empty() || !x.is_disjoint(y) {
            return PairReport {
                first: a,
                second: b,
                separator: None,
                meeting: None,
                separated: false,
            };
        }
        let separator = g.min_separator(x, y).expect("unions were validated");
        let meeting = g.min_separator_meeting(x, y).expect("unions were validated");
        let meeting = match &separator {
            Some(s) if s.size() <= meeting.size() => None,
            _ => Some(meeting),
        };
        let separated = separator.as_ref().is_some_and(|s| s.size() < k);
        PairReport {
            first: a,
            second: b,
            separator,
            meeting,
            separated,
        }
    });
    let chains_distinct = decomposition.map(|_| {
        let mut chains: Vec<Vec<usize>> = Vec::new();
        for w in &witnesses {
            let Some(c) = &w.chain else { return false };
            let mut c = c.clone();
            c.sort_unstable();
            chains.push(c);
        }
        let before = chains.len();
        chains.sort();
        chains.dedup();
        chains.len() == before
    });
    let verdict = witnesses.iter().all(|w| w.valid) && pairs.iter().all(|p| p.separated);
    Ok(KurepaReport {
        schema: crate::SCHEMA_VERSION,
        k,
        witnesses,
        pairs,
        chains_distinct,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::decompose;
    use crate::graph::VertexSet;

    fn singletons(vs: &[usize]) -> MinorWitness {
        MinorWitness::new(vs.iter().map(|&v| VertexSet::singleton(v)).collect())
    }

    fn apex_triangles() -> Graph {
        Graph::from_edges(
            7,
            [(0, 1), (0, 4), (1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)],
        )
        .unwrap()
    }

    #[test]
    fn two_triangles_through_apex() {
        let g = apex_triangles();
        let family = [singletons(&[1, 2, 3]), singletons(&[4, 5, 6])];
        let d = decompose(&g);
        let r = kurepa_family_check(&g, &family, 3, Some(&d), Execution::Sequential).unwrap();
        assert!(r.verdict);
        assert_eq!(r.pairs[0].separator.as_ref().unwrap().vertices, VertexSet::from([0]));
        assert_eq!(r.pairs[0].meeting, None);
        assert_eq!(r.chains_distinct, Some(true));
    }

    #[test]
    fn k6_rejects() {
        let g = Graph::from_edges(6, (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b)))).unwrap();
        let family = [singletons(&[0, 1, 2]), singletons(&[3, 4, 5])];
        let r = kurepa_family_check(&g, &family, 3, None, Execution::Parallel).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.pairs[0].separator, None);
        assert_eq!(r.pairs[0].meeting.as_ref().unwrap().size(), 3);
        assert_eq!(r.chains_distinct, None);
    }

    #[test]
    fn singleton_family_and_errors() {
        let g = apex_triangles();
        let r = kurepa_family_check(&g, &[singletons(&[1, 2, 3])], 3, None, Execution::Parallel)
            .unwrap();
        assert!(r.verdict && r.pairs.is_empty());
        assert!(matches!(
            kurepa_family_check(&g, &[singletons(&[1, 2])], 3, None, Execution::Parallel),
            Err(MinorError::MixedK { index: 0, found: 2, expected: 3 })
        ));
        let bad = [singletons(&[0, 2, 3])];
        let r = kurepa_family_check(&g, &bad, 3, None, Execution::Parallel).unwrap();
        assert!(!r.verdict && !r.witnesses[0].valid);
    }
}
