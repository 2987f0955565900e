//! The cross-module invariant suite run over graph corpora.
//!
//! Each graph is checked independently; results are merged with an
//! order-independent reduction, so summaries are identical whatever the
//! execution mode or scheduling.

use std::fmt::Write as _;

use serde::Serialize;

use crate::coloring::{chromatic_number_with_limit, is_proper, DEFAULT_MAX_EXACT_VERTICES};
use crate::decomposition::{
    chain_from_minor, decompose, independent_from_antichain, level_coloring, verify_decomposition,
    Decomposition,
};
use crate::graph::Graph;
use crate::minors::{
    greedy_subdivision, hadwiger_number_with, verify_subdivision, MinorLimits, MinorWitness,
};
use crate::par::{self, Execution};
use crate::VertexSet;

/// Checks in reporting order.
pub const SUITE: [&str; 9] = [
    "decomposition",
    "determinism",
    "chromatic-bound",
    "hadwiger-bound",
    "chain-from-minor",
    "antichain-independent",
    "comparability-equalities",
    "level-width",
    "subdivision",
];

/// Counterexamples kept in a summary, lowest graph ids first.
pub const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOptions {
    pub max_exact_chromatic: usize,
    /// Minor searches run only on graphs with at most this many vertices.
    pub max_hadwiger_vertices: usize,
    pub minor_limits: MinorLimits,
    /// Level widths are checked for `k` in `1..=level_width_max_k` and every `l <= n`.
    pub level_width_max_k: usize,
    /// Verify a deliberately damaged decomposition, to test the harness itself.
    pub corrupt: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_exact_chromatic: DEFAULT_MAX_EXACT_VERTICES,
            max_hadwiger_vertices: 8,
            minor_limits: MinorLimits::default(),
            level_width_max_k: 3,
            corrupt: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphOutcome {
    pub failures: Vec<Failure>,
    pub skipped: Vec<&'static str>,
}

impl GraphOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, check: &'static str, detail: String) {
        self.failures.push(Failure { check, detail });
    }
}

/// Adds an f-edge between the first incomparable pair of nodes, or drops an
/// f-edge when every pair is comparable.
pub fn corrupt_decomposition(d: &Decomposition) -> Decomposition {
    let tree = d.tree();
    let mut f_edges = d.f_edges().to_vec();
    let incomparable = (0..d.len())
        .flat_map(|s| (s + 1..d.len()).map(move |t| (s, t)))
        .find(|&(s, t)| !tree.comparable(s, t));
    match incomparable {
        Some(pair) => f_edges.push(pair),
        None if !f_edges.is_empty() => {
            f_edges.remove(0);
        }
        None => {}
    }
    Decomposition::from_parts(
        tree.clone(),
        d.branch_vertices().to_vec(),
        (0..d.len()).map(|t| d.cone(t).clone()).collect(),
        f_edges,
    )
    .expect("parts come from a decomposition")
}

/// Runs the whole suite on one graph.
pub fn check_graph(g: &Graph, opts: &CheckOptions) -> GraphOutcome {
    let mut out = GraphOutcome::default();
    let d = decompose(g);
    let tree = d.tree();
    let height = tree.height();

    let verified = if opts.corrupt { corrupt_decomposition(&d) } else { d.clone() };
    match verify_decomposition(g, &verified) {
        Ok(report) => {
            let failed: Vec<&str> = report.failed().map(|c| c.name).collect();
            if !failed.is_empty() {
                out.fail("decomposition", format!("failed rules: {}", failed.join(", ")));
            }
        }
        Err(e) => out.fail("decomposition", e.to_string()),
    }

    if decompose(g) != d {
        out.fail("determinism", "two runs produced different decompositions".into());
    }

    let levels = level_coloring(&d);
    if !is_proper(g, &levels).unwrap_or(false) {
        out.fail("chromatic-bound", "level colouring is not proper".into());
    } else if levels.count() > height {
        out.fail(
            "chromatic-bound",
            format!("level colouring uses {} colours, height is {height}", levels.count()),
        );
    }
    match chromatic_number_with_limit(g, opts.max_exact_chromatic) {
        Ok((chi, _)) if chi > height => {
            out.fail("chromatic-bound", format!("chi = {chi} exceeds height {height}"))
        }
        Ok(_) => {}
        Err(_) => out.skipped.push("chromatic-bound"),
    }

    let hadwiger = if g.n() <= opts.max_hadwiger_vertices {
        hadwiger_number_with(g, opts.minor_limits).ok()
    } else {
        None
    };
    match &hadwiger {
        Some((h, witness)) => {
            if *h > height {
                out.fail("hadwiger-bound", format!("h = {h} exceeds height {height}"));
            }
            let clique = MinorWitness::new(g.max_clique().iter().map(VertexSet::singleton).collect());
            for w in [witness, &clique] {
                match chain_from_minor(&d, w) {
                    Ok(chain) if chain.len() == w.k() && tree.is_chain(&chain).unwrap_or(false) => {}
                    Ok(chain) => out.fail(
                        "chain-from-minor",
                        format!("K_{} witness gave {chain:?}, not a chain of length {}", w.k(), w.k()),
                    ),
                    Err(e) => out.fail("chain-from-minor", e.to_string()),
                }
            }
        }
        None => {
            out.skipped.push("hadwiger-bound");
            out.skipped.push("chain-from-minor");
        }
    }

    match tree.maximal_antichains() {
        Ok(antichains) => {
            for a in &antichains {
                match independent_from_antichain(&d, a) {
                    Ok(set) if g.is_independent(&set) => {}
                    Ok(set) => out.fail(
                        "antichain-independent",
                        format!("antichain {a:?} carries non-independent {set}"),
                    ),
                    Err(e) => out.fail("antichain-independent", e.to_string()),
                }
            }
        }
        Err(_) => out.skipped.push("antichain-independent"),
    }
    let width = tree.width();
    if width > g.independence_number() {
        out.fail(
            "antichain-independent",
            format!("width {width} exceeds independence number {}", g.independence_number()),
        );
    }

    let comparability = tree.comparability_graph();
    let mut mismatches = Vec::new();
    if comparability.clique_number() != height {
        mismatches.push(format!("clique number {} != height {height}", comparability.clique_number()));
    }
    if comparability.independence_number() != width {
        mismatches.push(format!(
            "independence number {} != width {width}",
            comparability.independence_number()
        ));
    }
    if let Ok((chi, _)) = chromatic_number_with_limit(&comparability, opts.max_exact_chromatic) {
        if chi != height {
            mismatches.push(format!("chi {chi} != height {height}"));
        }
    }
    if hadwiger.is_some() {
        if let Ok((h, _)) = hadwiger_number_with(&comparability, opts.minor_limits) {
            if h != height {
                mismatches.push(format!("hadwiger {h} != height {height}"));
            }
        }
    }
    if !mismatches.is_empty() {
        out.fail("comparability-equalities", mismatches.join("; "));
    }

    let tree_levels = tree.levels();
    'outer: for k in 1..=opts.level_width_max_k {
        for l in 1..=g.n() {
            if !g.is_kl_connected(k, l) {
                continue;
            }
            let mut below = 0;
            for (alpha, level) in tree_levels.iter().enumerate() {
                if below >= k {
                    break;
                }
                if level.len() >= l {
                    out.fail(
                        "level-width",
                        format!("({k},{l})-connected but level {alpha} has {} nodes", level.len()),
                    );
                    break 'outer;
                }
                below += level.len();
            }
        }
    }

    if g.n() > 0 && g.is_connected() {
        match greedy_subdivision(g) {
            Ok(w) => {
                if let Some(v) = verify_subdivision(g, &w).violation {
                    out.fail("subdivision", v.to_string());
                }
                if let Some((h, _)) = &hadwiger {
                    if w.m() > *h {
                        out.fail("subdivision", format!("K_{} subdivision but h = {h}", w.m()));
                    }
                }
            }
            Err(e) => out.fail("subdivision", e.to_string()),
        }
    } else {
        out.skipped.push("subdivision");
    }

    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub id: usize,
    /// The graph in edge-list format.
    pub graph: String,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub schema: u32,
    pub corpus: String,
    pub graphs: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckTally>,
    pub counterexamples: Vec<Counterexample>,
}

impl CorpusSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summaries always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "corpus {}: {} graphs, {} passed, {} failed",
            self.corpus, self.graphs, self.passed, self.failed
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "  {:<26} passed {:>7}  failed {:>7}  skipped {:>7}",
                c.name, c.passed, c.failed, c.skipped
            );
        }
        for ce in &self.counterexamples {
            let _ = writeln!(out, "counterexample graph {}:", ce.id);
            for f in &ce.failures {
                let _ = writeln!(out, "  {}: {}", f.check, f.detail);
            }
            out.push_str(&ce.graph);
        }
        out
    }
}

#[derive(Debug, Clone)]
struct Partial {
    tallies: [(usize, usize, usize); SUITE.len()],
    graphs: usize,
    failed: usize,
    counterexamples: Vec<Counterexample>,
}

impl Partial {
    fn empty() -> Self {
        Partial {
            tallies: [(0, 0, 0); SUITE.len()],
            graphs: 0,
            failed: 0,
            counterexamples: Vec::new(),
        }
    }

    fn single(id: usize, g: &Graph, outcome: GraphOutcome) -> Self {
        let mut p = Partial::empty();
        p.graphs = 1;
        for (i, name) in SUITE.iter().enumerate() {
            if outcome.failures.iter().any(|f| f.check == *name) {
                p.tallies[i].1 += 1;
            } else if outcome.skipped.contains(name) {
                p.tallies[i].2 += 1;
            } else {
                p.tallies[i].0 += 1;
            }
        }
        if !outcome.passed() {
            p.failed = 1;
            p.counterexamples.push(Counterexample {
                id,
                graph: g.to_edge_list(),
                failures: outcome.failures,
            });
        }
        p
    }

    fn merge(mut self, other: Partial) -> Partial {
        for (a, b) in self.tallies.iter_mut().zip(other.tallies) {
            a.0 += b.0;
            a.1 += b.1;
            a.2 += b.2;
        }
        self.graphs += other.graphs;
        self.failed += other.failed;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by_key(|c| c.id);
        self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        self
    }
}

/// Checks every graph of a corpus; graph ids are positions in `graphs`.
pub fn check_corpus(graphs: &[Graph], label: &str, opts: &CheckOptions, exec: Execution) -> CorpusSummary {
    let total = par::map_reduce(
        exec,
        0..graphs.len(),
        Partial::empty,
        |i| Partial::single(i, &graphs[i], check_graph(&graphs[i], opts)),
        Partial::merge,
    );
    CorpusSummary {
        schema: crate::SCHEMA_VERSION,
        corpus: label.to_string(),
        graphs: total.graphs,
        passed: total.graphs - total.failed,
        failed: total.failed,
        checks: SUITE
            .iter()
            .zip(total.tallies)
            .map(|(&name, (passed, failed, skipped))| CheckTally {
                name,
                passed,
                failed,
                skipped,
            })
            .collect(),
        counterexamples: total.counterexamples,
    }
}
