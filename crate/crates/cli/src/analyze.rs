use std::fmt::Write as _;
use std::time::Instant;

use arbor::coloring::{chromatic_number_with_limit, dsatur_bound};
use arbor::decomposition::{decompose, level_coloring};
use arbor::minors::{greedy_subdivision, hadwiger_number_with, MinorLimits};
use arbor::Graph;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
}

/// An exact value, or bounds when the exact solver's size guard refused the graph.
#[derive(Debug, Serialize)]
pub struct Estimate {
    pub kind: &'static str,
    pub lower: usize,
    pub upper: usize,
}

impl Estimate {
    fn exact(v: usize) -> Self {
        Estimate { kind: "exact", lower: v, upper: v }
    }

    fn bound(lower: usize, upper: usize) -> Self {
        Estimate { kind: "bound", lower, upper }
    }

    fn render(&self) -> String {
        if self.kind == "exact" {
            format!("{} (exact)", self.lower)
        } else {
            format!("between {} and {} (bound)", self.lower, self.upper)
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DecompositionSummary {
    pub height: usize,
    pub roots: usize,
    pub level_sizes: Vec<usize>,
    pub chain: bool,
}

#[derive(Debug, Serialize)]
pub struct Inequality {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub stage: &'static str,
    pub millis: f64,
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub graph: GraphStats,
    pub chromatic: Estimate,
    pub hadwiger: Estimate,
    pub decomposition: DecompositionSummary,
    pub inequalities: Vec<Inequality>,
    pub timing: Vec<Timing>,
}

impl AnalysisReport {
    pub fn all_hold(&self) -> bool {
        self.inequalities.iter().all(|i| i.holds)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "graph: n={} edges={} connected={}", g.n, g.edges, yes_no(g.connected));
        let _ = writeln!(out, "chromatic number: {}", self.chromatic.render());
        let _ = writeln!(out, "hadwiger number: {}", self.hadwiger.render());
        let d = &self.decomposition;
        let _ = writeln!(
            out,
            "decomposition: height {}, roots {}, level sizes {:?}, chain {}",
            d.height,
            d.roots,
            d.level_sizes,
            yes_no(d.chain)
        );
        for i in &self.inequalities {
            let _ = writeln!(out, "{}: {}", i.name, if i.holds { "holds" } else { "VIOLATED" });
        }
        let stages: Vec<String> = self
            .timing
            .iter()
            .map(|t| format!("{} {:.3}ms", t.stage, t.millis))
            .collect();
        let _ = writeln!(out, "timing: {}", stages.join(", "));
        out
    }
}

fn timed<T>(timing: &mut Vec<Timing>, stage: &'static str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timing.push(Timing {
        stage,
        millis: start.elapsed().as_secs_f64() * 1e3,
    });
    out
}

pub fn analyze(g: &Graph, max_chromatic: usize, limits: MinorLimits) -> AnalysisReport {
    let mut timing = Vec::new();
    let d = timed(&mut timing, "decompose", || decompose(g));
    let tree = d.tree();
    let height = tree.height();
    let level_sizes: Vec<usize> = tree.levels().iter().map(Vec::len).collect();

    let chromatic = timed(&mut timing, "chromatic", || {
        match chromatic_number_with_limit(g, max_chromatic) {
            Ok((chi, _)) => Estimate::exact(chi),
            Err(_) => {
                let upper = dsatur_bound(g).count().min(level_coloring(&d).count());
                Estimate::bound(g.clique_number(), upper)
            }
        }
    });

    let hadwiger = timed(&mut timing, "hadwiger", || {
        if g.n() == 0 {
            return Estimate::exact(0);
        }
        match hadwiger_number_with(g, limits) {
            Ok((h, _)) => Estimate::exact(h),
            Err(_) => {
                let subdivision = if g.is_connected() {
                    greedy_subdivision(g).map(|w| w.m()).unwrap_or(1)
                } else {
                    1
                };
                Estimate::bound(subdivision.max(g.clique_number()), height)
            }
        }
    });

    let inequalities = vec![
        Inequality {
            name: "chi <= height",
            holds: chromatic.upper <= height,
        },
        Inequality {
            name: "h <= height",
            holds: hadwiger.upper <= height,
        },
    ];
    AnalysisReport {
        schema: arbor::SCHEMA_VERSION,
        graph: GraphStats {
            n: g.n(),
            edges: g.edge_count(),
            connected: g.n() > 0 && g.is_connected(),
        },
        chromatic,
        hadwiger,
        decomposition: DecompositionSummary {
            height,
            roots: tree.roots().count(),
            chain: g.n() > 0 && level_sizes.iter().all(|&s| s == 1),
            level_sizes,
        },
        inequalities,
        timing,
    }
}
