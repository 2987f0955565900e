mod analyze;
mod error;
mod input;

use std::process::ExitCode;

use arbor::check::{check_corpus, CheckOptions};
use arbor::coloring::{chromatic_number_with_limit, dsatur_bound, DEFAULT_MAX_EXACT_VERTICES};
use arbor::corpus::CorpusSpec;
use arbor::decomposition::decompose;
use arbor::minors::{
    find_clique_minor_with, greedy_subdivision, hadwiger_number_with, kurepa_family_check,
    verify_minor, MinorLimits,
};
use arbor::par::Execution;
use arbor::partition::{coloring_from_specializing, TreePartition};
use arbor::{MinorWitness, SpecializingFunction};
use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;
use input::{generator_spec, load_graph, read_text};

#[derive(Parser)]
#[command(name = "arbor", version, about = "Tree decompositions, clique minors and colourings of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Guards {
    /// Largest graph handed to the exact chromatic-number solver.
    #[arg(long, default_value_t = DEFAULT_MAX_EXACT_VERTICES)]
    max_exact_chromatic: usize,
    /// Largest graph handed to the exact clique-minor search.
    #[arg(long, default_value_t = MinorLimits::default().max_vertices)]
    max_exact_minor: usize,
}

impl Guards {
    fn minor_limits(&self) -> MinorLimits {
        MinorLimits {
            max_vertices: self.max_exact_minor,
            ..MinorLimits::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeFormat {
    Json,
    Dot,
    Tree,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edges,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a graph: chromatic and Hadwiger numbers, decomposition shape.
    Analyze {
        /// Edge-list file, `-` for stdin, or gen:<family>:<params>.
        input: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        guards: Guards,
    },
    /// Run the invariant suite over a corpus.
    Check {
        /// exhaustive:N, classes:N, random:COUNT,N,P,SEED or mixed:COUNT,MAX_N,SEED.
        corpus: String,
        #[arg(long)]
        json: bool,
        /// Process graphs on the calling thread only.
        #[arg(long)]
        sequential: bool,
        /// Largest graph on which Hadwiger-number checks run.
        #[arg(long, default_value_t = 8)]
        max_hadwiger_n: usize,
        /// Verify deliberately damaged decompositions (harness self-test).
        #[arg(long)]
        self_test_corrupt: bool,
        #[command(flatten)]
        guards: Guards,
    },
    /// Build the cone decomposition of a graph.
    Decompose {
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: DecomposeFormat,
    },
    /// Generate a graph family as an edge list.
    Gen {
        /// Family name, optionally with parameters (`cycle:5` or `gen:cycle:5`).
        family: String,
        /// Comma-separated parameters, when not given with the family.
        params: Option<String>,
        #[arg(long, value_enum, default_value = "edges")]
        format: GraphFormat,
    },
    /// Search for a K_k minor, compute the Hadwiger number, or check a witness.
    Minor {
        input: String,
        #[arg(long, conflicts_with_all = ["hadwiger", "verify"])]
        k: Option<usize>,
        #[arg(long, conflicts_with = "verify")]
        hadwiger: bool,
        /// Witness JSON file to verify against the graph.
        #[arg(long)]
        verify: Option<String>,
        #[command(flatten)]
        guards: Guards,
    },
    /// Colour a graph optimally (or with DSATUR).
    Color {
        input: String,
        #[arg(long)]
        dsatur: bool,
        #[command(flatten)]
        guards: Guards,
    },
    /// Colour a graph from a tree partition and a specializing labelling.
    PartitionColor {
        input: String,
        /// Lines `node parent v1 v2 ...`, roots with parent -1.
        partition: String,
        /// Comma-separated node labels; defaults to node heights.
        #[arg(long)]
        labels: Option<String>,
    },
    /// Greedily build a clique subdivision.
    Subdivision { input: String },
    /// Check that witnesses form a family of K_k minors pairwise separated by fewer than k vertices.
    Kurepa {
        input: String,
        /// JSON array of minor witnesses.
        family: String,
        #[arg(long)]
        k: usize,
        /// Also extract and compare decomposition chains.
        #[arg(long)]
        chains: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Analyze { input, json, guards } => {
            let g = load_graph(&input)?;
            let report = analyze::analyze(&g, guards.max_exact_chromatic, guards.minor_limits());
            if json {
                println!("{}", serde_json::to_string(&report).expect("reports serialize"));
            } else {
                print!("{}", report.to_text());
            }
            if !report.all_hold() {
                return Err(CliError::Invariant("an inequality check failed".into()));
            }
        }
        Command::Check {
            corpus,
            json,
            sequential,
            max_hadwiger_n,
            self_test_corrupt,
            guards,
        } => {
            let spec: CorpusSpec = corpus.parse().map_err(|e: arbor::corpus::CorpusError| CliError::Usage(e.to_string()))?;
            let graphs = spec.generate().map_err(|e| CliError::Usage(e.to_string()))?;
            let opts = CheckOptions {
                max_exact_chromatic: guards.max_exact_chromatic,
                max_hadwiger_vertices: max_hadwiger_n,
                minor_limits: guards.minor_limits(),
                corrupt: self_test_corrupt,
                ..CheckOptions::default()
            };
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let summary = check_corpus(&graphs, &spec.to_string(), &opts, exec);
            if json {
                println!("{}", summary.to_json());
            } else {
                print!("{}", summary.to_text());
            }
            if !summary.all_passed() {
                return Err(CliError::Invariant(format!("{} graph(s) failed", summary.failed)));
            }
        }
        Command::Decompose { input, format } => {
            let g = load_graph(&input)?;
            let d = decompose(&g);
            match format {
                DecomposeFormat::Json => println!("{}", d.to_json()),
                DecomposeFormat::Dot => print!("{}", d.to_dot("decomposition")),
                DecomposeFormat::Tree => print!("{}", d.tree().to_text()),
            }
        }
        Command::Gen { family, params, format } => {
            let spec = generator_spec(&family, params.as_deref())?;
            let g = spec.generate().map_err(|e| CliError::Usage(e.to_string()))?;
            match format {
                GraphFormat::Edges => print!("{}", g.to_edge_list()),
                GraphFormat::Dot => print!("{}", g.to_dot(&spec.family().replace('-', "_"))),
            }
        }
        Command::Minor {
            input,
            k,
            hadwiger,
            verify,
            guards,
        } => {
            let g = load_graph(&input)?;
            let limits = guards.minor_limits();
            if let Some(path) = verify {
                let w = MinorWitness::from_json(&read_text(&path)?)?;
                match verify_minor(&g, &w).violation {
                    None => println!("valid K_{} minor", w.k()),
                    Some(v) => return Err(CliError::Invariant(format!("invalid witness: {v}"))),
                }
            } else if hadwiger {
                let (h, w) = hadwiger_number_with(&g, limits)?;
                println!("{{\"schema\":1,\"hadwiger\":{h},\"witness\":{}}}", w.to_json());
            } else {
                let k = k.ok_or_else(|| CliError::Usage("pass --k, --hadwiger or --verify".into()))?;
                match find_clique_minor_with(&g, k, limits)? {
                    Some(w) => println!("{}", w.to_json()),
                    None => println!("none"),
                }
            }
        }
        Command::Color { input, dsatur, guards } => {
            let g = load_graph(&input)?;
            let c = if dsatur {
                dsatur_bound(&g).canonical()
            } else {
                chromatic_number_with_limit(&g, guards.max_exact_chromatic)?.1
            };
            println!("{}", c.to_json());
        }
        Command::PartitionColor {
            input,
            partition,
            labels,
        } => {
            let g = load_graph(&input)?;
            let p = TreePartition::parse(&read_text(&partition)?)
                .map_err(|e| CliError::Parse(format!("{partition}: {e}")))?;
            let f = match labels {
                None => SpecializingFunction::heights(p.tree()),
                Some(text) => {
                    let labels = text
                        .split(',')
                        .map(|s| s.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| CliError::Usage(format!("bad label list {text:?}")))?;
                    let k = labels.iter().max().map_or(0, |m| m + 1);
                    SpecializingFunction::new(labels, k).map_err(|e| CliError::Usage(e.to_string()))?
                }
            };
            let c = coloring_from_specializing(&g, &p, &f)
                .map_err(|e| CliError::Usage(format!("precondition violated: {e}")))?;
            println!("{}", c.to_json());
        }
        Command::Subdivision { input } => {
            let g = load_graph(&input)?;
            println!("{}", greedy_subdivision(&g)?.to_json());
        }
        Command::Kurepa {
            input,
            family,
            k,
            chains,
        } => {
            let g = load_graph(&input)?;
            let raw: Vec<serde_json::Value> = serde_json::from_str(&read_text(&family)?)
                .map_err(|e| CliError::Parse(format!("{family}: {e}")))?;
            let witnesses = raw
                .iter()
                .map(|v| MinorWitness::from_json(&v.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            let d = chains.then(|| decompose(&g));
            let report = kurepa_family_check(&g, &witnesses, k, d.as_ref(), Execution::Parallel)?;
            println!("{}", serde_json::to_string(&report).expect("reports serialize"));
        }
    }
    Ok(())
}
