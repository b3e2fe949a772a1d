//! The `msc` command line.
//!
//! Exit codes: 0 success, 1 violations found, 2 usage or input error,
//! 3 resource cap exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::delta::delta_sets;
use crate::error::{Error, Result};
use crate::generators::{erdos_renyi, Family, LABELED_ENUMERATION_CAP};
use crate::io::report::{OutputFormat, Record, Report};
use crate::io::{load_graphs, GraphDocument, GraphFormat};
use crate::paths::{classify_parity, enumerate_induced_ab_paths, is_bipartite, is_parity_graph_capped, PARITY_GRAPH_CAP};
use crate::sigma::{sigma, sigma_naive, NAIVE_SIGMA_CAP};
use crate::verify::{
    labeled_stream, rng_for, search_counterexamples, search_minimal_labeled, verify_gmsc_sets_capped,
    verify_identities, verify_msc_many, CounterexampleRecord, Identity, SearchLimits, SetMode,
    EXHAUSTIVE_SETS_CAP,
};
use crate::vertex_set::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "msc", version, about = "Independent-set counts, Merrifield–Simmons deltas and induced path parity")]
struct Cli {
    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Input format of graph files.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    input: InputFormat,

    #[command(flatten)]
    caps: Caps,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Args, serde::Serialize)]
struct Caps {
    /// Largest graph for brute-force counting.
    #[arg(long, global = true, default_value_t = NAIVE_SIGMA_CAP)]
    cap_naive: usize,
    /// Largest graph for parity-graph recognition.
    #[arg(long, global = true, default_value_t = PARITY_GRAPH_CAP)]
    cap_parity: usize,
    /// Largest graph for exhaustive subset-pair verification.
    #[arg(long, global = true, default_value_t = EXHAUSTIVE_SETS_CAP)]
    cap_sets: usize,
    /// Largest vertex count for labeled enumeration.
    #[arg(long, global = true, default_value_t = LABELED_ENUMERATION_CAP)]
    cap_labeled: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    Edgelist,
}

impl InputFormat {
    fn format(self) -> Option<GraphFormat> {
        match self {
            InputFormat::Auto => None,
            InputFormat::Graph6 => Some(GraphFormat::Graph6),
            InputFormat::Edgelist => Some(GraphFormat::EdgeList),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BenchFamily {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Grid,
    /// Erdős–Rényi G(size, p) drawn with --seed.
    Er,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of independent sets of every graph in GRAPH.
    Sigma {
        /// File path, or `g6:<code>` for an inline graph6 string.
        graph: String,
        /// Use brute-force enumeration instead of the recursive engine.
        #[arg(long)]
        naive: bool,
    },
    /// Δ for a vertex pair or two vertex sets.
    Delta {
        graph: String,
        /// Which graph of a multi-graph file.
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long, requires = "v", conflicts_with_all = ["set_a", "set_b"])]
        u: Option<usize>,
        #[arg(long, requires = "u")]
        v: Option<usize>,
        /// Comma-separated vertices, e.g. `0,2`.
        #[arg(long, requires = "set_b")]
        set_a: Option<String>,
        #[arg(long, requires = "set_a")]
        set_b: Option<String>,
    },
    /// Lists the induced A-B-paths and their parity class.
    Paths {
        graph: String,
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long)]
        set_a: String,
        #[arg(long)]
        set_b: String,
    },
    /// Bipartite and parity-graph flags.
    Classify { graph: String },
    /// Checks the sign conjecture on every vertex pair of every graph.
    Verify {
        graphs: String,
        /// Also check the sign trichotomy on subset pairs (exhaustive, or
        /// --trials random pairs per graph).
        #[arg(long)]
        sets: bool,
        /// Also run the identity suite with --trials random trials per graph.
        #[arg(long)]
        identities: bool,
        #[arg(long)]
        trials: Option<u64>,
        /// Skip graphs that are not parity graphs.
        #[arg(long)]
        only_parity: bool,
    },
    /// Searches for vertex pairs violating the sign conjecture.
    Search {
        #[arg(long)]
        max_n: usize,
        /// Scan this graph6 file instead of all labeled graphs.
        #[arg(long)]
        graph6: Option<String>,
        /// Stop at the smallest vertex count with a violation.
        #[arg(long)]
        stop_at_first: bool,
        #[arg(long)]
        max_records: Option<usize>,
    },
    /// Times the counting engine on a graph family.
    Bench {
        #[arg(long, value_enum)]
        family: BenchFamily,
        #[arg(long)]
        size: usize,
        /// Edge probability for `er`.
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        repeat: usize,
    },
}

fn parse_set(text: &str) -> Result<VertexSet> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::invalid(format!("{s:?} is not a vertex")))
        })
        .collect()
}

fn load_one(arg: &str, index: usize, input: InputFormat) -> Result<GraphDocument> {
    let mut docs = load_graphs(arg, input.format())?;
    if index >= docs.len() {
        return Err(Error::invalid(format!("{arg} holds {} graphs, no index {index}", docs.len())));
    }
    Ok(docs.swap_remove(index))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

/// Runs the command line with `args` (including the program name) and
/// returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let echo = args
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    match execute(&cli, echo) {
        Ok(report) => {
            if let Err(e) = report.write(cli.format, out) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            let violating = matches!(cli.command, Command::Verify { .. } | Command::Search { .. })
                && report.violations() > 0;
            if violating {
                EXIT_VIOLATIONS
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: &Cli, echo: String) -> Result<Report> {
    let mut report = Report::new(echo);
    report.config("seed", cli.seed);
    report.config("caps", cli.caps);
    match &cli.command {
        Command::Sigma { graph, naive } => {
            for doc in load_graphs(graph, cli.input.format())? {
                let value = if *naive {
                    Error::check_cap("vertex count for brute-force counting", doc.graph.n(), cli.caps.cap_naive)?;
                    sigma_naive(&doc.graph)?
                } else {
                    sigma(&doc.graph)
                };
                report.records.push(Record::Sigma {
                    graph: doc.source_id,
                    n: doc.graph.n(),
                    m: doc.graph.edge_count(),
                    sigma: value.to_string(),
                });
            }
        }
        Command::Delta {
            graph,
            index,
            u,
            v,
            set_a,
            set_b,
        } => {
            let doc = load_one(graph, *index, cli.input)?;
            let g = &doc.graph;
            let (a, b, distance) = match (u, v, set_a, set_b) {
                (Some(u), Some(v), _, _) => (
                    VertexSet::singleton(*u),
                    VertexSet::singleton(*v),
                    Some(g.distance(*u, *v)?),
                ),
                (_, _, Some(sa), Some(sb)) => (parse_set(sa)?, parse_set(sb)?, None),
                _ => return Err(Error::invalid("give either --u and --v or --set-a and --set-b")),
            };
            let delta = delta_sets(g, &a, &b)?;
            let parity = classify_parity(g, &a, &b)?;
            report.records.push(Record::Delta {
                graph: doc.source_id,
                sign: delta.sign(),
                a,
                b,
                delta,
                distance,
                parity,
            });
        }
        Command::Paths {
            graph,
            index,
            set_a,
            set_b,
        } => {
            let doc = load_one(graph, *index, cli.input)?;
            let (a, b) = (parse_set(set_a)?, parse_set(set_b)?);
            let paths: Vec<_> = enumerate_induced_ab_paths(&doc.graph, &a, &b)?.collect();
            let parity = classify_parity(&doc.graph, &a, &b)?;
            for (i, p) in paths.iter().enumerate() {
                report.records.push(Record::Path {
                    graph: doc.source_id.clone(),
                    index: i,
                    length: p.len(),
                    vertices: p.vertices.clone(),
                });
            }
            report.records.push(Record::Parity {
                graph: doc.source_id,
                a,
                b,
                paths: paths.len(),
                parity,
            });
        }
        Command::Classify { graph } => {
            let docs = load_graphs(graph, cli.input.format())?;
            let rows: Vec<Record> = docs
                .par_iter()
                .map(|doc| Record::Classification {
                    graph: doc.source_id.clone(),
                    n: doc.graph.n(),
                    m: doc.graph.edge_count(),
                    bipartite: is_bipartite(&doc.graph),
                    parity: is_parity_graph_capped(&doc.graph, cli.caps.cap_parity).ok(),
                })
                .collect();
            report.records.extend(rows);
        }
        Command::Verify {
            graphs,
            sets,
            identities,
            trials,
            only_parity,
        } => verify(cli, &mut report, graphs, *sets, *identities, *trials, *only_parity)?,
        Command::Search {
            max_n,
            graph6,
            stop_at_first,
            max_records,
        } => {
            let limits = SearchLimits {
                max_n: *max_n,
                max_graphs: None,
                max_records: *max_records,
                parity_cap: cli.caps.cap_parity,
            };
            report.config("max_n", max_n);
            report.config("max_records", max_records);
            let records: Vec<CounterexampleRecord> = match graph6 {
                Some(path) => {
                    report.config("source", path);
                    let docs = load_graphs(path, Some(GraphFormat::Graph6))?;
                    search_counterexamples(docs.into_iter().map(|d| (d.source_id, d.graph)), &limits)
                }
                None => {
                    Error::check_cap("vertex count for labeled enumeration", *max_n, cli.caps.cap_labeled)?;
                    report.config("source", "labeled");
                    if *stop_at_first {
                        let (minimal, records) = search_minimal_labeled(*max_n, &limits)?;
                        report.config("minimal_n", minimal);
                        records
                    } else {
                        let mut all = Vec::new();
                        for n in 0..=*max_n {
                            all.extend(search_counterexamples(labeled_stream(n)?, &limits));
                        }
                        if let Some(m) = max_records {
                            all.truncate(*m);
                        }
                        all
                    }
                }
            };
            report
                .records
                .extend(records.into_iter().map(Record::Counterexample));
        }
        Command::Bench {
            family,
            size,
            p,
            repeat,
        } => {
            let (name, g) = match family {
                BenchFamily::Path => ("path", Family::Path(*size).generate()?),
                BenchFamily::Cycle => ("cycle", Family::Cycle(*size).generate()?),
                BenchFamily::Complete => ("complete", Family::Complete(*size).generate()?),
                BenchFamily::CompleteBipartite => (
                    "complete-bipartite",
                    Family::CompleteBipartite(*size, *size).generate()?,
                ),
                BenchFamily::Star => ("star", Family::Star(*size).generate()?),
                BenchFamily::Grid => ("grid", Family::Grid(*size, *size).generate()?),
                BenchFamily::Er => {
                    if !(0.0..=1.0).contains(p) {
                        return Err(Error::invalid(format!("edge probability {p} outside [0, 1]")));
                    }
                    report.config("p", p);
                    ("er", erdos_renyi(*size, *p, &mut rng_for(cli.seed, 0)))
                }
            };
            for _ in 0..*repeat {
                let start = Instant::now();
                let value = sigma(&g);
                report.records.push(Record::Timing {
                    family: name.to_string(),
                    size: *size,
                    n: g.n(),
                    m: g.edge_count(),
                    sigma: value.to_string(),
                    seconds: start.elapsed().as_secs_f64(),
                });
            }
        }
    }
    Ok(report)
}

fn verify(
    cli: &Cli,
    report: &mut Report,
    graphs: &str,
    sets: bool,
    identities: bool,
    trials: Option<u64>,
    only_parity: bool,
) -> Result<()> {
    let mut docs = load_graphs(graphs, cli.input.format())?;
    report.config("sets", sets);
    report.config("identities", identities);
    report.config("trials", trials);
    report.config("only_parity", only_parity);
    if only_parity {
        let keep: Vec<bool> = docs
            .par_iter()
            .map(|d| is_parity_graph_capped(&d.graph, cli.caps.cap_parity))
            .collect::<Result<_>>()?;
        let mut flags = keep.into_iter();
        docs.retain(|_| flags.next().unwrap());
    }
    let pairs: Vec<(String, crate::graph::Graph)> = docs
        .iter()
        .map(|d| (d.source_id.clone(), d.graph.clone()))
        .collect();
    for verdicts in verify_msc_many(&pairs) {
        report.records.extend(verdicts.into_iter().map(Record::Pair));
    }
    if sets {
        let mode_for = |i: usize| match trials {
            Some(count) => SetMode::Sample {
                count: count as usize,
                seed: cli.seed.wrapping_add(i as u64),
            },
            None => SetMode::Exhaustive,
        };
        let all: Vec<_> = pairs
            .par_iter()
            .enumerate()
            .map(|(i, (id, g))| verify_gmsc_sets_capped(g, id, mode_for(i), cli.caps.cap_sets))
            .collect::<Result<_>>()?;
        for verdicts in all {
            report.records.extend(verdicts.into_iter().map(Record::Set));
        }
    }
    if identities {
        let trials = trials.unwrap_or(100);
        for (i, (id, g)) in pairs.iter().enumerate() {
            let r = verify_identities(g, trials, cli.seed.wrapping_add(i as u64));
            for identity in Identity::ALL {
                if let Some(tally) = r.tallies.get(&identity) {
                    report.records.push(Record::Identity {
                        graph: id.clone(),
                        identity: identity.name().to_string(),
                        tally: tally.clone(),
                    });
                }
            }
            report
                .records
                .extend(r.failures.into_iter().map(Record::IdentityFailure));
        }
    }
    Ok(())
}
