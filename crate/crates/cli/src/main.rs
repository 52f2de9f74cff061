//! `pforest`: every library operation as a subcommand.
//!
//! Exit status 0 means success with JSON on stdout (or in `--out`), 2 means
//! the input was well formed but the answer is negative, 1 means bad input or
//! usage, with a message on stderr.

mod oracle_cmd;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use perfect_forest::avoid_edge::{decide_avoid_edge, AvoidOutcome};
use perfect_forest::forest::{exists_f_parity_forest_per_component, verify};
use perfect_forest::io::{self, ForestRecord, GadgetRecord, InfeasibleRecord, SCHEMA};
use perfect_forest::matching::min_weight_perfect_matching;
use perfect_forest::min_forest::min_f_parity_forest;
use perfect_forest::one_forest::{is_class_b, one_perfect_forest, proper_one_perfect_forest};
use perfect_forest::reductions::{indset_gadget, induced_cycle_gadget, nae_gadget};
use perfect_forest::{oracle, Edge, Error, Graph, ParityForest, ParityTarget};

#[derive(Parser)]
#[command(
    name = "pforest",
    version,
    about = "Perfect forests: construction, decision, gadgets and brute-force oracles"
)]
struct Cli {
    /// Write the JSON answer here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Re-check every emitted forest and fail if it does not verify.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file: `n m`, then one `u v` line per edge, optional `f:` line.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args)]
struct TargetArg {
    /// `all-ones`, `all-ones-except <v>`, or comma-separated bits. Defaults to
    /// the graph file's `f:` line, else `all-ones`.
    #[arg(long = "f", num_args = 1..=2, value_names = ["TARGET", "V"])]
    f: Option<Vec<String>>,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum f-parity perfect forest.
    MinForest {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        target: TargetArg,
    },
    /// Some f-parity perfect forest (one per component).
    ForestExists {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        target: TargetArg,
    },
    /// An f-parity perfect forest that does not use a given edge.
    AvoidEdge {
        #[command(flatten)]
        graph: GraphArg,
        /// The edge to avoid, as `u,v`.
        #[arg(long, value_parser = parse_edge)]
        edge: Edge,
        #[command(flatten)]
        target: TargetArg,
    },
    /// A 1-perfect forest whose only even-degree vertex is the given one.
    OneForest {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        even_vertex: usize,
    },
    /// A 1-perfect forest without isolated vertices.
    ProperOneForest {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Whether every block is an odd complete graph.
    ClassB {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Build a hardness gadget.
    Gadget {
        kind: GadgetKind,
        /// DIMACS CNF for `nae3sat` and `induced-cycle`, a graph file for `indset`.
        #[arg(long = "in")]
        input: PathBuf,
        /// Target for `indset`: independent set of size k-2.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check an edge set against the forest conditions.
    Verify {
        #[command(flatten)]
        graph: GraphArg,
        /// JSON forest record, or a bare JSON list of `[u, v]` pairs.
        #[arg(long)]
        forest: PathBuf,
        #[command(flatten)]
        target: TargetArg,
    },
    /// Minimum-weight perfect matching of a weighted graph (`u v w` edge lines).
    Matching {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Brute-force reference answers.
    Oracle(oracle_cmd::OracleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    Nae3sat,
    Indset,
    InducedCycle,
}

/// Answer of one command.
enum Reply {
    Yes(Value),
    No(Value),
}

fn parse_edge(s: &str) -> Result<Edge, String> {
    let (a, b) = s.split_once(',').ok_or("expected `u,v`")?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad vertex {a:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad vertex {b:?}"))?;
    Edge::try_new(a, b).ok_or_else(|| format!("self-loop at {a}"))
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(arg: &GraphArg) -> anyhow::Result<(Graph, Option<ParityTarget>)> {
    io::parse_graph(&read(&arg.graph)?).with_context(|| format!("in {}", arg.graph.display()))
}

fn all_ones(n: usize) -> perfect_forest::Result<ParityTarget> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    ParityTarget::all_ones(n)
}

/// The target named on the command line, or the file's, or all ones.
/// A target that cannot exist is a negative answer, not a usage error.
fn resolve_target(
    arg: &TargetArg,
    g: &Graph,
    from_file: Option<ParityTarget>,
) -> anyhow::Result<perfect_forest::Result<ParityTarget>> {
    let n = g.order();
    let Some(given) = &arg.f else {
        return Ok(from_file.map_or_else(|| all_ones(n), Ok));
    };
    Ok(
        match given.iter().map(String::as_str).collect::<Vec<_>>()[..] {
            ["all-ones"] => all_ones(n),
            ["all-ones-except", v] => {
                let v: usize = v.parse().with_context(|| format!("bad vertex {v:?}"))?;
                g.check_vertex(v)?;
                ParityTarget::all_ones_except(n, v)
            }
            [bits] => {
                let bits = bits
                    .split(',')
                    .map(|b| match b.trim() {
                        "0" => Ok(false),
                        "1" => Ok(true),
                        other => bail!("bad target bit {other:?}"),
                    })
                    .collect::<anyhow::Result<Vec<bool>>>()?;
                if bits.len() != n {
                    bail!("target has {} bits for {n} vertices", bits.len());
                }
                ParityTarget::new(bits)
            }
            _ => bail!("--f takes `all-ones`, `all-ones-except <v>` or comma-separated bits"),
        },
    )
}

/// Wire name of an error that means "no such object" rather than bad input.
fn negative_reason(e: &Error) -> Option<&'static str> {
    Some(match e {
        Error::Disconnected => "disconnected",
        Error::OddSum => "odd-sum",
        Error::OddSumComponent(_) => "odd-sum-component",
        Error::OddOrder(_) => "odd-order",
        Error::EvenOrder(_) => "even-order",
        Error::TooSmall(_) => "too-small",
        _ => return None,
    })
}

/// Splits a library result into a value, a negative reply, or a hard error.
fn soften<T>(r: perfect_forest::Result<T>) -> anyhow::Result<Result<T, Reply>> {
    match r {
        Ok(t) => Ok(Ok(t)),
        Err(e) => match negative_reason(&e) {
            Some(reason) => Ok(Err(infeasible(reason))),
            None => Err(e.into()),
        },
    }
}

macro_rules! soft {
    ($e:expr) => {
        match $crate::soften($e)? {
            Ok(t) => t,
            Err(reply) => return Ok(reply),
        }
    };
}
use soft;

fn infeasible(reason: &str) -> Reply {
    Reply::No(serde_json::to_value(InfeasibleRecord::new(reason)).expect("record serializes"))
}

fn forest_reply(g: &Graph, forest: &ParityForest, check: bool) -> anyhow::Result<Reply> {
    if check {
        recheck(g, forest.edges(), forest.target())?;
    }
    Ok(Reply::Yes(serde_json::to_value(ForestRecord::from(
        forest,
    ))?))
}

/// Runs both the library verifier and the oracle's independent one.
fn recheck(g: &Graph, edges: &[Edge], f: &ParityTarget) -> anyhow::Result<()> {
    if let Err(v) = verify(g, edges, f) {
        bail!("verification failed: {v}");
    }
    if !oracle::is_parity_forest(g, edges, f) {
        bail!("verification failed: reference checker rejects the forest");
    }
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<Reply> {
    match &cli.command {
        Command::MinForest { graph, target } => {
            let (g, file_f) = load_graph(graph)?;
            let f = soft!(resolve_target(target, &g, file_f)?);
            let forest = soft!(min_f_parity_forest(&g, &f));
            forest_reply(&g, &forest, cli.verify)
        }
        Command::ForestExists { graph, target } => {
            let (g, file_f) = load_graph(graph)?;
            let f = soft!(resolve_target(target, &g, file_f)?);
            let forest = soft!(exists_f_parity_forest_per_component(&g, &f));
            forest_reply(&g, &forest, cli.verify)
        }
        Command::AvoidEdge {
            graph,
            edge,
            target,
        } => {
            let (g, file_f) = load_graph(graph)?;
            let f = soft!(resolve_target(target, &g, file_f)?);
            match soft!(decide_avoid_edge(&g, *edge, &f)) {
                AvoidOutcome::Feasible(forest) => {
                    if cli.verify && forest.contains(*edge) {
                        bail!("verification failed: forest uses the avoided edge {edge}");
                    }
                    forest_reply(&g, &forest, cli.verify)
                }
                AvoidOutcome::Infeasible(why) => {
                    let mut v = serde_json::to_value(InfeasibleRecord::new("claim-C-sum-2"))?;
                    v["core"] = json!(why.core);
                    Ok(Reply::No(v))
                }
            }
        }
        Command::OneForest { graph, even_vertex } => {
            let (g, _) = load_graph(graph)?;
            g.check_vertex(*even_vertex)?;
            let forest = soft!(one_perfect_forest(&g, *even_vertex));
            forest_reply(&g, &forest, cli.verify)
        }
        Command::ProperOneForest { graph } => {
            let (g, _) = load_graph(graph)?;
            match soft!(proper_one_perfect_forest(&g)) {
                Some(forest) => forest_reply(&g, &forest, cli.verify),
                None => Ok(infeasible("class-B")),
            }
        }
        Command::ClassB { graph } => {
            let (g, _) = load_graph(graph)?;
            Ok(Reply::Yes(
                json!({ "schema": SCHEMA, "class_b": is_class_b(&g) }),
            ))
        }
        Command::Gadget { kind, input, k } => {
            let text = read(input)?;
            let record = match kind {
                GadgetKind::Nae3sat | GadgetKind::InducedCycle => {
                    if k.is_some() {
                        bail!("--k only applies to indset");
                    }
                    let cnf = io::parse_dimacs_cnf(&text)
                        .with_context(|| format!("in {}", input.display()))?;
                    match kind {
                        GadgetKind::Nae3sat => {
                            GadgetRecord::new("nae3sat", &nae_gadget(&cnf)?.instance)
                        }
                        _ => GadgetRecord::new(
                            "induced-cycle",
                            &induced_cycle_gadget(&cnf)?.instance,
                        ),
                    }
                }
                GadgetKind::Indset => {
                    let k = k.context("indset needs --k")?;
                    let (g, _) = io::parse_graph(&text)
                        .with_context(|| format!("in {}", input.display()))?;
                    GadgetRecord::new("indset", &indset_gadget(&g, k)?.instance)
                }
            };
            Ok(Reply::Yes(serde_json::to_value(record)?))
        }
        Command::Verify {
            graph,
            forest,
            target,
        } => {
            let (g, file_f) = load_graph(graph)?;
            let f = soft!(resolve_target(target, &g, file_f)?);
            let raw: Value =
                serde_json::from_str(&read(forest)?).context("forest file is not JSON")?;
            let edges: Vec<Edge> = match raw {
                Value::Object(_) => serde_json::from_value::<ForestRecord>(raw)?.edges,
                other => serde_json::from_value(other)
                    .context("expected a forest record or a list of edges")?,
            };
            Ok(match verify(&g, &edges, &f) {
                Ok(()) => Reply::Yes(json!({ "schema": SCHEMA, "ok": true, "size": edges.len() })),
                Err(v) => {
                    Reply::No(json!({ "schema": SCHEMA, "ok": false, "violation": v.to_string() }))
                }
            })
        }
        Command::Matching { graph } => {
            let wg = io::parse_weighted_graph(&read(&graph.graph)?)
                .with_context(|| format!("in {}", graph.graph.display()))?;
            Ok(match min_weight_perfect_matching(&wg) {
                Some(m) => Reply::Yes(
                    json!({ "schema": SCHEMA, "edges": m.edges(), "weight": m.weight(&wg) }),
                ),
                None => infeasible("no-perfect-matching"),
            })
        }
        Command::Oracle(args) => oracle_cmd::run(args, cli.verify),
    }
}

fn emit(value: &Value, out: Option<&Path>) -> anyhow::Result<()> {
    let text = serde_json::to_string(value)? + "\n";
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = run(&cli).and_then(|reply| {
        let (value, code) = match reply {
            Reply::Yes(v) => (v, 0),
            Reply::No(v) => (v, 2),
        };
        emit(&value, cli.out.as_deref())?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
