//! `pforest oracle ...`: brute-force answers with the same file formats.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use anyhow::Context;
use clap::{Args, Subcommand};
use serde_json::json;

use perfect_forest::io::{self, SCHEMA};
use perfect_forest::oracle::{self, ForestEnumerator, Limits, Prefix};
use perfect_forest::{Edge, Graph, ParityTarget};

use crate::{
    infeasible, load_graph, read, recheck, resolve_target, soft, GraphArg, Reply, TargetArg,
};

#[derive(Args)]
pub struct OracleArgs {
    /// Raise every brute-force limit (edges, vertices, variables) to this value.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Worker threads for forest enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    op: Op,
}

#[derive(Subcommand)]
enum Op {
    /// Every f-parity perfect forest.
    Enumerate {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        target: TargetArg,
    },
    /// Smallest f-parity perfect forest.
    MinForest {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        target: TargetArg,
    },
    /// Largest 0-perfect forest.
    MaxZeroForest {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Some forest without the edge.
    Avoiding {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_parser = crate::parse_edge)]
        edge: Edge,
        #[command(flatten)]
        target: TargetArg,
    },
    /// Some forest with the edge.
    Containing {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_parser = crate::parse_edge)]
        edge: Edge,
        #[command(flatten)]
        target: TargetArg,
    },
    /// Induced cycle through two edges.
    InducedCycle {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_parser = crate::parse_edge)]
        e1: Edge,
        #[arg(long, value_parser = crate::parse_edge)]
        e2: Edge,
    },
    /// Not-all-equal satisfying assignment of a DIMACS formula.
    NaeSat {
        #[arg(long = "in")]
        input: std::path::PathBuf,
    },
    /// Satisfying assignment of a DIMACS formula.
    Sat {
        #[arg(long = "in")]
        input: std::path::PathBuf,
    },
    /// Maximum independent set.
    MaxIndependentSet {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Weight of a minimum perfect matching (`u v w` edge lines).
    Matching {
        #[command(flatten)]
        graph: GraphArg,
    },
}

fn limits(cap: Option<usize>) -> Limits {
    match cap {
        None => Limits::default(),
        Some(c) => Limits {
            edges: c,
            cycle_vertices: c,
            variables: c.min(62),
            vertices: c.min(62),
        },
    }
}

/// Runs `work` over the enumeration's prefixes on `jobs` threads and returns
/// the results in prefix order. One job runs the whole tree in place.
fn fan_out<T: Send>(
    en: &ForestEnumerator,
    jobs: usize,
    work: impl Fn(&Prefix) -> T + Sync,
) -> Vec<T> {
    if jobs <= 1 {
        return vec![work(&Prefix(Vec::new()))];
    }
    let depth = (jobs * 8).next_power_of_two().trailing_zeros() as usize;
    let prefixes = en.split(depth);
    let next = AtomicUsize::new(0);
    let done = Mutex::new(Vec::with_capacity(prefixes.len()));
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(p) = prefixes.get(i) else { break };
                let r = work(p);
                done.lock().expect("no worker panicked").push((i, r));
            });
        }
    });
    let mut done = done.into_inner().expect("no worker panicked");
    done.sort_by_key(|&(i, _)| i);
    done.into_iter().map(|(_, r)| r).collect()
}

fn sorted(es: &[Edge]) -> Vec<Edge> {
    let mut v = es.to_vec();
    v.sort_unstable();
    v
}

/// Best forest by `better`, in parallel.
fn best(en: &ForestEnumerator, jobs: usize, better: fn(usize, usize) -> bool) -> Option<Vec<Edge>> {
    let parts = fan_out(en, jobs, |p| {
        let mut best: Option<Vec<Edge>> = None;
        en.for_each_in(p, |es| {
            if best.as_ref().is_none_or(|b| better(es.len(), b.len())) {
                best = Some(sorted(es));
            }
            ControlFlow::<()>::Continue(())
        });
        best
    });
    parts
        .into_iter()
        .flatten()
        .reduce(|a, b| if better(b.len(), a.len()) { b } else { a })
}

/// First forest accepted by `keep`, stopping all workers once one is found.
fn first(
    en: &ForestEnumerator,
    jobs: usize,
    keep: impl Fn(&[Edge]) -> bool + Sync,
) -> Option<Vec<Edge>> {
    let found = AtomicBool::new(false);
    let parts = fan_out(en, jobs, |p| {
        en.for_each_in(p, |es| {
            if found.load(Ordering::Relaxed) {
                return ControlFlow::Break(None);
            }
            if keep(es) {
                found.store(true, Ordering::Relaxed);
                return ControlFlow::Break(Some(sorted(es)));
            }
            ControlFlow::Continue(())
        })
        .flatten()
    });
    parts.into_iter().flatten().next()
}

fn forest_answer(
    g: &Graph,
    f: &ParityTarget,
    found: Option<Vec<Edge>>,
    check: bool,
) -> anyhow::Result<Reply> {
    let Some(edges) = found else {
        return Ok(infeasible("none"));
    };
    if check {
        recheck(g, &edges, f)?;
    }
    Ok(Reply::Yes(
        json!({ "schema": SCHEMA, "size": edges.len(), "edges": edges }),
    ))
}

fn assignment(a: Option<Vec<bool>>) -> Reply {
    match a {
        Some(a) => Reply::Yes(json!({ "schema": SCHEMA, "assignment": a })),
        None => infeasible("unsatisfiable"),
    }
}

pub fn run(args: &OracleArgs, check: bool) -> anyhow::Result<Reply> {
    let lim = limits(args.cap);
    let jobs = args.jobs.max(1);
    match &args.op {
        Op::Enumerate { graph, target } => {
            let (g, file_f) = load_graph(graph)?;
            let f = soft!(resolve_target(target, &g, file_f)?);
            let en = ForestEnumerator::new(&g, &f, &lim)?;
            let mut all: Vec<Vec<Edge>> = fan_out(&en, jobs, |p| {
                let mut out = Vec::new();
                en.for_each_in(p, |es| {
                    out.push(sorted(es));
                    ControlFlow::<()>::Continue(())
                });
                out
            })
            .concat();
            all.sort();
            Ok(Reply::Yes(
                json!({ "schema": SCHEMA, "count": all.len(), "forests": all }),
            ))
        }
        Op::MinForest { graph, target } => {
            let (g, file_f) = load_graph(graph)?;
            let f = soft!(resolve_target(target, &g, file_f)?);
            let en = ForestEnumerator::new(&g, &f, &lim)?;
            forest_answer(&g, &f, best(&en, jobs, |new, old| new < old), check)
        }
        Op::MaxZeroForest { graph } => {
            let (g, _) = load_graph(graph)?;
            let f = soft!(ParityTarget::all_ones(g.order()));
            let en = ForestEnumerator::new(&g, &f, &lim)?;
            forest_answer(&g, &f, best(&en, jobs, |new, old| new > old), check)
        }
        Op::Avoiding {
            graph,
            edge,
            target,
        }
        | Op::Containing {
            graph,
            edge,
            target,
        } => {
            let (g, file_f) = load_graph(graph)?;
            g.check_edge(*edge)?;
            let f = soft!(resolve_target(target, &g, file_f)?);
            let en = ForestEnumerator::new(&g, &f, &lim)?;
            let want = matches!(args.op, Op::Containing { .. });
            forest_answer(
                &g,
                &f,
                first(&en, jobs, |es| es.contains(edge) == want),
                check,
            )
        }
        Op::InducedCycle { graph, e1, e2 } => {
            let (g, _) = load_graph(graph)?;
            Ok(
                match oracle::bf_induced_cycle_through(&g, *e1, *e2, &lim)? {
                    Some(c) => Reply::Yes(json!({ "schema": SCHEMA, "cycle": c })),
                    None => infeasible("none"),
                },
            )
        }
        Op::NaeSat { input } | Op::Sat { input } => {
            let cnf = io::parse_dimacs_cnf(&read(input)?)
                .with_context(|| format!("in {}", input.display()))?;
            Ok(assignment(match args.op {
                Op::NaeSat { .. } => oracle::bf_nae_satisfiable(&cnf, &lim)?,
                _ => oracle::bf_satisfiable(&cnf, &lim)?,
            }))
        }
        Op::MaxIndependentSet { graph } => {
            let (g, _) = load_graph(graph)?;
            let set = oracle::bf_max_independent_set(&g, &lim)?;
            Ok(Reply::Yes(
                json!({ "schema": SCHEMA, "size": set.len(), "set": set }),
            ))
        }
        Op::Matching { graph } => {
            let wg = io::parse_weighted_graph(&read(&graph.graph)?)
                .with_context(|| format!("in {}", graph.graph.display()))?;
            Ok(match oracle::bf_min_perfect_matching_weight(&wg, &lim)? {
                Some(w) => Reply::Yes(json!({ "schema": SCHEMA, "weight": w })),
                None => infeasible("no-perfect-matching"),
            })
        }
    }
}
