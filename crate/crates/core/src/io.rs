//! Text formats and the versioned JSON records the command line emits.
//!
//! Graph files: first non-comment line `n m`, then `m` lines `u v` with
//! `u < v`; `#` comments and blank lines are skipped. An optional line
//! `f: b0 b1 ...` carries a parity target. Weighted files extend each edge
//! line to `u v w`. Formulas use DIMACS CNF with three literals per clause.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::{ParityForest, ParityTarget};
use crate::graph::{Edge, Graph, Vertex};
use crate::matching::WeightedGraph;
use crate::reductions::{CnfInstance, GadgetInstance};

pub const SCHEMA: u32 = 1;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers<T: std::str::FromStr>(line: usize, s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| parse_err(line, format!("expected a number, found {t:?}")))
        })
        .collect()
}

struct RawGraph {
    n: usize,
    edges: Vec<(usize, Edge, Option<u64>)>,
    target: Option<(usize, Vec<bool>)>,
}

fn parse_raw(text: &str, weighted: bool) -> Result<RawGraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty graph file"))?;
    let head: Vec<usize> = numbers(hl, header)?;
    let [n, m] = head[..] else {
        return Err(parse_err(hl, "header must be `n m`"));
    };
    let mut raw = RawGraph {
        n,
        edges: Vec::with_capacity(m),
        target: None,
    };
    let width = if weighted { 3 } else { 2 };
    for (ln, l) in lines {
        if let Some(bits) = l.strip_prefix("f:") {
            if raw.target.is_some() {
                return Err(parse_err(ln, "second `f:` line"));
            }
            let bits: Vec<u8> = numbers(ln, bits)?;
            if bits.iter().any(|&b| b > 1) {
                return Err(parse_err(ln, "target bits must be 0 or 1"));
            }
            raw.target = Some((ln, bits.into_iter().map(|b| b == 1).collect()));
            continue;
        }
        let nums: Vec<u64> = numbers(ln, l)?;
        if nums.len() != width {
            return Err(parse_err(ln, format!("edge line needs {width} numbers")));
        }
        let (u, v) = (nums[0] as usize, nums[1] as usize);
        if u >= v || v >= n {
            return Err(parse_err(ln, format!("edge `{u} {v}` needs u < v < {n}")));
        }
        raw.edges
            .push((ln, Edge::new(u, v), weighted.then(|| nums[2])));
    }
    if raw.edges.len() != m {
        return Err(parse_err(
            hl,
            format!("header announces {m} edges, found {}", raw.edges.len()),
        ));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &(ln, e, _) in &raw.edges {
        if !seen.insert(e) {
            return Err(parse_err(ln, format!("duplicate edge {e}")));
        }
    }
    Ok(raw)
}

fn target_of(raw: &RawGraph) -> Result<Option<ParityTarget>> {
    raw.target
        .as_ref()
        .map(|(ln, bits)| {
            if bits.len() != raw.n {
                return Err(parse_err(
                    *ln,
                    format!("target has {} bits for {} vertices", bits.len(), raw.n),
                ));
            }
            ParityTarget::new(bits.clone()).map_err(|e| parse_err(*ln, e.to_string()))
        })
        .transpose()
}

/// Parses a graph file, returning the target too when an `f:` line is present.
pub fn parse_graph(text: &str) -> Result<(Graph, Option<ParityTarget>)> {
    let raw = parse_raw(text, false)?;
    let f = target_of(&raw)?;
    let g = Graph::from_edges(raw.n, raw.edges.iter().map(|&(_, e, _)| e))?;
    Ok((g, f))
}

pub fn write_graph(g: &Graph, f: Option<&ParityTarget>) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    if let Some(f) = f {
        let bits: Vec<&str> = f
            .bits()
            .iter()
            .map(|&b| if b { "1" } else { "0" })
            .collect();
        let _ = writeln!(out, "f: {}", bits.join(" "));
    }
    out
}

pub fn parse_weighted_graph(text: &str) -> Result<WeightedGraph> {
    let raw = parse_raw(text, true)?;
    WeightedGraph::from_triples(
        raw.n,
        raw.edges
            .iter()
            .map(|&(_, e, w)| (e.u(), e.v(), w.expect("weighted line"))),
    )
}

pub fn write_weighted_graph(wg: &WeightedGraph) -> String {
    let g = wg.base();
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (e, w) in g.edges().iter().zip(wg.weights()) {
        let _ = writeln!(out, "{} {} {w}", e.u(), e.v());
    }
    out
}

/// DIMACS CNF: `c` comments, a `p cnf n m` header, clauses ended by `0`
/// (possibly spanning lines). Every clause must have exactly three literals.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfInstance> {
    let mut header = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (ln, l) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if l.is_empty() || l.starts_with('c') || l.starts_with('%') {
            continue;
        }
        if let Some(rest) = l.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if header.is_some() || parts.len() != 3 || parts[0] != "cnf" {
                return Err(parse_err(ln, "header must be `p cnf <vars> <clauses>`"));
            }
            let nm: Vec<usize> = numbers(ln, &parts[1..].join(" "))?;
            header = Some((nm[0], nm[1]));
            continue;
        }
        if header.is_none() {
            return Err(parse_err(ln, "clause before the `p cnf` header"));
        }
        for lit in numbers::<i32>(ln, l)? {
            if lit == 0 {
                let clause: [i32; 3] = current.as_slice().try_into().map_err(|_| {
                    parse_err(
                        ln,
                        format!("clause has {} literals, expected 3", current.len()),
                    )
                })?;
                clauses.push(clause);
                current.clear();
            } else {
                current.push(lit);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p cnf` header"))?;
    if !current.is_empty() {
        return Err(parse_err(0, "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(parse_err(
            0,
            format!("header announces {m} clauses, found {}", clauses.len()),
        ));
    }
    CnfInstance::new(n, clauses)
}

pub fn write_dimacs_cnf(cnf: &CnfInstance) -> String {
    let mut out = format!("p cnf {} {}\n", cnf.num_vars(), cnf.clauses().len());
    for c in cnf.clauses() {
        let _ = writeln!(out, "{} {} {} 0", c[0], c[1], c[2]);
    }
    out
}

/// A forest as printed by the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestRecord {
    pub schema: u32,
    pub edges: Vec<Edge>,
    pub size: usize,
    pub proper: bool,
    pub even_degree_vertices: Vec<Vertex>,
}

impl From<&ParityForest> for ForestRecord {
    fn from(f: &ParityForest) -> Self {
        ForestRecord {
            schema: SCHEMA,
            edges: f.edges().to_vec(),
            size: f.size(),
            proper: f.is_proper(),
            even_degree_vertices: f.even_degree_vertices(),
        }
    }
}

/// A negative answer on well-formed input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfeasibleRecord {
    pub schema: u32,
    pub feasible: bool,
    pub reason: String,
}

impl InfeasibleRecord {
    pub fn new(reason: impl Into<String>) -> Self {
        InfeasibleRecord {
            schema: SCHEMA,
            feasible: false,
            reason: reason.into(),
        }
    }
}

/// A gadget graph with its role map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetRecord {
    pub schema: u32,
    pub kind: String,
    pub n: usize,
    pub edges: Vec<Edge>,
    pub roles: BTreeMap<String, Vertex>,
    pub params: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub marked: BTreeMap<String, Edge>,
}

impl GadgetRecord {
    pub fn new(kind: &str, inst: &GadgetInstance) -> Self {
        GadgetRecord {
            schema: SCHEMA,
            kind: kind.to_string(),
            n: inst.graph.order(),
            edges: inst.graph.edges().to_vec(),
            roles: inst
                .roles
                .iter()
                .enumerate()
                .map(|(v, r)| (r.clone(), v))
                .collect(),
            params: inst.params.clone(),
            marked: inst.marked.clone(),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().copied())
    }
}
