//! Independent set to "0-perfect forest with many edges", through an induced
//! path in an intermediate graph.
//!
//! For input `g` of order `n0` and `k`, `G'` has `N = n0 + 2` vertices at
//! positions `1..=N`; positions `1` and `k` are new isolated vertices and
//! input vertex `t` sits at position `t + 2` when `t < k − 2`, else `t + 3`.
//! `G'` ids are positions minus one.
//!
//! Layout of the final graph: `v_a^1` at `a − 1`, `v_a^2` at `N + a − 1`,
//! then `w_{a,b}` in lexicographic `(a, b)` order, then one pendant per
//! vertex so far except `v_1^1` and `v_k^2`, in ascending anchor order. The
//! first two layers form the intermediate graph under the same ids.

use std::collections::BTreeMap;

use super::{add_pendants, GadgetInstance};
use crate::error::{Error, Result};
use crate::forest::{ParityForest, ParityTarget};
use crate::graph::{self, Edge, Graph, Vertex};

/// The four equivalent statements, in the order the conversions chain them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Statement {
    /// Independent set of size `k − 2` in `g`.
    IndependentSet,
    /// Independent set of size `k` in `G'`.
    PrimeSet,
    /// Induced `(v_1^1, v_k^2)`-path with `3k − 2` edges.
    InducedPath,
    /// 0-perfect forest with `|V|/2 + 3k − 3` edges.
    Forest,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndSetWitness {
    IndependentSet(Vec<Vertex>),
    PrimeSet(Vec<Vertex>),
    InducedPath(Vec<Vertex>),
    Forest(Vec<Edge>),
}

impl IndSetWitness {
    pub fn statement(&self) -> Statement {
        match self {
            IndSetWitness::IndependentSet(_) => Statement::IndependentSet,
            IndSetWitness::PrimeSet(_) => Statement::PrimeSet,
            IndSetWitness::InducedPath(_) => Statement::InducedPath,
            IndSetWitness::Forest(_) => Statement::Forest,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IndSetGadget {
    pub instance: GadgetInstance,
    pub source: Graph,
    pub k: usize,
    /// `G'`, in `G'` ids.
    pub prime: Graph,
    /// Order of the intermediate graph (copies plus `w` vertices).
    pub path_host_order: usize,
}

fn position(t: usize, k: usize) -> usize {
    if t + 2 < k {
        t + 2
    } else {
        t + 3
    }
}

pub fn indset_gadget(g: &Graph, k: usize) -> Result<IndSetGadget> {
    let n0 = g.order();
    if k < 2 || k > n0 + 2 {
        return Err(Error::Precondition(format!(
            "k = {k} outside 2..={}",
            n0 + 2
        )));
    }
    let big_n = n0 + 2;
    let prime = Graph::from_edges(
        big_n,
        g.edges()
            .iter()
            .map(|e| Edge::new(position(e.u(), k) - 1, position(e.v(), k) - 1)),
    )?;
    let joined = |a: Vertex, b: Vertex| a == b || prime.has_edge(a, b);

    let mut roles: Vec<String> = Vec::new();
    for copy in 1..=2 {
        roles.extend((1..=big_n).map(|a| format!("v_{a}^{copy}")));
    }
    let mut edges = Vec::new();
    for a in 0..big_n {
        for b in 0..big_n {
            if joined(a, b) {
                edges.push(Edge::new(a, big_n + b));
                if a < b {
                    edges.push(Edge::new(a, b));
                    edges.push(Edge::new(big_n + a, big_n + b));
                }
            }
        }
    }
    for a in 0..big_n {
        for b in 0..big_n {
            if !joined(a, b) {
                let w = roles.len();
                roles.push(format!("w_{{{},{}}}", a + 1, b + 1));
                edges.push(Edge::new(a, w));
                edges.push(Edge::new(big_n + b, w));
            }
        }
    }
    let path_host_order = roles.len();
    let anchors: Vec<Vertex> = (0..path_host_order)
        .filter(|&v| v != 0 && v != big_n + k - 1)
        .collect();
    add_pendants(&mut edges, &mut roles, &anchors);

    let graph = Graph::from_edges(roles.len(), edges)?;
    let mut params = BTreeMap::from([
        ("n".to_string(), n0),
        ("k".to_string(), k),
        ("N".to_string(), big_n),
    ]);
    for t in 0..n0 {
        params.insert(format!("input:{t}"), position(t, k));
    }
    Ok(IndSetGadget {
        instance: GadgetInstance::new(graph, roles, params, BTreeMap::new()),
        source: g.clone(),
        k,
        prime,
        path_host_order,
    })
}

fn independent(g: &Graph, set: &[Vertex]) -> bool {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
        && s.iter().all(|&v| v < g.order())
        && s.iter()
            .enumerate()
            .all(|(i, &a)| s[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidWitness(msg.into())
}

impl IndSetGadget {
    pub fn graph(&self) -> &Graph {
        &self.instance.graph
    }

    fn big_n(&self) -> usize {
        self.prime.order()
    }

    /// The intermediate graph, under the same ids as the final one.
    pub fn path_host(&self) -> Graph {
        let keep: Vec<Vertex> = (0..self.path_host_order).collect();
        self.graph().induced_subgraph(&keep).0
    }

    pub fn path_start(&self) -> Vertex {
        0
    }

    pub fn path_end(&self) -> Vertex {
        self.big_n() + self.k - 1
    }

    pub fn path_length(&self) -> usize {
        3 * self.k - 2
    }

    pub fn forest_threshold(&self) -> usize {
        self.graph().order() / 2 + 3 * self.k - 3
    }

    fn input_of(&self, id: Vertex) -> Option<Vertex> {
        let p = id + 1;
        if p == 1 || p == self.k {
            None
        } else if p < self.k {
            Some(p - 2)
        } else {
            Some(p - 3)
        }
    }

    fn w(&self, a: Vertex, b: Vertex) -> Vertex {
        self.instance.v(&format!("w_{{{},{}}}", a + 1, b + 1))
    }

    /// Validates `w` and converts it to a witness of `to`, one step at a time.
    pub fn convert(&self, w: &IndSetWitness, to: Statement) -> Result<IndSetWitness> {
        self.validate(w)?;
        let mut cur = w.clone();
        while cur.statement() != to {
            cur = if cur.statement() < to {
                self.forward(&cur)?
            } else {
                self.backward(&cur)?
            };
            self.validate(&cur)?;
        }
        Ok(cur)
    }

    pub fn validate(&self, w: &IndSetWitness) -> Result<()> {
        let k = self.k;
        match w {
            IndSetWitness::IndependentSet(s) => {
                if s.len() < k - 2 || !independent(&self.source, s) {
                    return Err(invalid(format!(
                        "need an independent set of size {} in the input graph",
                        k - 2
                    )));
                }
            }
            IndSetWitness::PrimeSet(s) => {
                if s.len() < k || !independent(&self.prime, s) {
                    return Err(invalid(format!(
                        "need an independent set of size {k} in the extended graph"
                    )));
                }
            }
            IndSetWitness::InducedPath(p) => {
                let ok = p.first() == Some(&self.path_start())
                    && p.last() == Some(&self.path_end())
                    && p.len() > self.path_length()
                    && p.iter().all(|&v| v < self.path_host_order)
                    && graph::is_induced_path(self.graph(), p);
                if !ok {
                    return Err(invalid(format!(
                        "need an induced path from v_1^1 to v_{k}^2 with at least {} edges",
                        self.path_length()
                    )));
                }
            }
            IndSetWitness::Forest(edges) => {
                let g = self.graph();
                let f = ParityForest::new(g, edges.clone(), ParityTarget::all_ones(g.order())?)
                    .map_err(|v| invalid(format!("not a 0-perfect forest: {v}")))?;
                if f.size() < self.forest_threshold() {
                    return Err(invalid(format!(
                        "forest has {} edges, needs {}",
                        f.size(),
                        self.forest_threshold()
                    )));
                }
            }
        }
        Ok(())
    }

    fn forward(&self, w: &IndSetWitness) -> Result<IndSetWitness> {
        let k = self.k;
        Ok(match w {
            IndSetWitness::IndependentSet(s) => {
                let mut s = s.clone();
                s.sort_unstable();
                let mut out: Vec<Vertex> = s[..k - 2].iter().map(|&t| position(t, k) - 1).collect();
                out.extend([0, k - 1]);
                out.sort_unstable();
                IndSetWitness::PrimeSet(out)
            }
            IndSetWitness::PrimeSet(s) => {
                // The two isolated vertices can always join; they bracket the path.
                let mut middle: Vec<Vertex> = s
                    .iter()
                    .copied()
                    .filter(|&a| a != 0 && a != k - 1)
                    .collect();
                middle.sort_unstable();
                middle.truncate(k - 2);
                let mut seq = vec![0];
                seq.extend(middle);
                seq.push(k - 1);
                let n = self.big_n();
                let mut path = Vec::with_capacity(3 * k - 1);
                for (i, &a) in seq.iter().enumerate() {
                    if i > 0 {
                        path.push(self.w(a, seq[i - 1]));
                    }
                    path.extend([a, n + a]);
                }
                IndSetWitness::InducedPath(path)
            }
            IndSetWitness::InducedPath(p) => {
                let n = self.graph().order();
                let pendants =
                    (self.path_host_order..n).map(|p| Edge::new(self.graph().neighbors(p)[0], p));
                IndSetWitness::Forest(
                    graph::walk_edges(p, false)
                        .into_iter()
                        .chain(pendants)
                        .collect(),
                )
            }
            IndSetWitness::Forest(_) => unreachable!("no statement after the forest"),
        })
    }

    fn backward(&self, w: &IndSetWitness) -> Result<IndSetWitness> {
        let k = self.k;
        Ok(match w {
            IndSetWitness::Forest(edges) => {
                let core = Graph::from_edges(
                    self.path_host_order,
                    edges
                        .iter()
                        .copied()
                        .filter(|e| e.v() < self.path_host_order),
                )?;
                let mut path = vec![self.path_start()];
                let mut prev = None;
                while let Some(&next) = core
                    .neighbors(*path.last().unwrap())
                    .iter()
                    .find(|&&y| Some(y) != prev)
                {
                    prev = path.last().copied();
                    path.push(next);
                }
                IndSetWitness::InducedPath(path)
            }
            IndSetWitness::InducedPath(p) => {
                let n = self.big_n();
                let in_copies = |v: Vertex| v < 2 * n;
                let mut picked = vec![0usize];
                for (i, &v) in p.iter().enumerate().skip(2) {
                    if in_copies(v) && i >= picked.last().unwrap() + 2 {
                        picked.push(i);
                    }
                }
                let mut set: Vec<Vertex> = picked.iter().map(|&i| p[i] % n).collect();
                set.sort_unstable();
                IndSetWitness::PrimeSet(set)
            }
            IndSetWitness::PrimeSet(s) => {
                let mut set: Vec<Vertex> = s.iter().filter_map(|&a| self.input_of(a)).collect();
                set.sort_unstable();
                set.truncate(k - 2);
                IndSetWitness::IndependentSet(set)
            }
            IndSetWitness::IndependentSet(_) => {
                unreachable!("no statement before the independent set")
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_counts() {
        let gad = indset_gadget(&Graph::cycle(4), 4).unwrap();
        assert_eq!(gad.path_host_order, 34);
        assert_eq!(gad.graph().order(), 66);
        assert_eq!(gad.graph().size(), 98);
        assert_eq!(gad.forest_threshold(), 42);
        assert_eq!(gad.instance.params["input:2"], 5);
    }

    #[test]
    fn single_vertex() {
        let gad = indset_gadget(&Graph::empty(1), 2).unwrap();
        assert_eq!(gad.prime.order(), 3);
        let w = gad
            .convert(
                &IndSetWitness::IndependentSet(vec![]),
                Statement::InducedPath,
            )
            .unwrap();
        assert_eq!(w, IndSetWitness::InducedPath(vec![0, 3, gad.w(1, 0), 1, 4]));
        assert!(indset_gadget(&Graph::empty(1), 4).is_err());
        assert!(indset_gadget(&Graph::empty(1), 1).is_err());
    }

    #[test]
    fn cross_edges_follow_closed_neighbourhoods() {
        let gad = indset_gadget(&Graph::path(3), 3).unwrap();
        let n = gad.prime.order();
        for a in 0..n {
            for b in 0..n {
                let want = a == b || gad.prime.has_edge(a, b);
                assert_eq!(gad.graph().has_edge(a, n + b), want);
            }
        }
    }

    #[test]
    fn four_cycle_chain() {
        let gad = indset_gadget(&Graph::cycle(4), 4).unwrap();
        let path = gad
            .convert(
                &IndSetWitness::IndependentSet(vec![0, 2]),
                Statement::InducedPath,
            )
            .unwrap();
        let IndSetWitness::InducedPath(p) = &path else {
            panic!()
        };
        assert_eq!(p.len(), 11);
        let forest = gad.convert(&path, Statement::Forest).unwrap();
        let IndSetWitness::Forest(f) = &forest else {
            panic!()
        };
        assert_eq!(f.len(), 42);
        assert_eq!(gad.convert(&forest, Statement::InducedPath).unwrap(), path);
        let back = gad.convert(&forest, Statement::IndependentSet).unwrap();
        assert_eq!(back, IndSetWitness::IndependentSet(vec![0, 2]));
        assert!(gad
            .convert(
                &IndSetWitness::IndependentSet(vec![0, 1]),
                Statement::Forest
            )
            .is_err());
    }
}
