//! Parity targets, semiperfect forests, and the existence construction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, bfs_path, component_labels, Edge, Graph, Vertex, VertexMap};

/// Per-vertex parity `f(v)` with an even number of ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct ParityTarget {
    bits: Vec<bool>,
}

impl ParityTarget {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.iter().filter(|&&b| b).count() % 2 == 1 {
            return Err(Error::OddSum);
        }
        Ok(ParityTarget { bits })
    }

    pub fn zeros(n: usize) -> Self {
        ParityTarget {
            bits: vec![false; n],
        }
    }

    /// `f ≡ 1`; needs `n` even.
    pub fn all_ones(n: usize) -> Result<Self> {
        Self::new(vec![true; n])
    }

    /// `f ≡ 1` except `f(v) = 0`; needs `n` odd.
    pub fn all_ones_except(n: usize, v: Vertex) -> Result<Self> {
        if v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: n,
            });
        }
        let mut bits = vec![true; n];
        bits[v] = false;
        Self::new(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, v: Vertex) -> bool {
        self.bits[v]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn ones(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(v, _)| v)
    }

    pub fn count_ones(&self) -> usize {
        self.ones().count()
    }

    pub fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() == g.order() {
            Ok(())
        } else {
            Err(Error::TargetLength {
                expected: g.order(),
                got: self.len(),
            })
        }
    }

    /// Restriction to the vertices of a derived graph, `None` if odd there.
    pub fn restrict(&self, map: &VertexMap) -> Option<Self> {
        let bits = map
            .parent_vertices()
            .iter()
            .map(|&v| self.bits[v])
            .collect();
        Self::new(bits).ok()
    }
}

impl TryFrom<Vec<u8>> for ParityTarget {
    type Error = String;

    fn try_from(raw: Vec<u8>) -> std::result::Result<Self, Self::Error> {
        let bits = raw
            .into_iter()
            .map(|b| match b {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(format!("parity bit must be 0 or 1, got {other}")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        ParityTarget::new(bits).map_err(|e| e.to_string())
    }
}

impl From<ParityTarget> for Vec<u8> {
    fn from(t: ParityTarget) -> Self {
        t.bits.into_iter().map(u8::from).collect()
    }
}

/// Why an edge set fails to be an f-parity perfect forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TargetLength {
        expected: usize,
        got: usize,
    },
    NotHostEdge(Edge),
    Repeated(Edge),
    Cycle(Vec<Edge>),
    /// A host edge joining two vertices of the same tree.
    Chord(Edge),
    Parity {
        vertex: Vertex,
        degree: usize,
        target: bool,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TargetLength { expected, got } => {
                write!(f, "target has {got} entries, host has {expected} vertices")
            }
            Violation::NotHostEdge(e) => write!(f, "{e} is not a host edge"),
            Violation::Repeated(e) => write!(f, "{e} is listed twice"),
            Violation::Cycle(c) => {
                let parts: Vec<String> = c.iter().map(|e| e.to_string()).collect();
                write!(f, "cycle {}", parts.join(" "))
            }
            Violation::Chord(e) => write!(f, "tree is not induced: chord {e}"),
            Violation::Parity {
                vertex,
                degree,
                target,
            } => {
                write!(
                    f,
                    "vertex {vertex} has degree {degree}, target parity {}",
                    u8::from(*target)
                )
            }
        }
    }
}

impl std::error::Error for Violation {}

/// Degree of every vertex in `edges`.
pub fn degrees(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut deg = vec![0; n];
    for e in edges {
        deg[e.u()] += 1;
        deg[e.v()] += 1;
    }
    deg
}

/// Checks the three forest conditions in order: acyclic, every tree induced,
/// degrees match the target. Reports the first failure.
pub fn verify(host: &Graph, edges: &[Edge], target: &ParityTarget) -> Result<(), Violation> {
    let n = host.order();
    if target.len() != n {
        return Err(Violation::TargetLength {
            expected: n,
            got: target.len(),
        });
    }
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    for (i, &e) in sorted.iter().enumerate() {
        if !host.contains_edge(e) {
            return Err(Violation::NotHostEdge(e));
        }
        if i > 0 && sorted[i - 1] == e {
            return Err(Violation::Repeated(e));
        }
    }

    let mut dsu = Dsu::new(n);
    for (i, &e) in sorted.iter().enumerate() {
        if !dsu.union(e.u(), e.v()) {
            return Err(Violation::Cycle(cycle_through(n, &sorted[..i], e)));
        }
    }

    let mut member = vec![false; host.size()];
    for &e in &sorted {
        member[host.edge_index(e).expect("checked above")] = true;
    }
    for (i, &e) in host.edges().iter().enumerate() {
        if !member[i] && dsu.find(e.u()) == dsu.find(e.v()) {
            return Err(Violation::Chord(e));
        }
    }

    for (v, d) in degrees(n, &sorted).into_iter().enumerate() {
        if (d % 2 == 1) != target.get(v) {
            return Err(Violation::Parity {
                vertex: v,
                degree: d,
                target: target.get(v),
            });
        }
    }
    Ok(())
}

/// `forest` is acyclic and the endpoints of `closing` are already joined in it.
fn cycle_through(n: usize, forest: &[Edge], closing: Edge) -> Vec<Edge> {
    let g = Graph::from_edges(n, forest.iter().copied()).expect("forest edges are distinct");
    let path = bfs_path(&g, closing.u(), closing.v()).expect("endpoints are connected");
    let mut cycle: Vec<Edge> = path.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
    cycle.push(closing);
    cycle
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        self.parent[a.max(b)] = a.min(b);
        true
    }
}

/// An edge set that has passed [`verify`] against its host and target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityForest {
    edges: Vec<Edge>,
    #[serde(skip)]
    target: ParityTarget,
}

impl ParityForest {
    pub fn new(
        host: &Graph,
        mut edges: Vec<Edge>,
        target: ParityTarget,
    ) -> Result<Self, Violation> {
        verify(host, &edges, &target)?;
        edges.sort_unstable();
        Ok(ParityForest { edges, target })
    }

    /// Verifies against the parity profile the edges themselves induce, so
    /// only the forest conditions are checked.
    pub fn semiperfect(host: &Graph, edges: Vec<Edge>) -> Result<Self, Violation> {
        let target = parity_profile(host.order(), &edges);
        Self::new(host, edges, target)
    }

    pub fn empty(n: usize) -> Self {
        ParityForest {
            edges: Vec::new(),
            target: ParityTarget::zeros(n),
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn order(&self) -> usize {
        self.target.len()
    }

    pub fn target(&self) -> &ParityTarget {
        &self.target
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        degrees(self.order(), &self.edges)
    }

    /// No vertex of degree zero.
    pub fn is_proper(&self) -> bool {
        self.degrees().iter().all(|&d| d > 0)
    }

    pub fn even_degree_vertices(&self) -> Vec<Vertex> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d % 2 == 0)
            .map(|(v, _)| v)
            .collect()
    }
}

/// Target whose ones are exactly the odd-degree vertices of `edges`.
pub fn parity_profile(n: usize, edges: &[Edge]) -> ParityTarget {
    let bits = degrees(n, edges).into_iter().map(|d| d % 2 == 1).collect();
    ParityTarget::new(bits).expect("degree sum is even")
}

/// Edges lying on an odd number of the BFS paths joining consecutive
/// odd-target vertices (first with second, third with fourth, ...).
pub fn xor_paths_subgraph(g: &Graph, f: &ParityTarget) -> Result<Vec<Edge>> {
    f.check_len(g)?;
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut in_set = vec![false; g.size()];
    let odd: Vec<Vertex> = f.ones().collect();
    for pair in odd.chunks(2) {
        let path = bfs_path(g, pair[0], pair[1]).expect("graph is connected");
        for w in path.windows(2) {
            let i = g
                .edge_index(Edge::new(w[0], w[1]))
                .expect("path uses host edges");
            in_set[i] = !in_set[i];
        }
    }
    Ok(g.edges()
        .iter()
        .zip(in_set)
        .filter(|(_, keep)| *keep)
        .map(|(&e, _)| e)
        .collect())
}

/// Shrinks a parity subgraph of `g` to a semiperfect forest with the same
/// degree parities: drop the edges of a cycle through the lowest cycle edge
/// while cycles remain, then swap the tree path under the lowest chord for
/// the chord itself until no chord remains.
pub fn minimize_to_forest(g: &Graph, edges: &[Edge]) -> ParityForest {
    let n = g.order();
    let mut current: Vec<Edge> = edges.to_vec();
    current.sort_unstable();
    current.dedup();

    loop {
        let sub = Graph::from_edges(n, current.iter().copied()).expect("edges are distinct");
        let blocks = graph::block_decomposition(&sub);
        let on_cycle = blocks
            .blocks
            .iter()
            .filter(|b| b.edges.len() > 1)
            .flat_map(|b| b.edges.iter().copied())
            .min();
        let Some(e) = on_cycle else { break };
        let path = bfs_path(&sub.without_edge(e), e.u(), e.v()).expect("edge lies on a cycle");
        let mut drop: Vec<Edge> = path.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
        drop.push(e);
        drop.sort_unstable();
        current.retain(|x| drop.binary_search(x).is_err());
    }

    loop {
        let sub = Graph::from_edges(n, current.iter().copied()).expect("edges are distinct");
        let tree = component_labels(&sub);
        let chord = g
            .edges()
            .iter()
            .copied()
            .find(|&e| tree[e.u()] == tree[e.v()] && !sub.contains_edge(e));
        let Some(chord) = chord else { break };
        let path = bfs_path(&sub, chord.u(), chord.v()).expect("chord endpoints share a tree");
        let mut drop: Vec<Edge> = path.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
        drop.sort_unstable();
        current.retain(|x| drop.binary_search(x).is_err());
        let pos = current.binary_search(&chord).unwrap_err();
        current.insert(pos, chord);
    }

    ParityForest::semiperfect(g, current).expect("minimization yields a semiperfect forest")
}

/// An f-parity perfect forest of a connected graph.
pub fn exists_f_parity_forest(g: &Graph, f: &ParityTarget) -> Result<ParityForest> {
    let h = xor_paths_subgraph(g, f)?;
    let forest = minimize_to_forest(g, &h);
    Ok(ParityForest::new(g, forest.into_edges(), f.clone()).expect("parities are preserved"))
}

/// A 0-perfect forest (all degrees odd) of a connected even-order graph.
pub fn zero_perfect_forest(g: &Graph) -> Result<ParityForest> {
    if g.order() % 2 == 1 {
        return Err(Error::OddOrder(g.order()));
    }
    exists_f_parity_forest(g, &ParityTarget::all_ones(g.order())?)
}

/// [`exists_f_parity_forest`] on each component separately; needs `f` to
/// have even sum on every component.
pub fn exists_f_parity_forest_per_component(g: &Graph, f: &ParityTarget) -> Result<ParityForest> {
    f.check_len(g)?;
    let mut edges = Vec::new();
    for comp in graph::connected_components(g) {
        let (sub, map) = g.induced_subgraph(&comp);
        let local = f.restrict(&map).ok_or(Error::OddSumComponent(comp[0]))?;
        let forest = exists_f_parity_forest(&sub, &local)?;
        edges.extend(map.lift_edges(forest.edges()));
    }
    Ok(ParityForest::new(g, edges, f.clone()).expect("union of per-component forests"))
}

/// Lifts forests found on vertex-disjoint derived graphs back to `host`
/// and verifies the union against `target`.
pub fn union_lifted(
    host: &Graph,
    parts: &[(&ParityForest, &VertexMap)],
    target: ParityTarget,
) -> Result<ParityForest, Violation> {
    let edges = parts
        .iter()
        .flat_map(|(f, m)| m.lift_edges(f.edges()))
        .collect();
    ParityForest::new(host, edges, target)
}
