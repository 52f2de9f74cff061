//! Minimum-size f-parity perfect forests through a weighted matching problem.
//!
//! Every vertex `v_i` is blown up into a set `X_i` whose size has the parity
//! of `f(v_i)`. A zero-weight matching `M_i` pairs up the vertices of `X_i`
//! (leaving one free when `|X_i|` is odd) and each edge `v_i v_j` becomes a
//! complete bipartite layer of weight-1 edges between `X_i` and `X_j`. A
//! perfect matching of weight `w` then projects to an f-parity edge multiset
//! of size `w` and vice versa, so a minimum-weight perfect matching gives a
//! minimum f-parity subgraph.

use crate::error::{Error, Result};
use crate::forest::{minimize_to_forest, ParityForest, ParityTarget};
use crate::graph::{self, Edge, Graph, Vertex};
use crate::matching::{min_weight_perfect_matching, Matching, WeightedGraph};

#[derive(Clone, Debug)]
pub struct AuxiliaryMatchingInstance {
    pub aux: WeightedGraph,
    /// `X_i` as a contiguous range of aux vertices.
    pub copy_sets: Vec<Vec<Vertex>>,
    pub intra_matchings: Vec<Vec<Edge>>,
    /// Highest vertex of each odd `X_i`.
    pub free_vertex: Vec<Option<Vertex>>,
    /// Indexed like `aux.base().edges()`: the original edge behind each
    /// weight-1 edge, `None` for intra edges.
    pub cross_map: Vec<Option<Edge>>,
}

impl AuxiliaryMatchingInstance {
    /// Original vertex owning an aux vertex.
    pub fn owner(&self, x: Vertex) -> Vertex {
        self.copy_sets
            .partition_point(|set| set.last().is_none_or(|&last| last < x))
    }
}

pub fn build_auxiliary(g: &Graph, f: &ParityTarget) -> Result<AuxiliaryMatchingInstance> {
    f.check_len(g)?;
    let n = g.order();
    let mut copy_sets = Vec::with_capacity(n);
    let mut next = 0;
    for v in g.vertices() {
        let size = if n % 2 == usize::from(f.get(v)) {
            n
        } else {
            n - 1
        };
        copy_sets.push((next..next + size).collect::<Vec<_>>());
        next += size;
    }

    let mut intra_matchings = Vec::with_capacity(n);
    let mut free_vertex = Vec::with_capacity(n);
    let mut triples: Vec<(Vertex, Vertex, u64, Option<Edge>)> = Vec::new();
    for set in &copy_sets {
        let pairs: Vec<Edge> = set.chunks_exact(2).map(|p| Edge::new(p[0], p[1])).collect();
        triples.extend(pairs.iter().map(|e| (e.u(), e.v(), 0, None)));
        intra_matchings.push(pairs);
        free_vertex.push((set.len() % 2 == 1).then(|| *set.last().expect("odd set is nonempty")));
    }
    for &e in g.edges() {
        for &a in &copy_sets[e.u()] {
            for &b in &copy_sets[e.v()] {
                triples.push((a, b, 1, Some(e)));
            }
        }
    }

    let base = Graph::new(next, triples.iter().map(|t| (t.0, t.1)))?;
    let mut weights = vec![0; base.size()];
    let mut cross_map = vec![None; base.size()];
    for &(a, b, w, orig) in &triples {
        let i = base
            .edge_index(Edge::new(a, b))
            .expect("edge was just inserted");
        weights[i] = w;
        cross_map[i] = orig;
    }
    Ok(AuxiliaryMatchingInstance {
        aux: WeightedGraph::new(base, weights)?,
        copy_sets,
        intra_matchings,
        free_vertex,
        cross_map,
    })
}

/// Projects the weight-1 edges of `m` onto `g`, keeping the edges that occur
/// an odd number of times.
pub fn extract_multiset(inst: &AuxiliaryMatchingInstance, m: &Matching) -> Vec<Edge> {
    let mut hits: Vec<Edge> = m
        .edges()
        .iter()
        .filter_map(|&e| {
            inst.cross_map[inst
                .aux
                .base()
                .edge_index(e)
                .expect("matching edge lies in aux")]
        })
        .collect();
    hits.sort_unstable();
    let mut out = Vec::new();
    for run in hits.chunk_by(|a, b| a == b) {
        if run.len() % 2 == 1 {
            out.push(run[0]);
        }
    }
    out
}

/// An f-parity perfect forest of minimum size in a connected graph.
pub fn min_f_parity_forest(g: &Graph, f: &ParityTarget) -> Result<ParityForest> {
    f.check_len(g)?;
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let inst = build_auxiliary(g, f)?;
    let m = min_weight_perfect_matching(&inst.aux)
        .expect("the intra matchings extend to a perfect matching");
    let multiset = extract_multiset(&inst, &m);
    let forest = minimize_to_forest(g, &multiset);
    Ok(
        ParityForest::new(g, forest.into_edges(), f.clone())
            .expect("extraction preserves parities"),
    )
}

/// A 0-perfect forest of minimum size; `n/2` exactly when `g` has a perfect matching.
pub fn min_zero_perfect_forest(g: &Graph) -> Result<ParityForest> {
    if g.order() % 2 == 1 {
        return Err(Error::OddOrder(g.order()));
    }
    min_f_parity_forest(g, &ParityTarget::all_ones(g.order())?)
}
