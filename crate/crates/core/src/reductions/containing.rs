//! Induced cycle through `e1` and `e2` to "0-perfect forest containing `e2`".
//!
//! `h` is `g − e1` with a pendant on every vertex other than the endpoints of
//! `e1`, appended in ascending anchor order. Original vertices keep their ids.

use crate::error::{Error, Result};
use crate::forest::{ParityForest, ParityTarget};
use crate::graph::{self, Edge, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainingEdgeInstance {
    pub source: Graph,
    pub e1: Edge,
    pub h: Graph,
    /// `e2` as an edge of `h` (same ids).
    pub e2: Edge,
    pub anchors: Vec<Vertex>,
}

pub fn containing_edge_instance(g: &Graph, e1: Edge, e2: Edge) -> Result<ContainingEdgeInstance> {
    g.check_edge(e1)?;
    g.check_edge(e2)?;
    if e1 == e2 {
        return Err(Error::Precondition(format!("e1 and e2 are both {e1}")));
    }
    let anchors: Vec<Vertex> = g.vertices().filter(|&v| !e1.contains(v)).collect();
    let h = g.without_edge(e1).with_pendants(&anchors);
    Ok(ContainingEdgeInstance {
        source: g.clone(),
        e1,
        h,
        e2,
        anchors,
    })
}

impl ContainingEdgeInstance {
    fn pendant_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.source.order();
        self.anchors
            .iter()
            .enumerate()
            .map(move |(i, &a)| Edge::new(a, n + i))
    }

    /// The cycle minus `e1`, plus every pendant edge.
    pub fn forest_from_cycle(&self, cycle: &[Vertex]) -> Result<ParityForest> {
        let walk = graph::walk_edges(cycle, true);
        if !graph::is_induced_cycle(&self.source, cycle)
            || !walk.contains(&self.e1)
            || !walk.contains(&self.e2)
        {
            return Err(Error::InvalidWitness(format!(
                "not an induced cycle through {} and {}",
                self.e1, self.e2
            )));
        }
        let edges: Vec<Edge> = walk
            .into_iter()
            .filter(|&e| e != self.e1)
            .chain(self.pendant_edges())
            .collect();
        ParityForest::new(&self.h, edges, ParityTarget::all_ones(self.h.order())?)
            .map_err(|v| Error::InvalidWitness(format!("constructed forest fails: {v}")))
    }

    /// Strips the pendant edges; what remains is an induced path between the
    /// endpoints of `e1`, which `e1` closes into the cycle.
    pub fn cycle_from_forest(&self, forest: &[Edge]) -> Result<Vec<Vertex>> {
        let f = ParityForest::new(
            &self.h,
            forest.to_vec(),
            ParityTarget::all_ones(self.h.order())?,
        )
        .map_err(|v| Error::InvalidWitness(format!("not a 0-perfect forest of h: {v}")))?;
        if !f.contains(self.e2) {
            return Err(Error::InvalidWitness(format!("forest misses {}", self.e2)));
        }
        let n = self.source.order();
        let core = Graph::from_edges(n, f.edges().iter().copied().filter(|e| e.v() < n))?;
        let (u, v) = self.e1.endpoints();
        let mut path = vec![u];
        let mut prev = None;
        while let Some(&next) = core
            .neighbors(*path.last().unwrap())
            .iter()
            .find(|&&y| Some(y) != prev)
        {
            prev = path.last().copied();
            path.push(next);
            if next == v {
                break;
            }
        }
        if path.last() != Some(&v) || !graph::is_induced_cycle(&self.source, &path) {
            return Err(Error::InvalidWitness(
                "stripped forest is not an induced path between the ends of e1".into(),
            ));
        }
        Ok(path)
    }
}
