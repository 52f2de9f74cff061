//! NAE-3-SAT to "0-perfect forest with |V| − 2 edges".
//!
//! Layout: variable gadget `i` (1-based) occupies ids `6(i−1) .. 6i` in the
//! order `x1 z1 y1 x2 z2 y2`; pendants follow in gadget order, skipping
//! `x1^1, x2^1, y1^n, y2^n`; then `c_1, c'_1, c_2, c'_2, ...`.

use std::collections::BTreeMap;

use super::{add_pendants, CnfInstance, GadgetInstance};
use crate::error::{Error, Result};
use crate::forest::{ParityForest, ParityTarget};
use crate::graph::{self, Edge, Graph, Vertex};

const SLOTS: [&str; 6] = ["x1", "z1", "y1", "x2", "z2", "y2"];

#[derive(Clone, Debug)]
pub struct NaeGadget {
    pub instance: GadgetInstance,
    pub cnf: CnfInstance,
}

fn slot(i: usize, s: usize) -> Vertex {
    6 * i + s
}

/// Builds the gadget graph. A clause whose three literals are identical is
/// rejected: its clause vertices would have a single neighbour and could
/// always join a tree, although such a clause is never NAE-satisfied.
pub fn nae_gadget(cnf: &CnfInstance) -> Result<NaeGadget> {
    cnf.reject_empty()?;
    if let Some(c) = cnf.clauses().iter().find(|c| c[0] == c[1] && c[1] == c[2]) {
        return Err(Error::Precondition(format!(
            "clause {c:?} repeats one literal three times"
        )));
    }
    let n = cnf.num_vars();
    let m = cnf.clauses().len();
    let mut roles: Vec<String> = (0..n)
        .flat_map(|i| SLOTS.iter().map(move |s| format!("{s}^{}", i + 1)))
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for a in 0..6 {
            for b in a + 1..6 {
                if (a, b) != (0, 2) && (a, b) != (3, 5) {
                    edges.push(Edge::new(slot(i, a), slot(i, b)));
                }
            }
        }
        if i + 1 < n {
            for y in [2, 5] {
                for x in [0, 3] {
                    edges.push(Edge::new(slot(i, y), slot(i + 1, x)));
                }
            }
        }
    }
    let skip = [slot(0, 0), slot(0, 3), slot(n - 1, 2), slot(n - 1, 5)];
    let anchors: Vec<Vertex> = (0..6 * n).filter(|v| !skip.contains(v)).collect();
    add_pendants(&mut edges, &mut roles, &anchors);

    for (j, clause) in cnf.clauses().iter().enumerate() {
        let c = roles.len();
        roles.push(format!("c_{}", j + 1));
        roles.push(format!("c'_{}", j + 1));
        for &lit in clause {
            let i = lit.unsigned_abs() as usize - 1;
            let y = if lit > 0 { slot(i, 5) } else { slot(i, 2) };
            edges.push(Edge::new(c, y));
            edges.push(Edge::new(c + 1, y));
        }
    }

    let graph = Graph::from_edges_dedup(roles.len(), edges)?;
    debug_assert_eq!(graph.order(), 12 * n - 4 + 2 * m);
    let params = BTreeMap::from([("n".to_string(), n), ("m".to_string(), m)]);
    Ok(NaeGadget {
        instance: GadgetInstance::new(graph, roles, params, BTreeMap::new()),
        cnf: cnf.clone(),
    })
}

impl NaeGadget {
    pub fn graph(&self) -> &Graph {
        &self.instance.graph
    }

    fn clause_vertex(&self, j: usize) -> Vertex {
        6 * self.cnf.num_vars() + (6 * self.cnf.num_vars() - 4) + 2 * j
    }

    /// The two-tree forest of an NAE-satisfying assignment: a true variable
    /// sends `x1 z1 y1` to the first tree and `x2 z2 y2` to the second, a
    /// false one the other way round; pendants follow their anchor; each
    /// clause vertex joins the tree holding exactly one of its neighbours.
    pub fn forest_from_assignment(&self, assignment: &[bool]) -> Result<ParityForest> {
        self.cnf.check_assignment(assignment)?;
        if !self.cnf.nae_satisfied_by(assignment) {
            return Err(Error::InvalidWitness(
                "assignment does not NAE-satisfy the formula".into(),
            ));
        }
        let g = self.graph();
        let n = self.cnf.num_vars();
        let mut tree = vec![0u8; g.order()];
        for (i, &value) in assignment.iter().enumerate() {
            for s in 0..6 {
                let first_half = s < 3;
                tree[slot(i, s)] = if first_half == value { 1 } else { 2 };
            }
        }
        for v in 6 * n..self.clause_vertex(0) {
            tree[v] = tree[g.neighbors(v)[0]];
        }
        for j in 0..self.cnf.clauses().len() {
            let c = self.clause_vertex(j);
            let count = |t: u8| g.neighbors(c).iter().filter(|&&y| tree[y] == t).count();
            let side = if count(1) == 1 { 1 } else { 2 };
            debug_assert_eq!(count(side), 1);
            tree[c] = side;
            tree[c + 1] = side;
        }
        let edges: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| tree[e.u()] == tree[e.v()])
            .collect();
        let forest = ParityForest::new(g, edges, ParityTarget::all_ones(g.order())?)
            .map_err(|v| Error::InvalidWitness(format!("constructed forest fails: {v}")))?;
        assert_eq!(forest.size(), g.order() - 2);
        Ok(forest)
    }

    /// Reads an assignment off a 0-perfect forest with at least `|V| − 2`
    /// edges: `v_i` is true iff `x1^i` lies in the tree of `x1^1`.
    pub fn assignment_from_forest(&self, forest: &[Edge]) -> Result<Vec<bool>> {
        let g = self.graph();
        let f = ParityForest::new(g, forest.to_vec(), ParityTarget::all_ones(g.order())?)
            .map_err(|v| Error::InvalidWitness(format!("not a 0-perfect forest: {v}")))?;
        if f.size() + 2 < g.order() {
            return Err(Error::InvalidWitness(format!(
                "forest has {} edges, needs {}",
                f.size(),
                g.order() - 2
            )));
        }
        let sub = Graph::from_edges(g.order(), f.edges().iter().copied())?;
        let label = graph::component_labels(&sub);
        let a: Vec<bool> = (0..self.cnf.num_vars())
            .map(|i| label[slot(i, 0)] == label[slot(0, 0)])
            .collect();
        if !self.cnf.nae_satisfied_by(&a) {
            return Err(Error::InvalidWitness(
                "extracted assignment is not NAE-satisfying".into(),
            ));
        }
        Ok(a)
    }
}
