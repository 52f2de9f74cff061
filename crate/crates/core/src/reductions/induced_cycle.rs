//! 3-SAT to "induced cycle through two given edges".
//!
//! Layout: variable gadget `i` occupies ids `8(i−1) .. 8i` in the order
//! `x1 w1 wbar1 y1 x2 w2 wbar2 y2`; clause gadget `j` follows at
//! `8n + 5(j−1)` in the order `a c1 c2 c3 b`. There are no pendants.
//! Marked edges: `e1 = x1^1 x2^1`, `e2 = b^m y1^n`.

use std::collections::BTreeMap;

use super::{CnfInstance, GadgetInstance};
use crate::error::{Error, Result};
use crate::graph::{self, Edge, Graph, Vertex};

const SLOTS: [&str; 8] = ["x1", "w1", "wbar1", "y1", "x2", "w2", "wbar2", "y2"];
const X: [usize; 2] = [0, 4];
const W: [usize; 2] = [1, 5];
const WBAR: [usize; 2] = [2, 6];
const Y: [usize; 2] = [3, 7];

#[derive(Clone, Debug)]
pub struct InducedCycleGadget {
    pub instance: GadgetInstance,
    pub cnf: CnfInstance,
}

pub fn induced_cycle_gadget(cnf: &CnfInstance) -> Result<InducedCycleGadget> {
    cnf.reject_empty()?;
    let n = cnf.num_vars();
    let m = cnf.clauses().len();
    let var = |i: usize, s: usize| 8 * i + s;
    let clause = |j: usize, s: usize| 8 * n + 5 * j + s;

    let mut roles: Vec<String> = (0..n)
        .flat_map(|i| SLOTS.iter().map(move |s| format!("{s}^{}", i + 1)))
        .collect();
    for j in 1..=m {
        roles.extend(
            ["a", "c1", "c2", "c3", "b"]
                .iter()
                .map(|s| format!("{s}^{j}")),
        );
    }

    let mut edges = vec![Edge::new(var(0, X[0]), var(0, X[1]))];
    for i in 0..n {
        for side in 0..2 {
            for mid in [W[side], WBAR[side]] {
                edges.push(Edge::new(var(i, X[side]), var(i, mid)));
                edges.push(Edge::new(var(i, mid), var(i, Y[side])));
            }
            if i + 1 < n {
                edges.push(Edge::new(var(i, Y[side]), var(i + 1, X[side])));
            }
        }
        edges.push(Edge::new(var(i, W[0]), var(i, WBAR[1])));
        edges.push(Edge::new(var(i, WBAR[0]), var(i, W[1])));
    }
    for (j, lits) in cnf.clauses().iter().enumerate() {
        for (k, &lit) in lits.iter().enumerate() {
            let c = clause(j, 1 + k);
            edges.push(Edge::new(clause(j, 0), c));
            edges.push(Edge::new(c, clause(j, 4)));
            let i = lit.unsigned_abs() as usize - 1;
            let mids = if lit > 0 { W } else { WBAR };
            for s in mids {
                edges.push(Edge::new(c, var(i, s)));
            }
        }
        if j + 1 < m {
            edges.push(Edge::new(clause(j, 4), clause(j + 1, 0)));
        }
    }
    let e2 = Edge::new(clause(m - 1, 4), var(n - 1, Y[0]));
    edges.push(e2);
    edges.push(Edge::new(var(n - 1, Y[1]), clause(0, 0)));

    let graph = Graph::from_edges(roles.len(), edges)?;
    let params = BTreeMap::from([("n".to_string(), n), ("m".to_string(), m)]);
    let marked = BTreeMap::from([
        ("e1".to_string(), Edge::new(var(0, X[0]), var(0, X[1]))),
        ("e2".to_string(), e2),
    ]);
    Ok(InducedCycleGadget {
        instance: GadgetInstance::new(graph, roles, params, marked),
        cnf: cnf.clone(),
    })
}

impl InducedCycleGadget {
    pub fn graph(&self) -> &Graph {
        &self.instance.graph
    }

    pub fn e1(&self) -> Edge {
        self.instance.marked["e1"]
    }

    pub fn e2(&self) -> Edge {
        self.instance.marked["e2"]
    }

    fn var(&self, i: usize, s: usize) -> Vertex {
        8 * i + s
    }

    fn clause(&self, j: usize, s: usize) -> Vertex {
        8 * self.cnf.num_vars() + 5 * j + s
    }

    /// The cycle of a satisfying assignment, listed from `x1^1` across `e1`:
    /// down the second side of every variable gadget, through one satisfied
    /// literal vertex per clause, and back up the first side. A true
    /// variable routes through its `wbar` vertices, a false one through `w`.
    pub fn cycle_from_assignment(&self, assignment: &[bool]) -> Result<Vec<Vertex>> {
        self.cnf.check_assignment(assignment)?;
        if !self.cnf.satisfied_by(assignment) {
            return Err(Error::InvalidWitness(
                "assignment does not satisfy the formula".into(),
            ));
        }
        let n = self.cnf.num_vars();
        let mid = |i: usize, side: usize| if assignment[i] { WBAR[side] } else { W[side] };
        let mut cycle = vec![self.var(0, X[0])];
        for i in 0..n {
            cycle.extend([self.var(i, X[1]), self.var(i, mid(i, 1)), self.var(i, Y[1])]);
        }
        for (j, lits) in self.cnf.clauses().iter().enumerate() {
            let k = lits
                .iter()
                .position(|&l| CnfInstance::literal_value(l, assignment))
                .expect("clause satisfied");
            cycle.extend([self.clause(j, 0), self.clause(j, 1 + k), self.clause(j, 4)]);
        }
        for i in (0..n).rev() {
            cycle.extend([self.var(i, Y[0]), self.var(i, mid(i, 0))]);
            if i > 0 {
                cycle.push(self.var(i, X[0]));
            }
        }
        self.check_cycle(&cycle)?;
        Ok(cycle)
    }

    fn check_cycle(&self, cycle: &[Vertex]) -> Result<()> {
        let walk = graph::walk_edges(cycle, true);
        if !graph::is_induced_cycle(self.graph(), cycle)
            || !walk.contains(&self.e1())
            || !walk.contains(&self.e2())
        {
            return Err(Error::InvalidWitness(
                "not an induced cycle through e1 and e2".into(),
            ));
        }
        Ok(())
    }

    /// `v_i` is true iff neither `w1^i` nor `w2^i` lies on the cycle.
    pub fn assignment_from_cycle(&self, cycle: &[Vertex]) -> Result<Vec<bool>> {
        self.check_cycle(cycle)?;
        let a: Vec<bool> = (0..self.cnf.num_vars())
            .map(|i| !W.iter().any(|&s| cycle.contains(&self.var(i, s))))
            .collect();
        if !self.cnf.satisfied_by(&a) {
            return Err(Error::InvalidWitness(
                "extracted assignment does not satisfy the formula".into(),
            ));
        }
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example() -> InducedCycleGadget {
        induced_cycle_gadget(&CnfInstance::new(4, vec![[-1, 2, 3], [-2, -3, 4]]).unwrap()).unwrap()
    }

    #[test]
    fn counts_and_marked_edges() {
        let gad = worked_example();
        let g = gad.graph();
        assert_eq!(g.order(), 8 * 4 + 5 * 2);
        assert_eq!(g.size(), 12 * 4 + 13 * 2);
        let inst = &gad.instance;
        assert_eq!(gad.e1(), Edge::new(inst.v("x1^1"), inst.v("x2^1")));
        assert_eq!(gad.e2(), Edge::new(inst.v("b^2"), inst.v("y1^4")));
        assert!(g.has_edge(inst.v("c1^1"), inst.v("wbar1^1")));
        assert!(g.has_edge(inst.v("c3^2"), inst.v("w2^4")));
        assert!(g.has_edge(inst.v("y2^4"), inst.v("a^1")));
    }

    #[test]
    fn round_trip() {
        let gad = worked_example();
        let a = [true, false, true, true];
        let cycle = gad.cycle_from_assignment(&a).unwrap();
        let inst = &gad.instance;
        assert!(cycle.contains(&inst.v("c3^1")));
        assert!(cycle.contains(&inst.v("c1^2")));
        assert_eq!(gad.assignment_from_cycle(&cycle).unwrap(), a);
        assert!(gad
            .cycle_from_assignment(&[true, false, false, false])
            .is_err());
    }
}
