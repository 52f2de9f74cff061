//! Hardness gadgets and the witness translations their correctness proofs give.
//!
//! Every builder fixes a vertex layout (documented on the builder) and
//! records a role label for each vertex, so witnesses can be read off and
//! golden files stay byte-stable.

mod containing;
mod indset;
mod induced_cycle;
mod nae;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

pub use containing::{containing_edge_instance, ContainingEdgeInstance};
pub use indset::{indset_gadget, IndSetGadget, IndSetWitness, Statement};
pub use induced_cycle::{induced_cycle_gadget, InducedCycleGadget};
pub use nae::{nae_gadget, NaeGadget};

/// A CNF formula with exactly three literals per clause. Literals are
/// non-zero integers: `i` stands for variable `i` (1-based), `-i` for its
/// negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfInstance {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfInstance {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for c in &clauses {
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > num_vars {
                    return Err(Error::Precondition(format!(
                        "literal {l} out of range for {num_vars} variables"
                    )));
                }
            }
        }
        Ok(CnfInstance { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    fn check_assignment(&self, a: &[bool]) -> Result<()> {
        if a.len() != self.num_vars {
            return Err(Error::InvalidWitness(format!(
                "assignment has {} values for {} variables",
                a.len(),
                self.num_vars
            )));
        }
        Ok(())
    }

    pub fn literal_value(lit: i32, a: &[bool]) -> bool {
        let v = a[lit.unsigned_abs() as usize - 1];
        if lit > 0 {
            v
        } else {
            !v
        }
    }

    pub fn satisfied_by(&self, a: &[bool]) -> bool {
        a.len() == self.num_vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|&l| Self::literal_value(l, a)))
    }

    /// Every clause has a true and a false literal.
    pub fn nae_satisfied_by(&self, a: &[bool]) -> bool {
        a.len() == self.num_vars
            && self.clauses.iter().all(|c| {
                let t = c.iter().filter(|&&l| Self::literal_value(l, a)).count();
                t > 0 && t < 3
            })
    }

    fn reject_empty(&self) -> Result<()> {
        if self.num_vars == 0 || self.clauses.is_empty() {
            return Err(Error::Precondition(
                "formula needs at least one variable and one clause".into(),
            ));
        }
        Ok(())
    }
}

/// A constructed reduction graph with one role label per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub graph: Graph,
    pub roles: Vec<String>,
    pub params: BTreeMap<String, usize>,
    /// Named edges such as the two edges an induced cycle must use.
    pub marked: BTreeMap<String, Edge>,
    index: BTreeMap<String, Vertex>,
}

impl GadgetInstance {
    fn new(
        graph: Graph,
        roles: Vec<String>,
        params: BTreeMap<String, usize>,
        marked: BTreeMap<String, Edge>,
    ) -> Self {
        assert_eq!(roles.len(), graph.order(), "one role per vertex");
        let index: BTreeMap<String, Vertex> = roles
            .iter()
            .cloned()
            .enumerate()
            .map(|(v, r)| (r, v))
            .collect();
        assert_eq!(index.len(), roles.len(), "roles are unique");
        GadgetInstance {
            graph,
            roles,
            params,
            marked,
            index,
        }
    }

    pub fn vertex(&self, role: &str) -> Option<Vertex> {
        self.index.get(role).copied()
    }

    pub fn role(&self, v: Vertex) -> &str {
        &self.roles[v]
    }

    fn v(&self, role: &str) -> Vertex {
        self.vertex(role)
            .unwrap_or_else(|| panic!("missing role {role}"))
    }
}

/// Appends one pendant per listed anchor, labelled after the anchor.
fn add_pendants(edges: &mut Vec<Edge>, roles: &mut Vec<String>, anchors: &[Vertex]) {
    for &a in anchors {
        let p = roles.len();
        roles.push(format!("pendant-of:{}", roles[a]));
        edges.push(Edge::new(a, p));
    }
}
