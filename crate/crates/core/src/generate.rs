//! Test corpora: every connected graph of a given order up to isomorphism,
//! and seeded random graphs, targets and formulas.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::forest::ParityTarget;
use crate::graph::{Edge, Graph, Vertex};
use crate::reductions::CnfInstance;

/// Largest order the canonical form supports (pairs must fit in a `u64`).
pub const MAX_CANONICAL_ORDER: usize = 11;

/// Adjacency bits of `g` read in the vertex order `order`, pair `(0,1)` first.
fn certificate(g: &Graph, order: &[Vertex]) -> u64 {
    let mut bits = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            bits = (bits << 1) | u64::from(g.has_edge(order[i], order[j]));
        }
    }
    bits
}

/// Splits cells by neighbour counts into every cell until nothing changes.
fn refine(g: &Graph, mut cells: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    loop {
        let mut cell_of = vec![0; g.order()];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut by_sig: BTreeMap<Vec<usize>, Vec<Vertex>> = BTreeMap::new();
            for &v in cell {
                let mut sig = vec![0; cells.len()];
                for &y in g.neighbors(v) {
                    sig[cell_of[y]] += 1;
                }
                by_sig.entry(sig).or_default().push(v);
            }
            next.extend(by_sig.into_values());
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn best_leaf(g: &Graph, cells: Vec<Vec<Vertex>>) -> (u64, Vec<Vertex>) {
    let cells = refine(g, cells);
    let Some(split) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<Vertex> = cells.into_iter().flatten().collect();
        return (certificate(g, &order), order);
    };
    let mut best: Option<(u64, Vec<Vertex>)> = None;
    for &v in &cells[split] {
        let mut branch = cells[..split].to_vec();
        branch.push(vec![v]);
        branch.push(cells[split].iter().copied().filter(|&y| y != v).collect());
        branch.extend_from_slice(&cells[split + 1..]);
        let leaf = best_leaf(g, branch);
        if best.as_ref().is_none_or(|b| leaf.0 > b.0) {
            best = Some(leaf);
        }
    }
    best.expect("split cell is non-empty")
}

/// An isomorphism invariant that determines `g` up to isomorphism, with the
/// vertex order realising it.
pub fn canonical_form(g: &Graph) -> (u64, Vec<Vertex>) {
    assert!(
        g.order() <= MAX_CANONICAL_ORDER,
        "canonical form supports up to {MAX_CANONICAL_ORDER} vertices"
    );
    best_leaf(g, vec![g.vertices().collect()])
}

/// `g` relabelled so that `order[i]` becomes vertex `i`.
fn relabel(g: &Graph, order: &[Vertex]) -> Graph {
    let mut pos = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Graph::from_edges(
        g.order(),
        g.edges().iter().map(|e| Edge::new(pos[e.u()], pos[e.v()])),
    )
    .expect("relabelling keeps the graph simple")
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in canonical labelling, sorted by certificate.
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// each class arises from a smaller connected graph plus one vertex.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CANONICAL_ORDER);
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &level {
            let old = size - 1;
            for mask in 1u32..(1 << old) {
                let extra = (0..old)
                    .filter(|&v| mask >> v & 1 == 1)
                    .map(|v| Edge::new(v, old));
                let h = Graph::from_edges(size, g.edges().iter().copied().chain(extra))
                    .expect("new vertex edges are fresh");
                let (cert, order) = canonical_form(&h);
                seen.entry(cert).or_insert_with(|| relabel(&h, &order));
            }
        }
        level = seen.into_values().collect();
    }
    level
}

/// One representative per isomorphism class of all graphs on `n` vertices,
/// by canonicalising every labelled graph. Meant for `n ≤ 6`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "labelled enumeration grows as 2^(n(n-1)/2)");
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen: BTreeMap<u64, Graph> = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(u, v))| Edge::new(u, v));
        let g = Graph::from_edges(n, edges).expect("distinct pairs");
        let (cert, order) = canonical_form(&g);
        seen.entry(cert).or_insert_with(|| relabel(&g, &order));
    }
    seen.into_values().collect()
}

/// A connected graph: a random spanning tree plus each other pair with
/// probability `p`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push(Edge::new(perm[i], perm[rng.gen_range(0..i)]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push(Edge::new(u, v));
            }
        }
    }
    Graph::from_edges_dedup(n, edges).expect("vertices in range")
}

/// A uniformly random target with an even number of ones.
pub fn random_even_target(rng: &mut impl Rng, n: usize) -> ParityTarget {
    let mut bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    if bits.iter().filter(|&&b| b).count() % 2 == 1 {
        let v = rng.gen_range(0..n);
        bits[v] = !bits[v];
    }
    ParityTarget::new(bits).expect("sum fixed to even")
}

pub fn random_cnf(rng: &mut impl Rng, num_vars: usize, num_clauses: usize) -> CnfInstance {
    let clauses = (0..num_clauses)
        .map(|_| {
            std::array::from_fn(|_| {
                let v = rng.gen_range(1..=num_vars) as i32;
                if rng.gen() {
                    v
                } else {
                    -v
                }
            })
        })
        .collect();
    CnfInstance::new(num_vars, clauses).expect("literals in range")
}

/// Seed for randomized tests: `PFOREST_SEED` when set, else `default`.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var("PFOREST_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        let all: Vec<usize> = (0..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a).0, canonical_form(&b).0);
        assert_ne!(canonical_form(&a).0, canonical_form(&Graph::cycle(4)).0);
    }

    #[test]
    fn random_instances() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..20 {
            let g = random_connected_graph(&mut rng, n, 0.2);
            assert!(crate::graph::is_connected(&g));
            assert_eq!(random_even_target(&mut rng, n).count_ones() % 2, 0);
        }
        let cnf = random_cnf(&mut rng, 3, 4);
        assert_eq!(cnf.clauses().len(), 4);
    }
}
