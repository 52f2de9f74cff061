//! 1-perfect forests: one even-degree vertex, everything else odd.
//!
//! Any connected odd-order graph has one with a chosen even vertex (add a
//! pendant, take a 0-perfect forest, drop the pendant). Asking for no
//! isolated vertex is harder: such a forest exists exactly when the graph
//! has some block that is not a complete graph of odd order, and
//! [`proper_one_perfect_forest`] builds one by induction on the order.

use crate::error::{Error, Result};
use crate::forest::{zero_perfect_forest, ParityForest, ParityTarget};
use crate::graph::{self, Edge, Graph, Vertex};

/// A 1-perfect forest of a connected odd-order graph whose even vertex is `x`.
pub fn one_perfect_forest(g: &Graph, x: Vertex) -> Result<ParityForest> {
    let n = g.order();
    g.check_vertex(x)?;
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let h = g.with_pendants(&[x]);
    let pendant = Edge::new(x, n);
    let edges: Vec<Edge> = zero_perfect_forest(&h)?
        .into_edges()
        .into_iter()
        .filter(|&e| e != pendant)
        .collect();
    Ok(
        ParityForest::new(g, edges, ParityTarget::all_ones_except(n, x)?)
            .expect("dropping the pendant leaves x even"),
    )
}

/// Connected, and every block is a complete graph of odd order.
pub fn is_class_b(g: &Graph) -> bool {
    if g.order() == 0 || !graph::is_connected(g) {
        return false;
    }
    graph::block_decomposition(g)
        .blocks
        .iter()
        .all(|b| b.vertices.len() % 2 == 1 && graph::is_complete(g, &b.vertices))
}

/// A 1-perfect forest with no isolated vertex, or `None` when `g` is in the
/// class above (where none exists).
pub fn proper_one_perfect_forest(g: &Graph) -> Result<Option<ParityForest>> {
    let n = g.order();
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    if is_class_b(g) {
        return Ok(None);
    }
    Ok(Some(build(g)))
}

/// Checks that `edges` form a proper 1-perfect forest of `g` and wraps them.
fn certify(g: &Graph, edges: Vec<Edge>) -> ParityForest {
    let forest =
        ParityForest::semiperfect(g, edges).expect("pieces combine into a semiperfect forest");
    let even = forest.even_degree_vertices();
    assert_eq!(
        even.len(),
        1,
        "expected exactly one even vertex, got {even:?}"
    );
    assert!(forest.is_proper(), "forest has an isolated vertex");
    forest
}

/// `g` is connected, of odd order at least 3, and not in the class.
fn build(g: &Graph) -> ParityForest {
    let cuts = graph::cut_vertices(g);
    if !cuts.is_empty() {
        return split_at_cut_vertex(g, &cuts);
    }
    split_at_induced_path(g)
}

fn split_at_cut_vertex(g: &Graph, cuts: &[Vertex]) -> ParityForest {
    let pieces = |x: Vertex| -> Vec<Vec<Vertex>> {
        let (rest, map) = g.remove_vertices(&[x]);
        graph::connected_components(&rest)
            .into_iter()
            .map(|c| c.into_iter().map(|v| map.parent(v)).collect())
            .collect()
    };
    let even_choice = cuts.iter().find_map(|&x| {
        pieces(x)
            .into_iter()
            .find(|c| c.len() % 2 == 0)
            .map(|c| (x, c))
    });

    let mut edges = Vec::new();
    match even_choice {
        Some((x, c1)) => {
            let mut with_x = c1.clone();
            with_x.push(x);
            let (g1, m1) = g.induced_subgraph(&with_x);
            let (g2, m2) = g.remove_vertices(&c1);
            let (rec, rec_map, other, other_map) = if is_class_b(&g1) {
                (g2, m2, g1, m1)
            } else {
                (g1, m1, g2, m2)
            };
            debug_assert!(
                !is_class_b(&rec),
                "a graph outside the class has a side outside it"
            );
            let proper = build(&rec);
            let pinned = one_perfect_forest(&other, other_map.local(x).expect("x is shared"))
                .expect("the other side is connected and odd");
            edges.extend(rec_map.lift_edges(proper.edges()));
            edges.extend(other_map.lift_edges(pinned.edges()));
        }
        None => {
            let x = cuts[0];
            let c1 = pieces(x).swap_remove(0);
            let mut with_x = c1.clone();
            with_x.push(x);
            let (g1, m1) = g.induced_subgraph(&with_x);
            let (g2, m2) = g.remove_vertices(&c1);
            for (h, m) in [(g1, m1), (g2, m2)] {
                let f = zero_perfect_forest(&h).expect("both sides are connected and even");
                edges.extend(m.lift_edges(f.edges()));
            }
        }
    }
    certify(g, edges)
}

fn split_at_induced_path(g: &Graph) -> ParityForest {
    let (p1, p2, p3) = graph::find_induced_p3(g).expect("a non-complete graph has an induced P3");
    let (rest, map) = g.remove_vertices(&[p2, p3]);
    let label = graph::component_labels(&rest);
    let l1 = label[map.local(p1).expect("p1 is kept")];
    let c1: Vec<Vertex> = (0..rest.order())
        .filter(|&v| label[v] == l1)
        .map(|v| map.parent(v))
        .collect();

    let mut edges = Vec::new();
    if c1.len() % 2 == 1 {
        let (h1, m1) = g.induced_subgraph(&c1);
        let f1 = one_perfect_forest(&h1, m1.local(p1).expect("p1 in C1"))
            .expect("C1 is connected and odd");
        let (h2, m2) = g.remove_vertices(&c1);
        let f2 = zero_perfect_forest(&h2).expect("the rest is connected and even");
        edges.extend(m1.lift_edges(f1.edges()));
        edges.extend(m2.lift_edges(f2.edges()));
        if !edges.iter().any(|e| e.contains(p1)) {
            edges.push(Edge::new(p1, p2));
        }
    } else {
        let mut with_pair = c1.clone();
        with_pair.extend([p2, p3]);
        let (gp, mp) = g.induced_subgraph(&with_pair);
        let (lp2, lp3) = (
            mp.local(p2).expect("p2 kept"),
            mp.local(p3).expect("p3 kept"),
        );
        let pi = block_witness(&gp, lp2, lp3).expect("N[p2] differs from N[p3] because of p1");
        let pi = mp.parent(pi);
        let pj = if pi == p2 { p3 } else { p2 };

        let mut rec_set = c1.clone();
        rec_set.push(pj);
        let (rec, rm) = g.induced_subgraph(&rec_set);
        let proper = build(&rec);
        let (remainder, rem_map) = g.remove_vertices(&rec_set);
        let f0 = zero_perfect_forest(&remainder).expect("the remainder is connected and even");
        edges.extend(rm.lift_edges(proper.edges()));
        edges.extend(rem_map.lift_edges(f0.edges()));
    }
    certify(g, edges)
}

/// For adjacent `x`, `y`: a vertex among them whose deletion leaves a graph
/// outside the class, tried `x` first. `None` forces `N[x] = N[y]`.
pub fn block_witness(g: &Graph, x: Vertex, y: Vertex) -> Option<Vertex> {
    for z in [x, y] {
        if !is_class_b(&g.remove_vertices(&[z]).0) {
            return Some(z);
        }
    }
    assert_eq!(
        g.closed_neighborhood(x),
        g.closed_neighborhood(y),
        "both deletions in the class but N[x] != N[y]"
    );
    None
}
