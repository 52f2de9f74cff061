//! f-parity perfect forests that avoid a prescribed edge.
//!
//! Cut vertices are peeled off first: only the piece containing the edge can
//! make the answer negative, the rest is always solvable. Once no cut vertex
//! is left the answer is negative exactly when both endpoints of the edge are
//! the only vertices with target 1. Every positive answer comes with a forest.

use crate::error::{Error, Result};
use crate::forest::{exists_f_parity_forest, ParityForest, ParityTarget};
use crate::graph::{self, Edge, Graph, Vertex, VertexMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AvoidOutcome {
    Feasible(ParityForest),
    Infeasible(Infeasibility),
}

impl AvoidOutcome {
    pub fn forest(&self) -> Option<&ParityForest> {
        match self {
            AvoidOutcome::Feasible(f) => Some(f),
            AvoidOutcome::Infeasible(_) => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, AvoidOutcome::Feasible(_))
    }
}

/// The piece without cut vertex, in host ids, in which the two endpoints of
/// the avoided edge are the only vertices with target 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infeasibility {
    pub core: Vec<Vertex>,
}

/// Result of peeling one cut vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReduction {
    pub graph: Graph,
    /// Ids of `graph` back to the input graph.
    pub map: VertexMap,
    pub edge: Edge,
    pub target: ParityTarget,
}

pub fn decide_avoid_edge(g: &Graph, e: Edge, f: &ParityTarget) -> Result<AvoidOutcome> {
    f.check_len(g)?;
    g.check_edge(e)?;
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(match solve(g, e, f) {
        Ok(edges) => {
            let forest =
                ParityForest::new(g, edges, f.clone()).expect("reassembled forest verifies");
            assert!(
                !forest.contains(e),
                "reassembled forest uses the avoided edge"
            );
            AvoidOutcome::Feasible(forest)
        }
        Err(core) => AvoidOutcome::Infeasible(Infeasibility { core }),
    })
}

/// Edges of a forest avoiding `e`, or the vertex set of the blocking core.
fn solve(g: &Graph, e: Edge, f: &ParityTarget) -> std::result::Result<Vec<Edge>, Vec<Vertex>> {
    if let Some(&x) = graph::cut_vertices(g).first() {
        let red = reduce_at_cut_vertex(g, e, f, x).expect("x is a cut vertex");
        let inner = solve(&red.graph, red.edge, &red.target).map_err(|core| {
            core.into_iter()
                .map(|v| red.map.parent(v))
                .collect::<Vec<_>>()
        })?;
        let mut edges = red.map.lift_edges(&inner);

        // The rest of the graph shares only x with the reduced piece.
        let piece: Vec<Vertex> = red
            .map
            .parent_vertices()
            .iter()
            .copied()
            .filter(|&v| v != x)
            .collect();
        let (rest, rest_map) = g.remove_vertices(&piece);
        let rest_target = fix_parity_at(f, &rest_map, x);
        let other = exists_f_parity_forest(&rest, &rest_target).expect("the rest is connected");
        edges.extend(rest_map.lift_edges(other.edges()));
        return Ok(edges);
    }
    match construct_2connected_case(g, e, f) {
        Ok(forest) => Ok(forest.into_edges()),
        Err(_) => Err(g.vertices().collect()),
    }
}

/// Restricts `f` to the graph behind `map` and flips `f(x)` if needed so the
/// restriction has even sum.
fn fix_parity_at(f: &ParityTarget, map: &VertexMap, x: Vertex) -> ParityTarget {
    let lx = map.local(x).expect("x is kept");
    let mut bits: Vec<bool> = map.parent_vertices().iter().map(|&v| f.get(v)).collect();
    let odd = bits
        .iter()
        .enumerate()
        .filter(|&(i, &b)| i != lx && b)
        .count()
        % 2
        == 1;
    bits[lx] = odd;
    ParityTarget::new(bits).expect("parity fixed at x")
}

/// Keeps the component of `g − x` holding the endpoints of `e`, plus `x`,
/// with `f(x)` reset so the target stays even-sum.
pub fn reduce_at_cut_vertex(
    g: &Graph,
    e: Edge,
    f: &ParityTarget,
    x: Vertex,
) -> Result<CutReduction> {
    f.check_len(g)?;
    g.check_edge(e)?;
    g.check_vertex(x)?;
    let (without_x, map) = g.remove_vertices(&[x]);
    let label = graph::component_labels(&without_x);
    let parts = label.iter().copied().max().map_or(0, |l| l + 1);
    let before = graph::component_labels(g)
        .into_iter()
        .max()
        .map_or(0, |l| l + 1);
    if parts <= before {
        return Err(Error::NotCutVertex(x));
    }
    let anchor = if e.u() == x { e.v() } else { e.u() };
    let want = label[map.local(anchor).expect("anchor differs from x")];
    let mut keep: Vec<Vertex> = (0..without_x.order())
        .filter(|&v| label[v] == want)
        .map(|v| map.parent(v))
        .collect();
    keep.push(x);
    let (graph, sub_map) = g.induced_subgraph(&keep);
    let target = fix_parity_at(f, &sub_map, x);
    let edge = sub_map.lower_edge(e).expect("e lies inside the kept piece");
    Ok(CutReduction {
        graph,
        map: sub_map,
        edge,
        target,
    })
}

/// Builds a forest avoiding `e = uv` in a graph without cut vertices.
///
/// With `f(u) = 0` (or `f(v) = 0`) the endpoint stays isolated and the rest
/// is solved directly. Otherwise a vertex `w` with `f(w) = 1` is routed onto
/// a `(u, v)`-path; a spanning tree grown from that path without passing
/// through `w` again splits into a `u` side and a `v` side, `w` joins the
/// side with odd target sum, and the two sides are solved separately.
pub fn construct_2connected_case(g: &Graph, e: Edge, f: &ParityTarget) -> Result<ParityForest> {
    f.check_len(g)?;
    g.check_edge(e)?;
    if !graph::is_nonseparable(g) {
        return Err(Error::Precondition("graph has a cut vertex".into()));
    }
    let (u, v) = e.endpoints();
    if f.count_ones() == 0 {
        return Ok(ParityForest::empty(g.order()));
    }
    for end in [u, v] {
        if !f.get(end) {
            let (rest, map) = g.remove_vertices(&[end]);
            let local = f.restrict(&map).expect("dropping a 0 keeps the sum even");
            let forest = exists_f_parity_forest(&rest, &local)?;
            return Ok(
                ParityForest::new(g, map.lift_edges(forest.edges()), f.clone())
                    .expect("lifted forest verifies"),
            );
        }
    }
    if f.count_ones() == 2 {
        return Err(Error::Precondition(
            "u and v are the only vertices with target 1".into(),
        ));
    }

    let w = f
        .ones()
        .find(|&z| z != u && z != v)
        .expect("at least four ones");
    let path = graph::two_disjoint_paths_through(g, w, u, v)
        .expect("no cut vertex, so a (u,v)-path through w exists");
    let at_w = path.iter().position(|&z| z == w).expect("path passes w");

    // side[z]: 0 for the u side, 1 for the v side.
    const UNSET: u8 = 2;
    let mut side = vec![UNSET; g.order()];
    let mut queue = std::collections::VecDeque::new();
    for (i, &z) in path.iter().enumerate() {
        if z != w {
            side[z] = u8::from(i > at_w);
            queue.push_back(z);
        }
    }
    while let Some(z) = queue.pop_front() {
        for &y in g.neighbors(z) {
            if y != w && side[y] == UNSET {
                side[y] = side[z];
                queue.push_back(y);
            }
        }
    }
    assert!(
        g.vertices().all(|z| z == w || side[z] != UNSET),
        "spanning tree growth reached every vertex without w"
    );
    let odd_u_side = g
        .vertices()
        .filter(|&z| z != w && side[z] == 0 && f.get(z))
        .count()
        % 2
        == 1;
    side[w] = if odd_u_side { 0 } else { 1 };

    let mut edges = Vec::new();
    for s in 0..2u8 {
        let members: Vec<Vertex> = g.vertices().filter(|&z| side[z] == s).collect();
        let (sub, map) = g.induced_subgraph(&members);
        let local = f.restrict(&map).expect("each side has even target sum");
        let forest = exists_f_parity_forest(&sub, &local).expect("each side is connected");
        edges.extend(map.lift_edges(forest.edges()));
    }
    Ok(ParityForest::new(g, edges, f.clone()).expect("union of the two sides verifies"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn target(bits: &[u8]) -> ParityTarget {
        ParityTarget::new(bits.iter().map(|&b| b == 1).collect()).unwrap()
    }

    #[test]
    fn triangle_with_two_odd_endpoints_is_infeasible() {
        let out =
            decide_avoid_edge(&Graph::complete(3), Edge::new(0, 1), &target(&[1, 1, 0])).unwrap();
        assert_eq!(
            out,
            AvoidOutcome::Infeasible(Infeasibility {
                core: vec![0, 1, 2]
            })
        );
    }

    #[test]
    fn four_cycle_uses_the_opposite_matching() {
        let c4 = Graph::cycle(4);
        let ones = ParityTarget::all_ones(4).unwrap();
        for &e in c4.edges() {
            let out = decide_avoid_edge(&c4, e, &ones).unwrap();
            let forest = out.forest().unwrap();
            assert_eq!(forest.size(), 2);
            assert!(!forest.contains(e));
        }
    }

    #[test]
    fn cut_vertex_reduction_on_a_path() {
        let p3 = Graph::path(3);
        let red = reduce_at_cut_vertex(&p3, Edge::new(1, 2), &target(&[1, 0, 1]), 1).unwrap();
        assert_eq!(red.graph, Graph::complete(2));
        assert_eq!(red.map.parent_vertices(), &[1, 2]);
        assert_eq!(red.edge, Edge::new(0, 1));
        assert_eq!(red.target, target(&[1, 1]));
        assert_eq!(
            reduce_at_cut_vertex(&p3, Edge::new(1, 2), &target(&[1, 0, 1]), 0),
            Err(Error::NotCutVertex(0))
        );
    }

    #[test]
    fn barbell_keeps_the_side_of_the_edge() {
        // Triangles 0-1-2 and 3-4-5 joined through vertex 6.
        let bb = g(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 6),
                (6, 3),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
        );
        let red = reduce_at_cut_vertex(&bb, Edge::new(0, 1), &ParityTarget::zeros(7), 6).unwrap();
        assert_eq!(red.map.parent_vertices(), &[0, 1, 2, 6]);
    }

    #[test]
    fn endpoint_with_target_zero_stays_isolated() {
        let k4 = Graph::complete(4);
        let f = target(&[0, 1, 0, 1]);
        let forest = construct_2connected_case(&k4, Edge::new(0, 1), &f).unwrap();
        assert_eq!(forest.degrees()[0], 0);
        let out = decide_avoid_edge(&k4, Edge::new(1, 3), &f).unwrap();
        assert!(!out.is_feasible());
    }

    #[test]
    fn route_through_a_third_odd_vertex() {
        let c4 = Graph::cycle(4);
        let forest =
            construct_2connected_case(&c4, Edge::new(0, 1), &ParityTarget::all_ones(4).unwrap())
                .unwrap();
        assert_eq!(forest.edges(), &[Edge::new(0, 3), Edge::new(1, 2)]);
    }

    #[test]
    fn rejects_bad_input() {
        let p3 = Graph::path(3);
        assert_eq!(
            decide_avoid_edge(&p3, Edge::new(0, 2), &ParityTarget::zeros(3)),
            Err(Error::EdgeNotInGraph(Edge::new(0, 2)))
        );
        assert_eq!(
            decide_avoid_edge(
                &g(4, &[(0, 1), (2, 3)]),
                Edge::new(0, 1),
                &ParityTarget::zeros(4)
            ),
            Err(Error::Disconnected)
        );
    }
}
