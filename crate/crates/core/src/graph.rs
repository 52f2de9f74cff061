//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Graphs are immutable once built. Operations that delete or add vertices
//! return a fresh graph together with a [`VertexMap`] relating the new ids to
//! the ids of the graph they were derived from, so results computed on a
//! subgraph can be carried back to the host.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

const NONE: usize = usize::MAX;

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(Vertex, Vertex)", into = "(Vertex, Vertex)")]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Panics when `a == b`.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Self::try_new(a, b).unwrap_or_else(|| panic!("self-loop at vertex {a}"))
    }

    pub fn try_new(a: Vertex, b: Vertex) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge(a, b)),
            std::cmp::Ordering::Greater => Some(Edge(b, a)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn contains(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(self, x: Vertex) -> Vertex {
        debug_assert!(self.contains(x));
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl TryFrom<(Vertex, Vertex)> for Edge {
    type Error = String;

    fn try_from((a, b): (Vertex, Vertex)) -> std::result::Result<Self, Self::Error> {
        Edge::try_new(a, b).ok_or_else(|| format!("self-loop at vertex {a}"))
    }
}

impl From<Edge> for (Vertex, Vertex) {
    fn from(e: Edge) -> Self {
        (e.0, e.1)
    }
}

/// A finite simple undirected graph.
///
/// Adjacency lists and the edge list are both kept sorted, so every
/// traversal below visits vertices in ascending id order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            edges.push(Edge::try_new(a, b).ok_or(Error::SelfLoop(a))?);
        }
        Self::from_edges(n, edges)
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0]));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            if e.v() >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: e.v(),
                    order: n,
                });
            }
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edges })
    }

    /// Builds a graph from edges that may repeat; duplicates collapse.
    pub fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        Self::from_edges(n, edges)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge(u, v)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| Edge(v - 1, v))).expect("path is simple")
    }

    /// Cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges = (1..n)
            .map(|v| Edge(v - 1, v))
            .chain(std::iter::once(Edge(0, n - 1)));
        Self::from_edges(n, edges).expect("cycle is simple")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    /// Edges in ascending order; an edge's position here is its id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a != b && a < self.order() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn check_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.v())?;
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(Error::EdgeNotInGraph(e))
        }
    }

    /// Subgraph induced by `keep`; new ids follow ascending order of `keep`.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, VertexMap) {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut local = vec![None; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = Some(i);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| match (local[e.u()], local[e.v()]) {
                (Some(a), Some(b)) => Some(Edge(a, b)),
                _ => None,
            });
        let g = Graph::from_edges(keep.len(), edges).expect("induced subgraph is simple");
        (
            g,
            VertexMap {
                to_parent: keep,
                from_parent: local,
            },
        )
    }

    pub fn remove_vertices(&self, drop: &[Vertex]) -> (Graph, VertexMap) {
        let mut dropped = vec![false; self.order()];
        for &v in drop {
            dropped[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !dropped[v]).collect();
        self.induced_subgraph(&keep)
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        let edges = self.edges.iter().copied().filter(|&f| f != e);
        Graph::from_edges(self.order(), edges).expect("subgraph is simple")
    }

    /// Appends one new pendant vertex per anchor, numbered `n, n+1, ...` in
    /// the order the anchors are given.
    pub fn with_pendants(&self, anchors: &[Vertex]) -> Graph {
        let n = self.order();
        let extra = anchors.iter().enumerate().map(|(i, &a)| Edge(a, n + i));
        Graph::from_edges(n + anchors.len(), self.edges.iter().copied().chain(extra))
            .expect("pendant edges are new")
    }

    /// Closed neighbourhood `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }
}

/// Relates vertex ids of a derived graph to the graph it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    to_parent: Vec<Vertex>,
    from_parent: Vec<Option<Vertex>>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            to_parent: (0..n).collect(),
            from_parent: (0..n).map(Some).collect(),
        }
    }

    pub fn parent(&self, v: Vertex) -> Vertex {
        self.to_parent[v]
    }

    pub fn local(&self, v: Vertex) -> Option<Vertex> {
        self.from_parent.get(v).copied().flatten()
    }

    pub fn parent_vertices(&self) -> &[Vertex] {
        &self.to_parent
    }

    pub fn lift_edge(&self, e: Edge) -> Edge {
        Edge::new(self.to_parent[e.u()], self.to_parent[e.v()])
    }

    pub fn lift_edges<'a>(&'a self, edges: impl IntoIterator<Item = &'a Edge>) -> Vec<Edge> {
        edges.into_iter().map(|&e| self.lift_edge(e)).collect()
    }

    pub fn lower_edge(&self, e: Edge) -> Option<Edge> {
        Some(Edge::new(self.local(e.u())?, self.local(e.v())?))
    }

    /// Composes `self` (child -> middle) with `outer` (middle -> root).
    pub fn then(&self, outer: &VertexMap) -> VertexMap {
        let to_parent: Vec<Vertex> = self.to_parent.iter().map(|&m| outer.parent(m)).collect();
        let mut from_parent = vec![None; outer.from_parent.len()];
        for (i, &r) in to_parent.iter().enumerate() {
            from_parent[r] = Some(i);
        }
        VertexMap {
            to_parent,
            from_parent,
        }
    }
}

/// Component label of every vertex; labels are numbered in order of each
/// component's smallest vertex.
pub fn component_labels(g: &Graph) -> Vec<usize> {
    let mut label = vec![NONE; g.order()];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if label[s] != NONE {
            continue;
        }
        label[s] = next;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if label[w] == NONE {
                    label[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let label = component_labels(g);
    let count = label.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut comps = vec![Vec::new(); count];
    for (v, &l) in label.iter().enumerate() {
        comps[l].push(v);
    }
    comps
}

/// The empty graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Breadth-first shortest path from `s` to `t`, as a vertex sequence.
pub fn bfs_path(g: &Graph, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    let mut pred = vec![NONE; g.order()];
    pred[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == t {
            break;
        }
        for &w in g.neighbors(v) {
            if pred[w] == NONE {
                pred[w] = v;
                queue.push_back(w);
            }
        }
    }
    if pred[t] == NONE {
        return None;
    }
    let mut path = vec![t];
    let mut v = t;
    while v != s {
        v = pred[v];
        path.push(v);
    }
    path.reverse();
    Some(path)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and
/// cut vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted by vertex list.
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<Vertex>,
    /// `(block index, cut vertex)` incidences of the block-cut tree.
    pub block_cut_tree: Vec<(usize, Vertex)>,
}

/// Hopcroft-Tarjan biconnected components, iterative.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    let mut blocks: Vec<Block> = Vec::new();
    let mut edge_stack: Vec<Edge> = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut frames: Vec<(Vertex, Vertex, usize)> = Vec::new();

    for root in g.vertices() {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if g.degree(root) == 0 {
            blocks.push(Block {
                vertices: vec![root],
                edges: Vec::new(),
            });
            continue;
        }
        let mut root_children = 0;
        frames.push((root, NONE, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w] == NONE {
                    edge_stack.push(Edge::new(v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push(Edge::new(v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if parent == NONE {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let tree_edge = Edge::new(parent, v);
                let mut edges = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    edges.push(e);
                    if e == tree_edge {
                        break;
                    }
                }
                let mut vertices: Vec<Vertex> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
                vertices.sort_unstable();
                vertices.dedup();
                edges.sort_unstable();
                blocks.push(Block { vertices, edges });
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let cut_vertices: Vec<Vertex> = g.vertices().filter(|&v| is_cut[v]).collect();
    let block_cut_tree = blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| {
            b.vertices
                .iter()
                .filter(|&&v| is_cut[v])
                .map(move |&v| (i, v))
        })
        .collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
        block_cut_tree,
    }
}

pub fn cut_vertices(g: &Graph) -> Vec<Vertex> {
    block_decomposition(g).cut_vertices
}

/// Connected with no cut vertex. `K_1` and `K_2` qualify.
pub fn is_nonseparable(g: &Graph) -> bool {
    g.order() > 0 && is_connected(g) && cut_vertices(g).is_empty()
}

/// True iff every pair of vertices in `s` is adjacent.
pub fn is_complete(g: &Graph, s: &[Vertex]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, &a)| s[i + 1..].iter().all(|&b| a == b || g.has_edge(a, b)))
}

/// An induced path `p1 p2 p3` (so `p1 p3` is a non-edge), or `None` when
/// every component is complete. Scans middle vertices in ascending order.
pub fn find_induced_p3(g: &Graph) -> Option<(Vertex, Vertex, Vertex)> {
    for p2 in g.vertices() {
        let nb = g.neighbors(p2);
        for (i, &p1) in nb.iter().enumerate() {
            if let Some(&p3) = nb[i + 1..].iter().find(|&&p3| !g.has_edge(p1, p3)) {
                return Some((p1, p2, p3));
            }
        }
    }
    None
}

/// A simple `(u, v)`-path through `w`, or `None` if there is none.
///
/// Adds a vertex `w'` adjacent to `u` and `v` and looks for two internally
/// disjoint `(w, w')`-paths with unit vertex capacities; the two paths glue
/// into the answer.
pub fn two_disjoint_paths_through(
    g: &Graph,
    w: Vertex,
    u: Vertex,
    v: Vertex,
) -> Option<Vec<Vertex>> {
    assert!(u != v && w != u && w != v, "u, v, w must be distinct");
    let n = g.order();
    // in(x) = 2x, out(x) = 2x + 1, sink = 2n.
    let sink = 2 * n;
    let mut net = FlowNetwork::new(2 * n + 1);
    for x in g.vertices() {
        if x != w {
            net.add_arc(2 * x, 2 * x + 1);
        }
    }
    for e in g.edges() {
        net.add_arc(2 * e.u() + 1, 2 * e.v());
        net.add_arc(2 * e.v() + 1, 2 * e.u());
    }
    net.add_arc(2 * u + 1, sink);
    net.add_arc(2 * v + 1, sink);

    let source = 2 * w + 1;
    for _ in 0..2 {
        if !net.augment(source, sink) {
            return None;
        }
    }

    let mut halves: Vec<Vec<Vertex>> = Vec::new();
    for _ in 0..2 {
        let mut path = vec![w];
        let mut node = source;
        while node != sink {
            let arc = net.take_flow_arc(node).expect("flow is conserved");
            node = net.head[arc];
            if node != sink && node % 2 == 1 {
                path.push(node / 2);
            }
        }
        halves.push(path);
    }
    let (mut to_u, to_v) = if halves[0].last() == Some(&u) {
        (halves.swap_remove(0), halves.pop().unwrap())
    } else {
        let to_v = halves.swap_remove(0);
        (halves.pop().unwrap(), to_v)
    };
    to_u.reverse();
    to_u.extend_from_slice(&to_v[1..]);
    Some(to_u)
}

/// Whether `seq` lists the vertices of an induced path of `g` in order.
pub fn is_induced_path(g: &Graph, seq: &[Vertex]) -> bool {
    distinct_in_range(g, seq)
        && seq.iter().enumerate().all(|(i, &a)| {
            seq[i + 1..]
                .iter()
                .enumerate()
                .all(|(d, &b)| g.has_edge(a, b) == (d == 0))
        })
}

/// Whether `seq` lists the vertices of an induced cycle of `g` in order.
pub fn is_induced_cycle(g: &Graph, seq: &[Vertex]) -> bool {
    let k = seq.len();
    k >= 3
        && distinct_in_range(g, seq)
        && seq.iter().enumerate().all(|(i, &a)| {
            seq[i + 1..].iter().enumerate().all(|(d, &b)| {
                let j = i + 1 + d;
                g.has_edge(a, b) == (j == i + 1 || (i == 0 && j == k - 1))
            })
        })
}

fn distinct_in_range(g: &Graph, seq: &[Vertex]) -> bool {
    let mut seen = vec![false; g.order()];
    seq.iter()
        .all(|&v| v < g.order() && !std::mem::replace(&mut seen[v], true))
}

/// Edges between consecutive entries of `seq`, closing back to the start
/// when `closed`.
pub fn walk_edges(seq: &[Vertex], closed: bool) -> Vec<Edge> {
    let mut out: Vec<Edge> = seq.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
    if closed && seq.len() > 2 {
        out.push(Edge::new(seq[seq.len() - 1], seq[0]));
    }
    out
}

/// Unit-capacity residual network used by [`two_disjoint_paths_through`].
struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<u8>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    /// Arc `2k` is forward, `2k + 1` its reverse.
    fn add_arc(&mut self, from: usize, to: usize) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(1);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![NONE; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &a in &self.out[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut x = t;
        while x != s {
            let a = via[x];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            x = self.head[a ^ 1];
        }
        true
    }

    /// Finds a forward arc out of `node` carrying flow and removes that flow.
    fn take_flow_arc(&mut self, node: usize) -> Option<usize> {
        let arc = self.out[node]
            .iter()
            .copied()
            .find(|&a| a % 2 == 0 && self.cap[a] == 0 && self.cap[a ^ 1] == 1)?;
        self.cap[arc ^ 1] = 0;
        Some(arc)
    }
}
