//! Brute-force reference answers for small instances.
//!
//! Nothing here calls into the algorithm modules: traversal, union-find and
//! forest checks are written again from scratch so that agreement between an
//! algorithm and its oracle means something. Every search refuses inputs
//! beyond its [`Limits`] instead of running for hours.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::forest::ParityTarget;
use crate::graph::{Edge, Graph, Vertex};
use crate::matching::WeightedGraph;
use crate::reductions::CnfInstance;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Edge count for forest enumeration.
    pub edges: usize,
    /// Vertex count for induced-cycle search.
    pub cycle_vertices: usize,
    /// Variable count for truth tables.
    pub variables: usize,
    /// Vertex count for independent-set and matching search.
    pub vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            edges: 22,
            cycle_vertices: 14,
            variables: 20,
            vertices: 20,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            edges: usize::MAX,
            cycle_vertices: usize::MAX,
            variables: 62,
            vertices: 62,
        }
    }

    pub fn with_edges(self, edges: usize) -> Self {
        Limits { edges, ..self }
    }

    fn check(value: usize, cap: usize, what: &str) -> Result<()> {
        if value > cap {
            return Err(Error::CapExceeded(format!("{what} {value} > {cap}")));
        }
        Ok(())
    }
}

/// Independent re-check of the forest conditions: union-find for cycles,
/// a scan of all host edges for chords, a degree count for parity.
pub fn is_parity_forest(host: &Graph, edges: &[Edge], f: &ParityTarget) -> bool {
    let n = host.order();
    if f.len() != n {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }
    let mut seen = std::collections::HashSet::new();
    let mut deg = vec![0usize; n];
    for &e in edges {
        if !host.has_edge(e.u(), e.v()) || !seen.insert(e) {
            return false;
        }
        let (a, b) = (root(&mut parent, e.u()), root(&mut parent, e.v()));
        if a == b {
            return false;
        }
        parent[a] = b;
        deg[e.u()] += 1;
        deg[e.v()] += 1;
    }
    for &e in host.edges() {
        if !seen.contains(&e) && root(&mut parent, e.u()) == root(&mut parent, e.v()) {
            return false;
        }
    }
    (0..n).all(|v| (deg[v] % 2 == 1) == f.get(v))
}

/// A fixed choice for the first few edges of the enumeration order, used to
/// split one enumeration into independent parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prefix(pub Vec<bool>);

/// Depth-first enumeration of all f-parity perfect forests of a graph.
///
/// Edges are decided one at a time, exclusion before inclusion, in an order
/// that finishes the vertices of a breadth-first ordering one by one, so
/// parity can be checked as soon as a vertex has no undecided edge left.
/// Branches die as soon as they close a cycle, exclude an edge inside a
/// tree, or merge two trees joined by a second host edge. With a minimum
/// size set, branches also die once too many trees are finished: an induced
/// spanning forest with `c` trees has exactly `n − c` edges.
pub struct ForestEnumerator<'g> {
    g: &'g Graph,
    f: ParityTarget,
    order: Vec<Edge>,
    min_size: usize,
}

impl<'g> ForestEnumerator<'g> {
    pub fn new(g: &'g Graph, f: &ParityTarget, limits: &Limits) -> Result<Self> {
        Limits::check(g.size(), limits.edges, "edge count")?;
        if f.len() != g.order() {
            return Err(Error::TargetLength {
                expected: g.order(),
                got: f.len(),
            });
        }
        Ok(ForestEnumerator {
            g,
            f: f.clone(),
            order: elimination_order(g),
            min_size: 0,
        })
    }

    /// Restricts the enumeration to forests with at least `size` edges.
    pub fn with_min_size(self, size: usize) -> Self {
        ForestEnumerator {
            min_size: size,
            ..self
        }
    }

    /// The decision order of the edges.
    pub fn edge_order(&self) -> &[Edge] {
        &self.order
    }

    /// All `2^depth` prefixes of the given depth (capped at the edge count).
    pub fn split(&self, depth: usize) -> Vec<Prefix> {
        let depth = depth.min(self.order.len());
        (0..1usize << depth)
            .map(|mask| {
                Prefix(
                    (0..depth)
                        .map(|i| mask >> (depth - 1 - i) & 1 == 1)
                        .collect(),
                )
            })
            .collect()
    }

    pub fn for_each<B>(&self, visit: impl FnMut(&[Edge]) -> ControlFlow<B>) -> Option<B> {
        self.for_each_in(&Prefix(Vec::new()), visit)
    }

    /// Enumerates the forests consistent with `prefix`.
    pub fn for_each_in<B>(
        &self,
        prefix: &Prefix,
        mut visit: impl FnMut(&[Edge]) -> ControlFlow<B>,
    ) -> Option<B> {
        // Parity is checked when a vertex's last edge is decided, which never
        // happens for an isolated vertex.
        if self
            .g
            .vertices()
            .any(|v| self.g.degree(v) == 0 && self.f.get(v))
        {
            return None;
        }
        let mut st = Search::new(self.g, &self.f, &self.order, self.min_size);
        for (i, &take) in prefix.0.iter().enumerate() {
            if !st.decide(i, take).0 {
                return None;
            }
        }
        match st.dfs(prefix.0.len(), &mut visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    pub fn collect(&self) -> Vec<Vec<Edge>> {
        let mut out = Vec::new();
        self.for_each(|es| {
            out.push(sorted(es));
            ControlFlow::<()>::Continue(())
        });
        out
    }
}

fn sorted(es: &[Edge]) -> Vec<Edge> {
    let mut v = es.to_vec();
    v.sort_unstable();
    v
}

/// Breadth-first vertex order (restarting at the lowest unvisited vertex);
/// an edge is placed when its later endpoint comes up.
fn elimination_order(g: &Graph) -> Vec<Edge> {
    let n = g.order();
    let mut pos = vec![usize::MAX; n];
    let mut seq = Vec::with_capacity(n);
    for s in 0..n {
        if pos[s] != usize::MAX {
            continue;
        }
        pos[s] = seq.len();
        seq.push(s);
        let mut head = seq.len() - 1;
        while head < seq.len() {
            let v = seq[head];
            head += 1;
            for &w in g.neighbors(v) {
                if pos[w] == usize::MAX {
                    pos[w] = seq.len();
                    seq.push(w);
                }
            }
        }
    }
    let mut order: Vec<Edge> = g.edges().to_vec();
    order.sort_by_key(|e| {
        let (a, b) = (pos[e.u()], pos[e.v()]);
        (a.max(b), a.min(b))
    });
    order
}

struct Search<'a> {
    g: &'a Graph,
    f: &'a ParityTarget,
    order: &'a [Edge],
    label: Vec<usize>,
    members: Vec<Vec<Vertex>>,
    odd: Vec<bool>,
    undecided: Vec<usize>,
    /// Undecided edge ends per tree, indexed by label.
    open: Vec<usize>,
    /// Trees with no undecided edge left.
    closed: usize,
    min_size: usize,
    chosen: Vec<Edge>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, f: &'a ParityTarget, order: &'a [Edge], min_size: usize) -> Self {
        let n = g.order();
        let open: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
        Search {
            closed: open.iter().filter(|&&d| d == 0).count(),
            open,
            min_size,
            g,
            f,
            order,
            label: (0..n).collect(),
            members: (0..n).map(|v| vec![v]).collect(),
            odd: vec![false; n],
            undecided: (0..n).map(|v| g.neighbors(v).len()).collect(),
            chosen: Vec::new(),
        }
    }

    fn settled_ok(&self, v: Vertex) -> bool {
        self.undecided[v] > 0 || self.odd[v] == self.f.get(v)
    }

    /// Applies one decision and reports whether the branch survives, plus
    /// what [`Search::undo`] needs to take it back.
    fn decide(&mut self, i: usize, take: bool) -> (bool, Undo) {
        let e = self.order[i];
        let (u, v) = e.endpoints();
        let undo = Undo {
            closed: self.closed,
            merge: None,
        };
        self.undecided[u] -= 1;
        self.undecided[v] -= 1;
        let (a, b) = (self.label[u], self.label[v]);
        self.open[a] -= 1;
        self.open[b] -= 1;
        if !take {
            if a == b {
                return (false, undo);
            }
            self.closed += usize::from(self.open[a] == 0) + usize::from(self.open[b] == 0);
            return (
                self.settled_ok(u) && self.settled_ok(v) && self.big_enough(i),
                undo,
            );
        }
        if a == b || self.links(a, b) > 1 {
            return (false, undo);
        }
        let merge = self.merge(a, b);
        self.closed += usize::from(self.open[merge.big] == 0);
        self.odd[u] = !self.odd[u];
        self.odd[v] = !self.odd[v];
        self.chosen.push(e);
        (
            self.settled_ok(u) && self.settled_ok(v) && self.big_enough(i),
            Undo {
                merge: Some(merge),
                ..undo
            },
        )
    }

    /// Whether the forest can still reach `min_size` edges once edge `i` is
    /// decided: finished trees stay separate, the rest may still join up.
    fn big_enough(&self, i: usize) -> bool {
        let loose = usize::from(i + 1 < self.order.len());
        self.g.order() >= self.min_size + self.closed + loose
    }

    fn undo(&mut self, i: usize, undo: Undo) {
        let (u, v) = self.order[i].endpoints();
        self.undecided[u] += 1;
        self.undecided[v] += 1;
        self.closed = undo.closed;
        if let Some(m) = undo.merge {
            self.chosen.pop();
            self.odd[u] = !self.odd[u];
            self.odd[v] = !self.odd[v];
            let at = self.members[m.big].len() - m.count;
            let moved = self.members[m.big].split_off(at);
            for &x in &moved {
                self.label[x] = m.small;
            }
            self.members[m.small] = moved;
            self.open[m.big] -= m.open;
            self.open[m.small] = m.open;
        }
        self.open[self.label[u]] += 1;
        self.open[self.label[v]] += 1;
    }

    fn links(&self, a: usize, b: usize) -> usize {
        let (small, other) = if self.members[a].len() <= self.members[b].len() {
            (a, b)
        } else {
            (b, a)
        };
        self.members[small]
            .iter()
            .map(|&x| {
                self.g
                    .neighbors(x)
                    .iter()
                    .filter(|&&y| self.label[y] == other)
                    .count()
            })
            .sum()
    }

    fn merge(&mut self, a: usize, b: usize) -> Merge {
        let (small, big) = if self.members[a].len() <= self.members[b].len() {
            (a, b)
        } else {
            (b, a)
        };
        let moved = std::mem::take(&mut self.members[small]);
        for &x in &moved {
            self.label[x] = big;
        }
        let count = moved.len();
        self.members[big].extend(moved);
        let open = std::mem::take(&mut self.open[small]);
        self.open[big] += open;
        Merge {
            small,
            big,
            count,
            open,
        }
    }

    fn dfs<B>(
        &mut self,
        i: usize,
        visit: &mut impl FnMut(&[Edge]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if i == self.order.len() {
            debug_assert!(is_parity_forest(self.g, &self.chosen, self.f));
            return visit(&self.chosen);
        }
        // Sized searches try inclusion first so large forests show up early.
        let branches = if self.min_size > 0 {
            [true, false]
        } else {
            [false, true]
        };
        for take in branches {
            let (alive, undo) = self.decide(i, take);
            let flow = if alive {
                self.dfs(i + 1, visit)
            } else {
                ControlFlow::Continue(())
            };
            self.undo(i, undo);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

#[derive(Clone, Copy)]
struct Merge {
    small: usize,
    big: usize,
    count: usize,
    open: usize,
}

struct Undo {
    closed: usize,
    merge: Option<Merge>,
}

/// Every f-parity perfect forest of `g`, as sorted edge lists.
pub fn enumerate_parity_forests(
    g: &Graph,
    f: &ParityTarget,
    limits: &Limits,
) -> Result<Vec<Vec<Edge>>> {
    Ok(ForestEnumerator::new(g, f, limits)?.collect())
}

fn best_forest(
    g: &Graph,
    f: &ParityTarget,
    limits: &Limits,
    better: impl Fn(usize, usize) -> bool,
) -> Result<Option<Vec<Edge>>> {
    let en = ForestEnumerator::new(g, f, limits)?;
    let mut best: Option<Vec<Edge>> = None;
    en.for_each(|es| {
        if best.as_ref().is_none_or(|b| better(es.len(), b.len())) {
            best = Some(sorted(es));
        }
        ControlFlow::<()>::Continue(())
    });
    Ok(best)
}

pub fn bf_min_forest(g: &Graph, f: &ParityTarget, limits: &Limits) -> Result<Option<Vec<Edge>>> {
    best_forest(g, f, limits, |new, old| new < old)
}

pub fn bf_max_forest(g: &Graph, f: &ParityTarget, limits: &Limits) -> Result<Option<Vec<Edge>>> {
    best_forest(g, f, limits, |new, old| new > old)
}

/// Largest 0-perfect forest; `None` for odd order.
pub fn bf_max_zero_forest(g: &Graph, limits: &Limits) -> Result<Option<Vec<Edge>>> {
    if g.order() % 2 == 1 {
        return Ok(None);
    }
    bf_max_forest(g, &ParityTarget::all_ones(g.order())?, limits)
}

fn first_forest(
    g: &Graph,
    f: &ParityTarget,
    limits: &Limits,
    keep: impl Fn(&[Edge]) -> bool,
) -> Result<Option<Vec<Edge>>> {
    let en = ForestEnumerator::new(g, f, limits)?;
    Ok(en.for_each(|es| {
        if keep(es) {
            ControlFlow::Break(sorted(es))
        } else {
            ControlFlow::Continue(())
        }
    }))
}

pub fn bf_exists_avoiding(
    g: &Graph,
    e: Edge,
    f: &ParityTarget,
    limits: &Limits,
) -> Result<Option<Vec<Edge>>> {
    first_forest(g, f, limits, |es| !es.contains(&e))
}

pub fn bf_exists_containing(
    g: &Graph,
    e: Edge,
    f: &ParityTarget,
    limits: &Limits,
) -> Result<Option<Vec<Edge>>> {
    first_forest(g, f, limits, |es| es.contains(&e))
}

/// Some forest of at least `size` edges for target `f`.
pub fn bf_forest_at_least(
    g: &Graph,
    f: &ParityTarget,
    size: usize,
    limits: &Limits,
) -> Result<Option<Vec<Edge>>> {
    let en = ForestEnumerator::new(g, f, limits)?.with_min_size(size);
    Ok(en.for_each(|es| {
        assert!(es.len() >= size, "size pruning let a small forest through");
        ControlFlow::Break(sorted(es))
    }))
}

/// A 1-perfect forest without isolated vertices, trying each even vertex.
pub fn bf_proper_one_perfect(g: &Graph, limits: &Limits) -> Result<Option<Vec<Edge>>> {
    let n = g.order();
    if n.is_multiple_of(2) {
        return Ok(None);
    }
    for x in 0..n {
        let f = ParityTarget::all_ones_except(n, x)?;
        let found = first_forest(g, &f, limits, |es| {
            let mut touched = vec![false; n];
            for e in es {
                touched[e.u()] = true;
                touched[e.v()] = true;
            }
            touched.iter().all(|&t| t)
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// An induced cycle through `e1` and `e2`, as a vertex sequence starting
/// with the endpoints of `e1`.
pub fn bf_induced_cycle_through(
    g: &Graph,
    e1: Edge,
    e2: Edge,
    limits: &Limits,
) -> Result<Option<Vec<Vertex>>> {
    Limits::check(g.order(), limits.cycle_vertices, "vertex count")?;
    if !g.has_edge(e1.u(), e1.v()) || !g.has_edge(e2.u(), e2.v()) {
        return Ok(None);
    }
    let mut path = vec![e1.u(), e1.v()];
    let mut on = vec![false; g.order()];
    on[e1.u()] = true;
    on[e1.v()] = true;
    Ok(extend_cycle(g, e2, &mut path, &mut on))
}

fn extend_cycle(
    g: &Graph,
    e2: Edge,
    path: &mut Vec<Vertex>,
    on: &mut [bool],
) -> Option<Vec<Vertex>> {
    let start = path[0];
    let last = *path.last().unwrap();
    for &x in g.neighbors(last) {
        if on[x] {
            continue;
        }
        // x may touch the path only at `last`, and at `start` if it closes the cycle.
        let touches: Vec<Vertex> = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&y| on[y] && y != last)
            .collect();
        match touches.as_slice() {
            [] => {
                path.push(x);
                on[x] = true;
                if let Some(c) = extend_cycle(g, e2, path, on) {
                    return Some(c);
                }
                on[x] = false;
                path.pop();
            }
            [s] if *s == start => {
                let mut cycle = path.clone();
                cycle.push(x);
                let len = cycle.len();
                let has_e2 = (0..len).any(|i| {
                    let (a, b) = (cycle[i], cycle[(i + 1) % len]);
                    (a.min(b), a.max(b)) == e2.endpoints()
                });
                if has_e2 {
                    return Some(cycle);
                }
            }
            _ => {}
        }
    }
    None
}

/// Whether the vertex sequence is an induced cycle of `g` (length ≥ 3).
pub fn is_induced_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !cycle.iter().all(|&v| v < g.order() && seen.insert(v)) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Whether the vertex sequence is an induced path of `g`.
pub fn is_induced_path(g: &Graph, path: &[Vertex]) -> bool {
    let mut seen = std::collections::HashSet::new();
    if !path.iter().all(|&v| v < g.order() && seen.insert(v)) {
        return false;
    }
    for i in 0..path.len() {
        for j in i + 1..path.len() {
            if g.has_edge(path[i], path[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// An induced `(s, t)`-path with exactly `len` edges.
pub fn bf_induced_path(
    g: &Graph,
    s: Vertex,
    t: Vertex,
    len: usize,
    limits: &Limits,
) -> Result<Option<Vec<Vertex>>> {
    Limits::check(g.order(), limits.cycle_vertices, "vertex count")?;
    let mut path = vec![s];
    let mut on = vec![false; g.order()];
    on[s] = true;
    Ok(extend_path(g, t, len, &mut path, &mut on))
}

fn extend_path(
    g: &Graph,
    t: Vertex,
    len: usize,
    path: &mut Vec<Vertex>,
    on: &mut [bool],
) -> Option<Vec<Vertex>> {
    let last = *path.last().unwrap();
    if last == t {
        return (path.len() == len + 1).then(|| path.clone());
    }
    if path.len() > len {
        return None;
    }
    for &x in g.neighbors(last) {
        if on[x] || g.neighbors(x).iter().any(|&y| on[y] && y != last) {
            continue;
        }
        path.push(x);
        on[x] = true;
        if let Some(p) = extend_path(g, t, len, path, on) {
            return Some(p);
        }
        on[x] = false;
        path.pop();
    }
    None
}

fn literal_value(lit: i32, assignment: u64) -> bool {
    let bit = assignment >> (lit.unsigned_abs() - 1) & 1 == 1;
    if lit > 0 {
        bit
    } else {
        !bit
    }
}

fn truth_table(
    cnf: &CnfInstance,
    limits: &Limits,
    ok: impl Fn(&[bool]) -> bool,
) -> Result<Option<Vec<bool>>> {
    let n = cnf.num_vars();
    Limits::check(n, limits.variables, "variable count")?;
    for a in 0..1u64 << n {
        let good = cnf.clauses().iter().all(|c| {
            let vals: Vec<bool> = c.iter().map(|&l| literal_value(l, a)).collect();
            ok(&vals)
        });
        if good {
            return Ok(Some((0..n).map(|i| a >> i & 1 == 1).collect()));
        }
    }
    Ok(None)
}

/// An assignment giving every clause a true and a false literal.
pub fn bf_nae_satisfiable(cnf: &CnfInstance, limits: &Limits) -> Result<Option<Vec<bool>>> {
    truth_table(cnf, limits, |vals| {
        vals.iter().any(|&b| b) && vals.iter().any(|&b| !b)
    })
}

pub fn bf_satisfiable(cnf: &CnfInstance, limits: &Limits) -> Result<Option<Vec<bool>>> {
    truth_table(cnf, limits, |vals| vals.iter().any(|&b| b))
}

/// A maximum independent set, lexicographically first by bitmask among the largest.
pub fn bf_max_independent_set(g: &Graph, limits: &Limits) -> Result<Vec<Vertex>> {
    let n = g.order();
    Limits::check(n, limits.vertices, "vertex count")?;
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut best = 0u64;
    for set in 0..1u64 << n {
        if set.count_ones() <= best.count_ones() {
            continue;
        }
        if (0..n).all(|v| set >> v & 1 == 0 || adj[v] & set == 0) {
            best = set;
        }
    }
    Ok((0..n).filter(|&v| best >> v & 1 == 1).collect())
}

/// Least weight of a perfect matching, by pairing the lowest free vertex
/// with each of its free neighbours in turn.
pub fn bf_min_perfect_matching_weight(wg: &WeightedGraph, limits: &Limits) -> Result<Option<u64>> {
    let g = wg.base();
    Limits::check(g.order(), limits.vertices, "vertex count")?;
    fn go(wg: &WeightedGraph, free: &mut Vec<bool>) -> Option<u64> {
        let Some(v) = free.iter().position(|&f| f) else {
            return Some(0);
        };
        free[v] = false;
        let mut best = None;
        for &w in wg.base().neighbors(v) {
            if free[w] {
                free[w] = false;
                if let Some(rest) = go(wg, free) {
                    let total = rest + wg.weight(Edge::new(v, w)).unwrap();
                    best = Some(best.map_or(total, |b: u64| b.min(total)));
                }
                free[w] = true;
            }
        }
        free[v] = true;
        best
    }
    Ok(go(wg, &mut vec![true; g.order()]))
}

pub fn bf_has_perfect_matching(g: &Graph, limits: &Limits) -> Result<bool> {
    let wg = WeightedGraph::uniform(g.clone(), 1)?;
    Ok(bf_min_perfect_matching_weight(&wg, limits)?.is_some())
}

fn count_components(g: &Graph, removed: Option<Vertex>) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] || Some(s) == removed {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] && Some(w) != removed {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Vertices whose deletion increases the number of components.
pub fn naive_cut_vertices(g: &Graph) -> Vec<Vertex> {
    let base = count_components(g, None);
    (0..g.order())
        .filter(|&v| count_components(g, Some(v)) > base)
        .collect()
}

pub fn naive_is_connected(g: &Graph) -> bool {
    count_components(g, None) <= 1
}

/// Whether some simple `(u, v)`-path passes through `w`, by trying every
/// simple path out of `u`.
pub fn bf_path_through_exists(g: &Graph, w: Vertex, u: Vertex, v: Vertex) -> bool {
    fn go(g: &Graph, at: Vertex, target: Vertex, w: Vertex, seen_w: bool, on: &mut [bool]) -> bool {
        if at == target {
            return seen_w;
        }
        for &x in g.neighbors(at) {
            if !on[x] {
                on[x] = true;
                if go(g, x, target, w, seen_w || x == w, on) {
                    return true;
                }
                on[x] = false;
            }
        }
        false
    }
    let mut on = vec![false; g.order()];
    on[u] = true;
    go(g, u, v, w, false, &mut on)
}

/// Whether a vertex set is independent in `g`.
pub fn is_independent(g: &Graph, set: &[Vertex]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| a != b && !g.has_edge(a, b)))
}
