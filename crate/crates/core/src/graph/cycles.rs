use std::collections::VecDeque;

use super::{Cycle, EdgeId, Graph};
use crate::error::{Error, Result};

/// Length of a shortest cycle, or `None` for a forest.
///
/// BFS from every root; a non-tree edge `(x, y)` closes a closed walk of
/// length `dist[x] + dist[y] + 1` containing a cycle no longer than that, and
/// the root lying on a shortest cycle attains the minimum exactly.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[x] + 1 >= b {
                    break;
                }
            }
            for &(y, e) in g.incident(x) {
                if e.0 == parent_edge[x] {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent_edge[y] = e.0;
                    queue.push_back(y);
                } else {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        parent_edge.iter_mut().for_each(|p| *p = usize::MAX);
    }
    best
}

/// Every cycle with exactly `length` vertices, each listed once in
/// normalized form, sorted.
pub fn find_cycles(g: &Graph, length: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    if length < 3 || length > g.order() {
        return out;
    }
    let mut on_path = vec![false; g.order()];
    let mut path = Vec::with_capacity(length);
    for start in 0..g.order() {
        path.push(start);
        on_path[start] = true;
        extend_cycle(g, length, start, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
        path.pop();
    }
    out.sort();
    out
}

fn extend_cycle(
    g: &Graph,
    length: usize,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().expect("path is never empty");
    if path.len() == length {
        // each cycle is seen in two directions; keep the one with path[1] < path[last]
        if g.has_edge(last, start) && path[1] < last {
            out.push(Cycle {
                vertices: path.clone(),
            });
        }
        return;
    }
    for w in g.neighbors(last) {
        if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend_cycle(g, length, start, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

pub fn list_pentagons(g: &Graph) -> Vec<Cycle> {
    find_cycles(g, 5)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Whether the graph with the `removed_v` vertices and `removed_e` edges
/// deleted still has a cycle.
fn has_cycle_avoiding(g: &Graph, removed_v: &[bool], uf: &mut UnionFind) -> bool {
    uf.reset();
    g.edges()
        .iter()
        .filter(|&&(a, b)| !removed_v[a] && !removed_v[b])
        .any(|&(a, b)| !uf.union(a, b))
}

/// Whether `g` contains two vertex-disjoint cycles.
pub fn has_disjoint_cycles(g: &Graph) -> bool {
    let mut uf = UnionFind::new(g.order());
    let mut removed = vec![false; g.order()];
    // A shortest cycle settles most graphs of interest immediately.
    if let Some(len) = girth(g) {
        if let Some(c) = find_cycles(g, len).first() {
            c.vertices().iter().for_each(|&v| removed[v] = true);
            if has_cycle_avoiding(g, &removed, &mut uf) {
                return true;
            }
            removed.iter_mut().for_each(|r| *r = false);
        }
    } else {
        return false;
    }
    for len in 3..=g.order() {
        for c in find_cycles(g, len) {
            c.vertices().iter().for_each(|&v| removed[v] = true);
            let hit = has_cycle_avoiding(g, &removed, &mut uf);
            c.vertices().iter().for_each(|&v| removed[v] = false);
            if hit {
                return true;
            }
        }
    }
    false
}

/// Searches for an edge set of size at most `max_cut` whose removal leaves at
/// least two components that each contain a cycle.
pub(crate) fn find_cyclic_cut(g: &Graph, max_cut: usize) -> Option<Vec<EdgeId>> {
    let m = g.size();
    let n = g.order();
    let mut uf = UnionFind::new(n);
    let mut removed = vec![false; m];
    let mut comp_vertices = vec![0usize; n];
    let mut comp_edges = vec![0usize; n];
    let mut check = |removed: &[bool]| -> bool {
        uf.reset();
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            if !removed[i] {
                uf.union(a, b);
            }
        }
        comp_vertices.iter_mut().for_each(|c| *c = 0);
        comp_edges.iter_mut().for_each(|c| *c = 0);
        for v in 0..n {
            comp_vertices[uf.find(v)] += 1;
        }
        for (i, &(a, _)) in g.edges().iter().enumerate() {
            if !removed[i] {
                comp_edges[uf.find(a)] += 1;
            }
        }
        (0..n)
            .filter(|&r| comp_vertices[r] > 0 && comp_edges[r] >= comp_vertices[r])
            .count()
            >= 2
    };
    for k in 0..=max_cut.min(m) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            idx.iter().for_each(|&i| removed[i] = true);
            let hit = check(&removed);
            idx.iter().for_each(|&i| removed[i] = false);
            if hit {
                return Some(idx.into_iter().map(EdgeId).collect());
            }
            // next k-combination of 0..m in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if idx[i] < m - k + i {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    i = usize::MAX;
                    break;
                }
            }
            if i != usize::MAX {
                break;
            }
        }
    }
    None
}

/// Whether no set of at most `n - 1` edges separates two disjoint cycles.
///
/// Equivalently: no such edge set leaves two components that both contain a
/// cycle. All candidate sets are enumerated, which is fine for graphs with a
/// few dozen edges.
pub fn cyclically_edge_connected_at_least(g: &Graph, n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::hypothesis("connectivity level must be at least 2"));
    }
    if !has_disjoint_cycles(g) {
        return Err(Error::NoDisjointCycles);
    }
    Ok(find_cyclic_cut(g, n - 1).is_none())
}

/// Backtracking search for a Hamiltonian cycle.
pub fn is_hamiltonian(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.valence(v) < 2) {
        return false;
    }
    let mut visited = vec![false; n];
    // free[v]: neighbors of v that could still be its cycle neighbors
    let mut free: Vec<usize> = (0..n).map(|v| g.valence(v)).collect();
    visited[0] = true;
    ham_extend(g, 0, 1, &mut visited, &mut free)
}

fn ham_extend(g: &Graph, last: usize, depth: usize, visited: &mut [bool], free: &mut [usize]) -> bool {
    let n = g.order();
    if depth == n {
        return g.has_edge(last, 0);
    }
    for w in g.neighbors(last) {
        if visited[w] {
            continue;
        }
        // `last` becomes interior: its other unvisited neighbors lose an option.
        // The start vertex still owes the closing edge, so it is exempt.
        let interior = last != 0;
        let mut ok = true;
        for x in g.neighbors(last) {
            if interior && x != w && !visited[x] {
                free[x] -= 1;
                if free[x] < 2 {
                    ok = false;
                }
            }
        }
        if ok {
            visited[w] = true;
            if ham_extend(g, w, depth + 1, visited, free) {
                return true;
            }
            visited[w] = false;
        }
        for x in g.neighbors(last) {
            if interior && x != w && !visited[x] {
                free[x] += 1;
            }
        }
    }
    false
}

/// `G_e`: the cubic graph obtained by deleting both endpoints of `e` and
/// joining each endpoint's two other neighbors by a new edge.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    /// New edge joining the two other neighbors of the smaller endpoint.
    pub d1: EdgeId,
    /// New edge joining the two other neighbors of the larger endpoint.
    pub d2: EdgeId,
    /// Old vertex id -> new vertex id (`None` for the two deleted endpoints).
    pub vertex_map: Vec<Option<usize>>,
    pub removed: (usize, usize),
}

impl Contraction {
    /// The edge of `G_e` corresponding to an edge of the source graph that
    /// avoids both removed endpoints.
    pub fn map_edge(&self, source: &Graph, e: EdgeId) -> Option<EdgeId> {
        let (a, b) = source.edge(e);
        self.graph
            .edge_between(self.vertex_map[a]?, self.vertex_map[b]?)
    }
}

pub fn contract_removed_edge(g: &Graph, e: EdgeId) -> Result<Contraction> {
    let (u, v) = g.check_edge(e)?;
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if girth(g).is_some_and(|len| len < 4) {
        return Err(Error::hypothesis("girth must be at least 4"));
    }
    // A single edge separating two cyclic parts violates cyclic 2-edge-connectivity.
    // Graphs without two disjoint cycles pass vacuously.
    if find_cyclic_cut(g, 1).is_some() {
        return Err(Error::hypothesis("graph must be cyclically 2-edge-connected"));
    }
    let t: Vec<usize> = g.neighbors(u).filter(|&x| x != v).collect();
    let w: Vec<usize> = g.neighbors(v).filter(|&x| x != u).collect();
    let del = g.delete_vertices(&[u, v])?;
    let map = |x: usize| del.vertex_map[x].expect("neighbor of a removed vertex survives");
    let (t1, t2) = (map(t[0]), map(t[1]));
    let (w1, w2) = (map(w[0]), map(w[1]));
    let graph = del.graph.with_edges(&[(t1, t2), (w1, w2)])?;
    let d1 = graph.require_edge(t1, t2)?;
    let d2 = graph.require_edge(w1, w2)?;
    Ok(Contraction {
        graph,
        d1,
        d2,
        vertex_map: del.vertex_map,
        removed: (u, v),
    })
}
