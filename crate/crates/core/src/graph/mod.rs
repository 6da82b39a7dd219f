//! Immutable simple graphs and the surgeries the counting theorems need.
//!
//! Vertices are dense integers `0..order`. Edges are stored as sorted
//! `(u, v)` pairs with `u < v`, so an [`EdgeId`] is the position of an edge
//! in lexicographic order. Two graphs with the same vertex count and edge set
//! are therefore identical, including their edge numbering, which is what
//! lets a graph6 string reproduce the edge indices of a stored result.

mod cycles;
mod graph6;
mod iso;

pub use cycles::{
    contract_removed_edge, cyclically_edge_connected_at_least, find_cycles, girth,
    has_disjoint_cycles, is_hamiltonian, list_pentagons, Contraction,
};
pub use graph6::{decode_graph6, encode_graph6, to_dot};
pub use iso::{automorphisms, edge_orbits, find_isomorphism, is_isomorphic};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Position of an edge in a graph's sorted edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, EdgeId)>>,
}

impl Graph {
    /// Builds a simple graph, rejecting loops, repeated pairs and
    /// out-of-range endpoints. Edge orientation and order do not matter.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= order {
                    return Err(Error::UnknownVertex { vertex: v, order });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MultiEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); order];
        for (i, &(a, b)) in list.iter().enumerate() {
            adj[a].push((b, EdgeId(i)));
            adj[b].push((a, EdgeId(i)));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            order,
            edges: list,
            adj,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<(usize, usize)> {
        self.edges.get(e.0).copied().ok_or(Error::UnknownEdge {
            edge: e.0,
            size: self.edges.len(),
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::UnknownVertex {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// Incident `(neighbor, edge)` pairs of `v`, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn valence(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.order || v >= self.order {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn require_edge(&self, u: usize, v: usize) -> Result<EdgeId> {
        self.edge_between(u, v).ok_or(Error::NotAnEdge(u, v))
    }

    /// Whether two distinct edges share an endpoint.
    pub fn adjacent_edges(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edge(e);
        let (c, d) = self.edge(f);
        e != f && (a == c || a == d || b == c || b == d)
    }

    /// Map valence -> number of vertices with that valence.
    pub fn valence_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for v in 0..self.order {
            *profile.entry(self.valence(v)).or_insert(0) += 1;
        }
        profile
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.order).all(|v| self.valence(v) == 3)
    }

    pub fn is_quasi_cubic(&self) -> bool {
        (0..self.order).all(|v| matches!(self.valence(v), 1 | 3))
    }

    pub fn max_valence(&self) -> usize {
        (0..self.order).map(|v| self.valence(v)).max().unwrap_or(0)
    }

    pub fn first_trivalent(&self) -> Option<usize> {
        (0..self.order).find(|&v| self.valence(v) == 3)
    }

    /// Edges with a univalent endpoint, in edge order.
    pub fn pendant_edges(&self) -> Vec<EdgeId> {
        self.edge_ids()
            .filter(|&e| {
                let (a, b) = self.edge(e);
                self.valence(a) == 1 || self.valence(b) == 1
            })
            .collect()
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Removes the vertices in `q` and every edge touching them. Survivors
    /// keep their relative order; `vertex_map[old]` gives the new id.
    pub fn delete_vertices(&self, q: &[usize]) -> Result<VertexDeletion> {
        let mut doomed = vec![false; self.order];
        for &v in q {
            self.check_vertex(v)?;
            doomed[v] = true;
        }
        if doomed.iter().all(|&d| d) {
            return Err(Error::NotProperSubset);
        }
        let mut vertex_map = vec![None; self.order];
        let mut next = 0;
        for v in 0..self.order {
            if !doomed[v] {
                vertex_map[v] = Some(next);
                next += 1;
            }
        }
        let edges = self.edges.iter().filter_map(|&(a, b)| {
            Some((vertex_map[a]?, vertex_map[b]?))
        });
        let graph = Graph::new(next, edges)?;
        Ok(VertexDeletion { graph, vertex_map })
    }

    /// Removes the listed edges; every vertex keeps its id.
    pub fn delete_edges(&self, s: &[EdgeId]) -> Result<Graph> {
        let mut doomed = vec![false; self.size()];
        for &e in s {
            self.check_edge(e)?;
            doomed[e.0] = true;
        }
        let edges = self
            .edges
            .iter()
            .zip(&doomed)
            .filter(|(_, &d)| !d)
            .map(|(&e, _)| e);
        Graph::new(self.order, edges)
    }

    /// A copy with extra edges added.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        Graph::new(self.order, self.edges.iter().copied().chain(extra.iter().copied()))
    }
}

/// Result of [`Graph::delete_vertices`].
#[derive(Clone, Debug)]
pub struct VertexDeletion {
    pub graph: Graph,
    pub vertex_map: Vec<Option<usize>>,
}

/// A cycle of a host graph, stored in normalized form: it starts at its
/// least vertex and runs in the direction whose second vertex is smaller.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validates that consecutive vertices (with wraparound) are adjacent in
    /// `g` and that the vertices are distinct.
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<Cycle> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::NotACycle(n));
        }
        let mut seen = vertices.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != n {
            return Err(Error::NotACycle(n));
        }
        for i in 0..n {
            g.check_vertex(vertices[i])?;
            if !g.has_edge(vertices[i], vertices[(i + 1) % n]) {
                return Err(Error::NotACycle(n));
            }
        }
        Ok(Cycle::normalized(vertices))
    }

    pub(crate) fn normalized(vertices: &[usize]) -> Cycle {
        let n = vertices.len();
        let start = (0..n).min_by_key(|&i| vertices[i]).unwrap_or(0);
        let fwd = vertices[(start + 1) % n];
        let back = vertices[(start + n - 1) % n];
        let out = if fwd <= back {
            (0..n).map(|k| vertices[(start + k) % n]).collect()
        } else {
            (0..n).map(|k| vertices[(start + n - k) % n]).collect()
        };
        Cycle { vertices: out }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edge `i` joins vertex `i` to vertex `i + 1` (mod length).
    pub fn edges(&self, g: &Graph) -> Vec<EdgeId> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                g.edge_between(self.vertices[i], self.vertices[(i + 1) % n])
                    .expect("cycle edge missing from host graph")
            })
            .collect()
    }
}
