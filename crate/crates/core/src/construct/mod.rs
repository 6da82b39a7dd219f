//! Named graphs and the surgeries that build larger snarks from smaller ones.
//!
//! Two-input surgeries return a [`Built`]. Its vertices are numbered in
//! blocks: surviving vertices of the left input in their original relative
//! order, then surviving vertices of the right input, then any new
//! vertices. The left input is the graph whose pentagon or edge is cut
//! open (`G'`), the right input is the one spliced in (`G*`).

mod recipe;

pub use recipe::{parse_recipe, Parts, Recipe};

use crate::error::{Error, Result};
use crate::graph::{Cycle, EdgeId, Graph};

/// The Petersen graph with outer vertices `u_i = 2i`, inner vertices
/// `v_i = 2i + 1` and edges `(u_i, u_{i+1})`, `(u_i, v_i)`, `(v_i, v_{i+2})`,
/// subscripts mod 5.
pub fn petersen() -> Graph {
    let u = |i: usize| 2 * (i % 5);
    let v = |i: usize| 2 * (i % 5) + 1;
    let edges = (0..5).flat_map(|i| [(u(i), u(i + 1)), (u(i), v(i)), (v(i), v(i + 2))]);
    Graph::new(10, edges).expect("Petersen edge list is simple")
}

/// The 8-vertex wheel: rim `t_0 .. t_7` with spokes joining opposite rim
/// vertices.
#[derive(Clone, Debug)]
pub struct Wheel {
    pub graph: Graph,
    /// `rim[i]` joins `t_i` and `t_{i+1}`.
    pub rim: [EdgeId; 8],
    /// `spokes[i]` joins `t_i` and `t_{i+4}`.
    pub spokes: [EdgeId; 4],
}

pub fn wheel_w8() -> Wheel {
    let rim_pairs: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    let spoke_pairs: Vec<(usize, usize)> = (0..4).map(|i| (i, i + 4)).collect();
    let graph = Graph::new(8, rim_pairs.iter().chain(&spoke_pairs).copied())
        .expect("wheel edge list is simple");
    let id = |&(a, b): &(usize, usize)| graph.edge_between(a, b).expect("listed edge");
    let rim = std::array::from_fn(|i| id(&rim_pairs[i]));
    let spokes = std::array::from_fn(|i| id(&spoke_pairs[i]));
    Wheel { graph, rim, spokes }
}

/// Vertex ids of the flower snark `J_n`: `t_k = k`, `u_k = n + k`,
/// `v_k = 2n + k`, `w_k = 3n + k`.
pub fn flower(n: usize) -> Result<Graph> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::hypothesis(format!(
            "flower snarks need an odd n >= 5, got {n}"
        )));
    }
    let t = |k: usize| k % n;
    let u = |k: usize| n + k % n;
    let v = |k: usize| 2 * n + k % n;
    let w = |k: usize| 3 * n + k % n;
    let edges = (0..n).flat_map(|k| {
        [
            (t(k), t(k + 1)),
            (u(k), v(k + 1)),
            (v(k), u(k + 1)),
            (w(k), t(k)),
            (w(k), u(k)),
            (w(k), v(k)),
        ]
    });
    Graph::new(4 * n, edges)
}

fn require_cubic(g: &Graph) -> Result<()> {
    if g.is_cubic() {
        Ok(())
    } else {
        Err(Error::NotCubic)
    }
}

fn require_pentagon(g: &Graph, p: &Cycle) -> Result<()> {
    if p.len() != 5 {
        return Err(Error::NotACycle(5));
    }
    Cycle::new(g, p.vertices()).map(|_| ())
}

/// `g` with a pentagon's edges deleted. Vertex ids are unchanged.
#[derive(Clone, Debug)]
pub struct PentagonRemoval {
    pub graph: Graph,
    pub pentagon: Cycle,
    /// `pendant[i]` is the remaining edge at pentagon vertex `i`.
    pub pendant: [EdgeId; 5],
}

pub fn remove_pentagon(g: &Graph, p: &Cycle) -> Result<PentagonRemoval> {
    require_cubic(g)?;
    require_pentagon(g, p)?;
    let graph = g.delete_edges(&p.edges(g))?;
    let pendant = std::array::from_fn(|i| {
        let v = p.vertices()[i];
        graph.incident(v)[0].1
    });
    Ok(PentagonRemoval {
        graph,
        pentagon: p.clone(),
        pendant,
    })
}

/// Output of a two-graph surgery with the vertex correspondences needed to
/// name edges of either input inside the result.
#[derive(Clone, Debug)]
pub struct Built {
    pub graph: Graph,
    /// Left input vertex -> result vertex.
    pub left_vertices: Vec<Option<usize>>,
    /// Right input vertex -> result vertex.
    pub right_vertices: Vec<Option<usize>>,
    /// Edges of the result that belong to neither input.
    pub connecting: Vec<EdgeId>,
}

impl Built {
    fn map(&self, map: &[Option<usize>], source: &Graph, e: EdgeId) -> Option<EdgeId> {
        let (a, b) = source.edge(e);
        self.graph.edge_between(map[a]?, map[b]?)
    }

    /// The result edge corresponding to an edge of the left input, when both
    /// its ends survive.
    pub fn left_edge(&self, left: &Graph, e: EdgeId) -> Option<EdgeId> {
        self.map(&self.left_vertices, left, e)
    }

    pub fn right_edge(&self, right: &Graph, e: EdgeId) -> Option<EdgeId> {
        self.map(&self.right_vertices, right, e)
    }

    /// Pairs `(input edge, result edge)` for every surviving left edge.
    pub fn left_block(&self, left: &Graph) -> Vec<(EdgeId, EdgeId)> {
        left.edge_ids()
            .filter_map(|e| Some((e, self.left_edge(left, e)?)))
            .collect()
    }

    pub fn right_block(&self, right: &Graph) -> Vec<(EdgeId, EdgeId)> {
        right
            .edge_ids()
            .filter_map(|e| Some((e, self.right_edge(right, e)?)))
            .collect()
    }
}

/// A new-edge endpoint in input coordinates.
#[derive(Clone, Copy, Debug)]
enum End {
    Left(usize),
    Right(usize),
    New(usize),
}

/// The two inputs minus the listed vertices, plus `extra` new vertices and
/// the new edges.
fn assemble(
    left: &Graph,
    drop_left: &[usize],
    right: &Graph,
    drop_right: &[usize],
    extra: usize,
    new_edges: &[(End, End)],
) -> Result<Built> {
    let number = |g: &Graph, drop: &[usize], base: usize| {
        let mut next = base;
        let map: Vec<Option<usize>> = (0..g.order())
            .map(|v| {
                if drop.contains(&v) {
                    None
                } else {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect();
        (map, next)
    };
    let (left_vertices, after_left) = number(left, drop_left, 0);
    let (right_vertices, after_right) = number(right, drop_right, after_left);
    let order = after_right + extra;
    let resolve = |end: End| -> Result<usize> {
        let v = match end {
            End::Left(v) => left_vertices[v],
            End::Right(v) => right_vertices[v],
            End::New(i) => Some(after_right + i),
        };
        v.ok_or_else(|| Error::hypothesis("new edge touches a deleted vertex"))
    };
    let kept = |g: &Graph, map: &[Option<usize>]| -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .filter_map(|&(a, b)| Some((map[a]?, map[b]?)))
            .collect()
    };
    let mut edges = kept(left, &left_vertices);
    edges.extend(kept(right, &right_vertices));
    let mut added = Vec::with_capacity(new_edges.len());
    for &(a, b) in new_edges {
        added.push((resolve(a)?, resolve(b)?));
    }
    edges.extend(added.iter().copied());
    let graph = Graph::new(order, edges)?;
    let connecting = added
        .iter()
        .map(|&(a, b)| graph.require_edge(a, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(Built {
        graph,
        left_vertices,
        right_vertices,
        connecting,
    })
}

/// The neighbor of pentagon vertex `p_k` outside the pentagon.
fn outer_neighbors(g: &Graph, p: &Cycle) -> Result<[usize; 5]> {
    let vs = p.vertices();
    let outer: Vec<usize> = vs
        .iter()
        .map(|&x| {
            g.neighbors(x)
                .find(|y| !vs.contains(y))
                .ok_or_else(|| Error::hypothesis("pentagon vertex has no outside neighbor"))
        })
        .collect::<Result<_>>()?;
    let mut distinct = outer.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != 5 {
        return Err(Error::hypothesis(
            "outside neighbors of the pentagon must be distinct",
        ));
    }
    Ok(outer.try_into().expect("five entries"))
}

/// Five-edge connection of two cubic graphs through a pentagon of each:
/// both pentagons' vertices are deleted, and `t_k` (outer neighbor of the
/// left pentagon's `k`-th vertex) is joined to `w_{2k + rotation}` (outer
/// neighbor of the right pentagon's vertex `2k + rotation`, mod 5).
/// `connecting[k]` is the edge leaving `t_k`.
pub fn pentagon_join(
    left: &Graph,
    left_pentagon: &Cycle,
    right: &Graph,
    right_pentagon: &Cycle,
    rotation: usize,
) -> Result<Built> {
    require_cubic(left)?;
    require_cubic(right)?;
    require_pentagon(left, left_pentagon)?;
    require_pentagon(right, right_pentagon)?;
    let t = outer_neighbors(left, left_pentagon)?;
    let w = outer_neighbors(right, right_pentagon)?;
    let links: Vec<(End, End)> = (0..5)
        .map(|k| (End::Left(t[k]), End::Right(w[(2 * k + rotation) % 5])))
        .collect();
    assemble(
        left,
        left_pentagon.vertices(),
        right,
        right_pentagon.vertices(),
        0,
        &links,
    )
}

fn other_neighbors(g: &Graph, x: usize, skip: Option<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = g.neighbors(x).filter(|&y| Some(y) != skip).collect();
    out.sort_unstable();
    out
}

/// Replaces the edge `E = (U, V)` of `left` by `right` split open at the
/// nonadjacent vertices `u`, `v`.
///
/// `T_{-2} < T_2` are the other neighbors of `U` (`U < V`), `W_{-2} < W_2`
/// those of `V`; `u_{-1} < u_0 < u_1` are the neighbors of `u` and likewise
/// for `v`. The six new vertices are numbered `T_{-1}, T_0, T_1, W_{-1},
/// W_0, W_1` after both blocks, and the fourteen new edges are the paths
/// `T_{-2} .. T_2`, `W_{-2} .. W_2` and the rungs `(T_i, u_i)`,
/// `(v_i, W_i)`. A neighbor shared by `u` and `v` receives one rung from
/// each side.
pub fn superpose_52(left: &Graph, edge: EdgeId, right: &Graph, u: usize, v: usize) -> Result<Built> {
    require_cubic(left)?;
    require_cubic(right)?;
    let (big_u, big_v) = left.check_edge(edge)?;
    right.check_vertex(u)?;
    right.check_vertex(v)?;
    if u == v || right.has_edge(u, v) {
        return Err(Error::hypothesis(format!(
            "u = {u} and v = {v} must be distinct and nonadjacent"
        )));
    }
    let t_ends = other_neighbors(left, big_u, Some(big_v));
    let w_ends = other_neighbors(left, big_v, Some(big_u));
    let us = other_neighbors(right, u, None);
    let vs = other_neighbors(right, v, None);
    // new vertex slots: T_{-1}, T_0, T_1 = 0, 1, 2 and W_{-1}, W_0, W_1 = 3, 4, 5
    let t_path = [
        End::Left(t_ends[0]),
        End::New(0),
        End::New(1),
        End::New(2),
        End::Left(t_ends[1]),
    ];
    let w_path = [
        End::Left(w_ends[0]),
        End::New(3),
        End::New(4),
        End::New(5),
        End::Left(w_ends[1]),
    ];
    let mut links = Vec::with_capacity(14);
    for path in [t_path, w_path] {
        links.extend(path.windows(2).map(|p| (p[0], p[1])));
    }
    for i in 0..3 {
        links.push((End::New(i), End::Right(us[i])));
        links.push((End::Right(vs[i]), End::New(3 + i)));
    }
    assemble(left, &[big_u, big_v], right, &[u, v], 6, &links)
}

/// Four-edge connection: delete the nonadjacent edges `e1 = (a, b)` and
/// `e2 = (c, d)` from `left` and the adjacent vertices `x`, `y` from
/// `right`, then add `(a, x1)`, `(b, x2)`, `(c, y1)`, `(d, y2)` where
/// `x1 < x2` are the other neighbors of `x` and `y1 < y2` those of `y`.
/// `swap` wires `(c, y2)`, `(d, y1)` instead.
pub fn dot_product(
    left: &Graph,
    e1: EdgeId,
    e2: EdgeId,
    right: &Graph,
    x: usize,
    y: usize,
    swap: bool,
) -> Result<Built> {
    require_cubic(left)?;
    require_cubic(right)?;
    let (a, b) = left.check_edge(e1)?;
    let (c, d) = left.check_edge(e2)?;
    if e1 == e2 || left.adjacent_edges(e1, e2) {
        return Err(Error::hypothesis("e1 and e2 must be distinct nonadjacent edges"));
    }
    right.check_vertex(x)?;
    right.check_vertex(y)?;
    if !right.has_edge(x, y) {
        return Err(Error::NotAnEdge(x, y));
    }
    let xs = other_neighbors(right, x, Some(y));
    let ys = other_neighbors(right, y, Some(x));
    let (y1, y2) = if swap { (ys[1], ys[0]) } else { (ys[0], ys[1]) };
    let links = [
        (End::Left(a), End::Right(xs[0])),
        (End::Left(b), End::Right(xs[1])),
        (End::Left(c), End::Right(y1)),
        (End::Left(d), End::Right(y2)),
    ];
    let trimmed = left.delete_edges(&[e1, e2])?;
    assemble(&trimmed, &[], right, &[x, y], 0, &links)
}
