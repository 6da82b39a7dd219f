use super::{Color, EdgeColoring, GroupElement};
use crate::error::{Error, Result};
use crate::graph::EdgeId;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainKind {
    /// A path; both ends are vertices with only one chain edge.
    Path { ends: (usize, usize) },
    Cycle,
}

/// A maximal connected subgraph whose edges carry exactly two colors.
/// Edges and vertices are listed in walking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempeChain {
    pub colors: (Color, Color),
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<usize>,
    pub kind: ChainKind,
}

impl KempeChain {
    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn is_cycle(&self) -> bool {
        self.kind == ChainKind::Cycle
    }
}

/// The edge at `v` with color `want`, other than `from`.
fn step(coloring: &EdgeColoring<'_>, v: usize, from: EdgeId, want: Color) -> Option<(usize, EdgeId)> {
    coloring
        .graph()
        .incident(v)
        .iter()
        .find(|&&(_, e)| e != from && coloring.color(e) == want)
        .copied()
}

/// Walks away from `start` through `v`, alternating colors. Stops at a dead
/// end or when `start` comes round again.
fn walk(
    coloring: &EdgeColoring<'_>,
    start: EdgeId,
    mut v: usize,
    x: Color,
    y: Color,
) -> (Vec<EdgeId>, Vec<usize>, bool) {
    let mut edges = Vec::new();
    let mut vertices = Vec::new();
    let mut prev = start;
    loop {
        let want = if coloring.color(prev) == x { y } else { x };
        match step(coloring, v, prev, want) {
            None => return (edges, vertices, false),
            Some((_, e)) if e == start => return (edges, vertices, true),
            Some((w, e)) => {
                edges.push(e);
                vertices.push(w);
                prev = e;
                v = w;
            }
        }
    }
}

/// The `xy`-Kempe chain through `seed`, which must be colored `x` or `y`.
pub fn kempe_chain_two_colors(
    coloring: &EdgeColoring<'_>,
    x: Color,
    y: Color,
    seed: EdgeId,
) -> Result<KempeChain> {
    let g = coloring.graph();
    g.check_edge(seed)?;
    let c = coloring.color(seed);
    if x == y || (c != x && c != y) {
        return Err(Error::WrongChainColor {
            edge: seed.0,
            x: x.letter(),
            y: y.letter(),
        });
    }
    let (a, b) = g.edge(seed);
    let (fwd_edges, fwd_vertices, closed) = walk(coloring, seed, b, x, y);
    if closed {
        let mut edges = vec![seed];
        edges.extend(fwd_edges);
        let mut vertices = vec![a, b];
        vertices.extend(fwd_vertices);
        // the walk ends back at `a`
        vertices.pop();
        return Ok(KempeChain {
            colors: (x, y),
            edges,
            vertices,
            kind: ChainKind::Cycle,
        });
    }
    let (back_edges, back_vertices, _) = walk(coloring, seed, a, x, y);
    let mut edges: Vec<EdgeId> = back_edges.into_iter().rev().collect();
    edges.push(seed);
    edges.extend(fwd_edges);
    let mut vertices: Vec<usize> = back_vertices.into_iter().rev().collect();
    vertices.push(a);
    vertices.push(b);
    vertices.extend(fwd_vertices);
    let ends = (vertices[0], *vertices.last().expect("path has vertices"));
    Ok(KempeChain {
        colors: (x, y),
        edges,
        vertices,
        kind: ChainKind::Path { ends },
    })
}

/// The chain through `e` using the color of `e` and `other`.
pub fn kempe_chain(coloring: &EdgeColoring<'_>, e: EdgeId, other: Color) -> Result<KempeChain> {
    coloring.graph().check_edge(e)?;
    kempe_chain_two_colors(coloring, coloring.color(e), other, e)
}

/// All `xy`-Kempe chains of a coloring, ordered by least edge.
pub fn kempe_chains(coloring: &EdgeColoring<'_>, x: Color, y: Color) -> Vec<KempeChain> {
    let g = coloring.graph();
    let mut taken = vec![false; g.size()];
    let mut out = Vec::new();
    for e in g.edge_ids() {
        let c = coloring.color(e);
        if taken[e.0] || (c != x && c != y) {
            continue;
        }
        let chain = kempe_chain_two_colors(coloring, x, y, e).expect("seed has a chain color");
        chain.edges.iter().for_each(|f| taken[f.0] = true);
        out.push(chain);
    }
    out
}

/// Interchanges the two chain colors along the chain.
pub fn kempe_swap<'g>(coloring: &EdgeColoring<'g>, chain: &KempeChain) -> Result<EdgeColoring<'g>> {
    let (x, y) = chain.colors;
    let seed = *chain.edges.first().ok_or(Error::StaleChain)?;
    match kempe_chain_two_colors(coloring, x, y, seed) {
        Ok(current) if same_edge_set(&current.edges, &chain.edges) => {}
        _ => return Err(Error::StaleChain),
    }
    let mut colors = coloring.colors().to_vec();
    for e in &chain.edges {
        colors[e.0] = if colors[e.0] == x { y } else { x };
    }
    Ok(EdgeColoring::new_unchecked(coloring.graph(), colors))
}

fn same_edge_set(a: &[EdgeId], b: &[EdgeId]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Group sum of the colors on edges with a univalent endpoint. Zero for
/// every proper coloring of a quasi-cubic graph.
pub fn parity_residual(coloring: &EdgeColoring<'_>) -> Result<GroupElement> {
    let g = coloring.graph();
    if g.is_cubic() {
        return Err(Error::IsCubic);
    }
    if !g.is_quasi_cubic() {
        return Err(Error::hypothesis("graph must be quasi-cubic"));
    }
    if g.first_trivalent().is_none() {
        return Err(Error::NoTrivalentVertex);
    }
    Ok(g.pendant_edges()
        .into_iter()
        .map(|e| coloring.color(e).element())
        .sum())
}
