use crate::color::{are_orthogonal, kempe_chains, Color, ColoringSearch, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{contract_removed_edge, cyclically_edge_connected_at_least, girth, EdgeId, Graph};

/// Condition K at `e`: `G_e` is colorable and its two new edges are
/// orthogonal. Colorability of `g` itself is not assumed.
pub fn condition_k(g: &Graph, e: EdgeId) -> Result<bool> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if girth(g).is_none_or(|len| len < 5) {
        return Err(Error::hypothesis("girth must be at least 5"));
    }
    if !cyclically_edge_connected_at_least(g, 4)? {
        return Err(Error::hypothesis("graph must be cyclically 4-edge-connected"));
    }
    let ge = contract_removed_edge(g, e)?;
    match are_orthogonal(&ge.graph, ge.d1, ge.d2) {
        Ok(orthogonal) => Ok(orthogonal),
        Err(Error::Uncolorable) => Ok(false),
        Err(other) => Err(other),
    }
}

/// Every unordered pair of orthogonal edges of a colorable cubic graph, in
/// lexicographic order. One pass over the colorings marks each pair that
/// shares a Kempe cycle; the unmarked pairs are orthogonal.
pub fn orthogonal_pairs(h: &Graph) -> Result<Vec<(EdgeId, EdgeId)>> {
    if !h.is_cubic() {
        return Err(Error::NotCubic);
    }
    let m = h.size();
    let mut co_cyclic = vec![false; m * m];
    let mut any = false;
    let pairs = [(Color::A, Color::B), (Color::A, Color::C), (Color::B, Color::C)];
    for coloring in ColoringSearch::new(h)?.fix_vertex(0)?.iter() {
        let coloring: EdgeColoring<'_> = coloring?;
        any = true;
        for (x, y) in pairs {
            for chain in kempe_chains(&coloring, x, y) {
                for &a in &chain.edges {
                    for &b in &chain.edges {
                        co_cyclic[a.0 * m + b.0] = true;
                    }
                }
            }
        }
    }
    if !any {
        return Err(Error::Uncolorable);
    }
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if !co_cyclic[a * m + b] {
                out.push((EdgeId(a), EdgeId(b)));
            }
        }
    }
    Ok(out)
}
