use std::collections::HashMap;

use super::{certify_snark, TheoremReport};
use crate::color::{
    are_orthogonal, color_pair_counts, count_decompositions, kaszonyi_sum_check, psi_with,
    ColoringSearch, PsiMode,
};
use crate::construct::{pentagon_join, remove_pentagon, superpose_52, Built};
use crate::error::{Error, Result};
use crate::graph::{
    contract_removed_edge, edge_orbits, encode_graph6, is_hamiltonian, list_pentagons, Cycle,
    EdgeId, Graph,
};

/// Graphs up to this many edges get every eligible edge checked; larger ones
/// one edge per automorphism orbit.
const ALL_EDGES_LIMIT: usize = 60;

fn psi_of(g: &Graph, e: EdgeId) -> Result<u64> {
    psi_with(g, e, PsiMode::Asserted, None).map(|p| p.value)
}

fn certify_into(report: &mut TheoremReport, label: &str, g: &Graph) -> Result<bool> {
    let cert = certify_snark(g, 4)?;
    Ok(report.check_true(format!("{label} is a snark ({})", cert.summary()), cert.passes()))
}

fn describe(g: &Graph) -> String {
    format!("(g6 \"{}\")", encode_graph6(g))
}

/// Number of 3-edge-decompositions in which `same` holds, counted over the
/// colorings with colors fixed at the first trivalent vertex.
fn count_classes(h: &Graph, same: impl Fn(&[crate::color::Color]) -> bool) -> Result<u64> {
    let v = h.first_trivalent().ok_or(Error::NoTrivalentVertex)?;
    let mut n = 0u64;
    ColoringSearch::new(h)?.fix_vertex(v)?.for_each(|c| {
        if same(c) {
            n += 1;
        }
    })?;
    Ok(n)
}

/// `|ED(G_e)| = 3L`, `L` decompositions with `d1 ~ d2`, all nine color-pair
/// counts `2L`, and `d1` orthogonal to `d2` when `G_e` is colorable.
pub fn verify_thm_3_3(g: &Graph, e: EdgeId) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("3.3", format!("{} e={e}", describe(g)));
    certify_into(&mut r, "G", g)?;
    let ge = contract_removed_edge(g, e)?;
    let h = &ge.graph;
    let ed = count_decompositions(h)?;
    let l = ed / 3;
    r.record("L", l);
    r.check("|ED(G_e)| = 3L", ed, 3 * l);
    let same = count_classes(h, |c| c[ge.d1.0] == c[ge.d2.0])?;
    r.check("#{d1 ~ d2} = L", same, l);
    let table = color_pair_counts(h, ge.d1, ge.d2)?;
    for (x, row) in table.iter().enumerate() {
        for (y, &n) in row.iter().enumerate() {
            let (cx, cy) = (crate::color::Color::ALL[x], crate::color::Color::ALL[y]);
            r.check(format!("#{{d1={cx}, d2={cy}}} = 2L"), n, 2 * l);
        }
    }
    if ed > 0 {
        r.check_true("d1 orthogonal to d2", are_orthogonal(h, ge.d1, ge.d2)?);
    }
    Ok(r)
}

/// The even-cycle-cover identity for `(G_e, d1, d2)` and the implication
/// "`G_e` not Hamiltonian implies psi even".
pub fn verify_thm_3_7(g: &Graph, e: EdgeId) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("3.7", format!("{} e={e}", describe(g)));
    certify_into(&mut r, "G", g)?;
    let ge = contract_removed_edge(g, e)?;
    let h = &ge.graph;
    let ed = count_decompositions(h)?;
    let psi = ed / 3;
    r.record("psi", psi);
    let hamiltonian = is_hamiltonian(h);
    r.record("G_e hamiltonian", hamiltonian as u64);
    if ed > 0 {
        let sum = kaszonyi_sum_check(h, ge.d1, ge.d2)?;
        r.record("covers", sum.covers.len() as u64);
        r.record("sum 2^N", sum.weight_sum);
        r.check("|ED(G_e)| = (3/2) sum 2^N", sum.lhs, sum.rhs);
    }
    if !hamiltonian {
        r.check("psi mod 2 (not hamiltonian)", psi % 2, 0);
    }
    Ok(r)
}

/// For a pentagon `p`: psi equal on the edges of `p` and of the connected
/// union of pentagons containing it, `|ED(G - E(p))| = 5 psi`, and each of
/// the five class counts `#{eps_{k-2} ~ eps_k ~ eps_{k+2}} = psi`.
pub fn verify_thm_4_5(g: &Graph, p: &Cycle) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(
        "4.5",
        format!("{} pentagon={:?}", describe(g), p.vertices()),
    );
    certify_into(&mut r, "G", g)?;
    let removal = remove_pentagon(g, p)?;
    let p_edges = p.edges(g);
    let psi0 = psi_of(g, p_edges[0])?;
    r.record("psi", psi0);
    for &f in &p_edges[1..] {
        r.check(format!("psi(e{f}) = psi(e{})", p_edges[0]), psi_of(g, f)?, psi0);
    }
    let union = pentagon_union_containing(g, p);
    r.record("pentagon union edges", union.len() as u64);
    for f in union.into_iter().filter(|f| !p_edges.contains(f)) {
        r.check(format!("union psi(e{f}) = psi"), psi_of(g, f)?, psi0);
    }
    let h = &removal.graph;
    r.check("|ED(G - E(P))| = 5 psi", count_decompositions(h)?, 5 * psi0);
    let eps = removal.pendant;
    for k in 0..5 {
        let (a, b, c) = (eps[(k + 3) % 5].0, eps[k].0, eps[(k + 2) % 5].0);
        let n = count_classes(h, |col| col[a] == col[b] && col[b] == col[c])?;
        r.check(format!("#{{eps{} ~ eps{k} ~ eps{}}} = psi", (k + 3) % 5, (k + 2) % 5), n, psi0);
    }
    Ok(r)
}

/// Edges of the connected component, within the union of all pentagons of
/// `g`, that contains `p`.
fn pentagon_union_containing(g: &Graph, p: &Cycle) -> Vec<EdgeId> {
    let pentagons = list_pentagons(g);
    let mut in_union = vec![false; g.size()];
    for q in &pentagons {
        q.edges(g).into_iter().for_each(|e| in_union[e.0] = true);
    }
    let mut seen = vec![false; g.order()];
    let mut stack: Vec<usize> = p.vertices().to_vec();
    stack.iter().for_each(|&v| seen[v] = true);
    let mut edges = Vec::new();
    while let Some(v) = stack.pop() {
        for &(w, e) in g.incident(v) {
            if !in_union[e.0] {
                continue;
            }
            if !edges.contains(&e) {
                edges.push(e);
            }
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// Candidates to test: all of them on small graphs, otherwise the least
/// candidate of each automorphism orbit that has one.
fn select_edges(g: &Graph, candidates: Vec<(EdgeId, EdgeId)>) -> Vec<(EdgeId, EdgeId)> {
    if g.size() <= ALL_EDGES_LIMIT {
        return candidates;
    }
    let orbits = edge_orbits(g);
    let mut orbit_of = vec![0; g.size()];
    for (i, orbit) in orbits.iter().enumerate() {
        orbit.iter().for_each(|e| orbit_of[e.0] = i);
    }
    let mut taken = vec![false; orbits.len()];
    let mut sorted = candidates;
    sorted.sort_by_key(|&(_, res)| res);
    sorted
        .into_iter()
        .filter(|&(_, res)| !std::mem::replace(&mut taken[orbit_of[res.0]], true))
        .collect()
}

struct PsiCache<'g> {
    g: &'g Graph,
    values: HashMap<EdgeId, u64>,
}

impl<'g> PsiCache<'g> {
    fn new(g: &'g Graph) -> Self {
        PsiCache {
            g,
            values: HashMap::new(),
        }
    }

    fn get(&mut self, e: EdgeId) -> Result<u64> {
        if let Some(&v) = self.values.get(&e) {
            return Ok(v);
        }
        let v = psi_of(self.g, e)?;
        self.values.insert(e, v);
        Ok(v)
    }
}

fn product(factors: &[u64]) -> Result<u64> {
    factors
        .iter()
        .try_fold(1u64, |acc, &f| acc.checked_mul(f).ok_or(Error::Overflow))
}

/// Pentagon join `G` of `(left, left_pentagon)` and `(right, right_pentagon)`:
/// `psi(G, e) = psi(right, e) * psi(left, P')` on the right block and
/// `psi(G, e) = psi(left, e) * psi(right, P*)` on the left block. The five
/// connecting edges are only recorded.
pub fn verify_thm_4_8(
    left: &Graph,
    left_pentagon: &Cycle,
    right: &Graph,
    right_pentagon: &Cycle,
    rotation: usize,
) -> Result<TheoremReport> {
    let built = pentagon_join(left, left_pentagon, right, right_pentagon, rotation)?;
    let mut r = TheoremReport::new(
        "4.8",
        format!(
            "(join {} pentagon={:?} {} pentagon={:?} r={rotation})",
            describe(left),
            left_pentagon.vertices(),
            describe(right),
            right_pentagon.vertices()
        ),
    );
    certify_into(&mut r, "G'", left)?;
    certify_into(&mut r, "G*", right)?;
    certify_into(&mut r, "G", &built.graph)?;
    let psi_left_p = psi_of(left, left_pentagon.edges(left)[0])?;
    let psi_right_p = psi_of(right, right_pentagon.edges(right)[0])?;
    r.record("psi(G', P')", psi_left_p);
    r.record("psi(G*, P*)", psi_right_p);
    check_blocks(&mut r, &built, left, psi_right_p, right, psi_left_p)?;
    for &e in &built.connecting {
        r.record(format!("psi(G, connecting e{e})"), psi_of(&built.graph, e)?);
    }
    Ok(r)
}

/// Checks `psi(G, e) = psi(source, e) * factor` on both kept blocks, where
/// the factor is the other input's pentagon number.
fn check_blocks(
    r: &mut TheoremReport,
    built: &Built,
    left: &Graph,
    left_factor: u64,
    right: &Graph,
    right_factor: u64,
) -> Result<()> {
    let g = &built.graph;
    let mut right_cache = PsiCache::new(right);
    for (src, res) in select_edges(g, built.right_block(right)) {
        let rhs = product(&[right_cache.get(src)?, right_factor])?;
        r.check(format!("psi(G, e{res}) = psi(G*, e{src}) psi(G', P')"), psi_of(g, res)?, rhs);
    }
    let mut left_cache = PsiCache::new(left);
    for (src, res) in select_edges(g, built.left_block(left)) {
        let rhs = product(&[left_cache.get(src)?, left_factor])?;
        r.check(format!("psi(G, e{res}) = psi(G', e{src}) psi(G*, P*)"), psi_of(g, res)?, rhs);
    }
    Ok(())
}

/// Superposition `G` of `right` into the edge `edge` of `left` at `u`, `v`:
/// `psi(G, e) = 2 psi(right, e) psi(left, E)` for every edge of the right
/// block, including edges next to the split vertices.
pub fn verify_thm_5_3(
    left: &Graph,
    edge: EdgeId,
    right: &Graph,
    u: usize,
    v: usize,
) -> Result<TheoremReport> {
    let built = superpose_52(left, edge, right, u, v)?;
    let mut r = TheoremReport::new(
        "5.3",
        format!(
            "(superpose52 {} e={edge} {} u={u} v={v})",
            describe(left),
            describe(right)
        ),
    );
    certify_into(&mut r, "G'", left)?;
    certify_into(&mut r, "G*", right)?;
    certify_into(&mut r, "G", &built.graph)?;
    let psi_e = psi_of(left, edge)?;
    r.record("psi(G', E)", psi_e);
    let g = &built.graph;
    let mut cache = PsiCache::new(right);
    for (src, res) in select_edges(g, built.right_block(right)) {
        let rhs = product(&[2, cache.get(src)?, psi_e])?;
        r.check(format!("psi(G, e{res}) = 2 psi(G*, e{src}) psi(G', E)"), psi_of(g, res)?, rhs);
    }
    Ok(r)
}
