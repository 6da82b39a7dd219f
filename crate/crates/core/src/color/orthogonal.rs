use super::{kempe_chain, kempe_chain_two_colors, Color, ColoringSearch, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Cycle, EdgeId, Graph};

fn require_cubic(h: &Graph) -> Result<()> {
    if h.is_cubic() {
        Ok(())
    } else {
        Err(Error::NotCubic)
    }
}

/// Whether `d1` and `d2` lie on one two-colored Kempe cycle of `coloring`.
/// With equal colors `x` this asks about both `xy` chains through `d1`.
pub fn co_cyclic(coloring: &EdgeColoring<'_>, d1: EdgeId, d2: EdgeId) -> Result<bool> {
    let (x, y) = (coloring.color(d1), coloring.color(d2));
    if x != y {
        return Ok(kempe_chain_two_colors(coloring, x, y, d1)?.contains(d2));
    }
    for other in Color::ALL.into_iter().filter(|&c| c != x) {
        if kempe_chain(coloring, d1, other)?.contains(d2) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True when no coloring of the cubic graph `h` puts `d1` and `d2` on a
/// common Kempe cycle. Colorings are enumerated up to renaming colors,
/// which does not change chains.
pub fn are_orthogonal(h: &Graph, d1: EdgeId, d2: EdgeId) -> Result<bool> {
    require_cubic(h)?;
    h.check_edge(d1)?;
    h.check_edge(d2)?;
    if d1 == d2 {
        return Err(Error::hypothesis("orthogonality needs two distinct edges"));
    }
    let v = h.first_trivalent().ok_or(Error::NoTrivalentVertex)?;
    let mut any = false;
    for coloring in ColoringSearch::new(h)?.fix_vertex(v)?.iter() {
        any = true;
        if co_cyclic(&coloring?, d1, d2)? {
            return Ok(false);
        }
    }
    if any {
        Ok(true)
    } else {
        Err(Error::Uncolorable)
    }
}

/// Entry `[x][y]` counts colorings with `d1` colored `x` and `d2` colored `y`.
pub fn color_pair_counts(h: &Graph, d1: EdgeId, d2: EdgeId) -> Result<[[u64; 3]; 3]> {
    let mut table = [[0u64; 3]; 3];
    for x in Color::ALL {
        for y in Color::ALL {
            table[x.index()][y.index()] = ColoringSearch::new(h)?.fix(d1, x)?.fix(d2, y)?.count()?;
        }
    }
    Ok(table)
}

/// A spanning union of disjoint even cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenCover {
    pub cycles: Vec<Cycle>,
}

impl EvenCover {
    pub fn n_cycles(&self) -> usize {
        self.cycles.len()
    }
}

struct CoverSearch<'a> {
    h: &'a Graph,
    banned: [EdgeId; 2],
    covered: Vec<bool>,
    path: Vec<usize>,
    cycles: Vec<Cycle>,
    out: Vec<EvenCover>,
}

impl CoverSearch<'_> {
    fn allowed(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.h
            .incident(v)
            .iter()
            .filter(|(_, e)| !self.banned.contains(e))
            .map(|&(w, _)| w)
    }

    fn start(&mut self) {
        let Some(s) = self.covered.iter().position(|&c| !c) else {
            self.out.push(EvenCover {
                cycles: self.cycles.clone(),
            });
            return;
        };
        self.covered[s] = true;
        self.path.push(s);
        self.grow();
        self.path.pop();
        self.covered[s] = false;
    }

    /// Uncovered neighbors of the new path end must keep two usable edges.
    fn viable(&self, end: usize) -> bool {
        let s = self.path[0];
        self.allowed(end).all(|x| {
            self.covered[x] || self.allowed(x).filter(|&y| !self.covered[y] || y == s || y == end).count() >= 2
        })
    }

    fn grow(&mut self) {
        let s = self.path[0];
        let last = *self.path.last().expect("path is never empty while growing");
        let next: Vec<usize> = self.allowed(last).collect();
        for w in next {
            if w == s {
                let len = self.path.len();
                if len >= 4 && len % 2 == 0 && self.path[1] < last {
                    self.cycles.push(Cycle::normalized(&self.path));
                    let saved = std::mem::take(&mut self.path);
                    self.start();
                    self.path = saved;
                    self.cycles.pop();
                }
            } else if !self.covered[w] {
                self.covered[w] = true;
                self.path.push(w);
                if self.viable(w) {
                    self.grow();
                }
                self.path.pop();
                self.covered[w] = false;
            }
        }
    }
}

/// Every spanning subgraph of `h` made of disjoint even cycles and avoiding
/// `d1` and `d2`. Search grows one cycle at a time from the least uncovered
/// vertex; parity is checked when a cycle closes.
pub fn even_cycle_covers(h: &Graph, d1: EdgeId, d2: EdgeId) -> Result<Vec<EvenCover>> {
    require_cubic(h)?;
    h.check_edge(d1)?;
    h.check_edge(d2)?;
    let mut search = CoverSearch {
        h,
        banned: [d1, d2],
        covered: vec![false; h.order()],
        path: Vec::new(),
        cycles: Vec::new(),
        out: Vec::new(),
    };
    search.start();
    Ok(search.out)
}

/// Both sides of the even-cycle-cover identity for an orthogonal pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KaszonyiSum {
    /// `|ED(h)|` by direct count.
    pub lhs: u64,
    /// `(3/2) * sum of 2^N` over the covers.
    pub rhs: u64,
    pub weight_sum: u64,
    pub covers: Vec<EvenCover>,
    pub equal: bool,
}

pub fn kaszonyi_sum_check(h: &Graph, d1: EdgeId, d2: EdgeId) -> Result<KaszonyiSum> {
    if !are_orthogonal(h, d1, d2)? {
        return Err(Error::NotOrthogonal(d1.0, d2.0));
    }
    let lhs = super::count_decompositions(h)?;
    let covers = even_cycle_covers(h, d1, d2)?;
    let mut weight_sum = 0u64;
    for c in &covers {
        let w = 1u64.checked_shl(c.n_cycles() as u32).ok_or(Error::Overflow)?;
        weight_sum = weight_sum.checked_add(w).ok_or(Error::Overflow)?;
    }
    // every cover has at least one cycle, so the sum is even
    let rhs = weight_sum.checked_mul(3).ok_or(Error::Overflow)? / 2;
    Ok(KaszonyiSum {
        lhs,
        rhs,
        weight_sum,
        equal: lhs == rhs,
        covers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn cube() -> Graph {
        let mut edges = Vec::new();
        for v in 0..8usize {
            for bit in [1, 2, 4] {
                if v & bit == 0 {
                    edges.push((v, v | bit));
                }
            }
        }
        Graph::new(8, edges).unwrap()
    }

    #[test]
    fn k4_opposite_edges_share_a_cycle() {
        let g = k4();
        // (0,1) and (2,3) are opposite; the other two matchings form a 4-cycle through both
        assert!(!are_orthogonal(&g, EdgeId(0), EdgeId(5)).unwrap());
        assert!(!are_orthogonal(&g, EdgeId(0), EdgeId(1)).unwrap());
    }

    #[test]
    fn pair_table_sums_to_total() {
        let g = cube();
        let t = color_pair_counts(&g, EdgeId(0), EdgeId(1)).unwrap();
        let total: u64 = t.iter().flatten().sum();
        assert_eq!(total, super::super::count_colorings(&g).unwrap());
        for x in 0..3 {
            assert_eq!(t[x][x], 0);
        }
    }

    #[test]
    fn cube_covers_avoiding_a_matching_pair() {
        let g = cube();
        // (0,1) and (6,7) are parallel edges of the cube; removing them leaves
        // an 8-cycle plus the two edges between
        let d1 = g.require_edge(0, 1).unwrap();
        let d2 = g.require_edge(6, 7).unwrap();
        let covers = even_cycle_covers(&g, d1, d2).unwrap();
        assert!(covers.iter().all(|c| c
            .cycles
            .iter()
            .map(|cy| cy.len())
            .sum::<usize>()
            == 8));
        assert!(covers.iter().all(|c| c.cycles.iter().all(|cy| cy.len() % 2 == 0)));
    }

    #[test]
    fn uncolorable_rejected() {
        let g = k4();
        assert!(matches!(are_orthogonal(&g, EdgeId(0), EdgeId(0)), Err(Error::Hypothesis(_))));
    }
}
