//! Isomorphism and automorphism search by backtracking.
//!
//! Vertices are matched along a BFS order of the source graph. A candidate
//! image must agree with every already-matched vertex on pairwise distance
//! (which subsumes adjacency) and carry the same valence and distance
//! histogram. No canonical labeling is involved.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use super::{EdgeId, Graph};

const UNREACHABLE: u32 = u32::MAX;

struct Profile {
    dist: Vec<Vec<u32>>,
    invariant: Vec<Vec<u32>>,
}

impl Profile {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut dist = vec![vec![UNREACHABLE; n]; n];
        let mut queue = VecDeque::new();
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = 0;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for y in g.neighbors(x) {
                    if row[y] == UNREACHABLE {
                        row[y] = row[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        let invariant = (0..n)
            .map(|v| {
                let mut hist = vec![g.valence(v) as u32];
                let mut counts = vec![0u32; n + 1];
                for &d in &dist[v] {
                    counts[if d == UNREACHABLE { n } else { d as usize }] += 1;
                }
                hist.extend(counts);
                hist
            })
            .collect();
        Profile { dist, invariant }
    }
}

struct Matcher<'a> {
    h: &'a Graph,
    pg: &'a Profile,
    ph: &'a Profile,
    order: Vec<usize>,
    anchor: Vec<Option<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a Graph, h: &'a Graph, pg: &'a Profile, ph: &'a Profile, seeds: &[usize]) -> Self {
        let n = g.order();
        let mut order = Vec::with_capacity(n);
        let mut anchor = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let starts = seeds.iter().copied().chain(0..n).collect::<Vec<_>>();
        for s in starts {
            if placed[s] {
                continue;
            }
            placed[s] = true;
            order.push(s);
            anchor.push(None);
            let mut i = order.len() - 1;
            while i < order.len() {
                let x = order[i];
                i += 1;
                for y in g.neighbors(x) {
                    if !placed[y] {
                        placed[y] = true;
                        order.push(y);
                        anchor.push(Some(x));
                    }
                }
            }
        }
        // seeds are matched first, in the order given
        let mut o2 = Vec::with_capacity(n);
        let mut a2 = Vec::with_capacity(n);
        for &s in seeds {
            o2.push(s);
            a2.push(None);
        }
        for (x, a) in order.into_iter().zip(anchor) {
            if !seeds.contains(&x) {
                o2.push(x);
                a2.push(a);
            }
        }
        Matcher {
            h,
            pg,
            ph,
            order: o2,
            anchor: a2,
            map: vec![usize::MAX; n],
            used: vec![false; n],
        }
    }

    fn consistent(&self, depth: usize, x: usize, c: usize) -> bool {
        if self.used[c] || self.pg.invariant[x] != self.ph.invariant[c] {
            return false;
        }
        self.order[..depth]
            .iter()
            .all(|&y| self.pg.dist[x][y] == self.ph.dist[c][self.map[y]])
    }

    fn run<F>(&mut self, depth: usize, fixed: &[usize], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let x = self.order[depth];
        let candidates: Vec<usize> = if depth < fixed.len() {
            vec![fixed[depth]]
        } else if let Some(a) = self.anchor[depth] {
            self.h.neighbors(self.map[a]).collect()
        } else {
            (0..self.h.order()).collect()
        };
        for c in candidates {
            if !self.consistent(depth, x, c) {
                continue;
            }
            self.map[x] = c;
            self.used[c] = true;
            let flow = self.run(depth + 1, fixed, visit);
            self.used[c] = false;
            self.map[x] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

fn compatible(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut a: Vec<_> = (0..g.order()).map(|v| g.valence(v)).collect();
    let mut b: Vec<_> = (0..h.order()).map(|v| h.valence(v)).collect();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

fn search_with(
    g: &Graph,
    h: &Graph,
    pg: &Profile,
    ph: &Profile,
    seeds: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let sources: Vec<usize> = seeds.iter().map(|s| s.0).collect();
    let targets: Vec<usize> = seeds.iter().map(|s| s.1).collect();
    let mut m = Matcher::new(g, h, pg, ph, &sources);
    let mut found = None;
    let _ = m.run(0, &targets, &mut |map| {
        found = Some(map.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// A vertex bijection `g -> h` preserving adjacency, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if !compatible(g, h) {
        return None;
    }
    let (pg, ph) = (Profile::new(g), Profile::new(h));
    search_with(g, h, &pg, &ph, &[])
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Every automorphism of `g`, as vertex permutations. Only sensible for
/// graphs whose automorphism group is small enough to list.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let p = Profile::new(g);
    let mut m = Matcher::new(g, g, &p, &p, &[]);
    let mut out = Vec::new();
    let _ = m.run(0, &[], &mut |map| {
        out.push(map.to_vec());
        ControlFlow::Continue(())
    });
    out
}

fn find_root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Partition of the edges into automorphism orbits. Orbits are sorted
/// internally and listed by least member.
pub fn edge_orbits(g: &Graph) -> Vec<Vec<EdgeId>> {
    let m = g.size();
    let p = Profile::new(g);
    let mut parent: Vec<usize> = (0..m).collect();
    let edge_inv = |e: EdgeId| {
        let (a, b) = g.edge(e);
        let (x, y) = (&p.invariant[a], &p.invariant[b]);
        if x <= y {
            (x.clone(), y.clone())
        } else {
            (y.clone(), x.clone())
        }
    };
    let invariants: Vec<_> = g.edge_ids().map(edge_inv).collect();
    let mut reps: Vec<usize> = Vec::new();
    for f in 0..m {
        let mut merged = false;
        for &r in &reps {
            if find_root(&mut parent, r) == find_root(&mut parent, f) {
                merged = true;
                break;
            }
            if invariants[r] != invariants[f] {
                continue;
            }
            let (a, b) = g.edge(EdgeId(r));
            let (c, d) = g.edge(EdgeId(f));
            let sigma = search_with(g, g, &p, &p, &[(a, c), (b, d)])
                .or_else(|| search_with(g, g, &p, &p, &[(a, d), (b, c)]));
            if let Some(sigma) = sigma {
                for (i, &(x, y)) in g.edges().iter().enumerate() {
                    let j = g
                        .edge_between(sigma[x], sigma[y])
                        .expect("automorphism maps edges to edges")
                        .0;
                    let (ri, rj) = (find_root(&mut parent, i), find_root(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
                merged = true;
                break;
            }
        }
        if !merged {
            reps.push(f);
        }
    }
    let mut orbits: Vec<Vec<EdgeId>> = Vec::new();
    let mut slot = vec![usize::MAX; m];
    for e in 0..m {
        let r = find_root(&mut parent, e);
        if slot[r] == usize::MAX {
            slot[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[r]].push(EdgeId(e));
    }
    orbits
}
