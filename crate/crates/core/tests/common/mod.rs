//! Reference implementations written against plain edge lists. They share
//! no code with the library's coloring kernel, contraction or cover search,
//! so agreement with the library is evidence rather than tautology.

#![allow(dead_code)]

use std::collections::VecDeque;

use snarkforge::Graph;

pub type Edges = Vec<(usize, usize)>;

pub fn edges_of(g: &Graph) -> Edges {
    g.edges().to_vec()
}

fn incidence(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        inc[u].push(i);
        inc[v].push(i);
    }
    inc
}

/// Edges in breadth-first discovery order, so that backtracking meets
/// conflicts early.
fn bfs_edge_order(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let inc = incidence(n, edges);
    let mut seen_v = vec![false; n];
    let mut seen_e = vec![false; edges.len()];
    let mut order = Vec::with_capacity(edges.len());
    for root in 0..n {
        if seen_v[root] {
            continue;
        }
        seen_v[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in &inc[v] {
                if !seen_e[e] {
                    seen_e[e] = true;
                    order.push(e);
                }
                let (a, b) = edges[e];
                let w = if a == v { b } else { a };
                if !seen_v[w] {
                    seen_v[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Calls `visit` with every proper edge-3-coloring (colors 0, 1, 2 indexed
/// by edge) of a graph with maximum valence 3.
pub fn for_each_coloring(n: usize, edges: &[(usize, usize)], mut visit: impl FnMut(&[u8])) {
    let order = bfs_edge_order(n, edges);
    let mut used = vec![0u8; n];
    let mut color = vec![0u8; edges.len()];
    fn go(
        k: usize,
        order: &[usize],
        edges: &[(usize, usize)],
        used: &mut [u8],
        color: &mut [u8],
        visit: &mut dyn FnMut(&[u8]),
    ) {
        if k == order.len() {
            visit(color);
            return;
        }
        let e = order[k];
        let (u, v) = edges[e];
        for c in 0..3u8 {
            let bit = 1 << c;
            if used[u] & bit != 0 || used[v] & bit != 0 {
                continue;
            }
            used[u] |= bit;
            used[v] |= bit;
            color[e] = c;
            go(k + 1, order, edges, used, color, visit);
            used[u] &= !bit;
            used[v] &= !bit;
        }
    }
    go(0, &order, edges, &mut used, &mut color, &mut visit);
}

pub fn count_colorings(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut total = 0;
    for_each_coloring(n, edges, |_| total += 1);
    total
}

pub fn colorings(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for_each_coloring(n, edges, |c| out.push(c.to_vec()));
    out
}

/// `|EC|` of a cubic graph as a sum over perfect matchings `M` of
/// `2^(cycles of E - M)`, counted only when every such cycle is even.
pub fn count_colorings_by_matchings(n: usize, edges: &[(usize, usize)]) -> u64 {
    let inc = incidence(n, edges);
    let mut in_m = vec![false; edges.len()];
    let mut matched = vec![false; n];
    let mut total = 0u64;
    fn go(
        inc: &[Vec<usize>],
        edges: &[(usize, usize)],
        in_m: &mut [bool],
        matched: &mut [bool],
        total: &mut u64,
    ) {
        let Some(v) = matched.iter().position(|&m| !m) else {
            *total += two_factor_weight(inc, edges, in_m);
            return;
        };
        matched[v] = true;
        for &e in &inc[v] {
            let (a, b) = edges[e];
            let w = if a == v { b } else { a };
            if matched[w] {
                continue;
            }
            matched[w] = true;
            in_m[e] = true;
            go(inc, edges, in_m, matched, total);
            in_m[e] = false;
            matched[w] = false;
        }
        matched[v] = false;
    }
    go(&inc, edges, &mut in_m, &mut matched, &mut total);
    total
}

fn two_factor_weight(inc: &[Vec<usize>], edges: &[(usize, usize)], in_m: &[bool]) -> u64 {
    let n = inc.len();
    let mut seen = vec![false; n];
    let mut cycles = 0u32;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            len += 1;
            for &e in &inc[v] {
                if in_m[e] {
                    continue;
                }
                let (a, b) = edges[e];
                let w = if a == v { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if len % 2 == 1 {
            return 0;
        }
        cycles += 1;
    }
    1 << cycles
}

/// `G_e` built from scratch: drop both endpoints of edge `e`, relabel the
/// survivors in increasing order, and join the two other neighbors of each
/// endpoint. Returns the vertex count, the edges, and the indices of the two
/// new edges in the returned list.
pub fn contract(n: usize, edges: &[(usize, usize)], e: usize) -> (usize, Edges, usize, usize) {
    let (u, v) = edges[e];
    let others = |x: usize, skip: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == x && b != skip {
                    Some(b)
                } else if b == x && a != skip {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    };
    let nu = others(u, v);
    let nv = others(v, u);
    assert_eq!((nu.len(), nv.len()), (2, 2), "endpoints must be trivalent");
    let relabel = |x: usize| x - (x > u) as usize - (x > v) as usize;
    let mut out: Edges = edges
        .iter()
        .filter(|&&(a, b)| a != u && a != v && b != u && b != v)
        .map(|&(a, b)| (relabel(a), relabel(b)))
        .collect();
    out.push((relabel(nu[0]), relabel(nu[1])));
    out.push((relabel(nv[0]), relabel(nv[1])));
    let m = out.len();
    (n - 2, out, m - 2, m - 1)
}

/// `|EC(G_e)| / 18`, asserting divisibility.
pub fn psi(n: usize, edges: &[(usize, usize)], e: usize) -> u64 {
    let (m, h, _, _) = contract(n, edges, e);
    let ec = count_colorings(m, &h);
    assert_eq!(ec % 18, 0, "|EC(G_e)| = {ec} is not a multiple of 18");
    ec / 18
}

pub fn psi_of(g: &Graph, e: usize) -> u64 {
    psi(g.order(), g.edges(), e)
}

/// Every spanning union of disjoint even cycles avoiding `banned`, found by
/// trying every edge subset. Returns the cycle count of each. Only for
/// graphs with few edges.
pub fn even_covers_by_subsets(n: usize, edges: &[(usize, usize)], banned: &[usize]) -> Vec<u32> {
    let free: Vec<usize> = (0..edges.len()).filter(|e| !banned.contains(e)).collect();
    assert!(free.len() <= 24, "subset oracle is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let chosen: Vec<usize> = (0..free.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| free[i])
            .collect();
        let mut deg = vec![0; n];
        for &e in &chosen {
            deg[edges[e].0] += 1;
            deg[edges[e].1] += 1;
        }
        if deg.iter().any(|&d| d != 2) {
            continue;
        }
        let in_m: Vec<bool> = (0..edges.len()).map(|e| !chosen.contains(&e)).collect();
        let w = two_factor_weight(&incidence(n, edges), edges, &in_m);
        if w > 0 {
            out.push(w.trailing_zeros());
        }
    }
    out
}

/// Girth by breadth-first search from every vertex.
pub fn girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// A random simple cubic graph on `n` vertices (n even, n >= 4) from the
/// pairing model, retrying until the pairing has no loops or repeats.
pub fn random_cubic(n: usize, seed: u64) -> Graph {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    assert!(n >= 4 && n % 2 == 0);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(&mut rng);
        let mut edges: Edges = points
            .chunks(2)
            .map(|pair| (pair[0].min(pair[1]), pair[0].max(pair[1])))
            .collect();
        edges.sort_unstable();
        let simple = edges.iter().all(|&(u, v)| u != v) && edges.windows(2).all(|w| w[0] != w[1]);
        if simple {
            if let Ok(g) = Graph::new(n, edges) {
                if g.is_connected() {
                    return g;
                }
            }
        }
    }
}

/// Cyclic `k`-edge-connectivity by trying every edge set of size below `k`
/// and asking whether two components of the rest both contain a cycle.
pub fn cyclically_connected_by_cuts(n: usize, edges: &[(usize, usize)], k: usize) -> bool {
    fn cyclic_components(n: usize, edges: &[(usize, usize)], removed: &[usize]) -> usize {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if removed.contains(&i) {
                continue;
            }
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
        let mut vcount = vec![0usize; n];
        let mut ecount = vec![0usize; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            vcount[r] += 1;
        }
        for (i, &(u, _)) in edges.iter().enumerate() {
            if !removed.contains(&i) {
                let r = find(&mut parent, u);
                ecount[r] += 1;
            }
        }
        (0..n).filter(|&r| vcount[r] > 0 && ecount[r] >= vcount[r]).count()
    }
    fn subsets(m: usize, size: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for i in start..m {
            cur.push(i);
            if !subsets(m, size, i + 1, cur, f) {
                return false;
            }
            cur.pop();
        }
        true
    }
    (0..k).all(|size| {
        subsets(edges.len(), size, 0, &mut Vec::new(), &mut |s| cyclic_components(n, edges, s) < 2)
    })
}
