use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use super::{Ledger, PsiRecord, RecordKind, Status, VERSION};
use crate::analyze::certify_snark;
use crate::color::{psi_with, PsiMode};
use crate::construct::Recipe;
use crate::error::{Error, Result};
use crate::graph::{edge_orbits, encode_graph6, list_pentagons, Graph};

/// Size and effort caps for one recipe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Graphs with more edges are recorded as truncated without counting.
    pub max_edges: usize,
    /// Backtracking nodes allowed per psi count.
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_edges: 80,
            max_nodes: 100_000_000,
        }
    }
}

/// Recipe generators for the search harness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `J_5, J_7, ..., J_max_n`.
    Flowers { max_n: usize },
    /// Petersen, then `depth` superpositions of the previous graph into an
    /// edge of a fresh Petersen graph.
    SuperposeChain { depth: usize },
    /// Pentagon joins among Petersen and `J_5`.
    PentagonJoins,
    Explicit(Vec<Recipe>),
}

impl Family {
    pub fn recipes(&self) -> Result<Vec<Recipe>> {
        match self {
            Family::Flowers { max_n } => Ok((5..=*max_n).step_by(2).map(Recipe::Flower).collect()),
            Family::SuperposeChain { depth } => superpose_chain(*depth),
            Family::PentagonJoins => {
                let join = |l: Recipe, r: Recipe| Recipe::Join {
                    left: Box::new(l),
                    left_pentagon: 0,
                    right: Box::new(r),
                    right_pentagon: 0,
                    rotation: 0,
                };
                let j5 = || Recipe::Flower(5);
                Ok(vec![
                    join(Recipe::Petersen, Recipe::Petersen),
                    join(Recipe::Petersen, j5()),
                    join(j5(), Recipe::Petersen),
                    join(j5(), j5()),
                ])
            }
            Family::Explicit(list) => Ok(list.clone()),
        }
    }
}

/// Split vertices for the next chain step: vertex 0 and the least vertex
/// not adjacent to it. Both lie in the block of the outermost Petersen
/// copy, so earlier blocks survive intact.
fn split_pair(g: &Graph) -> Result<(usize, usize)> {
    (1..g.order())
        .find(|&v| !g.has_edge(0, v))
        .map(|v| (0, v))
        .ok_or_else(|| Error::hypothesis("no vertex is nonadjacent to vertex 0"))
}

/// The chain `Petersen, S(Petersen), S(S(Petersen)), ...` where each step
/// superposes the previous graph into edge 0 of a new Petersen graph.
pub fn superpose_chain(depth: usize) -> Result<Vec<Recipe>> {
    let mut out = vec![Recipe::Petersen];
    let mut prev = Recipe::Petersen;
    let mut prev_graph = prev.build()?;
    for _ in 0..depth {
        let (u, v) = split_pair(&prev_graph)?;
        let next = Recipe::Superpose {
            left: Box::new(Recipe::Petersen),
            edge: 0,
            right: Box::new(prev),
            u,
            v,
        };
        prev_graph = next.build()?;
        out.push(next.clone());
        prev = next;
    }
    Ok(out)
}

fn base_record(recipe: &str, graph6: &str, certificate: String) -> PsiRecord {
    PsiRecord {
        id: 0,
        kind: RecordKind::Edge,
        recipe: recipe.to_string(),
        graph6: graph6.to_string(),
        edge: None,
        orbit_size: None,
        pentagon: None,
        psi: None,
        ec_count: None,
        certificate,
        status: Status::Ok,
        wall_ms: 0,
        version: VERSION.to_string(),
    }
}

/// Builds one recipe, certifies it, and computes psi at one edge per
/// automorphism orbit plus psi at every pentagon. Records come back without
/// ids.
pub fn evaluate_recipe(recipe: &Recipe, budget: Budget) -> Result<Vec<PsiRecord>> {
    let started = Instant::now();
    let text = recipe.to_string();
    let g = recipe.build()?;
    let g6 = encode_graph6(&g);
    if g.size() > budget.max_edges {
        let mut rec = base_record(&text, &g6, format!("skipped: {} edges", g.size()));
        rec.status = Status::Truncated;
        return Ok(vec![rec]);
    }
    let cert = certify_snark(&g, 4)?;
    if !cert.passes() {
        let mut rec = base_record(&text, &g6, cert.summary());
        rec.status = Status::NotSnark;
        rec.wall_ms = started.elapsed().as_millis() as u64;
        return Ok(vec![rec]);
    }
    let summary = cert.summary();
    let mut out = Vec::new();
    let mut by_edge: Vec<Option<u64>> = vec![None; g.size()];
    for orbit in edge_orbits(&g) {
        let t = Instant::now();
        let e = orbit[0];
        let mut rec = base_record(&text, &g6, summary.clone());
        rec.edge = Some(e.0);
        rec.orbit_size = Some(orbit.len());
        match psi_with(&g, e, PsiMode::Asserted, Some(budget.max_nodes)) {
            Ok(p) => {
                rec.psi = Some(p.value);
                rec.ec_count = Some(p.ec_count);
                orbit.iter().for_each(|f| by_edge[f.0] = Some(p.value));
            }
            Err(Error::Budget { .. }) => rec.status = Status::Truncated,
            Err(other) => return Err(other),
        }
        rec.wall_ms = t.elapsed().as_millis() as u64;
        out.push(rec);
    }
    for p in list_pentagons(&g) {
        let e = p.edges(&g)[0];
        let mut rec = base_record(&text, &g6, summary.clone());
        rec.kind = RecordKind::Pentagon;
        rec.edge = Some(e.0);
        rec.pentagon = Some(p.vertices().to_vec());
        match by_edge[e.0] {
            Some(psi) => {
                rec.psi = Some(psi);
                rec.ec_count = Some(18 * psi);
            }
            None => rec.status = Status::Truncated,
        }
        out.push(rec);
    }
    Ok(out)
}

/// Evaluates every recipe with up to `workers` threads and appends the
/// results in recipe order through a single writer. Returns the new ids.
pub fn search(
    ledger: &mut Ledger,
    recipes: &[Recipe],
    budget: Budget,
    workers: usize,
) -> Result<Vec<u64>> {
    let workers = workers.clamp(1, recipes.len().max(1));
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, Result<Vec<PsiRecord>>)>();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let next = &next;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(recipe) = recipes.get(i) else { break };
                if tx.send((i, evaluate_recipe(recipe, budget))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut pending = BTreeMap::new();
        let mut due = 0;
        let mut ids = Vec::new();
        let mut first_error = None;
        for (i, result) in rx {
            pending.insert(i, result);
            while let Some(result) = pending.remove(&due) {
                due += 1;
                match result {
                    Ok(records) if first_error.is_none() => {
                        for rec in records {
                            match ledger.record(rec) {
                                Ok(id) => ids.push(id),
                                Err(e) => {
                                    first_error.get_or_insert(e);
                                    break;
                                }
                            }
                        }
                    }
                    Ok(_) => {}
                    Err(e) => {
                        first_error.get_or_insert(e);
                    }
                }
            }
        }
        match first_error {
            Some(e) => Err(e),
            None => Ok(ids),
        }
    })
}
