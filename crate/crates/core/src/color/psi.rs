use serde::{Deserialize, Serialize};

use super::ColoringSearch;
use crate::analyze::certify_snark;
use crate::error::{Error, Result};
use crate::graph::{contract_removed_edge, EdgeId, Graph};

/// How much of the snark hypothesis `psi` checks before counting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PsiMode {
    /// Certify girth, cyclic 4-edge-connectivity and uncolorability first.
    #[default]
    Strict,
    /// Trust the caller that the graph is a snark.
    Asserted,
    /// Accept any cubic graph meeting the contraction hypotheses and flag
    /// the result when the graph is not a certified snark.
    Extension,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiValue {
    pub value: u64,
    /// `|ED(G_e)|`.
    pub ed_count: u64,
    /// `|EC(G_e)|`, always `6 * ed_count`.
    pub ec_count: u64,
    /// Set when the graph is not a snark, so the number is the formula
    /// applied outside its definition.
    pub formula_extension: bool,
}

/// The Kászonyi number of a snark at an edge: a third of the number of
/// 3-edge-decompositions of `G_e`.
pub fn psi(g: &Graph, e: EdgeId) -> Result<u64> {
    psi_with(g, e, PsiMode::Strict, None).map(|p| p.value)
}

/// `psi` with an explicit hypothesis mode and an optional node budget for
/// the count.
pub fn psi_with(g: &Graph, e: EdgeId, mode: PsiMode, budget: Option<u64>) -> Result<PsiValue> {
    g.check_edge(e)?;
    let formula_extension = match mode {
        PsiMode::Asserted => false,
        PsiMode::Strict => {
            let cert = certify_snark(g, 4)?;
            if !cert.passes() {
                return Err(Error::hypothesis(format!("not a snark: {}", cert.summary())));
            }
            false
        }
        PsiMode::Extension => !certify_snark(g, 4)?.passes(),
    };
    let ge = contract_removed_edge(g, e)?;
    let h = &ge.graph;
    let v = h.first_trivalent().ok_or(Error::NoTrivalentVertex)?;
    let ed_count = ColoringSearch::new(h)?.fix_vertex(v)?.budget(budget).count()?;
    if ed_count % 3 != 0 {
        return Err(Error::Divisibility {
            count: ed_count,
            divisor: 3,
        });
    }
    Ok(PsiValue {
        value: ed_count / 3,
        ed_count,
        ec_count: ed_count.checked_mul(6).ok_or(Error::Overflow)?,
        formula_extension,
    })
}
