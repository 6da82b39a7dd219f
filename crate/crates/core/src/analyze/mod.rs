//! Snark certification, one verification routine per counting identity, and
//! the predicates behind the open problems (Condition K, orthogonal pairs).

mod problems;
mod theorems;

pub use problems::{condition_k, orthogonal_pairs};
pub use theorems::{verify_thm_3_3, verify_thm_3_7, verify_thm_4_5, verify_thm_4_8, verify_thm_5_3};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::color::ColoringSearch;
use crate::error::{Error, Result};
use crate::graph::{cyclically_edge_connected_at_least, girth, Graph};

/// The three defining clauses of a snark, evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnarkCertificate {
    pub girth: Option<usize>,
    /// Cyclic edge connectivity level that was checked.
    pub level: usize,
    /// `None` when the graph has no two disjoint cycles.
    pub cyclically_connected: Option<bool>,
    /// `|EC(g)|`.
    pub colorings: u64,
}

impl SnarkCertificate {
    pub fn girth_ok(&self) -> bool {
        self.girth.is_some_and(|g| g >= 5)
    }

    pub fn connectivity_ok(&self) -> bool {
        self.cyclically_connected == Some(true)
    }

    pub fn passes(&self) -> bool {
        self.girth_ok() && self.connectivity_ok() && self.colorings == 0
    }

    pub fn summary(&self) -> String {
        let girth = self.girth.map_or("none".to_string(), |g| g.to_string());
        let cyc = match self.cyclically_connected {
            Some(true) => "yes",
            Some(false) => "no",
            None => "undefined",
        };
        format!(
            "girth={girth} cyclic{}={cyc} colorings={} snark={}",
            self.level,
            self.colorings,
            if self.passes() { "yes" } else { "no" }
        )
    }
}

/// Evaluates girth >= 5, cyclic `level`-edge-connectivity and
/// uncolorability of a cubic graph.
pub fn certify_snark(g: &Graph, level: usize) -> Result<SnarkCertificate> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    let colorings = ColoringSearch::new(g)?
        .fix_vertex(0)?
        .count()?
        .checked_mul(6)
        .ok_or(Error::Overflow)?;
    let cyclically_connected = match cyclically_edge_connected_at_least(g, level) {
        Ok(ok) => Some(ok),
        Err(Error::NoDisjointCycles) => None,
        Err(e) => return Err(e),
    };
    Ok(SnarkCertificate {
        girth: girth(g),
        level,
        cyclically_connected,
        colorings,
    })
}

/// One identity checked by a verification routine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

/// A computed value that is reported but not asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantity {
    pub name: String,
    pub value: u64,
}

/// Outcome of verifying one identity family on one instance. The verdict
/// is pass exactly when every check holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub instance: String,
    pub checks: Vec<Check>,
    pub quantities: Vec<Quantity>,
    pub pass: bool,
}

impl TheoremReport {
    pub(crate) fn new(theorem: &str, instance: impl Into<String>) -> Self {
        TheoremReport {
            theorem: theorem.to_string(),
            instance: instance.into(),
            checks: Vec::new(),
            quantities: Vec::new(),
            pass: true,
        }
    }

    pub(crate) fn check(&mut self, name: impl Into<String>, lhs: u64, rhs: u64) -> bool {
        let holds = lhs == rhs;
        self.pass &= holds;
        self.checks.push(Check {
            name: name.into(),
            lhs,
            rhs,
            holds,
        });
        holds
    }

    pub(crate) fn check_true(&mut self, name: impl Into<String>, value: bool) -> bool {
        self.check(name, value as u64, 1)
    }

    pub(crate) fn record(&mut self, name: impl Into<String>, value: u64) {
        self.quantities.push(Quantity {
            name: name.into(),
            value,
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Line-oriented record: `theorem`, `instance`, one `check` line per
/// identity (`name: lhs = rhs ok|FAIL`), one `value` line per reported
/// quantity, then `verdict pass|fail`.
impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem {}", self.theorem)?;
        writeln!(f, "instance {}", self.instance)?;
        for c in &self.checks {
            let mark = if c.holds { "ok" } else { "FAIL" };
            writeln!(f, "check {}: {} = {} {mark}", c.name, c.lhs, c.rhs)?;
        }
        for q in &self.quantities {
            writeln!(f, "value {}: {}", q.name, q.value)?;
        }
        write!(f, "verdict {}", if self.pass { "pass" } else { "fail" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{flower, petersen};

    #[test]
    fn petersen_is_a_snark() {
        let c = certify_snark(&petersen(), 4).unwrap();
        assert!(c.passes(), "{}", c.summary());
        assert!(certify_snark(&petersen(), 5).unwrap().passes());
    }

    #[test]
    fn k4_fails() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = certify_snark(&k4, 4).unwrap();
        assert!(!c.passes());
        assert_eq!(c.girth, Some(3));
        assert_eq!(c.colorings, 6);
        assert_eq!(c.cyclically_connected, None);
    }

    #[test]
    fn flower_certificate() {
        assert!(certify_snark(&flower(5).unwrap(), 4).unwrap().passes());
    }

    #[test]
    fn non_cubic_rejected() {
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(certify_snark(&path, 4), Err(Error::NotCubic));
    }

    #[test]
    fn report_text_and_verdict() {
        let mut r = TheoremReport::new("3.3", "(petersen) e=0");
        r.check("a", 1, 1);
        r.record("b", 7);
        assert!(r.pass);
        assert_eq!(
            r.to_string(),
            "theorem 3.3\ninstance (petersen) e=0\ncheck a: 1 = 1 ok\nvalue b: 7\nverdict pass"
        );
        r.check("c", 1, 2);
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
    }
}
