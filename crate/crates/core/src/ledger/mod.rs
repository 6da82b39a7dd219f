//! Append-only store of computed Kászonyi numbers.
//!
//! The file holds one JSON object per line, fields always present and in
//! this order:
//!
//! ```text
//! id kind recipe graph6 edge orbit_size pentagon psi ec_count certificate status wall_ms version
//! ```
//!
//! Ids run 1, 2, 3, ... in file order. The in-memory index is rebuilt from
//! the file on open; any line that fails to parse or breaks a record
//! invariant is reported with the id it should have carried.

mod search;

pub use search::{evaluate_recipe, search, superpose_chain, Budget, Family};

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::color::{psi_with, PsiMode};
use crate::construct::parse_recipe;
use crate::error::{Error, Result};
use crate::graph::{decode_graph6, encode_graph6, EdgeId};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordKind {
    /// psi at one edge, standing for its automorphism orbit.
    Edge,
    /// psi at a pentagon, read off one of its edges.
    Pentagon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    /// Skipped or stopped by a size or node budget.
    Truncated,
    /// The constructed graph failed snark certification.
    NotSnark,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiRecord {
    pub id: u64,
    pub kind: RecordKind,
    pub recipe: String,
    pub graph6: String,
    pub edge: Option<usize>,
    pub orbit_size: Option<usize>,
    pub pentagon: Option<Vec<usize>>,
    pub psi: Option<u64>,
    /// `|EC(G_e)|`, equal to `18 * psi`.
    pub ec_count: Option<u64>,
    pub certificate: String,
    pub status: Status,
    pub wall_ms: u64,
    pub version: String,
}

impl PsiRecord {
    fn validate(&self) -> std::result::Result<(), String> {
        let g = decode_graph6(&self.graph6).map_err(|e| format!("graph6: {e}"))?;
        if let Some(e) = self.edge {
            if e >= g.size() {
                return Err(format!("edge {e} out of range for {} edges", g.size()));
            }
        }
        match (self.status, self.psi, self.ec_count) {
            (Status::Ok, Some(psi), Some(ec)) => {
                if psi.checked_mul(18) != Some(ec) {
                    return Err(format!("ec_count {ec} is not 18 * psi = 18 * {psi}"));
                }
                if self.edge.is_none() {
                    return Err("ok record without an edge".into());
                }
            }
            (Status::Ok, _, _) => return Err("ok record without psi and ec_count".into()),
            (_, None, None) => {}
            _ => return Err("psi recorded on a record that is not ok".into()),
        }
        if self.kind == RecordKind::Pentagon && self.pentagon.as_ref().is_none_or(|p| p.len() != 5) {
            return Err("pentagon record needs five vertices".into());
        }
        Ok(())
    }

    fn order_and_size(&self) -> (usize, usize) {
        decode_graph6(&self.graph6).map_or((usize::MAX, usize::MAX), |g| (g.order(), g.size()))
    }
}

/// Outcome of rebuilding a stored witness from its recipe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reverification {
    pub graph6_identical: bool,
    pub psi_identical: bool,
}

impl Reverification {
    pub fn ok(&self) -> bool {
        self.graph6_identical && self.psi_identical
    }
}

pub struct Ledger {
    path: PathBuf,
    records: Vec<PsiRecord>,
    /// psi -> ids of ok records with that value.
    index: BTreeMap<u64, Vec<u64>>,
}

impl Ledger {
    /// Opens (creating if needed) a ledger file and rebuilds its index.
    pub fn open(path: impl AsRef<Path>) -> Result<Ledger> {
        let path = path.as_ref().to_path_buf();
        let mut ledger = Ledger {
            path: path.clone(),
            records: Vec::new(),
            index: BTreeMap::new(),
        };
        let file = match File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                File::create(&path)?;
                return Ok(ledger);
            }
            Err(e) => return Err(e.into()),
        };
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let expected = i as u64 + 1;
            let line = line?;
            let corrupt = |message: String| Error::LedgerCorrupt {
                id: expected,
                message,
            };
            let rec: PsiRecord = serde_json::from_str(&line).map_err(|e| corrupt(e.to_string()))?;
            if rec.id != expected {
                return Err(corrupt(format!("found id {}", rec.id)));
            }
            rec.validate().map_err(corrupt)?;
            ledger.index_record(&rec);
            ledger.records.push(rec);
        }
        Ok(ledger)
    }

    fn index_record(&mut self, rec: &PsiRecord) {
        if let (Status::Ok, Some(psi)) = (rec.status, rec.psi) {
            self.index.entry(psi).or_default().push(rec.id);
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn records(&self) -> &[PsiRecord] {
        &self.records
    }

    pub fn get(&self, id: u64) -> Option<&PsiRecord> {
        id.checked_sub(1).and_then(|i| self.records.get(i as usize))
    }

    /// Appends a record, assigning the next id. The record's own `id` field
    /// is ignored.
    pub fn record(&mut self, mut rec: PsiRecord) -> Result<u64> {
        rec.id = self.records.len() as u64 + 1;
        rec.validate().map_err(|message| Error::LedgerCorrupt {
            id: rec.id,
            message,
        })?;
        let line = serde_json::to_string(&rec).map_err(|e| Error::Io(e.to_string()))?;
        let mut file = OpenOptions::new().append(true).create(true).open(&self.path)?;
        writeln!(file, "{line}")?;
        file.flush()?;
        self.index_record(&rec);
        let id = rec.id;
        self.records.push(rec);
        Ok(id)
    }

    /// Witnesses for `psi = n`, smallest graph first, ties by recipe text.
    pub fn query(&self, n: u64) -> Vec<&PsiRecord> {
        let mut out: Vec<&PsiRecord> = self
            .index
            .get(&n)
            .into_iter()
            .flatten()
            .filter_map(|&id| self.get(id))
            .collect();
        out.sort_by(|a, b| {
            a.order_and_size()
                .cmp(&b.order_and_size())
                .then_with(|| a.recipe.cmp(&b.recipe))
                .then_with(|| a.id.cmp(&b.id))
        });
        out
    }

    /// Positive values of psi with at least one witness, ascending.
    pub fn achieved(&self) -> Vec<u64> {
        self.index.keys().copied().filter(|&n| n > 0).collect()
    }

    /// Rebuilds the record's graph from its recipe and recomputes psi.
    pub fn reverify(&self, id: u64) -> Result<Reverification> {
        let rec = self.get(id).ok_or(Error::LedgerCorrupt {
            id,
            message: "no such record".into(),
        })?;
        let g = parse_recipe(&rec.recipe)?.build()?;
        let graph6_identical = encode_graph6(&g) == rec.graph6;
        let psi_identical = match (rec.status, rec.edge) {
            (Status::Ok, Some(e)) if graph6_identical => {
                let p = psi_with(&g, EdgeId(e), PsiMode::Asserted, None)?;
                Some(p.value) == rec.psi && Some(p.ec_count) == rec.ec_count
            }
            (Status::Ok, _) => false,
            _ => true,
        };
        Ok(Reverification {
            graph6_identical,
            psi_identical,
        })
    }

    /// CSV summary: one row per achieved value with its best witness.
    pub fn export_csv(&self, out: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["n", "vertices", "edges", "record_id", "recipe"])
            .map_err(io)?;
        for n in self.achieved() {
            if let Some(best) = self.query(n).first() {
                let (order, size) = best.order_and_size();
                w.write_record([
                    n.to_string(),
                    order.to_string(),
                    size.to_string(),
                    best.id.to_string(),
                    best.recipe.clone(),
                ])
                .map_err(io)?;
            }
        }
        w.flush()?;
        Ok(())
    }
}
