//! Recomputing the table of known `C_k(n)` values and writing it as CSV.

use std::io;

use serde::Serialize;
use simcon_core::bounds::{CountEntry, CountTable, Exactness};
use simcon_core::{EnumerationConfig, EnumerationReport};

use crate::engine::{count, RunError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellStatus {
    Match,
    Mismatch,
    /// The budget ran out; the computed value is only a lower bound.
    Inexact,
}

impl CellStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CellStatus::Match => "match",
            CellStatus::Mismatch => "mismatch",
            CellStatus::Inexact => "inexact",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CellResult {
    pub k: usize,
    pub n: usize,
    pub reference: CountEntry,
    pub report: EnumerationReport,
    pub status: CellStatus,
}

/// Compares a (possibly partial) count with a reference entry.
///
/// A partial count is still a lower bound, so it is a mismatch as soon as
/// it exceeds an exact reference value.
pub fn classify(report: &EnumerationReport, reference: &CountEntry) -> CellStatus {
    let value = &report.total_classes;
    let consistent = match reference.exactness {
        Exactness::Exact if report.is_exact() => *value == reference.value,
        Exactness::Exact => *value <= reference.value,
        Exactness::LowerBound => !report.is_exact() || *value >= reference.value,
    };
    match (consistent, report.is_exact()) {
        (false, _) => CellStatus::Mismatch,
        (true, true) => CellStatus::Match,
        (true, false) => CellStatus::Inexact,
    }
}

/// Recomputes every cell of `table` accepted by `select`, each with a fresh
/// copy of `template` (whose `k` and `n` are overwritten).
pub fn recompute<F>(
    table: &CountTable,
    template: &EnumerationConfig,
    mut select: F,
) -> Result<Vec<CellResult>, RunError>
where
    F: FnMut(usize, usize) -> bool,
{
    let mut out = Vec::new();
    for ((k, n), entry) in table.entries() {
        if !select(k, n) {
            continue;
        }
        let config = EnumerationConfig {
            k,
            n,
            ..template.clone()
        };
        let report = count(config)?;
        out.push(CellResult {
            k,
            n,
            status: classify(&report, entry),
            reference: entry.clone(),
            report,
        });
    }
    Ok(out)
}

/// Columns `k, n, value, provenance, exactness`.
pub fn write_table_csv<W: io::Write>(table: &CountTable, w: W) -> csv::Result<()> {
    let mut wtr = csv::Writer::from_writer(w);
    wtr.write_record(["k", "n", "value", "provenance", "exactness"])?;
    for ((k, n), e) in table.entries() {
        wtr.write_record([
            k.to_string(),
            n.to_string(),
            e.value.to_string(),
            e.provenance.as_str().to_string(),
            e.exactness.as_str().to_string(),
        ])?;
    }
    wtr.flush()?;
    Ok(())
}

/// Columns `k, n, value, provenance, exactness, reference, reference_exactness, match`.
pub fn write_results_csv<W: io::Write>(rows: &[CellResult], w: W) -> csv::Result<()> {
    let mut wtr = csv::Writer::from_writer(w);
    wtr.write_record([
        "k",
        "n",
        "value",
        "provenance",
        "exactness",
        "reference",
        "reference_exactness",
        "match",
    ])?;
    for r in rows {
        let exactness = if r.report.is_exact() {
            Exactness::Exact
        } else {
            Exactness::LowerBound
        };
        wtr.write_record([
            r.k.to_string(),
            r.n.to_string(),
            r.report.total_classes.to_string(),
            "computed".to_string(),
            exactness.as_str().to_string(),
            r.reference.value.to_string(),
            r.reference.exactness.as_str().to_string(),
            r.status.as_str().to_string(),
        ])?;
    }
    wtr.flush()?;
    Ok(())
}

/// Copies every exhaustively computed value into `table` as a computed entry.
pub fn absorb(table: &mut CountTable, rows: &[CellResult]) {
    for r in rows.iter().filter(|r| r.report.is_exact()) {
        table.insert_computed(r.k, r.n, r.report.total_classes.clone());
    }
}
