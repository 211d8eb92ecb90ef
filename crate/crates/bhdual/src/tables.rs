//! Golden-table presentation and diffing.
//!
//! Each [`TableKind`] selects a set of atlas rows (plus the generated
//! A/D families for [`TableKind::Simple`]) and a column layout.  The
//! rendered cells come straight from the stored dataset; [`diff`]
//! recomputes every stored field of the selected rows from the
//! polynomial text alone and reports mismatches, so a regression in any
//! formula surfaces as a readable table diff rather than a panic.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::atlas::{check_entry, Atlas, AtlasEntry, AtlasError};

/// The named golden tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TableKind {
    /// ADE rows: the stored E₆/E₇/E₈ entries plus `A(k,l)` for
    /// `k,l ≤ 5` and `D(k)` for `k ≤ 10`.
    Simple,
    /// The three simply-elliptic rows.
    Elliptic,
    /// The ten rows of Arnold's strange duality of the exceptional
    /// unimodal singularities (self-dual rows once, dual pairs once).
    Arnold,
    /// The fourteen exceptional bimodal rows.
    Bimodal,
    /// The three weighted-homogeneous bimodal series heads.
    Series,
    /// Orbit data of the exceptional bimodal rows: Gorenstein
    /// parameter, dual content, dual Milnor number, and (αᵢ,βᵢ) pairs.
    Orbits,
    /// Characteristic functions `φ_{G_f}`, `φ_{G_{f^t}}` of every
    /// stored row, in canonical text form.
    Phi,
}

/// Row selections for the fixed-membership tables, in presentation
/// order.
const ARNOLD_ROWS: [&str; 10] = [
    "E12", "E13", "E14", "Z12", "Z13", "Q12", "W12", "W13", "S12", "U12",
];
const BIMODAL_ROWS: [&str; 14] = [
    "E18", "E19", "E20", "Z17", "Z18", "Z19", "Q16", "Q17", "Q18", "W17", "W18", "S16", "S17",
    "U16",
];
const SERIES_ROWS: [&str; 3] = ["J3,0", "W1,0", "U1,0"];

impl TableKind {
    pub const ALL: [TableKind; 7] = [
        TableKind::Simple,
        TableKind::Elliptic,
        TableKind::Arnold,
        TableKind::Bimodal,
        TableKind::Series,
        TableKind::Orbits,
        TableKind::Phi,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableKind::Simple => "simple",
            TableKind::Elliptic => "elliptic",
            TableKind::Arnold => "arnold",
            TableKind::Bimodal => "bimodal",
            TableKind::Series => "series",
            TableKind::Orbits => "orbits",
            TableKind::Phi => "phi",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableKind {
    type Err = String;

    fn from_str(s: &str) -> Result<TableKind, String> {
        TableKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<_> = TableKind::ALL.iter().map(|k| k.as_str()).collect();
                format!("unknown table {s:?}; expected one of {}", names.join("|"))
            })
    }
}

/// A rendered table: a header and string cells, one row per entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub kind: TableKind,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Serialize for TableKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl Table {
    /// Aligned plain-text rendering, header first, `|`-separated.
    pub fn render_text(&self) -> String {
        let cols = self.header.len();
        let mut widths = vec![0usize; cols];
        let all_rows = std::iter::once(&self.header).chain(self.rows.iter());
        for row in all_rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |row: &[String]| {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(i, cell)| format!("{:width$}", cell, width = widths[i]))
                .collect();
            out.push_str(cells.join(" | ").trim_end());
            out.push('\n');
        };
        line(&self.header);
        for row in &self.rows {
            line(row);
        }
        out
    }
}

fn triple_text(t: &crate::invariants::Triple) -> String {
    let [a, b, c] = t.0;
    format!("{a},{b},{c}")
}

fn pairs_text(pairs: &[(u64, u64)]) -> String {
    pairs
        .iter()
        .map(|(a, b)| format!("{a},{b}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// The entries a table selects, in presentation order.
pub fn selection(kind: TableKind, atlas: &Atlas) -> Result<Vec<AtlasEntry>, AtlasError> {
    let named = |names: &[&str]| -> Result<Vec<AtlasEntry>, AtlasError> {
        names.iter().map(|n| atlas.lookup(n)).collect()
    };
    match kind {
        TableKind::Simple => {
            let mut rows = named(&["E6", "E7", "E8"])?;
            for k in 1..=5 {
                for l in 1..=5 {
                    rows.push(atlas.lookup(&format!("A({k},{l})"))?);
                }
            }
            for k in 4..=10 {
                rows.push(atlas.lookup(&format!("D({k})"))?);
            }
            Ok(rows)
        }
        TableKind::Elliptic => named(&["~E6", "~E7", "~E8"]),
        TableKind::Arnold => named(&ARNOLD_ROWS),
        TableKind::Bimodal | TableKind::Orbits => named(&BIMODAL_ROWS),
        TableKind::Series => named(&SERIES_ROWS),
        TableKind::Phi => Ok(atlas.entries().to_vec()),
    }
}

/// Render a table from the stored dataset fields.
pub fn table(kind: TableKind, atlas: &Atlas) -> Result<Table, AtlasError> {
    let entries = selection(kind, atlas)?;
    let (header, rows): (Vec<&str>, Vec<Vec<String>>) = match kind {
        TableKind::Orbits => (
            vec!["name", "a_w", "c_ft", "mu_ft", "betas"],
            entries
                .iter()
                .map(|e| {
                    vec![
                        e.name.clone(),
                        e.a_w.to_string(),
                        e.c_ft.to_string(),
                        e.mu_ft.to_string(),
                        pairs_text(e.beta_pairs.as_deref().unwrap_or(&[])),
                    ]
                })
                .collect(),
        ),
        TableKind::Phi => (
            vec!["name", "phi_f", "phi_ft"],
            entries
                .iter()
                .map(|e| vec![e.name.clone(), e.phi_f.to_string(), e.phi_ft.to_string()])
                .collect(),
        ),
        _ => (
            vec!["name", "f", "ft", "alpha", "gamma", "dual"],
            entries
                .iter()
                .map(|e| {
                    vec![
                        e.name.clone(),
                        e.f_text.clone(),
                        e.ft_text.clone(),
                        triple_text(&e.alpha),
                        triple_text(&e.gamma),
                        e.dual.clone(),
                    ]
                })
                .collect(),
        ),
    };
    Ok(Table {
        kind,
        header: header.into_iter().map(String::from).collect(),
        rows,
    })
}

/// Recompute every stored field of the selected rows from their
/// polynomial text and report one line per mismatching cell.  Empty on
/// pristine data.
pub fn diff(kind: TableKind, atlas: &Atlas) -> Result<Vec<String>, AtlasError> {
    let mut problems = Vec::new();
    for entry in selection(kind, atlas)? {
        for problem in check_entry(&entry) {
            problems.push(format!("{}: {problem}", entry.name));
        }
    }
    Ok(problems)
}
