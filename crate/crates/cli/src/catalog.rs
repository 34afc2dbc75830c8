//! JSON catalog of matrix groups over prime fields.
//!
//! A catalog is an array of entries
//!
//! ```json
//! { "label": "GL(2,3)", "p": 3, "dim": 2,
//!   "generators": [[[1,1],[0,1]], [[2,0],[0,1]]],
//!   "affine": false,
//!   "metadata": { "order": 48, "solvable": true, "expected_checks": ["base-classes=expected-fail"] } }
//! ```
//!
//! Matrices are row-major and acted on from the right. Entries are reduced
//! mod `p`. With `"affine": true` the entry describes the split extension
//! `HV` of the closed matrix group `H` by its natural module, and `order`
//! and `fitting_order` refer to `HV`. An entry with no generators but with
//! expected checks is a reserved slot: its checks report
//! awaiting-generators.

use std::fmt;
use std::path::Path;

use degbound_core::exact::is_prime;
use degbound_core::group::FiniteGroup;
use degbound_core::group_stats::{affine_group, AffineElement, Expectation, CHECK_IDS};
use degbound_core::matgroups::{GroupMetadata, MatGroup};
use degbound_core::matrix::Matrix;
use serde::{Deserialize, Serialize};

/// The catalog shipped with the crate.
pub const BUNDLED_CATALOG: &str = include_str!("../data/catalog.json");

/// Catalog-driven checks that are not part of the inequality battery.
pub const ORBIT_CHECK: &str = "no-half-witness";
pub const BASE_CLASS_CHECK: &str = "base-classes";
pub const AFFINE_CLASS_CHECK: &str = "k-affine-le-module";

fn known_check(id: &str) -> bool {
    CHECK_IDS.contains(&id) || [ORBIT_CHECK, BASE_CLASS_CHECK, AFFINE_CLASS_CHECK].contains(&id)
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryMetadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solvable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fitting_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frattini_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub completely_reducible: Option<bool>,
    #[serde(default)]
    pub expected_checks: Vec<String>,
    /// Free text shown with reserved slots.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub label: String,
    pub p: u32,
    pub dim: usize,
    #[serde(default)]
    pub generators: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    pub affine: bool,
    #[serde(default)]
    pub metadata: EntryMetadata,
}

impl CatalogEntry {
    pub fn is_reserved(&self) -> bool {
        self.generators.is_empty() && !self.metadata.expected_checks.is_empty()
    }

    /// Parsed `expected_checks`; validated at load time.
    pub fn expectations(&self) -> Vec<Expectation> {
        self.metadata
            .expected_checks
            .iter()
            .map(|s| Expectation::parse(s).expect("validated when the catalog was loaded"))
            .collect()
    }

    pub fn expectation(&self, check: &str) -> Option<Expectation> {
        self.expectations().into_iter().find(|e| e.check == check)
    }

    pub fn group_metadata(&self) -> GroupMetadata {
        GroupMetadata {
            label: Some(self.label.clone()),
            claimed_order: self.metadata.order,
            solvable: self.metadata.solvable,
            fitting_order: self.metadata.fitting_order,
            frattini_order: self.metadata.frattini_order,
            completely_reducible: self.metadata.completely_reducible,
        }
    }

    fn matrices(&self) -> Vec<Matrix> {
        self.generators
            .iter()
            .map(|rows| Matrix::from_rows(self.p, rows).expect("shape validated when the catalog was loaded"))
            .collect()
    }
}

/// A catalog that cannot be used at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    Io {
        path: String,
        message: String,
    },
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    Entry {
        index: usize,
        label: Option<String>,
        message: String,
    },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::Io { path, message } => write!(f, "cannot read catalog {path}: {message}"),
            CatalogError::Syntax { line, column, message } => {
                write!(f, "catalog line {line}, column {column}: {message}")
            }
            CatalogError::Entry { index, label, message } => match label {
                Some(l) => write!(f, "catalog entry {index} ({l}): {message}"),
                None => write!(f, "catalog entry {index}: {message}"),
            },
        }
    }
}

impl std::error::Error for CatalogError {}

/// Parses and validates a catalog. Entry indices in errors are 0-based.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let entries: Vec<CatalogEntry> = serde_json::from_str(text).map_err(|e| CatalogError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    for (index, entry) in entries.iter().enumerate() {
        let fail = |message: String| CatalogError::Entry {
            index,
            label: Some(entry.label.clone()),
            message,
        };
        if entry.label.trim().is_empty() {
            return Err(CatalogError::Entry {
                index,
                label: None,
                message: "empty label".into(),
            });
        }
        if let Some(prev) = entries[..index].iter().position(|e| e.label == entry.label) {
            return Err(fail(format!("duplicate label, first used by entry {prev}")));
        }
        if !is_prime(entry.p as u64) {
            return Err(fail(format!("p = {} is not prime", entry.p)));
        }
        if entry.dim == 0 {
            return Err(fail("dim must be positive".into()));
        }
        for (g, rows) in entry.generators.iter().enumerate() {
            if rows.len() != entry.dim {
                return Err(fail(format!(
                    "generator {g} has {} rows, expected {}",
                    rows.len(),
                    entry.dim
                )));
            }
            for (r, row) in rows.iter().enumerate() {
                if row.len() != entry.dim {
                    return Err(fail(format!(
                        "generator {g}, row {r} has {} entries, expected {}",
                        row.len(),
                        entry.dim
                    )));
                }
            }
        }
        for (c, check) in entry.metadata.expected_checks.iter().enumerate() {
            let exp = Expectation::parse(check).map_err(|e| fail(format!("expected_checks[{c}]: {e}")))?;
            if !known_check(&exp.check) {
                return Err(fail(format!("expected_checks[{c}]: unknown check {:?}", exp.check)));
            }
        }
    }
    Ok(entries)
}

pub fn load_catalog(path: Option<&Path>) -> Result<Vec<CatalogEntry>, CatalogError> {
    match path {
        None => parse_catalog(BUNDLED_CATALOG),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CatalogError::Io {
                path: p.display().to_string(),
                message: e.to_string(),
            })?;
            parse_catalog(&text)
        }
    }
}

pub enum Construction {
    Linear(MatGroup),
    Affine { h: MatGroup, g: FiniteGroup<AffineElement> },
}

pub enum EntryState {
    Ready(Box<Construction>),
    /// A reserved slot without generators.
    Reserved,
    /// The entry could not be built; the run continues without it.
    Failed(String),
}

pub struct IngestedEntry {
    pub entry: CatalogEntry,
    pub state: EntryState,
}

impl IngestedEntry {
    pub fn linear(&self) -> Option<&MatGroup> {
        match self.construction()? {
            Construction::Linear(g) => Some(g),
            Construction::Affine { .. } => None,
        }
    }

    pub fn construction(&self) -> Option<&Construction> {
        match &self.state {
            EntryState::Ready(c) => Some(c),
            _ => None,
        }
    }

    pub fn label(&self) -> &str {
        &self.entry.label
    }
}

/// Closes every entry and checks it against its claimed order.
pub fn ingest(entries: Vec<CatalogEntry>, cap: usize) -> Vec<IngestedEntry> {
    entries
        .into_iter()
        .map(|entry| {
            let state = build(&entry, cap);
            IngestedEntry { entry, state }
        })
        .collect()
}

fn build(entry: &CatalogEntry, cap: usize) -> EntryState {
    if entry.is_reserved() {
        return EntryState::Reserved;
    }
    let h = match MatGroup::close(entry.p, entry.dim, &entry.matrices(), cap) {
        Ok(h) => h,
        Err(e) => return EntryState::Failed(e.to_string()),
    };
    let metadata = entry.group_metadata();
    if !entry.affine {
        return match h.with_metadata(metadata) {
            Ok(h) => EntryState::Ready(Box::new(Construction::Linear(h))),
            Err(e) => EntryState::Failed(e.to_string()),
        };
    }
    let g = match affine_group(&h, cap) {
        Ok(g) => g,
        Err(e) => return EntryState::Failed(e.to_string()),
    };
    if let Some(claimed) = metadata.claimed_order {
        if claimed != g.order() as u64 {
            return EntryState::Failed(format!("closure has order {}, metadata claims {claimed}", g.order()));
        }
    }
    EntryState::Ready(Box::new(Construction::Affine { h, g }))
}
