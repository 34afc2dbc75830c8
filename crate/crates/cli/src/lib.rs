//! Batch runner for the exact checks in `degbound-core`.
//!
//! A run selects suites, loads the matrix-group catalog and the sporadic
//! table when needed, executes the suites (optionally on several threads)
//! and returns the reports in a fixed order together with an exit code:
//!
//! * `0`: no unexpected failure and nothing undecided,
//! * `1`: some check failed unexpectedly or stayed undecided,
//! * `2`: the configuration or an input file is malformed.
//!
//! ```
//! use degbound::{run, RunConfig, Suite};
//!
//! let mut config = RunConfig::with_suites(&[Suite::AltBaseCase]);
//! config.n_range = Some(5..=8);
//! let outcome = run(&config).unwrap();
//! assert_eq!(outcome.reports.len(), 4);
//! assert_eq!(outcome.exit_code, 0);
//! ```

pub mod catalog;
pub mod config;
pub mod render;
pub mod suites;

use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use degbound_core::simple_orders::{parse_sporadic_table, SporadicEntry, BUNDLED_SPORADIC_TABLE};
use degbound_core::{CheckReport, Status};

pub use catalog::{ingest, load_catalog, CatalogEntry, CatalogError, IngestedEntry};
pub use config::{Format, RunConfig, Suite};

use catalog::EntryState;
use config::ConfigError;
use suites::{run_suite, Context};

/// Anything that makes a run impossible; exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("invalid configuration: {0}")]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Catalog(#[from] CatalogError),
    #[error("sporadic table: {0}")]
    Sporadic(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub reports: Vec<CheckReport>,
    pub exit_code: i32,
}

impl RunOutcome {
    pub fn report(&self, id: &str) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.id == id)
    }

    pub fn count(&self, status: Status) -> usize {
        render::count(&self.reports, status)
    }
}

/// `1` if any report failed unexpectedly or is undecided, else `0`.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().any(|r| r.status.is_unexpected()) {
        1
    } else {
        0
    }
}

pub fn load_sporadic(path: Option<&Path>) -> Result<Vec<SporadicEntry>, RunError> {
    let text = match path {
        None => BUNDLED_SPORADIC_TABLE.to_string(),
        Some(p) => std::fs::read_to_string(p).map_err(|e| RunError::Sporadic(format!("{}: {e}", p.display())))?,
    };
    parse_sporadic_table(&text).map_err(|e| RunError::Sporadic(e.to_string()))
}

/// Runs every selected suite. Reports come out grouped by suite in the
/// order of [`Suite::ALL`], each suite in its own deterministic order,
/// preceded by one record per catalog entry that could not be built.
pub fn run(config: &RunConfig) -> Result<RunOutcome, RunError> {
    config.validate()?;
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();

    let catalog = if suites.iter().any(|s| s.uses_catalog()) {
        ingest(load_catalog(config.catalog.as_deref())?, config.cap)
    } else {
        Vec::new()
    };
    let sporadic = if suites.contains(&Suite::Sporadic) {
        load_sporadic(config.sporadic_table.as_deref())?
    } else {
        Vec::new()
    };
    let ctx = Context {
        config,
        catalog: &catalog,
        sporadic: &sporadic,
    };

    let mut reports: Vec<CheckReport> = catalog
        .iter()
        .filter_map(|e| match &e.state {
            EntryState::Failed(msg) => Some(CheckReport::skipped(
                format!("catalog/{}", e.label()),
                "entry closes to a group matching its metadata",
                msg.clone(),
            )),
            _ => None,
        })
        .collect();

    let results: Vec<Mutex<Vec<CheckReport>>> = suites.iter().map(|_| Mutex::new(Vec::new())).collect();
    let next = AtomicUsize::new(0);
    let workers = config.jobs.min(suites.len());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&suite) = suites.get(i) else { break };
                let out = run_suite(suite, &ctx);
                *results[i].lock().expect("no worker panics while holding the lock") = out;
            });
        }
    });
    for slot in results {
        reports.extend(slot.into_inner().expect("workers finished"));
    }
    let exit_code = exit_code(&reports);
    Ok(RunOutcome { reports, exit_code })
}
