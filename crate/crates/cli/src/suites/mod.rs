//! The check batches behind each subcommand.

mod alt;
mod linear;
mod simple;
mod stats;

use std::time::Instant;

use degbound_core::simple_orders::SporadicEntry;
use degbound_core::{CheckReport, Error};

use crate::catalog::IngestedEntry;
use crate::config::{RunConfig, Suite};

pub use simple::{mathieu_group, MATHIEU_GENERATORS};

/// Everything a suite may read.
pub struct Context<'a> {
    pub config: &'a RunConfig,
    pub catalog: &'a [IngestedEntry],
    pub sporadic: &'a [SporadicEntry],
}

pub fn run_suite(suite: Suite, ctx: &Context<'_>) -> Vec<CheckReport> {
    match suite {
        Suite::AltBaseCase => alt::base_case(ctx),
        Suite::AltInduction => alt::induction(ctx),
        Suite::Rectangles => alt::rectangles(ctx),
        Suite::Lie => simple::lie(ctx),
        Suite::Psl2 => simple::psl2(ctx),
        Suite::Sporadic => simple::sporadic(ctx),
        Suite::Orbits => linear::orbits(ctx),
        Suite::Bases => linear::bases(ctx),
        Suite::Lemma31 => linear::lemma31(ctx),
        Suite::Kstats => stats::kstats(ctx),
        Suite::Inequalities => stats::inequalities(ctx),
    }
}

/// Runs `f` and stamps its runtime on every report it returns.
fn timed(f: impl FnOnce() -> Vec<CheckReport>) -> Vec<CheckReport> {
    let start = Instant::now();
    let mut out = f();
    let micros = start.elapsed().as_micros() as u64;
    for r in &mut out {
        r.runtime_micros = Some(micros);
    }
    out
}

fn timed_one(f: impl FnOnce() -> CheckReport) -> CheckReport {
    timed(|| vec![f()]).pop().expect("one report")
}

/// A computation that could not produce a verdict.
fn errored(id: impl Into<String>, claim: &str, err: &Error) -> CheckReport {
    CheckReport::undecided(id, claim, err.to_string())
}
