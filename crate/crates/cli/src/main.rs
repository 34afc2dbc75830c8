use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use degbound::config::{parse_n_range, parse_rational};
use degbound::render::render;
use degbound::{run, Format, RunConfig, Suite};
use degbound_core::group_stats::{DEFAULT_DEGREE_CAP, DEFAULT_SYLOW_BUDGET};
use degbound_core::matgroups::DEFAULT_CAP;
use degbound_core::ExactRational;

/// Exact verification of character-degree bounds for finite groups.
///
/// Exit status: 0 when every check passes or fails as expected, 1 on an
/// unexpected failure or an undecided check, 2 on malformed input.
#[derive(Parser, Debug)]
#[command(name = "degbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Range of n for the alternating-group suites, e.g. 5..30 (inclusive).
    #[arg(long, global = true, value_parser = parse_n_range)]
    n: Option<RangeInclusive<usize>>,

    /// Largest q for the Lie-type grid and the PSL(2,q) scan.
    #[arg(long, global = true)]
    q_max: Option<u64>,

    /// Largest rank for the linear and classical Lie-type families.
    #[arg(long, global = true)]
    rank_max: Option<u32>,

    /// Matrix-group catalog (JSON); defaults to the bundled catalog.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,

    /// Sporadic table (name|order|d|provenance lines); defaults to the bundled table.
    #[arg(long, global = true)]
    sporadic_table: Option<PathBuf>,

    /// Output format: table or json.
    #[arg(long, global = true, default_value = "table")]
    format: Format,

    /// Number of suites run concurrently.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Enumeration cap for matrix and affine groups.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    /// Largest group order for character-degree computations.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    degree_cap: usize,

    /// Step budget for Sylow subgroup construction.
    #[arg(long, global = true, default_value_t = DEFAULT_SYLOW_BUDGET)]
    sylow_budget: usize,

    /// delta for the rectangle scan, as a rational in (0, 1/2).
    #[arg(long, global = true, value_parser = parse_rational, default_value = "1/4")]
    delta: ExactRational,

    /// Print per-check runtimes (makes output non-reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Cube bound for A_n over the base range (default 5..30).
    AltBaseCase,
    /// Induction-step inequalities (default 30..1000).
    AltInduction,
    /// Rectangular shapes against (n!)^(1/2 - delta).
    Rectangles,
    /// Steinberg cube check over the Lie-type grid.
    #[command(alias = "lie-steinberg")]
    Lie,
    /// PSL(2,q) and SL(2,2^f) tightness ratios.
    Psl2,
    /// Sporadic d-value table.
    Sporadic,
    /// Orbit and centralizer counterexamples for the wreath products.
    #[command(alias = "wreath-remark")]
    Orbits,
    /// Base sizes and size-2 base classes.
    #[command(alias = "dolfi-bases")]
    Bases,
    /// Small-centralizer witnesses and k(HV) <= |V|.
    Lemma31,
    /// Class counts and commuting probabilities.
    Kstats,
    /// Inequality battery and character-degree identities.
    Inequalities,
    /// Every suite.
    All,
}

impl Command {
    fn suites(self) -> Vec<Suite> {
        let one = |s| vec![s];
        match self {
            Command::AltBaseCase => one(Suite::AltBaseCase),
            Command::AltInduction => one(Suite::AltInduction),
            Command::Rectangles => one(Suite::Rectangles),
            Command::Lie => one(Suite::Lie),
            Command::Psl2 => one(Suite::Psl2),
            Command::Sporadic => one(Suite::Sporadic),
            Command::Orbits => one(Suite::Orbits),
            Command::Bases => one(Suite::Bases),
            Command::Lemma31 => one(Suite::Lemma31),
            Command::Kstats => one(Suite::Kstats),
            Command::Inequalities => one(Suite::Inequalities),
            Command::All => Suite::ALL.to_vec(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut suites = cli.command.suites();
    if cli.n.is_some() && cli.command == Command::All {
        suites.retain(|s| s.default_n_range().is_none() || cli.n.as_ref().is_some_and(|r| *r.start() >= s.min_n()));
    }
    let config = RunConfig {
        suites,
        n_range: cli.n,
        q_max: cli.q_max,
        rank_max: cli.rank_max,
        catalog: cli.catalog,
        sporadic_table: cli.sporadic_table,
        format: cli.format,
        jobs: cli.jobs,
        cap: cli.cap,
        degree_cap: cli.degree_cap,
        sylow_budget: cli.sylow_budget,
        delta: cli.delta,
        timings: cli.timings,
    };
    match run(&config) {
        Ok(outcome) => {
            print!(
                "{}",
                render(&outcome.reports, config.format, outcome.exit_code, config.timings)
            );
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("degbound: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
