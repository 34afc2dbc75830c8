use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use degbound_core::exact::rational;
use degbound_core::group_stats::{DEFAULT_DEGREE_CAP, DEFAULT_SYLOW_BUDGET};
use degbound_core::matgroups::DEFAULT_CAP;
use degbound_core::ExactRational;

/// One batch of related checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    AltBaseCase,
    AltInduction,
    Rectangles,
    Lie,
    Psl2,
    Sporadic,
    Orbits,
    Bases,
    Lemma31,
    Kstats,
    Inequalities,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::AltBaseCase,
        Suite::AltInduction,
        Suite::Rectangles,
        Suite::Lie,
        Suite::Psl2,
        Suite::Sporadic,
        Suite::Orbits,
        Suite::Bases,
        Suite::Lemma31,
        Suite::Kstats,
        Suite::Inequalities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::AltBaseCase => "alt-base-case",
            Suite::AltInduction => "alt-induction",
            Suite::Rectangles => "rectangles",
            Suite::Lie => "lie",
            Suite::Psl2 => "psl2",
            Suite::Sporadic => "sporadic",
            Suite::Orbits => "orbits",
            Suite::Bases => "bases",
            Suite::Lemma31 => "lemma31",
            Suite::Kstats => "kstats",
            Suite::Inequalities => "inequalities",
        }
    }

    /// Default `n` range for the suites indexed by `n`.
    pub fn default_n_range(self) -> Option<RangeInclusive<usize>> {
        match self {
            Suite::AltBaseCase => Some(5..=30),
            Suite::AltInduction => Some(30..=1000),
            Suite::Rectangles => Some(4..=100),
            _ => None,
        }
    }

    /// Smallest `n` the suite accepts.
    pub fn min_n(self) -> usize {
        match self {
            Suite::AltBaseCase => 5,
            Suite::AltInduction => 30,
            Suite::Rectangles => 4,
            _ => 0,
        }
    }

    pub fn uses_catalog(self) -> bool {
        matches!(
            self,
            Suite::Orbits | Suite::Bases | Suite::Lemma31 | Suite::Kstats | Suite::Inequalities
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let suite = match s {
            "alt-base-case" => Suite::AltBaseCase,
            "alt-induction" => Suite::AltInduction,
            "rectangles" => Suite::Rectangles,
            "lie" | "lie-steinberg" => Suite::Lie,
            "psl2" => Suite::Psl2,
            "sporadic" => Suite::Sporadic,
            "orbits" | "wreath-remark" => Suite::Orbits,
            "bases" | "dolfi-bases" => Suite::Bases,
            "lemma31" => Suite::Lemma31,
            "kstats" => Suite::Kstats,
            "inequalities" => Suite::Inequalities,
            other => return Err(ConfigError::UnknownSuite(other.to_string())),
        };
        Ok(suite)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            other => Err(ConfigError::Invalid(format!(
                "unknown format {other:?}, expected table or json"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("no suite selected")]
    NoSuites,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{0}")]
    Invalid(String),
}

/// Parses `a..b` or `a..=b` (both inclusive) or a single `n`.
pub fn parse_n_range(s: &str) -> Result<RangeInclusive<usize>, ConfigError> {
    let bad = || ConfigError::Invalid(format!("malformed range {s:?}, expected N, A..B or A..=B"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = match s.split_once("..") {
        None => {
            let n = num(s)?;
            n..=n
        }
        Some((lo, hi)) => num(lo)?..=num(hi.strip_prefix('=').unwrap_or(hi))?,
    };
    if range.is_empty() {
        return Err(ConfigError::Invalid(format!("empty range {s:?}")));
    }
    Ok(range)
}

/// Parses a rational such as `1/4` or `3`.
pub fn parse_rational(s: &str) -> Result<ExactRational, ConfigError> {
    s.trim()
        .parse::<ExactRational>()
        .map_err(|_| ConfigError::Invalid(format!("malformed rational {s:?}")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub suites: Vec<Suite>,
    /// Overrides the default `n` range of every `n`-indexed suite.
    pub n_range: Option<RangeInclusive<usize>>,
    pub q_max: Option<u64>,
    pub rank_max: Option<u32>,
    /// Catalog file; the bundled catalog when absent.
    pub catalog: Option<PathBuf>,
    /// Sporadic table file; the bundled table when absent.
    pub sporadic_table: Option<PathBuf>,
    pub format: Format,
    pub jobs: usize,
    /// Enumeration cap for matrix and affine groups.
    pub cap: usize,
    /// Largest group order for character degrees.
    pub degree_cap: usize,
    pub sylow_budget: usize,
    /// `δ` for the rectangle scan.
    pub delta: ExactRational,
    /// Include per-check runtimes in the output.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suites: Vec::new(),
            n_range: None,
            q_max: None,
            rank_max: None,
            catalog: None,
            sporadic_table: None,
            format: Format::Table,
            jobs: 1,
            cap: DEFAULT_CAP,
            degree_cap: DEFAULT_DEGREE_CAP,
            sylow_budget: DEFAULT_SYLOW_BUDGET,
            delta: rational(1, 4),
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn with_suites(suites: &[Suite]) -> Self {
        RunConfig {
            suites: suites.to_vec(),
            ..RunConfig::default()
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.suites.is_empty() {
            return Err(ConfigError::NoSuites);
        }
        if let Some(r) = &self.n_range {
            if r.is_empty() {
                return Err(ConfigError::Invalid("n range is empty".into()));
            }
            for s in &self.suites {
                if s.default_n_range().is_some() && *r.start() < s.min_n() {
                    return Err(ConfigError::Invalid(format!(
                        "suite {s} needs n >= {}, range starts at {}",
                        s.min_n(),
                        r.start()
                    )));
                }
            }
        }
        for (name, v) in [
            ("jobs", self.jobs),
            ("cap", self.cap),
            ("degree cap", self.degree_cap),
            ("sylow budget", self.sylow_budget),
        ] {
            if v == 0 {
                return Err(ConfigError::Invalid(format!("{name} must be positive")));
            }
        }
        if matches!(self.q_max, Some(q) if q < 2) {
            return Err(ConfigError::Invalid("q-max must be at least 2".into()));
        }
        if self.rank_max == Some(0) {
            return Err(ConfigError::Invalid("rank-max must be positive".into()));
        }
        if self.delta <= rational(0, 1) || self.delta >= rational(1, 2) {
            return Err(ConfigError::Invalid(format!(
                "delta must lie in (0, 1/2), got {}",
                self.delta
            )));
        }
        Ok(())
    }

    pub fn n_range_for(&self, suite: Suite) -> RangeInclusive<usize> {
        self.n_range
            .clone()
            .or_else(|| suite.default_n_range())
            .unwrap_or(0..=0)
    }
}
