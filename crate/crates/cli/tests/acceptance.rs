//! Acceptance suite. Prints one line per criterion and exits non-zero when a
//! criterion fails in a way that is not already documented.
//!
//! Criteria 2 and 5 are known to fail as stated: the third induction
//! inequality is false at n = 33 and n = 34, and the PSL(2, q) ratio reaches 3
//! at q = 5 and q = 7. Both still print FAIL; the runner only checks that
//! the failure is exactly the documented one.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use degbound::suites::{run_suite, Context};
use degbound::{run, RunConfig, RunOutcome, Suite};
use degbound_core::exact::{compare_to_root, factorial, rational};
use degbound_core::partitions::enumerate_partitions;
use degbound_core::simple_orders::{lie_order, LieFamily, LieSpec, SteinbergGrid};
use degbound_core::{BigNat, Partition, RootDegree, Status};

/// Runtime limits in seconds, by criterion.
const LIMITS: [(u32, f64); 10] = [
    (1, 10.0),
    (2, 10.0),
    (3, 60.0),
    (4, 5.0),
    (5, 1.0),
    (6, 1.0),
    (7, 1.0),
    (8, 5.0),
    (9, 120.0),
    (10, 1.0),
];

/// Criteria whose statement is false, with the failure detail they must
/// reproduce.
const KNOWN_RED: [(u32, &str); 2] = [(2, "case 2b fails at n = 33, 34"), (5, "(q+1)^3/|S| >= 3 at q = 5, 7")];

type Criterion = (u32, &'static str, fn() -> Verdict);

struct Verdict {
    holds: bool,
    detail: String,
}

impl Verdict {
    fn new(holds: bool, detail: impl Into<String>) -> Self {
        Verdict {
            holds,
            detail: detail.into(),
        }
    }
}

fn suite(suites: &[Suite], tweak: impl FnOnce(&mut RunConfig)) -> RunOutcome {
    let mut config = RunConfig::with_suites(suites);
    tweak(&mut config);
    run(&config).expect("bundled inputs load")
}

fn status(outcome: &RunOutcome, id: &str) -> Option<Status> {
    outcome.report(id).map(|r| r.status)
}

fn value<'a>(outcome: &'a RunOutcome, id: &str, key: &str) -> Option<&'a str> {
    outcome.report(id).and_then(|r| r.value(key))
}

fn c1_base_case() -> Verdict {
    let out = suite(&[Suite::AltBaseCase], |c| c.n_range = Some(5..=30));
    let failed: Vec<&str> = out
        .reports
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| r.id.as_str())
        .collect();
    let a1_9 = lie_order(&LieSpec::new(LieFamily::A, 1, 9).unwrap()).unwrap();
    let n6 = a1_9.order == BigNat::from(360u32)
        && a1_9.p_part == BigNat::from(9u32)
        && value(&out, "alt-base-case/n=6", "p_part_cubed") == Some("729");
    Verdict::new(
        out.reports.len() == 26 && failed.is_empty() && n6,
        format!(
            "{} of 26 values of n pass; n = 6 via 9^3 = 729 > 360: {n6}",
            out.count(Status::Pass)
        ),
    )
}

fn c2_induction() -> Verdict {
    let out = suite(&[Suite::AltInduction], |c| c.n_range = Some(30..=1000));
    let undecided = out.count(Status::Undecided);
    let failing: Vec<&str> = out
        .reports
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| r.id.trim_start_matches("alt-induction/n="))
        .collect();
    let only_2b = out.reports.iter().filter(|r| r.status == Status::Fail).all(|r| {
        r.value("case1") == Some("holds") && r.value("case2a") == Some("holds") && r.value("case2b") == Some("fails")
    });
    let holds = out.reports.len() == 971 && failing.is_empty() && undecided == 0;
    let detail = if holds {
        "971 values of n, all three cases hold".to_string()
    } else if only_2b && undecided == 0 && failing == ["33", "34"] {
        "case 2b fails at n = 33, 34".to_string()
    } else {
        format!("failing n: {failing:?}, undecided: {undecided}")
    };
    Verdict::new(holds, detail)
}

fn c3_identities() -> Verdict {
    let mut problems = Vec::new();
    for n in 1..=30usize {
        let all = enumerate_partitions(n);
        if n <= 25 {
            let sum: BigNat = all
                .iter()
                .map(|l| {
                    let f = l.degree();
                    &f * &f
                })
                .sum();
            if sum != factorial(n as u64) {
                problems.push(format!("sum of squares at n = {n}"));
            }
        }
        let two_n = rational(2 * n as i64, 1);
        for lambda in &all {
            let a = lambda.addable();
            let r = lambda.removable();
            let sqrt_ok = compare_to_root(&rational(a.len() as i64 - 1, 1), &two_n, RootDegree::Square).is_lt()
                && compare_to_root(&rational(r.len() as i64, 1), &two_n, RootDegree::Square).is_lt();
            if a.len() != r.len() + 1 || !sqrt_ok {
                problems.push(format!("corners of {lambda}"));
            }
            if n <= 15 {
                let f = lambda.degree();
                let up: BigNat = a.results().map(Partition::degree).sum();
                let down: BigNat = r.results().map(Partition::degree).sum();
                if up != &f * BigNat::from(n + 1) || down != f {
                    problems.push(format!("branching at {lambda}"));
                }
            }
        }
    }
    Verdict::new(
        problems.is_empty(),
        if problems.is_empty() {
            "sum of squares n <= 25, branching n <= 15, corner bounds n <= 30".to_string()
        } else {
            problems.join("; ")
        },
    )
}

fn c4_steinberg() -> Verdict {
    let grid = SteinbergGrid::default();
    let covers = grid.linear_rank_max >= 5
        && grid.linear_q_max >= 32
        && grid.classical_rank_max >= 4
        && grid.classical_q_max >= 9;
    let out = suite(&[Suite::Lie], |_| {});
    let families: std::collections::BTreeSet<&str> = out
        .reports
        .iter()
        .filter_map(|r| r.id.strip_prefix("steinberg/")?.split('(').next())
        .map(|name| {
            if name.starts_with('A') {
                "A"
            } else {
                name.trim_end_matches(char::is_numeric)
            }
        })
        .collect();
    let required = ["A", "B", "C", "D", "2A", "2D", "3D", "G", "F", "2B"];
    let covered = required.iter().all(|f| families.contains(f));
    let all_pass = out.count(Status::Pass) == out.reports.len();
    Verdict::new(
        covers && all_pass && covered,
        format!(
            "{} groups, {} pass, {} families",
            out.reports.len(),
            out.count(Status::Pass),
            families.len()
        ),
    )
}

fn c5_tightness() -> Verdict {
    let out = suite(&[Suite::Psl2], |_| {});
    let tight = status(&out, "psl2/sl2-even-tightness") == Some(Status::Pass);
    let scan = out.report("psl2/ratio-scan");
    let scan_ok = scan.map(|r| r.status) == Some(Status::Pass);
    let witness = scan.and_then(|r| r.witness.as_deref()).unwrap_or("");
    let violations: Vec<&str> = witness
        .split("; ")
        .filter_map(|v| v.strip_prefix("q=").and_then(|v| v.split(':').next()))
        .collect();
    let detail = if tight && scan_ok {
        "tightness decreasing above 1; ratio below 3 on 4 <= q <= 1024".to_string()
    } else if tight && violations == ["5", "7"] {
        "(q+1)^3/|S| >= 3 at q = 5, 7".to_string()
    } else {
        format!("tightness ok: {tight}; ratio violations: {witness}")
    };
    Verdict::new(tight && scan_ok, detail)
}

fn sorted_sizes(s: Option<&str>) -> Vec<usize> {
    let mut v: Vec<usize> = s
        .unwrap_or("")
        .trim_matches(|c| c == '{' || c == '}')
        .split(',')
        .filter_map(|x| x.parse().ok())
        .collect();
    v.sort_unstable();
    v
}

fn c6_wreath_remark() -> Verdict {
    let out = suite(&[Suite::Orbits], |_| {});
    let check = |label: &str, sizes: &[usize], min: &str| {
        let id = format!("{label}/no-half-witness");
        status(&out, &id) == Some(Status::Pass)
            && sorted_sizes(value(&out, &id, "orbit_sizes")) == sizes
            && value(&out, &id, "min_stabilizer") == Some(min)
            && value(&out, &id, "two_thirds_witness").is_some()
    };
    let a = check("GL(2,2)wrS3", &[1, 9, 27, 27], "48");
    let b = check("GL(2,3)wrS2", &[1, 16, 64], "72");
    Verdict::new(a && b, format!("GL(2,2) wr S3: {a}; GL(2,3) wr S2: {b}"))
}

fn c7_base_classes() -> Verdict {
    let out = suite(&[Suite::Bases], |_| {});
    let expected = [
        ("GL(2,2)", "1", Status::ExpectedFail),
        ("SL(2,3)", "2", Status::ExpectedFail),
        ("GL(2,3)", "1", Status::ExpectedFail),
        ("GL(1,5)", "6", Status::Pass),
    ];
    let mut seen = Vec::new();
    let mut ok = true;
    for (label, classes, st) in expected {
        let id = format!("{label}/base-classes");
        let got = value(&out, &id, "classes");
        ok &= got == Some(classes) && status(&out, &id) == Some(st);
        seen.push(format!("{label}={}", got.unwrap_or("?")));
    }
    Verdict::new(ok, seen.join(" "))
}

fn c8_class_numbers() -> Verdict {
    let out = suite(&[Suite::Kstats, Suite::Inequalities], |_| {});
    let ok = value(&out, "AGL(2,3)/kstats", "k") == Some("11")
        && value(&out, "AGL(2,3)/kstats", "oracle_k") == Some("11")
        && status(&out, "AGL(2,3)/kstats") == Some(Status::Pass)
        && status(&out, "AGL(2,3)/k-le-fitting") == Some(Status::ExpectedFail)
        && value(&out, "AGL(2,3)/k-le-fitting", "|F(G)|") == Some("9")
        && status(&out, "AGL(2,3)/k-le-p-part") == Some(Status::Pass)
        && value(&out, "AGL(2,3)/k-le-p-part", "|G|_p") == Some("27")
        && status(&out, "AGL(2,3)/cp-bound") == Some(Status::Pass)
        && value(&out, "AGL(2,3)/cp-bound", "cp") == Some("11/432")
        && value(&out, "AGL(2,2)/kstats", "k") == Some("5")
        && status(&out, "AGL(2,2)/k-le-p-part") == Some(Status::Pass)
        && value(&out, "AGL(2,2)/k-le-p-part", "|G|_p") == Some("8");
    Verdict::new(
        ok,
        "k(AGL(2,3)) = 11 > 9 = |F| expected, 11 <= 27, cp = 11/432; k(S4) = 5 <= 8",
    )
}

fn c9_degrees() -> Verdict {
    let out = suite(&[Suite::Inequalities], |_| {});
    let catalog = degbound::ingest(
        degbound::load_catalog(None).unwrap(),
        degbound_core::matgroups::DEFAULT_CAP,
    );
    let mut checked = 0;
    let mut problems = Vec::new();
    for e in &catalog {
        let Some(order) = e.entry.metadata.order else { continue };
        if e.entry.is_reserved() || order > 5000 {
            continue;
        }
        let label = e.label();
        checked += 1;
        if status(&out, &format!("{label}/degree-identities")) != Some(Status::Pass) {
            problems.push(format!("{label} identities"));
        }
        if e.entry.metadata.solvable == Some(true) {
            for check in ["gluck-bound", "index-le-b4"] {
                if status(&out, &format!("{label}/{check}")) != Some(Status::Pass) {
                    problems.push(format!("{label} {check}"));
                }
            }
        }
    }
    let s4 = out
        .report("AGL(2,2)/degree-identities")
        .and_then(|r| r.witness.as_deref());
    if s4 != Some("[1,1,2,3,3]") {
        problems.push(format!("S4 degrees {s4:?}"));
    }
    Verdict::new(
        problems.is_empty() && checked > 0,
        if problems.is_empty() {
            format!("{checked} catalog groups; S4 degrees [1,1,2,3,3]")
        } else {
            problems.join("; ")
        },
    )
}

/// Runs the catalog suites on the reserved slots alone, so the timing
/// covers the gating and nothing else.
fn c10_gating() -> Verdict {
    let config = RunConfig::default();
    let reserved: Vec<_> = degbound::ingest(degbound::load_catalog(None).unwrap(), config.cap)
        .into_iter()
        .filter(|e| e.entry.is_reserved())
        .collect();
    let ctx = Context {
        config: &config,
        catalog: &reserved,
        sporadic: &[],
    };
    let reports: Vec<_> = Suite::ALL
        .iter()
        .filter(|s| s.uses_catalog())
        .flat_map(|&s| run_suite(s, &ctx))
        .collect();
    let exit_code = degbound::exit_code(&reports);
    let out = RunOutcome { reports, exit_code };
    let gated = [
        "3^(1+2).SL(2,3)<GL(6,2)/base-classes",
        "3^(1+2).GL(2,3)<GL(6,2)/base-classes",
        "(Q8*Q8)H<GL(4,3)/base-classes",
        "H1152<GL(4,3)/k-affine-le-module",
    ];
    let all_awaiting = gated
        .iter()
        .all(|id| status(&out, id) == Some(Status::AwaitingGenerators));
    Verdict::new(
        all_awaiting && out.exit_code == 0,
        format!(
            "{} awaiting-generators records, exit code {}",
            out.count(Status::AwaitingGenerators),
            out.exit_code
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "cube bound base case", c1_base_case),
        (2, "induction inequalities", c2_induction),
        (3, "degree identities", c3_identities),
        (4, "Steinberg grid", c4_steinberg),
        (5, "tightness ratios", c5_tightness),
        (6, "wreath product remark", c6_wreath_remark),
        (7, "size-2 base classes", c7_base_classes),
        (8, "class numbers", c8_class_numbers),
        (9, "character degrees", c9_degrees),
        (10, "generator gating", c10_gating),
    ];
    let limits: BTreeMap<u32, f64> = LIMITS.into_iter().collect();
    let known: BTreeMap<u32, &str> = KNOWN_RED.into_iter().collect();
    let mut unexpected = Vec::new();
    for (n, name, f) in criteria {
        let start = Instant::now();
        let v = f();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs_f64(limits[&n]);
        let in_time = elapsed <= limit;
        let pass = v.holds && in_time;
        println!(
            "{} criterion {n:>2} ({name}): {} [{:.3} s, limit {} s]",
            if pass { "PASS" } else { "FAIL" },
            v.detail,
            elapsed.as_secs_f64(),
            limits[&n]
        );
        if !pass {
            let documented = in_time && known.get(&n) == Some(&v.detail.as_str());
            if !documented {
                unexpected.push(n);
            }
        }
    }
    if unexpected.is_empty() {
        println!(
            "acceptance: only documented failures (criteria {:?})",
            known.keys().collect::<Vec<_>>()
        );
        ExitCode::SUCCESS
    } else {
        println!("acceptance: undocumented failures in criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
