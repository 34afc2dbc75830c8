use degbound_core::exact::{render_rational, BigNat};
use degbound_core::group::{FiniteGroup, Permutation};
use degbound_core::group_stats::{character_degrees, conjugacy_classes};
use degbound_core::report::kv;
use degbound_core::simple_orders::{
    prime_power, psl2_profile, sl2_even_tightness, sporadic_check, steinberg_report, Provenance, SteinbergGrid,
};
use degbound_core::{CheckReport, Error, ExactRational, Result};
use num_traits::One;

use super::{errored, timed, timed_one, Context};

pub fn grid(ctx: &Context<'_>) -> SteinbergGrid {
    let mut g = SteinbergGrid::default();
    if let Some(q) = ctx.config.q_max {
        g.linear_q_max = q;
        g.classical_q_max = q;
        g.exceptional_q_max = q;
        g.twisted_q_max = q;
    }
    if let Some(r) = ctx.config.rank_max {
        g.linear_rank_max = r;
        g.classical_rank_max = r;
    }
    g
}

pub fn lie(ctx: &Context<'_>) -> Vec<CheckReport> {
    grid(ctx)
        .specs()
        .into_iter()
        .map(|spec| {
            timed_one(|| {
                steinberg_report(&spec)
                    .unwrap_or_else(|e| errored(format!("steinberg/{}", spec.name()), "|S|_p^3 > |S|", &e))
            })
        })
        .collect()
}

/// Largest `f` in the `SL(2, 2^f)` tightness scan.
pub const TIGHTNESS_F_MAX: u32 = 20;
/// Default upper end of the `PSL(2, q)` ratio scan.
pub const PSL2_Q_MAX: u64 = 1024;

pub fn psl2(ctx: &Context<'_>) -> Vec<CheckReport> {
    let q_max = ctx.config.q_max.unwrap_or(PSL2_Q_MAX);
    vec![timed_one(tightness), timed_one(|| ratio_scan(q_max))]
}

fn tightness() -> CheckReport {
    let id = "psl2/sl2-even-tightness";
    let claim = "(2^f+1)^3 / (2^f(4^f-1)) > 1 and strictly decreasing for 2 <= f <= 20";
    let ratios: Result<Vec<ExactRational>> = (2..=TIGHTNESS_F_MAX).map(sl2_even_tightness).collect();
    let ratios = match ratios {
        Ok(r) => r,
        Err(e) => return errored(id, claim, &e),
    };
    let one = ExactRational::one();
    let above_one = ratios.iter().all(|r| *r > one);
    let decreasing = ratios.windows(2).all(|w| w[0] > w[1]);
    CheckReport::decided(
        id,
        claim,
        above_one && decreasing,
        vec![
            kv("f=2", render_rational(&ratios[0])),
            kv("f=20", render_rational(ratios.last().expect("nonempty"))),
            kv("all_above_one", above_one),
            kv("strictly_decreasing", decreasing),
        ],
    )
}

fn ratio_scan(q_max: u64) -> CheckReport {
    let id = "psl2/ratio-scan";
    let claim = format!("(q+1)^3 / |PSL(2,q)| < 3 for prime powers 4 <= q <= {q_max}");
    let three = ExactRational::from_integer(3.into());
    let mut scanned = 0usize;
    let mut violations = Vec::new();
    let mut last = None;
    for q in (4..=q_max).filter(|&q| prime_power(q).is_some()) {
        let profile = match psl2_profile(q) {
            Ok(p) => p,
            Err(e) => return errored(id, &claim, &e),
        };
        scanned += 1;
        if profile.ratio_q_plus_one >= three {
            violations.push(format!("q={q}: {}", render_rational(&profile.ratio_q_plus_one)));
        }
        last = Some(profile);
    }
    let Some(last) = last else {
        return CheckReport::skipped(id, claim, format!("no prime power in [4, {q_max}]"));
    };
    let values = vec![
        kv("prime_powers_scanned", scanned),
        kv("violations", violations.len()),
        kv(
            &format!("ratio at q={}", last.q),
            render_rational(&last.ratio_q_plus_one),
        ),
    ];
    let holds = violations.is_empty();
    let mut r = CheckReport::decided(id, claim, holds, values);
    if !holds {
        r.witness = Some(violations.join("; "));
    }
    r
}

/// One permutation as a list of 1-based cycles.
pub type Cycles = &'static [&'static [usize]];

/// Permutation generators (1-based cycles) of the Mathieu groups the
/// sporadic suite recomputes.
pub const MATHIEU_GENERATORS: &[(&str, usize, &[Cycles])] = &[
    (
        "M11",
        11,
        &[
            &[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]],
            &[&[3, 7, 11, 8], &[4, 10, 5, 6]],
        ],
    ),
    (
        "M12",
        12,
        &[
            &[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]],
            &[&[3, 7, 11, 8], &[4, 10, 5, 6]],
            &[&[1, 12], &[2, 11], &[3, 6], &[4, 8], &[5, 9], &[7, 10]],
        ],
    ),
];

/// The named Mathieu group as an enumerated permutation group.
pub fn mathieu_group(name: &str, cap: usize) -> Result<FiniteGroup<Permutation>> {
    let (_, degree, gens) = MATHIEU_GENERATORS
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| Error::InvalidInput(format!("no generators for {name}")))?;
    let gens: Result<Vec<Permutation>> = gens.iter().map(|c| Permutation::from_cycles(*degree, c)).collect();
    FiniteGroup::close(Permutation::identity(*degree), &gens?, cap)
}

pub fn sporadic(ctx: &Context<'_>) -> Vec<CheckReport> {
    let mut out = timed(|| match sporadic_check(ctx.sporadic, None) {
        Ok(r) => r,
        Err(e) => vec![errored("sporadic", "d(S)^3 >= |S|", &e)],
    });
    for entry in ctx.sporadic.iter().filter(|e| e.provenance == Provenance::Computed) {
        out.push(timed_one(|| {
            recompute(ctx, &entry.name, &entry.order, entry.d_value.as_ref())
        }));
    }
    out
}

/// Recomputes the largest degree of a tabulated group with trivial or
/// cyclic outer automorphism group. A degree occurring once is fixed by
/// every automorphism, hence extends, so it is the d-value.
fn recompute(ctx: &Context<'_>, name: &str, order: &BigNat, d: Option<&BigNat>) -> CheckReport {
    let id = format!("sporadic/{name}/recomputed");
    let claim = "the largest degree occurs once and equals the tabulated d-value";
    let cap = ctx.config.degree_cap;
    let Some(d) = d else {
        return CheckReport::skipped(id, claim, "no tabulated d-value");
    };
    if *order > BigNat::from(cap) {
        return CheckReport::skipped(id, claim, format!("|G| = {order} exceeds the degree cap {cap}"));
    }
    let g = match mathieu_group(name, cap) {
        Ok(g) => g,
        Err(e) => return errored(id, claim, &e),
    };
    if BigNat::from(g.order()) != *order {
        let e = Error::Inconsistent(format!("generators give order {}, table says {order}", g.order()));
        return errored(id, claim, &e);
    }
    let classes = conjugacy_classes(&g);
    match character_degrees(&g, &classes, cap) {
        Ok(deg) => {
            let mult = deg.multiplicity(deg.b);
            CheckReport::decided(
                id,
                claim,
                mult == 1 && BigNat::from(deg.b) == *d,
                vec![
                    kv("order", g.order()),
                    kv("k", classes.k()),
                    kv("b", deg.b),
                    kv("multiplicity", mult),
                    kv("d", d),
                ],
            )
        }
        Err(e) => errored(id, claim, &e),
    }
}
