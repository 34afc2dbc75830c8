use degbound_core::group_stats::verify_k_affine_le_module;
use degbound_core::matgroups::{
    count_size2_base_classes, is_irreducible, min_base_size, orbit_sizes, small_centralizer_witness,
    CentralizerExponent, MatGroup,
};
use degbound_core::report::kv;
use degbound_core::CheckReport;

use super::{errored, timed_one, Context};
use crate::catalog::{EntryState, AFFINE_CLASS_CHECK, BASE_CLASS_CHECK, ORBIT_CHECK};

fn render_sizes(sizes: &[usize]) -> String {
    let parts: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Runs `check` on every entry whose metadata requests it. Reserved slots
/// report awaiting-generators; affine entries are not linear groups.
fn requested(
    ctx: &Context<'_>,
    check: &str,
    claim: &str,
    mut run: impl FnMut(&MatGroup, String, bool) -> CheckReport,
) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for e in ctx.catalog {
        let Some(exp) = e.entry.expectation(check) else {
            continue;
        };
        let id = format!("{}/{check}", e.label());
        let report = match &e.state {
            EntryState::Reserved => CheckReport::awaiting_generators(
                id,
                claim,
                e.entry
                    .metadata
                    .note
                    .clone()
                    .unwrap_or_else(|| "no generators in the catalog".into()),
            ),
            EntryState::Failed(_) => continue,
            EntryState::Ready(_) => match e.linear() {
                Some(g) => timed_one(|| run(g, id, exp.expected_fail)),
                None => CheckReport::skipped(id, claim, "entry is not a linear group"),
            },
        };
        out.push(report);
    }
    out
}

fn decide(id: String, claim: &str, holds: bool, values: Vec<(String, String)>, expected_fail: bool) -> CheckReport {
    if expected_fail {
        CheckReport::expecting_failure(id, claim, holds, values)
    } else {
        CheckReport::decided(id, claim, holds, values)
    }
}

pub fn orbits(ctx: &Context<'_>) -> Vec<CheckReport> {
    let claim = "no v has |C_G(v)|^2 <= |G|, but some v has |C_G(v)|^3 <= |G|^2";
    requested(ctx, ORBIT_CHECK, claim, |g, id, expected_fail| {
        let half = small_centralizer_witness(g, CentralizerExponent::Half);
        let two_thirds = small_centralizer_witness(g, CentralizerExponent::TwoThirds);
        let min = half.min_centralizer as u128;
        let mut values = vec![
            kv("|G|", g.order()),
            kv("|V|", g.space_size()),
            kv("orbit_sizes", render_sizes(&orbit_sizes(g))),
            kv("min_stabilizer", min),
            kv("min_stabilizer^2", min * min),
        ];
        if let Some((v, c)) = &two_thirds.witness {
            values.push(kv("two_thirds_witness", v));
            values.push(kv("two_thirds_stabilizer", c));
        }
        let holds = half.witness.is_none() && two_thirds.witness.is_some();
        decide(id, claim, holds, values, expected_fail)
    })
}

/// Irreducible and solvable (so `p`-solvable) entries, or the reason an
/// entry does not qualify.
fn base_hypotheses(g: &MatGroup) -> Result<(), &'static str> {
    if !g.group().is_solvable() {
        return Err("p-solvability is only certified for solvable groups");
    }
    if !is_irreducible(g) {
        return Err("G is reducible");
    }
    Ok(())
}

pub fn bases(ctx: &Context<'_>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for e in ctx.catalog {
        let Some(g) = e.linear() else { continue };
        let id = format!("{}/min-base", e.label());
        let bound = if g.p() <= 3 { 3 } else { 2 };
        let claim = format!(
            "minimal base size <= {bound} for irreducible p-solvable G (p = {})",
            g.p()
        );
        out.push(timed_one(|| {
            if let Err(reason) = base_hypotheses(g) {
                return CheckReport::skipped(&id, claim.as_str(), reason);
            }
            match min_base_size(g, bound) {
                Ok(Some((size, w))) => {
                    let vs: Vec<String> = w.vectors.iter().map(|v| v.to_string()).collect();
                    CheckReport::decided(
                        &id,
                        claim.as_str(),
                        w.recheck(g) == 1,
                        vec![
                            kv("size", size),
                            kv("bound", bound),
                            kv("pointwise_stabilizer", w.recheck(g)),
                        ],
                    )
                    .with_witness(vs.join(" "))
                }
                Ok(None) => CheckReport::decided(&id, claim.as_str(), false, vec![kv("size", format!(">{bound}"))]),
                Err(err) => errored(&id, &claim, &err),
            }
        }));
    }
    let claim = "at least p pairwise non-equivalent bases of size 2";
    out.extend(requested(
        ctx,
        BASE_CLASS_CHECK,
        claim,
        |g, id, expected_fail| match count_size2_base_classes(g) {
            Ok(c) => decide(
                id,
                claim,
                c.classes >= g.p() as usize,
                vec![
                    kv("classes", c.classes),
                    kv("p", g.p()),
                    kv("base_pairs", c.base_pairs),
                    kv("all_regular", c.all_regular),
                ],
                expected_fail,
            ),
            Err(e) => errored(id, claim, &e),
        },
    ));
    out
}

pub fn lemma31(ctx: &Context<'_>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for e in ctx.catalog {
        let Some(g) = e.linear() else { continue };
        let reducible_ok = is_irreducible(g) || g.metadata.completely_reducible == Some(true);
        let solvable = g.group().is_solvable();
        let v = g.space_size();
        for (eps, name) in [
            (CentralizerExponent::TwoThirds, "centralizer-two-thirds"),
            (CentralizerExponent::Half, "centralizer-half"),
        ] {
            let id = format!("{}/{name}", e.label());
            let claim = format!("some v has |C_G(v)| <= |G|^({})", eps.as_str());
            out.push(timed_one(|| {
                if !reducible_ok {
                    return CheckReport::skipped(&id, claim.as_str(), "complete reducibility not established");
                }
                if !solvable {
                    return CheckReport::skipped(
                        &id,
                        claim.as_str(),
                        "p-solvability is only certified for solvable groups",
                    );
                }
                if eps == CentralizerExponent::Half && (v % 64 == 0 || v % 81 == 0) {
                    return CheckReport::skipped(&id, claim.as_str(), format!("|V| = {v} is divisible by 64 or 81"));
                }
                let scan = small_centralizer_witness(g, eps);
                let mut values = vec![
                    kv("|G|", g.order()),
                    kv("|V|", v),
                    kv("min_centralizer", scan.min_centralizer),
                ];
                match &scan.witness {
                    Some((w, c)) => {
                        values.push(kv("witness_centralizer", c));
                        CheckReport::decided(&id, claim.as_str(), true, values).with_witness(w.to_string())
                    }
                    None => CheckReport::decided(&id, claim.as_str(), false, values),
                }
            }));
        }
    }
    let claim = "k(HV) <= |V|";
    for e in ctx.catalog {
        let Some(exp) = e.entry.expectation(AFFINE_CLASS_CHECK) else {
            continue;
        };
        let id = format!("{}/{AFFINE_CLASS_CHECK}", e.label());
        let report = match &e.state {
            EntryState::Failed(_) => continue,
            EntryState::Reserved => match verify_k_affine_le_module(&id, None, ctx.config.cap, exp.expected_fail) {
                Ok(r) => r.with_reason(
                    e.entry
                        .metadata
                        .note
                        .clone()
                        .unwrap_or_else(|| "no generators in the catalog".into()),
                ),
                Err(err) => errored(&id, claim, &err),
            },
            EntryState::Ready(_) => match e.linear() {
                Some(g) => timed_one(|| {
                    verify_k_affine_le_module(&id, Some(g), ctx.config.cap, exp.expected_fail)
                        .unwrap_or_else(|err| errored(&id, claim, &err))
                }),
                None => CheckReport::skipped(&id, claim, "entry is not a linear group"),
            },
        };
        out.push(report);
    }
    out
}
