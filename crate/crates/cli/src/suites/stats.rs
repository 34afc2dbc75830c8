use degbound_core::exact::render_rational;
use degbound_core::group::{FiniteGroup, GroupElement};
use degbound_core::group_stats::{
    commuting_probability, conjugacy_classes, conjugacy_classes_exhaustive, profile, verify_inequalities, GroupProfile,
    ProfileOptions,
};
use degbound_core::matgroups::GroupMetadata;
use degbound_core::report::kv;
use degbound_core::CheckReport;

use super::{errored, timed, Context};
use crate::catalog::{Construction, IngestedEntry};

/// Orders up to which classes are recomputed by conjugating with every
/// element.
pub const ORACLE_LIMIT: usize = 2000;

fn for_each_group(
    ctx: &Context<'_>,
    mut f: impl FnMut(&IngestedEntry, &Construction) -> Vec<CheckReport>,
) -> Vec<CheckReport> {
    ctx.catalog
        .iter()
        .filter_map(|e| Some((e, e.construction()?)))
        .flat_map(|(e, c)| timed(|| f(e, c)))
        .collect()
}

pub fn kstats(ctx: &Context<'_>) -> Vec<CheckReport> {
    for_each_group(ctx, |e, c| {
        vec![match c {
            Construction::Linear(g) => class_stats(e.label(), g.group()),
            Construction::Affine { g, .. } => class_stats(e.label(), g),
        }]
    })
}

fn class_stats<E: GroupElement>(label: &str, g: &FiniteGroup<E>) -> CheckReport {
    let id = format!("{label}/kstats");
    let claim =
        "class sizes divide |G| and sum to it; cp(G) = k(G)/|G| matches the pair count and the exhaustive class oracle";
    let classes = conjugacy_classes(g);
    let order = g.order();
    let sizes_ok =
        classes.sizes.iter().all(|&s| order.is_multiple_of(s)) && classes.sizes.iter().copied().sum::<usize>() == order;
    let cp = match commuting_probability(g, &classes) {
        Ok(cp) => cp,
        Err(e) => return errored(id, claim, &e),
    };
    let mut values = vec![
        kv("|G|", order),
        kv("k", classes.k()),
        kv("cp", render_rational(&cp.value)),
    ];
    if let Some(pairs) = cp.commuting_pairs {
        values.push(kv("commuting_pairs", pairs));
    }
    let mut oracle_ok = true;
    if order <= ORACLE_LIMIT {
        let oracle = conjugacy_classes_exhaustive(g);
        oracle_ok = oracle.class_of == classes.class_of;
        values.push(kv("oracle_k", oracle.k()));
    }
    let r = CheckReport::decided(id, claim, sizes_ok && oracle_ok, values);
    if order > ORACLE_LIMIT {
        r.with_reason(format!(
            "exhaustive oracle and pair count skipped above order {ORACLE_LIMIT}"
        ))
    } else {
        r
    }
}

pub fn inequalities(ctx: &Context<'_>) -> Vec<CheckReport> {
    let options = ProfileOptions {
        degree_cap: ctx.config.degree_cap,
        sylow_budget: ctx.config.sylow_budget,
    };
    for_each_group(ctx, |e, c| {
        let metadata = e.entry.group_metadata();
        match c {
            Construction::Linear(g) => battery(e, g.group(), &metadata, &options),
            Construction::Affine { g, .. } => battery(e, g, &metadata, &options),
        }
    })
}

fn battery<E: GroupElement>(
    e: &IngestedEntry,
    g: &FiniteGroup<E>,
    metadata: &GroupMetadata,
    options: &ProfileOptions,
) -> Vec<CheckReport> {
    let label = e.label();
    let prof = match profile(g, label, metadata, options) {
        Ok(p) => p,
        Err(err) => {
            return vec![errored(
                format!("{label}/profile"),
                "group profile matches its metadata",
                &err,
            )]
        }
    };
    let mut out = verify_inequalities(&prof, None, &e.entry.expectations());
    out.push(degree_identities(&prof));
    out
}

/// `Σ d^2 = |G|`, one degree per class, `d | |G|`, and `|G : G'|` linear
/// characters.
pub fn degree_identities(prof: &GroupProfile) -> CheckReport {
    let id = format!("{}/degree-identities", prof.label);
    let claim = "sum of d^2 = |G|, k degrees, each d divides |G|, |G:G'| linear characters";
    let degrees = match &prof.degrees {
        Ok(d) => d,
        Err(reason) => return CheckReport::skipped(id, claim, reason.clone()),
    };
    let sum: u64 = degrees.degrees.iter().map(|d| d * d).sum();
    let count_ok = degrees.degrees.len() == prof.k();
    let divides = degrees.degrees.iter().all(|d| prof.order.is_multiple_of(*d));
    let linear = degrees.multiplicity(1);
    let abelianization = prof.order as usize / prof.derived_order;
    let rendered: Vec<String> = degrees.degrees.iter().map(|d| d.to_string()).collect();
    CheckReport::decided(
        id,
        claim,
        sum == prof.order && count_ok && divides && linear == abelianization,
        vec![
            kv("|G|", prof.order),
            kv("sum_d^2", sum),
            kv("k", prof.k()),
            kv("b", degrees.b),
            kv("linear", linear),
            kv("|G:G'|", abelianization),
        ],
    )
    .with_witness(format!("[{}]", rendered.join(",")))
}
