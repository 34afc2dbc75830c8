use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Pow;

use crate::error::{Error, Result};
use crate::exact::{pi_part, prime_divisors, render_rational, BigNat};
use crate::group::{FiniteGroup, GroupElement};
use crate::matgroups::{GroupMetadata, MatGroup};
use crate::report::{kv, CheckReport};

use super::affine::affine_group;
use super::characters::{character_degrees, DegreeData, DEFAULT_DEGREE_CAP};
use super::classes::{commuting_probability, conjugacy_classes, ClassData, CommutingProbability};
use super::fitting::{fitting_order, FittingData, DEFAULT_SYLOW_BUDGET};

/// Check identifiers used by [`verify_inequalities`].
pub const CHECK_IDS: [&str; 8] = [
    "index-le-b4",
    "gluck-bound",
    "cp-bound",
    "k-le-pi-part",
    "hall-index-le-b2",
    "k-le-p-part",
    "k-le-fitting",
    "order-over-k-le-b2",
];

/// A catalog request to run a check, optionally expecting it to fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub check: String,
    pub expected_fail: bool,
}

impl Expectation {
    /// Parses `check-id` or `check-id=expected-fail`.
    pub fn parse(s: &str) -> Result<Expectation> {
        let (check, expected_fail) = match s.split_once('=') {
            None => (s.trim(), false),
            Some((c, "expected-fail")) => (c.trim(), true),
            Some((_, other)) => {
                return Err(Error::InvalidInput(format!("unknown expectation {other:?} in {s:?}")));
            }
        };
        if check.is_empty() {
            return Err(Error::InvalidInput(format!("empty check id in {s:?}")));
        }
        Ok(Expectation {
            check: check.to_string(),
            expected_fail,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileOptions {
    pub degree_cap: usize,
    pub sylow_budget: usize,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions {
            degree_cap: DEFAULT_DEGREE_CAP,
            sylow_budget: DEFAULT_SYLOW_BUDGET,
        }
    }
}

/// Everything the inequality battery needs about one group. Parts that
/// could not be computed carry the reason instead.
#[derive(Debug, Clone)]
pub struct GroupProfile {
    pub label: String,
    pub order: u64,
    pub classes: ClassData,
    pub cp: CommutingProbability,
    pub solvable: bool,
    pub derived_order: usize,
    pub fitting: core::result::Result<FittingData, String>,
    pub degrees: core::result::Result<DegreeData, String>,
}

impl GroupProfile {
    pub fn k(&self) -> usize {
        self.classes.k()
    }
}

pub fn profile<E: GroupElement>(
    g: &FiniteGroup<E>,
    label: &str,
    metadata: &GroupMetadata,
    options: &ProfileOptions,
) -> Result<GroupProfile> {
    let classes = conjugacy_classes(g);
    let cp = commuting_probability(g, &classes)?;
    let solvable = g.is_solvable();
    if let Some(claimed) = metadata.solvable {
        if claimed != solvable {
            return Err(Error::Inconsistent(format!(
                "{label}: metadata says solvable = {claimed}, computed {solvable}"
            )));
        }
    }
    let fitting = match fitting_order(g, &classes, metadata.fitting_order, options.sylow_budget) {
        Ok(f) => Ok(f),
        Err(Error::Unavailable(r)) => Err(r),
        Err(e) => return Err(e),
    };
    let degrees = match character_degrees(g, &classes, options.degree_cap) {
        Ok(d) => Ok(d),
        Err(Error::CapExceeded { cap }) => Err(format!("|G| = {} exceeds the degree cap {cap}", g.order())),
        Err(e) => return Err(e),
    };
    Ok(GroupProfile {
        label: label.to_string(),
        order: g.order() as u64,
        derived_order: g.derived_subgroup_order(),
        classes,
        cp,
        solvable,
        fitting,
        degrees,
    })
}

fn nat(x: u64) -> BigNat {
    BigNat::from(x)
}

struct Battery<'a> {
    label: &'a str,
    expectations: &'a [Expectation],
    out: Vec<CheckReport>,
}

impl Battery<'_> {
    fn id(&self, check: &str) -> String {
        format!("{}/{check}", self.label)
    }

    fn decided(&mut self, check: &str, claim: &str, holds: bool, values: Vec<(String, String)>) {
        let id = self.id(check);
        let expected_fail = self.expectations.iter().any(|e| e.check == check && e.expected_fail);
        self.out.push(if expected_fail {
            CheckReport::expecting_failure(id, claim, holds, values)
        } else {
            CheckReport::decided(id, claim, holds, values)
        });
    }

    fn skipped(&mut self, check: &str, claim: &str, reason: impl Into<String>) {
        let id = self.id(check);
        self.out.push(CheckReport::skipped(id, claim, reason));
    }

    fn requested(&self, check: &str) -> bool {
        self.expectations.iter().any(|e| e.check == check)
    }
}

/// One report per check in [`CHECK_IDS`], in that order.
///
/// `pi` defaults to the prime divisors of `|F(G)|`. The bare inequality
/// `k(G) <= |F(G)|` is not a theorem and only runs when `expectations`
/// requests it.
pub fn verify_inequalities(
    profile: &GroupProfile,
    pi: Option<&[u64]>,
    expectations: &[Expectation],
) -> Vec<CheckReport> {
    let mut bat = Battery {
        label: &profile.label,
        expectations,
        out: Vec::new(),
    };
    let order = nat(profile.order);
    let k = nat(profile.k() as u64);
    let fitting = profile.fitting.as_ref().map(|f| f.order);
    let b = profile.degrees.as_ref().map(|d| d.b);
    let missing = |what: &str, why: &String| format!("{what} unavailable: {why}");

    let claim = "|G:F(G)| <= b(G)^4";
    match (&fitting, &b) {
        (Ok(f), Ok(b)) => {
            let index = profile.order / f;
            let b4 = Pow::pow(nat(*b), 4u32);
            bat.decided(
                "index-le-b4",
                claim,
                nat(index) <= b4,
                vec![kv("index", index), kv("b", b), kv("b^4", b4)],
            );
        }
        (Err(r), _) => bat.skipped("index-le-b4", claim, missing("|F(G)|", r)),
        (_, Err(r)) => bat.skipped("index-le-b4", claim, missing("b(G)", r)),
    }

    let claim = "|G:F(G)| <= b(G)^2 for solvable G";
    match (&fitting, &b) {
        _ if !profile.solvable => bat.skipped("gluck-bound", claim, "G is not solvable"),
        (Ok(f), Ok(b)) => {
            let index = profile.order / f;
            bat.decided(
                "gluck-bound",
                claim,
                index <= b * b,
                vec![kv("index", index), kv("b", b), kv("b^2", b * b)],
            );
        }
        (Err(r), _) => bat.skipped("gluck-bound", claim, missing("|F(G)|", r)),
        (_, Err(r)) => bat.skipped("gluck-bound", claim, missing("b(G)", r)),
    }

    let claim = "cp(G) <= |G:F(G)|^(-1/2), i.e. k^2 |G:F(G)| <= |G|^2";
    match &fitting {
        Ok(f) => {
            let index = profile.order / f;
            let lhs = &k * &k * nat(index);
            let rhs = &order * &order;
            bat.decided(
                "cp-bound",
                claim,
                lhs <= rhs,
                vec![
                    kv("cp", render_rational(&profile.cp.value)),
                    kv("index", index),
                    kv("k^2*index", &lhs),
                    kv("|G|^2", &rhs),
                ],
            );
        }
        Err(r) => bat.skipped("cp-bound", claim, missing("|F(G)|", r)),
    }

    let primes: core::result::Result<Vec<u64>, String> = match (pi, &fitting) {
        (Some(p), _) => Ok(p.to_vec()),
        (None, Ok(f)) => Ok(prime_divisors(&nat(*f))),
        (None, Err(r)) => Err(missing("|F(G)|", r)),
    };
    let render_primes = |ps: &[u64]| {
        let inner: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        format!("{{{}}}", inner.join(","))
    };

    let claim = "k(G) <= |G|_pi, pi the primes dividing |F(G)|";
    match &primes {
        _ if !profile.solvable => bat.skipped("k-le-pi-part", claim, "pi-solvability is only certified for solvable G"),
        Ok(ps) => {
            let part = pi_part(&order, ps).expect("prime divisors are prime");
            bat.decided(
                "k-le-pi-part",
                claim,
                k <= part,
                vec![kv("k", &k), kv("pi", render_primes(ps)), kv("|G|_pi", part)],
            );
        }
        Err(r) => bat.skipped("k-le-pi-part", claim, r.clone()),
    }

    let claim = "|G:H| <= b(G)^2 for a Hall pi-subgroup H";
    match (&primes, &b) {
        _ if !profile.solvable => bat.skipped("hall-index-le-b2", claim, "G is not solvable"),
        (Ok(ps), Ok(b)) => {
            let part = pi_part(&order, ps).expect("prime divisors are prime");
            let index = &order / &part;
            bat.decided(
                "hall-index-le-b2",
                claim,
                index <= nat(b * b),
                vec![kv("pi", render_primes(ps)), kv("|G:H|", index), kv("b^2", b * b)],
            );
        }
        (Err(r), _) => bat.skipped("hall-index-le-b2", claim, r.clone()),
        (_, Err(r)) => bat.skipped("hall-index-le-b2", claim, missing("b(G)", r)),
    }

    let claim = "k(G) <= |G|_p when F(G) is a p-group";
    match &fitting {
        _ if !profile.solvable => bat.skipped("k-le-p-part", claim, "G is not solvable"),
        Ok(f) => {
            let ps = prime_divisors(&nat(*f));
            if ps.len() == 1 {
                let part = pi_part(&order, &ps).expect("prime");
                bat.decided(
                    "k-le-p-part",
                    claim,
                    k <= part,
                    vec![kv("k", &k), kv("p", ps[0]), kv("|G|_p", part)],
                );
            } else {
                bat.skipped("k-le-p-part", claim, format!("|F(G)| = {f} is not a prime power"));
            }
        }
        Err(r) => bat.skipped("k-le-p-part", claim, missing("|F(G)|", r)),
    }

    let claim = "k(G) <= |F(G)|";
    match &fitting {
        _ if !bat.requested("k-le-fitting") => bat.skipped(
            "k-le-fitting",
            claim,
            "not a general theorem; runs only where the catalog requests it",
        ),
        Ok(f) => bat.decided("k-le-fitting", claim, k <= nat(*f), vec![kv("k", &k), kv("|F(G)|", f)]),
        Err(r) => bat.skipped("k-le-fitting", claim, missing("|F(G)|", r)),
    }

    let claim = "|G|/k(G) <= b(G)^2";
    match &b {
        Ok(b) => {
            let lhs = render_rational(&(crate::exact::nat_to_rational(&order) / crate::exact::nat_to_rational(&k)));
            bat.decided(
                "order-over-k-le-b2",
                claim,
                order <= &k * nat(b * b),
                vec![kv("|G|/k", lhs), kv("b^2", b * b)],
            );
        }
        Err(r) => bat.skipped("order-over-k-le-b2", claim, missing("b(G)", r)),
    }

    bat.out
}

/// `k(HV) <= |V|` for the split extension of `h` by its natural module.
///
/// Without generators the check reports awaiting-generators.
pub fn verify_k_affine_le_module(
    id: &str,
    h: Option<&MatGroup>,
    cap: usize,
    expected_fail: bool,
) -> Result<CheckReport> {
    let claim = "k(HV) <= |V|";
    let Some(h) = h else {
        return Ok(CheckReport::awaiting_generators(
            id,
            claim,
            "no generators supplied for H",
        ));
    };
    let g = affine_group(h, cap)?;
    let k = conjugacy_classes(&g).k();
    let module = h.space_size();
    let values = vec![
        kv("|H|", h.order()),
        kv("|HV|", g.order()),
        kv("k(HV)", k),
        kv("|V|", module),
    ];
    Ok(if expected_fail {
        CheckReport::expecting_failure(id, claim, k <= module, values)
    } else {
        CheckReport::decided(id, claim, k <= module, values)
    })
}
