use degbound_core::alt_bounds::{rectangle_scan, verify_cube_bound, verify_induction_step, CaseCheck, Verdict};
use degbound_core::exact::render_rational;
use degbound_core::report::kv;
use degbound_core::simple_orders::{steinberg_report, LieFamily, LieSpec};
use degbound_core::{CheckReport, Status};
use num_traits::Pow;

use super::{errored, timed_one, Context};
use crate::config::Suite;

const CUBE_CLAIM: &str = "d(A_n)^3 >= n!/2";

pub fn base_case(ctx: &Context<'_>) -> Vec<CheckReport> {
    ctx.config
        .n_range_for(Suite::AltBaseCase)
        .map(|n| timed_one(|| base_case_at(n)))
        .collect()
}

fn base_case_at(n: usize) -> CheckReport {
    let id = format!("alt-base-case/n={n}");
    if n == 6 {
        let spec = LieSpec::new(LieFamily::A, 1, 9).expect("A1(9) is simple");
        return match steinberg_report(&spec) {
            Ok(r) => CheckReport {
                id,
                claim: format!("{CUBE_CLAIM}, via A_6 = PSL(2,9): St(1)^3 > |S|"),
                witness: Some("Steinberg character of A1(9)".into()),
                ..r
            },
            Err(e) => errored(id, CUBE_CLAIM, &e),
        };
    }
    match verify_cube_bound(n) {
        Ok(r) => {
            let cube = Pow::pow(&r.d_alt.value, 3u32);
            CheckReport::decided(
                id,
                CUBE_CLAIM,
                r.cube_check,
                vec![
                    kv("n", n),
                    kv("d_alt", &r.d_alt.value),
                    kv("d_alt^3", cube),
                    kv("n!/2", &r.order),
                    kv("b_sym", &r.b_sym.value),
                    kv("b_alt", &r.b_alt.value),
                ],
            )
            .with_witness(r.d_alt.witness.to_string())
        }
        Err(e) => errored(id, CUBE_CLAIM, &e),
    }
}

const INDUCTION_CLAIM: &str = "cases 1, 2a and 2b: each left side >= (n+1)^(1/3)";

fn verdict(c: &CaseCheck) -> &'static str {
    match c.verdict {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Undecided => "undecided",
    }
}

pub fn induction(ctx: &Context<'_>) -> Vec<CheckReport> {
    ctx.config
        .n_range_for(Suite::AltInduction)
        .map(|n| timed_one(|| induction_at(n)))
        .collect()
}

fn induction_at(n: usize) -> CheckReport {
    let id = format!("alt-induction/n={n}");
    let r = match verify_induction_step(n) {
        Ok(r) => r,
        Err(e) => return errored(id, INDUCTION_CLAIM, &e),
    };
    let values = vec![
        kv("n", n),
        kv("case1", verdict(&r.case1)),
        kv("case1_lhs", render_rational(&r.case1.lhs_low)),
        kv("case2a", verdict(&r.case2a)),
        kv("case2a_lhs", render_rational(&r.case2a.lhs_low)),
        kv("case2b", verdict(&r.case2b)),
        kv("case2b_lhs_low", render_rational(&r.case2b.lhs_low)),
        kv("case2b_lhs_high", render_rational(&r.case2b.lhs_high)),
        kv("case2b_refinements", r.case2b.refinements),
    ];
    if r.any_undecided() {
        let mut u = CheckReport::undecided(id, INDUCTION_CLAIM, "an enclosure did not separate from the cube root");
        u.values = values;
        return u;
    }
    CheckReport::decided(id, INDUCTION_CLAIM, r.all_hold(), values)
}

pub fn rectangles(ctx: &Context<'_>) -> Vec<CheckReport> {
    let delta = &ctx.config.delta;
    ctx.config
        .n_range_for(Suite::Rectangles)
        .map(|n| {
            timed_one(|| {
                let id = format!("rectangles/n={n}");
                let claim = "some non-square rectangular degree exceeds (n!)^(1/2 - delta)";
                match rectangle_scan(n, delta) {
                    Ok(s) => {
                        let values = vec![
                            kv("n", n),
                            kv("delta", render_rational(delta)),
                            kv("best", &s.best.value),
                            kv("exponent", render_rational(&s.exponent)),
                            kv("rectangles", s.rectangles.len()),
                        ];
                        let witness = s.best.witness.to_string();
                        if s.exceeds {
                            CheckReport::decided(id, claim, true, values).with_witness(witness)
                        } else {
                            CheckReport {
                                status: Status::Skipped,
                                values,
                                witness: Some(witness),
                                reason: Some("asymptotic claim; threshold not reached at this n".into()),
                                ..CheckReport::skipped(id, claim, "")
                            }
                        }
                    }
                    Err(e) => errored(id, claim, &e),
                }
            })
        })
        .collect()
}
