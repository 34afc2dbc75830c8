//! Largest character degrees of symmetric and alternating groups, and the
//! exact checks behind the cube bound `d(A_n)^3 >= n!/2`.
//!
//! `d_alt(n)` is the largest degree of an irreducible character of `A_n`
//! that extends to `S_n`, i.e. the largest `f_λ` over non-self-conjugate
//! `λ ⊢ n`. For `n != 6` this is the largest degree extending to
//! `Aut(A_n) = S_n`; for `n = 6` the report is flagged as not covering the
//! full automorphism group.

use core::cmp::Ordering;

use alloc::format;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

use crate::error::{Error, Result};
use crate::exact::{ceil_sqrt, compare_to_root, factorial, rational, refine_until, BigNat, ExactRational, RootDegree};
use crate::partitions::{alt_from_degree, partitions, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremum {
    pub value: BigNat,
    /// First partition in reverse lexicographic order attaining `value`.
    pub witness: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub n: usize,
    pub b_sym: Extremum,
    pub b_alt: Extremum,
    /// `None` only for `n = 1`, where the single partition is self-conjugate.
    pub d_alt: Option<Extremum>,
}

fn bump(slot: &mut Option<Extremum>, value: &BigNat, lambda: &Partition) {
    match slot {
        Some(e) if e.value >= *value => {}
        _ => {
            *slot = Some(Extremum {
                value: value.clone(),
                witness: lambda.clone(),
            })
        }
    }
}

/// One pass over all `λ ⊢ n` collecting the three maxima.
pub fn degree_stats(n: usize) -> Result<DegreeStats> {
    if n == 0 {
        return Err(Error::InvalidInput("degree statistics need n >= 1".into()));
    }
    let fact = factorial(n as u64);
    let mut b_sym = None;
    let mut b_alt = None;
    let mut d_alt = None;
    for lambda in partitions(n) {
        let f = lambda.degree_with_factorial(&fact);
        let self_conj = lambda.is_self_conjugate();
        bump(&mut b_sym, &f, &lambda);
        if !self_conj {
            bump(&mut d_alt, &f, &lambda);
        }
        let alt = alt_from_degree(&lambda, f);
        bump(&mut b_alt, &alt, &lambda);
    }
    Ok(DegreeStats {
        n,
        b_sym: b_sym.expect("at least one partition"),
        b_alt: b_alt.expect("at least one partition"),
        d_alt,
    })
}

/// `b(S_n)` with a witness.
pub fn b_sym(n: usize) -> Result<Extremum> {
    Ok(degree_stats(n)?.b_sym)
}

/// `b(A_n)` with a witness.
pub fn b_alt(n: usize) -> Result<Extremum> {
    Ok(degree_stats(n)?.b_alt)
}

/// Largest degree of an `A_n`-irreducible extending to `S_n`, for `n >= 5`.
pub fn d_alt(n: usize) -> Result<Extremum> {
    if n < 5 {
        return Err(Error::InvalidInput(format!("d_alt needs n >= 5, got {n}")));
    }
    Ok(degree_stats(n)?.d_alt.expect("(n) is not self-conjugate"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltBoundReport {
    pub n: usize,
    pub b_sym: Extremum,
    pub b_alt: Extremum,
    pub d_alt: Extremum,
    /// `|A_n| = n!/2`.
    pub order: BigNat,
    /// `d_alt^3 >= n!/2`.
    pub cube_check: bool,
    /// False for `n = 6`, where `Aut(A_6)` is larger than `S_6`.
    pub aut_complete: bool,
}

pub fn verify_cube_bound(n: usize) -> Result<AltBoundReport> {
    if n < 5 {
        return Err(Error::InvalidInput(format!("cube bound needs n >= 5, got {n}")));
    }
    let stats = degree_stats(n)?;
    let d = stats.d_alt.expect("(n) is not self-conjugate");
    let order = factorial(n as u64) / 2u32;
    let cube_check = Pow::pow(&d.value, 3u32) >= order;
    Ok(AltBoundReport {
        n,
        b_sym: stats.b_sym,
        b_alt: stats.b_alt,
        d_alt: d,
        order,
        cube_check,
        aut_complete: n != 6,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Undecided,
}

/// One sufficient inequality `lhs >= (n+1)^(1/3)`.
///
/// `lhs_low == lhs_high` when the left side is rational; otherwise they are
/// the certified enclosure used for the final decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseCheck {
    pub verdict: Verdict,
    pub lhs_low: ExactRational,
    pub lhs_high: ExactRational,
    pub cube_radicand: ExactRational,
    pub refinements: u32,
}

impl CaseCheck {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionStepReport {
    pub n: usize,
    /// `(n+1)/⌈√(2n)⌉ >= (n+1)^(1/3)`.
    pub case1: CaseCheck,
    /// `(n+2-⌈√(2n+2)⌉)/⌈√(2n)-1⌉ >= (n+1)^(1/3)`.
    pub case2a: CaseCheck,
    /// `(n+3-⌈√(2n+2)⌉-⌈√(2n)-1⌉·n^(-1/3))/⌈√(2n)-1⌉ >= (n+1)^(1/3)`.
    pub case2b: CaseCheck,
}

impl InductionStepReport {
    pub fn case1_ok(&self) -> bool {
        self.case1.holds()
    }

    pub fn case2a_ok(&self) -> bool {
        self.case2a.holds()
    }

    pub fn case2b_ok(&self) -> bool {
        self.case2b.holds()
    }

    pub fn all_hold(&self) -> bool {
        self.case1_ok() && self.case2a_ok() && self.case2b_ok()
    }

    pub fn any_undecided(&self) -> bool {
        [&self.case1, &self.case2a, &self.case2b]
            .iter()
            .any(|c| c.verdict == Verdict::Undecided)
    }
}

fn rational_case(lhs: ExactRational, radicand: &ExactRational) -> CaseCheck {
    let verdict = match compare_to_root(&lhs, radicand, RootDegree::Cube) {
        Ordering::Less => Verdict::Fails,
        _ => Verdict::Holds,
    };
    CaseCheck {
        verdict,
        lhs_low: lhs.clone(),
        lhs_high: lhs,
        cube_radicand: radicand.clone(),
        refinements: 0,
    }
}

pub fn verify_induction_step(n: usize) -> Result<InductionStepReport> {
    if n < 30 {
        return Err(Error::InvalidInput(format!("induction step needs n >= 30, got {n}")));
    }
    let n64 = n as i64;
    let c_2n = ceil_sqrt(2 * n as u64) as i64; // ⌈√(2n)⌉
    let c_2n2 = ceil_sqrt(2 * n as u64 + 2) as i64; // ⌈√(2n+2)⌉
    let c_2n_minus_1 = c_2n - 1; // ⌈√(2n) - 1⌉
    let radicand = rational(n64 + 1, 1);

    let case1 = rational_case(rational(n64 + 1, c_2n), &radicand);
    let case2a = rational_case(rational(n64 + 2 - c_2n2, c_2n_minus_1), &radicand);

    // n^(-1/3) lies in [1/high, 1/low] for an enclosure [low, high] of n^(1/3);
    // the left side is decreasing in n^(-1/3).
    let base = rational(n64 + 3 - c_2n2, 1);
    let coeff = rational(c_2n_minus_1, 1);
    let lhs_bounds = |iv: &crate::exact::RootInterval| -> Option<(ExactRational, ExactRational)> {
        let (inv_low, inv_high) = iv.reciprocal_bounds().ok()?;
        let low = (&base - &coeff * &inv_high) / &coeff;
        let high = (&base - &coeff * &inv_low) / &coeff;
        Some((low, high))
    };
    let decided = refine_until(
        &rational(n64, 1),
        RootDegree::Cube,
        &rational(1, 1024),
        "induction case (2b)",
        |iv| {
            let (low, high) = lhs_bounds(iv)?;
            if compare_to_root(&low, &radicand, RootDegree::Cube) != Ordering::Less {
                Some((Verdict::Holds, low, high))
            } else if compare_to_root(&high, &radicand, RootDegree::Cube) == Ordering::Less {
                Some((Verdict::Fails, low, high))
            } else {
                None
            }
        },
    );
    let case2b = match decided {
        Ok(((verdict, lhs_low, lhs_high), refinements)) => CaseCheck {
            verdict,
            lhs_low,
            lhs_high,
            cube_radicand: radicand.clone(),
            refinements,
        },
        Err(Error::Undecided { refinements, .. }) => CaseCheck {
            verdict: Verdict::Undecided,
            lhs_low: BigRational::from_integer(BigInt::from(0)),
            lhs_high: base.clone(),
            cube_radicand: radicand.clone(),
            refinements,
        },
        Err(e) => return Err(e),
    };
    Ok(InductionStepReport {
        n,
        case1,
        case2a,
        case2b,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectangleScan {
    pub n: usize,
    /// Every rectangular shape `(b^a)` with `ab = n`, in reverse lex order.
    pub rectangles: Vec<(Partition, BigNat)>,
    /// Largest degree among the non-square rectangles, whose characters stay
    /// irreducible on restriction to `A_n`.
    pub best: Extremum,
    /// `1/2 - δ` in lowest terms.
    pub exponent: ExactRational,
    /// `best^q > (n!)^p` where `p/q = 1/2 - δ`.
    pub exceeds: bool,
}

/// Best rectangular degree for `n` against `(n!)^(1/2 - δ)`.
pub fn rectangle_scan(n: usize, delta: &ExactRational) -> Result<RectangleScan> {
    if n < 4 {
        return Err(Error::InvalidInput(format!("rectangle scan needs n >= 4, got {n}")));
    }
    let zero = rational(0, 1);
    let half = rational(1, 2);
    if *delta <= zero || *delta >= half {
        return Err(Error::InvalidInput(format!("delta must lie in (0, 1/2), got {delta}")));
    }
    let fact = factorial(n as u64);
    let mut rectangles = Vec::new();
    // Longest rows first gives reverse lexicographic order.
    for width in (1..=n).rev() {
        if n.is_multiple_of(width) {
            let lambda = Partition::new(alloc::vec![width; n / width])?;
            let f = lambda.degree_with_factorial(&fact);
            rectangles.push((lambda, f));
        }
    }
    let mut best: Option<Extremum> = None;
    for (lambda, f) in &rectangles {
        if !lambda.is_self_conjugate() {
            bump(&mut best, f, lambda);
        }
    }
    let best = best.expect("(n) is always rectangular");
    let exponent = half - delta;
    let p: u32 = exponent
        .numer()
        .try_into()
        .map_err(|_| Error::InvalidInput("exponent numerator too large".into()))?;
    let q: u32 = exponent
        .denom()
        .try_into()
        .map_err(|_| Error::InvalidInput("exponent denominator too large".into()))?;
    let exceeds = Pow::pow(&best.value, q) > Pow::pow(&fact, p);
    Ok(RectangleScan {
        n,
        rectangles,
        best,
        exponent,
        exceeds,
    })
}
