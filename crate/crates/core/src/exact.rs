//! Exact naturals, rationals and certified root enclosures.
//!
//! Every inequality verdict in this crate is decided here, by integer
//! arithmetic. Comparisons against square and cube roots never go through
//! floating point: `x` versus `r^(1/d)` is decided by comparing `x^d` with
//! `r`, and irrational quantities that appear inside larger expressions are
//! enclosed in [`RootInterval`]s whose endpoints are certified by
//! exponentiation.

use core::cmp::Ordering;

use alloc::format;
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision natural number.
pub type BigNat = BigUint;

/// Reduced fraction with positive denominator.
pub type ExactRational = BigRational;

/// Maximum number of tolerance halvings before a comparison is declared
/// undecided.
pub const MAX_REFINEMENTS: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum RootDegree {
    Square,
    Cube,
}

impl RootDegree {
    pub fn exponent(self) -> u32 {
        match self {
            RootDegree::Square => 2,
            RootDegree::Cube => 3,
        }
    }
}

/// An enclosure `low <= radicand^(1/degree) <= high`.
///
/// The invariant is certified at construction by checking
/// `low^degree <= radicand <= high^degree` with exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    low: ExactRational,
    high: ExactRational,
    radicand: ExactRational,
    degree: RootDegree,
}

impl RootInterval {
    pub fn low(&self) -> &ExactRational {
        &self.low
    }

    pub fn high(&self) -> &ExactRational {
        &self.high
    }

    pub fn radicand(&self) -> &ExactRational {
        &self.radicand
    }

    pub fn degree(&self) -> RootDegree {
        self.degree
    }

    pub fn width(&self) -> ExactRational {
        &self.high - &self.low
    }

    /// True when the endpoints bracket the root, rechecked from scratch.
    pub fn is_certified(&self) -> bool {
        let e = self.degree.exponent();
        pow_rational(&self.low, e) <= self.radicand && self.radicand <= pow_rational(&self.high, e)
    }

    /// Enclosure of `radicand^(-1/degree)`, i.e. `[1/high, 1/low]`.
    ///
    /// Requires `low > 0`.
    pub fn reciprocal_bounds(&self) -> Result<(ExactRational, ExactRational)> {
        if !self.low.is_positive() {
            return Err(Error::InvalidInput(format!(
                "reciprocal of an enclosure touching zero (low = {})",
                self.low
            )));
        }
        Ok((self.high.recip(), self.low.recip()))
    }
}

pub fn rational(numer: i64, denom: i64) -> ExactRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn nat_to_rational(n: &BigNat) -> ExactRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

pub fn pow_rational(x: &ExactRational, e: u32) -> ExactRational {
    Pow::pow(x, e)
}

/// Trial-division primality; inputs are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: &BigNat) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n.clone();
    if m.is_zero() {
        return out;
    }
    let mut d = 2u64;
    // Only used on group orders, whose prime divisors are small.
    while BigNat::from(d) * BigNat::from(d) <= m {
        let bd = BigNat::from(d);
        if (&m % &bd).is_zero() {
            out.push(d);
            while (&m % &bd).is_zero() {
                m /= &bd;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        let last: u64 = m.try_into().expect("cofactor after trial division exceeds u64");
        out.push(last);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: &BigNat, p: u64) -> Result<BigNat> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n.is_zero() {
        return Err(Error::InvalidInput("p-part of zero".into()));
    }
    let bp = BigNat::from(p);
    let mut part = BigNat::one();
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&bp);
        if !r.is_zero() {
            break;
        }
        part *= &bp;
        m = q;
    }
    Ok(part)
}

/// Product of the `p`-parts of `n` over `primes` (duplicates counted once).
pub fn pi_part(n: &BigNat, primes: &[u64]) -> Result<BigNat> {
    let mut seen: Vec<u64> = Vec::with_capacity(primes.len());
    let mut acc = BigNat::one();
    for &p in primes {
        if seen.contains(&p) {
            continue;
        }
        seen.push(p);
        acc *= p_part(n, p)?;
    }
    Ok(acc)
}

/// Exact ordering of `x` against the real root `radicand^(1/degree)`.
///
/// # Panics
///
/// If `radicand < 0` with an even degree.
pub fn compare_to_root(x: &ExactRational, radicand: &ExactRational, degree: RootDegree) -> Ordering {
    match degree {
        RootDegree::Cube => pow_rational(x, 3).cmp(radicand),
        RootDegree::Square => {
            assert!(!radicand.is_negative(), "square root of a negative radicand");
            if x.is_negative() {
                Ordering::Less
            } else {
                pow_rational(x, 2).cmp(radicand)
            }
        }
    }
}

/// Certified enclosure of `radicand^(1/degree)` of width at most `tolerance`.
///
/// Endpoints are dyadic: with `D = 2^k >= 1/tolerance`, the lower endpoint is
/// `floor(D * root) / D`, obtained from an integer root of `floor(r * D^d)`.
pub fn root_bounds(radicand: &ExactRational, degree: RootDegree, tolerance: &ExactRational) -> Result<RootInterval> {
    if radicand.is_negative() {
        return Err(Error::InvalidInput(format!("negative radicand {radicand}")));
    }
    if !tolerance.is_positive() {
        return Err(Error::InvalidInput(format!("non-positive tolerance {tolerance}")));
    }
    let e = degree.exponent();
    let mut scale = BigUint::one();
    while BigRational::new(BigInt::one(), BigInt::from(scale.clone())) > *tolerance {
        scale <<= 1u32;
    }
    let num = radicand.numer().magnitude().clone();
    let den = radicand.denom().magnitude().clone();
    let scaled = &num * Pow::pow(&scale, e);
    let floor_scaled = &scaled / &den;
    let s = floor_scaled.nth_root(e);
    let exact = Pow::pow(&s, e) * &den == scaled;
    let d = BigInt::from(scale);
    let low = BigRational::new(BigInt::from(s.clone()), d.clone());
    let high = if exact {
        low.clone()
    } else {
        BigRational::new(BigInt::from(s + 1u32), d)
    };
    let interval = RootInterval {
        low,
        high,
        radicand: radicand.clone(),
        degree,
    };
    if !interval.is_certified() {
        return Err(Error::Inconsistent(format!(
            "root enclosure for {radicand}^(1/{e}) failed certification"
        )));
    }
    Ok(interval)
}

/// Repeatedly tighten an enclosure until `decide` returns a verdict.
///
/// `decide` gets the current enclosure and returns `Some(verdict)` once the
/// question is settled. Tolerance halves on each round; after
/// [`MAX_REFINEMENTS`] rounds the result is [`Error::Undecided`].
pub fn refine_until<T>(
    radicand: &ExactRational,
    degree: RootDegree,
    initial_tolerance: &ExactRational,
    what: &str,
    mut decide: impl FnMut(&RootInterval) -> Option<T>,
) -> Result<(T, u32)> {
    let mut tol = initial_tolerance.clone();
    let half = rational(1, 2);
    for round in 0..=MAX_REFINEMENTS {
        let interval = root_bounds(radicand, degree, &tol)?;
        if let Some(v) = decide(&interval) {
            return Ok((v, round));
        }
        tol = &tol * &half;
    }
    Err(Error::Undecided {
        what: what.into(),
        refinements: MAX_REFINEMENTS,
    })
}

/// Smallest integer not below `sqrt(m)`.
pub fn ceil_sqrt(m: u64) -> u64 {
    let s = m.sqrt();
    if s * s == m {
        s
    } else {
        s + 1
    }
}

pub fn factorial(n: u64) -> BigNat {
    let mut acc = BigNat::one();
    let mut chunk: u64 = 1;
    for k in 2..=n {
        match chunk.checked_mul(k) {
            Some(c) => chunk = c,
            None => {
                acc *= chunk;
                chunk = k;
            }
        }
    }
    acc * chunk
}

/// Numerator/denominator rendering used by reports.
pub fn render_rational(x: &ExactRational) -> alloc::string::String {
    if x.is_integer() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> BigNat {
        BigNat::from(n)
    }

    fn trial_division_part(mut n: u64, p: u64) -> u64 {
        let mut part = 1;
        while n.is_multiple_of(p) {
            n /= p;
            part *= p;
        }
        part
    }

    #[test]
    fn p_part_examples() {
        assert_eq!(p_part(&nat(7), 7).unwrap(), nat(7));
        assert_eq!(trial_division_part(504, 3), 9);
        assert_eq!(p_part(&nat(504), 3).unwrap(), nat(9));
        assert_eq!(trial_division_part(7920, 2), 16);
        assert_eq!(p_part(&nat(7920), 2).unwrap(), nat(16));
    }

    #[test]
    fn p_part_rejects_composite_and_zero() {
        assert_eq!(p_part(&nat(12), 4), Err(Error::NotPrime(4)));
        assert_eq!(p_part(&nat(12), 1), Err(Error::NotPrime(1)));
        assert!(matches!(p_part(&nat(0), 2), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn pi_part_examples() {
        assert_eq!(pi_part(&nat(432), &[3]).unwrap(), nat(27));
        assert_eq!(pi_part(&nat(60), &[]).unwrap(), nat(1));
        assert_eq!(pi_part(&nat(60), &[2, 3, 5]).unwrap(), nat(60));
        assert_eq!(pi_part(&nat(60), &[2, 2, 5]).unwrap(), nat(20));
    }

    #[test]
    fn prime_divisors_small() {
        assert_eq!(prime_divisors(&nat(7920)), [2, 3, 5, 11]);
        assert_eq!(prime_divisors(&nat(1)), Vec::<u64>::new());
        assert_eq!(prime_divisors(&nat(97)), [97]);
    }

    #[test]
    fn compare_to_root_examples() {
        let r = |n, d| rational(n, d);
        assert_eq!(compare_to_root(&r(2, 1), &r(8, 1), RootDegree::Cube), Ordering::Equal);
        assert_eq!(
            compare_to_root(&r(3, 1), &r(26, 1), RootDegree::Cube),
            Ordering::Greater
        );
        // (31/8)^3 = 29791/512 > 31
        assert_eq!(pow_rational(&r(31, 8), 3), r(29791, 512));
        assert_eq!(
            compare_to_root(&r(31, 8), &r(31, 1), RootDegree::Cube),
            Ordering::Greater
        );
        assert_eq!(compare_to_root(&r(-1, 1), &r(0, 1), RootDegree::Square), Ordering::Less);
        assert_eq!(compare_to_root(&r(-2, 1), &r(-8, 1), RootDegree::Cube), Ordering::Equal);
    }

    #[test]
    fn root_bounds_examples() {
        let tol = rational(1, 1000);
        let four = root_bounds(&rational(4, 1), RootDegree::Square, &tol).unwrap();
        assert_eq!(four.low(), &rational(2, 1));
        assert_eq!(four.high(), &rational(2, 1));

        let thirty = root_bounds(&rational(30, 1), RootDegree::Cube, &tol).unwrap();
        assert!(thirty.width() <= tol);
        assert!(pow_rational(thirty.low(), 3) <= rational(30, 1));
        assert!(pow_rational(thirty.high(), 3) >= rational(30, 1));

        let zero = root_bounds(&rational(0, 1), RootDegree::Cube, &rational(1, 3)).unwrap();
        assert_eq!(zero.low(), &rational(0, 1));
        assert_eq!(zero.high(), &rational(0, 1));
    }

    #[test]
    fn root_bounds_rejects_bad_input() {
        assert!(root_bounds(&rational(-1, 1), RootDegree::Cube, &rational(1, 2)).is_err());
        assert!(root_bounds(&rational(2, 1), RootDegree::Cube, &rational(0, 1)).is_err());
    }

    #[test]
    fn refinement_cap_reports_undecided() {
        // Asking whether the root is strictly above 2 with a perfect cube never
        // settles when the predicate refuses exact endpoints.
        let res: Result<(bool, u32)> =
            refine_until(&rational(8, 1), RootDegree::Cube, &rational(1, 2), "exact tie", |_| {
                None
            });
        assert!(matches!(res, Err(Error::Undecided { refinements: 64, .. })));
    }

    #[test]
    fn ceil_sqrt_matches_definition() {
        for m in 0..2000u64 {
            let c = ceil_sqrt(m);
            assert!(c * c >= m);
            assert!(c == 0 || (c - 1) * (c - 1) < m);
        }
        assert_eq!(ceil_sqrt(60), 8);
        assert_eq!(ceil_sqrt(62), 8);
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), nat(1));
        assert_eq!(factorial(5), nat(120));
        assert_eq!(factorial(20), nat(2432902008176640000));
        assert_eq!(factorial(25), factorial(24) * 25u32);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn compare_equal_iff_exact_power(num in 0i64..2000, den in 1i64..50, r in 0i64..100_000, d in 1i64..30) {
                let x = rational(num, den);
                let rad = rational(r, d);
                for deg in [RootDegree::Square, RootDegree::Cube] {
                    let eq = compare_to_root(&x, &rad, deg) == Ordering::Equal;
                    prop_assert_eq!(eq, pow_rational(&x, deg.exponent()) == rad);
                }
            }

            #[test]
            fn root_bounds_certified(r in 0i64..10_000_000, d in 1i64..1000, k in 1u32..40) {
                let rad = rational(r, d);
                let tol = BigRational::new(BigInt::one(), BigInt::from(2u64).pow(k));
                for deg in [RootDegree::Square, RootDegree::Cube] {
                    let iv = root_bounds(&rad, deg, &tol).unwrap();
                    prop_assert!(iv.is_certified());
                    prop_assert!(iv.width() <= tol);
                }
            }

            #[test]
            fn p_part_divides_with_coprime_cofactor(n in 1u64..10_000_000, pi in 0usize..6) {
                let p = [2u64, 3, 5, 7, 11, 13][pi];
                let part = p_part(&nat(n), p).unwrap();
                let big = nat(n);
                prop_assert!((&big % &part).is_zero());
                prop_assert!(!((&big / &part) % p).is_zero());
            }

            #[test]
            fn complementary_pi_parts_multiply_out(n in 1u64..10_000_000, mask in 0u32..64) {
                let divisors = prime_divisors(&nat(n));
                let (a, b): (Vec<_>, Vec<_>) = divisors
                    .iter()
                    .copied()
                    .enumerate()
                    .partition(|(i, _)| mask & (1 << (i % 6)) != 0);
                let a: Vec<u64> = a.into_iter().map(|(_, p)| p).collect();
                let b: Vec<u64> = b.into_iter().map(|(_, p)| p).collect();
                prop_assert_eq!(pi_part(&nat(n), &a).unwrap() * pi_part(&nat(n), &b).unwrap(), nat(n));
            }
        }
    }
}
