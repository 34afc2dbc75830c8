use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{prime_divisors, BigNat};
use crate::group::{FiniteGroup, GroupElement};

use super::classes::ClassData;

/// Default number of candidate elements examined while growing Sylow
/// subgroups.
pub const DEFAULT_SYLOW_BUDGET: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FittingSource {
    Computed,
    /// Computation ran out of budget; the catalog value was used.
    Metadata,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingData {
    pub order: u64,
    /// `(p, |O_p(G)|)` for each prime divisor of `|G|`; empty when the value
    /// came from metadata.
    pub p_cores: Vec<(u64, usize)>,
    pub source: FittingSource,
}

struct Budget {
    left: usize,
}

impl Budget {
    fn spend(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::Unavailable("Sylow construction exceeded its step budget".into()));
        }
        self.left -= 1;
        Ok(())
    }
}

fn p_part_usize(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

/// A Sylow `p`-subgroup as a membership mask.
///
/// Grows `P` one element at a time: any `p`-element `x` outside `P` that
/// normalizes it extends it to the larger `p`-group `P<x>`. Such an `x`
/// exists until `P` is Sylow, since then `N(P)/P` has order divisible by `p`.
pub fn sylow_subgroup<E: GroupElement>(g: &FiniteGroup<E>, p: usize, budget: usize) -> Result<Vec<bool>> {
    let mut budget = Budget { left: budget };
    sylow_with(g, p, &mut budget)
}

fn sylow_with<E: GroupElement>(g: &FiniteGroup<E>, p: usize, budget: &mut Budget) -> Result<Vec<bool>> {
    let n = g.order();
    let target = p_part_usize(n, p);
    let mut gens: Vec<usize> = Vec::new();
    let mut mask = vec![false; n];
    mask[0] = true;
    let mut size = 1;
    let mut p_elements: Option<Vec<bool>> = None;
    while size < target {
        let p_elements = p_elements.get_or_insert_with(|| (0..n).map(|x| is_power_of(g.element_order(x), p)).collect());
        let mut grown = false;
        for x in 0..n {
            budget.spend()?;
            if mask[x] || !p_elements[x] {
                continue;
            }
            if gens.iter().all(|&s| mask[g.conjugate(s, x)]) {
                gens.push(x);
                mask = g.subgroup_closure(&gens);
                size = mask.iter().filter(|&&m| m).count();
                grown = true;
                break;
            }
        }
        if !grown {
            return Err(Error::Inconsistent(format!(
                "no element extends a {p}-subgroup of order {size} below {target}"
            )));
        }
    }
    Ok(mask)
}

fn is_power_of(mut m: usize, p: usize) -> bool {
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// `O_p(G)`: the union of the classes lying inside a Sylow `p`-subgroup.
pub fn p_core<E: GroupElement>(g: &FiniteGroup<E>, classes: &ClassData, sylow: &[bool]) -> Vec<bool> {
    let mut inside = vec![true; classes.k()];
    for (x, &c) in classes.class_of.iter().enumerate() {
        if !sylow[x] {
            inside[c as usize] = false;
        }
    }
    (0..g.order()).map(|x| inside[classes.class_of[x] as usize]).collect()
}

/// `|F(G)| = ∏_p |O_p(G)|`.
///
/// When `claimed` is given it must agree with the computed value. If the
/// Sylow search runs out of budget the claimed value is returned instead,
/// and without one the result is [`Error::Unavailable`].
pub fn fitting_order<E: GroupElement>(
    g: &FiniteGroup<E>,
    classes: &ClassData,
    claimed: Option<u64>,
    budget: usize,
) -> Result<FittingData> {
    let n = g.order();
    let mut budget = Budget { left: budget };
    let mut p_cores = Vec::new();
    let mut order = 1u64;
    for p in prime_divisors(&BigNat::from(n)) {
        let sylow = match sylow_with(g, p as usize, &mut budget) {
            Ok(s) => s,
            Err(Error::Unavailable(reason)) => {
                return match claimed {
                    Some(c) => Ok(FittingData {
                        order: c,
                        p_cores: Vec::new(),
                        source: FittingSource::Metadata,
                    }),
                    None => Err(Error::Unavailable(reason)),
                };
            }
            Err(e) => return Err(e),
        };
        let core = p_core(g, classes, &sylow);
        let size = core.iter().filter(|&&m| m).count();
        p_cores.push((p, size));
        order *= size as u64;
    }
    if let Some(c) = claimed {
        if c != order {
            return Err(Error::Inconsistent(format!(
                "computed |F(G)| = {order}, metadata claims {c}"
            )));
        }
    }
    Ok(FittingData {
        order,
        p_cores,
        source: FittingSource::Computed,
    })
}
