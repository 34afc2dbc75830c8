use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::group::{FiniteGroup, GroupElement};

/// Conjugacy classes, ordered by their least element index.
///
/// The identity class comes first and every representative is the least
/// index in its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
    /// Class number of every element.
    pub class_of: Vec<u32>,
}

impl ClassData {
    pub fn k(&self) -> usize {
        self.representatives.len()
    }

    /// Class containing the inverses of class `i`.
    pub fn inverse_class<E: GroupElement>(&self, g: &FiniteGroup<E>, i: usize) -> usize {
        self.class_of[g.inv(self.representatives[i])] as usize
    }

    fn from_labels(labels: Vec<u32>) -> ClassData {
        let k = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut representatives = vec![usize::MAX; k];
        let mut sizes = vec![0; k];
        for (x, &l) in labels.iter().enumerate() {
            let l = l as usize;
            representatives[l] = representatives[l].min(x);
            sizes[l] += 1;
        }
        ClassData {
            representatives,
            sizes,
            class_of: labels,
        }
    }
}

/// Classes found by closing each unvisited element under conjugation by the
/// generators, scanning elements in index order.
pub fn conjugacy_classes<E: GroupElement>(g: &FiniteGroup<E>) -> ClassData {
    let n = g.order();
    let gens: Vec<usize> = g.generators().collect();
    let mut labels = vec![u32::MAX; n];
    let mut next = 0u32;
    let mut queue = Vec::new();
    for start in 0..n {
        if labels[start] != u32::MAX {
            continue;
        }
        labels[start] = next;
        queue.clear();
        queue.push(start);
        while let Some(x) = queue.pop() {
            for &s in &gens {
                let y = g.conjugate(x, s);
                if labels[y] == u32::MAX {
                    labels[y] = next;
                    queue.push(y);
                }
            }
        }
        next += 1;
    }
    ClassData::from_labels(labels)
}

/// Classes found by conjugating by every group element. Quadratic; used as
/// an independent check.
pub fn conjugacy_classes_exhaustive<E: GroupElement>(g: &FiniteGroup<E>) -> ClassData {
    let n = g.order();
    let mut labels = vec![u32::MAX; n];
    let mut next = 0u32;
    for x in 0..n {
        if labels[x] != u32::MAX {
            continue;
        }
        for y in 0..n {
            labels[g.conjugate(x, y)] = next;
        }
        next += 1;
    }
    ClassData::from_labels(labels)
}

/// Largest order for which the commuting probability is recomputed by
/// counting commuting pairs.
pub const PAIR_COUNT_LIMIT: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingProbability {
    pub value: ExactRational,
    /// Number of commuting ordered pairs, when counted directly.
    pub commuting_pairs: Option<u64>,
}

/// `k/|G|`, cross-checked against a direct pair count for small groups.
pub fn commuting_probability<E: GroupElement>(g: &FiniteGroup<E>, classes: &ClassData) -> Result<CommutingProbability> {
    let n = g.order();
    let value = BigRational::new(BigInt::from(classes.k()), BigInt::from(n));
    let commuting_pairs = if n <= PAIR_COUNT_LIMIT {
        let count = commuting_pair_count(g);
        if count != (classes.k() * n) as u64 {
            return Err(Error::Inconsistent(format!(
                "{count} commuting pairs, expected k·|G| = {}",
                classes.k() * n
            )));
        }
        Some(count)
    } else {
        None
    };
    Ok(CommutingProbability { value, commuting_pairs })
}

pub fn commuting_pair_count<E: GroupElement>(g: &FiniteGroup<E>) -> u64 {
    let n = g.order();
    let mut count = 0u64;
    for x in 0..n {
        // (x, y) and (y, x) commute together; count the diagonal once.
        count += 1;
        for y in x + 1..n {
            if g.mul(x, y) == g.mul(y, x) {
                count += 2;
            }
        }
    }
    count
}
