//! Integer partitions, Young diagrams and hook lengths.
//!
//! Cells are addressed `(row, column)`, zero-based, row 0 on top, so the cell
//! `(r, c)` exists iff `c < parts[r]`. The hook of a cell counts the cell, the
//! cells to its right in the same row and the cells below it in the same
//! column: `hook(r, c) = parts[r] + conj[c] - r - c - 1`. Transposing the
//! diagram permutes hooks, so the hook multiset does not depend on which
//! convention is used.
//!
//! Degrees of irreducible characters of `S_n` come from the hook-length
//! formula and those of `A_n` from halving on self-conjugate shapes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, BigNat};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates weakly decreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r`, zero past the last row.
    pub fn row(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.row(0);
        let mut cols = vec![0usize; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn hook_table(&self) -> HookTable {
        let conj = self.conjugate();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| len + conj.parts[c] - r - c - 1).collect())
            .collect();
        HookTable { rows }
    }

    /// Degree `f_λ = n! / ∏ hooks` of the irreducible character of `S_n`.
    pub fn degree(&self) -> BigNat {
        let n = self.n();
        if n > 64 {
            degree_by_cancellation(self)
        } else {
            self.degree_with_factorial(&factorial(n as u64))
        }
    }

    /// Hook-length formula with a caller-supplied `n!`, for scans over all
    /// partitions of one `n`.
    ///
    /// # Panics
    ///
    /// If the division is not exact, which would mean a broken hook table.
    pub fn degree_with_factorial(&self, n_factorial: &BigNat) -> BigNat {
        let hooks = hook_product(self);
        let (q, r) = n_factorial.div_rem(&hooks);
        assert!(r.is_zero(), "hook product does not divide n! for {self}");
        q
    }

    /// Degree of the irreducible character(s) of `A_n` labelled by `self`:
    /// `f_λ`, halved when `λ` is self-conjugate and `n >= 2`.
    pub fn alt_degree(&self) -> BigNat {
        alt_from_degree(self, self.degree())
    }

    /// Corners where a cell can be added, top row first.
    pub fn addable(&self) -> NodeSet {
        let mut nodes = Vec::new();
        for r in 0..=self.len() {
            let len = self.row(r);
            if r == 0 || self.row(r - 1) > len {
                let mut parts = self.parts.clone();
                if r == parts.len() {
                    parts.push(1);
                } else {
                    parts[r] += 1;
                }
                nodes.push(Node {
                    row: r,
                    col: len,
                    result: Partition { parts },
                });
            }
        }
        NodeSet { nodes }
    }

    /// Corners where a cell can be removed, top row first.
    pub fn removable(&self) -> NodeSet {
        let mut nodes = Vec::new();
        for r in 0..self.len() {
            let len = self.parts[r];
            if len > self.row(r + 1) {
                let mut parts = self.parts.clone();
                parts[r] -= 1;
                if parts[r] == 0 {
                    parts.pop();
                }
                nodes.push(Node {
                    row: r,
                    col: len - 1,
                    result: Partition { parts },
                });
            }
        }
        NodeSet { nodes }
    }
}

pub(crate) fn alt_from_degree(lambda: &Partition, f: BigNat) -> BigNat {
    // A_0 and A_1 are trivial, so nothing splits there.
    if lambda.n() >= 2 && lambda.is_self_conjugate() {
        let (half, r) = f.div_rem(&BigNat::from(2u32));
        assert!(r.is_zero(), "odd degree {f} for self-conjugate {lambda}");
        half
    } else {
        f
    }
}

fn hook_product(lambda: &Partition) -> BigNat {
    let conj = lambda.conjugate();
    let mut acc = BigNat::one();
    let mut chunk: u64 = 1;
    for (r, &len) in lambda.parts.iter().enumerate() {
        for c in 0..len {
            let h = (len + conj.parts[c] - r - c - 1) as u64;
            match chunk.checked_mul(h) {
                Some(v) => chunk = v,
                None => {
                    acc *= chunk;
                    chunk = h;
                }
            }
        }
    }
    acc * chunk
}

fn primes_up_to(n: usize) -> Vec<usize> {
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

fn valuation(mut m: usize, p: usize) -> i64 {
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    v
}

/// Hook-length formula by cancelling prime exponents of `n!` against those
/// of the hook product, so no intermediate exceeds the result.
fn degree_by_cancellation(lambda: &Partition) -> BigNat {
    let n = lambda.n();
    let primes = primes_up_to(n);
    let mut exps = vec![0i64; primes.len()];
    for k in 2..=n {
        for (e, &p) in exps.iter_mut().zip(&primes) {
            *e += valuation(k, p);
        }
    }
    for h in lambda.hook_table().values() {
        for (e, &p) in exps.iter_mut().zip(&primes) {
            *e -= valuation(h, p);
        }
    }
    let mut acc = BigNat::one();
    for (e, &p) in exps.iter().zip(&primes) {
        assert!(*e >= 0, "hook product does not divide n! for {lambda}");
        for _ in 0..*e {
            acc *= p as u64;
        }
    }
    acc
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Hook lengths stored row-major: `rows[r][c]` is the hook of cell `(r, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookTable {
    rows: Vec<Vec<usize>>,
}

impl HookTable {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Hooks sorted descending.
    pub fn multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.values().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    /// The partition after adding or removing this cell.
    pub result: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSet {
    pub nodes: Vec<Node>,
}

impl NodeSet {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Node> {
        self.nodes.iter()
    }

    pub fn results(&self) -> impl Iterator<Item = &Partition> {
        self.nodes.iter().map(|n| &n.result)
    }
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`
/// and ending at `(1^n)`.
pub fn partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    partitions(n).collect()
}

pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let i = parts.iter().rposition(|&p| p > 1)?;
    let v = parts[i] - 1;
    let mut rem = parts.len() - i;
    let mut out = parts[..i].to_vec();
    out.push(v);
    while rem >= v {
        out.push(v);
        rem -= v;
    }
    if rem > 0 {
        out.push(rem);
    }
    Some(out)
}
