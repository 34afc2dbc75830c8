//! Irreducible character degrees from the class algebra.
//!
//! Let `K_1, .., K_k` be the class sums. For an irreducible `χ` the central
//! character `ω(K_i) = |C_i| χ(g_i) / χ(1)` satisfies
//! `ω(K_i) ω(K_j) = Σ_l a_ijl ω(K_l)`, so the vector `(ω(K_l))_l` is a
//! common eigenvector of the matrices `(M_i)_jl = a_ijl` with first entry 1.
//! Working modulo a prime `p ≡ 1 (mod exp G)` with `p > 2 sqrt|G|`, the
//! common eigenvectors are found by splitting `F_p^k` into joint eigenspaces,
//! and then `χ(1)^2 = |G| / Σ_i ω(K_i) ω(K_i*) / |C_i|` recovers each degree
//! as the unique integer below `sqrt|G|` with that square mod `p`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::exact::is_prime;
use crate::group::{FiniteGroup, GroupElement};
use crate::matrix::pow_mod;

use super::classes::ClassData;

/// Default bound on `|G|` for degree computations.
pub const DEFAULT_DEGREE_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeData {
    /// Degrees in ascending order.
    pub degrees: Vec<u64>,
    /// The largest degree.
    pub b: u64,
    /// The prime used for the modular computation.
    pub modulus: u64,
}

impl DegreeData {
    pub fn multiplicity(&self, d: u64) -> usize {
        self.degrees.iter().filter(|&&x| x == d).count()
    }
}

/// Least prime `p ≡ 1 (mod exponent)` with `p^2 > 4·order`.
pub fn degree_modulus(order: u64, exponent: u64) -> u64 {
    let mut p = exponent + 1;
    while !(is_prime(p) && p * p > 4 * order) {
        p += exponent;
    }
    p
}

struct Field {
    p: u64,
}

impl Field {
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        pow_mod(a, self.p - 2, self.p)
    }
}

type Mat = Vec<Vec<u64>>;

/// Subspace of `F_p^k` in reduced row echelon form.
struct Echelon {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn from_vectors(f: &Field, mut vs: Vec<Vec<u64>>) -> Echelon {
        let k = vs.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..k {
            let Some(i) = (r..vs.len()).find(|&i| vs[i][c] != 0) else {
                continue;
            };
            vs.swap(r, i);
            let inv = f.inv(vs[r][c]);
            for x in vs[r].iter_mut() {
                *x = f.mul(*x, inv);
            }
            let pivot_row = vs[r].clone();
            for (i, row) in vs.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let factor = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        vs.truncate(r);
        Echelon { rows: vs, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Null space of a square matrix, as column vectors.
fn kernel(f: &Field, mut a: Mat) -> Vec<Vec<u64>> {
    let m = a.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..m {
        let Some(i) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, i);
        let inv = f.inv(a[r][c]);
        for x in a[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; m];
            v[fc] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = f.sub(0, a[row][fc]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)`, coefficients lowest degree first,
/// via reduction to upper Hessenberg form.
fn char_poly(f: &Field, mut h: Mat) -> Vec<u64> {
    let m = h.len();
    for j in 0..m.saturating_sub(2) {
        let Some(i) = (j + 1..m).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]);
        for r in j + 2..m {
            let factor = f.mul(h[r][j], inv);
            if factor == 0 {
                continue;
            }
            let (top, rest) = h.split_at_mut(r);
            for (x, &y) in rest[0].iter_mut().zip(&top[j + 1]) {
                *x = f.sub(*x, f.mul(factor, y));
            }
            for row in h.iter_mut() {
                let t = f.mul(factor, row[r]);
                row[j + 1] = f.add(row[j + 1], t);
            }
        }
    }
    // polys[t] is the characteristic polynomial of the leading t×t block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for t in 0..m {
        let mut next = vec![0; t + 2];
        for (d, &c) in polys[t].iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(h[t][t], c));
        }
        let mut sub = 1u64;
        for i in (0..t).rev() {
            sub = f.mul(sub, h[i + 1][i]);
            let coef = f.mul(h[i][t], sub);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = f.sub(next[d], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn roots(f: &Field, poly: &[u64]) -> Vec<u64> {
    (0..f.p)
        .filter(|&x| poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c)) == 0)
        .collect()
}

/// Splits `space` into eigenspaces of the matrix `m` restricted to it.
fn split(f: &Field, m: &Mat, space: Echelon) -> Result<Vec<Echelon>> {
    let dim = space.dim();
    let k = m.len();
    // images[j] = M b_j, restricted[t][j] = (M b_j)[pivot_t].
    let images: Vec<Vec<u64>> = space
        .rows
        .iter()
        .map(|b| {
            (0..k)
                .map(|r| m[r].iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y))))
                .collect()
        })
        .collect();
    let restricted: Mat = (0..dim)
        .map(|t| (0..dim).map(|j| images[j][space.pivots[t]]).collect())
        .collect();
    let poly = char_poly(f, restricted.clone());
    let mut parts = Vec::new();
    let mut total = 0;
    for lambda in roots(f, &poly) {
        let mut shifted = restricted.clone();
        for (t, row) in shifted.iter_mut().enumerate() {
            row[t] = f.sub(row[t], lambda);
        }
        let coords = kernel(f, shifted);
        total += coords.len();
        let vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                (0..k)
                    .map(|r| {
                        c.iter()
                            .zip(&space.rows)
                            .fold(0, |acc, (&x, b)| f.add(acc, f.mul(x, b[r])))
                    })
                    .collect()
            })
            .collect();
        parts.push(Echelon::from_vectors(f, vectors));
    }
    if total != dim {
        return Err(Error::Inconsistent(format!(
            "class matrix does not split over F_{}: eigenspaces cover {total} of {dim} dimensions",
            f.p
        )));
    }
    Ok(parts)
}

/// `a_ijl = #{x ∈ C_i : x⁻¹ z_l ∈ C_j}` for fixed representatives `z_l`,
/// stored at `(i·k + j)·k + l`.
pub fn structure_constants<E: GroupElement>(g: &FiniteGroup<E>, classes: &ClassData) -> Vec<u32> {
    let k = classes.k();
    let mut a = vec![0u32; k * k * k];
    for (l, &z) in classes.representatives.iter().enumerate() {
        for x in 0..g.order() {
            let i = classes.class_of[x] as usize;
            let j = classes.class_of[g.mul(g.inv(x), z)] as usize;
            a[(i * k + j) * k + l] += 1;
        }
    }
    a
}

/// Degrees of the irreducible characters, validated by `Σ d^2 = |G|`, by
/// their number being `k` and by each dividing `|G|`.
pub fn character_degrees<E: GroupElement>(g: &FiniteGroup<E>, classes: &ClassData, cap: usize) -> Result<DegreeData> {
    let order = g.order();
    if order > cap {
        return Err(Error::CapExceeded { cap });
    }
    let k = classes.k();
    let p = degree_modulus(order as u64, g.exponent() as u64);
    let f = Field { p };
    let a = structure_constants(g, classes);

    let mut done: Vec<Echelon> = Vec::new();
    let identity: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| (i == j) as u64).collect()).collect();
    let mut pending = vec![Echelon::from_vectors(&f, identity)];
    for i in 1..k {
        if pending.is_empty() {
            break;
        }
        let m: Mat = (0..k)
            .map(|j| (0..k).map(|l| a[(i * k + j) * k + l] as u64 % p).collect())
            .collect();
        let mut next = Vec::new();
        for space in pending {
            for part in split(&f, &m, space)? {
                if part.dim() == 1 {
                    done.push(part);
                } else {
                    next.push(part);
                }
            }
        }
        pending = next;
    }
    done.extend(pending.into_iter().filter(|s| s.dim() == 1));
    if done.len() != k {
        return Err(Error::Inconsistent(format!(
            "found {} joint eigenvectors for {k} classes",
            done.len()
        )));
    }

    let bound = (order as u64).sqrt();
    let n_mod = order as u64 % p;
    let mut degrees = Vec::with_capacity(k);
    for space in &done {
        let w = &space.rows[0];
        if w[0] == 0 {
            return Err(Error::Inconsistent("central character vanishes on the identity".into()));
        }
        let scale = f.inv(w[0]);
        let omega: Vec<u64> = w.iter().map(|&x| f.mul(x, scale)).collect();
        let mut s = 0;
        for i in 0..k {
            let star = classes.inverse_class(g, i);
            let term = f.mul(f.mul(omega[i], omega[star]), f.inv(classes.sizes[i] as u64 % p));
            s = f.add(s, term);
        }
        if s == 0 {
            return Err(Error::Inconsistent("zero norm for a central character".into()));
        }
        let square = f.mul(n_mod, f.inv(s));
        let d = (1..=bound)
            .find(|&d| d * d % p == square)
            .ok_or_else(|| Error::Inconsistent(format!("no degree squares to {square} mod {p}")))?;
        degrees.push(d);
    }
    degrees.sort_unstable();
    let sum: u64 = degrees.iter().map(|d| d * d).sum();
    if sum != order as u64 || degrees.iter().any(|d| !(order as u64).is_multiple_of(*d)) {
        return Err(Error::Inconsistent(format!(
            "degrees {degrees:?} fail validation for a group of order {order}"
        )));
    }
    let b = *degrees.last().unwrap();
    Ok(DegreeData { degrees, b, modulus: p })
}
