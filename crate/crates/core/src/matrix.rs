//! Vectors and square matrices over small prime fields.
//!
//! Entries are stored reduced mod `p` in fixed-size row-major arrays, so
//! values are `Copy` and hash on their canonical encoding. Vectors are row
//! vectors and matrices act on the right: `v ↦ v·M`, hence `v·(AB) =
//! (v·A)·B`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exact::is_prime;
use crate::group::GroupElement;

pub const MAX_DIM: usize = 8;

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn check_field(p: u32, dim: usize) -> Result<()> {
    if p > 251 || !is_prime(p as u64) {
        return Err(Error::InvalidInput(format!(
            "field order {p} must be a prime below 256"
        )));
    }
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::InvalidInput(format!("dimension {dim} outside 1..={MAX_DIM}")));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldVector {
    p: u8,
    dim: u8,
    entries: [u8; MAX_DIM],
}

impl FieldVector {
    pub fn zero(p: u32, dim: usize) -> Self {
        FieldVector {
            p: p as u8,
            dim: dim as u8,
            entries: [0; MAX_DIM],
        }
    }

    pub fn from_entries(p: u32, values: &[i64]) -> Result<Self> {
        check_field(p, values.len())?;
        let mut v = Self::zero(p, values.len());
        for (slot, &x) in v.entries.iter_mut().zip(values) {
            *slot = x.rem_euclid(p as i64) as u8;
        }
        Ok(v)
    }

    /// Vector whose base-`p` digits (first coordinate most significant) spell
    /// `index`; enumerating indices `0..p^dim` is lexicographic order.
    pub fn from_index(mut index: usize, p: u32, dim: usize) -> Self {
        let mut v = Self::zero(p, dim);
        for i in (0..dim).rev() {
            v.entries[i] = (index % p as usize) as u8;
            index /= p as usize;
        }
        v
    }

    pub fn index(&self) -> usize {
        self.entries[..self.dim as usize]
            .iter()
            .fold(0usize, |acc, &e| acc * self.p as usize + e as usize)
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries[..self.dim as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = *self;
        let p = self.p as u16;
        for i in 0..self.dim as usize {
            out.entries[i] = ((self.entries[i] as u16 + other.entries[i] as u16) % p) as u8;
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = *self;
        let p = self.p;
        for i in 0..self.dim as usize {
            out.entries[i] = (p - self.entries[i]) % p;
        }
        out
    }

    /// `v·M`.
    pub fn act(&self, m: &Matrix) -> Self {
        let d = self.dim as usize;
        let p = self.p as u32;
        let mut out = Self::zero(p, d);
        for j in 0..d {
            let mut acc = 0u32;
            for i in 0..d {
                acc += self.entries[i] as u32 * m.get(i, j) as u32;
            }
            out.entries[j] = (acc % p) as u8;
        }
        out
    }

    /// `M·v` with `v` read as a column.
    pub fn act_left(&self, m: &Matrix) -> Self {
        let d = self.dim as usize;
        let p = self.p as u32;
        let mut out = Self::zero(p, d);
        for i in 0..d {
            let mut acc = 0u32;
            for j in 0..d {
                acc += m.get(i, j) as u32 * self.entries[j] as u32;
            }
            out.entries[i] = (acc % p) as u8;
        }
        out
    }

    /// Concatenation `(self, other)` in a direct sum.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.p as u32, self.dim() + other.dim());
        out.entries[..self.dim()].copy_from_slice(self.entries());
        out.entries[self.dim()..self.dim() + other.dim()].copy_from_slice(other.entries());
        out
    }
}

impl fmt::Debug for FieldVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries())
    }
}

impl fmt::Display for FieldVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    p: u8,
    dim: u8,
    entries: [u8; MAX_DIM * MAX_DIM],
}

impl Matrix {
    pub fn identity(p: u32, dim: usize) -> Self {
        let mut m = Self::zero(p, dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    fn zero(p: u32, dim: usize) -> Self {
        Matrix {
            p: p as u8,
            dim: dim as u8,
            entries: [0; MAX_DIM * MAX_DIM],
        }
    }

    /// Builds a matrix from integer rows, reducing entries mod `p`.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        check_field(p, dim)?;
        let mut m = Self::zero(p, dim);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "row {r} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            for (c, &x) in row.iter().enumerate() {
                m.set(r, c, x.rem_euclid(p as i64) as u32);
            }
        }
        Ok(m)
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.entries[r * MAX_DIM + c]
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * MAX_DIM + c] = (v % self.p as u32) as u8;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.dim())
            .map(|r| (0..self.dim()).map(|c| self.get(r, c) as u32).collect())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p(), self.dim())
    }

    pub fn product(&self, other: &Self) -> Self {
        let d = self.dim();
        let p = self.p as u32;
        let mut out = Self::zero(p, d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0u32;
                for k in 0..d {
                    acc += self.get(i, k) as u32 * other.get(k, j) as u32;
                }
                out.entries[i * MAX_DIM + j] = (acc % p) as u8;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = *self;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                out.entries[i * MAX_DIM + j] = self.get(j, i);
            }
        }
        out
    }

    pub fn determinant(&self) -> u32 {
        let d = self.dim();
        let p = self.p as u32;
        let mut a: Vec<Vec<u32>> = self.rows();
        let mut det = 1u32;
        for col in 0..d {
            let Some(pivot) = (col..d).find(|&r| a[r][col] != 0) else {
                return 0;
            };
            if pivot != col {
                a.swap(pivot, col);
                det = (p - det) % p;
            }
            det = det * a[col][col] % p;
            let inv = inv_mod(a[col][col], p);
            for r in col + 1..d {
                let factor = a[r][col] * inv % p;
                if factor != 0 {
                    let (top, rest) = a.split_at_mut(r);
                    for (x, &y) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                        *x = (*x + p * p - factor * y % p) % p;
                    }
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.determinant() != 0
    }

    /// Inverse by Gauss-Jordan elimination, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.dim();
        let p = self.p as u32;
        let mut a = self.rows();
        let mut inv = Self::identity(p, d).rows();
        for col in 0..d {
            let pivot = (col..d).find(|&r| a[r][col] != 0)?;
            a.swap(pivot, col);
            inv.swap(pivot, col);
            let s = inv_mod(a[col][col], p);
            for c in 0..d {
                a[col][c] = a[col][c] * s % p;
                inv[col][c] = inv[col][c] * s % p;
            }
            for r in 0..d {
                if r != col && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..d {
                        a[r][c] = (a[r][c] + p * p - f * a[col][c] % p) % p;
                        inv[r][c] = (inv[r][c] + p * p - f * inv[col][c] % p) % p;
                    }
                }
            }
        }
        let mut out = Self::zero(p, d);
        for (r, row) in inv.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                out.set(r, c, x);
            }
        }
        Some(out)
    }

    /// `diag(a, b)`.
    pub fn block_diag(a: &Self, b: &Self) -> Result<Self> {
        if a.p != b.p {
            return Err(Error::InvalidInput(format!("mixed characteristic {} and {}", a.p, b.p)));
        }
        let d = a.dim() + b.dim();
        check_field(a.p(), d)?;
        let mut out = Self::zero(a.p(), d);
        for r in 0..a.dim() {
            for c in 0..a.dim() {
                out.set(r, c, a.get(r, c) as u32);
            }
        }
        for r in 0..b.dim() {
            for c in 0..b.dim() {
                out.set(a.dim() + r, a.dim() + c, b.get(r, c) as u32);
            }
        }
        Ok(out)
    }

    /// Block-diagonal matrix with `inner` in block `slot` of `blocks` and
    /// identity elsewhere.
    pub fn embed_block(inner: &Self, slot: usize, blocks: usize) -> Result<Self> {
        let b = inner.dim();
        let d = b * blocks;
        check_field(inner.p(), d)?;
        let mut out = Self::identity(inner.p(), d);
        for r in 0..b {
            for c in 0..b {
                out.set(slot * b + r, slot * b + c, inner.get(r, c) as u32);
            }
        }
        Ok(out)
    }

    /// Permutation of `blocks` blocks of size `block`: block `i` of a row
    /// vector moves to block `perm[i]`.
    pub fn block_permutation(p: u32, block: usize, perm: &[usize]) -> Result<Self> {
        let d = block * perm.len();
        check_field(p, d)?;
        let mut out = Self::zero(p, d);
        for (i, &j) in perm.iter().enumerate() {
            for k in 0..block {
                out.set(i * block + k, j * block + k, 1);
            }
        }
        Ok(out)
    }
}

impl GroupElement for Matrix {
    fn mul(&self, other: &Self) -> Self {
        self.product(other)
    }

    fn inverse(&self) -> Self {
        Matrix::inverse(self).expect("group elements are invertible")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// A subspace of `F_p^dim` kept in reduced echelon form.
#[derive(Debug, Clone)]
pub struct Subspace {
    p: u32,
    dim: usize,
    /// Rows with `pivots[i]` as leading column, leading entry 1.
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(p: u32, dim: usize) -> Self {
        Subspace {
            p,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn reduce(&self, v: &mut [u32]) {
        let p = self.p;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let f = v[piv];
            if f != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + p - f * r % p) % p;
                }
            }
        }
    }

    pub fn contains(&self, v: &FieldVector) -> bool {
        let mut w: Vec<u32> = v.entries().iter().map(|&e| e as u32).collect();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &FieldVector) -> bool {
        let p = self.p;
        let mut w: Vec<u32> = v.entries().iter().map(|&e| e as u32).collect();
        self.reduce(&mut w);
        let Some(piv) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv_mod(w[piv], p);
        for x in w.iter_mut() {
            *x = *x * s % p;
        }
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            let f = row[piv];
            if f != 0 {
                for (x, &y) in row.iter_mut().zip(&w) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(piv);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(p: u32, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(p, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn reduction_and_validation() {
        let a = m(3, &[&[4, -1], &[0, 7]]);
        assert_eq!(a.rows(), vec![vec![1, 2], vec![0, 1]]);
        assert!(Matrix::from_rows(4, &[vec![1]]).is_err());
        assert!(Matrix::from_rows(3, &[vec![1, 0], vec![1]]).is_err());
        assert!(Matrix::from_rows(2, &vec![vec![0; 9]; 9]).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(5, &[&[2, 1, 0], &[0, 3, 4], &[1, 0, 2]]);
        let inv = a.inverse().unwrap();
        assert!(a.product(&inv).is_identity());
        assert!(inv.product(&a).is_identity());
        assert_ne!(a.determinant(), 0);
        let s = m(3, &[&[1, 2], &[2, 1]]);
        assert_eq!(s.determinant(), 0);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn right_action_is_compatible_with_products() {
        let a = m(3, &[&[1, 1], &[0, 1]]);
        let b = m(3, &[&[0, 1], &[2, 0]]);
        for i in 0..9 {
            let v = FieldVector::from_index(i, 3, 2);
            assert_eq!(v.act(&a.product(&b)), v.act(&a).act(&b));
            assert_eq!(v.act_left(&a.product(&b)), v.act_left(&b).act_left(&a));
        }
    }

    #[test]
    fn vector_indices_are_lexicographic() {
        let v = FieldVector::from_entries(3, &[1, 0, 2]).unwrap();
        assert_eq!(v.index(), 11);
        assert_eq!(FieldVector::from_index(11, 3, 3), v);
        let all: Vec<FieldVector> = (0..27).map(|i| FieldVector::from_index(i, 3, 3)).collect();
        assert!(all.windows(2).all(|w| w[0].entries() < w[1].entries()));
    }

    #[test]
    fn block_constructions() {
        let g = m(2, &[&[1, 1], &[0, 1]]);
        let e = Matrix::embed_block(&g, 1, 3).unwrap();
        assert_eq!(e.dim(), 6);
        assert_eq!(e.get(2, 3), 1);
        assert_eq!(e.get(0, 1), 0);
        let perm = Matrix::block_permutation(2, 2, &[1, 2, 0]).unwrap();
        let v = FieldVector::from_entries(2, &[1, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(v.act(&perm).entries(), &[0, 1, 1, 0, 0, 0]);
        let d = Matrix::block_diag(&g, &Matrix::identity(2, 1)).unwrap();
        assert_eq!(d.dim(), 3);
        assert!(Matrix::block_diag(&g, &Matrix::identity(3, 1)).is_err());
    }

    #[test]
    fn subspace_spanning() {
        let mut s = Subspace::new(3, 3);
        assert!(s.insert(&FieldVector::from_entries(3, &[1, 2, 0]).unwrap()));
        assert!(!s.insert(&FieldVector::from_entries(3, &[2, 1, 0]).unwrap()));
        assert!(s.insert(&FieldVector::from_entries(3, &[0, 1, 1]).unwrap()));
        assert!(s.contains(&FieldVector::from_entries(3, &[1, 0, 1]).unwrap()));
        assert!(!s.contains(&FieldVector::from_entries(3, &[0, 0, 1]).unwrap()));
        assert_eq!(s.dim(), 2);
        assert!(s.insert(&FieldVector::from_entries(3, &[0, 0, 1]).unwrap()));
        assert!(s.is_full());
    }
}
