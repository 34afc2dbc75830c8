//! Split extensions `HV` of a matrix group by its natural module.

use alloc::vec::Vec;
use core::hash::Hash;

use crate::error::Result;
use crate::group::{FiniteGroup, GroupElement};
use crate::matgroups::MatGroup;
use crate::matrix::{FieldVector, Matrix};

/// `(h, v)` acting on row vectors by `x ↦ x·h + v`.
///
/// Products compose left to right: `(h1, v1)(h2, v2) = (h1 h2, v1·h2 + v2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineElement {
    pub h: Matrix,
    pub v: FieldVector,
}

impl GroupElement for AffineElement {
    fn mul(&self, other: &Self) -> Self {
        AffineElement {
            h: self.h.product(&other.h),
            v: self.v.act(&other.h).add(&other.v),
        }
    }

    fn inverse(&self) -> Self {
        let hi = self.h.inverse().expect("affine elements have invertible linear part");
        AffineElement {
            h: hi,
            v: self.v.act(&hi).neg(),
        }
    }
}

/// `(h, v)` acting on column vectors by `x ↦ h·x + v`, composed as
/// `(h1, v1)(h2, v2) = (h1 h2, h1·v2 + v1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LeftAffineElement {
    pub h: Matrix,
    pub v: FieldVector,
}

impl GroupElement for LeftAffineElement {
    fn mul(&self, other: &Self) -> Self {
        LeftAffineElement {
            h: self.h.product(&other.h),
            v: other.v.act_left(&self.h).add(&self.v),
        }
    }

    fn inverse(&self) -> Self {
        let hi = self.h.inverse().expect("affine elements have invertible linear part");
        LeftAffineElement {
            h: hi,
            v: self.v.act_left(&hi).neg(),
        }
    }
}

fn unit_vectors(p: u32, dim: usize) -> Vec<FieldVector> {
    (0..dim)
        .map(|i| {
            let mut e = alloc::vec![0i64; dim];
            e[i] = 1;
            FieldVector::from_entries(p, &e).expect("dimension already validated")
        })
        .collect()
}

fn build<E: GroupElement>(h: &MatGroup, cap: usize, make: impl Fn(Matrix, FieldVector) -> E) -> Result<FiniteGroup<E>> {
    let (p, dim) = (h.p(), h.dim());
    let id = Matrix::identity(p, dim);
    let zero = FieldVector::zero(p, dim);
    let mut gens: Vec<E> = h.generators().into_iter().map(|g| make(g, zero)).collect();
    gens.extend(unit_vectors(p, dim).into_iter().map(|e| make(id, e)));
    FiniteGroup::close(make(id, zero), &gens, cap)
}

/// `HV` with the right action, of order `|H|·p^dim`.
pub fn affine_group(h: &MatGroup, cap: usize) -> Result<FiniteGroup<AffineElement>> {
    build(h, cap, |h, v| AffineElement { h, v })
}

/// The same extension built with the column action.
pub fn affine_group_left(h: &MatGroup, cap: usize) -> Result<FiniteGroup<LeftAffineElement>> {
    build(h, cap, |h, v| LeftAffineElement { h, v })
}

/// Indices of the translations `(1, v)`, which form the normal subgroup `V`.
pub fn translation_mask(g: &FiniteGroup<AffineElement>) -> Vec<bool> {
    g.elements().iter().map(|e| e.h.is_identity()).collect()
}

/// Checks associativity on `samples` strided triples and the identity and
/// inverse tables exactly.
pub fn spot_check_axioms<E: GroupElement + Hash>(g: &FiniteGroup<E>, samples: usize) -> bool {
    let n = g.order();
    let inverses_ok = (0..n).all(|x| g.mul(x, g.inv(x)) == 0 && g.mul(0, x) == x && g.mul(x, 0) == x);
    let assoc_ok = (0..samples).all(|i| {
        let (a, b, c) = ((7 * i + 1) % n, (131 * i + 3) % n, (1031 * i + 5) % n);
        g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
    });
    inverses_ok && assoc_ok
}
