//! Class numbers of split extensions `HV` by counting over the dual module.
//!
//! For an abelian normal complement `V`, `k(V ⋊ H)` is the sum over the
//! `H`-orbits on the characters of `V` of `k(H_χ)`. With `H` acting on row
//! vectors by `v ↦ v·h`, the character `v ↦ ζ^{a·v}` is sent to the one
//! labelled `a·(h^{-1})^T`. Stabilizer class numbers come from counting
//! commuting pairs, so nothing here touches the class routines under test
//! except in the small cross-checks.

use degbound_core::group_stats::{affine_group, conjugacy_classes};
use degbound_core::matgroups::{general_linear, special_linear, wreath, MatGroup};
use degbound_core::matrix::{FieldVector, Matrix};

const CAP: usize = 1_000_000;

fn class_number(elements: &[Matrix]) -> usize {
    let mut pairs = 0;
    for (i, x) in elements.iter().enumerate() {
        pairs += 1;
        for y in &elements[i + 1..] {
            if x.product(y) == y.product(x) {
                pairs += 2;
            }
        }
    }
    assert_eq!(pairs % elements.len(), 0);
    pairs / elements.len()
}

fn dual_orbit_class_number(h: &MatGroup) -> usize {
    let contragredient: Vec<Matrix> = h
        .elements()
        .iter()
        .map(|m| m.inverse().expect("invertible").transpose())
        .collect();
    let n = h.space_size();
    let mut seen = vec![false; n];
    let mut total = 0;
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let va = FieldVector::from_index(a, h.p(), h.dim());
        let mut stabilizer = Vec::new();
        for (h_elt, c) in h.elements().iter().zip(&contragredient) {
            let image = va.act(c);
            seen[image.index()] = true;
            if image == va {
                stabilizer.push(*h_elt);
            }
        }
        total += class_number(&stabilizer);
    }
    total
}

fn direct_class_number(h: &MatGroup) -> usize {
    conjugacy_classes(&affine_group(h, CAP).unwrap()).k()
}

#[test]
fn oracle_agrees_with_direct_counts_on_small_groups() {
    let cases = [
        (general_linear(1, 5, CAP).unwrap(), 5),
        (general_linear(2, 2, CAP).unwrap(), 5),
        (special_linear(2, 3, CAP).unwrap(), 10),
        (general_linear(3, 2, CAP).unwrap(), 11),
    ];
    for (h, expected) in &cases {
        assert_eq!(dual_orbit_class_number(h), *expected);
        assert_eq!(direct_class_number(h), *expected);
    }
}

#[test]
fn affine_general_linear_two_three() {
    let h = general_linear(2, 3, CAP).unwrap();
    assert_eq!(dual_orbit_class_number(&h), 11);
    assert_eq!(direct_class_number(&h), 11);
}

#[test]
fn wreath_square_of_gl23_has_77_classes() {
    let h = wreath(&general_linear(2, 3, CAP).unwrap(), 2, CAP).unwrap();
    assert_eq!(h.order(), 4608);
    let k = dual_orbit_class_number(&h);
    assert_eq!(k, 77);
    assert!(k <= h.space_size());
    assert_eq!(direct_class_number(&h), k);
}
