use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::exact::rational;
use crate::group::tests::symmetric_group;
use crate::group::Permutation;
use crate::matgroups::{general_linear, special_linear, trivial_group, GroupMetadata, MatGroup, DEFAULT_CAP};
use crate::matrix::Matrix;
use crate::{Error, Status};

fn gl(n: usize, p: u32) -> MatGroup {
    general_linear(n, p, DEFAULT_CAP).unwrap()
}

fn agl(n: usize, p: u32) -> FiniteGroup<AffineElement> {
    affine_group(&gl(n, p), DEFAULT_CAP).unwrap()
}

fn quaternion() -> FiniteGroup<Matrix> {
    let i = Matrix::from_rows(3, &[vec![0, 2], vec![1, 0]]).unwrap();
    let j = Matrix::from_rows(3, &[vec![1, 1], vec![1, 2]]).unwrap();
    MatGroup::close(3, 2, &[i, j], 100).unwrap().group().clone()
}

fn m11() -> FiniteGroup<Permutation> {
    let a = Permutation::from_cycles(11, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]).unwrap();
    let b = Permutation::from_cycles(11, &[&[3, 7, 11, 8], &[4, 10, 5, 6]]).unwrap();
    FiniteGroup::close(Permutation::identity(11), &[a, b], 10_000).unwrap()
}

#[test]
fn affine_orders_and_axioms() {
    assert_eq!(agl(2, 2).order(), 24);
    assert_eq!(agl(2, 3).order(), 432);
    let v = affine_group(&trivial_group(2, 2).unwrap(), 100).unwrap();
    assert_eq!(v.order(), 4);
    assert!(v.is_abelian());
    assert_eq!(v.exponent(), 2);
    assert!(spot_check_axioms(&agl(2, 3), 500));
    assert!(matches!(
        affine_group(&gl(2, 3), 431),
        Err(Error::CapExceeded { cap: 431 })
    ));
}

#[test]
fn class_counts_agree_with_exhaustive_conjugation() {
    let s3 = symmetric_group(3);
    assert_eq!(conjugacy_classes(&s3).k(), 3);
    for (g, want) in [(agl(2, 2), 5), (agl(2, 3), 11)] {
        let fast = conjugacy_classes(&g);
        let slow = conjugacy_classes_exhaustive(&g);
        assert_eq!(fast, slow);
        assert_eq!(fast.k(), want);
        assert_eq!(fast.sizes.iter().sum::<usize>(), g.order());
        assert!(fast.sizes.iter().all(|s| g.order() % s == 0));
        assert_eq!((fast.representatives[0], fast.sizes[0]), (0, 1));
    }
}

#[test]
fn class_count_is_independent_of_action_side() {
    for h in [gl(2, 2), gl(2, 3), special_linear(2, 3, DEFAULT_CAP).unwrap()] {
        let right = affine_group(&h, DEFAULT_CAP).unwrap();
        let left = affine_group_left(&h, DEFAULT_CAP).unwrap();
        assert_eq!(right.order(), left.order());
        assert_eq!(conjugacy_classes(&right).k(), conjugacy_classes(&left).k());
    }
}

#[test]
fn commuting_probabilities() {
    let q8 = quaternion();
    assert_eq!(q8.order(), 8);
    assert!(!q8.is_abelian());
    let cp = commuting_probability(&q8, &conjugacy_classes(&q8)).unwrap();
    assert_eq!(cp.value, rational(5, 8));
    assert_eq!(cp.commuting_pairs, Some(40));

    let c4 = gl(1, 5);
    let cp = commuting_probability(c4.group(), &conjugacy_classes(c4.group())).unwrap();
    assert_eq!(cp.value, rational(1, 1));

    let g = agl(2, 3);
    let cp = commuting_probability(&g, &conjugacy_classes(&g)).unwrap();
    assert_eq!(cp.value, rational(11, 432));
    assert_eq!(cp.commuting_pairs, Some(11 * 432));
}

#[test]
fn fitting_subgroups() {
    let g = agl(2, 3);
    let c = conjugacy_classes(&g);
    let f = fitting_order(&g, &c, None, DEFAULT_SYLOW_BUDGET).unwrap();
    assert_eq!(f.order, 9);
    assert_eq!(f.p_cores, vec![(2, 1), (3, 9)]);
    // O_3 is exactly the translation subgroup.
    let sylow3 = sylow_subgroup(&g, 3, DEFAULT_SYLOW_BUDGET).unwrap();
    assert_eq!(p_core(&g, &c, &sylow3), affine::translation_mask(&g));

    let s4 = agl(2, 2);
    let f = fitting_order(&s4, &conjugacy_classes(&s4), None, DEFAULT_SYLOW_BUDGET).unwrap();
    assert_eq!(f.order, 4);

    let q8 = quaternion();
    let f = fitting_order(&q8, &conjugacy_classes(&q8), None, DEFAULT_SYLOW_BUDGET).unwrap();
    assert_eq!(f.order, 8);

    let simple = gl(3, 2);
    let f = fitting_order(
        simple.group(),
        &conjugacy_classes(simple.group()),
        None,
        DEFAULT_SYLOW_BUDGET,
    )
    .unwrap();
    assert_eq!(f.order, 1);
}

#[test]
fn fitting_budget_and_metadata() {
    let g = agl(2, 3);
    let c = conjugacy_classes(&g);
    assert!(matches!(fitting_order(&g, &c, None, 10), Err(Error::Unavailable(_))));
    let f = fitting_order(&g, &c, Some(9), 10).unwrap();
    assert_eq!((f.order, f.source), (9, FittingSource::Metadata));
    assert!(matches!(
        fitting_order(&g, &c, Some(27), DEFAULT_SYLOW_BUDGET),
        Err(Error::Inconsistent(_))
    ));
}

#[test]
fn sylow_orders() {
    let g = gl(2, 3);
    for (p, size) in [(2, 16), (3, 3)] {
        let mask = sylow_subgroup(g.group(), p, DEFAULT_SYLOW_BUDGET).unwrap();
        assert_eq!(mask.iter().filter(|&&m| m).count(), size);
    }
}

fn check_degree_identities<E: GroupElement>(g: &FiniteGroup<E>) -> DegreeData {
    let c = conjugacy_classes(g);
    let d = character_degrees(g, &c, DEFAULT_DEGREE_CAP).unwrap();
    assert_eq!(d.degrees.len(), c.k());
    assert_eq!(d.degrees.iter().map(|x| x * x).sum::<u64>(), g.order() as u64);
    assert!(d.degrees.iter().all(|x| (g.order() as u64).is_multiple_of(*x)));
    assert_eq!(d.multiplicity(1), g.order() / g.derived_subgroup_order());
    d
}

#[test]
fn character_degrees_of_small_groups() {
    assert_eq!(check_degree_identities(&agl(2, 2)).degrees, vec![1, 1, 2, 3, 3]);
    assert_eq!(check_degree_identities(&symmetric_group(3)).degrees, vec![1, 1, 2]);
    assert_eq!(check_degree_identities(&quaternion()).degrees, vec![1, 1, 1, 1, 2]);
    assert_eq!(check_degree_identities(gl(1, 5).group()).degrees, vec![1; 4]);
    assert_eq!(
        check_degree_identities(gl(3, 2).group()).degrees,
        vec![1, 3, 3, 6, 7, 8]
    );
    assert_eq!(
        check_degree_identities(gl(2, 3).group()).degrees,
        vec![1, 1, 2, 2, 2, 3, 3, 4]
    );
    assert_eq!(
        check_degree_identities(&symmetric_group(5)).degrees,
        vec![1, 1, 4, 4, 5, 5, 6]
    );
    let agl23 = check_degree_identities(&agl(2, 3));
    assert_eq!(agl23.degrees, vec![1, 1, 2, 2, 2, 3, 3, 4, 8, 8, 16]);
    assert_eq!(agl23.b, 16);
}

#[test]
fn mathieu_eleven_degrees() {
    let g = m11();
    assert_eq!(g.order(), 7920);
    let d = check_degree_identities(&g);
    assert_eq!(d.degrees, vec![1, 10, 10, 10, 11, 16, 16, 44, 45, 55]);
    assert_eq!(d.b, 55);
    assert_eq!(d.multiplicity(55), 1);
}

#[test]
fn degree_modulus_properties() {
    for (n, e) in [(24u64, 12u64), (432, 24), (7920, 1320)] {
        let p = degree_modulus(n, e);
        assert_eq!(p % e, 1);
        assert!(p * p > 4 * n);
        assert_ne!(n % p, 0);
    }
    let g = agl(2, 3);
    assert!(matches!(
        character_degrees(&g, &conjugacy_classes(&g), 100),
        Err(Error::CapExceeded { cap: 100 })
    ));
}

#[test]
fn solvability() {
    assert!(is_solvable(&agl(2, 3)));
    assert!(is_solvable(gl(1, 5).group()));
    assert!(!is_solvable(gl(3, 2).group()));
    assert!(!is_solvable(&symmetric_group(5)));
}

fn report_status(reports: &[crate::CheckReport], check: &str) -> Status {
    reports.iter().find(|r| r.id.ends_with(check)).unwrap().status
}

#[test]
fn inequality_battery_on_agl23() {
    let g = agl(2, 3);
    let meta = GroupMetadata {
        fitting_order: Some(9),
        solvable: Some(true),
        ..Default::default()
    };
    let prof = profile(&g, "AGL(2,3)", &meta, &ProfileOptions::default()).unwrap();
    let exp = vec![Expectation::parse("k-le-fitting=expected-fail").unwrap()];
    let reports = verify_inequalities(&prof, None, &exp);
    assert_eq!(reports.len(), CHECK_IDS.len());
    for id in [
        "index-le-b4",
        "gluck-bound",
        "cp-bound",
        "k-le-pi-part",
        "hall-index-le-b2",
        "k-le-p-part",
        "order-over-k-le-b2",
    ] {
        assert_eq!(report_status(&reports, id), Status::Pass, "{id}");
    }
    assert_eq!(report_status(&reports, "k-le-fitting"), Status::ExpectedFail);
    let pi = reports.iter().find(|r| r.id.ends_with("k-le-pi-part")).unwrap();
    assert_eq!(pi.value("|G|_pi"), Some("27"));
    let cp = reports.iter().find(|r| r.id.ends_with("cp-bound")).unwrap();
    assert_eq!(cp.value("k^2*index"), Some("5808"));
    assert_eq!(cp.value("|G|^2"), Some("186624"));

    // Without the request the bare inequality is not run.
    let reports = verify_inequalities(&prof, None, &[]);
    assert_eq!(report_status(&reports, "k-le-fitting"), Status::Skipped);
}

#[test]
fn inequality_battery_on_sym4_and_simple() {
    let g = agl(2, 2);
    let prof = profile(&g, "S4", &GroupMetadata::default(), &ProfileOptions::default()).unwrap();
    let reports = verify_inequalities(&prof, None, &[]);
    let gluck = reports.iter().find(|r| r.id.ends_with("gluck-bound")).unwrap();
    assert_eq!(gluck.status, Status::Pass);
    assert_eq!(gluck.value("index"), Some("6"));
    assert_eq!(gluck.value("b^2"), Some("9"));
    let pp = reports.iter().find(|r| r.id.ends_with("k-le-p-part")).unwrap();
    assert_eq!(pp.value("|G|_p"), Some("8"));
    assert_eq!(pp.status, Status::Pass);

    let h = gl(3, 2);
    let prof = profile(
        h.group(),
        "GL(3,2)",
        &GroupMetadata::default(),
        &ProfileOptions::default(),
    )
    .unwrap();
    let reports = verify_inequalities(&prof, None, &[]);
    assert_eq!(report_status(&reports, "index-le-b4"), Status::Pass);
    assert_eq!(report_status(&reports, "gluck-bound"), Status::Skipped);
    assert!(reports.iter().all(|r| !r.status.is_unexpected()));

    let bad = GroupMetadata {
        solvable: Some(true),
        ..Default::default()
    };
    assert!(profile(h.group(), "GL(3,2)", &bad, &ProfileOptions::default()).is_err());
}

#[test]
fn affine_class_count_check() {
    let r = verify_k_affine_le_module("gated", None, DEFAULT_CAP, false).unwrap();
    assert_eq!(r.status, Status::AwaitingGenerators);
    let r = verify_k_affine_le_module("agl23", Some(&gl(2, 3)), DEFAULT_CAP, true).unwrap();
    assert_eq!(r.status, Status::ExpectedFail);
    assert_eq!(r.value("k(HV)"), Some("11"));
    assert!(Expectation::parse("x=maybe").is_err());
    assert!(Expectation::parse("=expected-fail").is_err());
}

#[test]
fn degree_identities_on_more_groups() {
    let groups: Vec<MatGroup> = vec![special_linear(2, 3, DEFAULT_CAP).unwrap(), gl(2, 2), gl(2, 5)];
    for g in &groups {
        check_degree_identities(g.group());
    }
}
