use degbound_core::exact::{compare_to_root, factorial, rational};
use degbound_core::partitions::enumerate_partitions;
use degbound_core::{BigNat, Partition, RootDegree};
use num_traits::Zero;
use proptest::prelude::*;

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..12, 1..12).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

#[test]
fn squares_of_degrees_sum_to_factorial() {
    for n in 1..=25 {
        let total = enumerate_partitions(n).iter().fold(BigNat::zero(), |acc, l| {
            let f = l.degree();
            acc + &f * &f
        });
        assert_eq!(total, factorial(n as u64), "n = {n}");
    }
}

#[test]
fn conjugate_shapes_share_degrees() {
    for n in 1..=20 {
        for lambda in enumerate_partitions(n) {
            assert_eq!(lambda.degree(), lambda.conjugate().degree(), "{lambda}");
        }
    }
}

#[test]
fn branching_rules() {
    for n in 1..=15 {
        for lambda in enumerate_partitions(n) {
            let f = lambda.degree();
            let up: BigNat = lambda.addable().results().map(Partition::degree).sum();
            assert_eq!(up, &f * BigNat::from(n + 1), "up from {lambda}");
            let down: BigNat = lambda.removable().results().map(Partition::degree).sum();
            assert_eq!(down, f, "down from {lambda}");
        }
    }
}

proptest! {
    #[test]
    fn corner_counts(lambda in arb_partition()) {
        let a = lambda.addable().len();
        let r = lambda.removable().len();
        prop_assert_eq!(a, r + 1);
        let two_n = rational(2 * lambda.n() as i64, 1);
        // |A| < sqrt(2n) + 1 and |R| < sqrt(2n)
        prop_assert_eq!(compare_to_root(&rational(a as i64 - 1, 1), &two_n, RootDegree::Square), std::cmp::Ordering::Less);
        prop_assert_eq!(compare_to_root(&rational(r as i64, 1), &two_n, RootDegree::Square), std::cmp::Ordering::Less);
    }

    #[test]
    fn hooks_are_conjugation_invariant(lambda in arb_partition()) {
        prop_assert_eq!(lambda.hook_table().multiset(), lambda.conjugate().hook_table().multiset());
        prop_assert_eq!(lambda.hook_table().cell_count(), lambda.n());
    }

    #[test]
    fn conjugation_is_an_involution(lambda in arb_partition()) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().n(), lambda.n());
    }

    #[test]
    fn added_and_removed_cells_change_n_by_one(lambda in arb_partition()) {
        for mu in lambda.addable().results() {
            prop_assert_eq!(mu.n(), lambda.n() + 1);
        }
        for mu in lambda.removable().results() {
            prop_assert_eq!(mu.n() + 1, lambda.n());
        }
    }

    #[test]
    fn alternating_degree_halves_only_self_conjugate_shapes(lambda in arb_partition()) {
        prop_assume!(lambda.n() >= 2);
        let f = lambda.degree();
        let a = lambda.alt_degree();
        if lambda.is_self_conjugate() {
            prop_assert_eq!(&a + &a, f);
        } else {
            prop_assert_eq!(a, f);
        }
    }
}
