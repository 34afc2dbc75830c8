use degbound_core::group::FiniteGroup;
use degbound_core::group_stats::{
    character_degrees, commuting_pair_count, conjugacy_classes, conjugacy_classes_exhaustive, fitting_order,
    DEFAULT_SYLOW_BUDGET,
};
use degbound_core::matgroups::{
    count_size2_base_classes, gl_order, min_base_size, orbit_sizes, orbits, stabilizer_order, MatGroup,
};
use degbound_core::matrix::Matrix;
use degbound_core::BigNat;
use num_integer::Integer;
use proptest::prelude::*;

const CAP: usize = 20_000;

/// Small fields and dimensions whose general linear group has order at
/// most 480.
const SHAPES: [(u32, usize); 6] = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 2)];

fn arb_group() -> impl Strategy<Value = MatGroup> {
    (0..SHAPES.len())
        .prop_flat_map(|i| {
            let (p, dim) = SHAPES[i];
            let matrix = prop::collection::vec(0..p as i64, dim * dim);
            (Just((p, dim)), prop::collection::vec(matrix, 1..=2))
        })
        .prop_map(|((p, dim), raw)| {
            let gens: Vec<Matrix> = raw
                .iter()
                .map(|entries| {
                    let rows: Vec<Vec<i64>> = entries.chunks(dim).map(<[i64]>::to_vec).collect();
                    Matrix::from_rows(p, &rows).unwrap()
                })
                .filter(Matrix::is_invertible)
                .collect();
            MatGroup::close(p, dim, &gens, CAP).unwrap()
        })
}

fn check_classes<E: degbound_core::group::GroupElement>(g: &FiniteGroup<E>) -> Result<(), TestCaseError> {
    let n = g.order();
    let classes = conjugacy_classes(g);
    prop_assert_eq!(classes.sizes.iter().sum::<usize>(), n);
    prop_assert!(classes.sizes.iter().all(|s| n.is_multiple_of(*s)));
    prop_assert_eq!(classes.representatives[0], g.identity());
    prop_assert_eq!(&classes, &conjugacy_classes_exhaustive(g));
    prop_assert_eq!(commuting_pair_count(g), (classes.k() * n) as u64);

    let degrees = character_degrees(g, &classes, CAP).unwrap();
    prop_assert_eq!(degrees.degrees.iter().map(|d| d * d).sum::<u64>(), n as u64);
    prop_assert_eq!(degrees.degrees.len(), classes.k());
    prop_assert!(degrees.degrees.iter().all(|d| (n as u64).is_multiple_of(*d)));
    prop_assert_eq!(degrees.multiplicity(1), n / g.derived_subgroup_order());
    prop_assert!(n as u64 <= classes.k() as u64 * degrees.b * degrees.b);

    let fit = fitting_order(g, &classes, None, DEFAULT_SYLOW_BUDGET).unwrap();
    prop_assert_eq!(n as u64 % fit.order, 0);
    if g.is_solvable() && n > 1 {
        prop_assert!(fit.order > 1);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orders_divide_the_general_linear_group(g in arb_group()) {
        let gl = gl_order(g.dim(), g.p());
        prop_assert!(gl.is_multiple_of(&BigNat::from(g.order())));
    }

    #[test]
    fn orbit_stabilizer(g in arb_group()) {
        let sizes = orbit_sizes(&g);
        prop_assert_eq!(sizes.iter().sum::<usize>(), g.space_size());
        for orbit in orbits(&g) {
            prop_assert_eq!(orbit.size * stabilizer_order(&g, &orbit.representative), g.order());
        }
        for v in g.vectors() {
            prop_assert_eq!(g.order() % stabilizer_order(&g, &v), 0);
        }
    }

    #[test]
    fn base_witnesses_recheck(g in arb_group()) {
        if let Some((size, w)) = min_base_size(&g, 4).unwrap() {
            prop_assert_eq!(w.vectors.len(), size);
            prop_assert_eq!(w.recheck(&g), 1);
        }
        let classes = count_size2_base_classes(&g).unwrap();
        prop_assert!(classes.all_regular);
        prop_assert_eq!(classes.classes * g.order(), classes.base_pairs);
    }

    #[test]
    fn class_and_degree_invariants(g in arb_group()) {
        check_classes(g.group())?;
    }
}

#[test]
fn invariants_on_named_groups() {
    use degbound_core::group::Permutation;
    use degbound_core::group_stats::affine_group;
    use degbound_core::matgroups::{general_linear, special_linear};

    let s5 = FiniteGroup::close(
        Permutation::identity(5),
        &[
            Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap(),
            Permutation::from_cycles(5, &[&[1, 2]]).unwrap(),
        ],
        CAP,
    )
    .unwrap();
    check_classes(&s5).unwrap();
    check_classes(special_linear(2, 5, CAP).unwrap().group()).unwrap();
    check_classes(general_linear(3, 2, CAP).unwrap().group()).unwrap();
    check_classes(&affine_group(&general_linear(2, 3, CAP).unwrap(), CAP).unwrap()).unwrap();
}
