//! Randomized law checks over the exact towers.

use proptest::prelude::*;

use cubedet::{
    det2_explicit, det3_explicit, det_cofactor, det_permutation, io, is_zero_plane, permute_planes,
    scale_plane, swap_planes, Axis, CubicMatrix, Permutation, PlaneSelector, Rational,
};

fn matrix(order: usize) -> impl Strategy<Value = CubicMatrix<i64>> {
    prop::collection::vec(-9i64..=9, order * order * order)
        .prop_map(move |v| CubicMatrix::new(order, v).unwrap())
}

fn rational_matrix(order: usize) -> impl Strategy<Value = CubicMatrix<Rational>> {
    prop::collection::vec((-9i64..=9, 1i64..=9), order * order * order).prop_map(move |v| {
        let entries = v
            .into_iter()
            .map(|(p, q)| Rational::new(p, q).unwrap())
            .collect();
        CubicMatrix::new(order, entries).unwrap()
    })
}

fn axis() -> impl Strategy<Value = Axis> {
    prop_oneof![Just(Axis::I), Just(Axis::J), Just(Axis::K)]
}

fn permutation(order: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=order).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_based(v).unwrap())
}

proptest! {
    #[test]
    fn engines_agree_on_order_two(a in matrix(2)) {
        let d = det2_explicit(&a).unwrap();
        prop_assert_eq!(det_cofactor(&a).unwrap(), d);
        prop_assert_eq!(det_permutation(&a).unwrap(), d);
    }

    #[test]
    fn engines_agree_on_order_three(a in matrix(3)) {
        let d = det3_explicit(&a).unwrap();
        prop_assert_eq!(det_cofactor(&a).unwrap(), d);
        prop_assert_eq!(det_permutation(&a).unwrap(), d);
    }

    #[test]
    fn engines_agree_on_rational_matrices(a in rational_matrix(2)) {
        prop_assert_eq!(det2_explicit(&a).unwrap(), det_cofactor(&a).unwrap());
        prop_assert_eq!(det_permutation(&a).unwrap(), det_cofactor(&a).unwrap());
    }

    #[test]
    fn cofactor_equals_permutation_on_order_four(a in matrix(4)) {
        prop_assert_eq!(det_cofactor(&a).unwrap(), det_permutation(&a).unwrap());
    }

    #[test]
    fn scaling_one_plane_scales_the_determinant(
        a in matrix(3),
        ax in axis(),
        index in 1usize..=3,
        alpha in -3i64..=3,
    ) {
        let p = PlaneSelector::new(ax, index);
        let scaled = scale_plane(&a, p, alpha).unwrap();
        prop_assert_eq!(
            det_cofactor(&scaled).unwrap(),
            alpha * det_cofactor(&a).unwrap()
        );
        if alpha == 0 {
            prop_assert!(is_zero_plane(&scaled, p).unwrap());
        }
    }

    #[test]
    fn swap_sign_laws(a in matrix(3), ax in axis(), p in 1usize..=3, q in 1usize..=3) {
        prop_assume!(p != q);
        let swapped = swap_planes(&a, ax, p, q).unwrap();
        let d = det_cofactor(&a).unwrap();
        let expected = match ax {
            Axis::I => d,
            Axis::J | Axis::K => -d,
        };
        prop_assert_eq!(det_cofactor(&swapped).unwrap(), expected);
        // and the swap is an involution
        prop_assert_eq!(swap_planes(&swapped, ax, p, q).unwrap(), a);
    }

    #[test]
    fn general_plane_permutation_sign_law(a in matrix(3), ax in axis(), pi in permutation(3)) {
        let permuted = permute_planes(&a, ax, &pi).unwrap();
        let d = det_cofactor(&a).unwrap();
        let expected = match ax {
            Axis::I => d,
            Axis::J | Axis::K => i64::from(pi.sign()) * d,
        };
        prop_assert_eq!(det_cofactor(&permuted).unwrap(), expected);
    }

    #[test]
    fn determinant_is_additive_in_each_plane(
        a in matrix(3),
        other in matrix(3),
        ax in axis(),
        index in 1usize..=3,
    ) {
        let p = PlaneSelector::new(ax, index);
        // b agrees with a off the plane; c carries the entrywise plane sum
        let b = CubicMatrix::from_fn(3, |i, j, k| {
            if p.contains(i, j, k) {
                other.get(i, j, k).unwrap()
            } else {
                a.get(i, j, k).unwrap()
            }
        })
        .unwrap();
        let c = CubicMatrix::from_fn(3, |i, j, k| {
            if p.contains(i, j, k) {
                a.get(i, j, k).unwrap() + other.get(i, j, k).unwrap()
            } else {
                a.get(i, j, k).unwrap()
            }
        })
        .unwrap();
        prop_assert_eq!(
            det_cofactor(&c).unwrap(),
            det_cofactor(&a).unwrap() + det_cofactor(&b).unwrap()
        );
    }

    #[test]
    fn text_round_trip_is_the_identity(order in 1usize..=4, seed in any::<u64>()) {
        let a: CubicMatrix<i64> = CubicMatrix::random(order, seed, -9, 9).unwrap();
        let text = io::emit_text(&a);
        let b: CubicMatrix<i64> = io::parse_text(&text).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(io::emit_text(&b), text);
    }

    #[test]
    fn json_round_trip_is_the_identity(order in 1usize..=4, seed in any::<u64>()) {
        let a: CubicMatrix<i64> = CubicMatrix::random(order, seed, -9, 9).unwrap();
        let json = io::emit_json(&a);
        let b: CubicMatrix<i64> = io::parse_json(&json).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(io::emit_json(&b), json);
    }

    #[test]
    fn rational_round_trips_both_formats(a in rational_matrix(2)) {
        let text = io::emit_text(&a);
        prop_assert_eq!(io::parse_text::<Rational>(&text).unwrap(), a.clone());
        let json = io::emit_json(&a);
        prop_assert_eq!(io::parse_json::<Rational>(&json).unwrap(), a);
    }

    #[test]
    fn equality_detects_any_single_entry_change(a in matrix(2), pos in 0usize..8) {
        let mut entries = a.entries().to_vec();
        entries[pos] += 1;
        let b = CubicMatrix::new(2, entries).unwrap();
        prop_assert_ne!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cofactor_equals_permutation_on_order_five(a in matrix(5)) {
        prop_assert_eq!(det_cofactor(&a).unwrap(), det_permutation(&a).unwrap());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_expansion_equals_serial(a in matrix(5)) {
        use cubedet::det::permutation::{det_permutation_parallel, det_permutation_serial};
        prop_assert_eq!(
            det_permutation_parallel(&a).unwrap(),
            det_permutation_serial(&a).unwrap()
        );
    }
}
