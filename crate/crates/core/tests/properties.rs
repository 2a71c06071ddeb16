use num_bigint::BigInt;
use proptest::prelude::*;

use spsw_core::fgab::{present_group, smith_normal_form, IntMatrix};
use spsw_core::surface::{
    build_log_transform, numerical_invariants, LogTransformInput, TorsionPoint,
};
use spsw_core::swcalc::{sw_elliptic, wall_crossing_delta};

fn b(x: i64) -> BigInt {
    BigInt::from(x)
}

fn matrix(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(cols, rows).unwrap()
}

/// Elementary operations on the relation rows: swaps and adding a multiple
/// of one row to another. None of them changes the presented group.
fn shuffle_relations(rows: &mut [Vec<i64>], ops: &[(usize, usize, i64)]) {
    let n = rows.len();
    for &(i, j, k) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            rows.swap(0, i);
        } else {
            let src = rows[j].clone();
            for (x, y) in rows[i].iter_mut().zip(src) {
                *x += k * y;
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn presentation_invariance(
        rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 4), 1..4),
        ops in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..8),
        extra in prop::collection::vec(-3i64..=3, 3),
    ) {
        let g = present_group(4, &matrix(&rows, 4)).unwrap();

        let mut shuffled = rows.clone();
        shuffle_relations(&mut shuffled, &ops);
        // a redundant relation: a combination of the existing ones
        let redundant: Vec<i64> = (0..4)
            .map(|c| rows.iter().zip(&extra).map(|(r, k)| r[c] * k).sum())
            .collect();
        shuffled.push(redundant);
        let h = present_group(4, &matrix(&shuffled, 4)).unwrap();

        prop_assert_eq!(g.free_rank(), h.free_rank());
        prop_assert_eq!(g.torsion_orders(), h.torsion_orders());
    }

    #[test]
    fn smith_form_is_deterministic(
        rows in prop::collection::vec(prop::collection::vec(-20i64..=20, 3), 1..4),
    ) {
        let a = matrix(&rows, 3);
        prop_assert_eq!(smith_normal_form(&a), smith_normal_form(&a));
    }

    #[test]
    fn relations_vanish_in_the_group(
        rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 1..4),
    ) {
        let g = present_group(3, &matrix(&rows, 3)).unwrap();
        for r in &rows {
            prop_assert!(g.element(r).unwrap().is_zero());
        }
    }
}

fn four_triple() -> spsw_core::surface::SurfaceModel {
    let tp = |m, u, v| TorsionPoint { m, u, v };
    build_log_transform(&LogTransformInput {
        zetas: vec![tp(3, 1, 1), tp(3, 1, 0), tp(3, 1, 0), tp(3, -3, -1)],
    })
    .unwrap()
}

#[test]
fn sw_difference_is_wall_crossing() {
    let s = four_triple();
    for n in 0..=6i64 {
        for e in 0..=2i64 {
            let beta = s.class(&[0, n, e, 0, 0, 0]).unwrap();
            let dual = s.canonical.sub(&beta).unwrap();
            let lhs = sw_elliptic(&s, &beta).unwrap().value - sw_elliptic(&s, &dual).unwrap().value;
            assert_eq!(lhs, wall_crossing_delta(&s, &beta).unwrap(), "({n},{e})");
            assert_eq!(lhs, b(3 * (n + e) - 3));
        }
    }
}

#[test]
fn numerical_invariant_identities() {
    let s = four_triple();
    for coeffs in [
        [0, 1, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 2],
        [2, -1, 0, 3, 0, 1],
    ] {
        let beta = s.class(&coeffs).unwrap();
        let inv = numerical_invariants(&s, &beta).unwrap();
        let chi_o = b(s.hodge.chi_o);
        assert_eq!(&inv.h * 2 - 2, &inv.beta_sq + &inv.beta_k);
        assert_eq!(&inv.chi_beta * 2, &inv.beta_sq - &inv.beta_k + &chi_o * 2);
        assert_eq!(&inv.m * 2, &inv.chi_beta * 2 - &chi_o * 2);
    }
}
