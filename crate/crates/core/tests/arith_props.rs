use m06_core::{Rational, RationalMatrix};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Rational::frac(p, q))
}

fn matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| {
        // sparse-ish entries so that rank deficiency actually occurs
        let entry = prop_oneof![2 => Just(Rational::zero()), 3 => rational()];
        prop::collection::vec(prop::collection::vec(entry, c), r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_plus_nullity(rows in matrix()) {
        let m = RationalMatrix::from_rows(&rows).unwrap();
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn rank_ignores_row_and_column_order_and_row_scaling(
        (rows, row_order, col_order) in matrix().prop_flat_map(|rows| {
            let r = rows.len();
            let c = rows[0].len();
            (
                Just(rows),
                Just((0..r).collect::<Vec<_>>()).prop_shuffle(),
                Just((0..c).collect::<Vec<_>>()).prop_shuffle(),
            )
        }),
        scales in prop::collection::vec((1i64..=7, 1i64..=7, any::<bool>()), 5),
    ) {
        let m = RationalMatrix::from_rows(&rows).unwrap();
        let shuffled: Vec<Vec<Rational>> = row_order
            .iter()
            .enumerate()
            .map(|(k, &i)| {
                let (p, q, neg) = scales[k];
                let s = Rational::frac(if neg { -p } else { p }, q);
                col_order.iter().map(|&j| &rows[i][j] * &s).collect()
            })
            .collect();
        prop_assert_eq!(RationalMatrix::from_rows(&shuffled).unwrap().rank(), m.rank());
    }

    #[test]
    fn transpose_preserves_rank(rows in matrix()) {
        let m = RationalMatrix::from_rows(&rows).unwrap();
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn inverse_round_trip(rows in prop::collection::vec(prop::collection::vec(rational(), 3), 3)) {
        let m = RationalMatrix::from_rows(&rows).unwrap();
        match m.inverse().unwrap() {
            Some(inv) => {
                prop_assert_eq!(m.rank(), 3);
                prop_assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(3));
            }
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!(&a - &a, Rational::zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }
}
