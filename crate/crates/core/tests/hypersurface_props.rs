use m06_core::hypersurface::{
    evaluate, is_singular_point, line_incidence, pair_partition_lines, random_segre_point,
    HypersurfaceId, P5Point,
};
use m06_core::Rational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn point() -> impl Strategy<Value = P5Point> {
    prop::array::uniform6((-12i64..=12, 1i64..=6).prop_map(|(p, q)| Rational::frac(p, q)))
        .prop_filter_map("zero", |c| P5Point::new(c).ok())
}

fn sigma() -> impl Strategy<Value = [usize; 6]> {
    Just(vec![0usize, 1, 2, 3, 4, 5])
        .prop_shuffle()
        .prop_map(|v| v.try_into().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn forms_are_symmetric(p in point(), s in sigma()) {
        for h in [HypersurfaceId::SegreCubic, HypersurfaceId::IgusaQuartic] {
            prop_assert_eq!(evaluate(h, &p.permuted(&s)), evaluate(h, &p));
        }
    }

    #[test]
    fn forms_are_homogeneous(p in point(), t in (1i64..=9, 1i64..=9)) {
        let t = Rational::frac(t.0, t.1);
        let scaled = P5Point::new(p.coords().clone().map(|x| x * &t)).unwrap();
        let (l, f) = evaluate(HypersurfaceId::IgusaQuartic, &p);
        prop_assert_eq!(evaluate(HypersurfaceId::IgusaQuartic, &scaled), (l * &t, f * t.pow(4)));
    }

    #[test]
    fn pair_partition_lines_are_singular(a in -20i64..=20, b in -20i64..=20) {
        prop_assume!(a != 0 || b != 0);
        for line in pair_partition_lines() {
            let p = line.point(&Rational::from(a), &Rational::from(b)).unwrap();
            prop_assert_eq!(evaluate(HypersurfaceId::IgusaQuartic, &p), (Rational::zero(), Rational::zero()));
            prop_assert!(is_singular_point(HypersurfaceId::IgusaQuartic, &p).unwrap());
        }
    }

    #[test]
    fn chord_points_are_on_the_cubic(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_segre_point(&mut rng);
        prop_assert_eq!(evaluate(HypersurfaceId::SegreCubic, &p), (Rational::zero(), Rational::zero()));
    }
}

#[test]
fn incidence_is_a_configuration_15_3() {
    let inc = line_incidence();
    assert_eq!(inc.lines.len(), 15);
    assert_eq!(inc.points.len(), 15);
    assert!(inc.points_per_line.iter().all(|&n| n == 3));
    assert!(inc.lines_per_point().iter().all(|&n| n == 3));
    for ip in &inc.points {
        assert!(is_singular_point(HypersurfaceId::IgusaQuartic, &ip.point).unwrap());
    }
}
