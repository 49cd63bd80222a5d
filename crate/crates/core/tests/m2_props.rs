use m06_core::divisor::{canonical_divisor, psi_divisor};
use m06_core::m2::{hassett_keel_divisor, m2_chamber, pullback_to_m06, M2Divisor, M2Model};
use m06_core::Rational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=15).prop_map(|(p, q)| Rational::frac(p, q))
}

fn divisor() -> impl Strategy<Value = M2Divisor> {
    (any::<bool>(), rational(), rational(), rational()).prop_map(|(stack, l, a, b)| {
        if stack {
            M2Divisor::stack(l, a, b)
        } else {
            M2Divisor::coarse(l, a, b)
        }
    })
}

fn combine(a: &Rational, d1: &M2Divisor, b: &Rational, d2: &M2Divisor) -> M2Divisor {
    let (x, y) = (d1.to_stack().scale(a), d2.to_stack().scale(b));
    M2Divisor::stack(Rational::zero(), x.d0 + y.d0, x.d1 + y.d1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn pullback_is_linear(d1 in divisor(), d2 in divisor(), a in rational(), b in rational()) {
        let lhs = pullback_to_m06(&combine(&a, &d1, &b, &d2));
        let rhs = &pullback_to_m06(&d1).scale(&a) + &pullback_to_m06(&d2).scale(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chamber_is_scale_invariant(d in divisor(), s in (1i64..=30, 1i64..=30)) {
        let s = Rational::frac(s.0, s.1);
        let a = m2_chamber(&d).unwrap();
        let b = m2_chamber(&d.scale(&s)).unwrap();
        prop_assert_eq!((a.model, a.boundary_case), (b.model, b.boundary_case));
    }

    #[test]
    fn hassett_keel_ranges(k in 0i64..=4000) {
        let alpha = Rational::frac(7, 10) + Rational::frac(k, 1000);
        let model = m2_chamber(&hassett_keel_divisor(&alpha)).unwrap().model;
        let expected = if alpha == Rational::frac(7, 10) {
            M2Model::Point
        } else if alpha <= Rational::frac(9, 11) {
            M2Model::P6QuotientSL2
        } else if alpha < Rational::from(2) {
            M2Model::M2CoarseSpace
        } else {
            M2Model::SatakeA2
        };
        prop_assert_eq!(model, expected);
    }
}

#[test]
fn walls_correspond() {
    let k = canonical_divisor(6).unwrap();
    let segre_wall = &k + &psi_divisor(6).unwrap().scale(&Rational::frac(1, 3));
    let lambda = pullback_to_m06(&M2Divisor::stack(Rational::one(), Rational::zero(), Rational::zero()));
    assert_eq!(lambda, k.scale(&Rational::frac(-1, 2)));
    let other = pullback_to_m06(&M2Divisor::stack(Rational::zero(), Rational::one(), Rational::from(12)));
    assert_eq!(other, segre_wall.scale(&Rational::from(15)));
}
