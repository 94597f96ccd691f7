use mobiuskit::rig::{ratio, Booleans, Integers, Naturals, Rationals, Reals, Rig, SeriesRig, TruncatedSeries};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn exact_laws<R: Rig>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    assert_eq!(r.add(&r.add(a, b), c), r.add(a, &r.add(b, c)));
    assert_eq!(r.add(a, b), r.add(b, a));
    assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)));
    assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)));
    assert_eq!(r.mul(&r.add(a, b), c), r.add(&r.mul(a, c), &r.mul(b, c)));
    assert_eq!(r.add(a, &r.zero()), *a);
    assert_eq!(r.mul(a, &r.one()), *a);
    assert_eq!(r.mul(&r.one(), a), *a);
    assert!(r.is_zero(&r.mul(a, &r.zero())));
    assert!(r.is_zero(&r.mul(&r.zero(), a)));
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-12 * x.abs().max(y.abs()).max(1.0)
}

fn series(cs: &[i64], den: i64) -> TruncatedSeries {
    TruncatedSeries::from_coefficients(cs.iter().map(|&c| ratio(c, den)), 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn naturals(a in 0u64..1000, b in 0u64..1000, c in 0u64..1000) {
        exact_laws(&Naturals, &BigUint::from(a), &BigUint::from(b), &BigUint::from(c));
    }

    #[test]
    fn integers(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
        exact_laws(&Integers, &BigInt::from(a), &BigInt::from(b), &BigInt::from(c));
    }

    #[test]
    fn rationals(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in 1i64..20, e in 1i64..20, f in 1i64..20) {
        exact_laws(&Rationals, &ratio(a, d), &ratio(b, e), &ratio(c, f));
    }

    #[test]
    fn booleans(a: bool, b: bool, c: bool) {
        exact_laws(&Booleans, &a, &b, &c);
    }

    #[test]
    fn truncated_series(
        a in prop::collection::vec(-5i64..5, 1..7),
        b in prop::collection::vec(-5i64..5, 1..7),
        c in prop::collection::vec(-5i64..5, 1..7),
        d in 1i64..4,
    ) {
        exact_laws(&SeriesRig::new(5), &series(&a, d), &series(&b, 1), &series(&c, 2));
    }

    #[test]
    fn reals(a in -1e3f64..1e3, b in -1e3f64..1e3, c in -1e3f64..1e3) {
        let r = Reals;
        prop_assert!(close(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c))));
        prop_assert!(close(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c))));
        let lhs = r.mul(&a, &r.add(&b, &c));
        let rhs = r.add(&r.mul(&a, &b), &r.mul(&a, &c));
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (a.abs() * (b.abs() + c.abs())).max(1.0));
        prop_assert_eq!(r.mul(&a, &r.one()), a);
        prop_assert_eq!(r.add(&a, &r.zero()), a);
    }
}

fn characteristic_zero<R: Rig>(r: &R) {
    assert!(r.descriptor().characteristic_zero, "{}", r.descriptor().name);
    for n in 1..=100 {
        assert!(!r.is_zero(&r.from_count(n)), "{} · 1 = 0 in {}", n, r.descriptor().name);
    }
}

#[test]
fn every_rig_has_characteristic_zero() {
    characteristic_zero(&Naturals);
    characteristic_zero(&Integers);
    characteristic_zero(&Rationals);
    characteristic_zero(&Reals);
    characteristic_zero(&Booleans);
    characteristic_zero(&SeriesRig::new(4));
}
