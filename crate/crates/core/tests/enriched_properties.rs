use mobiuskit::corpus;
use mobiuskit::enriched::{self, MetricSpace};
use mobiuskit::incidence;
use mobiuskit::rig::Rationals;
use proptest::prelude::*;

fn points(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

fn space(coords: &[(f64, f64)]) -> MetricSpace {
    let cs: Vec<Vec<f64>> = coords.iter().map(|&(x, y)| vec![x, y]).collect();
    MetricSpace::from_coords(points(cs.len()), &cs).unwrap()
}

fn coords() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 1..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn magnitude_is_permutation_invariant(cs in coords(), seed: u64) {
        let m = space(&cs);
        let mut perm: Vec<usize> = (0..cs.len()).collect();
        let mut rng = corpus::rng(seed);
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        if let Ok(a) = enriched::magnitude(&m) {
            let b = enriched::magnitude(&m.permuted(&perm)).unwrap();
            prop_assert!((a.magnitude - b.magnitude).abs() < 1e-10);
        }
    }

    #[test]
    fn magnitude_is_additive_on_coproducts(left in coords(), right in coords()) {
        let (a, b) = (space(&left), space(&right));
        if let (Ok(x), Ok(y)) = (enriched::magnitude(&a), enriched::magnitude(&b)) {
            let sum = enriched::magnitude(&a.coproduct(&b)).unwrap();
            prop_assert!((sum.magnitude - (x.magnitude + y.magnitude)).abs() < 1e-10);
        }
    }

    #[test]
    fn euler_characteristic_is_additive_on_coproducts(s: u64, t: u64) {
        let a = corpus::random_category(&mut corpus::rng(s));
        let b = corpus::random_category(&mut corpus::rng(t));
        if let (Ok(x), Ok(y)) = (
            incidence::euler_characteristic(&a, &Rationals),
            incidence::euler_characteristic(&b, &Rationals),
        ) {
            let sum = incidence::euler_characteristic(&a.coproduct(&b), &Rationals).unwrap();
            prop_assert_eq!(sum, x + y);
        }
    }

    #[test]
    fn collinear_closed_form(gaps in prop::collection::vec(0.05f64..3.0, 1..8)) {
        let mut positions = vec![0.0];
        for g in &gaps {
            positions.push(positions.last().unwrap() + g);
        }
        let cs: Vec<Vec<f64>> = positions.iter().map(|&x| vec![x]).collect();
        let m = MetricSpace::from_coords(points(cs.len()), &cs).unwrap();
        let want = 1.0 + gaps.iter().map(|g| (g / 2.0).tanh()).sum::<f64>();
        prop_assert!((enriched::magnitude(&m).unwrap().magnitude - want).abs() < 1e-9);
    }
}

#[test]
fn l1_product_of_segments_is_multiplicative() {
    let a = MetricSpace::segment(4, 1.5);
    let b = MetricSpace::segment(3, 0.8);
    let prod = enriched::magnitude(&a.l1_product(&b)).unwrap().magnitude;
    let (x, y) = (enriched::magnitude(&a).unwrap().magnitude, enriched::magnitude(&b).unwrap().magnitude);
    assert!((prod - x * y).abs() < 1e-10);
}
