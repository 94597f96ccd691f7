use mobiuskit::category::FinCategory;
use mobiuskit::corpus;
use mobiuskit::incidence::{self, FineElement};
use mobiuskit::rig::{Integers, Rationals};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

fn small_category(seed: u64) -> FinCategory {
    let mut rng = corpus::rng(seed);
    loop {
        let c = corpus::random_category(&mut rng);
        if c.num_arrows() <= 12 {
            return c;
        }
    }
}

fn random_element(c: &FinCategory, rng: &mut corpus::CorpusRng) -> FineElement<BigInt> {
    let values = (0..c.num_arrows()).map(|_| BigInt::from(rng.gen_range(-4..=4))).collect();
    FineElement::new(c.clone(), values).expect("one value per arrow")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn convolution_is_associative_with_unit(seed: u64) {
        let c = small_category(seed);
        let mut rng = corpus::rng(seed ^ 0x5eed);
        let (x, y, z) = (random_element(&c, &mut rng), random_element(&c, &mut rng), random_element(&c, &mut rng));
        let conv = |a: &FineElement<BigInt>, b: &FineElement<BigInt>| incidence::fine_convolve(&Integers, a, b).unwrap();
        prop_assert_eq!(conv(&conv(&x, &y), &z), conv(&x, &conv(&y, &z)));
        let delta = incidence::fine_delta(&c, &Integers);
        prop_assert_eq!(conv(&delta, &x), x.clone());
        prop_assert_eq!(conv(&x, &delta), x);
    }

    #[test]
    fn sigma_is_an_algebra_homomorphism(seed: u64) {
        let c = small_category(seed);
        let mut rng = corpus::rng(seed ^ 0xabc);
        let (x, y) = (random_element(&c, &mut rng), random_element(&c, &mut rng));
        let xy = incidence::fine_convolve(&Integers, &x, &y).unwrap();
        let sx = incidence::sigma_to_coarse(&Integers, &x);
        let sy = incidence::sigma_to_coarse(&Integers, &y);
        prop_assert_eq!(incidence::sigma_to_coarse(&Integers, &xy), incidence::coarse_multiply(&Integers, &sx, &sy).unwrap());
        prop_assert_eq!(
            incidence::sigma_to_coarse(&Integers, &incidence::fine_delta(&c, &Integers)),
            incidence::coarse_delta(&c, &Integers)
        );
    }

    #[test]
    fn fine_inversion_implies_coarse(seed: u64) {
        let c = corpus::random_category(&mut corpus::rng(seed));
        if let Ok(mu) = incidence::fine_mobius(&c, &Rationals) {
            let coarse = incidence::coarse_mobius(&c, &Rationals).expect("coarse inversion follows");
            prop_assert_eq!(incidence::sigma_to_coarse(&Rationals, &mu), coarse);
        }
    }

    #[test]
    fn empty_hom_sets_give_zero_mu(seed: u64) {
        let c = corpus::random_category(&mut corpus::rng(seed));
        if let Ok(mu) = incidence::coarse_mobius(&c, &Rationals) {
            for a in 0..c.num_objects() {
                for b in 0..c.num_objects() {
                    if c.hom(a, b).is_empty() {
                        prop_assert!(num_traits::Zero::is_zero(mu.get(a, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn patch_mu_agrees_with_coarse_mu(seed: u64) {
        let c = corpus::random_category(&mut corpus::rng(seed));
        if let Ok(coarse) = incidence::coarse_mobius(&c, &Rationals) {
            let patch = incidence::patch_mobius(&c, &Rationals).expect("patches invert when the whole does");
            prop_assert_eq!(patch.to_coarse(), coarse);
        }
    }
}

#[test]
fn nerve_matches_euler_on_posets() {
    let mut rng = corpus::rng(31);
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let c = corpus::random_poset(&mut rng, n, 0.4).to_category();
        let chi = incidence::euler_characteristic(&c, &Rationals).unwrap();
        let nerve = incidence::nerve_euler_characteristic(&c).unwrap();
        assert_eq!(chi, num_rational::BigRational::from_integer(nerve));
    }
}
