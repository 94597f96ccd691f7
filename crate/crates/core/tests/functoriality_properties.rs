use mobiuskit::category::{FinCategory, Functor};
use mobiuskit::corpus;
use mobiuskit::functoriality::{self, category_pullback, is_ulf};
use mobiuskit::incidence::{self, FineElement};
use mobiuskit::rig::{Integers, Rationals};
use num_bigint::BigInt;
use rand::Rng;

fn composable_pairs(corpus: &[(String, Functor)]) -> Vec<(&str, &Functor, &str, &Functor)> {
    let mut out = Vec::new();
    for (nf, f) in corpus {
        for (ng, g) in corpus {
            if f.target() == g.source() {
                out.push((nf.as_str(), f, ng.as_str(), g));
            }
        }
    }
    out
}

#[test]
fn ulf_is_stable_under_pullback() {
    let fs = corpus::functor_corpus();
    let mut checked = 0;
    for (nf, f) in fs.iter().filter(|(_, f)| is_ulf(f).is_ok()) {
        for (ng, g) in fs.iter().filter(|(_, g)| g.target() == f.target()) {
            let square = category_pullback(f, g).unwrap();
            assert!(is_ulf(&square.to_right).is_ok(), "pullback of {nf} along {ng}");
            checked += 1;
        }
    }
    assert!(checked >= 20, "only {checked} pullbacks");
}

#[test]
fn ulf_three_for_two() {
    let fs = corpus::functor_corpus();
    let (mut checked, mut negatives) = (0, 0);
    for (nf, f, ng, g) in composable_pairs(&fs) {
        if is_ulf(g).is_err() {
            continue;
        }
        let gf = f.then(g).unwrap();
        assert_eq!(is_ulf(&gf).is_ok(), is_ulf(f).is_ok(), "{ng} ∘ {nf}");
        checked += 1;
        negatives += usize::from(is_ulf(f).is_err());
    }
    assert!(checked >= 20 && negatives >= 3, "{checked} pairs, {negatives} negative");
}

#[test]
fn span_composition_keeps_leg_properties() {
    for c in [corpus::chain(3), corpus::divisor_poset(12), corpus::boolean_lattice(2)] {
        let (_, proj) = c.coslice(0);
        let slice = proj.source();
        let s = functoriality::Span::new(proj.clone(), Functor::identity(slice)).unwrap();
        let t = functoriality::Span::new(Functor::identity(slice), slice.codiscrete_completion().1).unwrap();
        let st = functoriality::compose_spans(&s, &t).unwrap();
        assert!(is_ulf(st.left()).is_ok());
        assert!(functoriality::is_bijective_on_objects(st.right()));
        let x = incidence::fine_zeta(&c, &Rationals);
        let stepwise = t.apply(&Rationals, &s.apply(&Rationals, &x));
        assert_eq!(st.apply(&Rationals, &x), stepwise);
    }
}

/// For Möbius categories an element is invertible over ℤ exactly when its
/// values at identities are units.
#[test]
fn mobius_categories_invert_iff_identity_values_are_units() {
    let mut rng = corpus::rng(61);
    let categories: Vec<FinCategory> = corpus::category_corpus(61, 80)
        .into_iter()
        .map(|(_, c)| c)
        .filter(|c| functoriality::is_mobius_category(c) && c.num_arrows() <= 20)
        .collect();
    assert!(categories.len() >= 20);
    let (mut positive, mut negative) = (0, 0);
    for c in &categories {
        for _ in 0..5 {
            let values: Vec<BigInt> = (0..c.num_arrows())
                .map(|a| {
                    if c.is_identity(a) {
                        BigInt::from([1, -1, 1, -1, 2, 3][rng.gen_range(0..6)])
                    } else {
                        BigInt::from(rng.gen_range(-3..=3))
                    }
                })
                .collect();
            let units = c.identities().iter().all(|&i| values[i] == 1.into() || values[i] == (-1).into());
            let x = FineElement::new(c.clone(), values).unwrap();
            let inverse = incidence::fine_inverse(&Integers, &x);
            assert_eq!(inverse.is_ok(), units, "{c:?}");
            if let Ok(y) = inverse {
                assert!(incidence::verify_inverse(&Integers, &x, &y));
                positive += 1;
            } else {
                negative += 1;
            }
        }
    }
    assert!(positive >= 10 && negative >= 10);
}

#[test]
fn non_mobius_categories_have_a_unit_valued_non_invertible_element() {
    for c in [corpus::retract_example(), corpus::idempotent_monoid(), corpus::cyclic_group(2)] {
        assert!(!functoriality::is_mobius_category(&c));
        assert!(!functoriality::mobius_by_subcategories(&c).unwrap());
    }
    // ζ of the two-element idempotent monoid has α(1) = 1 but no ℤ-inverse
    assert!(incidence::fine_mobius(&corpus::idempotent_monoid(), &Integers).is_err());
}
