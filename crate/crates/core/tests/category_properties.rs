use mobiuskit::category::{validate_category, FinCategory};
use mobiuskit::corpus;
use mobiuskit::incidence;
use mobiuskit::rig::Rationals;
use proptest::prelude::*;

fn category(seed: u64) -> FinCategory {
    corpus::random_category(&mut corpus::rng(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_categories_validate(seed: u64) {
        let c = category(seed);
        prop_assert!(validate_category(&c.to_data()).is_valid());
    }

    #[test]
    fn preorder_reflection_is_idempotent(seed: u64) {
        let (once, _) = category(seed).preorder_reflection();
        let (twice, _) = once.preorder_reflection();
        prop_assert_eq!(once.num_objects(), twice.num_objects());
        prop_assert_eq!(once.num_arrows(), twice.num_arrows());
    }

    #[test]
    fn codiscrete_has_square_many_edges(seed: u64) {
        let c = category(seed);
        let (d, _) = c.codiscrete_completion();
        prop_assert_eq!(d.underlying_graph().edges.len(), c.num_objects() * c.num_objects());
    }

    #[test]
    fn repatching_is_the_identity(seed: u64, i: usize, j: usize) {
        let c = category(seed);
        let (a, b) = (i % c.num_objects(), j % c.num_objects());
        if c.has_arrow(a, b) {
            let p = c.patch(a, b).expect("endpoints in range");
            let (pa, pb) = (
                p.object_index(c.object_name(a)).expect("endpoint kept"),
                p.object_index(c.object_name(b)).expect("endpoint kept"),
            );
            prop_assert_eq!(p.patch(pa, pb).expect("patch of a patch"), p);
        }
    }

    #[test]
    fn coarse_zeta_depends_only_on_the_graph(seed: u64) {
        let c = category(seed);
        let from_graph = c.underlying_graph().edge_counts();
        let zeta = incidence::coarse_zeta(&c, &Rationals);
        for (i, row) in from_graph.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                prop_assert_eq!(zeta.get(i, j), &num_rational::BigRational::from_integer(k.into()));
            }
        }
    }
}

#[test]
fn same_graph_compositions_share_coarse_zeta() {
    let cats = corpus::all_compositions(&["x"], &[("e", 0, 0), ("f", 0, 0)], 100).unwrap();
    assert!(cats.len() > 1);
    let z0 = incidence::coarse_zeta(&cats[0], &Rationals);
    for c in &cats[1..] {
        assert_eq!(incidence::coarse_zeta(c, &Rationals), z0);
    }
}
