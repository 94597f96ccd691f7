use mobiuskit::infinite::{builtin, check_patch, Builtin, PatchwiseSolver};
use mobiuskit::rig::{Integers, Rationals};

/// Pairs `(a, b)` at distance at most six in the direction the family's
/// arrows run.
fn pairs(family: Builtin) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for a in 0..=8u64 {
        for d in 0..=6u64 {
            match family {
                Builtin::Dsurj if a >= d => out.push((a, a - d)),
                Builtin::Dsurj => {}
                Builtin::Divisibility => {
                    if a > 0 {
                        out.push((a, a * (d + 1)));
                    }
                }
                _ => out.push((a, a + d)),
            }
        }
    }
    out
}

#[test]
fn patchwise_mu_matches_materialized_patches() {
    for family in Builtin::ALL {
        let solver = PatchwiseSolver::new(builtin(family), Rationals);
        let mut materialized = 0;
        for (a, b) in pairs(family) {
            let check = check_patch(&solver, a, b, 5000).unwrap();
            assert!(check.passed(), "{family} ({a},{b}): {check:?}");
            materialized += usize::from(check.matches_materialized.is_some());
        }
        assert!(materialized > 10, "{family}: only {materialized} patches materialized");
    }
}

#[test]
fn cache_state_does_not_change_results() {
    for family in Builtin::ALL {
        let warm = PatchwiseSolver::new(builtin(family), Integers);
        let cold = PatchwiseSolver::new(builtin(family), Integers);
        let ps = pairs(family);
        for &(a, b) in &ps {
            warm.mobius(a, b).unwrap();
        }
        for &(a, b) in ps.iter().rev() {
            assert_eq!(warm.mobius(a, b).unwrap(), cold.mobius(a, b).unwrap());
            let fresh = PatchwiseSolver::new(builtin(family), Integers);
            assert_eq!(fresh.mobius(a, b).unwrap(), cold.mobius(a, b).unwrap());
        }
    }
}

#[test]
fn zero_hom_sets_give_zero_mu() {
    let solver = PatchwiseSolver::new(builtin(Builtin::Dinj), Integers);
    assert_eq!(solver.mobius(5, 2).unwrap(), 0.into());
    let solver = PatchwiseSolver::new(builtin(Builtin::Divisibility), Integers);
    assert_eq!(solver.mobius(4, 6).unwrap(), 0.into());
}
