//! Structural predicates: skeletality, special endomorphisms, subcategories.

use super::{ArrowId, CategoryError, FinCategory, ObjectId};

/// Non-identity isomorphisms, idempotents and endomorphisms of a category.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EndomorphismReport {
    pub nontrivial_isos: Vec<ArrowId>,
    pub nontrivial_idempotents: Vec<ArrowId>,
    pub nontrivial_endos: Vec<ArrowId>,
}

impl EndomorphismReport {
    /// No non-identity isomorphism or idempotent.
    pub fn is_mobius(&self) -> bool {
        self.nontrivial_isos.is_empty() && self.nontrivial_idempotents.is_empty()
    }
}

impl FinCategory {
    /// Some `g` with `g ∘ f` and `f ∘ g` both identities.
    pub fn inverse_of(&self, f: ArrowId) -> Option<ArrowId> {
        let (a, b) = (self.src(f), self.tgt(f));
        self.hom(b, a).iter().copied().find(|&g| {
            self.compose(g, f) == Some(self.identity(a)) && self.compose(f, g) == Some(self.identity(b))
        })
    }

    /// Isomorphic objects are equal.
    pub fn is_skeletal(&self) -> bool {
        (0..self.num_arrows())
            .filter(|&f| self.src(f) != self.tgt(f))
            .all(|f| self.inverse_of(f).is_none())
    }

    pub fn endomorphism_report(&self) -> EndomorphismReport {
        let mut report = EndomorphismReport::default();
        for f in 0..self.num_arrows() {
            if self.is_identity(f) {
                continue;
            }
            if self.inverse_of(f).is_some() {
                report.nontrivial_isos.push(f);
            }
            if self.src(f) == self.tgt(f) {
                report.nontrivial_endos.push(f);
                if self.compose(f, f) == Some(f) {
                    report.nontrivial_idempotents.push(f);
                }
            }
        }
        report
    }

    /// All nonempty subcategories, full or not.
    ///
    /// A subcategory is a nonempty object set together with a set of arrows
    /// between those objects that contains their identities and is closed
    /// under composition. Fails once more than `max_count` have been found.
    pub fn enumerate_subcategories(&self, max_count: usize) -> Result<Vec<FinCategory>, CategoryError> {
        let n_ob = self.num_objects();
        if n_ob > 20 {
            return Err(CategoryError::BudgetExceeded { limit: max_count });
        }
        let mut found = Vec::new();
        for mask in 1u32..(1u32 << n_ob) {
            let objects: Vec<ObjectId> = (0..n_ob).filter(|&o| mask & (1 << o) != 0).collect();
            let candidates: Vec<ArrowId> = (0..self.num_arrows())
                .filter(|&a| {
                    !self.is_identity(a)
                        && mask & (1 << self.src(a)) != 0
                        && mask & (1 << self.tgt(a)) != 0
                })
                .collect();
            if candidates.len() > 24 {
                return Err(CategoryError::BudgetExceeded { limit: max_count });
            }
            let mut member = vec![false; self.num_arrows()];
            for sub in 0u64..(1u64 << candidates.len()) {
                member.iter_mut().for_each(|m| *m = false);
                for &o in &objects {
                    member[self.identity(o)] = true;
                }
                let mut chosen = Vec::new();
                for (k, &a) in candidates.iter().enumerate() {
                    if sub & (1 << k) != 0 {
                        member[a] = true;
                        chosen.push(a);
                    }
                }
                let closed = chosen.iter().all(|&g| {
                    chosen.iter().all(|&f| self.compose(g, f).is_none_or(|h| member[h]))
                });
                if !closed {
                    continue;
                }
                if found.len() == max_count {
                    return Err(CategoryError::BudgetExceeded { limit: max_count });
                }
                found.push(self.subcategory(&objects, &chosen)?);
            }
        }
        Ok(found)
    }
}

#[cfg(test)]
mod tests {
    use crate::category::FinCategory;
    use crate::corpus;

    #[test]
    fn retract_example_has_idempotent() {
        let c = corpus::retract_example();
        let r = c.endomorphism_report();
        let e = c.arrow_index("is").unwrap();
        assert_eq!(r.nontrivial_idempotents, vec![e]);
        assert!(r.nontrivial_isos.is_empty());
        assert!(c.is_skeletal());
        assert!(!r.is_mobius());
    }

    #[test]
    fn posets_and_groups() {
        let r = corpus::divisor_poset(12).endomorphism_report();
        assert!(r.nontrivial_isos.is_empty() && r.nontrivial_idempotents.is_empty() && r.nontrivial_endos.is_empty());
        let c2 = corpus::cyclic_group(2);
        assert_eq!(c2.endomorphism_report().nontrivial_isos.len(), 1);
        let codisc = FinCategory::codiscrete(&["a".into(), "b".into()]);
        assert!(!codisc.is_skeletal());
    }

    #[test]
    fn subcategory_counts() {
        assert_eq!(FinCategory::terminal().enumerate_subcategories(10).unwrap().len(), 1);
        let two = FinCategory::discrete(&["a".into(), "b".into()]);
        assert_eq!(two.enumerate_subcategories(10).unwrap().len(), 3);
        assert!(two.enumerate_subcategories(2).is_err());

        let c = corpus::retract_example();
        let subs = c.enumerate_subcategories(1000).unwrap();
        assert!(subs.iter().all(|s| s.num_objects() >= 1));
        assert!(subs.iter().any(|s| {
            s.objects() == ["a".to_string()] && s.num_arrows() == 2 && s.arrow_index("is").is_some()
        }));
    }
}
