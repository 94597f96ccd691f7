//! The fine, coarse and patch incidence algebras of a finite category.

use num_bigint::BigInt;
use thiserror::Error;

use crate::category::{ArrowId, FinCategory, ObjectId};
use crate::matrix::{self, MatrixError, RigMatrix};
use crate::par;
use crate::rig::{EmbedsInField, Rig, RigError, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    /// The zeta element has no inverse; `witness` says why.
    #[error("not invertible: {witness}")]
    NotInvertible { witness: String },
    #[error("elements belong to different categories")]
    CategoryMismatch,
    #[error("category is not a poset: {0}")]
    NotAPoset(String),
    #[error("nerve is not finite-dimensional: {0}")]
    NotNerveFinite(String),
    #[error("value table has {got} entries, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error("patch element is nonzero at ({0}, {1}) where the hom-set is empty")]
    SupportViolation(String, String),
    #[error(transparent)]
    Rig(#[from] RigError),
}

/// A function `Arr → k`.
#[derive(Debug, Clone, PartialEq)]
pub struct FineElement<E> {
    category: FinCategory,
    values: Vec<E>,
}

impl<E: Clone> FineElement<E> {
    pub fn new(category: FinCategory, values: Vec<E>) -> Result<Self, IncidenceError> {
        if values.len() != category.num_arrows() {
            return Err(IncidenceError::Length {
                expected: category.num_arrows(),
                got: values.len(),
            });
        }
        Ok(FineElement { category, values })
    }

    pub fn category(&self) -> &FinCategory {
        &self.category
    }

    pub fn values(&self) -> &[E] {
        &self.values
    }

    pub fn value(&self, a: ArrowId) -> &E {
        &self.values[a]
    }

    pub fn value_named(&self, name: &str) -> Option<&E> {
        self.category.arrow_index(name).map(|a| &self.values[a])
    }

    pub fn map<T: Clone, F: FnMut(&E) -> T>(&self, f: F) -> FineElement<T> {
        FineElement {
            category: self.category.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }
}

/// A function `Ob × Ob → k`, indexed by the object order of its category.
#[derive(Debug, Clone, PartialEq)]
pub struct CoarseElement<E> {
    objects: Vec<String>,
    values: RigMatrix<E>,
}

impl<E: Clone> CoarseElement<E> {
    pub fn new(objects: Vec<String>, values: RigMatrix<E>) -> Result<Self, IncidenceError> {
        if values.dim() != objects.len() {
            return Err(IncidenceError::Length {
                expected: objects.len(),
                got: values.dim(),
            });
        }
        Ok(CoarseElement { objects, values })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn values(&self) -> &RigMatrix<E> {
        &self.values
    }

    pub fn get(&self, a: ObjectId, b: ObjectId) -> &E {
        self.values.get(a, b)
    }

    pub fn get_named(&self, a: &str, b: &str) -> Option<&E> {
        let i = self.objects.iter().position(|o| o == a)?;
        let j = self.objects.iter().position(|o| o == b)?;
        Some(self.values.get(i, j))
    }
}

/// A coarse element vanishing wherever the hom-set is empty.
#[derive(Debug, Clone, PartialEq)]
pub struct PatchElement<E> {
    category: FinCategory,
    values: RigMatrix<E>,
}

impl<E: Clone> PatchElement<E> {
    pub fn new<R: Rig<Elem = E>>(rig: &R, category: FinCategory, values: RigMatrix<E>) -> Result<Self, IncidenceError> {
        let n = category.num_objects();
        if values.dim() != n {
            return Err(IncidenceError::Length {
                expected: n,
                got: values.dim(),
            });
        }
        for a in 0..n {
            for b in 0..n {
                if !category.has_arrow(a, b) && !rig.is_zero(values.get(a, b)) {
                    return Err(IncidenceError::SupportViolation(
                        category.object_name(a).into(),
                        category.object_name(b).into(),
                    ));
                }
            }
        }
        Ok(PatchElement { category, values })
    }

    pub fn category(&self) -> &FinCategory {
        &self.category
    }

    pub fn values(&self) -> &RigMatrix<E> {
        &self.values
    }

    pub fn get(&self, a: ObjectId, b: ObjectId) -> &E {
        self.values.get(a, b)
    }

    pub fn to_coarse(&self) -> CoarseElement<E> {
        CoarseElement {
            objects: self.category.objects().to_vec(),
            values: self.values.clone(),
        }
    }
}

pub fn fine_delta<R: Rig>(c: &FinCategory, rig: &R) -> FineElement<R::Elem> {
    let values = (0..c.num_arrows())
        .map(|a| if c.is_identity(a) { rig.one() } else { rig.zero() })
        .collect();
    FineElement { category: c.clone(), values }
}

pub fn fine_zeta<R: Rig>(c: &FinCategory, rig: &R) -> FineElement<R::Elem> {
    FineElement {
        category: c.clone(),
        values: vec![rig.one(); c.num_arrows()],
    }
}

/// `(x ∗ y)(f) = Σ_{h∘g = f} x(g) y(h)`.
pub fn fine_convolve<R: Rig>(
    rig: &R,
    x: &FineElement<R::Elem>,
    y: &FineElement<R::Elem>,
) -> Result<FineElement<R::Elem>, IncidenceError> {
    if x.category != y.category {
        return Err(IncidenceError::CategoryMismatch);
    }
    let c = &x.category;
    let values = par::map_range(c.num_arrows(), |f| {
        rig.sum(
            c.factorizations(f)
                .iter()
                .map(|&(g, h)| rig.mul(&x.values[g], &y.values[h])),
        )
    });
    Ok(FineElement {
        category: c.clone(),
        values,
    })
}

/// True iff `x ∗ y = y ∗ x = δ`.
pub fn verify_inverse<R: Rig>(rig: &R, x: &FineElement<R::Elem>, y: &FineElement<R::Elem>) -> bool {
    let delta = fine_delta(&x.category, rig);
    matches!(fine_convolve(rig, x, y), Ok(p) if p == delta) && matches!(fine_convolve(rig, y, x), Ok(p) if p == delta)
}

/// The matrix of `μ ↦ μ ∗ x`: entry `(f, g)` is `Σ_{h ∘ g = f} x(h)`.
fn right_multiplication_system<F: Rig>(field: &F, x: &[F::Elem], c: &FinCategory) -> RigMatrix<F::Elem> {
    let n = c.num_arrows();
    let mut rows = vec![vec![field.zero(); n]; n];
    for (f, row) in rows.iter_mut().enumerate() {
        for &(g, h) in c.factorizations(f) {
            row[g] = field.add(&row[g], &x[h]);
        }
    }
    RigMatrix::from_rows(rows).expect("square")
}

fn render_equation<F: Rig>(field: &F, c: &FinCategory, row: &[F::Elem], rhs: bool) -> String {
    let terms: Vec<String> = row
        .iter()
        .enumerate()
        .filter(|(_, k)| !field.is_zero(k))
        .map(|(g, k)| {
            if field.is_one(k) {
                format!("μ({})", c.arrow_name(g))
            } else {
                format!("{}·μ({})", field.render(k), c.arrow_name(g))
            }
        })
        .collect();
    format!("{} = {}", terms.join(" + "), u8::from(rhs))
}

/// The two-sided inverse of a fine element, or a witness that none exists.
///
/// The system `μ ∗ x = δ` is solved in the fraction field of the rig, the
/// solution is brought back into the rig, and `x ∗ μ = δ` is then checked.
pub fn fine_inverse<R: EmbedsInField>(rig: &R, x: &FineElement<R::Elem>) -> Result<FineElement<R::Elem>, IncidenceError> {
    let c = &x.category;
    let field = rig.field();
    let embedded: Vec<_> = x.values.iter().map(|v| rig.embed(v)).collect();
    let m = right_multiplication_system(&field, &embedded, c);
    let n = c.num_arrows();
    let rhs: Vec<_> = (0..n)
        .map(|a| if c.is_identity(a) { field.one() } else { field.zero() })
        .collect();
    let solution = matrix::solve(&field, &m, &rhs).map_err(|e| match e {
        MatrixError::Singular { column } => IncidenceError::NotInvertible {
            witness: format!(
                "the equations for μ ∗ x = δ are singular (no pivot for μ({}))",
                c.arrow_name(column)
            ),
        },
        other => IncidenceError::NotInvertible {
            witness: other.to_string(),
        },
    })?;

    let mut values = Vec::with_capacity(n);
    for (a, v) in solution.iter().enumerate() {
        match rig.restrict(v) {
            Some(x) => values.push(x),
            None => {
                // report the equation that pins this value down
                let nonzero = |f: usize| (0..n).filter(|&g| !field.is_zero(m.get(f, g))).count();
                let row = (0..n)
                    .find(|&f| !field.is_zero(m.get(f, a)) && nonzero(f) > 1)
                    .unwrap_or(a);
                return Err(IncidenceError::NotInvertible {
                    witness: format!(
                        "μ({}) = {} lies outside {}; forced by {}",
                        c.arrow_name(a),
                        field.render(v),
                        rig.descriptor().name,
                        render_equation(&field, c, m.row(row), c.is_identity(row))
                    ),
                });
            }
        }
    }
    let inv = FineElement {
        category: c.clone(),
        values,
    };
    if !verify_inverse(rig, &inv, x) {
        return Err(IncidenceError::NotInvertible {
            witness: "left inverse is not a right inverse".into(),
        });
    }
    Ok(inv)
}

/// The fine Möbius function `ζ⁻¹`.
pub fn fine_mobius<R: EmbedsInField>(c: &FinCategory, rig: &R) -> Result<FineElement<R::Elem>, IncidenceError> {
    fine_inverse(rig, &fine_zeta(c, rig))
}

/// Checks that `c` is a poset category, returning `NotAPoset` otherwise.
pub fn require_poset(c: &FinCategory) -> Result<(), IncidenceError> {
    for a in 0..c.num_objects() {
        for b in 0..c.num_objects() {
            let k = c.hom(a, b).len();
            if k > 1 {
                return Err(IncidenceError::NotAPoset(format!(
                    "{} arrows from {} to {}",
                    k,
                    c.object_name(a),
                    c.object_name(b)
                )));
            }
            if a != b && k == 1 && c.has_arrow(b, a) {
                return Err(IncidenceError::NotAPoset(format!(
                    "{} and {} are isomorphic",
                    c.object_name(a),
                    c.object_name(b)
                )));
            }
        }
    }
    Ok(())
}

/// Signed chain counts `Σₙ (−1)ⁿ #{a = a₀ < ⋯ < aₙ = b}` for a poset category.
pub fn hall_counts(c: &FinCategory) -> Result<RigMatrix<BigInt>, IncidenceError> {
    require_poset(c)?;
    let n = c.num_objects();
    let rows = par::map_range(n, |a| {
        let mut total = vec![BigInt::from(0); n];
        let mut layer = vec![BigInt::from(0); n];
        layer[a] = BigInt::from(1);
        let mut sign = 1i32;
        while layer.iter().any(|x| *x != BigInt::from(0)) {
            for b in 0..n {
                if sign > 0 {
                    total[b] += &layer[b];
                } else {
                    total[b] -= &layer[b];
                }
            }
            let mut next = vec![BigInt::from(0); n];
            for (b, slot) in next.iter_mut().enumerate() {
                for (x, count) in layer.iter().enumerate() {
                    if x != b && c.has_arrow(x, b) {
                        *slot += count;
                    }
                }
            }
            layer = next;
            sign = -sign;
        }
        total
    });
    Ok(RigMatrix::from_rows(rows).expect("square"))
}

fn bigint_into<R: Ring>(rig: &R, x: &BigInt) -> R::Elem {
    let (sign, mag) = x.to_u64_digits();
    let mut acc = rig.zero();
    let base = rig.from_count(1u64 << 32);
    let base = rig.mul(&base, &base);
    for d in mag.iter().rev() {
        acc = rig.add(&rig.mul(&acc, &base), &rig.from_count(*d));
    }
    if sign == num_bigint::Sign::Minus {
        rig.neg(&acc)
    } else {
        acc
    }
}

/// Möbius function of a poset by counting chains.
pub fn fine_mobius_hall<R: Ring>(c: &FinCategory, rig: &R) -> Result<FineElement<R::Elem>, IncidenceError> {
    let counts = hall_counts(c)?;
    let values = c
        .arrows()
        .iter()
        .map(|a| bigint_into(rig, counts.get(a.src, a.tgt)))
        .collect();
    Ok(FineElement {
        category: c.clone(),
        values,
    })
}

fn labels(c: &FinCategory) -> Vec<String> {
    c.objects().to_vec()
}

pub fn coarse_zeta<R: Rig>(c: &FinCategory, rig: &R) -> CoarseElement<R::Elem> {
    CoarseElement {
        objects: labels(c),
        values: RigMatrix::from_fn(c.num_objects(), |a, b| rig.from_count(c.hom(a, b).len() as u64)),
    }
}

pub fn coarse_delta<R: Rig>(c: &FinCategory, rig: &R) -> CoarseElement<R::Elem> {
    CoarseElement {
        objects: labels(c),
        values: RigMatrix::identity(rig, c.num_objects()),
    }
}

pub fn coarse_multiply<R: Rig>(
    rig: &R,
    x: &CoarseElement<R::Elem>,
    y: &CoarseElement<R::Elem>,
) -> Result<CoarseElement<R::Elem>, IncidenceError> {
    if x.objects != y.objects {
        return Err(IncidenceError::CategoryMismatch);
    }
    Ok(CoarseElement {
        objects: x.objects.clone(),
        values: x.values.mul(rig, &y.values).expect("same dimension"),
    })
}

/// Inverse of a coarse element, computed in the fraction field.
pub fn coarse_inverse<R: EmbedsInField>(
    rig: &R,
    x: &CoarseElement<R::Elem>,
) -> Result<CoarseElement<R::Elem>, IncidenceError> {
    let field = rig.field();
    let embedded = x.values.map(|v| rig.embed(v));
    let inv = matrix::invert(&field, &embedded).map_err(|e| match e {
        MatrixError::Singular { column } => IncidenceError::NotInvertible {
            witness: format!(
                "ζ is singular: column {} is dependent on earlier columns",
                x.objects.get(column).map(String::as_str).unwrap_or("?")
            ),
        },
        other => IncidenceError::NotInvertible {
            witness: other.to_string(),
        },
    })?;
    let n = inv.dim();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let v = inv.get(i, j);
            entries.push(rig.restrict(v).ok_or_else(|| IncidenceError::NotInvertible {
                witness: format!(
                    "μ({}, {}) = {} lies outside {}",
                    x.objects[i],
                    x.objects[j],
                    field.render(v),
                    rig.descriptor().name
                ),
            })?);
        }
    }
    Ok(CoarseElement {
        objects: x.objects.clone(),
        values: RigMatrix::new(n, entries).expect("square"),
    })
}

pub fn coarse_mobius<R: EmbedsInField>(c: &FinCategory, rig: &R) -> Result<CoarseElement<R::Elem>, IncidenceError> {
    coarse_inverse(rig, &coarse_zeta(c, rig))
}

/// `(Σx)(a, b) = Σ_{f : a → b} x(f)`.
pub fn sigma_to_coarse<R: Rig>(rig: &R, x: &FineElement<R::Elem>) -> CoarseElement<R::Elem> {
    let c = &x.category;
    CoarseElement {
        objects: labels(c),
        values: sigma_matrix(rig, x),
    }
}

pub fn sigma_to_patch<R: Rig>(rig: &R, x: &FineElement<R::Elem>) -> PatchElement<R::Elem> {
    PatchElement {
        category: x.category.clone(),
        values: sigma_matrix(rig, x),
    }
}

fn sigma_matrix<R: Rig>(rig: &R, x: &FineElement<R::Elem>) -> RigMatrix<R::Elem> {
    let c = &x.category;
    RigMatrix::from_fn(c.num_objects(), |a, b| {
        rig.sum(c.hom(a, b).iter().map(|&f| x.values[f].clone()))
    })
}

pub fn patch_zeta<R: Rig>(c: &FinCategory, rig: &R) -> PatchElement<R::Elem> {
    PatchElement {
        category: c.clone(),
        values: coarse_zeta(c, rig).values,
    }
}

/// `(x ∗ y)(a, b) = Σ_{c ∈ ⌈a,b⌉} x(a, c) y(c, b)`.
pub fn patch_multiply<R: Rig>(
    rig: &R,
    x: &PatchElement<R::Elem>,
    y: &PatchElement<R::Elem>,
) -> Result<PatchElement<R::Elem>, IncidenceError> {
    if x.category != y.category {
        return Err(IncidenceError::CategoryMismatch);
    }
    let c = &x.category;
    let n = c.num_objects();
    let entries: Vec<Vec<R::Elem>> = par::map_range(n, |a| {
        (0..n)
            .map(|b| {
                rig.sum(
                    c.patch_objects(a, b)
                        .into_iter()
                        .map(|m| rig.mul(x.values.get(a, m), y.values.get(m, b))),
                )
            })
            .collect()
    });
    Ok(PatchElement {
        category: c.clone(),
        values: RigMatrix::from_rows(entries).expect("square"),
    })
}

/// Möbius function of the patch algebra, computed patch by patch.
///
/// `μ(a, b)` is the `(a, b)` entry of the inverse of ζ restricted to the
/// patch `⌈a, b⌉`, and zero when the hom-set is empty.
pub fn patch_mobius<R: EmbedsInField>(c: &FinCategory, rig: &R) -> Result<PatchElement<R::Elem>, IncidenceError> {
    let n = c.num_objects();
    let zeta = coarse_zeta(c, rig);
    let rows: Vec<Result<Vec<R::Elem>, IncidenceError>> = par::map_range(n, |a| {
        (0..n)
            .map(|b| {
                if !c.has_arrow(a, b) {
                    return Ok(rig.zero());
                }
                let objs = c.patch_objects(a, b);
                let local = CoarseElement {
                    objects: objs.iter().map(|&o| c.object_name(o).to_string()).collect(),
                    values: zeta.values.restrict(&objs),
                };
                let inv = coarse_inverse(rig, &local).map_err(|e| IncidenceError::NotInvertible {
                    witness: format!(
                        "patch ⌈{}, {}⌉ = {{{}}}: {}",
                        c.object_name(a),
                        c.object_name(b),
                        local.objects.join(", "),
                        match e {
                            IncidenceError::NotInvertible { witness } => witness,
                            other => other.to_string(),
                        }
                    ),
                })?;
                let i = objs.iter().position(|&o| o == a).expect("a in its patch");
                let j = objs.iter().position(|&o| o == b).expect("b in its patch");
                Ok(inv.values.get(i, j).clone())
            })
            .collect()
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(PatchElement {
        category: c.clone(),
        values: RigMatrix::from_rows(rows).expect("square"),
    })
}

/// `χ(A) = Σ_{a,b} μ(a, b)` for the coarse Möbius function.
pub fn euler_characteristic<R: EmbedsInField>(c: &FinCategory, rig: &R) -> Result<R::Elem, IncidenceError> {
    let mu = coarse_mobius(c, rig)?;
    Ok(mu.values.sum_entries(rig))
}

/// Alternating count of nondegenerate simplices of the nerve.
pub fn nerve_euler_characteristic(c: &FinCategory) -> Result<BigInt, IncidenceError> {
    if !c.is_skeletal() {
        return Err(IncidenceError::NotNerveFinite("category is not skeletal".into()));
    }
    let report = c.endomorphism_report();
    if let Some(&e) = report.nontrivial_endos.first() {
        return Err(IncidenceError::NotNerveFinite(format!(
            "nontrivial endomorphism {}",
            c.arrow_name(e)
        )));
    }
    let non_id: Vec<ArrowId> = (0..c.num_arrows()).filter(|&a| !c.is_identity(a)).collect();
    let mut chi = BigInt::from(c.num_objects());
    // chains ending in each arrow
    let mut layer: Vec<BigInt> = vec![BigInt::from(1); non_id.len()];
    let mut sign = -1i32;
    while layer.iter().any(|x| *x != BigInt::from(0)) {
        let total: BigInt = layer.iter().sum();
        if sign > 0 {
            chi += total;
        } else {
            chi -= total;
        }
        layer = non_id
            .iter()
            .map(|&f| {
                non_id
                    .iter()
                    .zip(&layer)
                    .filter(|(&g, _)| c.tgt(g) == c.src(f))
                    .map(|(_, k)| k.clone())
                    .sum()
            })
            .collect();
        sign = -sign;
    }
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rig::{rat, ratio, Integers, Naturals, Rationals};
    use num_bigint::BigUint;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn retract_fine_mobius() {
        let c = corpus::retract_example();
        let mu = fine_mobius(&c, &Integers).unwrap();
        for (name, v) in [("1_a", 1), ("1_b", 2), ("s", -1), ("i", -1), ("is", 0)] {
            assert_eq!(mu.value_named(name), Some(&int(v)), "{name}");
        }
        let sigma = sigma_to_coarse(&Integers, &mu);
        assert_eq!(sigma, coarse_mobius(&c, &Integers).unwrap());
        assert_eq!(euler_characteristic(&c, &Rationals).unwrap(), rat(1));
    }

    #[test]
    fn groups_have_no_fine_inversion() {
        let e = fine_mobius(&corpus::cyclic_group(3), &Rationals).unwrap_err();
        assert!(matches!(e, IncidenceError::NotInvertible { .. }));
        assert_eq!(euler_characteristic(&corpus::cyclic_group(3), &Rationals).unwrap(), ratio(1, 3));
    }

    #[test]
    fn idempotent_subcategory_needs_a_half() {
        let c = corpus::retract_example();
        let a = c.object_index("a").unwrap();
        let sub = c.subcategory(&[a], &[c.arrow_index("is").unwrap()]).unwrap();
        let q = fine_mobius(&sub, &Rationals).unwrap();
        assert_eq!(q.value_named("is"), Some(&ratio(-1, 2)));
        match fine_mobius(&sub, &Integers).unwrap_err() {
            IncidenceError::NotInvertible { witness } => assert!(witness.contains("-1/2"), "{witness}"),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn naturals_reject_negative_mobius() {
        assert!(fine_mobius(&corpus::chain(2), &Naturals).is_err());
        let d = FinCategory::discrete(&["x".into()]);
        assert_eq!(fine_mobius(&d, &Naturals).unwrap().values(), &[BigUint::from(1u32)]);
    }

    #[test]
    fn hall_matches_solver_on_divisors() {
        let c = corpus::divisor_poset(6);
        let hall = fine_mobius_hall(&c, &Integers).unwrap();
        assert_eq!(hall, fine_mobius(&c, &Integers).unwrap());
        let f = c.hom(c.object_index("1").unwrap(), c.object_index("6").unwrap())[0];
        assert_eq!(hall.value(f), &int(1));
        assert!(fine_mobius_hall(&corpus::cyclic_group(2), &Integers).is_err());
    }

    #[test]
    fn convolution_counts_factorizations() {
        let c = corpus::chain(2);
        let z = fine_zeta(&c, &Integers);
        let zz = fine_convolve(&Integers, &z, &z).unwrap();
        let f = c.hom(0, 1)[0];
        assert_eq!(zz.value(f), &int(2));
        assert!(!verify_inverse(&Integers, &z, &z));
        let d = fine_delta(&c, &Integers);
        assert!(verify_inverse(&Integers, &d, &d));
    }

    #[test]
    fn patch_and_coarse_agree() {
        for (name, c) in corpus::named_categories() {
            let coarse = coarse_mobius(&c, &Rationals);
            let patch = patch_mobius(&c, &Rationals);
            match (coarse, patch) {
                (Ok(x), Ok(y)) => assert_eq!(x, y.to_coarse(), "{name}"),
                (Err(_), Err(_)) => {}
                (x, y) => panic!("{name}: {x:?} vs {y:?}"),
            }
        }
    }

    #[test]
    fn nerve_counts() {
        assert_eq!(nerve_euler_characteristic(&corpus::chain(2)).unwrap(), int(1));
        assert_eq!(nerve_euler_characteristic(&FinCategory::discrete(&["a".into(), "b".into()])).unwrap(), int(2));
        assert!(nerve_euler_characteristic(&corpus::retract_example()).is_err());
    }

    #[test]
    fn isomorphic_objects_block_coarse_inversion() {
        let c = FinCategory::codiscrete(&["a".into(), "b".into()]);
        assert!(coarse_mobius(&c, &Rationals).is_err());
    }
}
