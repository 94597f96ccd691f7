//! Subtraction-free determinant and adjugate halves, and transitive matrices.
//!
//! `det⁺`/`det⁻` sum entry products over even/odd permutations, so that
//! `det = det⁺ − det⁻` whenever the rig has negatives.

use thiserror::Error;

use crate::matrix::RigMatrix;
use crate::par;
use crate::rig::{Field, Rig};

/// Largest dimension for permutation enumeration.
pub const PERMUTATION_LIMIT: usize = 9;
/// Largest dimension for the identity checks.
pub const LEMMA_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixRigError {
    #[error("dimension {n} exceeds the budget {limit}")]
    BudgetExceeded { n: usize, limit: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("the proposed inverse is not an inverse")]
    NotAnInverse,
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions.is_multiple_of(2)
}

/// Calls `visit` on every permutation with `σ(0) = first`.
fn for_each_in_coset<F: FnMut(&[usize])>(n: usize, first: usize, mut visit: F) {
    let mut rest: Vec<usize> = (0..n).filter(|&x| x != first).collect();
    let mut sigma = vec![0; n];
    loop {
        sigma[0] = first;
        sigma[1..].copy_from_slice(&rest);
        visit(&sigma);
        if !next_permutation(&mut rest) {
            break;
        }
    }
}

fn check_budget(n: usize, limit: usize) -> Result<(), MatrixRigError> {
    if n > limit {
        Err(MatrixRigError::BudgetExceeded { n, limit })
    } else {
        Ok(())
    }
}

/// `(det⁺ X, det⁻ X)`.
pub fn det_plus_minus<R: Rig>(rig: &R, x: &RigMatrix<R::Elem>) -> Result<(R::Elem, R::Elem), MatrixRigError> {
    let n = x.dim();
    check_budget(n, PERMUTATION_LIMIT)?;
    if n == 0 {
        return Ok((rig.one(), rig.zero()));
    }
    // shard by σ(0); shards are summed in a fixed order
    let shards = par::map_range(n, |first| {
        let (mut plus, mut minus) = (rig.zero(), rig.zero());
        for_each_in_coset(n, first, |sigma| {
            let term = rig.product((0..n).map(|r| x.get(r, sigma[r]).clone()));
            if is_even(sigma) {
                plus = rig.add(&plus, &term);
            } else {
                minus = rig.add(&minus, &term);
            }
        });
        (plus, minus)
    });
    Ok(shards
        .into_iter()
        .fold((rig.zero(), rig.zero()), |(p, m), (sp, sm)| (rig.add(&p, &sp), rig.add(&m, &sm))))
}

pub fn det_plus<R: Rig>(rig: &R, x: &RigMatrix<R::Elem>) -> Result<R::Elem, MatrixRigError> {
    Ok(det_plus_minus(rig, x)?.0)
}

pub fn det_minus<R: Rig>(rig: &R, x: &RigMatrix<R::Elem>) -> Result<R::Elem, MatrixRigError> {
    Ok(det_plus_minus(rig, x)?.1)
}

/// `(adj⁺ X, adj⁻ X)` with `adj±_{ij} = Σ_{σ(j) = i} Π_{r ≠ j} X_{r σ(r)}`.
pub fn adj_plus_minus<R: Rig>(
    rig: &R,
    x: &RigMatrix<R::Elem>,
) -> Result<(RigMatrix<R::Elem>, RigMatrix<R::Elem>), MatrixRigError> {
    let n = x.dim();
    check_budget(n, PERMUTATION_LIMIT)?;
    if n == 0 {
        return Ok((RigMatrix::zeros(rig, 0), RigMatrix::zeros(rig, 0)));
    }
    let shards = par::map_range(n, |first| {
        let mut plus = vec![rig.zero(); n * n];
        let mut minus = vec![rig.zero(); n * n];
        let mut prefix = vec![rig.one(); n + 1];
        let mut suffix = vec![rig.one(); n + 1];
        for_each_in_coset(n, first, |sigma| {
            for r in 0..n {
                prefix[r + 1] = rig.mul(&prefix[r], x.get(r, sigma[r]));
            }
            for r in (0..n).rev() {
                suffix[r] = rig.mul(&suffix[r + 1], x.get(r, sigma[r]));
            }
            let target = if is_even(sigma) { &mut plus } else { &mut minus };
            for j in 0..n {
                let term = rig.mul(&prefix[j], &suffix[j + 1]);
                let slot = &mut target[sigma[j] * n + j];
                *slot = rig.add(slot, &term);
            }
        });
        (plus, minus)
    });
    let mut plus = vec![rig.zero(); n * n];
    let mut minus = vec![rig.zero(); n * n];
    for (sp, sm) in shards {
        for k in 0..n * n {
            plus[k] = rig.add(&plus[k], &sp[k]);
            minus[k] = rig.add(&minus[k], &sm[k]);
        }
    }
    Ok((
        RigMatrix::new(n, plus).expect("square"),
        RigMatrix::new(n, minus).expect("square"),
    ))
}

pub fn adj_plus<R: Rig>(rig: &R, x: &RigMatrix<R::Elem>) -> Result<RigMatrix<R::Elem>, MatrixRigError> {
    Ok(adj_plus_minus(rig, x)?.0)
}

pub fn adj_minus<R: Rig>(rig: &R, x: &RigMatrix<R::Elem>) -> Result<RigMatrix<R::Elem>, MatrixRigError> {
    Ok(adj_plus_minus(rig, x)?.1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivityReport {
    pub transitive: bool,
    /// Only paths up to the bound were examined.
    pub bounded: bool,
    /// An index path `i₀, …, iₚ` with `Z_{i₀ iₚ} = 0` but nonzero product.
    pub counterexample: Option<Vec<usize>>,
}

/// Checks transitivity of `z`.
///
/// Over rigs without zero divisors a product vanishes exactly when a factor
/// does, so transitivity reduces to the support being a preorder. Otherwise
/// index paths of length at most `max_path` are searched and the result is
/// marked bounded.
pub fn is_transitive<R: Rig>(rig: &R, z: &RigMatrix<R::Elem>, max_path: Option<usize>) -> TransitivityReport {
    let n = z.dim();
    let trivial = rig.is_one(&rig.zero());
    if !trivial {
        if let Some(i) = (0..n).find(|&i| rig.is_zero(z.get(i, i))) {
            return TransitivityReport {
                transitive: false,
                bounded: false,
                counterexample: Some(vec![i]),
            };
        }
    }
    if rig.zero_divisor_free() {
        for i in 0..n {
            for j in 0..n {
                if !rig.is_zero(z.get(i, j)) {
                    continue;
                }
                // any path i → j through nonzero entries is a counterexample
                if let Some(path) = support_path(rig, z, i, j) {
                    return TransitivityReport {
                        transitive: false,
                        bounded: false,
                        counterexample: Some(path),
                    };
                }
            }
        }
        return TransitivityReport {
            transitive: true,
            bounded: false,
            counterexample: None,
        };
    }
    let bound = max_path.unwrap_or(n);
    for i in 0..n {
        let mut path = vec![i];
        if let Some(found) = bounded_search(rig, z, &mut path, rig.one(), bound) {
            return TransitivityReport {
                transitive: false,
                bounded: true,
                counterexample: Some(found),
            };
        }
    }
    TransitivityReport {
        transitive: true,
        bounded: true,
        counterexample: None,
    }
}

fn support_path<R: Rig>(rig: &R, z: &RigMatrix<R::Elem>, from: usize, to: usize) -> Option<Vec<usize>> {
    let n = z.dim();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    // start from the first step so that the trivial path is excluded
    for k in 0..n {
        if !rig.is_zero(z.get(from, k)) && parent[k] == usize::MAX {
            parent[k] = from;
            queue.push_back(k);
        }
    }
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            loop {
                let p = parent[cur];
                path.push(p);
                if p == from && path.len() > 1 {
                    break;
                }
                cur = p;
            }
            path.reverse();
            return Some(path);
        }
        for k in 0..n {
            if !rig.is_zero(z.get(v, k)) && parent[k] == usize::MAX {
                parent[k] = v;
                queue.push_back(k);
            }
        }
    }
    None
}

fn bounded_search<R: Rig>(
    rig: &R,
    z: &RigMatrix<R::Elem>,
    path: &mut Vec<usize>,
    product: R::Elem,
    bound: usize,
) -> Option<Vec<usize>> {
    let start = path[0];
    let last = *path.last().expect("nonempty");
    if path.len() > 1 && rig.is_zero(z.get(start, last)) {
        return Some(path.clone());
    }
    if path.len() > bound {
        return None;
    }
    for k in 0..z.dim() {
        let next = rig.mul(&product, z.get(last, k));
        if rig.is_zero(&next) {
            continue;
        }
        path.push(k);
        if let Some(found) = bounded_search(rig, z, path, next, bound) {
            return Some(found);
        }
        path.pop();
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    /// `det⁺X det⁺Y + det⁻X det⁻Y + det⁻(XY) = det⁺X det⁻Y + det⁻X det⁺Y + det⁺(XY)`.
    pub determinant_identity: bool,
    /// `X adj⁺X + (det⁻X) I = X adj⁻X + (det⁺X) I`.
    pub adjugate_identity: bool,
    /// `det⁺ I = 1` and `det⁻ I = 0`.
    pub identity_values: bool,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.determinant_identity && self.adjugate_identity && self.identity_values
    }
}

pub fn lemma_identity_check<R: Rig>(
    rig: &R,
    x: &RigMatrix<R::Elem>,
    y: &RigMatrix<R::Elem>,
) -> Result<LemmaReport, MatrixRigError> {
    let n = x.dim();
    if y.dim() != n {
        return Err(MatrixRigError::DimensionMismatch(n, y.dim()));
    }
    check_budget(n, LEMMA_LIMIT)?;
    let (xp, xm) = det_plus_minus(rig, x)?;
    let (yp, ym) = det_plus_minus(rig, y)?;
    let xy = x.mul(rig, y).expect("same dimension");
    let (xyp, xym) = det_plus_minus(rig, &xy)?;
    let lhs = rig.sum([rig.mul(&xp, &yp), rig.mul(&xm, &ym), xym]);
    let rhs = rig.sum([rig.mul(&xp, &ym), rig.mul(&xm, &yp), xyp]);

    let (ap, am) = adj_plus_minus(rig, x)?;
    let left = x
        .mul(rig, &ap)
        .expect("same dimension")
        .add(rig, &RigMatrix::scalar(rig, n, &xm))
        .expect("same dimension");
    let right = x
        .mul(rig, &am)
        .expect("same dimension")
        .add(rig, &RigMatrix::scalar(rig, n, &xp))
        .expect("same dimension");

    let (ip, im) = det_plus_minus(rig, &RigMatrix::identity(rig, n))?;
    Ok(LemmaReport {
        determinant_identity: lhs == rhs,
        adjugate_identity: left == right,
        identity_values: rig.is_one(&ip) && rig.is_zero(&im),
    })
}

/// The first `(i, j)` with `Z_{ij} = 0` but `(Z⁻¹)_{ij} ≠ 0`, if any.
pub fn inverse_zero_check<F: Field>(
    field: &F,
    z: &RigMatrix<F::Elem>,
    zinv: &RigMatrix<F::Elem>,
) -> Result<Option<(usize, usize)>, MatrixRigError> {
    if z.dim() != zinv.dim() {
        return Err(MatrixRigError::DimensionMismatch(z.dim(), zinv.dim()));
    }
    let left = z.mul(field, zinv).expect("same dimension");
    let right = zinv.mul(field, z).expect("same dimension");
    if !left.is_identity(field) || !right.is_identity(field) {
        return Err(MatrixRigError::NotAnInverse);
    }
    let n = z.dim();
    for i in 0..n {
        for j in 0..n {
            if field.is_zero(z.get(i, j)) && !field.is_zero(zinv.get(i, j)) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}
