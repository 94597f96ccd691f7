//! Dense square matrices over a rig, and exact elimination over fields.

use thiserror::Error;

use crate::par;
use crate::rig::{Field, Rig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("expected {expected} entries for a {n}x{n} matrix, got {got}")]
    Shape { n: usize, expected: usize, got: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    /// No nonzero pivot could be found in this column.
    #[error("matrix is singular (no pivot in column {column})")]
    Singular { column: usize },
}

/// An `n × n` matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RigMatrix<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E: Clone> RigMatrix<E> {
    pub fn new(n: usize, entries: Vec<E>) -> Result<Self, MatrixError> {
        if entries.len() != n * n {
            return Err(MatrixError::Shape {
                n,
                expected: n * n,
                got: entries.len(),
            });
        }
        Ok(RigMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(MatrixError::Shape {
                    n,
                    expected: n * n,
                    got: row.len() * n,
                });
            }
            entries.extend(row);
        }
        Ok(RigMatrix { n, entries })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> E>(n: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        RigMatrix { n, entries }
    }

    pub fn filled(n: usize, value: E) -> Self {
        RigMatrix {
            n,
            entries: vec![value; n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.entries[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<T: Clone, F: FnMut(&E) -> T>(&self, f: F) -> RigMatrix<T> {
        RigMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        RigMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// The submatrix on the given index list, in that order.
    pub fn restrict(&self, indices: &[usize]) -> Self {
        RigMatrix::from_fn(indices.len(), |i, j| {
            self.get(indices[i], indices[j]).clone()
        })
    }
}

impl<E: Clone + Send + Sync> RigMatrix<E> {
    pub fn zeros<R: Rig<Elem = E>>(rig: &R, n: usize) -> Self {
        RigMatrix::filled(n, rig.zero())
    }

    pub fn identity<R: Rig<Elem = E>>(rig: &R, n: usize) -> Self {
        RigMatrix::from_fn(n, |i, j| if i == j { rig.one() } else { rig.zero() })
    }

    pub fn scalar<R: Rig<Elem = E>>(rig: &R, n: usize, c: &E) -> Self {
        RigMatrix::from_fn(n, |i, j| if i == j { c.clone() } else { rig.zero() })
    }

    pub fn add<R: Rig<Elem = E>>(&self, rig: &R, other: &Self) -> Result<Self, MatrixError> {
        self.check_dim(other)?;
        Ok(RigMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| rig.add(a, b))
                .collect(),
        })
    }

    pub fn scale<R: Rig<Elem = E>>(&self, rig: &R, c: &E) -> Self {
        self.map(|x| rig.mul(c, x))
    }

    /// Matrix product; rows are computed independently.
    pub fn mul<R: Rig<Elem = E>>(&self, rig: &R, other: &Self) -> Result<Self, MatrixError> {
        self.check_dim(other)?;
        let n = self.n;
        let rows = par::map_range(n, |i| {
            (0..n)
                .map(|j| {
                    let mut acc = rig.zero();
                    for k in 0..n {
                        let a = self.get(i, k);
                        if rig.is_zero(a) {
                            continue;
                        }
                        acc = rig.add(&acc, &rig.mul(a, other.get(k, j)));
                    }
                    acc
                })
                .collect::<Vec<_>>()
        });
        Ok(RigMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Kronecker product, indexed by pairs `(i, k) ↦ i * m + k`.
    pub fn kronecker<R: Rig<Elem = E>>(&self, rig: &R, other: &Self) -> Self {
        let m = other.n;
        RigMatrix::from_fn(self.n * m, |r, c| {
            rig.mul(self.get(r / m, c / m), other.get(r % m, c % m))
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum<R: Rig<Elem = E>>(&self, rig: &R, other: &Self) -> Self {
        let n = self.n;
        RigMatrix::from_fn(n + other.n, |i, j| match (i < n, j < n) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => other.get(i - n, j - n).clone(),
            _ => rig.zero(),
        })
    }

    pub fn sum_entries<R: Rig<Elem = E>>(&self, rig: &R) -> E {
        rig.sum(self.entries.iter().cloned())
    }

    pub fn is_identity<R: Rig<Elem = E>>(&self, rig: &R) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let x = self.get(i, j);
                if i == j {
                    rig.is_one(x)
                } else {
                    rig.is_zero(x)
                }
            })
        })
    }

    fn check_dim(&self, other: &Self) -> Result<(), MatrixError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(MatrixError::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }
}

/// Reduces the first `n` columns of an augmented system to the identity.
///
/// The pivot is the first row (at or below the diagonal) with a nonzero entry
/// in the current column, so the sequence of operations is deterministic.
/// Row updates for one pivot step are independent and may run in parallel.
fn gauss_jordan<F: Field>(field: &F, rows: &mut [Vec<F::Elem>], n: usize) -> Result<(), MatrixError> {
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !field.is_zero(&rows[r][col]))
            .ok_or(MatrixError::Singular { column: col })?;
        rows.swap(col, pivot);
        let inv = field
            .inv(&rows[col][col])
            .map_err(|_| MatrixError::Singular { column: col })?;
        let pivot_row: Vec<F::Elem> = rows[col].iter().map(|x| field.mul(&inv, x)).collect();
        par::for_each_mut(rows, |r, row| {
            if r == col {
                row.clone_from(&pivot_row);
                return;
            }
            let factor = row[col].clone();
            if field.is_zero(&factor) {
                return;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !field.is_zero(p) {
                    *x = field.sub(x, &field.mul(&factor, p));
                }
            }
        });
    }
    Ok(())
}

/// Exact inverse by Gauss–Jordan elimination.
pub fn invert<F: Field>(field: &F, m: &RigMatrix<F::Elem>) -> Result<RigMatrix<F::Elem>, MatrixError> {
    let n = m.dim();
    let mut rows: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();

    gauss_jordan(field, &mut rows, n)?;

    let entries = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
    RigMatrix::new(n, entries)
}

/// Solves `m · x = rhs` exactly.
pub fn solve<F: Field>(field: &F, m: &RigMatrix<F::Elem>, rhs: &[F::Elem]) -> Result<Vec<F::Elem>, MatrixError> {
    let n = m.dim();
    if rhs.len() != n {
        return Err(MatrixError::DimensionMismatch {
            left: n,
            right: rhs.len(),
        });
    }
    let mut rows: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(rhs[i].clone());
            r
        })
        .collect();

    gauss_jordan(field, &mut rows, n)?;
    Ok(rows.into_iter().map(|mut r| r.pop().expect("augmented")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rig::{rat, ratio, Integers, Rationals};
    use num_bigint::BigInt;

    fn q(rows: &[&[i64]]) -> RigMatrix<num_rational::BigRational> {
        RigMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn invert_two_by_two() {
        let z = q(&[&[2, 1], &[1, 1]]);
        assert_eq!(invert(&Rationals, &z).unwrap(), q(&[&[1, -1], &[-1, 2]]));
    }

    #[test]
    fn singular_reports_column() {
        let z = q(&[&[1, 1], &[1, 1]]);
        assert_eq!(invert(&Rationals, &z), Err(MatrixError::Singular { column: 1 }));
    }

    #[test]
    fn pivoting_past_zero_diagonal() {
        let z = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(invert(&Rationals, &z).unwrap(), z);
        let x = solve(&Rationals, &q(&[&[0, 2], &[4, 0]]), &[rat(1), rat(1)]).unwrap();
        assert_eq!(x, vec![ratio(1, 4), ratio(1, 2)]);
    }

    #[test]
    fn kronecker_and_products() {
        let a = RigMatrix::from_rows(vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(0), BigInt::from(1)],
        ])
        .unwrap();
        let id = RigMatrix::identity(&Integers, 2);
        let k = a.kronecker(&Integers, &id);
        assert_eq!(k.dim(), 4);
        assert_eq!(*k.get(0, 2), BigInt::from(2));
        assert_eq!(*k.get(1, 3), BigInt::from(2));
        assert_eq!(*k.get(0, 3), BigInt::from(0));
        assert_eq!(a.mul(&Integers, &id).unwrap(), a);
        assert_eq!(a.sum_entries(&Integers), BigInt::from(4));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            RigMatrix::new(2, vec![1, 2, 3]),
            Err(MatrixError::Shape { .. })
        ));
        assert!(RigMatrix::from_rows(vec![vec![1, 2], vec![3]]).is_err());
    }
}
