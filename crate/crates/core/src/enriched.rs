//! Coarse Möbius inversion for enriched categories.
//!
//! An enrichment is represented by a size assignment `|·|` sending hom-objects
//! to a rig; the enriched zeta function is `ζ(a, b) = |A(a, b)|`. Metric
//! spaces (magnitude) and graded free categories (truncated series) get
//! dedicated entry points.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::category::DirectedGraph;
use crate::incidence::{CoarseElement, IncidenceError};
use crate::matrix::RigMatrix;
use crate::par;
use crate::rig::{rat, Field, Rationals, Reals, Rig, Ring, SeriesRig, TruncatedSeries};

/// Magnitude solves whose 1-norm condition estimate exceeds this are refused.
pub const CONDITION_LIMIT: f64 = 1e12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnrichedError {
    #[error("invalid metric space: {0}")]
    InvalidMetric(String),
    #[error("similarity matrix is not invertible: {reason} (condition estimate {condition:e})")]
    NotInvertible { reason: String, condition: f64 },
    #[error("truncation degree must be at least 1")]
    DegreeTooSmall,
    #[error("a series matrix is invertible only if its constant term is: {0}")]
    SeriesNotInvertible(String),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Enrichment {
    FiniteSets,
    TruthValues,
    Metric,
    VectorDims,
    Graded,
}

impl fmt::Display for Enrichment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Enrichment::FiniteSets => "finite_sets",
            Enrichment::TruthValues => "truth_values",
            Enrichment::Metric => "metric",
            Enrichment::VectorDims => "vector_dims",
            Enrichment::Graded => "graded",
        })
    }
}

/// A monoid homomorphism from hom-objects (up to isomorphism) to a rig.
pub trait SizeAssignment {
    type Object: Clone;
    type R: Rig;

    fn enrichment(&self) -> Enrichment;
    fn rig(&self) -> &Self::R;
    fn size(&self, x: &Self::Object) -> <Self::R as Rig>::Elem;
    fn unit(&self) -> Self::Object;
    fn tensor(&self, x: &Self::Object, y: &Self::Object) -> Self::Object;

    fn same(&self, a: &<Self::R as Rig>::Elem, b: &<Self::R as Rig>::Elem) -> bool {
        a == b
    }
}

/// `|unit| = 1` and `|x ⊗ y| = |x|·|y|` on every sampled pair.
pub fn check_multiplicativity<S: SizeAssignment>(s: &S, samples: &[S::Object]) -> bool {
    let rig = s.rig();
    if !s.same(&s.size(&s.unit()), &rig.one()) {
        return false;
    }
    samples.iter().all(|x| {
        samples.iter().all(|y| {
            let lhs = s.size(&s.tensor(x, y));
            let rhs = rig.mul(&s.size(x), &s.size(y));
            s.same(&lhs, &rhs)
        })
    })
}

/// Hom-objects are finite sets, described by their cardinality.
pub struct FiniteSetSizes;

impl SizeAssignment for FiniteSetSizes {
    type Object = u64;
    type R = Rationals;

    fn enrichment(&self) -> Enrichment {
        Enrichment::FiniteSets
    }
    fn rig(&self) -> &Rationals {
        &Rationals
    }
    fn size(&self, x: &u64) -> BigRational {
        Rationals.from_count(*x)
    }
    fn unit(&self) -> u64 {
        1
    }
    fn tensor(&self, x: &u64, y: &u64) -> u64 {
        x * y
    }
}

/// Hom-objects are truth values, `⊗ = ∧`.
pub struct TruthValueSizes;

impl SizeAssignment for TruthValueSizes {
    type Object = bool;
    type R = Rationals;

    fn enrichment(&self) -> Enrichment {
        Enrichment::TruthValues
    }
    fn rig(&self) -> &Rationals {
        &Rationals
    }
    fn size(&self, x: &bool) -> BigRational {
        rat(i64::from(*x))
    }
    fn unit(&self) -> bool {
        true
    }
    fn tensor(&self, x: &bool, y: &bool) -> bool {
        *x && *y
    }
}

/// Hom-objects are distances in `[0, ∞]`, `⊗ = +`, `|x| = e^{−x}`.
pub struct MetricSizes;

impl SizeAssignment for MetricSizes {
    type Object = f64;
    type R = Reals;

    fn enrichment(&self) -> Enrichment {
        Enrichment::Metric
    }
    fn rig(&self) -> &Reals {
        &Reals
    }
    fn size(&self, x: &f64) -> f64 {
        (-x).exp()
    }
    fn unit(&self) -> f64 {
        0.0
    }
    fn tensor(&self, x: &f64, y: &f64) -> f64 {
        x + y
    }
    fn same(&self, a: &f64, b: &f64) -> bool {
        (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
    }
}

/// Hom-objects are finite-dimensional vector spaces, described by dimension.
pub struct VectorDimSizes;

impl SizeAssignment for VectorDimSizes {
    type Object = u64;
    type R = Rationals;

    fn enrichment(&self) -> Enrichment {
        Enrichment::VectorDims
    }
    fn rig(&self) -> &Rationals {
        &Rationals
    }
    fn size(&self, x: &u64) -> BigRational {
        Rationals.from_count(*x)
    }
    fn unit(&self) -> u64 {
        1
    }
    fn tensor(&self, x: &u64, y: &u64) -> u64 {
        x * y
    }
}

/// Hom-objects are ℕ-graded finite sets, described by their counts per degree;
/// `|X| = Σ cₙ tⁿ`.
pub struct GradedSizes {
    pub rig: SeriesRig,
}

impl SizeAssignment for GradedSizes {
    type Object = Vec<u64>;
    type R = SeriesRig;

    fn enrichment(&self) -> Enrichment {
        Enrichment::Graded
    }
    fn rig(&self) -> &SeriesRig {
        &self.rig
    }
    fn size(&self, x: &Vec<u64>) -> TruncatedSeries {
        let n = self.rig.truncation_degree;
        TruncatedSeries::from_coefficients(x.iter().take(n + 1).map(|&c| Rationals.from_count(c)), n)
    }
    fn unit(&self) -> Vec<u64> {
        vec![1]
    }
    fn tensor(&self, x: &Vec<u64>, y: &Vec<u64>) -> Vec<u64> {
        if x.is_empty() || y.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; x.len() + y.len() - 1];
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out
    }
}

/// `ζ(a, b) = |A(a, b)|` from a matrix of hom-objects.
pub fn enriched_coarse_zeta<S: SizeAssignment>(
    s: &S,
    objects: Vec<String>,
    homs: &RigMatrix<S::Object>,
) -> Result<CoarseElement<<S::R as Rig>::Elem>, EnrichedError> {
    Ok(CoarseElement::new(objects, homs.map(|x| s.size(x)))?)
}

/// A finite generalized metric space.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricSpace {
    points: Vec<String>,
    distances: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MetricFile {
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distances: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<Vec<f64>>>,
}

fn parse_distance(v: &Value) -> Result<f64, EnrichedError> {
    match v {
        Value::Number(n) => n
            .as_f64()
            .ok_or_else(|| EnrichedError::InvalidMetric(format!("bad number {n}"))),
        Value::String(s) if s == "inf" => Ok(f64::INFINITY),
        other => Err(EnrichedError::InvalidMetric(format!(
            "distance must be a number or \"inf\", got {other}"
        ))),
    }
}

impl MetricSpace {
    pub fn from_distances(points: Vec<String>, distances: Vec<Vec<f64>>) -> Result<Self, EnrichedError> {
        let n = points.len();
        if distances.len() != n || distances.iter().any(|r| r.len() != n) {
            return Err(EnrichedError::InvalidMetric(format!(
                "distance matrix must be {n}x{n}"
            )));
        }
        for (i, row) in distances.iter().enumerate() {
            for (j, &d) in row.iter().enumerate() {
                if d.is_nan() || d < 0.0 {
                    return Err(EnrichedError::InvalidMetric(format!(
                        "d({}, {}) = {d} is not in [0, inf]",
                        points[i], points[j]
                    )));
                }
            }
            if row[i] != 0.0 {
                return Err(EnrichedError::InvalidMetric(format!(
                    "d({0}, {0}) must be 0",
                    points[i]
                )));
            }
        }
        Ok(MetricSpace { points, distances })
    }

    /// Euclidean distances between coordinate vectors.
    pub fn from_coords(points: Vec<String>, coords: &[Vec<f64>]) -> Result<Self, EnrichedError> {
        if coords.len() != points.len() {
            return Err(EnrichedError::InvalidMetric("one coordinate vector per point".into()));
        }
        let dim = coords.first().map_or(0, Vec::len);
        if coords.iter().any(|c| c.len() != dim || c.iter().any(|x| !x.is_finite())) {
            return Err(EnrichedError::InvalidMetric("coordinates must be finite and of equal length".into()));
        }
        let distances = coords
            .iter()
            .map(|p| {
                coords
                    .iter()
                    .map(|q| p.iter().zip(q).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt())
                    .collect()
            })
            .collect();
        MetricSpace::from_distances(points, distances)
    }

    pub fn from_file(file: &MetricFile) -> Result<Self, EnrichedError> {
        match (&file.distances, &file.coords) {
            (Some(d), None) => {
                let rows = d
                    .iter()
                    .map(|r| r.iter().map(parse_distance).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                MetricSpace::from_distances(file.points.clone(), rows)
            }
            (None, Some(c)) => MetricSpace::from_coords(file.points.clone(), c),
            _ => Err(EnrichedError::InvalidMetric(
                "exactly one of `distances` or `coords` is required".into(),
            )),
        }
    }

    pub fn to_file(&self) -> MetricFile {
        let distances = self
            .distances
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&d| {
                        if d.is_infinite() {
                            Value::String("inf".into())
                        } else {
                            serde_json::json!(d)
                        }
                    })
                    .collect()
            })
            .collect();
        MetricFile {
            points: self.points.clone(),
            distances: Some(distances),
            coords: None,
        }
    }

    /// `n` evenly spaced points on a segment.
    pub fn segment(n: usize, length: f64) -> Self {
        let step = if n > 1 { length / (n - 1) as f64 } else { 0.0 };
        let coords: Vec<Vec<f64>> = (0..n).map(|i| vec![i as f64 * step]).collect();
        MetricSpace::from_coords((0..n).map(|i| format!("p{i}")).collect(), &coords).expect("valid segment")
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.distances[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|i| (0..i).all(|j| self.distances[i][j] == self.distances[j][i]))
    }

    pub fn satisfies_triangle_inequality(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.distances[i][k] <= self.distances[i][j] + self.distances[j][k] + 1e-12))
        })
    }

    /// Disjoint union with every cross distance infinite.
    pub fn coproduct(&self, other: &MetricSpace) -> MetricSpace {
        let (n, m) = (self.len(), other.len());
        let mut points: Vec<String> = self.points.iter().map(|p| format!("{p}.0")).collect();
        points.extend(other.points.iter().map(|p| format!("{p}.1")));
        let distances = (0..n + m)
            .map(|i| {
                (0..n + m)
                    .map(|j| match (i < n, j < n) {
                        (true, true) => self.distances[i][j],
                        (false, false) => other.distances[i - n][j - n],
                        _ => f64::INFINITY,
                    })
                    .collect()
            })
            .collect();
        MetricSpace { points, distances }
    }

    /// The ℓ¹ product, indexed `i·|other| + j`.
    pub fn l1_product(&self, other: &MetricSpace) -> MetricSpace {
        let m = other.len();
        let points = self
            .points
            .iter()
            .flat_map(|a| other.points.iter().map(move |b| format!("({a},{b})")))
            .collect();
        let n = self.len() * m;
        let distances = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.distances[x / m][y / m] + other.distances[x % m][y % m])
                    .collect()
            })
            .collect();
        MetricSpace { points, distances }
    }

    /// The same space with points reordered: point `k` of the result is `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> MetricSpace {
        MetricSpace {
            points: perm.iter().map(|&i| self.points[i].clone()).collect(),
            distances: perm
                .iter()
                .map(|&i| perm.iter().map(|&j| self.distances[i][j]).collect())
                .collect(),
        }
    }
}

/// `Z(a, b) = e^{−d(a, b)}`.
pub fn similarity_matrix(m: &MetricSpace) -> CoarseElement<f64> {
    let values = RigMatrix::from_fn(m.len(), |i, j| MetricSizes.size(&m.distances[i][j]));
    CoarseElement::new(m.points.clone(), values).expect("square")
}

/// LU factors with partial pivoting, stored in place.
struct Lu {
    n: usize,
    a: Vec<Vec<f64>>,
    perm: Vec<usize>,
}

impl Lu {
    fn factor(mut a: Vec<Vec<f64>>) -> Result<Lu, usize> {
        let n = a.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let scale = a
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0f64, |m, x| m.max(x.abs()));
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))
                .expect("nonempty");
            if a[p][k].abs() <= f64::EPSILON * scale * n as f64 {
                return Err(k);
            }
            a.swap(k, p);
            perm.swap(k, p);
            let pivot_row = a[k].clone();
            let (_, below) = a.split_at_mut(k + 1);
            par::for_each_mut(below, |_, row| {
                let factor = row[k] / pivot_row[k];
                row[k] = factor;
                if factor != 0.0 {
                    for j in k + 1..n {
                        row[j] -= factor * pivot_row[j];
                    }
                }
            });
        }
        Ok(Lu { n, a, perm })
    }

    fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                x[i] -= self.a[i][j] * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                x[i] -= self.a[i][j] * x[j];
            }
            x[i] /= self.a[i][i];
        }
        x
    }

    /// Solves `Aᵀ x = b`.
    fn solve_transpose(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y = b.to_vec();
        for i in 0..n {
            for j in 0..i {
                y[i] -= self.a[j][i] * y[j];
            }
            y[i] /= self.a[i][i];
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                y[i] -= self.a[j][i] * y[j];
            }
        }
        let mut x = vec![0.0; n];
        for (k, &p) in self.perm.iter().enumerate() {
            x[p] = y[k];
        }
        x
    }

    /// Hager's estimate of `‖A⁻¹‖₁`.
    fn inverse_norm_estimate(&self) -> f64 {
        let n = self.n;
        if n == 0 {
            return 0.0;
        }
        let mut x = vec![1.0 / n as f64; n];
        let mut estimate = 0.0;
        for _ in 0..5 {
            let y = self.solve(&x);
            let norm: f64 = y.iter().map(|v| v.abs()).sum();
            if norm <= estimate {
                break;
            }
            estimate = norm;
            let xi: Vec<f64> = y.iter().map(|v| if *v >= 0.0 { 1.0 } else { -1.0 }).collect();
            let z = self.solve_transpose(&xi);
            let (jmax, zmax) = z
                .iter()
                .enumerate()
                .fold((0, f64::NEG_INFINITY), |(bj, bv), (j, v)| if v.abs() > bv { (j, v.abs()) } else { (bj, bv) });
            let zx: f64 = z.iter().zip(&x).map(|(a, b)| a * b).sum();
            if zmax <= zx {
                break;
            }
            x = vec![0.0; n];
            x[jmax] = 1.0;
        }
        estimate
    }
}

fn one_norm(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    (0..n)
        .map(|j| rows.iter().map(|r| r[j].abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MagnitudeReport {
    pub magnitude: f64,
    /// The weighting `w` with `Z w = 1`, for symmetric spaces.
    pub weights: Option<Vec<f64>>,
    pub condition_estimate: f64,
}

pub fn magnitude(m: &MetricSpace) -> Result<MagnitudeReport, EnrichedError> {
    let z = similarity_matrix(m);
    let rows = z.values().rows();
    let n = rows.len();
    if n == 0 {
        return Ok(MagnitudeReport {
            magnitude: 0.0,
            weights: Some(Vec::new()),
            condition_estimate: 0.0,
        });
    }
    let norm = one_norm(&rows);
    let lu = Lu::factor(rows).map_err(|k| EnrichedError::NotInvertible {
        reason: format!("zero pivot at step {k} (point {})", m.points[k]),
        condition: f64::INFINITY,
    })?;
    let condition = norm * lu.inverse_norm_estimate();
    if !condition.is_finite() || condition > CONDITION_LIMIT {
        return Err(EnrichedError::NotInvertible {
            reason: "condition estimate exceeds the limit".into(),
            condition,
        });
    }
    if m.is_symmetric() {
        let w = lu.solve(&vec![1.0; n]);
        Ok(MagnitudeReport {
            magnitude: w.iter().sum(),
            weights: Some(w),
            condition_estimate: condition,
        })
    } else {
        // Σ entries of Z⁻¹ = 1ᵀ Z⁻¹ 1 column by column
        let total = par::map_range(n, |j| {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            lu.solve(&e).iter().sum::<f64>()
        })
        .iter()
        .sum();
        Ok(MagnitudeReport {
            magnitude: total,
            weights: None,
            condition_estimate: condition,
        })
    }
}

/// Magnitude of collinear points: `1 + Σ tanh(gap/2)` over consecutive gaps.
pub fn collinear_magnitude(positions: &[f64]) -> f64 {
    if positions.is_empty() {
        return 0.0;
    }
    let mut p = positions.to_vec();
    p.sort_by(f64::total_cmp);
    1.0 + p.windows(2).map(|w| ((w[1] - w[0]) / 2.0).tanh()).sum::<f64>()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StudyRow {
    pub points: usize,
    pub magnitude: f64,
    pub closed_form: f64,
    pub error_to_limit: f64,
}

/// Magnitude of `n` evenly spaced points on a segment, for each `n`; the
/// limit is `1 + length/2`.
pub fn segment_study(ns: &[usize], length: f64) -> Result<Vec<StudyRow>, EnrichedError> {
    let limit = 1.0 + length / 2.0;
    ns.iter()
        .map(|&n| {
            let space = MetricSpace::segment(n, length);
            let mag = magnitude(&space)?.magnitude;
            let step = if n > 1 { length / (n - 1) as f64 } else { 0.0 };
            let positions: Vec<f64> = (0..n).map(|i| i as f64 * step).collect();
            Ok(StudyRow {
                points: n,
                magnitude: mag,
                closed_form: collinear_magnitude(&positions),
                error_to_limit: (limit - mag).abs(),
            })
        })
        .collect()
}

/// The free category on a graph whose edges all have degree 1.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedGraphCategory {
    graph: DirectedGraph,
    degree: usize,
}

impl GradedGraphCategory {
    pub fn new(graph: DirectedGraph, degree: usize) -> Result<Self, EnrichedError> {
        if degree == 0 {
            return Err(EnrichedError::DegreeTooSmall);
        }
        Ok(GradedGraphCategory { graph, degree })
    }

    pub fn graph(&self) -> &DirectedGraph {
        &self.graph
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rig(&self) -> SeriesRig {
        SeriesRig::new(self.degree)
    }

    fn labels(&self) -> Vec<String> {
        self.graph.vertices.clone()
    }
}

/// `ζ = Σ_{n ≤ N} (Z_G t)ⁿ`: the coefficient of `tⁿ` counts paths of length `n`.
pub fn graded_zeta(g: &GradedGraphCategory) -> CoarseElement<TruncatedSeries> {
    let counts = g.graph.edge_counts();
    let v = counts.len();
    let big = |x: u64| Rationals.from_count(x);
    let adjacency = RigMatrix::from_fn(v, |a, b| big(counts[a][b]));
    let mut power = RigMatrix::identity(&Rationals, v);
    let mut coefficients = vec![vec![Vec::with_capacity(g.degree + 1); v]; v];
    for _ in 0..=g.degree {
        for (a, row) in coefficients.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                cell.push(power.get(a, b).clone());
            }
        }
        power = power.mul(&Rationals, &adjacency).expect("square");
    }
    let values = RigMatrix::from_fn(v, |a, b| {
        TruncatedSeries::from_coefficients(coefficients[a][b].iter().cloned(), g.degree)
    });
    CoarseElement::new(g.labels(), values).expect("square")
}

/// `μ = δ − Z_G t`.
pub fn graded_mobius(g: &GradedGraphCategory) -> CoarseElement<TruncatedSeries> {
    let counts = g.graph.edge_counts();
    let v = counts.len();
    let values = RigMatrix::from_fn(v, |a, b| {
        let delta = i64::from(a == b);
        TruncatedSeries::from_coefficients([rat(delta), -Rationals.from_count(counts[a][b])], g.degree)
    });
    CoarseElement::new(g.labels(), values).expect("square")
}

/// Inverse of a square matrix over `ℚ[t]/tᴺ⁺¹` whose constant term is invertible.
pub fn invert_series_matrix(
    rig: &SeriesRig,
    m: &RigMatrix<TruncatedSeries>,
) -> Result<RigMatrix<TruncatedSeries>, EnrichedError> {
    let n = m.dim();
    let deg = rig.truncation_degree;
    let coeff = |k: usize| RigMatrix::from_fn(n, |i, j| m.get(i, j).coefficient(k));
    let w0 = crate::matrix::invert(&Rationals, &coeff(0))
        .map_err(|e| EnrichedError::SeriesNotInvertible(e.to_string()))?;
    let minus_w0 = w0.map(|x| Rationals.neg(x));
    let mut w = vec![w0];
    for k in 1..=deg {
        let mut acc = RigMatrix::zeros(&Rationals, n);
        for j in 1..=k {
            acc = acc
                .add(&Rationals, &coeff(j).mul(&Rationals, &w[k - j]).expect("square"))
                .expect("square");
        }
        w.push(minus_w0.mul(&Rationals, &acc).expect("square"));
    }
    Ok(RigMatrix::from_fn(n, |i, j| {
        TruncatedSeries::from_coefficients(w.iter().map(|wk| wk.get(i, j).clone()), deg)
    }))
}

/// Sum of all entries, a truncated series.
pub fn series_total(rig: &SeriesRig, x: &CoarseElement<TruncatedSeries>) -> TruncatedSeries {
    x.values().sum_entries(rig)
}

/// `μ_{A⊗B}((a,b),(a′,b′)) = μ_A(a,a′) μ_B(b,b′)`, indexed `i·|B| + j`.
pub fn tensor_mobius<R: Rig>(
    rig: &R,
    mu_a: &CoarseElement<R::Elem>,
    mu_b: &CoarseElement<R::Elem>,
) -> CoarseElement<R::Elem> {
    let objects = mu_a
        .objects()
        .iter()
        .flat_map(|a| mu_b.objects().iter().map(move |b| format!("({a},{b})")))
        .collect();
    CoarseElement::new(objects, mu_a.values().kronecker(rig, mu_b.values())).expect("square")
}

/// Whether every coefficient of the series is zero.
pub fn is_zero_series(x: &TruncatedSeries) -> bool {
    x.coefficients().iter().all(Zero::is_zero)
}

/// Exact inverse over a field, used to cross-check enriched zeta functions.
pub fn field_inverse<F: Field>(field: &F, x: &CoarseElement<F::Elem>) -> Result<CoarseElement<F::Elem>, EnrichedError> {
    let inv = crate::matrix::invert(field, x.values()).map_err(|e| EnrichedError::NotInvertible {
        reason: e.to_string(),
        condition: f64::INFINITY,
    })?;
    Ok(CoarseElement::new(x.objects().to_vec(), inv)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{coarse_mobius, coarse_multiply, coarse_zeta};
    use crate::rig::ratio;
    use crate::corpus;

    #[test]
    fn size_assignments_are_multiplicative() {
        assert!(check_multiplicativity(&FiniteSetSizes, &[0, 1, 2, 5]));
        assert!(check_multiplicativity(&TruthValueSizes, &[false, true]));
        assert!(check_multiplicativity(&MetricSizes, &[0.0, 0.5, 3.0, f64::INFINITY]));
        assert!(check_multiplicativity(&VectorDimSizes, &[0, 3, 4]));
        let g = GradedSizes { rig: SeriesRig::new(4) };
        assert!(check_multiplicativity(&g, &[vec![1], vec![0, 2], vec![1, 1, 1]]));
    }

    #[test]
    fn finite_sets_recover_ordinary_zeta() {
        let c = corpus::retract_example();
        let homs = RigMatrix::from_fn(c.num_objects(), |a, b| c.hom(a, b).len() as u64);
        let z = enriched_coarse_zeta(&FiniteSetSizes, c.objects().to_vec(), &homs).unwrap();
        assert_eq!(z, coarse_zeta(&c, &Rationals));
    }

    #[test]
    fn two_point_magnitude() {
        for d in [0.1, 1.0, 3.0] {
            let m = MetricSpace::from_distances(vec!["a".into(), "b".into()], vec![vec![0.0, d], vec![d, 0.0]]).unwrap();
            let got = magnitude(&m).unwrap().magnitude;
            assert!((got - 2.0 / (1.0 + (-d).exp())).abs() < 1e-12);
        }
        let far = MetricSpace::from_distances(
            vec!["a".into(), "b".into()],
            vec![vec![0.0, f64::INFINITY], vec![f64::INFINITY, 0.0]],
        )
        .unwrap();
        assert_eq!(similarity_matrix(&far).values().entries(), &[1.0, 0.0, 0.0, 1.0]);
        let same = MetricSpace::from_distances(vec!["a".into(), "b".into()], vec![vec![0.0; 2]; 2]).unwrap();
        assert!(matches!(magnitude(&same), Err(EnrichedError::NotInvertible { .. })));
    }

    #[test]
    fn segment_approaches_one_plus_half_length() {
        let rows = segment_study(&[11, 101], 2.0).unwrap();
        assert!(rows[0].error_to_limit > rows[1].error_to_limit);
        for r in rows {
            assert!((r.magnitude - r.closed_form).abs() < 1e-9);
        }
    }

    #[test]
    fn graded_free_monoid() {
        let g = DirectedGraph::from_edges(1, &[(0, 0), (0, 0), (0, 0)]).unwrap();
        let cat = GradedGraphCategory::new(g, 5).unwrap();
        let rig = cat.rig();
        let mu = graded_mobius(&cat);
        assert_eq!(series_total(&rig, &mu), TruncatedSeries::from_integers(&[1, -3], 5));
        let zeta = graded_zeta(&cat);
        assert_eq!(zeta.get(0, 0), &TruncatedSeries::from_integers(&[1, 3, 9, 27, 81, 243], 5));
        let one = coarse_multiply(&rig, &mu, &zeta).unwrap();
        assert!(one.values().is_identity(&rig));
        assert_eq!(invert_series_matrix(&rig, zeta.values()).unwrap(), *mu.values());
    }

    #[test]
    fn tensor_matches_product() {
        let a = corpus::chain(2);
        let b = corpus::divisor_poset(6);
        let lhs = tensor_mobius(&Rationals, &coarse_mobius(&a, &Rationals).unwrap(), &coarse_mobius(&b, &Rationals).unwrap());
        assert_eq!(lhs, coarse_mobius(&a.product(&b), &Rationals).unwrap());
        assert_eq!(*lhs.get(0, 7), ratio(-1, 1));
    }
}
