//! Commutative rigs and the concrete instances used throughout the crate.
//!
//! A rig is a value (not just a type) so that instances carrying runtime
//! parameters, such as the truncation degree of [`SeriesRig`], fit the same
//! interface. Every algorithm in the crate takes a `&R where R: Rig` and works
//! on `R::Elem`.
//!
//! The instances are
//!
//! - [`Naturals`]: ℕ as arbitrary-precision unsigned integers,
//! - [`Integers`]: ℤ,
//! - [`Rationals`]: ℚ, always in lowest terms,
//! - [`Reals`]: 64-bit floats, used for magnitude only,
//! - [`Booleans`]: `({0,1}, max, min)`,
//! - [`SeriesRig`]: ℚ[t] truncated above a fixed degree.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RigError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rig `{0}` has no additive inverses")]
    NoNegation(String),
    #[error("rig `{0}` has no multiplicative inverses")]
    NoDivision(String),
    #[error("truncation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
}

/// Static description of a rig's structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigDescriptor {
    pub name: String,
    pub has_negation: bool,
    pub has_division: bool,
    /// `n·1 = 0` only for `n = 0`.
    pub characteristic_zero: bool,
}

pub trait Rig: Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> RigDescriptor;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Exact-value rendering used in reports. Rationals print as `p/q`.
    fn render(&self, a: &Self::Elem) -> String;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `n·1`.
    fn from_count(&self, n: u64) -> Self::Elem {
        // double-and-add so that large counts stay cheap
        let mut acc = self.zero();
        let mut base = self.one();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }

    fn sum<I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = Self::Elem>,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, &x))
    }

    fn product<I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = Self::Elem>,
    {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, &x))
    }

    /// Additive inverse, when the rig has one.
    fn try_neg(&self, _a: &Self::Elem) -> Result<Self::Elem, RigError> {
        Err(RigError::NoNegation(self.descriptor().name))
    }

    /// Multiplicative inverse, when the rig is a field.
    fn try_inv(&self, _a: &Self::Elem) -> Result<Self::Elem, RigError> {
        Err(RigError::NoDivision(self.descriptor().name))
    }

    /// Whether `ab = 0` forces `a = 0` or `b = 0`.
    fn zero_divisor_free(&self) -> bool {
        true
    }
}

pub trait Ring: Rig {
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, RigError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RigError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// A rig sitting inside a field where linear systems can be solved exactly.
///
/// Solutions are computed in [`EmbedsInField::Field`] and brought back with
/// [`EmbedsInField::restrict`], which fails when the value leaves the rig
/// (a non-integer over ℤ, a negative number over ℕ).
pub trait EmbedsInField: Rig {
    type Field: Field;

    fn field(&self) -> Self::Field;
    fn embed(&self, a: &Self::Elem) -> <Self::Field as Rig>::Elem;
    fn restrict(&self, a: &<Self::Field as Rig>::Elem) -> Option<Self::Elem>;
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn render_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Formats a float with 12 significant digits, trailing zeros trimmed.
pub fn render_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let exponent = x.abs().log10().floor() as i32;
    if !(-6..=15).contains(&exponent) {
        return format!("{:.11e}", x);
    }
    let decimals = (11 - exponent).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Naturals;

impl Rig for Naturals {
    type Elem = BigUint;

    fn descriptor(&self) -> RigDescriptor {
        RigDescriptor {
            name: "nat".into(),
            has_negation: false,
            has_division: false,
            characteristic_zero: true,
        }
    }
    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }
    fn render(&self, a: &BigUint) -> String {
        a.to_string()
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
    fn from_count(&self, n: u64) -> BigUint {
        BigUint::from(n)
    }
}

impl EmbedsInField for Naturals {
    type Field = Rationals;

    fn field(&self) -> Rationals {
        Rationals
    }
    fn embed(&self, a: &BigUint) -> BigRational {
        BigRational::from_integer(BigInt::from_biguint(Sign::Plus, a.clone()))
    }
    fn restrict(&self, a: &BigRational) -> Option<BigUint> {
        if a.is_integer() && !a.is_negative() {
            a.numer().to_biguint()
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Rig for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> RigDescriptor {
        RigDescriptor {
            name: "int".into(),
            has_negation: true,
            has_division: false,
            characteristic_zero: true,
        }
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn from_count(&self, n: u64) -> BigInt {
        BigInt::from(n)
    }
    fn try_neg(&self, a: &BigInt) -> Result<BigInt, RigError> {
        Ok(-a)
    }
}

impl Ring for Integers {
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
}

impl EmbedsInField for Integers {
    type Field = Rationals;

    fn field(&self) -> Rationals {
        Rationals
    }
    fn embed(&self, a: &BigInt) -> BigRational {
        BigRational::from_integer(a.clone())
    }
    fn restrict(&self, a: &BigRational) -> Option<BigInt> {
        a.is_integer().then(|| a.numer().clone())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Rig for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> RigDescriptor {
        RigDescriptor {
            name: "rat".into(),
            has_negation: true,
            has_division: true,
            characteristic_zero: true,
        }
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn render(&self, a: &BigRational) -> String {
        render_rational(a)
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_count(&self, n: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn try_neg(&self, a: &BigRational) -> Result<BigRational, RigError> {
        Ok(-a)
    }
    fn try_inv(&self, a: &BigRational) -> Result<BigRational, RigError> {
        self.inv(a)
    }
}

impl Ring for Rationals {
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Result<BigRational, RigError> {
        if a.is_zero() {
            Err(RigError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
}

impl EmbedsInField for Rationals {
    type Field = Rationals;

    fn field(&self) -> Rationals {
        Rationals
    }
    fn embed(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn restrict(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
}

/// Floating-point reals. Equality is exact; callers compare with a tolerance.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Reals;

impl Rig for Reals {
    type Elem = f64;

    fn descriptor(&self) -> RigDescriptor {
        RigDescriptor {
            name: "real".into(),
            has_negation: true,
            has_division: true,
            characteristic_zero: true,
        }
    }
    fn zero(&self) -> f64 {
        0.0
    }
    fn one(&self) -> f64 {
        1.0
    }
    fn add(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }
    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a * b
    }
    fn render(&self, a: &f64) -> String {
        render_real(*a)
    }
    fn from_count(&self, n: u64) -> f64 {
        n as f64
    }
    fn try_neg(&self, a: &f64) -> Result<f64, RigError> {
        Ok(-a)
    }
    fn try_inv(&self, a: &f64) -> Result<f64, RigError> {
        self.inv(a)
    }
}

impl Ring for Reals {
    fn neg(&self, a: &f64) -> f64 {
        -a
    }
}

impl Field for Reals {
    fn inv(&self, a: &f64) -> Result<f64, RigError> {
        if *a == 0.0 {
            Err(RigError::DivisionByZero)
        } else {
            Ok(1.0 / a)
        }
    }
}

impl EmbedsInField for Reals {
    type Field = Reals;

    fn field(&self) -> Reals {
        Reals
    }
    fn embed(&self, a: &f64) -> f64 {
        *a
    }
    fn restrict(&self, a: &f64) -> Option<f64> {
        Some(*a)
    }
}

/// `({0,1}, max, min)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Booleans;

impl Rig for Booleans {
    type Elem = bool;

    fn descriptor(&self) -> RigDescriptor {
        // n·1 = 1 for every n ≥ 1, so 0 is the only n with n·1 = 0.
        RigDescriptor {
            name: "bool".into(),
            has_negation: false,
            has_division: false,
            characteristic_zero: true,
        }
    }
    fn zero(&self) -> bool {
        false
    }
    fn one(&self) -> bool {
        true
    }
    fn add(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }
    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn render(&self, a: &bool) -> String {
        if *a { "1" } else { "0" }.into()
    }
    fn from_count(&self, n: u64) -> bool {
        n > 0
    }
}

/// A power series over ℚ truncated above `truncation_degree`.
///
/// Coefficients are stored for degrees `0..=truncation_degree`; anything above
/// is discarded by every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(truncation_degree: usize) -> Self {
        TruncatedSeries {
            coefficients: vec![BigRational::zero(); truncation_degree + 1],
        }
    }

    pub fn constant(c: BigRational, truncation_degree: usize) -> Self {
        let mut s = Self::zero(truncation_degree);
        s.coefficients[0] = c;
        s
    }

    /// `t` (or zero when the truncation degree is 0).
    pub fn variable(truncation_degree: usize) -> Self {
        let mut s = Self::zero(truncation_degree);
        if truncation_degree >= 1 {
            s.coefficients[1] = BigRational::one();
        }
        s
    }

    /// Builds a series from low-degree coefficients; higher ones are dropped.
    pub fn from_coefficients<I>(coefficients: I, truncation_degree: usize) -> Self
    where
        I: IntoIterator<Item = BigRational>,
    {
        let mut s = Self::zero(truncation_degree);
        for (slot, c) in s.coefficients.iter_mut().zip(coefficients) {
            *slot = c;
        }
        s
    }

    pub fn from_integers(coefficients: &[i64], truncation_degree: usize) -> Self {
        Self::from_coefficients(
            coefficients
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c))),
            truncation_degree,
        )
    }

    pub fn truncation_degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> BigRational {
        self.coefficients
            .get(degree)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Value of the polynomial at `t`.
    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RigError> {
        self.check_degree(other)?;
        Ok(TruncatedSeries {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common degree.
    pub fn try_mul(&self, other: &Self) -> Result<Self, RigError> {
        self.check_degree(other)?;
        let n = self.truncation_degree();
        let mut out = Self::zero(n);
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coefficients[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }

    fn check_degree(&self, other: &Self) -> Result<(), RigError> {
        if self.truncation_degree() == other.truncation_degree() {
            Ok(())
        } else {
            Err(RigError::DegreeMismatch {
                left: self.truncation_degree(),
                right: other.truncation_degree(),
            })
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (d, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = render_rational(c);
            let power = if d == 1 { "t".to_string() } else { format!("t^{d}") };
            terms.push(match (d, coeff.as_str()) {
                (0, _) => coeff,
                (_, "1") => power,
                (_, "-1") => format!("-{power}"),
                _ => format!("{coeff}*{power}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

/// Checked product of two series with equal truncation degree.
pub fn series_mul(x: &TruncatedSeries, y: &TruncatedSeries) -> Result<TruncatedSeries, RigError> {
    x.try_mul(y)
}

/// ℚ[t]/(t^(N+1)).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesRig {
    pub truncation_degree: usize,
}

impl SeriesRig {
    pub const DEFAULT_DEGREE: usize = 16;

    pub fn new(truncation_degree: usize) -> Self {
        SeriesRig { truncation_degree }
    }

    pub fn variable(&self) -> TruncatedSeries {
        TruncatedSeries::variable(self.truncation_degree)
    }

    pub fn constant(&self, c: BigRational) -> TruncatedSeries {
        TruncatedSeries::constant(c, self.truncation_degree)
    }

    // Elements handed to this rig must share its degree; anything else is a
    // programming error rather than a recoverable condition.
    fn expect_degree(&self, x: &TruncatedSeries) {
        assert_eq!(
            x.truncation_degree(),
            self.truncation_degree,
            "series of degree {} used in rig of degree {}",
            x.truncation_degree(),
            self.truncation_degree
        );
    }
}

impl Default for SeriesRig {
    fn default() -> Self {
        SeriesRig::new(Self::DEFAULT_DEGREE)
    }
}

impl Rig for SeriesRig {
    type Elem = TruncatedSeries;

    fn descriptor(&self) -> RigDescriptor {
        RigDescriptor {
            name: format!("poly:{}", self.truncation_degree),
            has_negation: true,
            has_division: false,
            characteristic_zero: true,
        }
    }
    fn zero(&self) -> TruncatedSeries {
        TruncatedSeries::zero(self.truncation_degree)
    }
    fn one(&self) -> TruncatedSeries {
        TruncatedSeries::constant(BigRational::one(), self.truncation_degree)
    }
    fn add(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        self.expect_degree(a);
        a.try_add(b).expect("degree checked")
    }
    fn mul(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        self.expect_degree(a);
        a.try_mul(b).expect("degree checked")
    }
    fn render(&self, a: &TruncatedSeries) -> String {
        a.to_string()
    }
    fn is_zero(&self, a: &TruncatedSeries) -> bool {
        a.is_zero()
    }
    fn from_count(&self, n: u64) -> TruncatedSeries {
        TruncatedSeries::constant(
            BigRational::from_integer(BigInt::from(n)),
            self.truncation_degree,
        )
    }
    fn try_neg(&self, a: &TruncatedSeries) -> Result<TruncatedSeries, RigError> {
        Ok(a.neg())
    }
    fn zero_divisor_free(&self) -> bool {
        // t · t^N = 0
        self.truncation_degree == 0
    }
}

impl Ring for SeriesRig {
    fn neg(&self, a: &TruncatedSeries) -> TruncatedSeries {
        a.neg()
    }
}

/// Converts an exact rational to the nearest float.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Integer `n` as a rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_addition() {
        assert_eq!(Integers.add(&BigInt::from(2), &BigInt::from(3)), BigInt::from(5));
    }

    #[test]
    fn rational_inverse() {
        assert_eq!(Rationals.inv(&ratio(2, 3)).unwrap(), ratio(3, 2));
        assert_eq!(Rationals.try_inv(&rat(0)), Err(RigError::DivisionByZero));
    }

    #[test]
    fn naturals_have_no_negation() {
        assert!(matches!(
            Naturals.try_neg(&BigUint::one()),
            Err(RigError::NoNegation(_))
        ));
        assert!(!Naturals.descriptor().has_negation);
        assert!(matches!(
            Integers.try_inv(&BigInt::one()),
            Err(RigError::NoDivision(_))
        ));
    }

    #[test]
    fn series_products() {
        let n = 3;
        let a = TruncatedSeries::from_integers(&[1, 1], n);
        let b = TruncatedSeries::from_integers(&[1, -1], n);
        assert_eq!(
            series_mul(&a, &b).unwrap(),
            TruncatedSeries::from_integers(&[1, 0, -1], n)
        );

        let t = TruncatedSeries::variable(1);
        assert!(series_mul(&t, &t).unwrap().is_zero());

        let bad = TruncatedSeries::variable(2);
        assert_eq!(
            series_mul(&t, &bad),
            Err(RigError::DegreeMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn geometric_series_times_its_denominator() {
        // (1 - 2t)(1 + 2t + 4t^2 + 8t^3 + 16t^4) = 1 - 32t^5, truncated at 4
        let n = 4;
        let lhs = TruncatedSeries::from_integers(&[1, -2], n);
        let geo = TruncatedSeries::from_integers(&[1, 2, 4, 8, 16], n);
        assert_eq!(
            series_mul(&lhs, &geo).unwrap(),
            TruncatedSeries::from_integers(&[1], n)
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(render_rational(&ratio(-2, 4)), "-1/2");
        assert_eq!(render_rational(&rat(7)), "7");
        assert_eq!(parse_rational(" -3/6 "), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(render_real(1.462117157260009), "1.46211715726");
        assert_eq!(render_real(2.0), "2");
        assert_eq!(render_real(-0.5), "-0.5");
        assert_eq!(
            TruncatedSeries::from_integers(&[1, -3, 0, 2], 4).to_string(),
            "1 - 3*t + 2*t^3"
        );
        assert_eq!(TruncatedSeries::from_integers(&[0, -1, 1], 4).to_string(), "-t + t^2");
    }

    #[test]
    fn counts_embed() {
        assert!(Booleans.from_count(5));
        assert!(!Booleans.from_count(0));
        assert_eq!(Integers.from_count(1_000_000_007), BigInt::from(1_000_000_007u64));
        assert_eq!(Reals.from_count(12), 12.0);
        let generic = SeriesRig::new(2);
        assert_eq!(generic.from_count(3), TruncatedSeries::from_integers(&[3], 2));
    }

    #[test]
    fn restriction_to_subrigs() {
        assert_eq!(Integers.restrict(&ratio(4, 2)), Some(BigInt::from(2)));
        assert_eq!(Integers.restrict(&ratio(1, 2)), None);
        assert_eq!(Naturals.restrict(&rat(-1)), None);
    }
}
