//! Domain types shared across the crate. Data only; the algorithms live in
//! [`crate::arith`], [`crate::enumerate`], [`crate::square_case`] and
//! [`crate::oracle`].
//!
//! Everything here is an immutable value after construction and can be moved
//! or shared between threads freely.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on |a|, |b|, |c|. With coefficients at most 10^9 every product
/// the pipeline forms (including the membership check y(x+a) = x^2+bx+c at
/// the outermost points) stays below 2^127.
pub const DEFAULT_BOUND: i128 = 1_000_000_000;

/// Largest bound the CLI accepts. Beyond ~2*10^9 the worst-case membership
/// product 8*B^4 no longer fits in i128.
pub const MAX_BOUND: i128 = 2_000_000_000;

/// The integer triple (a, b, c) defining the curve y = (x^2 + bx + c)/(x + a).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveParams {
    a: i128,
    b: i128,
    c: i128,
}

impl CurveParams {
    /// Builds a curve, rejecting coefficients outside [`DEFAULT_BOUND`].
    pub fn new(a: i128, b: i128, c: i128) -> Result<Self> {
        Self::with_bound(a, b, c, DEFAULT_BOUND)
    }

    /// Builds a curve under an explicit bound (1 ..= [`MAX_BOUND`]).
    pub fn with_bound(a: i128, b: i128, c: i128, bound: i128) -> Result<Self> {
        if !(1..=MAX_BOUND).contains(&bound) {
            return Err(Error::parse(format!(
                "bound must lie in 1..={MAX_BOUND}, got {bound}"
            )));
        }
        for (name, value) in [("a", a), ("b", b), ("c", c)] {
            if value.unsigned_abs() > bound.unsigned_abs() {
                return Err(Error::Bound { name, value, bound });
            }
        }
        Ok(CurveParams { a, b, c })
    }

    pub fn a(&self) -> i128 {
        self.a
    }

    pub fn b(&self) -> i128 {
        self.b
    }

    pub fn c(&self) -> i128 {
        self.c
    }

    /// The excluded abscissa x = -a.
    pub fn pole(&self) -> i128 {
        -self.a
    }

    /// Exact membership test: x != -a and y(x+a) = x^2 + bx + c.
    ///
    /// Inputs drawn from in-bound curves cannot overflow; a point so far off
    /// the curve that the products leave i128 is reported as off the curve.
    pub fn contains(&self, p: IntegralPoint) -> bool {
        if p.x == self.pole() {
            return false;
        }
        let lhs = p.x.checked_add(self.a).and_then(|xa| p.y.checked_mul(xa));
        let rhs =
            p.x.checked_mul(p.x)
                .and_then(|x2| self.b.checked_mul(p.x).and_then(|bx| x2.checked_add(bx)))
                .and_then(|s| s.checked_add(self.c));
        matches!((lhs, rhs), (Some(l), Some(r)) if l == r)
    }
}

/// Sign of a nonzero fingerprint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Positive,
    Negative,
}

/// D = a^2 - ab + c together with |D| and its perfect-square status.
///
/// D is the value of the numerator at x = -a, equivalently the remainder of
/// dividing x^2 + bx + c by x + a. It decides everything downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fingerprint {
    /// a^2 - ab + c.
    pub value: i128,
    /// |value|.
    pub magnitude: i128,
    /// Whether |value| is a perfect square.
    pub is_square: bool,
    /// k with k^2 = |value|, when `is_square`.
    pub sqrt_magnitude: Option<i128>,
}

impl Fingerprint {
    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Sign of the fingerprint; `None` when D = 0.
    pub fn sign(&self) -> Option<Sign> {
        match self.value {
            0 => None,
            v if v > 0 => Some(Sign::Positive),
            _ => Some(Sign::Negative),
        }
    }
}

/// Coarse classification of the curve by its fingerprint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveClass {
    /// D = 0: the curve degenerates to the punctured line y = x + (b - a).
    DegenerateLine,
    /// D != 0: a hyperbola with finitely many integral points.
    Hyperbola { sign: Sign, is_square: bool },
}

/// A lattice point. Ordering is lexicographic by (x, y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntegralPoint {
    pub x: i128,
    pub y: i128,
}

impl IntegralPoint {
    pub fn new(x: i128, y: i128) -> Self {
        IntegralPoint { x, y }
    }
}

impl std::fmt::Display for IntegralPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Canonical collection of integral points: strictly ascending by (x, y),
/// no duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PointSet {
    points: Vec<IntegralPoint>,
}

impl PointSet {
    /// Sorts and deduplicates; idempotent.
    pub fn from_points(mut points: Vec<IntegralPoint>) -> Self {
        points.sort_unstable();
        points.dedup();
        PointSet { points }
    }

    pub fn points(&self) -> &[IntegralPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: IntegralPoint) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntegralPoint> {
        self.points.iter()
    }

    /// Sorted union.
    pub fn union(&self, other: &PointSet) -> PointSet {
        let mut v = self.points.clone();
        v.extend_from_slice(&other.points);
        PointSet::from_points(v)
    }

    /// True when no point lies in both sets.
    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.iter().all(|&p| !other.contains(p))
    }
}

impl FromIterator<IntegralPoint> for PointSet {
    fn from_iter<T: IntoIterator<Item = IntegralPoint>>(iter: T) -> Self {
        PointSet::from_points(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a IntegralPoint;
    type IntoIter = std::slice::Iter<'a, IntegralPoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// A factorization |D| = d1 * d2 with 1 <= d2 <= d1.
///
/// Each pair generates four integral points (two when d1 = d2). The sums and
/// differences d1 +- d2 are the intermediate quantities the point formulas
/// are built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorPair {
    d2: i128,
    d1: i128,
}

impl DivisorPair {
    pub fn new(d2: i128, d1: i128) -> Result<Self> {
        if d2 < 1 || d1 < d2 {
            return Err(Error::domain(format!(
                "divisor pair requires 1 <= d2 <= d1, got ({d2}, {d1})"
            )));
        }
        Ok(DivisorPair { d2, d1 })
    }

    pub fn d1(&self) -> i128 {
        self.d1
    }

    pub fn d2(&self) -> i128 {
        self.d2
    }

    /// d1 + d2.
    pub fn sum(&self) -> i128 {
        self.d1 + self.d2
    }

    /// d1 - d2 (>= 0).
    pub fn diff(&self) -> i128 {
        self.d1 - self.d2
    }

    /// d1 * d2; equals |D| for pairs produced from a fingerprint.
    pub fn product(&self) -> i128 {
        self.d1 * self.d2
    }
}

/// The infinite family { (t, t + (b - a)) : t integer, t != -a } of the
/// degenerate case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParametricLine {
    /// b - a.
    pub intercept_shift: i128,
    /// -a, the abscissa of the puncture.
    pub excluded_x: i128,
}

impl ParametricLine {
    /// y-value of the line at `x`.
    pub fn y_at(&self, x: i128) -> i128 {
        x + self.intercept_shift
    }

    /// The puncture (-a, b - 2a).
    pub fn hole(&self) -> IntegralPoint {
        IntegralPoint::new(self.excluded_x, self.excluded_x + self.intercept_shift)
    }

    /// Human form, e.g. `y = x + 1, x ≠ -1`.
    pub fn family_human(&self) -> String {
        format!(
            "y = {}, x \u{2260} {}",
            shifted_x(self.intercept_shift, true),
            self.excluded_x
        )
    }

    /// Compact form, e.g. `y=x+1, x!=-1`.
    pub fn family_compact(&self) -> String {
        format!(
            "y={}, x!={}",
            shifted_x(self.intercept_shift, false),
            self.excluded_x
        )
    }
}

fn shifted_x(shift: i128, spaced: bool) -> String {
    let (plus, minus) = if spaced { (" + ", " - ") } else { ("+", "-") };
    match shift {
        0 => "x".to_string(),
        s if s > 0 => format!("x{plus}{s}"),
        s => format!("x{minus}{}", -s),
    }
}

/// The b^2 - 4c = 0 specialization: b = 2d, c = d^2, so the curve is
/// y = (x + d)^2 / (x + a).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareForm {
    pub a: i128,
    pub d: i128,
}

impl SquareForm {
    /// Reconstructs the originating curve (a, 2d, d^2).
    pub fn curve(&self) -> Result<CurveParams> {
        let b = self
            .d
            .checked_mul(2)
            .ok_or(Error::Overflow("square form b = 2d"))?;
        let c = self
            .d
            .checked_mul(self.d)
            .ok_or(Error::Overflow("square form c = d^2"))?;
        CurveParams::new(self.a, b, c)
    }

    /// d - a; its square is the fingerprint of the curve.
    pub fn gap(&self) -> i128 {
        self.d - self.a
    }
}

/// One (rho, m, n) choice in the coprime-factorization parametrization of the
/// square case: rho divides |d - a| and m * n = |d - a| / rho with
/// gcd(m, n) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParametricTriple {
    pub rho: i128,
    pub m: i128,
    pub n: i128,
}

/// Point-count prediction for a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountPrediction {
    /// Degenerate line: infinitely many integral points.
    Infinite,
    /// Hyperbola: 4N points, or 4N - 2 when |D| is a perfect square.
    Finite {
        /// N = number of divisors of |D| not exceeding sqrt(|D|).
        n_small_divisors: u64,
        total: u64,
    },
}

/// Kind of a detected special fingerprint magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialFormKind {
    /// |D| = 1.
    Unit,
    /// |D| = p, p prime.
    Prime { p: i128 },
    /// |D| = p^2, p prime.
    PrimeSquare { p: i128 },
    /// |D| = p1 * p2, distinct primes p1 < p2.
    SemiPrime { p1: i128, p2: i128 },
}

/// A fingerprint magnitude of one of the special shapes 1, p, p^2, p1*p2,
/// with the point count it forces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialForm {
    pub kind: SpecialFormKind,
    pub sign_of_d: Sign,
    /// 2, 4, 6 or 8 irrespective of the sign of D.
    pub expected_count: u64,
}

/// Reduced fraction with positive denominator. Construction is the only
/// arithmetic this crate needs from it; report values are formed from exact
/// integer expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("rational with zero denominator"));
        }
        let g = crate::arith::gcd(num, den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Rational { num, den })
    }

    pub fn integer(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// A point with exact rational coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl std::fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Open interval with optionally unbounded endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    /// `None` = unbounded below.
    pub lo: Option<i128>,
    /// `None` = unbounded above.
    pub hi: Option<i128>,
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let lo = self.lo.map_or("-inf".to_string(), |v| v.to_string());
        let hi = self.hi.map_or("inf".to_string(), |v| v.to_string());
        write!(f, "({lo}, {hi})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotonicity {
    Increasing,
    Decreasing,
}

/// An open interval on which f is strictly monotone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonotoneInterval {
    pub interval: Interval,
    pub direction: Monotonicity,
}

/// Slope-one line y = x + intercept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineEq {
    pub slope: i128,
    pub intercept: i128,
}

impl std::fmt::Display for LineEq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        debug_assert_eq!(self.slope, 1);
        write!(f, "y = {}", shifted_x(self.intercept, true))
    }
}

/// Calculus report for a square-form curve y = (x + d)^2 / (x + a).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnalysisReport {
    /// a = d: the line y = x + a with the point at x = -a removed.
    Line {
        line: LineEq,
        hole_x: i128,
    },
    ProperSquare(Box<SquareAnalysis>),
}

/// Full asymptote/extremum/concavity data for the a != d square case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareAnalysis {
    /// x = -a.
    pub vertical_asymptote_x: i128,
    /// y = x + 2d - a.
    pub oblique: LineEq,
    /// (-d, 0).
    pub x_intercept: IntegralPoint,
    /// (0, d^2/a); absent when a = 0 puts x = 0 outside the domain.
    pub y_intercept: Option<Rational>,
    /// The two critical numbers, in the order (-d, d - 2a).
    pub critical_xs: [i128; 2],
    pub local_max: RationalPoint,
    pub local_min: RationalPoint,
    /// Four open intervals covering the domain, each with its direction.
    pub monotone_intervals: [MonotoneInterval; 4],
    /// (-inf, -a).
    pub concave_down: Interval,
    /// (-a, inf).
    pub concave_up: Interval,
    /// Always empty: f'' never changes sign inside the domain.
    pub inflection_points: Vec<RationalPoint>,
}
