//! The b^2 - 4c = 0 specialization y = (x + d)^2 / (x + a): calculus report
//! and coprime-factorization point families.
//!
//! With b = 2d and c = d^2 the fingerprint is (a - d)^2, so these curves
//! always sit in the perfect-square branch of the count law. The positive
//! (y >= 1) and negative (y <= -1) points admit a parametrization by triples
//! (rho, m, n): rho runs over the positive divisors of |d - a| and (m, n)
//! over coprime factorizations m * n = |d - a| / rho. Together with the lone
//! zero point (-d, 0) the three families partition the full point set, which
//! the divisor-pair engine reproduces independently.

use crate::arith;
use crate::error::{Error, Result};
use crate::model::{
    AnalysisReport, CurveParams, IntegralPoint, Interval, LineEq, MonotoneInterval, Monotonicity,
    ParametricTriple, PointSet, Rational, RationalPoint, SquareAnalysis, SquareForm,
};

/// Recognizes b even with c = (b/2)^2 and extracts d = b/2.
pub fn as_square_form(curve: &CurveParams) -> Option<SquareForm> {
    if curve.b() % 2 != 0 {
        return None;
    }
    let d = curve.b() / 2;
    (d * d == curve.c()).then_some(SquareForm { a: curve.a(), d })
}

/// Asymptotes, intercepts, critical points, extrema and concavity of
/// f(x) = (x + d)^2 / (x + a); collapses to a punctured line when a = d.
pub fn analyze(sf: &SquareForm) -> AnalysisReport {
    let (a, d) = (sf.a, sf.d);
    if a == d {
        return AnalysisReport::Line {
            line: LineEq {
                slope: 1,
                intercept: a,
            },
            hole_x: -a,
        };
    }

    let pole = -a;
    let critical_lo = -d; // where f = 0
    let critical_hi = d - 2 * a; // where f = 4(d - a)
    let zero_pt = RationalPoint {
        x: Rational::integer(-d),
        y: Rational::integer(0),
    };
    let bend_pt = RationalPoint {
        x: Rational::integer(critical_hi),
        y: Rational::integer(4 * (d - a)),
    };

    let inc = |lo, hi| MonotoneInterval {
        interval: Interval { lo, hi },
        direction: Monotonicity::Increasing,
    };
    let dec = |lo, hi| MonotoneInterval {
        interval: Interval { lo, hi },
        direction: Monotonicity::Decreasing,
    };

    // For a < d the ordering is -d < -a < d - 2a and the branch maximum
    // (-d, 0) sits left of the pole with the minimum (d - 2a, 4(d - a)) on
    // the right; for d < a everything mirrors.
    let (local_max, local_min, monotone_intervals) = if a < d {
        (
            zero_pt,
            bend_pt,
            [
                inc(None, Some(critical_lo)),
                dec(Some(critical_lo), Some(pole)),
                dec(Some(pole), Some(critical_hi)),
                inc(Some(critical_hi), None),
            ],
        )
    } else {
        (
            bend_pt,
            zero_pt,
            [
                inc(None, Some(critical_hi)),
                dec(Some(critical_hi), Some(pole)),
                dec(Some(pole), Some(critical_lo)),
                inc(Some(critical_lo), None),
            ],
        )
    };

    AnalysisReport::ProperSquare(Box::new(SquareAnalysis {
        vertical_asymptote_x: pole,
        oblique: LineEq {
            slope: 1,
            intercept: 2 * d - a,
        },
        x_intercept: IntegralPoint::new(-d, 0),
        y_intercept: (a != 0).then(|| Rational::new(d * d, a).expect("a != 0")),
        critical_xs: [critical_lo, critical_hi],
        local_max,
        local_min,
        monotone_intervals,
        concave_down: Interval {
            lo: None,
            hi: Some(pole),
        },
        concave_up: Interval {
            lo: Some(pole),
            hi: None,
        },
        inflection_points: Vec::new(),
    }))
}

fn require_proper(sf: &SquareForm) -> Result<i128> {
    if sf.a == sf.d {
        return Err(Error::domain(
            "a = d collapses the curve to a line; parametric families need a != d",
        ));
    }
    Ok(sf.gap().abs())
}

/// All (rho, m, n) with rho a positive divisor of `gap_abs`, m * n =
/// gap_abs / rho and gcd(m, n) = 1, as ordered pairs (both orders listed).
fn coprime_triples(gap_abs: i128) -> Result<Vec<ParametricTriple>> {
    let mut triples = Vec::new();
    for rho in 1..=gap_abs {
        if gap_abs % rho != 0 {
            continue;
        }
        let q = gap_abs / rho;
        for m in 1..=q {
            if q % m == 0 {
                let n = q / m;
                if arith::gcd(m, n) == 1 {
                    triples.push(ParametricTriple { rho, m, n });
                }
            }
        }
    }
    if triples.is_empty() {
        return Err(Error::domain(format!(
            "no parametric triples for gap {gap_abs}"
        )));
    }
    Ok(triples)
}

/// The y >= 1 points with the triple that generated each.
///
/// d > a: x = -a + rho m^2, y = rho (m + n)^2 over all ordered coprime pairs.
/// d < a: y = rho (m - n)^2 with m > n >= 1, once with x = -a + rho m^2
/// (the x > -d family) and once with x = -a + rho n^2 (the -a < x < -d
/// family, nonempty only when a - d >= 2).
pub fn parametrized_positive(sf: &SquareForm) -> Result<Vec<(ParametricTriple, IntegralPoint)>> {
    let gap_abs = require_proper(sf)?;
    let (a, d) = (sf.a, sf.d);
    let mut out = Vec::new();
    for t in coprime_triples(gap_abs)? {
        let (rho, m, n) = (t.rho, t.m, t.n);
        if d > a {
            out.push((
                t,
                IntegralPoint::new(-a + rho * m * m, rho * (m + n) * (m + n)),
            ));
        } else if m > n {
            let y = rho * (m - n) * (m - n);
            out.push((t, IntegralPoint::new(-a + rho * m * m, y)));
            out.push((t, IntegralPoint::new(-a + rho * n * n, y)));
        }
    }
    Ok(out)
}

/// The y <= -1 points with their triples; the exact mirror of
/// [`parametrized_positive`] with x reflected across -a and y negated.
pub fn parametrized_negative(sf: &SquareForm) -> Result<Vec<(ParametricTriple, IntegralPoint)>> {
    let gap_abs = require_proper(sf)?;
    let (a, d) = (sf.a, sf.d);
    let mut out = Vec::new();
    for t in coprime_triples(gap_abs)? {
        let (rho, m, n) = (t.rho, t.m, t.n);
        if d < a {
            out.push((
                t,
                IntegralPoint::new(-a - rho * m * m, -rho * (m + n) * (m + n)),
            ));
        } else if m > n {
            let y = -rho * (m - n) * (m - n);
            out.push((t, IntegralPoint::new(-a - rho * m * m, y)));
            out.push((t, IntegralPoint::new(-a - rho * n * n, y)));
        }
    }
    Ok(out)
}

/// All integral points with y >= 1.
pub fn parametric_points_positive(sf: &SquareForm) -> Result<PointSet> {
    Ok(parametrized_positive(sf)?
        .into_iter()
        .map(|(_, p)| p)
        .collect())
}

/// All integral points with y <= -1.
pub fn parametric_points_negative(sf: &SquareForm) -> Result<PointSet> {
    Ok(parametrized_negative(sf)?
        .into_iter()
        .map(|(_, p)| p)
        .collect())
}

/// The single point with y = 0: (-d, 0).
pub fn zero_point(sf: &SquareForm) -> Result<IntegralPoint> {
    require_proper(sf)?;
    Ok(IntegralPoint::new(-sf.d, 0))
}
