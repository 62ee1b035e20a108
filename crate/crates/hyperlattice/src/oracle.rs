//! Two brute-force enumerators used to cross-check the divisor-pair engine.
//!
//! Neither function touches [`crate::arith`] or [`crate::enumerate`]: the
//! divisor scan collects divisors with its own loop, and the window scan
//! knows no divisor theory at all — it just tests (x^2 + bx + c) mod (x + a)
//! over a window of x values. Agreement between the three routes is the
//! artifact's ground truth.
//!
//! Both are O(|D|) on purpose; they exist for verification at desk scale,
//! not for speed.

use crate::error::{Error, Result};
use crate::model::{CurveParams, IntegralPoint, PointSet};

fn fingerprint_value(curve: &CurveParams) -> Result<i128> {
    let (a, b, c) = (curve.a(), curve.b(), curve.c());
    a.checked_mul(a)
        .and_then(|a2| a.checked_mul(b).and_then(|ab| a2.checked_sub(ab)))
        .and_then(|s| s.checked_add(c))
        .ok_or(Error::Overflow("fingerprint a^2 - ab + c"))
}

/// Enumerates via the divisibility identity
/// x^2 + bx + c = (x + a)(x + b - a) + D:
/// x + a must divide D, so every integer divisor t of D (both signs) yields
/// the point (-a + t, -a + t + (b - a) + D/t), and nothing else does.
pub fn divisor_scan_points(curve: &CurveParams) -> Result<PointSet> {
    let d = fingerprint_value(curve)?;
    if d == 0 {
        return Err(Error::domain(
            "divisor scan needs D != 0 (degenerate line has infinitely many points)",
        ));
    }
    let magnitude = d.abs();
    let mut divisors = Vec::new();
    let mut t = 1i128;
    while t * t <= magnitude {
        if magnitude % t == 0 {
            divisors.push(t);
            divisors.push(magnitude / t);
        }
        t += 1;
    }
    let shift = curve.b() - curve.a();
    let mut points = Vec::with_capacity(divisors.len() * 2);
    for t in divisors {
        for t in [t, -t] {
            let x = -curve.a() + t;
            let y = x + shift + d / t;
            points.push(IntegralPoint::new(x, y));
        }
    }
    Ok(PointSet::from_points(points))
}

/// The maximally naive enumerator: tests every x with 1 <= |x + a| <=
/// `half_width` for divisibility and emits the quotient point.
///
/// Complete whenever `half_width >= |D|` and D != 0; for D = 0 it returns the
/// window's slice of the punctured line.
pub fn window_scan_points(curve: &CurveParams, half_width: i128) -> PointSet {
    let (a, b, c) = (curve.a(), curve.b(), curve.c());
    let mut points = Vec::new();
    for s in 1..=half_width.max(0) {
        for x in [-a + s, -a - s] {
            let numerator = x * x + b * x + c;
            if numerator % (x + a) == 0 {
                points.push(IntegralPoint::new(x, numerator / (x + a)));
            }
        }
    }
    PointSet::from_points(points)
}

/// |D|: every integral point has |x + a| dividing |D|, so a window scan of
/// this half-width is guaranteed complete.
pub fn completeness_bound(curve: &CurveParams) -> Result<i128> {
    let d = fingerprint_value(curve)?;
    if d == 0 {
        return Err(Error::domain("completeness bound undefined for D = 0"));
    }
    Ok(d.abs())
}
