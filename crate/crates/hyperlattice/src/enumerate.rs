//! The divisor-pair engine: fingerprinting, classification, point
//! generation and count prediction for y = (x^2 + bx + c)/(x + a).
//!
//! The whole theory hangs on D = a^2 - ab + c, the remainder of dividing the
//! numerator by x + a:
//!
//! ```text
//! x^2 + bx + c = (x + a)(x + b - a) + D
//! ```
//!
//! D = 0 collapses the curve to the punctured line y = x + (b - a). For
//! D != 0, an integer x gives an integer y exactly when (x + a) | D, so the
//! points correspond to divisor pairs d1 * d2 = |D| and every y-value follows
//! from the identity y = x + (b - a) + D/(x + a). Point formulas here are
//! always derived from that identity, never transcribed, which keeps the
//! membership postcondition true by construction.

use crate::arith;
use crate::error::{Error, Result};
use crate::model::{
    CountPrediction, CurveClass, CurveParams, DivisorPair, Fingerprint, IntegralPoint,
    ParametricLine, PointSet, SpecialForm, SpecialFormKind,
};

/// Computes D = a^2 - ab + c with magnitude and perfect-square data.
pub fn fingerprint(curve: &CurveParams) -> Result<Fingerprint> {
    let (a, b, c) = (curve.a(), curve.b(), curve.c());
    let value = a
        .checked_mul(a)
        .and_then(|a2| a.checked_mul(b).and_then(|ab| a2.checked_sub(ab)))
        .and_then(|s| s.checked_add(c))
        .ok_or(Error::Overflow("fingerprint a^2 - ab + c"))?;
    let magnitude = value.abs();
    let sqrt_magnitude = arith::perfect_square(magnitude);
    Ok(Fingerprint {
        value,
        magnitude,
        is_square: sqrt_magnitude.is_some(),
        sqrt_magnitude,
    })
}

/// Degenerate line when D = 0, hyperbola (with sign and squareness) otherwise.
pub fn classify(curve: &CurveParams) -> Result<CurveClass> {
    let fp = fingerprint(curve)?;
    Ok(match fp.sign() {
        None => CurveClass::DegenerateLine,
        Some(sign) => CurveClass::Hyperbola {
            sign,
            is_square: fp.is_square,
        },
    })
}

/// The infinite family { (t, t + b - a) : t != -a } of the D = 0 case.
pub fn degenerate_family(curve: &CurveParams) -> Result<ParametricLine> {
    let fp = fingerprint(curve)?;
    if !fp.is_zero() {
        return Err(Error::domain(format!(
            "curve has D = {} != 0; not a degenerate line",
            fp.value
        )));
    }
    Ok(ParametricLine {
        intercept_shift: curve.b() - curve.a(),
        excluded_x: curve.pole(),
    })
}

/// The four points a divisor pair generates (two when d1 = d2).
///
/// The x-values are -a ± d1 and -a ± d2; each y comes from
/// y = x + (b - a) + D/(x + a). For D > 0 that works out to
///
/// ```text
/// (-a + d1, b - 2a + (d1 + d2))   (-a + d2, b - 2a + (d1 + d2))
/// (-a - d2, b - 2a - (d1 + d2))   (-a - d1, b - 2a - (d1 + d2))
/// ```
///
/// and for D < 0 to
///
/// ```text
/// (-a + d1, b - 2a + (d1 - d2))   (-a - d2, b - 2a + (d1 - d2))
/// (-a + d2, b - 2a - (d1 - d2))   (-a - d1, b - 2a - (d1 - d2))
/// ```
pub fn points_for_pair(curve: &CurveParams, pair: &DivisorPair) -> Result<Vec<IntegralPoint>> {
    let fp = fingerprint(curve)?;
    if fp.is_zero() {
        return Err(Error::domain("divisor pairs only apply when D != 0"));
    }
    if pair.product() != fp.magnitude {
        return Err(Error::domain(format!(
            "pair ({}, {}) has product {}, but |D| = {}",
            pair.d2(),
            pair.d1(),
            pair.product(),
            fp.magnitude
        )));
    }
    let shift = curve.b() - curve.a();
    let mut points = Vec::with_capacity(4);
    for t in [pair.d1(), pair.d2(), -pair.d2(), -pair.d1()] {
        let x = -curve.a() + t;
        let y = x + shift + fp.value / t;
        let p = IntegralPoint::new(x, y);
        if !points.contains(&p) {
            points.push(p);
        }
        debug_assert!(curve.contains(p), "generated point {p} violates membership");
    }
    Ok(points)
}

/// All integral points of a non-degenerate curve: the union over every
/// divisor pair of |D|, sorted and deduplicated.
pub fn enumerate_points(curve: &CurveParams) -> Result<PointSet> {
    let fp = fingerprint(curve)?;
    if fp.is_zero() {
        return Err(Error::domain(
            "degenerate line has infinitely many points; use degenerate_family",
        ));
    }
    let mut points = Vec::new();
    for pair in arith::divisor_pairs(fp.magnitude)? {
        points.extend(points_for_pair(curve, &pair)?);
    }
    Ok(PointSet::from_points(points))
}

/// Infinite for D = 0; otherwise 4N, dropping to 4N - 2 when |D| is a
/// perfect square (the pair d1 = d2 contributes two points, not four).
pub fn predicted_count(curve: &CurveParams) -> Result<CountPrediction> {
    let fp = fingerprint(curve)?;
    if fp.is_zero() {
        return Ok(CountPrediction::Infinite);
    }
    let n = arith::small_divisors(fp.magnitude)?.len() as u64;
    let total = 4 * n - if fp.is_square { 2 } else { 0 };
    Ok(CountPrediction::Finite {
        n_small_divisors: n,
        total,
    })
}

/// Deterministic primality by trial division. Only called on |D|-scale
/// inputs, where the O(sqrt n) scan is instant.
fn is_prime(n: i128) -> bool {
    if n < 2 {
        return false;
    }
    let mut t = 2i128;
    while t * t <= n {
        if n % t == 0 {
            return false;
        }
        t += 1;
    }
    true
}

/// Detects |D| of the shapes 1, p, p^2 or p1*p2 (distinct primes) and the
/// exact point count each forces: 2, 4, 6 or 8 respectively, whatever the
/// sign of D.
pub fn special_form(curve: &CurveParams) -> Result<Option<SpecialForm>> {
    let fp = fingerprint(curve)?;
    let Some(sign_of_d) = fp.sign() else {
        return Err(Error::domain("special forms apply only when D != 0"));
    };
    let n = fp.magnitude;
    let kind = if n == 1 {
        Some(SpecialFormKind::Unit)
    } else {
        // smallest nontrivial divisor; prime whenever it exists
        let mut factor = None;
        let mut t = 2i128;
        while t * t <= n {
            if n % t == 0 {
                factor = Some(t);
                break;
            }
            t += 1;
        }
        match factor {
            None => Some(SpecialFormKind::Prime { p: n }),
            Some(p) => {
                let q = n / p;
                if q == p {
                    Some(SpecialFormKind::PrimeSquare { p })
                } else if is_prime(q) {
                    Some(SpecialFormKind::SemiPrime { p1: p, p2: q })
                } else {
                    None
                }
            }
        }
    };
    Ok(kind.map(|kind| SpecialForm {
        kind,
        sign_of_d,
        expected_count: match kind {
            SpecialFormKind::Unit => 2,
            SpecialFormKind::Prime { .. } => 4,
            SpecialFormKind::PrimeSquare { .. } => 6,
            SpecialFormKind::SemiPrime { .. } => 8,
        },
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Sign;
    use crate::oracle;
    use proptest::prelude::*;

    fn curve(a: i128, b: i128, c: i128) -> CurveParams {
        CurveParams::new(a, b, c).unwrap()
    }

    fn pts(raw: &[(i128, i128)]) -> PointSet {
        raw.iter().map(|&(x, y)| IntegralPoint::new(x, y)).collect()
    }

    #[test]
    fn fingerprint_examples() {
        let fp = fingerprint(&curve(1, 2, 1)).unwrap();
        assert_eq!(fp.value, 0);
        assert!(fp.is_zero());

        let fp = fingerprint(&curve(0, 0, 1)).unwrap();
        assert_eq!(
            (fp.value, fp.is_square, fp.sqrt_magnitude),
            (1, true, Some(1))
        );

        let fp = fingerprint(&curve(2, 1, 10)).unwrap();
        assert_eq!((fp.value, fp.magnitude, fp.is_square), (12, 12, false));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&curve(1, 2, 1)).unwrap(),
            CurveClass::DegenerateLine
        );
        assert_eq!(
            classify(&curve(0, 0, -4)).unwrap(),
            CurveClass::Hyperbola {
                sign: Sign::Negative,
                is_square: true
            }
        );
        assert_eq!(
            classify(&curve(2, 1, 10)).unwrap(),
            CurveClass::Hyperbola {
                sign: Sign::Positive,
                is_square: false
            }
        );
    }

    #[test]
    fn degenerate_family_examples() {
        let fam = degenerate_family(&curve(1, 2, 1)).unwrap();
        assert_eq!((fam.intercept_shift, fam.excluded_x), (1, -1));
        let fam = degenerate_family(&curve(0, 0, 0)).unwrap();
        assert_eq!((fam.intercept_shift, fam.excluded_x), (0, 0));
        // D = 4 - 6 - 2 = -4
        assert!(degenerate_family(&curve(2, 3, -2)).is_err());
    }

    #[test]
    fn points_for_pair_examples() {
        let cv = curve(0, 0, -4);
        let four = points_for_pair(&cv, &DivisorPair::new(1, 4).unwrap()).unwrap();
        assert_eq!(
            PointSet::from_points(four),
            pts(&[(4, 3), (-1, 3), (1, -3), (-4, -3)])
        );
        let two = points_for_pair(&cv, &DivisorPair::new(2, 2).unwrap()).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(PointSet::from_points(two), pts(&[(2, 0), (-2, 0)]));

        let cv = curve(0, 0, 4);
        let four = points_for_pair(&cv, &DivisorPair::new(1, 4).unwrap()).unwrap();
        assert_eq!(
            PointSet::from_points(four),
            pts(&[(1, 5), (4, 5), (-1, -5), (-4, -5)])
        );

        // pair inconsistent with |D|
        assert!(points_for_pair(&cv, &DivisorPair::new(2, 3).unwrap()).is_err());
        // degenerate curve
        assert!(points_for_pair(&curve(1, 2, 1), &DivisorPair::new(1, 1).unwrap()).is_err());
    }

    #[test]
    fn enumerate_points_examples() {
        assert_eq!(
            enumerate_points(&curve(0, 0, -4)).unwrap(),
            pts(&[(-4, -3), (-2, 0), (-1, 3), (1, -3), (2, 0), (4, 3)])
        );
        assert_eq!(
            enumerate_points(&curve(1, 3, 1)).unwrap(),
            pts(&[(-2, 1), (0, 1)])
        );
        assert_eq!(
            enumerate_points(&curve(0, 0, -3)).unwrap(),
            pts(&[(-3, -2), (-1, 2), (1, -2), (3, 2)])
        );
        assert!(enumerate_points(&curve(1, 2, 1)).is_err());
    }

    #[test]
    fn predicted_count_examples() {
        assert_eq!(
            predicted_count(&curve(1, 3, 1)).unwrap(),
            CountPrediction::Finite {
                n_small_divisors: 1,
                total: 2
            }
        );
        assert_eq!(
            predicted_count(&curve(0, 0, -4)).unwrap(),
            CountPrediction::Finite {
                n_small_divisors: 2,
                total: 6
            }
        );
        assert_eq!(
            predicted_count(&curve(2, 1, 10)).unwrap(),
            CountPrediction::Finite {
                n_small_divisors: 3,
                total: 12
            }
        );
        assert_eq!(
            predicted_count(&curve(1, 2, 1)).unwrap(),
            CountPrediction::Infinite
        );
    }

    #[test]
    fn special_form_examples() {
        let sf = special_form(&curve(1, 3, 1)).unwrap().unwrap();
        assert_eq!(sf.kind, SpecialFormKind::Unit);
        assert_eq!(sf.sign_of_d, Sign::Negative);
        assert_eq!(sf.expected_count, 2);

        let sf = special_form(&curve(0, 0, -4)).unwrap().unwrap();
        assert_eq!(sf.kind, SpecialFormKind::PrimeSquare { p: 2 });
        assert_eq!(sf.expected_count, 6);

        let sf = special_form(&curve(0, 0, 6)).unwrap().unwrap();
        assert_eq!(sf.kind, SpecialFormKind::SemiPrime { p1: 2, p2: 3 });
        assert_eq!(sf.sign_of_d, Sign::Positive);
        assert_eq!(sf.expected_count, 8);

        // |D| = 8 = 2^3 is none of the special shapes
        assert_eq!(special_form(&curve(0, 0, 8)).unwrap(), None);
        // |D| = 12 = 2^2 * 3 neither
        assert_eq!(special_form(&curve(2, 1, 10)).unwrap(), None);
        assert!(special_form(&curve(1, 2, 1)).is_err());
    }

    #[test]
    fn special_form_count_matches_count_law() {
        for (a, b, c) in [
            (1, 3, 1),
            (0, 0, -4),
            (0, 0, 6),
            (0, 0, 1),
            (0, 0, -3),
            (0, 0, 9),
        ] {
            let cv = curve(a, b, c);
            let sf = special_form(&cv).unwrap().unwrap();
            let CountPrediction::Finite { total, .. } = predicted_count(&cv).unwrap() else {
                panic!("finite expected");
            };
            assert_eq!(sf.expected_count, total, "({a},{b},{c})");
            assert_eq!(enumerate_points(&cv).unwrap().len() as u64, total);
        }
    }

    /// For D > 0 it is tempting to attach the negative ordinate
    /// b - 2a - (d1 + d2) to the x-value -a + d2; the identity
    /// y = x + (b - a) + D/(x + a) says otherwise. With d1 = d2 = 1 on
    /// (0,0,1) the swapped pairing gives (1, -2) and (-1, 2), both off the
    /// curve, while the derived points (1, 2) and (-1, -2) lie on it.
    #[test]
    fn swapped_y_pairing_fails_membership() {
        let cv = curve(0, 0, 1);
        assert!(!cv.contains(IntegralPoint::new(1, -2)));
        assert!(!cv.contains(IntegralPoint::new(-1, 2)));
        assert!(cv.contains(IntegralPoint::new(1, 2)));
        assert!(cv.contains(IntegralPoint::new(-1, -2)));
        assert_eq!(enumerate_points(&cv).unwrap(), pts(&[(-1, -2), (1, 2)]));
    }

    #[test]
    fn central_symmetry_through_hyperbola_center() {
        // (x, y) -> (-2a - x, 2(b - 2a) - y) must map the point set to itself
        for (a, b, c) in [(0i128, 0i128, -4i128), (2, 1, 10), (1, 3, 1), (-3, 5, 17)] {
            let cv = curve(a, b, c);
            let set = enumerate_points(&cv).unwrap();
            for &p in set.points() {
                let mirrored = IntegralPoint::new(-2 * a - p.x, 2 * (b - 2 * a) - p.y);
                assert!(
                    set.contains(mirrored),
                    "mirror of {p} missing on ({a},{b},{c})"
                );
            }
        }
    }

    #[test]
    fn x_coordinates_are_pole_plus_minus_divisors() {
        let cv = curve(2, 1, 10);
        let fp = fingerprint(&cv).unwrap();
        let set = enumerate_points(&cv).unwrap();
        let mut expected: Vec<i128> = (1..=fp.magnitude)
            .filter(|d| fp.magnitude % d == 0)
            .flat_map(|d| [-cv.a() + d, -cv.a() - d])
            .collect();
        expected.sort_unstable();
        expected.dedup();
        let mut actual: Vec<i128> = set.iter().map(|p| p.x).collect();
        actual.sort_unstable();
        actual.dedup();
        assert_eq!(actual, expected);
    }

    proptest! {
        // Membership, count law and oracle agreement on random small curves.
        #[test]
        fn agrees_with_both_oracles(a in -40i128..=40, b in -40i128..=40, c in -40i128..=40) {
            let cv = curve(a, b, c);
            let fp = fingerprint(&cv).unwrap();
            prop_assume!(!fp.is_zero());

            let set = enumerate_points(&cv).unwrap();
            for &p in set.points() {
                prop_assert!(cv.contains(p));
            }

            let CountPrediction::Finite { total, .. } = predicted_count(&cv).unwrap() else {
                unreachable!()
            };
            prop_assert_eq!(set.len() as u64, total);

            prop_assert_eq!(&set, &oracle::divisor_scan_points(&cv).unwrap());
            let bound = oracle::completeness_bound(&cv).unwrap();
            prop_assert_eq!(&set, &oracle::window_scan_points(&cv, bound));
        }
    }
}
