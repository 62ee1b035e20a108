//! Checked integer primitives: floor square root, perfect-square testing,
//! divisor enumeration and gcd.
//!
//! Everything is exact; no floating point enters any contract. Divisor
//! enumeration is trial division up to the integer square root, O(sqrt n) —
//! instant at desk scale (|D| up to ~10^12), legal but slow beyond that.

use crate::error::{Error, Result};

/// Floor of the square root: the unique r with r^2 <= n < (r+1)^2.
///
/// Integer Newton iteration seeded from the floating-point root, followed by
/// an exact correction step; f64 alone misrounds near 2^53.
pub fn isqrt(n: i128) -> Result<i128> {
    if n < 0 {
        return Err(Error::domain(format!("isqrt of negative {n}")));
    }
    if n == 0 {
        return Ok(0);
    }
    let mut r = (n as f64).sqrt() as i128;
    // Newton: r <- (r + n/r) / 2 converges to floor(sqrt n) from any
    // positive seed; stop when it no longer decreases.
    loop {
        let next = (r + n / r) / 2;
        if next >= r {
            break;
        }
        r = next;
    }
    // exact correction: the seed may leave r off by one in either direction
    while r > 0 && r > n / r {
        r -= 1;
    }
    while (r + 1) <= n / (r + 1) {
        r += 1;
    }
    debug_assert!(r * r <= n);
    Ok(r)
}

/// k with k^2 = n when n is a nonnegative perfect square; `None` otherwise
/// (every negative n gives `None`).
pub fn perfect_square(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n).expect("nonnegative");
    (r * r == n).then_some(r)
}

/// All positive divisors of n not exceeding sqrt(n), ascending. Its length
/// is the point-count parameter N.
pub fn small_divisors(n: i128) -> Result<Vec<i128>> {
    if n < 1 {
        return Err(Error::domain(format!(
            "small_divisors of {n} (need n >= 1)"
        )));
    }
    let root = isqrt(n)?;
    Ok((1..=root).filter(|d| n % d == 0).collect())
}

/// One [`crate::model::DivisorPair`] (d2, n/d2) per small divisor d2 of n,
/// ascending by d2.
pub fn divisor_pairs(n: i128) -> Result<Vec<crate::model::DivisorPair>> {
    let small = small_divisors(n)?;
    small
        .into_iter()
        .map(|d2| crate::model::DivisorPair::new(d2, n / d2))
        .collect()
}

/// Greatest common divisor, sign-insensitive; gcd(0, 0) = 0.
pub fn gcd(u: i128, v: i128) -> i128 {
    let (mut u, mut v) = (u.unsigned_abs(), v.unsigned_abs());
    while v != 0 {
        let r = u % v;
        u = v;
        v = r;
    }
    u as i128
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute-force divisor count, the oracle for the N = ceil(tau/2) law.
    fn tau_naive(n: i128) -> usize {
        (1..=n).filter(|d| n % d == 0).count()
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(0).unwrap(), 0);
        assert_eq!(isqrt(16).unwrap(), 4);
        assert_eq!(isqrt(12).unwrap(), 3);
        assert!(isqrt(-1).is_err());
    }

    #[test]
    fn isqrt_near_float_precision_edge() {
        // squares adjacent to 2^53, where f64 sqrt alone rounds wrongly
        for r in [
            (1i128 << 26) - 1,
            1 << 26,
            (1 << 26) + 1,
            94_906_265,
            94_906_266,
        ] {
            let n = r * r;
            assert_eq!(isqrt(n - 1).unwrap(), r - 1);
            assert_eq!(isqrt(n).unwrap(), r);
            assert_eq!(isqrt(n + 1).unwrap(), r);
        }
        // well beyond f64 exactness
        let r = 3_037_000_499_i128; // isqrt(i64::MAX)
        assert_eq!(isqrt(r * r + 2 * r).unwrap(), r);
        assert_eq!(isqrt(r * r).unwrap(), r);
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(perfect_square(0), Some(0));
        assert_eq!(perfect_square(49), Some(7));
        assert_eq!(perfect_square(-4), None);
        assert_eq!(perfect_square(48), None);
    }

    #[test]
    fn small_divisors_examples() {
        assert_eq!(small_divisors(1).unwrap(), vec![1]);
        assert_eq!(small_divisors(12).unwrap(), vec![1, 2, 3]);
        // |D| = p^2: exactly {1, p}
        assert_eq!(small_divisors(9).unwrap(), vec![1, 3]);
        assert!(small_divisors(0).is_err());
        assert!(small_divisors(-6).is_err());
    }

    #[test]
    fn divisor_pairs_examples() {
        let as_tuples = |n: i128| -> Vec<(i128, i128)> {
            divisor_pairs(n)
                .unwrap()
                .iter()
                .map(|p| (p.d2(), p.d1()))
                .collect()
        };
        assert_eq!(as_tuples(1), vec![(1, 1)]);
        assert_eq!(as_tuples(4), vec![(1, 4), (2, 2)]);
        assert_eq!(as_tuples(6), vec![(1, 6), (2, 3)]);
        assert!(divisor_pairs(0).is_err());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(-4, 6), 2);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(-5, -10), 5);
    }

    #[test]
    fn divisor_pairs_cover_full_divisor_set() {
        for n in 1..=500i128 {
            let pairs = divisor_pairs(n).unwrap();
            let mut all: Vec<i128> = pairs.iter().flat_map(|p| [p.d2(), p.d1()]).collect();
            all.sort_unstable();
            all.dedup();
            let brute: Vec<i128> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(all, brute, "divisor set of {n}");
            assert!(pairs.iter().all(|p| p.product() == n));
            // N = ceil(tau/2)
            assert_eq!(pairs.len(), tau_naive(n).div_ceil(2), "N law for {n}");
        }
    }

    proptest! {
        #[test]
        fn isqrt_bracket_holds(n in 0i128..=(1i128 << 100)) {
            let r = isqrt(n).unwrap();
            prop_assert!(r * r <= n);
            prop_assert!((r + 1) * (r + 1) > n);
        }

        #[test]
        fn perfect_square_iff_isqrt_squares_back(n in 0i128..=1_000_000_000_000i128) {
            let r = isqrt(n).unwrap();
            prop_assert_eq!(perfect_square(n).is_some(), r * r == n);
        }

        #[test]
        fn gcd_divides_both(u in -10_000i128..10_000, v in -10_000i128..10_000) {
            let g = gcd(u, v);
            if g == 0 {
                prop_assert!(u == 0 && v == 0);
            } else {
                prop_assert_eq!(u % g, 0);
                prop_assert_eq!(v % g, 0);
            }
        }
    }
}
