//! Integer-root certificates for quadratic trinomials g(x) = ax^2 + bx + c.
//!
//! g has two rational roots exactly when the discriminant is a perfect
//! square, and two *integer* roots exactly when additionally a | b and
//! a | c. The roots are then (-b ± k)/(2a) with k^2 the discriminant. For
//! |a| = 1 the divisibility conditions are vacuous and a single squareness
//! test decides.

use crate::arith;
use crate::error::{Error, Result};

/// A quadratic trinomial with integer coefficients and nonzero leading term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Trinomial {
    a: i128,
    b: i128,
    c: i128,
}

impl Trinomial {
    pub fn new(a: i128, b: i128, c: i128) -> Result<Self> {
        if a == 0 {
            return Err(Error::domain(
                "trinomial requires a nonzero leading coefficient",
            ));
        }
        Ok(Trinomial { a, b, c })
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

    /// Exact evaluation a*x^2 + b*x + c.
    pub fn eval(&self, x: i128) -> Option<i128> {
        self.a
            .checked_mul(x)?
            .checked_add(self.b)?
            .checked_mul(x)?
            .checked_add(self.c)
    }
}

/// Nature of the two roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootNature {
    /// Discriminant is a nonnegative perfect square.
    TwoRational,
    /// Discriminant positive or zero but not a perfect square.
    TwoIrrational,
    /// Discriminant negative.
    ComplexPair,
}

/// b^2 - 4ac, exactly.
pub fn discriminant(g: &Trinomial) -> Result<i128> {
    g.b()
        .checked_mul(g.b())
        .and_then(|b2| {
            4i128
                .checked_mul(g.a())
                .and_then(|fa| fa.checked_mul(g.c()))
                .and_then(|fac| b2.checked_sub(fac))
        })
        .ok_or(Error::Overflow("discriminant b^2 - 4ac"))
}

/// Rational / irrational / complex, decided by the discriminant alone.
pub fn classify_roots(g: &Trinomial) -> Result<RootNature> {
    let t = discriminant(g)?;
    Ok(if t < 0 {
        RootNature::ComplexPair
    } else if arith::perfect_square(t).is_some() {
        RootNature::TwoRational
    } else {
        RootNature::TwoIrrational
    })
}

/// The two integer roots (ascending, equal allowed), present exactly when
/// the discriminant is a perfect square k^2 AND a divides both b and c.
pub fn integer_roots(g: &Trinomial) -> Result<Option<(i128, i128)>> {
    let t = discriminant(g)?;
    let Some(k) = arith::perfect_square(t) else {
        return Ok(None);
    };
    if g.b() % g.a() != 0 || g.c() % g.a() != 0 {
        return Ok(None);
    }
    Ok(Some(roots_from_sqrt(g, k)))
}

/// The |a| = 1 shortcut: a = 1 tests b^2 - 4c for squareness, a = -1 tests
/// b^2 + 4c. Result identical to [`integer_roots`].
pub fn unit_leading_shortcut(g: &Trinomial) -> Result<Option<(i128, i128)>> {
    if g.a().abs() != 1 {
        return Err(Error::domain(format!(
            "shortcut requires a leading coefficient of +-1, got {}",
            g.a()
        )));
    }
    let four_c = 4i128
        .checked_mul(g.c())
        .ok_or(Error::Overflow("shortcut 4c"))?;
    let t = g
        .b()
        .checked_mul(g.b())
        .and_then(|b2| {
            if g.a() == 1 {
                b2.checked_sub(four_c)
            } else {
                b2.checked_add(four_c)
            }
        })
        .ok_or(Error::Overflow("shortcut b^2 -+ 4c"))?;
    Ok(arith::perfect_square(t).map(|k| roots_from_sqrt(g, k)))
}

fn roots_from_sqrt(g: &Trinomial, k: i128) -> (i128, i128) {
    let r1 = (-g.b() + k) / (2 * g.a());
    let r2 = (-g.b() - k) / (2 * g.a());
    debug_assert_eq!(g.eval(r1), Some(0), "root {r1} does not vanish");
    debug_assert_eq!(g.eval(r2), Some(0), "root {r2} does not vanish");
    (r1.min(r2), r1.max(r2))
}
