//! Exact enumeration, classification and plotting of the integral points on
//! rational curves y = (x^2 + bx + c)/(x + a) with integer a, b, c.
//!
//! The quantity D = a^2 - ab + c decides everything: D = 0 degenerates the
//! curve to a punctured line with infinitely many lattice points, and for
//! D != 0 the points biject with the integer divisors of D, giving exactly
//! 4N of them (4N - 2 when |D| is a perfect square), N being the number of
//! divisors of |D| not exceeding sqrt(|D|).
//!
//! All arithmetic is checked 128-bit integer arithmetic; floating point only
//! appears in SVG output and numeric spot-checks. Two deliberately naive
//! brute-force enumerators ([`oracle`]) cross-check the divisor-pair engine
//! ([`enumerate`]) everywhere.

pub mod arith;
pub mod batch;
pub mod cli;
pub mod encode;
pub mod enumerate;
pub mod error;
pub mod model;
pub mod oracle;
pub mod square_case;
pub mod svg;
pub mod trinomial;

pub use error::{Error, Result};
