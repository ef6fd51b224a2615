//! Exact scalar, polynomial, and generating-function arithmetic.
//!
//! Everything here is arbitrary precision; nothing rounds. Floating point is
//! banned from this crate's numeric paths.

mod egf;
mod interp;
mod poly;

pub use egf::{Egf, EgfCoeff, EgfSeries, PolyEgfSeries};
pub use interp::lagrange_interpolate;
pub use poly::{falling_factorial_poly, Coeff, IntPolynomial, Poly, RatPolynomial};

use num::bigint::BigInt;
use num::traits::{One, Zero};

/// Exact rational scalar: always reduced, denominator positive.
pub type Rational = num::rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("interpolation produced non-integer coefficients")]
    NonIntegerCoefficients,
    #[error("{op} requires a series with constant term {expected}")]
    WrongConstantTerm { op: &'static str, expected: &'static str },
}

/// `C(n, k)`, zero outside `0 <= k <= n`. The polynomial extension to
/// negative `n` is deliberately not applied.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}
