//! Exact Lagrange interpolation over the rationals.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Zero;

use super::poly::{IntPolynomial, Poly, RatPolynomial};
use super::ExactError;

/// Interpolates the unique degree `< samples.len()` polynomial through the
/// given `(x, y)` points, then demotes it to integer coefficients.
///
/// All arithmetic is exact rational; a non-integer coefficient means the data
/// did not come from an integer polynomial and is reported as an error rather
/// than rounded. Sample x-values must be pairwise distinct.
pub fn lagrange_interpolate(samples: &[(BigInt, BigInt)]) -> Result<IntPolynomial, ExactError> {
    for (i, (xi, _)) in samples.iter().enumerate() {
        for (xj, _) in &samples[..i] {
            assert!(xi != xj, "duplicate interpolation node {}", xi);
        }
    }
    let mut acc = RatPolynomial::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut numer = RatPolynomial::one();
        let mut denom = BigRational::from_integer(1.into());
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            let root = BigRational::from_integer(-xj.clone());
            numer = &numer * &Poly::from_coeffs(vec![root, BigRational::from_integer(1.into())]);
            denom *= BigRational::from_integer(xi - xj);
        }
        let weight = BigRational::from_integer(yi.clone()) / denom;
        acc = &acc + &numer.scale(&weight);
    }
    acc.to_int_polynomial()
        .ok_or(ExactError::NonIntegerCoefficients)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        raw.iter()
            .map(|&(x, y)| (BigInt::from(x), BigInt::from(y)))
            .collect()
    }

    #[test]
    fn recovers_quadratic() {
        // t^2 - 7t + 6 through three of its values
        let p = lagrange_interpolate(&pts(&[(7, 6), (11, 50), (13, 84)])).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[6, -7, 1]));
    }

    #[test]
    fn constant_through_one_point() {
        let p = lagrange_interpolate(&pts(&[(5, 1)])).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[1]));
    }

    #[test]
    fn non_integer_fit_is_an_error() {
        // (0,0), (2,1) forces slope 1/2
        assert!(matches!(
            lagrange_interpolate(&pts(&[(0, 0), (2, 1)])),
            Err(ExactError::NonIntegerCoefficients)
        ));
    }

    #[test]
    #[should_panic(expected = "duplicate interpolation node")]
    fn duplicate_nodes_panic() {
        let _ = lagrange_interpolate(&pts(&[(3, 1), (3, 2)]));
    }
}
