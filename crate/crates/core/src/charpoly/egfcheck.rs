//! Exponential-generating-function identities over interpolated chi data.
//!
//! The series sum chi_n(t) x^n/n! of a family is grouplike: its formal log
//! has coefficients f_n(t) of degree at most 1, and those linear and constant
//! parts are the whole story for disjoint-union counting. At t = k the EGF in
//! chi becomes the ordinary generating function of independent-set counts, so
//! the log coefficients add across union parts; a zero constant part is
//! exactly what makes the sum depend on the parts only through their total.

use num::bigint::BigInt;
use num::One;

use crate::arrangement::{zaslavsky_regions, ArrangementFamily};
use crate::exactmath::{EgfSeries, IntPolynomial, PolyEgfSeries, RatPolynomial, Rational};
use crate::finitefield::PrimeSampler;

use super::{interpolate_charpoly, CharPolyError, DEFAULT_PRIME_FLOOR};

/// The log coefficients of a family's chi series, each degree <= 1 in t from
/// index 2 on. `linear_part(n)` and `constant_part(n)` split f_n(t); their
/// values at stake: the union count over parts k_1..k_s has log coefficients
/// `linear_part(n) * total + s * constant_part(n)` at the relevant argument.
#[derive(Debug, Clone)]
pub struct EgfCoefficients {
    pub family: ArrangementFamily,
    /// Log coefficients f_0..f_N with f_0 = 0.
    pub f: Vec<RatPolynomial>,
}

impl EgfCoefficients {
    pub fn order(&self) -> usize {
        self.f.len() - 1
    }

    /// Coefficient of t in f_n, n >= 1.
    pub fn linear_part(&self, n: usize) -> Rational {
        self.f[n].coeff(1)
    }

    /// Constant term of f_n, n >= 1. Identically zero across n exactly when
    /// union counts depend on the parts only through their total.
    pub fn constant_part(&self, n: usize) -> Rational {
        self.f[n].coeff(0)
    }
}

/// chi_0..chi_N for the family, each interpolated independently.
fn chi_sequence(
    family: &ArrangementFamily,
    n_max: usize,
) -> Result<Vec<IntPolynomial>, CharPolyError> {
    (0..=n_max)
        .map(|n| {
            interpolate_charpoly(family, n, PrimeSampler::starting_above(DEFAULT_PRIME_FLOOR))
                .map(|r| r.poly)
        })
        .collect()
}

/// Every log coefficient from index 2 on must be linear or lower.
fn assert_linear_tail(f: &[RatPolynomial]) -> Result<(), CharPolyError> {
    for (n, poly) in f.iter().enumerate().skip(2) {
        if poly.degree() > Some(1) {
            return Err(CharPolyError::ShapeViolation(format!(
                "log coefficient {} has degree {:?}, expected at most 1",
                n,
                poly.degree()
            )));
        }
    }
    Ok(())
}

/// Interpolates chi_0..chi_N, takes the log of the chi series, and checks the
/// degree shape before handing back the coefficients.
pub fn extract_egf_coefficients(
    family: &ArrangementFamily,
    n_max: usize,
) -> Result<EgfCoefficients, CharPolyError> {
    let chis = chi_sequence(family, n_max)?;
    let series = PolyEgfSeries::from_coeffs(chis.iter().map(|p| p.to_rational()).collect());
    let log = series.log()?;
    assert_linear_tail(log.coeffs())?;
    Ok(EgfCoefficients {
        family: family.clone(),
        f: log.coeffs().to_vec(),
    })
}

/// Checks, to order N, that the chi series of the ratio family equals the
/// alternating region series raised to the polynomial exponent -(t - 1)/2.
/// Both sides come from the same interpolated chi data through independent
/// code paths: the left is the series itself, the right rebuilds it from
/// nothing but region counts.
pub fn theorem22_check(a: &[i64], n_max: usize) -> Result<bool, CharPolyError> {
    let family = ArrangementFamily::Eq1 { a: a.to_vec() };
    let chis = chi_sequence(&family, n_max)?;
    let lhs = PolyEgfSeries::from_coeffs(chis.iter().map(|p| p.to_rational()).collect());

    let alternating: Vec<Rational> = chis
        .iter()
        .enumerate()
        .map(|(n, chi)| {
            let regions = zaslavsky_regions(chi, n);
            let signed = if n % 2 == 1 { -regions } else { regions };
            Rational::from(signed)
        })
        .collect();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let exponent = RatPolynomial::from_coeffs(vec![half.clone(), -half]);
    let rhs = EgfSeries::from_coeffs(alternating).lift().pow(&exponent)?;

    Ok(lhs.coeffs() == rhs.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::factorial;
    use num::Zero;

    fn rat(n: i64) -> Rational {
        Rational::from(BigInt::from(n))
    }

    #[test]
    fn log_of_no_zero_planes_family_hits_shifted_factorials() {
        // f_n(1) = (-1)^{n-1} (n-1)! once the coordinate planes are dropped.
        let family = ArrangementFamily::Eq1MinusZero { a: vec![2] };
        let coeffs = extract_egf_coefficients(&family, 3).unwrap();
        for n in 1..=3usize {
            let expect = Rational::from(BigInt::from(factorial(n as u64 - 1)));
            let expect = if n % 2 == 0 { -expect } else { expect };
            assert_eq!(coeffs.f[n].eval(&Rational::one()), expect);
        }
    }

    #[test]
    fn log_of_full_family_vanishes_at_one() {
        // With the coordinate planes present every f_n is a multiple of t - 1.
        let family = ArrangementFamily::Eq1 { a: vec![2] };
        let coeffs = extract_egf_coefficients(&family, 3).unwrap();
        for n in 1..=3usize {
            assert_eq!(coeffs.f[n].eval(&Rational::one()), Rational::zero());
        }
        let linear: Vec<Rational> = (1..=3).map(|n| coeffs.linear_part(n)).collect();
        assert_eq!(linear, vec![rat(1), rat(-3), rat(20)]);
    }

    #[test]
    fn both_family_flavors_share_linear_parts() {
        let with = extract_egf_coefficients(&ArrangementFamily::Eq1 { a: vec![2] }, 3).unwrap();
        let without =
            extract_egf_coefficients(&ArrangementFamily::Eq1MinusZero { a: vec![2] }, 3).unwrap();
        for n in 1..=3usize {
            assert_eq!(with.linear_part(n), without.linear_part(n));
        }
    }

    #[test]
    fn circulant_family_has_zero_constant_parts() {
        let family = ArrangementFamily::Difference { a: vec![1] };
        let coeffs = extract_egf_coefficients(&family, 3).unwrap();
        for n in 1..=3usize {
            assert_eq!(coeffs.constant_part(n), Rational::zero());
        }
    }

    #[test]
    fn coefficients_are_ratio_value_invariant() {
        let two = extract_egf_coefficients(&ArrangementFamily::Eq1 { a: vec![2] }, 3).unwrap();
        let three = extract_egf_coefficients(&ArrangementFamily::Eq1 { a: vec![3] }, 3).unwrap();
        assert_eq!(two.f, three.f);
    }

    #[test]
    fn linear_tail_guard_fires_on_quadratic_coefficient() {
        let quadratic =
            RatPolynomial::from_coeffs(vec![Rational::zero(), Rational::zero(), Rational::one()]);
        let f = vec![RatPolynomial::zero(), RatPolynomial::zero(), quadratic];
        let err = assert_linear_tail(&f).unwrap_err();
        assert!(matches!(err, CharPolyError::ShapeViolation(_)));
    }

    #[test]
    fn power_identity_holds_to_order_three() {
        assert!(theorem22_check(&[2], 3).unwrap());
    }

    #[test]
    fn power_identity_holds_for_pairs() {
        assert!(theorem22_check(&[2, 3], 2).unwrap());
    }

    #[test]
    fn power_identity_trivial_order() {
        assert!(theorem22_check(&[2], 0).unwrap());
    }

    #[test]
    fn scalar_power_matches_series_at_fixed_argument() {
        // At t = 3 the exponent -(t - 1)/2 is the scalar -1, and the region
        // series inverts to the chi(3) series.
        let chis = chi_sequence(&ArrangementFamily::Eq1 { a: vec![2] }, 3).unwrap();
        let alternating: Vec<Rational> = chis
            .iter()
            .enumerate()
            .map(|(n, chi)| {
                let r = zaslavsky_regions(chi, n);
                Rational::from(if n % 2 == 1 { -r } else { r })
            })
            .collect();
        assert_eq!(
            alternating,
            vec![rat(1), rat(-2), rat(10), rat(-84)]
        );
        let powed = EgfSeries::from_coeffs(alternating).pow(&rat(-1)).unwrap();
        let at_three: Vec<Rational> = chis
            .iter()
            .map(|chi| Rational::from(chi.eval_i64(3)))
            .collect();
        assert_eq!(powed.coeffs(), &at_three[..]);
    }
}
