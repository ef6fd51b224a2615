//! Truncated exponential generating functions.
//!
//! A series is stored in EGF normalization: `coeffs[n]` is `c_n` in
//! `sum c_n x^n / n!`, truncated at a fixed order. In this normalization the
//! derivative is a left shift and the product is a binomial convolution, so
//! exp and log reduce to division-free recurrences over any coefficient ring
//! that admits scaling by integers.

use num::bigint::BigInt;
use num::rational::BigRational;

use super::poly::{Coeff, RatPolynomial};
use super::{binomial, ExactError};

/// Coefficient ring usable inside an EGF: a [`Coeff`] ring with an integer
/// scalar action (for the binomial weights).
pub trait EgfCoeff: Coeff + std::ops::Mul<Output = Self> {
    fn scale_int(&self, k: &BigInt) -> Self;
}

impl EgfCoeff for BigRational {
    fn scale_int(&self, k: &BigInt) -> Self {
        self * BigRational::from_integer(k.clone())
    }
}

impl EgfCoeff for RatPolynomial {
    fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(k.clone()))
    }
}

/// Truncated EGF over `C`.
#[derive(Clone, PartialEq)]
pub struct Egf<C> {
    coeffs: Vec<C>,
}

/// EGF with rational coefficients.
pub type EgfSeries = Egf<BigRational>;

/// EGF whose coefficients are polynomials in a formal variable `t`.
pub type PolyEgfSeries = Egf<RatPolynomial>;

impl<C: EgfCoeff> Egf<C> {
    /// Builds from EGF-normalized coefficients `c_0 ..= c_order`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "an EGF needs at least its constant term");
        Egf { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Binomial convolution, truncated at the shorter order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = C::zero();
            for k in 0..=n {
                let w = binomial(n as i64, k as i64);
                acc = acc + (self.coeffs[k].clone() * rhs.coeffs[n - k].clone()).scale_int(&w);
            }
            out.push(acc);
        }
        Egf { coeffs: out }
    }

    /// `exp` of a series with zero constant term.
    ///
    /// Recurrence from `E' = F' E`: `e_{n+1} = sum_k C(n,k) f_{k+1} e_{n-k}`.
    pub fn exp(&self) -> Result<Self, ExactError> {
        if !self.coeffs[0].is_zero() {
            return Err(ExactError::WrongConstantTerm {
                op: "exp",
                expected: "0",
            });
        }
        let order = self.order();
        let mut e = vec![C::one()];
        for n in 0..order {
            let mut acc = C::zero();
            for k in 0..=n {
                let w = binomial(n as i64, k as i64);
                acc = acc + (self.coeffs[k + 1].clone() * e[n - k].clone()).scale_int(&w);
            }
            e.push(acc);
        }
        Ok(Egf { coeffs: e })
    }

    /// `log` of a series with constant term one.
    ///
    /// Recurrence from `F L' = F'`: `l_{n+1} = f_{n+1} - sum_{k<n} C(n,k) f_{n-k} l_{k+1}`.
    pub fn log(&self) -> Result<Self, ExactError> {
        if !self.coeffs[0].is_one() {
            return Err(ExactError::WrongConstantTerm {
                op: "log",
                expected: "1",
            });
        }
        let order = self.order();
        let mut l = vec![C::zero()];
        for n in 0..order {
            let mut acc = self.coeffs[n + 1].clone();
            for k in 0..n {
                let w = binomial(n as i64, k as i64);
                acc = acc - (self.coeffs[n - k].clone() * l[k + 1].clone()).scale_int(&w);
            }
            l.push(acc);
        }
        Ok(Egf { coeffs: l })
    }

    /// `f^e = exp(e * log f)` for a series with constant term one; the
    /// exponent is any element of the coefficient ring.
    pub fn pow(&self, e: &C) -> Result<Self, ExactError> {
        if !self.coeffs[0].is_one() {
            return Err(ExactError::WrongConstantTerm {
                op: "pow",
                expected: "1",
            });
        }
        let scaled = Egf {
            coeffs: self
                .log()?
                .coeffs
                .into_iter()
                .map(|c| c * e.clone())
                .collect(),
        };
        scaled.exp()
    }
}

impl EgfSeries {
    /// Embeds rational coefficients as constant polynomials.
    pub fn lift(&self) -> PolyEgfSeries {
        Egf {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| RatPolynomial::constant(c.clone()))
                .collect(),
        }
    }
}

impl std::fmt::Debug for EgfSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EgfSeries{:?}", self.coeffs)
    }
}

impl std::fmt::Debug for PolyEgfSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PolyEgfSeries{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn series(coeffs: &[i64]) -> EgfSeries {
        Egf::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn exp_of_x_is_all_ones() {
        // exp(x) has every EGF coefficient 1
        let e = series(&[0, 1, 0, 0, 0]).exp().unwrap();
        assert_eq!(e, series(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn log_of_one_plus_x() {
        // log(1+x) = sum (-1)^{n-1} (n-1)! x^n / n!
        let l = series(&[1, 1, 0, 0, 0]).log().unwrap();
        assert_eq!(l, series(&[0, 1, -1, 2, -6]));
    }

    #[test]
    fn exp_log_round_trip() {
        let f = series(&[0, 3, -2, 7, 5, -1]);
        assert_eq!(f.exp().unwrap().log().unwrap(), f);
        let g = series(&[1, 2, -5, 3, 0, 4]);
        assert_eq!(g.log().unwrap().exp().unwrap(), g);
    }

    #[test]
    fn mul_is_binomial_convolution() {
        // exp(x) * exp(x) = exp(2x): coefficients 2^n
        let e = series(&[1, 1, 1, 1]);
        assert_eq!(e.mul(&e), series(&[1, 2, 4, 8]));
    }

    #[test]
    fn pow_integer_exponent_matches_repeated_mul() {
        let f = series(&[1, 4, -2, 6, 1]);
        let cube = f.mul(&f).mul(&f);
        assert_eq!(f.pow(&rat(3)).unwrap(), cube);
    }

    #[test]
    fn pow_rational_exponent_square_root() {
        // (1 + x)^(1/2) squared recovers 1 + x
        let f = series(&[1, 1, 0, 0, 0, 0]);
        let half = BigRational::new(1.into(), 2.into());
        let r = f.pow(&half).unwrap();
        assert_eq!(r.mul(&r), f);
    }

    #[test]
    fn wrong_constant_terms_are_rejected() {
        assert!(series(&[1, 1]).exp().is_err());
        assert!(series(&[0, 1]).log().is_err());
        assert!(series(&[2, 1]).pow(&rat(2)).is_err());
    }

    #[test]
    fn poly_coefficients_exp_log_round_trip() {
        // f = t*x + (t^2-1) x^2/2! as a polynomial-coefficient EGF
        let t = RatPolynomial::from_coeffs(vec![rat(0), rat(1)]);
        let t2m1 = RatPolynomial::from_coeffs(vec![rat(-1), rat(0), rat(1)]);
        let f: PolyEgfSeries =
            Egf::from_coeffs(vec![RatPolynomial::zero(), t, t2m1, RatPolynomial::zero()]);
        assert_eq!(f.exp().unwrap().log().unwrap(), f);
    }
}
