//! Characteristic polynomials by finite-field sampling and exact interpolation.
//!
//! For a rational arrangement family, chi(q) at a prime q is the number of
//! points of F_q^n lying off every hyperplane. For the families here that
//! count is n! times the number of n-element independent sets of a graph the
//! arrangement induces on the residues, so evaluation reduces to
//! [`crate::graphcount`] enumeration; the one family without that symmetry is
//! counted pointwise instead. Interpolating n+1 prime samples recovers the
//! polynomial, and a further out-of-sample prime guards against small primes
//! collapsing the intersection pattern: any mismatch doubles the prime floor
//! and retries, so no "large enough" threshold is ever guessed up front.

pub mod egfcheck;
pub mod verify;

use num::bigint::BigInt;
use num::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::arrangement::{ArrangementError, ArrangementFamily};
use crate::exactmath::{
    binomial, factorial, falling_factorial_poly, lagrange_interpolate, ExactError, IntPolynomial,
};
use crate::finitefield::{count_offpoints_with_budget, is_prime, FiniteFieldError, PrimeSampler};
use crate::graphcount::{
    build_F, build_F_affine, build_G, build_G_ratio, independence_counts_with_budget, GraphError,
};

/// Starting point for prime sampling when the caller has no better guess.
pub const DEFAULT_PRIME_FLOOR: u64 = 100;

/// How many times the prime floor doubles before interpolation gives up.
pub const MAX_FLOOR_DOUBLINGS: u32 = 8;

#[derive(Debug, Error)]
pub enum CharPolyError {
    /// No sample window up to `last_floor` produced a validated polynomial.
    #[error("no stable interpolation after {retries} floor doublings (last floor {last_floor})")]
    ThresholdNotFound { retries: u32, last_floor: u64 },
    /// A series coefficient violated the degree shape the identity requires.
    #[error("{0}")]
    ShapeViolation(String),
    #[error("{0:?} is not a multiplicatively independent set")]
    NotMultIndependent(Vec<i64>),
    /// Union parts in the multiplicative modes must have `k + 1` prime.
    #[error("part size {k}: k + 1 = {} is not prime", k + 1)]
    NonPrimePart { k: i64 },
    /// Union parts in the circulant modes must exceed the degeneracy bound.
    #[error("part size {k} is not above the degeneracy bound {bound}")]
    PartBelowBound { k: i64, bound: i64 },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    FiniteField(#[from] FiniteFieldError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// An interpolated characteristic polynomial together with the evidence it
/// was built from: the interpolation nodes and the extra prime the polynomial
/// was validated against. `poly` is monic of degree `n` and reproduces every
/// sample exactly.
#[derive(Debug, Clone)]
pub struct CharPolyResult {
    pub family: ArrangementFamily,
    pub n: usize,
    pub poly: IntPolynomial,
    /// Interpolation nodes as `(q, chi(q))`.
    pub samples: Vec<(u64, BigInt)>,
    pub validation_prime: u64,
}

/// `n! * s_n` of the graph, the off-point count the graph encodes.
fn graph_chi(
    g: &crate::graphcount::Graph,
    n: usize,
    node_budget: u64,
) -> Result<BigInt, CharPolyError> {
    let counts = independence_counts_with_budget(g, n, node_budget)?;
    Ok(factorial(n as u64) * &counts.counts()[n])
}

/// chi(q) for the family in dimension `n`, evaluated by counting. Graph-backed
/// families report `n!` times an independent-set count; the one-sided family
/// is counted pointwise because its off-points are not permutation-closed.
pub fn eval_chi_at_prime(
    family: &ArrangementFamily,
    n: usize,
    q: u64,
) -> Result<BigInt, CharPolyError> {
    eval_chi_at_prime_with_budget(family, n, q, u64::MAX)
}

pub fn eval_chi_at_prime_with_budget(
    family: &ArrangementFamily,
    n: usize,
    q: u64,
    node_budget: u64,
) -> Result<BigInt, CharPolyError> {
    if !is_prime(q) {
        return Err(FiniteFieldError::NotPrime(q).into());
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    match family {
        // Off-points are tuples with distinct coordinates: q falling n.
        ArrangementFamily::Braid => Ok(factorial(n as u64) * binomial(q as i64, n as i64)),
        ArrangementFamily::Eq1 { a } => graph_chi(&build_G(a, q - 1)?, n, node_budget),
        // Dropping x_i = 0 readmits the residue 0, an isolated vertex, so
        // s_n picks up the sets that use it: s_n(G) + s_{n-1}(G).
        ArrangementFamily::Eq1MinusZero { a } => {
            let counts = independence_counts_with_budget(&build_G(a, q - 1)?, n, node_budget)?;
            Ok(factorial(n as u64) * (&counts.counts()[n] + &counts.counts()[n - 1]))
        }
        ArrangementFamily::Difference { a } => graph_chi(&build_F(a, q)?, n, node_budget),
        ArrangementFamily::Catalan => graph_chi(&build_F(&[1], q)?, n, node_budget),
        ArrangementFamily::ExtendedCatalan { a_max } => {
            let steps: Vec<i64> = (1..=*a_max).collect();
            graph_chi(&build_F(&steps, q)?, n, node_budget)
        }
        ArrangementFamily::AffineMult { a, b } => {
            graph_chi(&build_F_affine(a, b, q)?, n, node_budget)
        }
        ArrangementFamily::Ratio { a, b } => graph_chi(&build_G_ratio(a, b, q - 1)?, n, node_budget),
        ArrangementFamily::Shi => {
            let arr = family.instantiate(n)?;
            Ok(count_offpoints_with_budget(
                &arr,
                q,
                node_budget as u128,
            )?)
        }
    }
}

/// Whether a failed evaluation can succeed at larger primes. A hyperplane
/// collapsing mod q or a step vanishing mod k is a small-prime artifact;
/// anything else is wrong at every prime.
fn is_retriable(err: &CharPolyError) -> bool {
    matches!(
        err,
        CharPolyError::Graph(GraphError::InvalidStep { .. })
            | CharPolyError::FiniteField(FiniteFieldError::DegenerateModQ { .. })
    )
}

/// Interpolates chi for the family in dimension `n` from `n + 2` consecutive
/// primes above the sampler's floor: `n + 1` nodes plus one validation prime.
/// Degenerate primes, non-integer fits, shape violations, and validation
/// mismatches all double the floor and retry; the returned polynomial is
/// monic of degree `n` and matches every sample.
pub fn interpolate_charpoly(
    family: &ArrangementFamily,
    n: usize,
    sampler: PrimeSampler,
) -> Result<CharPolyResult, CharPolyError> {
    interpolate_charpoly_with_budget(family, n, sampler, u64::MAX)
}

pub fn interpolate_charpoly_with_budget(
    family: &ArrangementFamily,
    n: usize,
    sampler: PrimeSampler,
    node_budget: u64,
) -> Result<CharPolyResult, CharPolyError> {
    let mut floor = sampler.floor().max(1);
    for _ in 0..=MAX_FLOOR_DOUBLINGS {
        let primes: Vec<u64> = PrimeSampler::starting_above(floor).take(n + 2).collect();
        let evals: Vec<Result<BigInt, CharPolyError>> = primes
            .par_iter()
            .map(|&q| eval_chi_at_prime_with_budget(family, n, q, node_budget))
            .collect();
        let mut values = Vec::with_capacity(n + 2);
        let mut window_failed = false;
        for ev in evals {
            match ev {
                Ok(v) => values.push(v),
                Err(e) if is_retriable(&e) => {
                    window_failed = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if !window_failed {
            if let Some(poly) = fit_window(n, &primes, &values)? {
                return Ok(CharPolyResult {
                    family: family.clone(),
                    n,
                    poly,
                    samples: primes[..=n]
                        .iter()
                        .copied()
                        .zip(values.into_iter())
                        .collect(),
                    validation_prime: primes[n + 1],
                });
            }
        }
        floor = floor.saturating_mul(2);
    }
    Err(CharPolyError::ThresholdNotFound {
        retries: MAX_FLOOR_DOUBLINGS,
        last_floor: floor,
    })
}

/// Fits the first `n + 1` samples and validates against the last. `None`
/// means the window is unusable and a larger floor should be tried.
fn fit_window(
    n: usize,
    primes: &[u64],
    values: &[BigInt],
) -> Result<Option<IntPolynomial>, CharPolyError> {
    let nodes: Vec<(BigInt, BigInt)> = primes[..=n]
        .iter()
        .map(|&q| BigInt::from(q))
        .zip(values[..=n].iter().cloned())
        .collect();
    let poly = match lagrange_interpolate(&nodes) {
        Ok(p) => p,
        Err(ExactError::NonIntegerCoefficients) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let shaped = poly.degree() == Some(n) && poly.is_monic();
    if shaped && poly.eval_i64(primes[n + 1] as i64) == values[n + 1] {
        Ok(Some(poly))
    } else {
        Ok(None)
    }
}

/// `(t - root)^e` as an exact polynomial.
fn linear_power(root: i64, e: usize) -> IntPolynomial {
    let factor = IntPolynomial::from_i64(&[-root, 1]);
    let mut acc = IntPolynomial::one();
    for _ in 0..e {
        acc = &acc * &factor;
    }
    acc
}

/// `t (t - n - 1)(t - n - 2) ... (t - 2n + 1)`, chi of the arrangement
/// `x_i - x_j = 0, 1, -1` in dimension n >= 1.
pub fn closed_catalan(n: usize) -> IntPolynomial {
    assert!(n >= 1, "dimension starts at 1");
    IntPolynomial::x() * falling_factorial_poly(n as i64 + 1, n - 1)
}

/// `t (t - n a_max - 1) ... (t - n a_max - n + 1)`, chi of the arrangement
/// `x_i - x_j = 0, ±1, ..., ±a_max` in dimension n >= 1.
pub fn closed_extended_catalan(n: usize, a_max: i64) -> IntPolynomial {
    assert!(n >= 1 && a_max >= 1, "dimension and width start at 1");
    IntPolynomial::x() * falling_factorial_poly(n as i64 * a_max + 1, n - 1)
}

/// `t (t - n)^{n-1}`, chi of the arrangement `x_i - x_j = 0, 1` (i < j).
pub fn closed_shi(n: usize) -> IntPolynomial {
    assert!(n >= 1, "dimension starts at 1");
    IntPolynomial::x() * linear_power(n as i64, n - 1)
}

/// `(t - 1) prod_{j=1}^{n-1} (t - 1 - mn - j)`, chi of the coordinate-plus-
/// ratio arrangement whose m ratios form a geometric progression a, a^2, ...,
/// a^m.
pub fn closed_prop42(n: usize, m: usize) -> IntPolynomial {
    assert!(n >= 1 && m >= 1, "dimension and ratio count start at 1");
    IntPolynomial::from_i64(&[-1, 1]) * falling_factorial_poly((m * n) as i64 + 2, n - 1)
}

/// `(t - 1)(t - 1 - n)^{n-1}`, chi of the one-sided arrangement `x_i = 0`,
/// `x_i = x_j` (i < j), `x_i = a x_j` (i < j).
pub fn closed_prop43(n: usize) -> IntPolynomial {
    assert!(n >= 1, "dimension starts at 1");
    IntPolynomial::from_i64(&[-1, 1]) * linear_power(n as i64 + 1, n - 1)
}
