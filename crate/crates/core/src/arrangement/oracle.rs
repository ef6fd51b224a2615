//! Subset-sum characteristic polynomial oracle.
//!
//! Sums `(-1)^|B| t^(n - rank B)` over all central subsets `B` of the
//! arrangement. The search prunes on inconsistency: once a subset has no
//! common point, no superset does, so the include-branch is abandoned.
//!
//! The same search also runs with offsets taken in a vector space over the
//! rationals rather than in the rationals themselves. That models families
//! whose offsets involve numbers known only up to rational independence: an
//! offset is a coordinate vector over the basis `{1, s_2, ..., s_m}` of
//! independent symbols, and a dependent subset is central exactly when every
//! rational relation among its forms annihilates the symbolic offsets.

use num::bigint::BigInt;
use num::traits::{One, Zero};

use super::{Arrangement, ArrangementError, Echelon, RowFate, WHITNEY_DEFAULT_BUDGET};
use crate::exactmath::{IntPolynomial, Poly, Rational};

/// A linear form with a symbolic offset vector.
#[derive(Debug, Clone, PartialEq)]
pub struct GenericHyperplane {
    pub form: Vec<Rational>,
    pub offset: Vec<Rational>,
}

impl GenericHyperplane {
    pub fn new(form: Vec<Rational>, offset: Vec<Rational>) -> Self {
        GenericHyperplane { form, offset }
    }

    fn from_int(form: &[i64], offset: &[i64]) -> Self {
        GenericHyperplane {
            form: form.iter().map(|&c| Rational::from_integer(c.into())).collect(),
            offset: offset
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        }
    }

    /// The shifted-catalan multiset in dimension `n` with `m` step levels:
    /// per coordinate pair, the difference form with exact offset 0, and the
    /// offsets `+s_r` and `-s_r` for each level `r`, where `s_1 = 1` and
    /// `s_2, ..., s_m` are fresh symbols. Offset space dimension is `m`.
    pub fn step_multiset(n: usize, m: usize) -> Vec<GenericHyperplane> {
        assert!(m >= 1, "need at least one step level");
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut form = vec![0i64; n];
                form[i] = 1;
                form[j] = -1;
                out.push(GenericHyperplane::from_int(&form, &vec![0; m]));
                for r in 0..m {
                    let mut off = vec![0i64; m];
                    off[r] = 1;
                    out.push(GenericHyperplane::from_int(&form, &off));
                    off[r] = -1;
                    out.push(GenericHyperplane::from_int(&form, &off));
                }
            }
        }
        out
    }
}

/// Subset-sum polynomial of a concrete arrangement (offsets are plain
/// rationals). Budget-capped on hyperplane count.
pub fn whitney_charpoly(arr: &Arrangement) -> Result<IntPolynomial, ArrangementError> {
    whitney_charpoly_with_budget(arr, WHITNEY_DEFAULT_BUDGET)
}

pub fn whitney_charpoly_with_budget(
    arr: &Arrangement,
    budget: usize,
) -> Result<IntPolynomial, ArrangementError> {
    if arr.len() > budget {
        return Err(ArrangementError::BudgetExceeded {
            op: "whitney_charpoly",
            count: arr.len(),
            budget,
        });
    }
    let rows: Vec<Vec<Rational>> = arr.hyperplanes().iter().map(|h| h.augmented_row()).collect();
    Ok(subset_sum(arr.dim(), 1, rows))
}

/// Subset-sum polynomial of a multiset of forms with symbolic offsets.
pub fn generic_charpoly(
    dim: usize,
    elements: &[GenericHyperplane],
) -> Result<IntPolynomial, ArrangementError> {
    generic_charpoly_with_budget(dim, elements, WHITNEY_DEFAULT_BUDGET)
}

pub fn generic_charpoly_with_budget(
    dim: usize,
    elements: &[GenericHyperplane],
    budget: usize,
) -> Result<IntPolynomial, ArrangementError> {
    if elements.len() > budget {
        return Err(ArrangementError::BudgetExceeded {
            op: "generic_charpoly",
            count: elements.len(),
            budget,
        });
    }
    let tail = elements.first().map_or(1, |e| e.offset.len()).max(1);
    let mut rows = Vec::with_capacity(elements.len());
    for e in elements {
        assert_eq!(e.form.len(), dim, "form dimension mismatch");
        assert_eq!(e.offset.len(), tail, "offset dimension mismatch");
        let mut row = e.form.clone();
        row.extend(e.offset.iter().cloned());
        rows.push(row);
    }
    Ok(subset_sum(dim, tail, rows))
}

fn subset_sum(dim: usize, tail: usize, rows: Vec<Vec<Rational>>) -> IntPolynomial {
    let mut acc = vec![BigInt::zero(); dim + 1];
    let mut ech = Echelon::with_tail(dim, tail);
    dfs(&rows, 0, &mut ech, false, dim, &mut acc);
    Poly::from_coeffs(acc)
}

fn dfs(
    rows: &[Vec<Rational>],
    i: usize,
    ech: &mut Echelon,
    odd: bool,
    dim: usize,
    acc: &mut [BigInt],
) {
    if i == rows.len() {
        let sign = if odd { -BigInt::one() } else { BigInt::one() };
        acc[dim - ech.rank()] += sign;
        return;
    }
    dfs(rows, i + 1, ech, odd, dim, acc);
    match ech.insert(rows[i].clone()) {
        RowFate::Pivot(_) => {
            dfs(rows, i + 1, ech, !odd, dim, acc);
            ech.pop();
        }
        RowFate::Redundant => dfs(rows, i + 1, ech, !odd, dim, acc),
        RowFate::Inconsistent => {}
    }
}
