//! Intersection-poset characteristic polynomial oracle.
//!
//! Builds every nonempty intersection of hyperplanes as a canonical reduced
//! row echelon system, computes Mobius values top-down by dimension, and sums
//! `mu(y) t^(dim y)`. Independent of the subset-sum oracle: the two agreeing
//! on random arrangements is a strong correctness check for both.

use std::collections::HashMap;

use num::bigint::BigInt;
use num::traits::{One, Zero};

use super::{Arrangement, ArrangementError, POSET_DEFAULT_BUDGET};
use crate::exactmath::{IntPolynomial, Poly, Rational};

/// One flat of the intersection poset.
///
/// `rows` is the reduced row echelon form of the affine system cutting out
/// the flat (coefficients first, offset last; pivots are 1, pivot columns are
/// otherwise zero, rows sorted by pivot column). The representation is unique
/// per flat, so equality of flats is equality of `rows`.
#[derive(Debug, Clone, PartialEq)]
pub struct PosetNode {
    pub rows: Vec<Vec<Rational>>,
    pub dim: usize,
    pub mobius: BigInt,
}

/// All nonempty intersections of hyperplanes of `arr`, with Mobius values.
/// The ambient space is the first node. Budget-capped on hyperplane count.
pub fn intersection_poset(arr: &Arrangement) -> Result<Vec<PosetNode>, ArrangementError> {
    intersection_poset_with_budget(arr, POSET_DEFAULT_BUDGET)
}

pub fn intersection_poset_with_budget(
    arr: &Arrangement,
    budget: usize,
) -> Result<Vec<PosetNode>, ArrangementError> {
    if arr.len() > budget {
        return Err(ArrangementError::BudgetExceeded {
            op: "intersection_poset",
            count: arr.len(),
            budget,
        });
    }
    let n = arr.dim();
    let planes: Vec<Vec<Rational>> = arr.hyperplanes().iter().map(|h| h.augmented_row()).collect();

    // Closure under intersection, breadth first from the ambient space.
    let mut flats: Vec<Vec<Vec<Rational>>> = vec![Vec::new()];
    let mut seen: HashMap<Vec<Vec<Rational>>, usize> = HashMap::new();
    seen.insert(Vec::new(), 0);
    let mut next = 0;
    while next < flats.len() {
        let current = flats[next].clone();
        next += 1;
        for plane in &planes {
            let mut system = current.clone();
            system.push(plane.clone());
            if let Some(reduced) = rref(system, n) {
                if !seen.contains_key(&reduced) {
                    seen.insert(reduced.clone(), flats.len());
                    flats.push(reduced);
                }
            }
        }
    }

    let mut nodes: Vec<PosetNode> = flats
        .into_iter()
        .map(|rows| {
            let dim = n - rows.len();
            PosetNode {
                rows,
                dim,
                mobius: BigInt::zero(),
            }
        })
        .collect();

    // Mobius recursion mu(y) = -sum of mu(z) over flats z strictly containing
    // y, seeded with mu = 1 at the ambient space. Decreasing dimension order
    // makes every needed value available.
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by(|&a, &b| nodes[b].dim.cmp(&nodes[a].dim));
    for (pos, &y) in order.iter().enumerate() {
        if nodes[y].rows.is_empty() {
            nodes[y].mobius = BigInt::one();
            continue;
        }
        let mut total = BigInt::zero();
        for &z in &order[..pos] {
            if nodes[z].dim > nodes[y].dim && contains(&nodes[z].rows, &nodes[y].rows) {
                total += &nodes[z].mobius;
            }
        }
        nodes[y].mobius = -total;
    }
    Ok(nodes)
}

/// `sum mu(y) t^(dim y)` over the poset.
pub fn mobius_charpoly(nodes: &[PosetNode], dim: usize) -> IntPolynomial {
    let mut acc = vec![BigInt::zero(); dim + 1];
    for node in nodes {
        acc[node.dim] += &node.mobius;
    }
    Poly::from_coeffs(acc)
}

/// Canonical reduced row echelon form of an affine system, or None when the
/// system is inconsistent. Pivots live in the first `ncoeff` columns; a pivot
/// landing in the offset column is the inconsistency signal.
fn rref(rows: Vec<Vec<Rational>>, ncoeff: usize) -> Option<Vec<Vec<Rational>>> {
    let mut kept: Vec<Vec<Rational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut row in rows {
        for (r, &p) in kept.iter().zip(&pivots) {
            if !row[p].is_zero() {
                let factor = row[p].clone();
                for (a, b) in row.iter_mut().zip(r.iter()) {
                    *a -= &factor * b;
                }
            }
        }
        let pivot = match row[..ncoeff].iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None if row[ncoeff].is_zero() => continue,
            None => return None,
        };
        let lead = row[pivot].clone();
        for c in row.iter_mut() {
            *c /= &lead;
        }
        for r in kept.iter_mut() {
            if !r[pivot].is_zero() {
                let factor = r[pivot].clone();
                for (a, b) in r.iter_mut().zip(row.iter()) {
                    *a -= &factor * b;
                }
            }
        }
        kept.push(row);
        pivots.push(pivot);
    }
    let mut order: Vec<usize> = (0..kept.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    Some(order.into_iter().map(|i| kept[i].clone()).collect())
}

/// Does the flat cut out by `sup_rows` contain the one cut out by `sub_rows`?
/// True exactly when every constraint of `sup_rows` is implied by `sub_rows`,
/// i.e. reduces to zero against the sub flat's reduced system.
fn contains(sup_rows: &[Vec<Rational>], sub_rows: &[Vec<Rational>]) -> bool {
    let pivots: Vec<usize> = sub_rows
        .iter()
        .map(|r| r.iter().position(|c| c.is_one()).unwrap())
        .collect();
    for row in sup_rows {
        let mut rem = row.clone();
        for (r, &p) in sub_rows.iter().zip(&pivots) {
            if !rem[p].is_zero() {
                let factor = rem[p].clone();
                for (a, b) in rem.iter_mut().zip(r.iter()) {
                    *a -= &factor * b;
                }
            }
        }
        if !rem.iter().all(|c| c.is_zero()) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{whitney_charpoly, ArrangementFamily, Hyperplane};

    fn chi(arr: &Arrangement) -> IntPolynomial {
        let nodes = intersection_poset(arr).unwrap();
        mobius_charpoly(&nodes, arr.dim())
    }

    #[test]
    fn single_hyperplane() {
        let arr = ArrangementFamily::Braid.instantiate(2).unwrap();
        assert_eq!(chi(&arr), IntPolynomial::from_i64(&[0, -1, 1]));
    }

    #[test]
    fn parallel_lines_never_meet() {
        let arr = Arrangement::new(
            2,
            vec![
                Hyperplane::from_int(&[1, 0], 0).unwrap(),
                Hyperplane::from_int(&[1, 0], 1).unwrap(),
            ],
        );
        let nodes = intersection_poset(&arr).unwrap();
        assert_eq!(nodes.len(), 3);
        assert_eq!(chi(&arr), IntPolynomial::from_i64(&[0, -2, 1]));
    }

    #[test]
    fn triple_point_gets_mobius_two() {
        // x=0, y=0, x=y meet at the origin; x+y=1 crosses each once
        let arr = Arrangement::new(
            2,
            vec![
                Hyperplane::from_int(&[1, 0], 0).unwrap(),
                Hyperplane::from_int(&[0, 1], 0).unwrap(),
                Hyperplane::from_int(&[1, -1], 0).unwrap(),
                Hyperplane::from_int(&[1, 1], 1).unwrap(),
            ],
        );
        let nodes = intersection_poset(&arr).unwrap();
        assert_eq!(nodes.len(), 9);
        let origin = nodes
            .iter()
            .find(|f| f.dim == 0 && f.rows.iter().all(|r| r[2].is_zero()))
            .unwrap();
        assert_eq!(origin.mobius, BigInt::from(2));
        assert_eq!(chi(&arr), IntPolynomial::from_i64(&[5, -4, 1]));
    }

    #[test]
    fn agrees_with_subset_sum_oracle() {
        let cases = vec![
            ArrangementFamily::Braid.instantiate(3).unwrap(),
            ArrangementFamily::Eq1 { a: vec![2, 3] }.instantiate(2).unwrap(),
            ArrangementFamily::Catalan.instantiate(3).unwrap(),
            ArrangementFamily::Shi.instantiate(3).unwrap(),
        ];
        for arr in cases {
            assert_eq!(chi(&arr), whitney_charpoly(&arr).unwrap());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let planes: Vec<Hyperplane> = (0..19)
            .map(|c| Hyperplane::from_int(&[1], c).unwrap())
            .collect();
        let arr = Arrangement::new(1, planes);
        assert!(matches!(
            intersection_poset(&arr),
            Err(ArrangementError::BudgetExceeded { .. })
        ));
        let nodes = intersection_poset_with_budget(&arr, 19).unwrap();
        assert_eq!(nodes.len(), 20);
    }
}
