//! Rational hyperplane arrangements and their exact combinatorial invariants.
//!
//! A hyperplane `{x : a.x = c}` is stored in canonical form: `a` is a
//! primitive integer vector whose first nonzero entry is positive, with `c`
//! rescaled to match. Equality of canonical forms is equality of hyperplanes,
//! so arrangements can deduplicate structurally.

mod families;
mod oracle;
mod poset;

pub use families::{deletion_restriction_check, ArrangementFamily};
pub use oracle::{generic_charpoly, whitney_charpoly, whitney_charpoly_with_budget, GenericHyperplane};
pub use poset::{intersection_poset, intersection_poset_with_budget, mobius_charpoly, PosetNode};

use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Signed, Zero};
use rand::Rng;

use crate::exactmath::{IntPolynomial, Rational};

/// Default cap on hyperplane count for the subset-sum oracle.
pub const WHITNEY_DEFAULT_BUDGET: usize = 22;
/// Default cap on hyperplane count for intersection-poset construction.
pub const POSET_DEFAULT_BUDGET: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArrangementError {
    #[error("hyperplane normal must be nonzero")]
    ZeroNormal,
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("{op}: {count} hyperplanes exceeds budget {budget}")]
    BudgetExceeded {
        op: &'static str,
        count: usize,
        budget: usize,
    },
}

/// One rational hyperplane `normal . x = offset`, canonicalized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: Vec<BigInt>,
    offset: Rational,
}

impl Hyperplane {
    /// Canonicalizes an equation with rational coefficients.
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self, ArrangementError> {
        if normal.iter().all(|c| c.is_zero()) {
            return Err(ArrangementError::ZeroNormal);
        }
        // Scale by the lcm of denominators, divide by the gcd of the results,
        // then fix the sign of the first nonzero entry.
        let mut lcm = BigInt::one();
        for c in &normal {
            lcm = lcm.lcm(c.denom());
        }
        let scale = Rational::from_integer(lcm);
        let ints: Vec<BigInt> = normal.iter().map(|c| (c * &scale).to_integer()).collect();
        let mut gcd = BigInt::zero();
        for c in &ints {
            gcd = gcd.gcd(c);
        }
        let first = ints.iter().find(|c| !c.is_zero()).expect("nonzero normal");
        if first.is_negative() {
            gcd = -gcd;
        }
        let canon: Vec<BigInt> = ints.iter().map(|c| c / &gcd).collect();
        let offset = offset * scale / Rational::from_integer(gcd);
        Ok(Hyperplane {
            normal: canon,
            offset,
        })
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int(normal: &[i64], offset: i64) -> Result<Self, ArrangementError> {
        Hyperplane::new(
            normal
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
            Rational::from_integer(offset.into()),
        )
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// The row `(normal | offset)` over the rationals.
    pub(crate) fn augmented_row(&self) -> Vec<Rational> {
        self.normal
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .chain(std::iter::once(self.offset.clone()))
            .collect()
    }
}

/// A finite set of distinct hyperplanes in a common ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Deduplicates on construction, preserving first-seen order.
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Self {
        let mut seen = std::collections::HashSet::new();
        let mut kept = Vec::new();
        for h in hyperplanes {
            assert_eq!(h.dim(), dim, "hyperplane dimension mismatch");
            if seen.insert(h.clone()) {
                kept.push(h);
            }
        }
        Arrangement {
            dim,
            hyperplanes: kept,
        }
    }

    pub fn empty(dim: usize) -> Self {
        Arrangement {
            dim,
            hyperplanes: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// Rank of the normals of the given subset (by index).
    pub fn rank_subset(&self, subset: &[usize]) -> usize {
        let mut ech = Echelon::new(self.dim);
        for &i in subset {
            let row: Vec<Rational> = self.hyperplanes[i]
                .normal
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect();
            ech.insert(row);
        }
        ech.rank()
    }

    /// Rank of the whole arrangement.
    pub fn rank(&self) -> usize {
        self.rank_subset(&(0..self.len()).collect::<Vec<_>>())
    }

    /// Whether the subset's hyperplanes have a common point. Vacuously true
    /// for the empty subset.
    pub fn is_central_subset(&self, subset: &[usize]) -> bool {
        let mut ech = Echelon::with_tail(self.dim, 1);
        for &i in subset {
            match ech.insert(self.hyperplanes[i].augmented_row()) {
                RowFate::Inconsistent => return false,
                RowFate::Pivot(_) | RowFate::Redundant => {}
            }
        }
        true
    }

    pub fn is_central(&self) -> bool {
        self.is_central_subset(&(0..self.len()).collect::<Vec<_>>())
    }

    /// Essential means the normals span the ambient space.
    pub fn is_essential(&self) -> bool {
        self.rank() == self.dim
    }
}

/// Region count from the characteristic polynomial: `(-1)^dim chi(-1)`.
pub fn zaslavsky_regions(chi: &IntPolynomial, dim: usize) -> BigInt {
    let v = chi.eval_i64(-1);
    if dim % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Relatively bounded region count: `(-1)^rank chi(1)`.
pub fn zaslavsky_bounded(chi: &IntPolynomial, rank: usize) -> BigInt {
    let v = chi.eval_i64(1);
    if rank % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Draws an arrangement with small integer coefficients: up to
/// `max_hyperplanes` planes in dimension `dim`, entries in `[-3, 3]`.
pub fn random_arrangement<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    max_hyperplanes: usize,
) -> Arrangement {
    let count = rng.gen_range(0..=max_hyperplanes);
    let mut planes = Vec::new();
    for _ in 0..count {
        let normal: Vec<i64> = loop {
            let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
            if v.iter().any(|&c| c != 0) {
                break v;
            }
        };
        let offset = rng.gen_range(-3..=3);
        planes.push(Hyperplane::from_int(&normal, offset).expect("nonzero normal"));
    }
    Arrangement::new(dim, planes)
}

// ---- Shared exact elimination ----

/// What happened when a row was offered to an [`Echelon`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RowFate {
    /// Row added a pivot in the given column.
    Pivot(usize),
    /// Row reduced to zero: implied by the rows already present.
    Redundant,
    /// Row reduced to zero coefficients but a nonzero tail entry: for
    /// augmented systems this is an inconsistency. Only reported when the
    /// echelon was built with a coefficient prefix via [`Echelon::with_tail`].
    Inconsistent,
}

/// Incremental Gaussian elimination over the rationals with backtracking.
pub(crate) struct Echelon {
    ncols: usize,
    /// Columns `>= coeff_cols` are tail columns (offsets); a pivot there
    /// signals inconsistency instead of rank.
    coeff_cols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    /// All columns are coefficient columns (pure rank computation).
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            coeff_cols: ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// First `coeff_cols` columns are coefficients, the rest are tail.
    pub fn with_tail(coeff_cols: usize, tail_cols: usize) -> Self {
        Echelon {
            ncols: coeff_cols + tail_cols,
            coeff_cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored rows, then either records it as a new
    /// pivot row or classifies it. Inconsistent rows are never stored.
    pub fn insert(&mut self, mut row: Vec<Rational>) -> RowFate {
        assert_eq!(row.len(), self.ncols);
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if !row[p].is_zero() {
                let factor = &row[p] / &r[p];
                for c in p..self.ncols {
                    let delta = &factor * &r[c];
                    row[c] -= delta;
                }
            }
        }
        match row.iter().position(|c| !c.is_zero()) {
            None => RowFate::Redundant,
            Some(p) if p >= self.coeff_cols => RowFate::Inconsistent,
            Some(p) => {
                self.rows.push(row);
                self.pivots.push(p);
                RowFate::Pivot(p)
            }
        }
    }

    /// Removes the most recently added pivot row (DFS backtracking).
    pub fn pop(&mut self) {
        self.rows.pop();
        self.pivots.pop();
    }
}

// `Echelon::insert` never reorders stored rows, so pivot columns are not
// necessarily increasing; only rank and consistency are read off, never a
// canonical form.

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_form_is_primitive_with_positive_lead() {
        // -2x + 4y = 6 canonicalizes to x - 2y = -3
        let h = Hyperplane::from_int(&[-2, 4], 6).unwrap();
        assert_eq!(h.normal(), &[BigInt::from(1), BigInt::from(-2)]);
        assert_eq!(h.offset(), &rat(-3, 1));
        // x/2 = 1/3 canonicalizes to x = 2/3
        let g = Hyperplane::new(vec![rat(1, 2)], rat(1, 3)).unwrap();
        assert_eq!(g.normal(), &[BigInt::from(1)]);
        assert_eq!(g.offset(), &rat(2, 3));
    }

    #[test]
    fn equal_hyperplanes_deduplicate() {
        let a = Hyperplane::from_int(&[1, -1], 1).unwrap();
        let b = Hyperplane::from_int(&[-2, 2], -2).unwrap();
        assert_eq!(a, b);
        let arr = Arrangement::new(2, vec![a, b]);
        assert_eq!(arr.len(), 1);
    }

    #[test]
    fn zero_normal_rejected() {
        assert_eq!(
            Hyperplane::from_int(&[0, 0], 1),
            Err(ArrangementError::ZeroNormal)
        );
    }

    #[test]
    fn rank_and_centrality() {
        // x=0, y=0, x=y in the plane: central through the origin, rank 2
        let arr = Arrangement::new(
            2,
            vec![
                Hyperplane::from_int(&[1, 0], 0).unwrap(),
                Hyperplane::from_int(&[0, 1], 0).unwrap(),
                Hyperplane::from_int(&[1, -1], 0).unwrap(),
            ],
        );
        assert_eq!(arr.rank(), 2);
        assert!(arr.is_central());
        assert!(arr.is_essential());

        // two parallel lines: not central
        let par = Arrangement::new(
            2,
            vec![
                Hyperplane::from_int(&[1, -1], 0).unwrap(),
                Hyperplane::from_int(&[1, -1], 1).unwrap(),
            ],
        );
        assert!(!par.is_central());
        assert_eq!(par.rank(), 1);
        assert!(!par.is_essential());

        // empty subset is vacuously central
        assert!(par.is_central_subset(&[]));
        assert_eq!(Arrangement::empty(3).rank(), 0);
    }

    #[test]
    fn zaslavsky_counts() {
        // chi = t^2 - 4t + 5 in the plane: 10 regions, 2 bounded
        let chi = IntPolynomial::from_i64(&[5, -4, 1]);
        assert_eq!(zaslavsky_regions(&chi, 2), BigInt::from(10));
        assert_eq!(zaslavsky_bounded(&chi, 2), BigInt::from(2));
        // braid in three coordinates: chi = t(t-1)(t-2), 6 regions
        let braid = IntPolynomial::from_i64(&[0, 2, -3, 1]);
        assert_eq!(zaslavsky_regions(&braid, 3), BigInt::from(6));
        // catalan n=2: chi = t(t-3): 4 regions, 2 relatively bounded (rank 1)
        let cat = IntPolynomial::from_i64(&[0, -3, 1]);
        assert_eq!(zaslavsky_regions(&cat, 2), BigInt::from(4));
        assert_eq!(zaslavsky_bounded(&cat, 1), BigInt::from(2));
    }
}
