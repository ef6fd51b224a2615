//! Parameterized arrangement families and their instantiation.

use super::{Arrangement, ArrangementError, Hyperplane};
use crate::exactmath::IntPolynomial;

/// The arrangement families the pipeline understands. `n` is supplied at
/// instantiation time; parameters are validated eagerly in `instantiate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrangementFamily {
    /// `x_i = x_j` for `i < j`.
    Braid,
    /// Braid plus `x_i = 0` for all `i` plus `x_i = a_r x_j` for all `i != j`.
    Eq1 { a: Vec<i64> },
    /// [`Eq1`](Self::Eq1) without the coordinate hyperplanes `x_i = 0`.
    Eq1MinusZero { a: Vec<i64> },
    /// Braid plus `x_i - x_j = a_r` for all `i != j`.
    Difference { a: Vec<i64> },
    /// Braid plus `x_i - a_r x_j = b_r` for all `i != j`.
    AffineMult { a: Vec<i64>, b: Vec<i64> },
    /// Braid plus `x_i = 0` plus `a_r x_i = b_r x_j` for all `i != j`.
    Ratio { a: Vec<i64>, b: Vec<i64> },
    /// `x_i - x_j = 0, 1, -1` for `i < j`: [`Difference`](Self::Difference) at `a = {1}`.
    Catalan,
    /// `x_i - x_j = 0, ±1, ..., ±a_max` for `i < j`.
    ExtendedCatalan { a_max: i64 },
    /// `x_i - x_j = 0, 1` for `i < j` only.
    Shi,
}

impl ArrangementFamily {
    /// Builds the member in ambient dimension `n >= 1`. Duplicate equations
    /// collapse via canonical-form dedup.
    pub fn instantiate(&self, n: usize) -> Result<Arrangement, ArrangementError> {
        if n == 0 {
            return Err(ArrangementError::InvalidParams(
                "instantiation needs n >= 1".into(),
            ));
        }
        self.validate()?;
        let mut planes = Vec::new();
        let braid = |planes: &mut Vec<Hyperplane>| {
            for i in 0..n {
                for j in (i + 1)..n {
                    planes.push(diff_plane(n, i, j, 1, 0));
                }
            }
        };
        match self {
            ArrangementFamily::Braid => braid(&mut planes),
            ArrangementFamily::Eq1 { a } | ArrangementFamily::Eq1MinusZero { a } => {
                braid(&mut planes);
                if matches!(self, ArrangementFamily::Eq1 { .. }) {
                    for i in 0..n {
                        planes.push(axis_plane(n, i, 0));
                    }
                }
                for &m in a {
                    for i in 0..n {
                        for j in 0..n {
                            if i != j {
                                planes.push(diff_plane(n, i, j, m, 0));
                            }
                        }
                    }
                }
            }
            ArrangementFamily::Difference { a } => {
                braid(&mut planes);
                push_difference(&mut planes, n, a);
            }
            ArrangementFamily::Catalan => {
                braid(&mut planes);
                push_difference(&mut planes, n, &[1]);
            }
            ArrangementFamily::ExtendedCatalan { a_max } => {
                braid(&mut planes);
                let offsets: Vec<i64> = (1..=*a_max).collect();
                push_difference(&mut planes, n, &offsets);
            }
            ArrangementFamily::AffineMult { a, b } => {
                braid(&mut planes);
                for (&m, &c) in a.iter().zip(b) {
                    for i in 0..n {
                        for j in 0..n {
                            if i != j {
                                planes.push(diff_plane(n, i, j, m, c));
                            }
                        }
                    }
                }
            }
            ArrangementFamily::Ratio { a, b } => {
                braid(&mut planes);
                for i in 0..n {
                    planes.push(axis_plane(n, i, 0));
                }
                for (&m, &c) in a.iter().zip(b) {
                    for i in 0..n {
                        for j in 0..n {
                            if i != j {
                                // a_r x_i = b_r x_j
                                let mut normal = vec![0i64; n];
                                normal[i] = m;
                                normal[j] = -c;
                                planes.push(
                                    Hyperplane::from_int(&normal, 0).expect("nonzero normal"),
                                );
                            }
                        }
                    }
                }
            }
            ArrangementFamily::Shi => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        planes.push(diff_plane(n, i, j, 1, 0));
                        planes.push(diff_plane(n, i, j, 1, 1));
                    }
                }
            }
        }
        Ok(Arrangement::new(n, planes))
    }

    fn validate(&self) -> Result<(), ArrangementError> {
        let nonempty = |name: &str, v: &[i64]| {
            if v.is_empty() {
                Err(ArrangementError::InvalidParams(format!(
                    "{name} needs a nonempty parameter list"
                )))
            } else {
                Ok(())
            }
        };
        match self {
            ArrangementFamily::Braid | ArrangementFamily::Catalan | ArrangementFamily::Shi => {
                Ok(())
            }
            ArrangementFamily::Eq1 { a } | ArrangementFamily::Eq1MinusZero { a } => {
                nonempty("eq1", a)?;
                if let Some(bad) = a.iter().find(|&&m| m < 2) {
                    return Err(ArrangementError::InvalidParams(format!(
                        "eq1 multipliers must be >= 2, got {bad}"
                    )));
                }
                Ok(())
            }
            ArrangementFamily::Difference { a } => {
                nonempty("difference", a)?;
                if let Some(bad) = a.iter().find(|&&m| m < 1) {
                    return Err(ArrangementError::InvalidParams(format!(
                        "difference offsets must be >= 1, got {bad}"
                    )));
                }
                Ok(())
            }
            ArrangementFamily::ExtendedCatalan { a_max } => {
                if *a_max < 1 {
                    return Err(ArrangementError::InvalidParams(format!(
                        "extended catalan needs a_max >= 1, got {a_max}"
                    )));
                }
                Ok(())
            }
            ArrangementFamily::AffineMult { a, b } => {
                nonempty("affine_mult", a)?;
                if a.len() != b.len() {
                    return Err(ArrangementError::InvalidParams(
                        "affine_mult needs parameter lists of equal length".into(),
                    ));
                }
                if let Some(bad) = a.iter().find(|&&m| m < 1) {
                    return Err(ArrangementError::InvalidParams(format!(
                        "affine_mult multipliers must be >= 1, got {bad}"
                    )));
                }
                if let Some(bad) = b.iter().find(|&&c| c < 0) {
                    return Err(ArrangementError::InvalidParams(format!(
                        "affine_mult offsets must be >= 0, got {bad}"
                    )));
                }
                Ok(())
            }
            ArrangementFamily::Ratio { a, b } => {
                nonempty("ratio", a)?;
                if a.len() != b.len() {
                    return Err(ArrangementError::InvalidParams(
                        "ratio needs parameter lists of equal length".into(),
                    ));
                }
                if a.iter().chain(b).any(|&m| m < 1) {
                    return Err(ArrangementError::InvalidParams(
                        "ratio parameters must be >= 1".into(),
                    ));
                }
                if let Some((&m, _)) = a.iter().zip(b).find(|(m, c)| m == c) {
                    return Err(ArrangementError::InvalidParams(format!(
                        "ratio needs a_r != b_r, got the pair ({m}, {m})"
                    )));
                }
                Ok(())
            }
        }
    }
}

fn axis_plane(n: usize, i: usize, offset: i64) -> Hyperplane {
    let mut normal = vec![0i64; n];
    normal[i] = 1;
    Hyperplane::from_int(&normal, offset).expect("nonzero normal")
}

/// `x_i - m x_j = c`.
fn diff_plane(n: usize, i: usize, j: usize, m: i64, c: i64) -> Hyperplane {
    let mut normal = vec![0i64; n];
    normal[i] = 1;
    normal[j] -= m;
    Hyperplane::from_int(&normal, c).expect("nonzero normal")
}

fn push_difference(planes: &mut Vec<Hyperplane>, n: usize, offsets: &[i64]) {
    for &c in offsets {
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    planes.push(diff_plane(n, i, j, 1, c));
                }
            }
        }
    }
}

/// Checks the deletion-restriction identity relating the family with and
/// without its coordinate hyperplanes:
/// `chi'_n(t) = chi_n(t) + n * chi_{n-1}(t)`, all three sides computed by the
/// subset-sum oracle. `chi_0 = 1` by convention.
pub fn deletion_restriction_check(a: &[i64], n: usize) -> Result<bool, ArrangementError> {
    let with_zero = |k: usize| -> Result<IntPolynomial, ArrangementError> {
        if k == 0 {
            return Ok(IntPolynomial::one());
        }
        super::whitney_charpoly(&ArrangementFamily::Eq1 { a: a.to_vec() }.instantiate(k)?)
    };
    let minus = if n == 0 {
        IntPolynomial::one()
    } else {
        super::whitney_charpoly(
            &ArrangementFamily::Eq1MinusZero { a: a.to_vec() }.instantiate(n)?,
        )?
    };
    let chi_n = with_zero(n)?;
    let chi_prev = with_zero(n.saturating_sub(1))?;
    let rhs = &chi_n + &chi_prev.scale(&(n as i64).into());
    Ok(minus == rhs)
}
