//! Point counting over prime fields and small multiplicative number theory.
//!
//! `count_offpoints` counts the points of `F_q^n` lying on no hyperplane of a
//! rational arrangement, exactly. The scan fixes all coordinates but the last
//! and, per hyperplane, marks the forbidden values of the last coordinate, so
//! the cost is `q^(n-1)` leaves times the hyperplane count rather than `q^n`
//! full evaluations. The budget is still quoted as `q^n`, the size of the
//! space being counted.

use num::bigint::BigInt;
use num::traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::arrangement::{Arrangement, Echelon};
use crate::exactmath::Rational;

/// Default cap on `q^dim` for an off-point count.
pub const OFFPOINTS_DEFAULT_BUDGET: u128 = 100_000_000;

/// Trial division bound used when factoring; cofactors that survive it and
/// are not provably prime abort instead of guessing.
const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FiniteFieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("arrangement degenerates mod {q}: {what}")]
    DegenerateModQ { q: u64, what: &'static str },
    #[error("{op}: work {work} exceeds budget {budget}")]
    BudgetExceeded {
        op: &'static str,
        work: u128,
        budget: u128,
    },
    #[error("{g} is not a primitive root mod {q}")]
    NotPrimitiveRoot { g: u64, q: u64 },
    #[error("no discrete log of a zero residue mod {q}")]
    ZeroResidue { q: u64 },
    #[error("cannot certify a factorization of {0}")]
    FactorizationBudgetExceeded(u64),
    #[error("multiplicative independence needs positive integers, got {0}")]
    NonPositiveValue(i64),
}

pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn invmod(a: u64, q: u64) -> u64 {
    // q prime, a nonzero mod q
    powmod(a, q - 2, q)
}

/// Deterministic Miller-Rabin, correct for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    loop {
        if is_prime(c) {
            return c;
        }
        c += 1;
    }
}

/// Consecutive primes strictly above a floor, in increasing order.
pub struct PrimeSampler {
    floor: u64,
    last: u64,
}

impl PrimeSampler {
    pub fn starting_above(floor: u64) -> Self {
        PrimeSampler { floor, last: floor }
    }

    /// The floor this sampler was created with, unaffected by iteration.
    pub fn floor(&self) -> u64 {
        self.floor
    }
}

impl Iterator for PrimeSampler {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        self.last = next_prime(self.last);
        Some(self.last)
    }
}

/// Determinant by Laplace expansion along the first row. The verification
/// matrices are at most (dim+1) x (dim+1), so the factorial cost is fine.
fn laplace_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for (col, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entry * laplace_det(&minor);
        if col % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut picked = vec![0usize; k];
    fn rec(start: usize, slot: usize, n: usize, k: usize, picked: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slot == k {
            out.push(picked.clone());
            return;
        }
        for i in start..=(n - (k - slot)) {
            picked[slot] = i;
            rec(i + 1, slot + 1, n, k, picked, out);
        }
    }
    rec(0, 0, n, k, &mut picked, &mut out);
    out
}

/// All nonzero minors (absolute values, deduplicated) of the arrangement's
/// integer-cleared augmented matrix: each hyperplane row is its primitive
/// normal and offset numerator after scaling away the offset denominator.
/// Cost is combinatorial in dimension and hyperplane count; meant for the
/// small arrangements used in verification.
fn augmented_minors(arr: &Arrangement) -> Vec<BigInt> {
    let rows: Vec<Vec<BigInt>> = arr
        .hyperplanes()
        .iter()
        .map(|h| {
            let den = h.offset().denom().clone();
            let mut row: Vec<BigInt> = h.normal().iter().map(|c| c * &den).collect();
            row.push(h.offset().numer().clone());
            row
        })
        .collect();
    let cols = arr.dim() + 1;
    let mut minors = Vec::new();
    for size in 1..=rows.len().min(cols) {
        for row_set in index_subsets(rows.len(), size) {
            for col_set in index_subsets(cols, size) {
                let sub: Vec<Vec<BigInt>> = row_set
                    .iter()
                    .map(|&r| col_set.iter().map(|&c| rows[r][c].clone()).collect())
                    .collect();
                let det = laplace_det(&sub);
                if !det.is_zero() {
                    let det = if det < BigInt::zero() { -det } else { det };
                    if !minors.contains(&det) {
                        minors.push(det);
                    }
                }
            }
        }
    }
    minors
}

/// The `count` smallest primes above `floor` dividing no nonzero minor of
/// the integer-cleared augmented matrix. For such q every hyperplane
/// subset keeps its rational rank and consistency mod q, so the
/// intersection pattern survives reduction and chi(q) equals the off-point
/// count. Terminates because only finitely many primes divide the minors.
pub fn pattern_safe_primes(arr: &Arrangement, floor: u64, count: usize) -> Vec<u64> {
    let minors = augmented_minors(arr);
    PrimeSampler::starting_above(floor)
        .filter(|&q| {
            let qi = BigInt::from(q);
            minors.iter().all(|m| !(m % &qi).is_zero())
        })
        .take(count)
        .collect()
}

struct ModRow {
    coeffs: Vec<u64>,
    offset: u64,
    /// Inverse of the last coefficient when nonzero.
    inv_last: Option<u64>,
}

fn reduce_rows(arr: &Arrangement, q: u64) -> Result<Vec<ModRow>, FiniteFieldError> {
    let qi = BigInt::from(q);
    let to_residue = |r: &Rational| -> Result<u64, FiniteFieldError> {
        let den: BigInt = ((r.denom() % &qi) + &qi) % &qi;
        if den.is_zero() {
            return Err(FiniteFieldError::DegenerateModQ {
                q,
                what: "offset denominator vanishes",
            });
        }
        let num: BigInt = ((r.numer() % &qi) + &qi) % &qi;
        let num_u: u64 = num.try_into().unwrap();
        let den_u: u64 = den.try_into().unwrap();
        Ok(mulmod(num_u, invmod(den_u, q), q))
    };
    let mut rows = Vec::with_capacity(arr.len());
    for h in arr.hyperplanes() {
        let coeffs: Vec<u64> = h
            .normal()
            .iter()
            .map(|c| {
                let r: BigInt = ((c % &qi) + &qi) % &qi;
                let r: u64 = r.try_into().unwrap();
                r
            })
            .collect();
        if coeffs.iter().all(|&c| c == 0) {
            return Err(FiniteFieldError::DegenerateModQ {
                q,
                what: "normal vanishes",
            });
        }
        let offset = to_residue(h.offset())?;
        let inv_last = match coeffs.last() {
            Some(&c) if c != 0 => Some(invmod(c, q)),
            _ => None,
        };
        rows.push(ModRow {
            coeffs,
            offset,
            inv_last,
        });
    }
    Ok(rows)
}

/// Number of points of `F_q^dim` on none of the hyperplanes.
pub fn count_offpoints(arr: &Arrangement, q: u64) -> Result<BigInt, FiniteFieldError> {
    count_offpoints_with_budget(arr, q, OFFPOINTS_DEFAULT_BUDGET)
}

pub fn count_offpoints_with_budget(
    arr: &Arrangement,
    q: u64,
    budget: u128,
) -> Result<BigInt, FiniteFieldError> {
    if !is_prime(q) {
        return Err(FiniteFieldError::NotPrime(q));
    }
    let dim = arr.dim();
    let mut work: u128 = 1;
    for _ in 0..dim {
        work = work.saturating_mul(q as u128);
    }
    if work > budget {
        return Err(FiniteFieldError::BudgetExceeded {
            op: "count_offpoints",
            work,
            budget,
        });
    }
    if arr.is_empty() {
        return Ok(BigInt::from(work));
    }
    let rows = reduce_rows(arr, q)?;
    let zero_partials = vec![0u64; rows.len()];
    let total: u128 = if dim == 1 {
        leaf_count(&rows, &zero_partials, q)
    } else {
        // Branch on the first coordinate; each branch is independent and the
        // per-branch results are summed in index order, so the total does not
        // depend on thread scheduling.
        (0..q)
            .into_par_iter()
            .map(|x0| {
                let partials: Vec<u64> = rows
                    .iter()
                    .map(|row| mulmod(row.coeffs[0], x0, q))
                    .collect();
                scan(&rows, 1, &partials, q, dim)
            })
            .sum()
    };
    Ok(BigInt::from(total))
}

/// Sum of leaf counts over all completions of coordinates `depth..dim-1`.
fn scan(rows: &[ModRow], depth: usize, partials: &[u64], q: u64, dim: usize) -> u128 {
    if depth == dim - 1 {
        return leaf_count(rows, partials, q);
    }
    let mut total = 0u128;
    let mut current = partials.to_vec();
    for _ in 0..q {
        total += scan(rows, depth + 1, &current, q, dim);
        // advance x_depth by one: each partial gains its coefficient
        for (p, row) in current.iter_mut().zip(rows) {
            *p += row.coeffs[depth];
            if *p >= q {
                *p -= q;
            }
        }
    }
    total
}

/// With all but the last coordinate fixed (dot products in `partials`), count
/// the allowed values of the last coordinate.
fn leaf_count(rows: &[ModRow], partials: &[u64], q: u64) -> u128 {
    let mut forbidden: Vec<u64> = Vec::with_capacity(rows.len());
    for (row, &partial) in rows.iter().zip(partials) {
        match row.inv_last {
            Some(inv) => {
                let rhs = (row.offset + q - partial) % q;
                forbidden.push(mulmod(rhs, inv, q));
            }
            None => {
                if partial == row.offset {
                    // the hyperplane contains the whole line
                    return 0;
                }
            }
        }
    }
    forbidden.sort_unstable();
    forbidden.dedup();
    (q as u128) - (forbidden.len() as u128)
}

/// Prime factorization `(p, multiplicity)` in increasing `p`. Fails rather
/// than guess when the post-trial-division cofactor is not provably prime.
pub fn factorize(mut n: u64) -> Result<Vec<(u64, u32)>, FiniteFieldError> {
    assert!(n >= 1, "factorize needs a positive integer");
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, out: &mut Vec<(u64, u32)>, n: &mut u64| {
        let mut m = 0;
        while *n % p == 0 {
            *n /= p;
            m += 1;
        }
        if m > 0 {
            out.push((p, m));
        }
    };
    push(2, &mut out, &mut n);
    let mut p = 3;
    while p <= TRIAL_DIVISION_BOUND && (p as u128) * (p as u128) <= n as u128 {
        push(p, &mut out, &mut n);
        p += 2;
    }
    if n > 1 {
        if (n as u128) <= (TRIAL_DIVISION_BOUND as u128).pow(2) || is_prime(n) {
            // either below the trial bound squared (hence prime) or certified
            out.push((n, 1));
        } else {
            let root = (n as f64).sqrt() as u64;
            for r in root.saturating_sub(2)..=root + 2 {
                if r * r == n && is_prime(r) {
                    out.push((r, 2));
                    return Ok(out);
                }
            }
            return Err(FiniteFieldError::FactorizationBudgetExceeded(n));
        }
    }
    Ok(out)
}

/// Smallest primitive root mod the prime `q`.
pub fn primitive_root(q: u64) -> Result<u64, FiniteFieldError> {
    if !is_prime(q) {
        return Err(FiniteFieldError::NotPrime(q));
    }
    if q == 2 {
        return Ok(1);
    }
    let factors = factorize(q - 1)?;
    'candidate: for g in 2..q {
        for &(p, _) in &factors {
            if powmod(g, (q - 1) / p, q) == 1 {
                continue 'candidate;
            }
        }
        return Ok(g);
    }
    unreachable!("every prime has a primitive root")
}

/// Discrete logs of `values` base `g` mod the prime `q`. `g` must be a
/// primitive root; values must be nonzero mod `q`.
pub fn discrete_logs(q: u64, g: u64, values: &[u64]) -> Result<Vec<u64>, FiniteFieldError> {
    if !is_prime(q) {
        return Err(FiniteFieldError::NotPrime(q));
    }
    // the log table is q words long
    if q > 1 << 24 {
        return Err(FiniteFieldError::BudgetExceeded {
            op: "discrete_logs",
            work: q as u128,
            budget: 1 << 24,
        });
    }
    let g = g % q;
    if g == 0 {
        return Err(FiniteFieldError::NotPrimitiveRoot { g, q });
    }
    for &(p, _) in &factorize(q - 1)? {
        if powmod(g, (q - 1) / p, q) == 1 {
            return Err(FiniteFieldError::NotPrimitiveRoot { g, q });
        }
    }
    let mut log_of = vec![0u64; q as usize];
    let mut power = 1u64;
    for e in 0..q - 1 {
        log_of[power as usize] = e;
        power = mulmod(power, g, q);
    }
    values
        .iter()
        .map(|&v| {
            let r = v % q;
            if r == 0 {
                Err(FiniteFieldError::ZeroResidue { q })
            } else {
                Ok(log_of[r as usize])
            }
        })
        .collect()
}

/// Are the integers multiplicatively independent, i.e. is the only integer
/// vector `e` with `prod v_i^(e_i) = 1` the zero vector? Equivalent to the
/// prime-exponent vectors being linearly independent over the rationals.
pub fn mult_independent(values: &[i64]) -> Result<bool, FiniteFieldError> {
    let mut factored = Vec::with_capacity(values.len());
    let mut primes: Vec<u64> = Vec::new();
    for &v in values {
        if v <= 0 {
            return Err(FiniteFieldError::NonPositiveValue(v));
        }
        let f = factorize(v as u64)?;
        for &(p, _) in &f {
            if !primes.contains(&p) {
                primes.push(p);
            }
        }
        factored.push(f);
    }
    primes.sort_unstable();
    let mut ech = Echelon::new(primes.len().max(1));
    let mut rank = 0;
    for f in &factored {
        let mut row = vec![Rational::zero(); primes.len().max(1)];
        for &(p, m) in f {
            let col = primes.binary_search(&p).unwrap();
            row[col] = Rational::from_integer(m.into());
        }
        ech.insert(row);
        if ech.rank() == rank {
            return Ok(false);
        }
        rank = ech.rank();
    }
    Ok(true)
}
