//! Graph families induced by arrangements, and exact independent-set counts.
//!
//! Graphs are bitset adjacency matrices. The counting engine enumerates
//! independent sets once each by ascending-vertex extension and tallies them
//! by size in one pass; every visited search node is itself an independent
//! set, so the node budget equals the number of sets of size up to the cap.
//! Branches over the first vertex run in parallel; each branch yields an
//! exact integer vector and the merge is a plain sum, so results do not
//! depend on thread count or schedule.

use std::sync::atomic::{AtomicU64, Ordering};

use num::bigint::BigInt;
use num::traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("step {step} is 0 mod {k}, which would demand a self-loop")]
    InvalidStep { step: i64, k: u64 },
    #[error("ratio pair {index} has equal entries")]
    EqualRatioPair { index: usize },
    #[error("{0}")]
    InvalidParams(&'static str),
    #[error("independent-set enumeration exceeded the node budget {budget}")]
    BudgetExceeded { budget: u64 },
}

/// Simple graph on vertices `0..vcount` with bitset adjacency rows.
/// Adjacency is symmetric and irreflexive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vcount: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl Graph {
    pub fn edgeless(vcount: usize) -> Self {
        let words = vcount.div_ceil(64);
        Graph {
            vcount,
            words,
            rows: vec![vec![0u64; words]; vcount],
        }
    }

    pub fn vcount(&self) -> usize {
        self.vcount
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loops are not representable");
        assert!(u < self.vcount && v < self.vcount);
        self.rows[u][v / 64] |= 1 << (v % 64);
        self.rows[v][u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vcount).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vcount);
        let mut g = Graph::edgeless(self.vcount);
        for u in 0..self.vcount {
            for v in (u + 1)..self.vcount {
                if self.has_edge(u, v) {
                    g.add_edge(perm[u], perm[v]);
                }
            }
        }
        g
    }
}

fn modmul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn check_positive_k(k: u64) -> Result<(), GraphError> {
    if k == 0 {
        Err(GraphError::InvalidParams("k must be at least 1"))
    } else {
        Ok(())
    }
}

/// Graph on vertices `{1..k}` (stored as `0..k-1`) with edges `ij` whenever
/// `i = a_r j mod (k+1)` for some step. Relations reaching residue 0 or the
/// vertex itself produce no edge.
#[allow(non_snake_case)]
pub fn build_G(a: &[i64], k: u64) -> Result<Graph, GraphError> {
    check_positive_k(k)?;
    if a.iter().any(|&s| s < 2) {
        return Err(GraphError::InvalidParams("multiplier steps must be at least 2"));
    }
    let modulus = k + 1;
    let mut g = Graph::edgeless(k as usize);
    for j in 1..=k {
        for &s in a {
            let i = modmul(s as u64 % modulus, j, modulus);
            if i != 0 && i != j {
                g.add_edge((i - 1) as usize, (j - 1) as usize);
            }
        }
    }
    Ok(g)
}

/// Circulant graph on `Z/kZ` with connection set `{±a_r}`.
#[allow(non_snake_case)]
pub fn build_F(a: &[i64], k: u64) -> Result<Graph, GraphError> {
    check_positive_k(k)?;
    let mut g = Graph::edgeless(k as usize);
    for &raw in a {
        let s = raw.rem_euclid(k as i64) as u64;
        if s == 0 {
            return Err(GraphError::InvalidStep { step: raw, k });
        }
        for v in 0..k {
            g.add_edge(v as usize, ((v + s) % k) as usize);
        }
    }
    Ok(g)
}

/// Graph on vertices `{1..k}` with edges `ij` whenever `a_r i = b_r j mod
/// (k+1)` for some pair, both orientations included.
#[allow(non_snake_case)]
pub fn build_G_ratio(a: &[i64], b: &[i64], k: u64) -> Result<Graph, GraphError> {
    check_positive_k(k)?;
    if a.len() != b.len() {
        return Err(GraphError::InvalidParams("ratio sequences differ in length"));
    }
    if a.iter().chain(b).any(|&s| s < 1) {
        return Err(GraphError::InvalidParams("ratio entries must be positive"));
    }
    if let Some(index) = (0..a.len()).find(|&r| a[r] == b[r]) {
        return Err(GraphError::EqualRatioPair { index });
    }
    let modulus = k + 1;
    let mut g = Graph::edgeless(k as usize);
    for r in 0..a.len() {
        let ar = a[r] as u64 % modulus;
        let br = b[r] as u64 % modulus;
        for i in 1..=k {
            for j in 1..=k {
                if i != j && modmul(ar, i, modulus) == modmul(br, j, modulus) {
                    g.add_edge((i - 1) as usize, (j - 1) as usize);
                }
            }
        }
    }
    Ok(g)
}

/// Graph on `Z/kZ` with edges `ij` whenever `i = a_r j + b_r mod k` for some
/// pair; relations with `i = j` are dropped.
#[allow(non_snake_case)]
pub fn build_F_affine(a: &[i64], b: &[i64], k: u64) -> Result<Graph, GraphError> {
    check_positive_k(k)?;
    if a.len() != b.len() {
        return Err(GraphError::InvalidParams("affine sequences differ in length"));
    }
    if a.iter().chain(b).any(|&s| s < 0) {
        return Err(GraphError::InvalidParams("affine entries must be nonnegative"));
    }
    let mut g = Graph::edgeless(k as usize);
    for r in 0..a.len() {
        let ar = a[r] as u64 % k;
        let br = b[r] as u64 % k;
        for j in 0..k {
            let i = (modmul(ar, j, k) + br) % k;
            if i != j {
                g.add_edge(i as usize, j as usize);
            }
        }
    }
    Ok(g)
}

/// Attach a fresh pendant vertex `v + n` to each vertex `v`.
pub fn add_pendants(g: &Graph) -> Graph {
    let n = g.vcount;
    let mut out = Graph::edgeless(2 * n);
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                out.add_edge(u, v);
            }
        }
        out.add_edge(u, u + n);
    }
    out
}

/// Disjoint union with vertices shifted block by block; no cross edges.
pub fn disjoint_union(gs: &[Graph]) -> Graph {
    let total: usize = gs.iter().map(|g| g.vcount).sum();
    let mut out = Graph::edgeless(total);
    let mut offset = 0;
    for g in gs {
        for u in 0..g.vcount {
            for v in (u + 1)..g.vcount {
                if g.has_edge(u, v) {
                    out.add_edge(offset + u, offset + v);
                }
            }
        }
        offset += g.vcount;
    }
    out
}

/// Counts of independent sets by size, `counts()[n]` being the number of
/// n-element independent sets. The vector is exact for every index it
/// contains; nothing is implied beyond its cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceCounts {
    counts: Vec<BigInt>,
}

impl IndependenceCounts {
    pub fn from_counts(counts: Vec<BigInt>) -> Self {
        assert!(!counts.is_empty(), "counts start at s_0");
        IndependenceCounts { counts }
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn cap(&self) -> usize {
        self.counts.len() - 1
    }
}

/// Tracks enumeration nodes against a shared budget, syncing in chunks so the
/// hot path stays cheap. The final flush makes the completed total exact;
/// mid-run overshoot detection is chunk-granular.
struct Meter<'a> {
    shared: &'a AtomicU64,
    budget: u64,
    local: u64,
}

const METER_CHUNK: u64 = 1024;

impl<'a> Meter<'a> {
    fn new(shared: &'a AtomicU64, budget: u64) -> Self {
        Meter {
            shared,
            budget,
            local: 0,
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), GraphError> {
        self.local += 1;
        if self.local == METER_CHUNK {
            self.sync()?;
        }
        Ok(())
    }

    fn sync(&mut self) -> Result<(), GraphError> {
        let before = self.shared.fetch_add(self.local, Ordering::Relaxed);
        let total = before + self.local;
        self.local = 0;
        if total > self.budget {
            return Err(GraphError::BudgetExceeded { budget: self.budget });
        }
        Ok(())
    }
}

/// `s_0..s_cap` in one enumeration pass.
pub fn independence_counts(g: &Graph, cap: usize) -> IndependenceCounts {
    independence_counts_with_budget(g, cap, u64::MAX).expect("unlimited budget cannot trip")
}

pub fn independence_counts_with_budget(
    g: &Graph,
    cap: usize,
    budget: u64,
) -> Result<IndependenceCounts, GraphError> {
    let nodes = AtomicU64::new(0);
    let branches: Result<Vec<Vec<u128>>, GraphError> = (0..g.vcount)
        .into_par_iter()
        .map(|v0| branch_counts(g, v0, cap, &nodes, budget))
        .collect();
    let mut counts = vec![BigInt::zero(); cap + 1];
    counts[0] = BigInt::from(1);
    for branch in branches? {
        for (total, part) in counts.iter_mut().zip(branch) {
            *total += part;
        }
    }
    Ok(IndependenceCounts::from_counts(counts))
}

/// All independent sets whose smallest vertex is `v0`, tallied by size.
fn branch_counts(
    g: &Graph,
    v0: usize,
    cap: usize,
    nodes: &AtomicU64,
    budget: u64,
) -> Result<Vec<u128>, GraphError> {
    let mut counts = vec![0u128; cap + 1];
    if cap == 0 {
        return Ok(counts);
    }
    let mut meter = Meter::new(nodes, budget);
    meter.tick()?;
    counts[1] = 1;
    if cap >= 2 {
        let mut avail = vec![u64::MAX; g.words];
        if g.vcount % 64 != 0 {
            avail[g.words - 1] = (1u64 << (g.vcount % 64)) - 1;
        }
        restrict_above(&mut avail, &g.rows[v0], v0);
        if avail.iter().any(|&w| w != 0) {
            let mut scratch: Vec<Vec<u64>> = vec![vec![0u64; g.words]; cap - 1];
            extend(g, 2, cap, &avail, &mut scratch, &mut counts, &mut meter)?;
        }
    }
    meter.sync()?;
    Ok(counts)
}

/// Remove `v`, everything up to `v`, and `v`'s neighbors from the mask.
fn restrict_above(mask: &mut [u64], row: &[u64], v: usize) {
    let word = v / 64;
    let bit = v % 64;
    for w in 0..mask.len() {
        if w < word {
            mask[w] = 0;
        } else {
            mask[w] &= !row[w];
            if w == word {
                mask[w] &= if bit == 63 { 0 } else { !0u64 << (bit + 1) };
            }
        }
    }
}

fn extend(
    g: &Graph,
    depth: usize,
    cap: usize,
    avail: &[u64],
    scratch: &mut [Vec<u64>],
    counts: &mut [u128],
    meter: &mut Meter,
) -> Result<(), GraphError> {
    for (w, &word) in avail.iter().enumerate() {
        let mut m = word;
        while m != 0 {
            let v = w * 64 + m.trailing_zeros() as usize;
            m &= m - 1;
            meter.tick()?;
            counts[depth] += 1;
            if depth < cap {
                let (head, tail) = scratch.split_first_mut().unwrap();
                head.copy_from_slice(avail);
                restrict_above(head, &g.rows[v], v);
                if head.iter().any(|&x| x != 0) {
                    extend(g, depth + 1, cap, head, tail, counts, meter)?;
                }
            }
        }
    }
    Ok(())
}

/// Number of n-element independent sets.
pub fn count_independent_sets(g: &Graph, n: usize) -> BigInt {
    independence_counts(g, n).counts[n].clone()
}

pub fn count_independent_sets_with_budget(
    g: &Graph,
    n: usize,
    budget: u64,
) -> Result<BigInt, GraphError> {
    Ok(independence_counts_with_budget(g, n, budget)?.counts[n].clone())
}

/// Product of independence polynomials: the counts of a disjoint union from
/// the counts of its parts. Each input is taken as the complete polynomial
/// of its graph, so inputs must extend to their independence numbers.
pub fn union_counts_by_convolution(parts: &[IndependenceCounts]) -> IndependenceCounts {
    let mut acc = vec![BigInt::from(1)];
    for part in parts {
        let mut next = vec![BigInt::zero(); acc.len() + part.counts.len() - 1];
        for (i, x) in acc.iter().enumerate() {
            for (j, y) in part.counts.iter().enumerate() {
                next[i + j] += x * y;
            }
        }
        acc = next;
    }
    IndependenceCounts::from_counts(acc)
}
