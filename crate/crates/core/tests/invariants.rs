//! Cross-module contract checks: exact-arithmetic roundtrips, agreement of
//! the three characteristic-polynomial routes, the off-point/graph-count
//! bridge, relabeling isomorphisms, and counting laws that every build of
//! the library must preserve.

use num::bigint::BigInt;
use num::traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use arrange_core::arrangement::{
    generic_charpoly, intersection_poset, mobius_charpoly, random_arrangement, whitney_charpoly,
    zaslavsky_bounded, ArrangementFamily, GenericHyperplane,
};
use arrange_core::charpoly::{
    closed_extended_catalan, eval_chi_at_prime, interpolate_charpoly, verify::eq2_check,
};
use arrange_core::exactmath::{
    factorial, lagrange_interpolate, EgfSeries, IntPolynomial, Rational,
};
use arrange_core::finitefield::{
    count_offpoints, discrete_logs, next_prime, primitive_root, PrimeSampler,
};
use arrange_core::graphcount::{
    build_F, build_G, count_independent_sets, disjoint_union, independence_counts,
    union_counts_by_convolution, Graph,
};

fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Random graph on `n` vertices with edges reduced from arbitrary pairs.
fn graph_from_pairs(n: usize, pairs: &[(usize, usize)]) -> Graph {
    let mut g = Graph::edgeless(n);
    for &(a, b) in pairs {
        let (u, v) = (a % n, b % n);
        if u != v {
            g.add_edge(u, v);
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Interpolating a polynomial's own values at distinct integer nodes
    /// recovers it exactly.
    #[test]
    fn interpolation_recovers_integer_polynomials(
        coeffs in prop::collection::vec(-50i64..=50, 1..=9),
        base in -20i64..=20,
    ) {
        let p = IntPolynomial::from_i64(&coeffs);
        let nodes: Vec<(BigInt, BigInt)> = (0..coeffs.len())
            .map(|i| {
                let x = BigInt::from(base + 3 * i as i64);
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        let q = lagrange_interpolate(&nodes).unwrap();
        prop_assert_eq!(q, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Series exp and log are mutually inverse on their common domain, and
    /// rational powers of exp(f) agree with exp of the scaled series.
    #[test]
    fn egf_exp_log_roundtrip(
        parts in prop::collection::vec((-9i64..=9, 1i64..=5), 1..=7),
        scale in 1i64..=4,
    ) {
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(parts.iter().map(|&(n, d)| rational(n, d)));
        let f = EgfSeries::from_coeffs(coeffs.clone());
        let g = f.exp().unwrap();
        let back = g.log().unwrap();
        prop_assert_eq!(back.coeffs(), f.coeffs());

        let scaled = EgfSeries::from_coeffs(
            coeffs.iter().map(|c| c * rational(scale, 1)).collect(),
        );
        let powered = g.pow(&rational(scale, 1)).unwrap();
        let scaled_exp = scaled.exp().unwrap();
        prop_assert_eq!(powered.coeffs(), scaled_exp.coeffs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// On random rational arrangements the subset-expansion and the
    /// intersection-poset route produce the same polynomial, which is monic
    /// of degree dim with chi(0) detecting essentiality.
    #[test]
    fn whitney_and_mobius_agree_on_random_arrangements(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = rng.gen_range(1..=3);
        let arr = random_arrangement(&mut rng, dim, 8);
        let chi = whitney_charpoly(&arr).unwrap();
        let nodes = intersection_poset(&arr).unwrap();
        prop_assert_eq!(&chi, &mobius_charpoly(&nodes, arr.dim()));
        prop_assert_eq!(chi.degree(), Some(dim));
        prop_assert!(chi.is_monic());
        prop_assert_eq!(chi.coeff(0).is_zero(), !arr.is_essential());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Counts of a disjoint union are the convolution of the parts' counts.
    #[test]
    fn disjoint_union_counts_convolve(
        n1 in 1usize..=8,
        n2 in 1usize..=8,
        e1 in prop::collection::vec((0usize..8, 0usize..8), 0..=14),
        e2 in prop::collection::vec((0usize..8, 0usize..8), 0..=14),
    ) {
        let g1 = graph_from_pairs(n1, &e1);
        let g2 = graph_from_pairs(n2, &e2);
        let parts = [
            independence_counts(&g1, n1),
            independence_counts(&g2, n2),
        ];
        let combined = union_counts_by_convolution(&parts);
        let direct = independence_counts(&disjoint_union(&[g1, g2]), n1 + n2);
        prop_assert_eq!(combined.counts(), direct.counts());
        prop_assert!(direct.counts()[0].is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Independent-set counts are invariant under vertex relabeling.
    #[test]
    fn counts_are_relabeling_invariant(
        n in 2usize..=9,
        edges in prop::collection::vec((0usize..9, 0usize..9), 0..=18),
        seed in any::<u64>(),
    ) {
        let g = graph_from_pairs(n, &edges);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let h = g.permuted(&perm);
        let original = independence_counts(&g, n);
        let relabeled = independence_counts(&h, n);
        prop_assert_eq!(original.counts(), relabeled.counts());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The symbolic-offset polynomial depends only on the hyperplanes as
    /// sets: rescaling each defining form by a nonzero rational is a no-op.
    #[test]
    fn generic_charpoly_ignores_form_rescaling(
        scales in prop::collection::vec((1i64..=5, 1i64..=4, any::<bool>()), 5),
    ) {
        let base = GenericHyperplane::step_multiset(2, 2);
        prop_assert_eq!(base.len(), scales.len());
        let rescaled: Vec<GenericHyperplane> = base
            .iter()
            .zip(&scales)
            .map(|(h, &(num, den, neg))| {
                let c = rational(if neg { -num } else { num }, den);
                GenericHyperplane::new(
                    h.form.iter().map(|x| x * &c).collect(),
                    h.offset.iter().map(|x| x * &c).collect(),
                )
            })
            .collect();
        prop_assert_eq!(
            generic_charpoly(2, &base).unwrap(),
            generic_charpoly(2, &rescaled).unwrap()
        );
    }
}

/// One fixed rescaling at three coordinates, where dependent offset triples
/// are in play.
#[test]
fn generic_charpoly_rescaling_three_coordinates() {
    let base = GenericHyperplane::step_multiset(3, 2);
    let rescaled: Vec<GenericHyperplane> = base
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let c = rational(2 * i as i64 + 1, i as i64 % 3 + 1) * rational(-1, 1);
            GenericHyperplane::new(
                h.form.iter().map(|x| x * &c).collect(),
                h.offset.iter().map(|x| x * &c).collect(),
            )
        })
        .collect();
    assert_eq!(
        generic_charpoly(3, &base).unwrap(),
        generic_charpoly(3, &rescaled).unwrap()
    );
}

/// Independent n-subsets of a k-cycle: k/n! times the falling product
/// (k-n-1)(k-n-2)...(k-2n+1), checked against direct enumeration.
#[test]
fn cycle_counts_match_closed_form() {
    for k in 3u64..=30 {
        let g = build_F(&[1], k).unwrap();
        let cap = (k / 2) as usize;
        let counts = independence_counts(&g, cap);
        for n in 1..=cap {
            let mut numer = BigInt::from(k);
            for i in 0..(n as u64).saturating_sub(1) {
                numer *= BigInt::from(k - n as u64 - 1 - i);
            }
            let (expect, rem) = num::Integer::div_rem(&numer, &factorial(n as u64));
            assert!(rem.is_zero(), "cycle formula not integral at k={k} n={n}");
            assert_eq!(counts.counts()[n], expect, "cycle count at k={k} n={n}");
        }
    }
}

/// In the wrap-free regime the map k -> s_n(F(a, k)) is a degree-n
/// polynomial: n+1 samples determine it, and five further sizes agree.
#[test]
fn difference_counts_are_eventually_polynomial() {
    let cases: [(&[i64], usize, u64); 2] = [(&[1, 3], 3, 20), (&[2, 5], 2, 22)];
    for (a, n, start) in cases {
        // n! * s_n has integer coefficients; s_n alone need not.
        let sample = |k: u64| -> BigInt {
            let g = build_F(a, k).unwrap();
            factorial(n as u64) * count_independent_sets(&g, n)
        };
        let nodes: Vec<(BigInt, BigInt)> = (start..=start + n as u64)
            .map(|k| (BigInt::from(k), sample(k)))
            .collect();
        let p = lagrange_interpolate(&nodes).unwrap();
        assert_eq!(p.degree(), Some(n));
        for k in start + n as u64 + 1..=start + n as u64 + 5 {
            assert_eq!(
                p.eval(&BigInt::from(k)),
                sample(k),
                "steps {a:?} size {k} left the polynomial"
            );
        }
    }
}

/// Off-point counts over F_q equal n! times the graph-side independent-set
/// count, at every prime, including ones with multiplicative relations.
#[test]
fn offpoints_bridge_to_graph_counts() {
    let a = [2i64, 3];
    for n in 2..=3usize {
        let arr = ArrangementFamily::Eq1 { a: a.to_vec() }
            .instantiate(n)
            .unwrap();
        for q in [11u64, 13, 17, 19, 23] {
            let off = count_offpoints(&arr, q).unwrap();
            let g = build_G(&a, q - 1).unwrap();
            let from_graph = factorial(n as u64) * count_independent_sets(&g, n);
            assert_eq!(off, from_graph, "bridge failed at n={n} q={q}");
        }
    }
}

/// Families whose defining conditions are symmetric in the coordinates have
/// off-point sets closed under permutation, so n! divides the count.
#[test]
fn offpoints_divisible_by_factorial_for_symmetric_families() {
    let families = [
        ArrangementFamily::Eq1 { a: vec![2] },
        ArrangementFamily::Eq1 { a: vec![2, 3] },
        ArrangementFamily::Difference { a: vec![1, 3] },
        ArrangementFamily::Catalan,
        ArrangementFamily::ExtendedCatalan { a_max: 2 },
    ];
    for family in &families {
        for n in 2..=3usize {
            let arr = family.instantiate(n).unwrap();
            for q in [11u64, 13] {
                let off = count_offpoints(&arr, q).unwrap();
                let rem = &off % factorial(n as u64);
                assert!(rem.is_zero(), "{family:?} n={n} q={q} count {off}");
            }
        }
    }
}

/// Taking discrete logs turns the multiplicative graph on F_q* into the
/// additive difference graph on Z_{q-1} with the logged steps.
#[test]
fn discrete_log_relabels_multiplicative_to_additive() {
    for q in [19u64, 23] {
        let g = primitive_root(q).unwrap();
        let a = [2i64, 3];
        let logs = discrete_logs(q, g, &[2, 3]).unwrap();
        let steps: Vec<i64> = logs.iter().map(|&d| d as i64).collect();
        let mult = build_G(&a, q - 1).unwrap();
        let additive = build_F(&steps, q - 1).unwrap();
        let values: Vec<u64> = (1..q).collect();
        let perm: Vec<usize> = discrete_logs(q, g, &values)
            .unwrap()
            .into_iter()
            .map(|d| d as usize)
            .collect();
        assert_eq!(mult.permuted(&perm), additive, "relabeling failed at q={q}");
    }
}

/// Interpolated polynomials predict chi at a fresh prime beyond every
/// sample, evaluate to n!-divisible values there, and for families that
/// contain all coordinate hyperplanes vanish at t = 1.
#[test]
fn interpolated_polynomials_predict_holdout_primes() {
    let families = [
        (ArrangementFamily::Eq1 { a: vec![2] }, 2usize, true),
        (ArrangementFamily::Difference { a: vec![1, 3] }, 2, false),
        (ArrangementFamily::Catalan, 3, false),
    ];
    for (family, n, has_zero_planes) in families {
        let result =
            interpolate_charpoly(&family, n, PrimeSampler::starting_above(100)).unwrap();
        assert_eq!(result.poly.degree(), Some(n));
        assert!(result.poly.is_monic());
        let last = result.samples.iter().map(|&(q, _)| q).max().unwrap();
        let holdout = next_prime(result.validation_prime.max(last));
        let direct = eval_chi_at_prime(&family, n, holdout).unwrap();
        assert_eq!(
            result.poly.eval(&BigInt::from(holdout)),
            direct,
            "{family:?} missed holdout prime {holdout}"
        );
        let rem = direct % factorial(n as u64);
        assert!(rem.is_zero());
        if has_zero_planes {
            assert!(result.poly.eval_i64(1).is_zero());
        }
    }
}

/// Central arrangements bound no regions, and dropping the coordinate
/// hyperplanes from the multiplicative family leaves a central arrangement.
#[test]
fn central_families_have_no_bounded_regions() {
    for n in 2..=3usize {
        let arr = ArrangementFamily::Eq1MinusZero { a: vec![2] }
            .instantiate(n)
            .unwrap();
        let chi = whitney_charpoly(&arr).unwrap();
        assert_eq!(zaslavsky_bounded(&chi, arr.rank()), BigInt::zero());
    }
}

/// chi(0) is nonzero exactly for essential arrangements, across family
/// instantiations with and without full rank.
#[test]
fn essentiality_matches_constant_term() {
    let instances: Vec<(ArrangementFamily, usize)> = vec![
        (ArrangementFamily::Eq1 { a: vec![2] }, 2),
        (ArrangementFamily::Eq1 { a: vec![2, 3] }, 3),
        (ArrangementFamily::Difference { a: vec![1, 3] }, 2),
        (ArrangementFamily::Catalan, 3),
        (
            ArrangementFamily::AffineMult {
                a: vec![2],
                b: vec![1],
            },
            2,
        ),
    ];
    for (family, n) in instances {
        let arr = family.instantiate(n).unwrap();
        let chi = whitney_charpoly(&arr).unwrap();
        assert_eq!(
            chi.coeff(0).is_zero(),
            !arr.is_essential(),
            "{family:?} at n={n}"
        );
    }
}

/// The closed product form for braid-plus-bounded-integer-steps matches the
/// subset-expansion oracle on concrete instances.
#[test]
fn closed_extended_catalan_matches_whitney() {
    for (n, a_max) in [(2usize, 1i64), (2, 2), (3, 2)] {
        let arr = ArrangementFamily::ExtendedCatalan { a_max }
            .instantiate(n)
            .unwrap();
        assert_eq!(
            closed_extended_catalan(n, a_max),
            whitney_charpoly(&arr).unwrap(),
            "n={n} a_max={a_max}"
        );
    }
}

/// Adjoining the coordinate hyperplanes satisfies the deletion-restriction
/// recurrence at the polynomial level.
#[test]
fn deletion_restriction_holds_at_three_coordinates() {
    assert!(eq2_check(&[2], 3).unwrap());
}
