//! Library results checked against oracles written here, independently of
//! the library's own predicates.

use lenpres_core::algebra::{find_witness, find_witness_linear, is_witness};
use lenpres_core::length::{enumerate, enumerate_naive, enumerate_with_workers};
use lenpres_core::witnesses::regime_witness;
use lenpres_core::{SemigroupSpec, Transformation, Variant};
use proptest::prelude::*;

/// All-pairs definition on plain 1-indexed vectors.
fn oracle_member(images: &[usize], l: usize, reflect: bool) -> bool {
    let n = images.len();
    for x in 0..n {
        for y in 0..n {
            let dom = x.abs_diff(y) == l;
            let img = images[x].abs_diff(images[y]) == l;
            if dom && !img || reflect && img && !dom {
                return false;
            }
        }
    }
    true
}

fn all_maps(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=n).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

// (n, l, |T_n(l)|, |T*_n(l)|), from an independent brute-force count.
const SIZES: &[(usize, usize, usize, usize)] = &[
    (2, 1, 2, 2),
    (3, 1, 6, 6),
    (3, 2, 6, 2),
    (4, 1, 16, 2),
    (4, 2, 16, 8),
    (4, 3, 32, 8),
    (5, 1, 42, 2),
    (5, 2, 48, 20),
    (5, 3, 80, 8),
    (5, 4, 250, 54),
    (6, 1, 104, 2),
    (6, 2, 144, 72),
    (6, 3, 216, 48),
    (6, 4, 576, 32),
    (6, 5, 2592, 512),
    (7, 1, 252, 2),
    (7, 2, 384, 12),
    (7, 3, 640, 112),
    (7, 4, 1512, 48),
    (7, 5, 5488, 216),
    (7, 6, 33614, 6250),
];

#[test]
fn sizes_match_independent_count() {
    for &(n, l, plain, star) in SIZES {
        let p = enumerate(&SemigroupSpec::preserving(n, l).unwrap()).unwrap();
        let s = enumerate(&SemigroupSpec::reflecting(n, l).unwrap()).unwrap();
        assert_eq!((p.len(), s.len()), (plain, star), "n = {n}, l = {l}");
    }
}

#[test]
fn enumeration_matches_test_oracle() {
    for n in 2..=6 {
        let maps = all_maps(n);
        for l in 1..n {
            for (reflect, variant) in [(false, Variant::Preserving), (true, Variant::Reflecting)] {
                let expected: Vec<Vec<usize>> = maps
                    .iter()
                    .filter(|m| oracle_member(m, l, reflect))
                    .cloned()
                    .collect();
                let spec = SemigroupSpec::new(n, l, variant).unwrap();
                let got: Vec<Vec<usize>> = enumerate(&spec)
                    .unwrap()
                    .iter()
                    .map(|t| t.to_vec())
                    .collect();
                assert_eq!(got, expected, "{spec}");
                assert_eq!(enumerate_naive(&spec).unwrap(), enumerate(&spec).unwrap());
            }
        }
    }
}

#[test]
fn max_length_count() {
    for n in 2..=7 {
        let s = enumerate(&SemigroupSpec::preserving(n, n - 1).unwrap()).unwrap();
        assert_eq!(s.len(), 2 * n.pow(n as u32 - 2));
    }
}

#[test]
fn parallel_enumeration_is_identical() {
    for (n, l) in [(7, 1), (7, 3), (7, 6)] {
        for v in [Variant::Preserving, Variant::Reflecting] {
            let spec = SemigroupSpec::new(n, l, v).unwrap();
            let seq = enumerate(&spec).unwrap();
            assert_eq!(enumerate_with_workers(&spec, 1).unwrap(), seq);
            assert_eq!(enumerate_with_workers(&spec, 3).unwrap(), seq);
        }
    }
}

#[test]
fn witness_search_matches_pairwise_oracle() {
    for (n, l) in [(5, 2), (5, 3), (6, 1), (6, 4)] {
        let s = enumerate(&SemigroupSpec::preserving(n, l).unwrap()).unwrap();
        for a in &s {
            let expected = s.iter().find(|b| a.then(b).then(a) == *a).copied();
            assert_eq!(find_witness(a, &s).witness, expected, "{a}");
            assert_eq!(find_witness_linear(a, &s), expected);
        }
    }
}

fn reflecting_element() -> impl Strategy<Value = (SemigroupSpec, Transformation)> {
    (2usize..=7)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, l)| {
            let spec = SemigroupSpec::reflecting(n, l).unwrap();
            let set = enumerate(&spec).unwrap();
            (
                Just(spec),
                (0..set.len()).prop_map(move |i| set.as_slice()[i]),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn constructed_star_witnesses_are_valid((spec, a) in reflecting_element()) {
        let b = regime_witness(&a, &spec).unwrap().expect("construction exists").result;
        prop_assert!(is_witness(&a, &b));
        prop_assert!(oracle_member(&b.to_vec(), spec.l, true));
    }

    #[test]
    fn composition_is_right_action(
        (n, x, y) in (2usize..=9).prop_flat_map(|n| (
            Just(n),
            prop::collection::vec(1..=n, n),
            prop::collection::vec(1..=n, n),
        ))
    ) {
        let a = Transformation::new(n, &x).unwrap();
        let b = Transformation::new(n, &y).unwrap();
        let ab = a.compose(&b).unwrap();
        for p in 1..=n {
            prop_assert_eq!(ab.apply(p), y[x[p - 1] - 1]);
        }
    }

    #[test]
    fn membership_matches_oracle(
        (n, l, x) in (2usize..=9).prop_flat_map(|n| (Just(n), 1..n, prop::collection::vec(1..=n, n)))
    ) {
        let a = Transformation::new(n, &x).unwrap();
        prop_assert_eq!(SemigroupSpec::preserving(n, l).unwrap().contains(&a), oracle_member(&x, l, false));
        prop_assert_eq!(SemigroupSpec::reflecting(n, l).unwrap().contains(&a), oracle_member(&x, l, true));
    }
}
