mod common;

use proptest::prelude::*;
use pseudolin::arrangement::validate_arrangement;
use pseudolin::generators::{
    enumerate_good_drawings, gen_convex_position, gen_exhaustive_small, gen_random_points,
    gen_random_pseudolines, gen_tin_can, harary_hill, GeneratorError, GeneratorKind, GeneratorSpec,
};

fn choose(n: usize, k: usize) -> usize {
    if n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Harary-Hill value straight from its closed formula.
fn hh(n: usize) -> usize {
    let f = |k: usize| (n.saturating_sub(k)) / 2;
    f(0) * f(1) * f(2) * f(3) / 4
}

fn crossing_counts(ds: &[pseudolin::Drawing]) -> Vec<usize> {
    let mut c: Vec<usize> = ds.iter().map(|d| d.num_crossings()).collect();
    c.sort_unstable();
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_points_are_reproducible(n in 3usize..=12, seed in any::<u64>()) {
        let spec = GeneratorSpec { kind: GeneratorKind::RandomPoints, n, seed, bound: 1000 };
        let a = spec.generate().unwrap();
        let b = gen_random_points(n, seed, 1000).unwrap();
        prop_assert_eq!(common::points(&a), common::points(&b));
        for &(x, y) in &common::points(&a) {
            prop_assert!((0..=1000).contains(&x) && (0..=1000).contains(&y));
        }
        prop_assert!(a.validate_good().is_ok());
    }

    #[test]
    fn random_pseudolines_are_valid(m in 1usize..=12, seed in any::<u64>()) {
        let arr = gen_random_pseudolines(m, seed);
        prop_assert_eq!(arr.num_arcs(), m);
        prop_assert_eq!(arr.num_crossings(), choose(m, 2));
        prop_assert!(validate_arrangement(&arr, true).is_ok());
        prop_assert_eq!(arr, gen_random_pseudolines(m, seed));
    }
}

#[test]
fn harary_hill_matches_formula() {
    for n in 0..=30 {
        assert_eq!(harary_hill(n), hh(n), "n = {n}");
    }
}

#[test]
fn tin_can_reaches_harary_hill() {
    for n in 3..=14 {
        let d = gen_tin_can(n).unwrap();
        assert_eq!(d.n(), n);
        assert_eq!(d.num_crossings(), hh(n), "n = {n}");
        assert!(d.validate_good().is_ok(), "n = {n}");
        assert!(d.coords().is_none());
    }
}

#[test]
fn convex_position_is_convex_with_all_crossings() {
    for n in 3..=12 {
        let d = gen_convex_position(n).unwrap();
        let p = common::points(&d);
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    assert!(common::orient(p[a], p[b], p[c]) > 0, "n = {n}");
                }
            }
        }
        assert_eq!(d.num_crossings(), choose(n, 4), "n = {n}");
    }
}

#[test]
fn exhaustive_corpus_matches_enumeration() {
    assert_eq!(crossing_counts(&gen_exhaustive_small(3).unwrap()), vec![0]);
    assert_eq!(crossing_counts(&gen_exhaustive_small(4).unwrap()), vec![0, 1]);
    assert_eq!(crossing_counts(&gen_exhaustive_small(5).unwrap()), vec![1, 3, 3, 5, 5]);
    for n in 3..=5 {
        let fixed = gen_exhaustive_small(n).unwrap();
        for d in &fixed {
            assert!(d.validate_good().is_ok());
        }
        assert_eq!(crossing_counts(&fixed), crossing_counts(&enumerate_good_drawings(n).unwrap()));
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest sorted crossing-pair list over all vertex relabelings.
fn weak_class(d: &pseudolin::Drawing, perms: &[Vec<usize>]) -> Vec<[usize; 4]> {
    let mut pairs = Vec::new();
    for e in 0..d.num_edges() {
        for c in d.edge_crossings(e) {
            if e < c.partner {
                pairs.push((d.ends(e), d.ends(c.partner)));
            }
        }
    }
    perms
        .iter()
        .map(|p| {
            let mut v: Vec<[usize; 4]> = pairs
                .iter()
                .map(|&((a, b), (c, x))| {
                    let e = (p[a].min(p[b]), p[a].max(p[b]));
                    let g = (p[c].min(p[x]), p[c].max(p[x]));
                    let (e, g) = (e.min(g), e.max(g));
                    [e.0, e.1, g.0, g.1]
                })
                .collect();
            v.sort_unstable();
            v
        })
        .min()
        .unwrap()
}

#[test]
fn k6_enumeration_has_102_crossing_classes() {
    let perms = permutations(6);
    let mut classes: Vec<Vec<[usize; 4]>> =
        enumerate_good_drawings(6).unwrap().iter().map(|d| weak_class(d, &perms)).collect();
    classes.sort();
    classes.dedup();
    assert_eq!(classes.len(), 102);
}

#[test]
fn bad_sizes_are_rejected() {
    assert!(matches!(gen_random_points(2, 0, 1000), Err(GeneratorError::BadSize { .. })));
    assert!(matches!(gen_random_points(10, 0, 50), Err(GeneratorError::BoundTooSmall { .. })));
    assert!(matches!(gen_exhaustive_small(6), Err(GeneratorError::TooLarge(6))));
    assert!(gen_convex_position(2).is_err());
}
