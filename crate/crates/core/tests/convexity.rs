mod common;

use proptest::prelude::*;
use pseudolin::convexity::{
    avoiding_side, convex_hull, face_convex_witnesses, forbidden_config_check, is_convex_drawing,
    is_face_convex_witness, side_sets, triangles,
};
use pseudolin::generators::{enumerate_good_drawings, gen_random_points, gen_tin_can};

/// Vertices of the geometric convex hull of `w`, counterclockwise from the
/// smallest label.
fn geometric_hull(p: &[common::P], w: &[usize]) -> Vec<usize> {
    let extreme: Vec<usize> = w
        .iter()
        .copied()
        .filter(|&x| {
            !w.iter().any(|&a| {
                w.iter().any(|&b| {
                    w.iter().any(|&c| {
                        ![a, b, c].contains(&x) && common::inside(p[a], p[b], p[c], p[x])
                    })
                })
            })
        })
        .collect();
    // extreme points of a set in general position, ordered by walking hull edges
    let start = *extreme.iter().min().unwrap();
    let mut cycle = vec![start];
    let mut cur = start;
    loop {
        let next = extreme
            .iter()
            .copied()
            .find(|&y| {
                y != cur
                    && extreme
                        .iter()
                        .all(|&z| z == cur || z == y || common::orient(p[cur], p[y], p[z]) > 0)
            })
            .unwrap();
        if next == start {
            break;
        }
        cycle.push(next);
        cur = next;
    }
    cycle
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn rectilinear_outer_face_is_a_witness(n in 3usize..=10, seed in 0u64..10_000) {
        let d = gen_random_points(n, seed, 1000).unwrap();
        let f = d.outer().unwrap();
        prop_assert!(is_convex_drawing(&d).is_ok());
        prop_assert!(is_face_convex_witness(&d, f).is_ok());
        prop_assert!(face_convex_witnesses(&d).contains(&f));
        prop_assert!(forbidden_config_check(&d, f));
    }

    #[test]
    fn avoiding_side_is_the_bounded_triangle(n in 4usize..=10, seed in 0u64..10_000) {
        let d = gen_random_points(n, seed, 1000).unwrap();
        let p = common::points(&d);
        let f = d.outer().unwrap();
        for t in triangles(n) {
            let disc = avoiding_side(&d, t, f);
            let mut got = disc.contained.clone();
            got.sort_unstable();
            let want: Vec<usize> = (0..n)
                .filter(|x| !t.contains(x) && common::inside(p[t[0]], p[t[1]], p[t[2]], p[*x]))
                .collect();
            prop_assert_eq!(got, want, "triangle {:?}", t);
        }
    }

    #[test]
    fn sides_follow_orientation(n in 3usize..=9, seed in 0u64..10_000) {
        let d = gen_random_points(n, seed, 1000).unwrap();
        let p = common::points(&d);
        let f = d.outer().unwrap();
        for u in 0..n {
            for v in u + 1..n {
                let s = side_sets(&d, f, u, v);
                for w in (0..n).filter(|&w| w != u && w != v) {
                    let left = common::orient(p[u], p[v], p[w]) > 0;
                    prop_assert_eq!(s.side1.contains(&w), left);
                    prop_assert_eq!(s.side2.contains(&w), !left);
                }
            }
        }
    }

    #[test]
    fn hull_matches_geometry(n in 4usize..=10, seed in 0u64..10_000, mask in 0u32..1024) {
        let d = gen_random_points(n, seed, 1000).unwrap();
        let p = common::points(&d);
        let w: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        prop_assume!(w.len() >= 3);
        let h = convex_hull(&d, d.outer().unwrap(), &w).unwrap();
        prop_assert_eq!(&h.cycle, &geometric_hull(&p, &w));
        for x in 0..n {
            let geo = h.cycle.contains(&x)
                || triangles(h.cycle.len()).any(|[a, b, c]| {
                    let (a, b, c) = (h.cycle[a], h.cycle[b], h.cycle[c]);
                    common::inside(p[a], p[b], p[c], p[x])
                });
            prop_assert_eq!(h.contains_vertex(&d, x), geo, "vertex {}", x);
        }
    }
}

#[test]
fn forbidden_configuration_characterizes_witnesses() {
    for n in 4..=6 {
        for d in enumerate_good_drawings(n).unwrap() {
            for f in 0..d.map().num_faces() {
                assert_eq!(forbidden_config_check(&d, f), is_face_convex_witness(&d, f).is_ok());
            }
        }
    }
}

#[test]
fn witnesses_are_convex_drawings() {
    for n in 4..=6 {
        for d in enumerate_good_drawings(n).unwrap() {
            if !face_convex_witnesses(&d).is_empty() {
                assert!(is_convex_drawing(&d).is_ok());
            }
        }
    }
}

#[test]
fn tin_can_k6_triangle_faces_are_witnesses() {
    let d = gen_tin_can(6).unwrap();
    let map = d.map();
    let triangular: Vec<usize> = (0..map.num_faces())
        .filter(|&f| {
            let vs = map.face_vertices(f);
            vs.len() == 3 && vs.iter().all(|&v| d.is_graph_vertex(v))
        })
        .collect();
    assert_eq!(triangular.len(), 2);
    let w = face_convex_witnesses(&d);
    for f in triangular {
        assert!(w.contains(&f));
    }
}

#[test]
fn tin_can_drawings_are_convex() {
    for n in 3..=10 {
        assert!(is_convex_drawing(&gen_tin_can(n).unwrap()).is_ok(), "n = {n}");
    }
}
