use super::*;
use crate::convexity::face_convex_witnesses;
use crate::drawing::from_points;
use crate::generators::{enumerate_good_drawings, gen_convex_position, gen_random_points, gen_tin_can};
use crate::ExactPoint;

fn pts(xy: &[(i64, i64)]) -> Drawing {
    let p: Vec<ExactPoint> = xy.iter().map(|&(x, y)| ExactPoint::new(x, y)).collect();
    from_points(&p).unwrap()
}

/// Three hull points and two inside.
fn k5_interior() -> Drawing {
    pts(&[(0, 0), (10, 0), (5, 10), (4, 3), (5, 4)])
}

fn full_check(d: &Drawing, f: usize) -> DiskArrangement {
    let arr = pseudolinearize(d, f).unwrap();
    let m = d.num_edges();
    assert_eq!(arr.num_arcs(), m);
    assert_eq!(arr.num_crossings(), m * (m - 1) / 2);
    validate_arrangement(&arr, true).unwrap();
    verify_extension(d, &arr).unwrap();
    arr
}

#[test]
fn planar_triangle() {
    let d = pts(&[(0, 0), (4, 0), (0, 4)]);
    let arr = full_check(&d, d.outer().unwrap());
    assert_eq!(arr.num_crossings(), 3);
}

#[test]
fn rectilinear_k4_and_k5() {
    let d = gen_convex_position(4).unwrap();
    assert_eq!(full_check(&d, d.outer().unwrap()).num_crossings(), 15);
    let d = k5_interior();
    assert_eq!(full_check(&d, d.outer().unwrap()).num_crossings(), 45);
}

#[test]
fn tin_can_k6_both_triangle_faces() {
    let d = gen_tin_can(6).unwrap();
    let w = face_convex_witnesses(&d);
    assert!(w.len() >= 2);
    for f in w {
        full_check(&d, f);
    }
}

#[test]
fn rejects_faces_that_are_not_witnesses() {
    let d = gen_tin_can(6).unwrap();
    let w = face_convex_witnesses(&d);
    let f = (0..d.map().num_faces()).find(|f| !w.contains(f)).unwrap();
    assert!(matches!(pseudolinearize(&d, f), Err(PseudolinearError::NotFaceConvex { face, .. }) if face == f));
    let nf = d.map().num_faces();
    assert_eq!(pseudolinearize(&d, nf), Err(PseudolinearError::UnknownFace(nf)));
}

#[test]
fn rejects_drawings_without_witness() {
    let d = enumerate_good_drawings(6)
        .unwrap()
        .into_iter()
        .find(|d| face_convex_witnesses(d).is_empty())
        .unwrap();
    for f in 0..d.map().num_faces() {
        assert!(matches!(pseudolinearize(&d, f), Err(PseudolinearError::NotFaceConvex { .. })));
    }
}

#[test]
fn crossing_diagonal_has_no_end_regions() {
    let d = gen_convex_position(4).unwrap();
    let f = d.outer().unwrap();
    let e = (0..d.num_edges()).find(|&e| d.is_crossed(e)).unwrap();
    let fr = edge_frame(&d, f, e).unwrap();
    assert!(fr.ends.is_empty());
    let (u, v) = d.ends(e);
    for j in 0..2 {
        assert_eq!(fr.paths[j], vec![u, v]);
    }
}

#[test]
fn boundary_edge_has_no_frame() {
    let d = gen_convex_position(4).unwrap();
    let f = d.outer().unwrap();
    let e = d.edge(0, 1);
    assert!(!d.is_crossed(e));
    assert_eq!(edge_frame(&d, f, e), Err(PseudolinearError::BoundaryEdge((0, 1))));
}

#[test]
fn interior_point_is_an_end_region() {
    let d = k5_interior();
    let f = d.outer().unwrap();
    for v in [0, 1, 2] {
        let e = d.edge(3, v);
        let fr = edge_frame(&d, f, e).unwrap();
        assert!(fr.end(3).is_some(), "edge 3{v}");
        assert!(fr.end(v).is_none());
        let ef = fr.end(3).unwrap();
        let (a1, a2) = ef.boundary_edge;
        assert!(fr.sides.side1.contains(&a1) && fr.sides.side2.contains(&a2));
    }
}

#[test]
fn first_arc_has_no_constraints() {
    let d = k5_interior();
    let mut b = Pseudolinearizer::new(&d, d.outer().unwrap(), &Default::default()).unwrap();
    let e = b.edge_order()[0];
    let a = b.build_alpha(e).unwrap();
    assert!(a.unavoidable.is_empty());
    for r in &a.restrictions {
        assert_eq!((r.side1_reach, r.side2_reach, r.gap), (0, 0, 0));
        assert!(r.points.is_empty());
    }
}

#[test]
fn arcs_sharing_an_end_are_unavoidable() {
    let d = k5_interior();
    let mut b = Pseudolinearizer::new(&d, d.outer().unwrap(), &Default::default()).unwrap();
    let alphas = b.build_alphas().unwrap();
    for (k, a) in alphas.iter().enumerate() {
        let (u, v) = d.ends(a.edge);
        for prev in &alphas[..k] {
            let (p, q) = d.ends(prev.edge);
            let adjacent = p == u || p == v || q == u || q == v;
            if adjacent || d.crosses(a.edge, prev.edge) {
                assert!(a.unavoidable.contains(&prev.edge));
                assert!(b.classify_unavoidable(prev.edge, a.edge).unwrap());
            }
        }
    }
}

#[test]
fn interior_arcs_meet_at_most_once() {
    let d = k5_interior();
    let mut b = Pseudolinearizer::new(&d, d.outer().unwrap(), &Default::default()).unwrap();
    let alphas = b.build_alphas().unwrap();
    for a in &alphas {
        let mut seen = a.meets.clone();
        seen.sort_unstable();
        let len = seen.len();
        seen.dedup();
        assert_eq!(seen.len(), len, "edge {}", a.edge);
    }
}

#[test]
fn triangle_boundary_arcs_cross_pairwise() {
    let d = k5_interior();
    let mut b = Pseudolinearizer::new(&d, d.outer().unwrap(), &Default::default()).unwrap();
    b.build_alphas().unwrap();
    let betas = b.build_betas().unwrap();
    assert_eq!(betas.len(), 3);
    for x in &betas {
        let mut m = x.meets.clone();
        m.sort_unstable();
        let mut others: Vec<usize> = betas.iter().map(|y| y.edge).filter(|&g| g != x.edge).collect();
        others.sort_unstable();
        assert_eq!(m, others);
    }
}

#[test]
fn stages_must_run_in_order() {
    let d = k5_interior();
    let mut b = Pseudolinearizer::new(&d, d.outer().unwrap(), &Default::default()).unwrap();
    assert!(matches!(b.complete_to_pseudolines(), Err(PseudolinearError::InternalError(_))));
    let e = b.edge_order()[0];
    b.build_alpha(e).unwrap();
    assert!(matches!(b.build_alpha(e), Err(PseudolinearError::InternalError(_))));
}

#[test]
fn shuffled_orders_stay_valid() {
    let d = gen_random_points(9, 3, 1000).unwrap();
    let f = d.outer().unwrap();
    for seed in 0..8 {
        let arr = pseudolinearize_with(&d, f, &PseudolinearizeOptions { order_seed: Some(seed) }).unwrap();
        verify_extension(&d, &arr).unwrap();
    }
}

#[test]
fn extension_check_rejects_a_foreign_arrangement() {
    let d = gen_convex_position(4).unwrap();
    let arr = pseudolinearize(&d, d.outer().unwrap()).unwrap();
    let mut swapped = arr.clone();
    let (x, y) = (d.edge(0, 2), d.edge(0, 1));
    let relabel = |g: usize| if g == x { y } else if g == y { x } else { g };
    swapped.arcs.swap(x, y);
    for a in &mut swapped.arcs {
        for g in &mut a.crossings {
            *g = relabel(*g);
        }
    }
    for s in &mut swapped.slots {
        s.0 = relabel(s.0);
    }
    assert!(verify_extension(&d, &swapped).is_err());
    let k3 = pts(&[(0, 0), (4, 0), (0, 4)]);
    assert!(matches!(verify_extension(&k3, &arr), Err(ExtensionViolation::WrongCount { .. })));
}
