//! Rectilinear ingestion with exact integer predicates.

use std::cmp::Ordering;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};

use super::{edge_index, edge_list, CrossingEntry, Drawing, DrawingError, DrawingSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactPoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl ExactPoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        ExactPoint {
            x: x.into(),
            y: y.into(),
        }
    }
}

/// Sign of the orientation determinant of `(a, b, c)`: `Greater` when `c` is
/// to the left of the directed line `a -> b`.
pub fn orient(a: &ExactPoint, b: &ExactPoint, c: &ExactPoint) -> Ordering {
    cross(a, b, c).cmp(&BigInt::zero())
}

fn cross(a: &ExactPoint, b: &ExactPoint, c: &ExactPoint) -> BigInt {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Angular order around `p`, counterclockwise from the positive x axis.
fn angle_cmp(p: &ExactPoint, a: &ExactPoint, b: &ExactPoint) -> Ordering {
    let half = |q: &ExactPoint| {
        let dy = &q.y - &p.y;
        let dx = &q.x - &p.x;
        if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a)
        .cmp(&half(b))
        .then_with(|| orient(p, b, a))
}

pub(super) fn from_points(pts: &[ExactPoint]) -> Result<Drawing, DrawingError> {
    let n = pts.len();
    if n < 3 {
        return Err(DrawingError::TooFewVertices(n));
    }
    for i in 0..n {
        for j in i + 1..n {
            if pts[i] == pts[j] {
                return Err(DrawingError::DuplicatePoint(i, j));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient(&pts[i], &pts[j], &pts[k]) == Ordering::Equal {
                    return Err(DrawingError::CollinearTriple(i, j, k));
                }
            }
        }
    }
    let crossings = straight_crossings(pts)?;
    let rotation: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            let mut others: Vec<usize> = (0..n).filter(|&w| w != u).collect();
            others.sort_by(|&a, &b| angle_cmp(&pts[u], &pts[a], &pts[b]));
            others
        })
        .collect();
    let spec = DrawingSpec {
        n,
        rotation: rotation.clone(),
        crossings,
    };
    let mut drawing = Drawing::from_spec(&spec)?;

    // unbounded face: the sector at the lowest point spanning straight down
    let low = (0..n)
        .min_by(|&i, &j| pts[i].y.cmp(&pts[j].y).then(pts[i].x.cmp(&pts[j].x)))
        .unwrap();
    let first = rotation[low][0];
    let d = drawing.dart_towards(low, first);
    let f = drawing.map().face_of(d);
    debug_assert_eq!(edge_index(n, low, first), drawing.dart_edge(d));
    drawing.set_outer(Some(f));
    drawing.set_coords(pts.to_vec());
    Ok(drawing)
}

/// Signed crossing lists of the straight-line drawing on `pts`, ordered along
/// each edge. Points must be distinct with no three collinear.
pub(crate) fn straight_crossings(pts: &[ExactPoint]) -> Result<Vec<Vec<CrossingEntry>>, DrawingError> {
    let n = pts.len();
    let ends = edge_list(n);
    let m = ends.len();
    // crossings per edge with their parameter along the edge
    let mut lists: Vec<Vec<(BigRational, CrossingEntry)>> = vec![Vec::new(); m];
    for e in 0..m {
        let (a, b) = ends[e];
        for g in e + 1..m {
            let (c, d) = ends[g];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (pa, pb, pc, pd) = (&pts[a], &pts[b], &pts[c], &pts[d]);
            let o1 = orient(pa, pb, pc);
            let o2 = orient(pa, pb, pd);
            let o3 = orient(pc, pd, pa);
            let o4 = orient(pc, pd, pb);
            if o1 == o2 || o3 == o4 {
                continue;
            }
            // along a->b: t = cross(c,d,a) / (cross(c,d,a) - cross(c,d,b))
            let ca = cross(pc, pd, pa);
            let cb = cross(pc, pd, pb);
            let t = BigRational::new(ca.clone(), &ca - &cb);
            let ac = cross(pa, pb, pc);
            let ad = cross(pa, pb, pd);
            let s = BigRational::new(ac.clone(), &ac - &ad);
            lists[e].push((
                t,
                CrossingEntry {
                    partner: g,
                    from_left: o1 == Ordering::Greater,
                },
            ));
            lists[g].push((
                s,
                CrossingEntry {
                    partner: e,
                    from_left: o3 == Ordering::Greater,
                },
            ));
        }
    }
    let mut crossings = Vec::with_capacity(m);
    for (e, mut list) in lists.into_iter().enumerate() {
        list.sort_by(|x, y| x.0.cmp(&y.0));
        for w in list.windows(2) {
            if w[0].0 == w[1].0 {
                let mut es = [e, w[0].1.partner, w[1].1.partner];
                es.sort_unstable();
                return Err(DrawingError::ConcurrentCrossing(es[0], es[1], es[2]));
            }
        }
        crossings.push(list.into_iter().map(|(_, c)| c).collect());
    }
    Ok(crossings)
}
