//! Empty triangles: censuses, side assignments, intermediate-value orderings
//! and checkers for the lower bounds on the number of empty triangles.
//!
//! Two census conventions are offered. The sphere convention counts every
//! empty disc bounded by a drawn triangle, so a triangle can contribute two.
//! The outer convention counts, for a designated face `F`, only the disc of
//! each triangle that avoids `F`; on rectilinear drawings with `F` unbounded
//! this is the usual planar count.

use crate::convexity::{avoiding_side, convex_by_crossings, is_convex_drawing, is_face_convex_witness, triangles};
use crate::drawing::{edge_index, Drawing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TriangleError {
    #[error("face {face} is not a face-convexity witness (triangle {triangle:?})")]
    NotFaceConvex { face: usize, triangle: [usize; 3] },
    #[error("triangle {0:?} has no convex side")]
    NotConvex([usize; 3]),
    #[error("side assignment has {found} entries, expected {expected}")]
    AssignmentSize { expected: usize, found: usize },
    #[error("chosen side of triangle {0:?} is not convex")]
    AssignmentNotConvex([usize; 3]),
    #[error("ordering is not a permutation of 0..{0}")]
    BadOrdering(usize),
}

/// Index of a sorted triple in lexicographic order of 3-subsets.
pub fn triangle_index(n: usize, t: [usize; 3]) -> usize {
    let mut t = t;
    t.sort_unstable();
    let c3 = |m: usize| if m < 3 { 0 } else { m * (m - 1) * (m - 2) / 6 };
    let c2 = |m: usize| if m < 2 { 0 } else { m * (m - 1) / 2 };
    // triples starting below t[0], then pairs after t[0] starting below t[1]
    let before_a = c3(n) - c3(n - t[0]);
    let m = n - t[0] - 1;
    let before_b = c2(m) - c2(m - (t[1] - t[0] - 1));
    before_a + before_b + (t[2] - t[1] - 1)
}

/// An empty disc: side 0 or 1 of a triangle in the order of
/// [`Drawing::triangle_sides`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmptyEntry {
    pub triangle: [usize; 3],
    pub side: u8,
    /// Whether this disc avoids the designated outer face.
    pub avoids_outer: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmptyTriangleCensus {
    pub entries: Vec<EmptyEntry>,
    /// Empty discs on the sphere.
    pub total: usize,
    /// Empty discs incident with each edge.
    pub edge_counts: Vec<usize>,
    /// Empty discs avoiding the outer face, when one was given.
    pub outer_total: Option<usize>,
    pub outer_edge_counts: Option<Vec<usize>>,
}

pub fn empty_census(d: &Drawing, outer: Option<usize>) -> EmptyTriangleCensus {
    let m = d.num_edges();
    let mut entries = Vec::new();
    let mut edge_counts = vec![0; m];
    let mut outer_counts = vec![0; m];
    let mut outer_total = 0;
    for t in triangles(d.n()) {
        let (a, b) = d.triangle_sides(t);
        let tri = [d.edge(t[0], t[1]), d.edge(t[1], t[2]), d.edge(t[0], t[2])];
        for (side, disc) in [(0u8, &a), (1u8, &b)] {
            if !disc.is_empty() {
                continue;
            }
            let avoids = outer.is_some_and(|f| !disc.contains_face(f));
            for &e in &tri {
                edge_counts[e] += 1;
                if avoids {
                    outer_counts[e] += 1;
                }
            }
            if avoids {
                outer_total += 1;
            }
            entries.push(EmptyEntry {
                triangle: t,
                side,
                avoids_outer: avoids,
            });
        }
    }
    EmptyTriangleCensus {
        total: entries.len(),
        entries,
        edge_counts,
        outer_total: outer.map(|_| outer_total),
        outer_edge_counts: outer.map(|_| outer_counts),
    }
}

/// A chosen side for every triangle, indexed by [`triangle_index`]; each entry
/// is 0 or 1 in the order of [`Drawing::triangle_sides`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideAssignment {
    n: usize,
    sides: Vec<u8>,
}

impl SideAssignment {
    pub fn from_sides(n: usize, sides: Vec<u8>) -> Result<SideAssignment, TriangleError> {
        let expected = triangles(n).count();
        if sides.len() != expected || sides.iter().any(|&s| s > 1) {
            return Err(TriangleError::AssignmentSize {
                expected,
                found: sides.len(),
            });
        }
        Ok(SideAssignment { n, sides })
    }

    /// The sides avoiding face `f`.
    pub fn avoiding(d: &Drawing, f: usize) -> SideAssignment {
        let sides = triangles(d.n())
            .map(|t| {
                let (a, _) = d.triangle_sides(t);
                u8::from(a.contains_face(f))
            })
            .collect();
        SideAssignment { n: d.n(), sides }
    }

    pub fn side(&self, t: [usize; 3]) -> u8 {
        self.sides[triangle_index(self.n, t)]
    }

    pub fn sides(&self) -> &[u8] {
        &self.sides
    }

    /// Flips the chosen side of one triangle.
    pub fn flipped(&self, t: [usize; 3]) -> SideAssignment {
        let mut out = self.clone();
        let i = triangle_index(self.n, t);
        out.sides[i] ^= 1;
        out
    }

    /// Checks that every chosen side is convex.
    pub fn validate(&self, d: &Drawing) -> Result<(), TriangleError> {
        for t in triangles(d.n()) {
            let disc = self.disc(d, t);
            if !convex_by_crossings(d, t, &disc.contained) {
                return Err(TriangleError::AssignmentNotConvex(t));
            }
        }
        Ok(())
    }

    fn disc(&self, d: &Drawing, t: [usize; 3]) -> crate::drawing::TriangleDisc {
        let (a, b) = d.triangle_sides(t);
        if self.side(t) == 0 {
            a
        } else {
            b
        }
    }
}

/// Outcome of [`bf_pattern_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternReport {
    /// Some `i < j < k < l` with `ik`, `il` and `jl` all edges.
    pub pattern: Option<[usize; 4]>,
    pub edges: usize,
    /// `3 n ceil(log2 n)`.
    pub edge_bound: usize,
}

impl PatternReport {
    /// Pattern absent, and then the edge bound holds.
    pub fn passed(&self) -> bool {
        self.pattern.is_none() && self.edges <= self.edge_bound
    }
}

pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Searches a graph on `0..n` for the ordered pattern `ik, il, jl` with
/// `i < j < k < l`.
pub fn bf_pattern_check(n: usize, edges: &[(usize, usize)]) -> PatternReport {
    let mut adj = vec![false; n * n];
    let mut count = 0;
    for &(a, b) in edges {
        let (a, b) = (a.min(b), a.max(b));
        if a != b && !adj[a * n + b] {
            adj[a * n + b] = true;
            count += 1;
        }
    }
    let mut pattern = None;
    'outer: for i in 0..n {
        for l in i + 3..n {
            if !adj[i * n + l] {
                continue;
            }
            for k in i + 2..l {
                if !adj[i * n + k] {
                    continue;
                }
                for j in i + 1..k {
                    if adj[j * n + l] {
                        pattern = Some([i, j, k, l]);
                        break 'outer;
                    }
                }
            }
        }
    }
    PatternReport {
        pattern,
        edges: count,
        edge_bound: 3 * n * ceil_log2(n),
    }
}

/// Ordering `v_1, ..., v_n` of the vertices: `v_1` is the smallest vertex on
/// `f`, and the rest follow the rotation at `v_1` starting just after `f`.
pub fn iv_ordering(d: &Drawing, f: usize) -> Result<Vec<usize>, TriangleError> {
    is_face_convex_witness(d, f).map_err(|t| TriangleError::NotFaceConvex { face: f, triangle: t })?;
    let map = d.map();
    let v1 = map
        .face_vertices(f)
        .into_iter()
        .filter(|&x| d.is_graph_vertex(x))
        .min()
        .expect("a witness face is bounded by a cycle");
    let start = map
        .darts_at(v1)
        .find(|&x| map.face_of(x) == f)
        .expect("v1 lies on f");
    let mut order = vec![v1];
    for x in map.darts_from(start) {
        let e = d.dart_edge(x);
        let (a, b) = d.ends(e);
        order.push(if a == v1 { b } else { a });
    }
    Ok(order)
}

/// A triangle with a vertex inside its chosen side that is a source or sink
/// of the induced `K4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IvWitness {
    pub triangle: [usize; 3],
    pub inside: usize,
}

pub fn check_iv_property(
    d: &Drawing,
    ordering: &[usize],
    assignment: &SideAssignment,
) -> Result<(), IvWitness> {
    let n = d.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in ordering.iter().enumerate() {
        pos[v] = i;
    }
    for t in triangles(n) {
        let disc = assignment.disc(d, t);
        let lo = t.iter().map(|&v| pos[v]).min().unwrap();
        let hi = t.iter().map(|&v| pos[v]).max().unwrap();
        for &x in &disc.contained {
            if pos[x] < lo || pos[x] > hi {
                return Err(IvWitness {
                    triangle: t,
                    inside: x,
                });
            }
        }
    }
    Ok(())
}

/// Checks that ordering is a permutation of `0..n`.
pub fn check_ordering(n: usize, ordering: &[usize]) -> Result<(), TriangleError> {
    let mut seen = vec![false; n];
    if ordering.len() != n {
        return Err(TriangleError::BadOrdering(n));
    }
    for &v in ordering {
        if v >= n || seen[v] {
            return Err(TriangleError::BadOrdering(n));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Two triangles whose chosen sides fail to nest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NestingWitness {
    pub outer: [usize; 3],
    pub inner: [usize; 3],
}

/// For every triangle `T` and every other triangle `T'` with all corners in the
/// chosen side of `T`, checks that the chosen side of `T'` lies inside it.
pub fn check_hereditary(d: &Drawing, assignment: &SideAssignment) -> Result<(), NestingWitness> {
    let n = d.n();
    let discs: Vec<_> = triangles(n).map(|t| assignment.disc(d, t)).collect();
    for (i, t) in triangles(n).enumerate() {
        let outer = &discs[i];
        let mut inside = vec![false; n];
        for &v in t.iter().chain(&outer.contained) {
            inside[v] = true;
        }
        for (j, s) in triangles(n).enumerate() {
            if i == j || !s.iter().all(|&v| inside[v]) {
                continue;
            }
            let nested = discs[j]
                .face_mask()
                .iter()
                .zip(outer.face_mask())
                .all(|(&a, &b)| !a || b);
            if !nested {
                return Err(NestingWitness { outer: t, inner: s });
            }
        }
    }
    Ok(())
}

/// Result of checking the quadratic lower bound for a face-convex drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceConvexBoundReport {
    pub n: usize,
    /// Empty discs avoiding the outer face.
    pub census: usize,
    /// `n^2 - n - 6 n ceil(log2 n)`.
    pub bound: i64,
    /// `(edge, side)` pairs with a vertex on that side but no empty disc on
    /// that side incident with the edge.
    pub missing_incident_empty: Vec<(usize, u8)>,
    /// Pairs `v_i v_j` with two empty discs `v_i v_k v_j`, `i < k < j`.
    pub pairs_with_two: usize,
    /// Pattern checks on the graphs of pairs with at most one empty disc and
    /// all intermediate vertices on the left, respectively right.
    pub left_pattern: PatternReport,
    pub right_pattern: PatternReport,
}

impl FaceConvexBoundReport {
    pub fn bound_holds(&self) -> bool {
        self.census as i64 >= self.bound
    }
    pub fn incident_empty_holds(&self) -> bool {
        self.missing_incident_empty.is_empty()
    }
    pub fn pair_count_holds(&self) -> bool {
        self.census >= 2 * self.pairs_with_two
    }
    pub fn passed(&self) -> bool {
        self.bound_holds()
            && self.incident_empty_holds()
            && self.pair_count_holds()
            && self.left_pattern.passed()
            && self.right_pattern.passed()
    }
}

pub fn face_convex_bound(n: usize) -> i64 {
    let n = n as i64;
    n * n - n - 6 * n * ceil_log2(n as usize) as i64
}

pub fn verify_face_convex_bound(d: &Drawing, f: usize) -> Result<FaceConvexBoundReport, TriangleError> {
    let order = iv_ordering(d, f)?;
    let n = d.n();
    let map = d.map();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // empty[t] and, per edge and vertex, the side of the avoiding disc
    let mut empty = vec![false; triangles(n).count()];
    let mut census = 0;
    let mut left = vec![false; d.num_edges() * n];
    for (i, t) in triangles(n).enumerate() {
        let disc = avoiding_side(d, t, f);
        if disc.is_empty() {
            empty[i] = true;
            census += 1;
        }
        for (u, v, w) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[0], t[2], t[1])] {
            let e = d.edge(u, v);
            left[e * n + w] = disc.contains_face(map.left_face(d.chain(e)[0]));
        }
    }
    // side 1 is the left of the edge walked from its smaller end
    let mut missing = Vec::new();
    for e in 0..d.num_edges() {
        let (u, v) = d.ends(e);
        for side in [1u8, 2] {
            let on = |w: usize| w != u && w != v && left[e * n + w] == (side == 1);
            let populated = (0..n).any(on);
            let found = (0..n).any(|w| on(w) && empty[triangle_index(n, [u, v, w])]);
            if populated && !found {
                missing.push((e, side));
            }
        }
    }
    // pairs in the ordering
    let mut pairs_with_two = 0;
    let mut left_edges = Vec::new();
    let mut right_edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (order[i], order[j]);
            let e = d.edge(a, b);
            let mids = &order[i + 1..j];
            let inner_empty = mids
                .iter()
                .filter(|&&k| empty[triangle_index(n, [a, b, k])])
                .count();
            if inner_empty >= 2 {
                pairs_with_two += 1;
            }
            let incident_empty = (0..n)
                .filter(|&k| k != a && k != b && empty[triangle_index(n, [a, b, k])])
                .count();
            if incident_empty > 1 {
                continue;
            }
            // left of the walk a -> b
            let flip = a > b;
            let is_left = |k: usize| left[e * n + k] != flip;
            if mids.iter().all(|&k| is_left(k)) {
                left_edges.push((i, j));
            }
            if mids.iter().all(|&k| !is_left(k)) {
                right_edges.push((i, j));
            }
        }
    }
    Ok(FaceConvexBoundReport {
        n,
        census,
        bound: face_convex_bound(n),
        missing_incident_empty: missing,
        pairs_with_two,
        left_pattern: bf_pattern_check(n, &left_edges),
        right_pattern: bf_pattern_check(n, &right_edges),
    })
}

/// Result of checking the convex-drawing lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexBoundReport {
    pub n: usize,
    /// Empty discs on the sphere.
    pub census: usize,
    pub crossed_edges: usize,
    /// Crossed edges incident with fewer than two empty discs.
    pub poor_edges: Vec<usize>,
}

impl ConvexBoundReport {
    pub fn crossed_edges_in_two(&self) -> bool {
        self.poor_edges.is_empty()
    }
    /// `census >= 2/3 * crossed`.
    pub fn census_holds(&self) -> bool {
        3 * self.census >= 2 * self.crossed_edges
    }
    /// `crossed >= C(n,2) - (3n - 6)`.
    pub fn crossed_count_holds(&self) -> bool {
        let n = self.n;
        self.crossed_edges + 3 * n >= n * (n - 1) / 2 + 6
    }
    pub fn passed(&self) -> bool {
        self.crossed_edges_in_two() && self.census_holds() && self.crossed_count_holds()
    }
}

pub fn verify_convex_bound(d: &Drawing) -> Result<ConvexBoundReport, TriangleError> {
    is_convex_drawing(d).map_err(TriangleError::NotConvex)?;
    let census = empty_census(d, None);
    let crossed: Vec<usize> = (0..d.num_edges()).filter(|&e| d.is_crossed(e)).collect();
    let poor = crossed
        .iter()
        .copied()
        .filter(|&e| census.edge_counts[e] < 2)
        .collect();
    Ok(ConvexBoundReport {
        n: d.n(),
        census: census.total,
        crossed_edges: crossed.len(),
        poor_edges: poor,
    })
}

/// Edge id of the pair at ordering positions, for callers mapping pattern
/// witnesses back to the drawing.
pub fn ordered_edge(d: &Drawing, ordering: &[usize], i: usize, j: usize) -> usize {
    edge_index(d.n(), ordering[i], ordering[j])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::ExactPoint;
    use crate::generators::{gen_convex_position, gen_exhaustive_small};

    #[test]
    fn triangle_index_is_lexicographic() {
        for n in 3..9 {
            for (i, t) in triangles(n).enumerate() {
                assert_eq!(triangle_index(n, t), i);
            }
        }
    }

    #[test]
    fn k3_has_two_empty_discs() {
        let d = &gen_exhaustive_small(3).unwrap()[0];
        assert_eq!(empty_census(d, None).total, 2);
    }

    #[test]
    fn exact_pattern_is_found() {
        let r = bf_pattern_check(4, &[(0, 2), (0, 3), (1, 3)]);
        assert_eq!(r.pattern, Some([0, 1, 2, 3]));
        assert!(bf_pattern_check(4, &[]).passed());
    }

    #[test]
    fn convex_position_ordering_follows_hull() {
        let d = gen_convex_position(6).unwrap();
        let f = d.outer().unwrap();
        let order = iv_ordering(&d, f).unwrap();
        assert_eq!(order[0], 0);
        // points on a parabola: angular order around the leftmost point
        assert!(order == vec![0, 1, 2, 3, 4, 5] || order == vec![0, 5, 4, 3, 2, 1]);
        let a = SideAssignment::avoiding(&d, f);
        assert!(check_iv_property(&d, &order, &a).is_ok());
    }

    #[test]
    fn flipping_a_crossing_k4_side_breaks_heredity() {
        let pts = [(0, 0), (10, 0), (10, 10), (0, 10)].map(|(x, y)| ExactPoint::new(x, y));
        let d = crate::drawing::from_points(&pts).unwrap();
        let f = d.outer().unwrap();
        let a = SideAssignment::avoiding(&d, f);
        assert!(check_hereditary(&d, &a).is_ok());
        assert!(check_hereditary(&d, &a.flipped([0, 1, 2])).is_err());
    }

    #[test]
    fn planar_k4_has_no_crossed_edges() {
        let d = &gen_exhaustive_small(4).unwrap()[0];
        let r = verify_convex_bound(d).unwrap();
        assert_eq!(r.crossed_edges, 0);
        assert!(r.passed());
    }
}
