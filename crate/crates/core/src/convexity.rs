//! Convex discs, convex and face-convex drawings, side sets and convex hulls.
//!
//! Everything is computed on the planarized map by dual floods. A disc bounded
//! by a triangle is convex exactly when no edge joining two of its vertices
//! crosses one of the triangle's edges; the faster checks below use that.

use crate::drawing::{Drawing, TriangleDisc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConvexityError {
    #[error("the region of face {face} for vertex set {set:?} is not bounded by a cycle")]
    HullNotCycle { face: usize, set: Vec<usize> },
}

/// Literal convexity check: every edge joining two vertices of the closed disc
/// stays inside it.
pub fn is_convex_disc(d: &Drawing, disc: &TriangleDisc) -> bool {
    let vs = disc_vertices(disc);
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if !d.edge_in_disc(d.edge(a, b), disc).expect("both ends in the disc") {
                return false;
            }
        }
    }
    true
}

fn disc_vertices(disc: &TriangleDisc) -> Vec<usize> {
    let mut vs: Vec<usize> = disc.triangle.to_vec();
    vs.extend_from_slice(&disc.contained);
    vs
}

/// Convexity via crossings: a disc is convex iff no edge between two of its
/// vertices crosses an edge of the bounding triangle.
pub(crate) fn convex_by_crossings(d: &Drawing, t: [usize; 3], contained: &[usize]) -> bool {
    let tri = [d.edge(t[0], t[1]), d.edge(t[1], t[2]), d.edge(t[0], t[2])];
    let mut vs = t.to_vec();
    vs.extend_from_slice(contained);
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            let e = d.edge(a, b);
            if tri.iter().any(|&g| d.crosses(e, g)) {
                return false;
            }
        }
    }
    true
}

/// All 3-subsets in lexicographic order.
pub fn triangles(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c]))
    })
}

/// Checks that every triangle has a convex side; on failure returns a
/// triangle with no convex side.
pub fn is_convex_drawing(d: &Drawing) -> Result<(), [usize; 3]> {
    for t in triangles(d.n()) {
        let (a, b) = d.triangle_sides(t);
        if !convex_by_crossings(d, t, &a.contained) && !convex_by_crossings(d, t, &b.contained) {
            return Err(t);
        }
    }
    Ok(())
}

/// Disc of `t` that does not contain face `f`.
pub fn avoiding_side(d: &Drawing, t: [usize; 3], f: usize) -> TriangleDisc {
    let (a, b) = d.triangle_sides(t);
    if a.contains_face(f) {
        b
    } else {
        a
    }
}

/// Every face `F` such that for each triangle the disc avoiding `F` is convex.
pub fn face_convex_witnesses(d: &Drawing) -> Vec<usize> {
    let nf = d.map().num_faces();
    let mut ok = vec![true; nf];
    for t in triangles(d.n()) {
        let (a, b) = d.triangle_sides(t);
        let ca = convex_by_crossings(d, t, &a.contained);
        let cb = convex_by_crossings(d, t, &b.contained);
        for f in 0..nf {
            // F must lie in the disc opposite a convex one
            let in_a = a.contains_face(f);
            let fine = if in_a { cb } else { ca };
            if !fine {
                ok[f] = false;
            }
        }
    }
    (0..nf).filter(|&f| ok[f]).collect()
}

/// Whether `f` witnesses face-convexity.
pub fn is_face_convex_witness(d: &Drawing, f: usize) -> Result<(), [usize; 3]> {
    for t in triangles(d.n()) {
        let s = avoiding_side(d, t, f);
        if !convex_by_crossings(d, t, &s.contained) {
            return Err(t);
        }
    }
    Ok(())
}

/// A crossing `K4` whose 4-cycle face does not contain `f`, if any.
pub fn forbidden_config_witness(d: &Drawing, f: usize) -> Option<[usize; 4]> {
    let map = d.map();
    for cp in d.crossing_points() {
        if cp.edges.len() != 2 {
            continue;
        }
        let (e, g) = (cp.edges[0], cp.edges[1]);
        let (a, b) = d.ends(e);
        let (c, x) = d.ends(g);
        let mut vs = [a, b, c, x];
        vs.sort_unstable();
        let j: Vec<usize> = pairs(&vs).map(|(p, q)| d.edge(p, q)).collect();
        let region = map.flood_faces(&[f], |dd| j.contains(&d.dart_edge(dd)));
        let touches_pair = (0..map.num_darts()).any(|dd| {
            region[map.face_of(dd)]
                && !region[map.left_face(dd)]
                && [e, g].contains(&d.dart_edge(dd))
        });
        if touches_pair {
            return Some(vs);
        }
    }
    None
}

/// True iff every crossing `K4` has `f` inside the face bounded by its 4-cycle.
pub fn forbidden_config_check(d: &Drawing, f: usize) -> bool {
    forbidden_config_witness(d, f).is_none()
}

fn pairs(vs: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..vs.len()).flat_map(move |i| (i + 1..vs.len()).map(move |j| (vs[i], vs[j])))
}

/// Both side sets of an edge; each includes the edge's ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideSets {
    pub edge: (usize, usize),
    /// Vertices whose triangle with the edge lies on its left.
    pub side1: Vec<usize>,
    pub side2: Vec<usize>,
}

/// Side of every vertex relative to every edge, for one outer face.
#[derive(Debug, Clone)]
pub struct SideTable {
    n: usize,
    // side[e * n + w] in {0, 1, 2}; 0 for ends of e
    side: Vec<u8>,
}

impl SideTable {
    pub fn new(d: &Drawing, f: usize) -> SideTable {
        let n = d.n();
        let mut side = vec![0u8; d.num_edges() * n];
        let map = d.map();
        for t in triangles(n) {
            let disc = avoiding_side(d, t, f);
            for (u, v, w) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[0], t[2], t[1])] {
                let e = d.edge(u, v);
                let dart = d.chain(e)[0];
                side[e * n + w] = if disc.contains_face(map.left_face(dart)) { 1 } else { 2 };
            }
        }
        SideTable { n, side }
    }

    /// 1 or 2 for `w` off the edge, 0 for its ends.
    pub fn side(&self, e: usize, w: usize) -> u8 {
        self.side[e * self.n + w]
    }

    /// Whether `w` belongs to side `i` of `e`, ends included.
    pub fn in_side(&self, e: usize, w: usize, i: u8) -> bool {
        let s = self.side(e, w);
        s == 0 || s == i
    }

    pub fn sets(&self, d: &Drawing, e: usize) -> SideSets {
        let (u, v) = d.ends(e);
        let mut side1 = vec![u, v];
        let mut side2 = vec![u, v];
        for w in 0..self.n {
            match self.side(e, w) {
                1 => side1.push(w),
                2 => side2.push(w),
                _ => {}
            }
        }
        side1.sort_unstable();
        side2.sort_unstable();
        SideSets {
            edge: (u, v),
            side1,
            side2,
        }
    }
}

/// Side sets of edge `uv` for outer face `f`.
pub fn side_sets(d: &Drawing, f: usize, u: usize, v: usize) -> SideSets {
    let (u, v) = (u.min(v), u.max(v));
    let e = d.edge(u, v);
    let map = d.map();
    let dart = d.chain(e)[0];
    let mut side1 = vec![u, v];
    let mut side2 = vec![u, v];
    for w in 0..d.n() {
        if w == u || w == v {
            continue;
        }
        let disc = avoiding_side(d, [u, v, w], f);
        if disc.contains_face(map.left_face(dart)) {
            side1.push(w);
        } else {
            side2.push(w);
        }
    }
    side1.sort_unstable();
    side2.sort_unstable();
    SideSets {
        edge: (u, v),
        side1,
        side2,
    }
}

/// Convex hull of a vertex set relative to an outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexHull {
    pub set: Vec<usize>,
    /// Boundary cycle, starting at its smallest vertex, walked with the hull
    /// disc on its left.
    pub cycle: Vec<usize>,
    /// Faces of the closed hull disc.
    pub disc: Vec<bool>,
}

impl ConvexHull {
    pub fn contains_face(&self, f: usize) -> bool {
        self.disc[f]
    }
    pub fn cycle_edges(&self) -> Vec<(usize, usize)> {
        let k = self.cycle.len();
        if k == 2 {
            return vec![(self.cycle[0].min(self.cycle[1]), self.cycle[0].max(self.cycle[1]))];
        }
        (0..k)
            .map(|i| {
                let (a, b) = (self.cycle[i], self.cycle[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect()
    }
    pub fn has_cycle_edge(&self, u: usize, v: usize) -> bool {
        self.cycle_edges().contains(&(u.min(v), u.max(v)))
    }
    /// Whether graph vertex `w` lies in the closed disc.
    pub fn contains_vertex(&self, d: &Drawing, w: usize) -> bool {
        self.cycle.contains(&w) || (self.cycle.len() > 2 && self.disc[d.map().face_of(d.map().first_dart(w))])
    }
}

/// Convex hull of `w` for outer face `f`. Sets of two vertices give the
/// degenerate hull made of their edge.
pub fn convex_hull(d: &Drawing, f: usize, w: &[usize]) -> Result<ConvexHull, ConvexityError> {
    let mut set = w.to_vec();
    set.sort_unstable();
    set.dedup();
    let map = d.map();
    let nf = map.num_faces();
    if set.len() == 2 {
        return Ok(ConvexHull {
            cycle: set.clone(),
            set,
            disc: vec![false; nf],
        });
    }
    let n = d.n();
    let mut in_set = vec![false; n];
    for &x in &set {
        in_set[x] = true;
    }
    let internal = |dd: usize| {
        let (a, b) = d.ends(d.dart_edge(dd));
        in_set[a] && in_set[b]
    };
    let region = map.flood_faces(&[f], internal);
    let err = || ConvexityError::HullNotCycle {
        face: f,
        set: set.clone(),
    };
    // boundary edges of the region, with the darts having the region on the right
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut bedges = Vec::new();
    for dd in 0..map.num_darts() {
        if region[map.face_of(dd)] && !region[map.left_face(dd)] {
            let e = d.dart_edge(dd);
            if !bedges.contains(&e) {
                bedges.push(e);
                let (a, b) = d.ends(e);
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    let start = match (0..n).find(|&x| !adj[x].is_empty()) {
        Some(s) => s,
        None => return Err(err()),
    };
    if adj.iter().any(|a| !a.is_empty() && a.len() != 2) {
        return Err(err());
    }
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = adj[start][0].min(adj[start][1]);
    while cur != start {
        cycle.push(cur);
        let nx = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = nx;
    }
    if cycle.len() != bedges.len() {
        return Err(err());
    }
    // orient with the outer region on the right
    let (a, b) = (cycle[0], cycle[1]);
    let dart = d.dart_towards(a, b);
    if region[map.left_face(dart)] {
        cycle[1..].reverse();
    }
    let disc = region.iter().map(|&r| !r).collect();
    Ok(ConvexHull { set, cycle, disc })
}

/// Outcome of the four structural checks on one `(uv, W)` instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SideHullReport {
    /// Both sides of `W` populated iff `uv` is off the outer boundary of `W + uv`.
    pub populated_iff_interior: bool,
    /// No vertex of one side lies in the hull of the other side's part of `W + uv`.
    pub no_vertex_in_opposite_hull: bool,
    /// Edges inside side 1 never cross edges inside side 2.
    pub sides_do_not_cross: bool,
    /// The two side hulls meet exactly in the drawn edge `uv`.
    pub hulls_meet_in_edge: bool,
}

impl SideHullReport {
    pub fn all(&self) -> bool {
        self.populated_iff_interior
            && self.no_vertex_in_opposite_hull
            && self.sides_do_not_cross
            && self.hulls_meet_in_edge
    }
}

fn hull_or_none(d: &Drawing, f: usize, w: &[usize]) -> Option<ConvexHull> {
    convex_hull(d, f, w).ok()
}

pub fn check_side_hulls(
    d: &Drawing,
    f: usize,
    sides: &SideTable,
    uv: (usize, usize),
    w: &[usize],
) -> SideHullReport {
    let (u, v) = (uv.0.min(uv.1), uv.0.max(uv.1));
    let e = d.edge(u, v);
    let n = d.n();
    let mut wuv: Vec<usize> = w.to_vec();
    wuv.extend([u, v]);
    wuv.sort_unstable();
    wuv.dedup();

    // item 1
    let has1 = wuv.iter().any(|&x| sides.side(e, x) == 1);
    let has2 = wuv.iter().any(|&x| sides.side(e, x) == 2);
    let incident = match hull_or_none(d, f, &wuv) {
        Some(h) => h.has_cycle_edge(u, v),
        None => false,
    };
    let item1 = (has1 && has2) == !incident;

    // item 2
    let mut item2 = true;
    for (i, j) in [(1u8, 2u8), (2, 1)] {
        let wj: Vec<usize> = wuv
            .iter()
            .copied()
            .filter(|&x| sides.in_side(e, x, j))
            .collect();
        if wj.len() < 3 {
            continue;
        }
        match hull_or_none(d, f, &wj) {
            Some(h) => {
                for x in 0..n {
                    if sides.side(e, x) == i && h.contains_vertex(d, x) {
                        item2 = false;
                    }
                }
            }
            None => item2 = false,
        }
    }

    // item 3
    let s1: Vec<usize> = (0..n).filter(|&x| sides.in_side(e, x, 1)).collect();
    let s2: Vec<usize> = (0..n).filter(|&x| sides.in_side(e, x, 2)).collect();
    let mut item3 = true;
    'outer: for (a, b) in pairs(&s1) {
        for (c, x) in pairs(&s2) {
            if d.crosses(d.edge(a, b), d.edge(c, x)) {
                item3 = false;
                break 'outer;
            }
        }
    }

    // item 4
    let item4 = match (s1.len() >= 3, s2.len() >= 3) {
        (true, true) => match (hull_or_none(d, f, &s1), hull_or_none(d, f, &s2)) {
            (Some(h1), Some(h2)) => hulls_meet_in_edge(d, &h1, &h2, (u, v)),
            _ => false,
        },
        _ => true,
    };
    SideHullReport {
        populated_iff_interior: item1,
        no_vertex_in_opposite_hull: item2,
        sides_do_not_cross: item3,
        hulls_meet_in_edge: item4,
    }
}

fn hulls_meet_in_edge(d: &Drawing, h1: &ConvexHull, h2: &ConvexHull, uv: (usize, usize)) -> bool {
    if h1.disc.iter().zip(&h2.disc).any(|(&a, &b)| a && b) {
        return false;
    }
    let common: Vec<usize> = h1
        .cycle
        .iter()
        .copied()
        .filter(|x| h2.cycle.contains(x))
        .collect();
    let mut want = vec![uv.0, uv.1];
    want.sort_unstable();
    let mut common_sorted = common;
    common_sorted.sort_unstable();
    if common_sorted != want {
        return false;
    }
    if !h1.has_cycle_edge(uv.0, uv.1) || !h2.has_cycle_edge(uv.0, uv.1) {
        return false;
    }
    for (a, b) in h1.cycle_edges() {
        for (c, x) in h2.cycle_edges() {
            if d.crosses(d.edge(a, b), d.edge(c, x)) {
                return false;
            }
        }
    }
    true
}

/// True iff no four vertices alternate between the two sides of `uv` around
/// the hull cycle of `w`.
pub fn check_no_interlacing(
    d: &Drawing,
    f: usize,
    sides: &SideTable,
    uv: (usize, usize),
    w: &[usize],
) -> bool {
    let e = d.edge(uv.0, uv.1);
    let hull = match convex_hull(d, f, w) {
        Ok(h) => h,
        Err(_) => return false,
    };
    let c = &hull.cycle;
    let k = c.len();
    let s1: Vec<bool> = c.iter().map(|&x| sides.in_side(e, x, 1)).collect();
    let s2: Vec<bool> = c.iter().map(|&x| sides.in_side(e, x, 2)).collect();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                for m in l + 1..k {
                    if (s1[i] && s2[j] && s1[l] && s2[m]) || (s2[i] && s1[j] && s2[l] && s1[m]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Outcome of the three four-vertex side checks on one `(uv, x, y)` instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourVertexReport {
    /// Same side iff `uv` lies on the outer boundary of the `K4`.
    pub same_side_iff_boundary: bool,
    /// Different sides imply the `K4` minus `xy` has no crossing.
    pub different_sides_no_crossing: bool,
    /// For every `z` with `u` strictly inside the triangle `xyz`, two of
    /// `x, y, z` lie on different sides.
    pub interior_splits_sides: bool,
}

impl FourVertexReport {
    pub fn all(&self) -> bool {
        self.same_side_iff_boundary && self.different_sides_no_crossing && self.interior_splits_sides
    }
}

pub fn check_four_vertex_sides(
    d: &Drawing,
    f: usize,
    sides: &SideTable,
    uv: (usize, usize),
    x: usize,
    y: usize,
) -> FourVertexReport {
    let (u, v) = uv;
    let e = d.edge(u, v);
    let same = sides.side(e, x) == sides.side(e, y);
    let on_boundary = convex_hull(d, f, &[u, v, x, y])
        .map(|h| h.has_cycle_edge(u, v))
        .unwrap_or(false);
    let item1 = same == on_boundary;
    let item2 = same || {
        let ux = d.edge(u, x);
        let vy = d.edge(v, y);
        let uy = d.edge(u, y);
        let vx = d.edge(v, x);
        !d.crosses(ux, vy) && !d.crosses(uy, vx)
    };
    let mut item3 = true;
    for z in 0..d.n() {
        if [u, x, y].contains(&z) {
            continue;
        }
        let disc = avoiding_side(d, [x, y, z], f);
        if !disc.contained.contains(&u) {
            continue;
        }
        let labels: Vec<u8> = [x, y, z]
            .iter()
            .map(|&p| sides.side(e, p))
            .filter(|&s| s != 0)
            .collect();
        if !(labels.contains(&1) && labels.contains(&2)) {
            item3 = false;
        }
    }
    FourVertexReport {
        same_side_iff_boundary: item1,
        different_sides_no_crossing: item2,
        interior_splits_sides: item3,
    }
}
