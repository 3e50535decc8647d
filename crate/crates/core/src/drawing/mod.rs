//! Good drawings of complete graphs, stored as planarized sphere maps.
//!
//! Graph vertices are `0..n`. Edge `{u, v}` with `u < v` has index
//! [`edge_index`]; its chain of map darts runs from `u` to `v`. Crossings are
//! degree-4 map vertices numbered from `n` upward.

pub(crate) mod points;

pub use points::{orient, ExactPoint};

use crate::planar_map::{MapError, PlanarMap};

/// Index of edge `{u, v}` in the lexicographic order of pairs.
pub fn edge_index(n: usize, u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(a != b && b < n);
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// Endpoints `(u, v)` with `u < v` of every edge, in index order.
pub fn edge_list(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

pub fn num_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// One crossing on an edge, seen from that edge traversed from its smaller
/// endpoint to its larger one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossingEntry {
    pub partner: usize,
    /// The partner, traversed from its own smaller endpoint, arrives from the
    /// left of this edge.
    pub from_left: bool,
}

/// Combinatorial description: rotation at every vertex plus the ordered,
/// signed crossing list of every edge. This is what drawing files store.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrawingSpec {
    pub n: usize,
    pub rotation: Vec<Vec<usize>>,
    pub crossings: Vec<Vec<CrossingEntry>>,
}

/// Reference to one dart of a segment-level description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DartRef {
    pub edge: usize,
    /// Position of the segment along the edge chain.
    pub segment: usize,
    /// Points from the smaller endpoint towards the larger one.
    pub forward: bool,
}

/// Segment-level description able to express any planarized curve system,
/// including ones that violate goodness. Vertices `0..n` are graph vertices;
/// the rest are crossing points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDrawing {
    pub n: usize,
    pub chain_len: Vec<usize>,
    pub rotation: Vec<Vec<DartRef>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DrawingError {
    #[error("need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("points {0}, {1}, {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("edges {0}, {1} and {2} pass through one point")]
    ConcurrentCrossing(usize, usize, usize),
    #[error("rotation at vertex {0} is not a cyclic order of the other vertices")]
    BadRotation(usize),
    #[error("edge {edge}: bad crossing list ({reason})")]
    BadCrossingList { edge: usize, reason: &'static str },
    #[error("edges {0} and {1}: crossing lists disagree")]
    AsymmetricCrossing(usize, usize),
    #[error("dart of edge {edge}, segment {segment} is listed {count} times")]
    BadDartUse {
        edge: usize,
        segment: usize,
        count: usize,
    },
    #[error("chain of edge {0} is not a walk from its smaller to its larger endpoint")]
    BrokenChain(usize),
    #[error("map error: {0}")]
    Map(#[from] MapError),
    #[error("vertex {vertex} is not in the disc or on its triangle")]
    EndpointOutside { vertex: usize },
}

/// A reason a curve system is not a good drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoodViolation {
    EdgeThroughVertex { edge: usize, vertex: usize },
    SelfCrossing { edge: usize, vertex: usize },
    TriplePoint { vertex: usize },
    Touching { vertex: usize },
    AdjacentCrossing { edges: (usize, usize) },
    SamePairTwice { edges: (usize, usize) },
}

/// Summary returned by a successful goodness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodCertificate {
    pub crossings: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K4Type {
    Planar,
    /// The two crossing (disjoint) edges, by index, smaller first.
    Crossing(usize, usize),
}

/// A crossing point: the map vertex and the edges meeting there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingPoint {
    pub vertex: usize,
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Drawing {
    n: usize,
    map: PlanarMap,
    ends: Vec<(usize, usize)>,
    chains: Vec<Vec<usize>>,
    dart_edge: Vec<usize>,
    crossing_points: Vec<CrossingPoint>,
    cross_count: Vec<u8>,
    outer: Option<usize>,
    coords: Option<Vec<ExactPoint>>,
}

impl PartialEq for Drawing {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.map == other.map
            && self.chains == other.chains
            && self.outer == other.outer
            && self.coords == other.coords
    }
}

impl Drawing {
    /// Builds a drawing from its combinatorial description. Crossing vertices
    /// are numbered in lexicographic order of their edge pairs.
    pub fn from_spec(spec: &DrawingSpec) -> Result<Drawing, DrawingError> {
        Drawing::from_raw(&spec_to_raw(spec)?)
    }

    /// Builds a drawing from a segment-level description. Only structural
    /// validity is checked; see [`validate_good`] for goodness.
    pub fn from_raw(raw: &RawDrawing) -> Result<Drawing, DrawingError> {
        let n = raw.n;
        let m = num_edges(n);
        if n < 3 {
            return Err(DrawingError::TooFewVertices(n));
        }
        if raw.chain_len.len() != m {
            return Err(DrawingError::BadCrossingList {
                edge: raw.chain_len.len().min(m),
                reason: "wrong number of edges",
            });
        }
        let mut seg_off = Vec::with_capacity(m + 1);
        let mut total = 0;
        for (e, &len) in raw.chain_len.iter().enumerate() {
            if len == 0 {
                return Err(DrawingError::BadCrossingList {
                    edge: e,
                    reason: "empty chain",
                });
            }
            seg_off.push(total);
            total += len;
        }
        let nd = 2 * total;
        let dart_id = |r: &DartRef| 2 * (seg_off[r.edge] + r.segment) + usize::from(!r.forward);
        let mut vertex_of = vec![usize::MAX; nd];
        let mut next = vec![usize::MAX; nd];
        let mut uses = vec![0usize; nd];
        for (v, rot) in raw.rotation.iter().enumerate() {
            for r in rot {
                if r.edge >= m || r.segment >= raw.chain_len[r.edge] {
                    return Err(DrawingError::BadDartUse {
                        edge: r.edge,
                        segment: r.segment,
                        count: 0,
                    });
                }
            }
            for (i, r) in rot.iter().enumerate() {
                let d = dart_id(r);
                uses[d] += 1;
                if uses[d] > 1 {
                    return Err(DrawingError::BadDartUse {
                        edge: r.edge,
                        segment: r.segment,
                        count: uses[d],
                    });
                }
                vertex_of[d] = v;
                next[d] = dart_id(&rot[(i + 1) % rot.len()]);
            }
        }
        if let Some(d) = uses.iter().position(|&c| c == 0) {
            let s = d / 2;
            let e = seg_off.partition_point(|&o| o <= s) - 1;
            return Err(DrawingError::BadDartUse {
                edge: e,
                segment: s - seg_off[e],
                count: 0,
            });
        }
        let ends = edge_list(n);
        let mut chains = Vec::with_capacity(m);
        let mut dart_edge = vec![0; nd];
        for e in 0..m {
            let (u, v) = ends[e];
            let len = raw.chain_len[e];
            let chain: Vec<usize> = (0..len).map(|k| 2 * (seg_off[e] + k)).collect();
            if vertex_of[chain[0]] != u || vertex_of[chain[len - 1] + 1] != v {
                return Err(DrawingError::BrokenChain(e));
            }
            for k in 0..len - 1 {
                if vertex_of[chain[k] + 1] != vertex_of[chain[k + 1]] {
                    return Err(DrawingError::BrokenChain(e));
                }
            }
            for &d in &chain {
                dart_edge[d] = e;
                dart_edge[d + 1] = e;
            }
            chains.push(chain);
        }
        let twin: Vec<usize> = (0..nd).map(|d| d ^ 1).collect();
        let map = PlanarMap::new(twin, next, vertex_of)?;
        let mut drawing = Drawing {
            n,
            map,
            ends,
            chains,
            dart_edge,
            crossing_points: Vec::new(),
            cross_count: vec![0; m * m],
            outer: None,
            coords: None,
        };
        drawing.index_crossings();
        Ok(drawing)
    }

    fn index_crossings(&mut self) {
        let nv = self.map.num_vertices();
        let mut at: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for (e, chain) in self.chains.iter().enumerate() {
            for &d in &chain[1..] {
                at[self.map.origin(d)].push(e);
            }
        }
        let m = self.ends.len();
        for (x, mut edges) in at.into_iter().enumerate() {
            if x < self.n || edges.is_empty() {
                continue;
            }
            edges.sort_unstable();
            edges.dedup();
            for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    let (a, b) = (edges[i], edges[j]);
                    self.cross_count[a * m + b] = self.cross_count[a * m + b].saturating_add(1);
                    self.cross_count[b * m + a] = self.cross_count[b * m + a].saturating_add(1);
                }
            }
            self.crossing_points.push(CrossingPoint { vertex: x, edges });
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn map(&self) -> &PlanarMap {
        &self.map
    }
    pub fn num_edges(&self) -> usize {
        self.ends.len()
    }
    pub fn ends(&self, e: usize) -> (usize, usize) {
        self.ends[e]
    }
    pub fn edge(&self, u: usize, v: usize) -> usize {
        edge_index(self.n, u, v)
    }
    /// Forward darts of the chain of edge `e`, from its smaller endpoint.
    pub fn chain(&self, e: usize) -> &[usize] {
        &self.chains[e]
    }
    /// Edge owning the segment of dart `d`.
    pub fn dart_edge(&self, d: usize) -> usize {
        self.dart_edge[d]
    }
    /// Map vertex of graph vertex `v`; graph vertices keep their ids.
    pub fn graph_vertex(&self, v: usize) -> usize {
        v
    }
    pub fn is_graph_vertex(&self, x: usize) -> bool {
        x < self.n
    }
    pub fn crossing_points(&self) -> &[CrossingPoint] {
        &self.crossing_points
    }
    pub fn num_crossings(&self) -> usize {
        self.crossing_points.len()
    }
    pub fn crosses(&self, e: usize, g: usize) -> bool {
        self.cross_count[e * self.ends.len() + g] > 0
    }
    /// Whether edge `e` is crossed by any edge.
    pub fn is_crossed(&self, e: usize) -> bool {
        self.chains[e].len() > 1
    }
    pub fn outer(&self) -> Option<usize> {
        self.outer
    }
    pub fn set_outer(&mut self, f: Option<usize>) {
        self.outer = f;
    }
    pub fn coords(&self) -> Option<&[ExactPoint]> {
        self.coords.as_deref()
    }
    pub(crate) fn set_coords(&mut self, pts: Vec<ExactPoint>) {
        self.coords = Some(pts);
    }

    /// Dart leaving graph vertex `u` along edge `{u, w}`.
    pub fn dart_towards(&self, u: usize, w: usize) -> usize {
        let e = self.edge(u, w);
        let c = &self.chains[e];
        if u < w {
            c[0]
        } else {
            c[c.len() - 1] ^ 1
        }
    }

    /// Ordered, signed crossings along edge `e`.
    pub fn edge_crossings(&self, e: usize) -> Vec<CrossingEntry> {
        let chain = &self.chains[e];
        let mut out = Vec::with_capacity(chain.len() - 1);
        for k in 1..chain.len() {
            let out_dart = chain[k];
            let back = chain[k - 1] ^ 1;
            let rot: Vec<usize> = self.map.darts_from(out_dart).collect();
            for (i, &d) in rot.iter().enumerate() {
                let g = self.dart_edge[d];
                if g == e {
                    continue;
                }
                // the dart of g pointing back towards g's smaller endpoint
                let is_back = d & 1 == 1;
                if !is_back {
                    continue;
                }
                let back_pos = rot.iter().position(|&x| x == back).unwrap_or(usize::MAX);
                out.push(CrossingEntry {
                    partner: g,
                    from_left: i < back_pos,
                });
            }
        }
        out
    }

    /// Counterclockwise neighbor order at every graph vertex, starting with
    /// the smallest neighbor.
    pub fn rotation_system(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|u| {
                let rot: Vec<usize> = self
                    .map
                    .darts_at(u)
                    .map(|d| {
                        let (a, b) = self.ends[self.dart_edge[d]];
                        if a == u {
                            b
                        } else {
                            a
                        }
                    })
                    .collect();
                let start = rot
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, &w)| w)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                rot[start..].iter().chain(&rot[..start]).copied().collect()
            })
            .collect()
    }

    /// Combinatorial description of this drawing.
    pub fn to_spec(&self) -> DrawingSpec {
        DrawingSpec {
            n: self.n,
            rotation: self.rotation_system(),
            crossings: (0..self.ends.len()).map(|e| self.edge_crossings(e)).collect(),
        }
    }

    /// Code shared exactly by drawings that are isomorphic as sphere maps,
    /// allowing vertex relabeling and reflection.
    pub fn canonical_code(&self) -> Vec<usize> {
        let color: Vec<u8> = (0..self.map.num_vertices())
            .map(|x| u8::from(self.is_graph_vertex(x)))
            .collect();
        self.map.canonical_code(&color)
    }

    pub fn k4_type(&self, vs: [usize; 4]) -> K4Type {
        let [a, b, c, d] = vs;
        for (p, q) in [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))] {
            let e = self.edge(p.0, p.1);
            let g = self.edge(q.0, q.1);
            if self.crosses(e, g) {
                return K4Type::Crossing(e.min(g), e.max(g));
            }
        }
        K4Type::Planar
    }

    /// The two closed discs bounded by the triangle on `t`. The first contains
    /// the face on the left of the first edge of `t` walked from its smallest to
    /// its middle vertex.
    pub fn triangle_sides(&self, t: [usize; 3]) -> (TriangleDisc, TriangleDisc) {
        let mut t = t;
        t.sort_unstable();
        let tri = [
            self.edge(t[0], t[1]),
            self.edge(t[1], t[2]),
            self.edge(t[0], t[2]),
        ];
        let blocked = |d: usize| tri.contains(&self.dart_edge[d]);
        let seed = self.map.left_face(self.chains[tri[0]][0]);
        let left = self.map.flood_faces(&[seed], blocked);
        let right: Vec<bool> = left.iter().map(|&b| !b).collect();
        let mut lv = Vec::new();
        let mut rv = Vec::new();
        for w in 0..self.n {
            if t.contains(&w) {
                continue;
            }
            if left[self.map.face_of(self.map.first_dart(w))] {
                lv.push(w);
            } else {
                rv.push(w);
            }
        }
        (
            TriangleDisc {
                triangle: t,
                faces: left,
                contained: lv,
            },
            TriangleDisc {
                triangle: t,
                faces: right,
                contained: rv,
            },
        )
    }

    /// Whether the whole chain of edge `e` lies in the closed disc.
    pub fn edge_in_disc(&self, e: usize, disc: &TriangleDisc) -> Result<bool, DrawingError> {
        let (u, v) = self.ends[e];
        for w in [u, v] {
            if !disc.triangle.contains(&w) && !disc.contained.contains(&w) {
                return Err(DrawingError::EndpointOutside { vertex: w });
            }
        }
        Ok(self.chain_in_faces(e, &disc.triangle, &disc.faces))
    }

    /// Chain of `e` inside the closed region given by a face set whose
    /// boundary is made of edges of triangle `t`.
    pub(crate) fn chain_in_faces(&self, e: usize, t: &[usize; 3], faces: &[bool]) -> bool {
        let (u, v) = self.ends[e];
        if t.contains(&u) && t.contains(&v) {
            return true;
        }
        self.chains[e]
            .iter()
            .all(|&d| faces[self.map.face_of(d)])
    }

    /// Validates goodness; see [`validate_good`].
    pub fn validate_good(&self) -> Result<GoodCertificate, GoodViolation> {
        validate_good(self)
    }
}

/// A closed disc bounded by a drawn triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleDisc {
    pub triangle: [usize; 3],
    faces: Vec<bool>,
    pub contained: Vec<usize>,
}

impl TriangleDisc {
    pub fn contains_face(&self, f: usize) -> bool {
        self.faces[f]
    }
    pub fn face_mask(&self) -> &[bool] {
        &self.faces
    }
    pub fn faces(&self) -> Vec<usize> {
        (0..self.faces.len()).filter(|&f| self.faces[f]).collect()
    }
    pub fn is_empty(&self) -> bool {
        self.contained.is_empty()
    }
}

/// Checks the three goodness clauses and that every crossing is transversal.
pub fn validate_good(d: &Drawing) -> Result<GoodCertificate, GoodViolation> {
    let map = &d.map;
    for (e, chain) in d.chains.iter().enumerate() {
        let mut seen = Vec::new();
        for &x in &chain[1..] {
            let v = map.origin(x);
            if v < d.n {
                return Err(GoodViolation::EdgeThroughVertex { edge: e, vertex: v });
            }
            if seen.contains(&v) {
                return Err(GoodViolation::SelfCrossing { edge: e, vertex: v });
            }
            seen.push(v);
        }
    }
    for cp in &d.crossing_points {
        let x = cp.vertex;
        if map.degree(x) != 4 || cp.edges.len() != 2 {
            return Err(GoodViolation::TriplePoint { vertex: x });
        }
        let rot: Vec<usize> = map.darts_at(x).collect();
        if d.dart_edge[rot[0]] != d.dart_edge[rot[2]] {
            return Err(GoodViolation::Touching { vertex: x });
        }
    }
    let m = d.ends.len();
    for e in 0..m {
        for g in e + 1..m {
            let c = d.cross_count[e * m + g];
            if c == 0 {
                continue;
            }
            let (a, b) = d.ends[e];
            let (p, q) = d.ends[g];
            if a == p || a == q || b == p || b == q {
                return Err(GoodViolation::AdjacentCrossing { edges: (e, g) });
            }
            if c > 1 {
                return Err(GoodViolation::SamePairTwice { edges: (e, g) });
            }
        }
    }
    Ok(GoodCertificate {
        crossings: d.crossing_points.len(),
    })
}

fn spec_to_raw(spec: &DrawingSpec) -> Result<RawDrawing, DrawingError> {
    let n = spec.n;
    if n < 3 {
        return Err(DrawingError::TooFewVertices(n));
    }
    let m = num_edges(n);
    if spec.rotation.len() != n {
        return Err(DrawingError::BadRotation(spec.rotation.len().min(n)));
    }
    if spec.crossings.len() != m {
        return Err(DrawingError::BadCrossingList {
            edge: spec.crossings.len().min(m),
            reason: "wrong number of edges",
        });
    }
    for (u, rot) in spec.rotation.iter().enumerate() {
        let mut s = rot.clone();
        s.sort_unstable();
        let want: Vec<usize> = (0..n).filter(|&w| w != u).collect();
        if s != want {
            return Err(DrawingError::BadRotation(u));
        }
    }
    // position of g in e's list
    let mut pos = std::collections::HashMap::new();
    for (e, list) in spec.crossings.iter().enumerate() {
        for (i, c) in list.iter().enumerate() {
            if c.partner >= m || c.partner == e {
                return Err(DrawingError::BadCrossingList {
                    edge: e,
                    reason: "invalid partner",
                });
            }
            if pos.insert((e, c.partner), (i, c.from_left)).is_some() {
                return Err(DrawingError::BadCrossingList {
                    edge: e,
                    reason: "partner listed twice",
                });
            }
        }
    }
    for (&(e, g), &(_, s)) in &pos {
        match pos.get(&(g, e)) {
            Some(&(_, t)) if t != s => {}
            _ => return Err(DrawingError::AsymmetricCrossing(e.min(g), e.max(g))),
        }
    }
    let mut pairs: Vec<(usize, usize)> = pos.keys().copied().filter(|&(e, g)| e < g).collect();
    pairs.sort_unstable();

    let chain_len: Vec<usize> = spec.crossings.iter().map(|l| l.len() + 1).collect();
    let mut rotation: Vec<Vec<DartRef>> = Vec::with_capacity(n + pairs.len());
    for (u, rot) in spec.rotation.iter().enumerate() {
        rotation.push(
            rot.iter()
                .map(|&w| {
                    let e = edge_index(n, u, w);
                    if u < w {
                        DartRef {
                            edge: e,
                            segment: 0,
                            forward: true,
                        }
                    } else {
                        DartRef {
                            edge: e,
                            segment: chain_len[e] - 1,
                            forward: false,
                        }
                    }
                })
                .collect(),
        );
    }
    for &(e, g) in &pairs {
        let (i, g_from_left) = pos[&(e, g)];
        let (j, _) = pos[&(g, e)];
        let e_next = DartRef {
            edge: e,
            segment: i + 1,
            forward: true,
        };
        let e_prev = DartRef {
            edge: e,
            segment: i,
            forward: false,
        };
        let g_next = DartRef {
            edge: g,
            segment: j + 1,
            forward: true,
        };
        let g_prev = DartRef {
            edge: g,
            segment: j,
            forward: false,
        };
        rotation.push(if g_from_left {
            vec![e_next, g_prev, e_prev, g_next]
        } else {
            vec![e_next, g_next, e_prev, g_prev]
        });
    }
    Ok(RawDrawing {
        n,
        chain_len,
        rotation,
    })
}

/// Rectilinear drawing of `K_n` on exact integer points.
pub fn from_points(points: &[ExactPoint]) -> Result<Drawing, DrawingError> {
    points::from_points(points)
}
