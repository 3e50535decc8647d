//! Extension of a face-convex drawing of `K_n` to an arrangement of
//! pseudolines, one per edge.
//!
//! The construction runs on a mutable copy of the planarized drawing and
//! proceeds in three phases. First every edge off the boundary of the witness
//! face `F` is extended inside the disc away from `F` to an arc whose ends lie
//! on the boundary cycle. Then a circle is drawn inside `F` and the boundary
//! edges are extended through `F` to antipodal points of it. Finally the
//! interior arcs are completed through `F` in the same way. Every extension
//! follows a breadth-first path in the dual of a region, so it crosses each
//! curve separating its ends exactly once.

mod frame;
mod work;

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{validate_arrangement, ArcRecord, ArrViolation, DiskArrangement, SlotEnd};
use crate::convexity::{convex_hull, is_face_convex_witness, SideTable};
use crate::drawing::Drawing;

pub use frame::{EdgeFrame, EndFrame};
use work::{Kind, RouteEnd, Work, CIRCLE};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PseudolinearError {
    #[error("face {face} is not a face-convexity witness: triangle {triangle:?} has a non-convex side away from it")]
    NotFaceConvex { face: usize, triangle: [usize; 3] },
    #[error("face {0} does not exist")]
    UnknownFace(usize),
    #[error("edge {0:?} lies on the boundary of the witness face")]
    BoundaryEdge((usize, usize)),
    #[error("internal error: {0}")]
    InternalError(String),
}

fn internal(msg: impl Into<String>) -> PseudolinearError {
    PseudolinearError::InternalError(msg.into())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PseudolinearizeOptions {
    /// Shuffle the order in which interior edges are extended.
    pub order_seed: Option<u64>,
}

/// Restricted stretches of a boundary edge closing an end region, and the
/// gap chosen for the new arc end.
///
/// End points of earlier arcs on the boundary edge are numbered `1..=len`
/// from its side-1 end. Gap `g` lies between points `g` and `g + 1`, with
/// point `0` the side-1 end and point `len + 1` the side-2 end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionIntervals {
    pub vertex: usize,
    /// Side-1 end, side-2 end.
    pub boundary_edge: (usize, usize),
    /// Edge of the arc ending at each point, in order from the side-1 end.
    pub points: Vec<usize>,
    /// Points covered by restrictions anchored at the side-1 end: `1..=side1_reach`.
    pub side1_reach: usize,
    /// Points covered by restrictions anchored at the side-2 end: the last `side2_reach`.
    pub side2_reach: usize,
    /// `side1_reach` at the `u` end and `len - side2_reach` at the `v` end,
    /// so the arc ends right past the restrictions anchored on its own side.
    pub gap: usize,
}

/// Interior arc of one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaArc {
    pub edge: usize,
    /// Other curves met along the arc from its `u` end; at a graph vertex the
    /// curves through it are listed in increasing order.
    pub meets: Vec<usize>,
    /// Earlier arcs that every admissible extension has to cross.
    pub unavoidable: Vec<usize>,
    pub restrictions: Vec<RestrictionIntervals>,
}

/// Extension of a boundary edge through the witness face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaArc {
    pub edge: usize,
    /// Other boundary curves met, in order along the curve.
    pub meets: Vec<usize>,
}

/// Edge set and vertex set of both side paths of an edge frame.
struct PathSets {
    edge: usize,
    ends: (usize, usize),
    verts: [Vec<bool>; 2],
    edges: [Vec<bool>; 2],
}

/// Staged builder for the pseudoline extension.
pub struct Pseudolinearizer<'a> {
    d: &'a Drawing,
    boundary: Vec<usize>,
    sides: SideTable,
    frames: Vec<Option<EdgeFrame>>,
    order: Vec<usize>,
    work: Work,
    /// Per boundary vertex, the drawing dart after which the sector inside
    /// the witness face opens.
    face_angle: Vec<usize>,
    alpha_ends: Vec<Option<[usize; 2]>>,
    /// Circle darts in circle order, each with the annulus on its right.
    circle: Vec<usize>,
    done: Vec<bool>,
}

/// Frame of edge `e` for witness face `f`.
pub fn edge_frame(d: &Drawing, f: usize, e: usize) -> Result<EdgeFrame, PseudolinearError> {
    let boundary = boundary_cycle(d, f)?;
    let (u, v) = d.ends(e);
    let sides = crate::convexity::side_sets(d, f, u, v);
    frame::build_frame(d, f, &boundary, sides)
}

fn boundary_cycle(d: &Drawing, f: usize) -> Result<Vec<usize>, PseudolinearError> {
    if f >= d.map().num_faces() {
        return Err(PseudolinearError::UnknownFace(f));
    }
    let all: Vec<usize> = (0..d.n()).collect();
    convex_hull(d, f, &all)
        .map(|h| h.cycle)
        .map_err(|_| internal(format!("face {f} is not bounded by a cycle of the graph")))
}

pub fn pseudolinearize(d: &Drawing, f: usize) -> Result<DiskArrangement, PseudolinearError> {
    pseudolinearize_with(d, f, &PseudolinearizeOptions::default())
}

pub fn pseudolinearize_with(
    d: &Drawing,
    f: usize,
    opts: &PseudolinearizeOptions,
) -> Result<DiskArrangement, PseudolinearError> {
    let mut b = Pseudolinearizer::new(d, f, opts)?;
    b.build_alphas()?;
    b.build_betas()?;
    let arr = b.complete_to_pseudolines()?;
    validate_arrangement(&arr, true).map_err(|v| internal(format!("output arrangement is invalid: {v:?}")))?;
    verify_extension(d, &arr).map_err(|v| internal(format!("output does not extend the drawing: {v:?}")))?;
    Ok(arr)
}

impl<'a> Pseudolinearizer<'a> {
    pub fn new(d: &'a Drawing, f: usize, opts: &PseudolinearizeOptions) -> Result<Self, PseudolinearError> {
        if f >= d.map().num_faces() {
            return Err(PseudolinearError::UnknownFace(f));
        }
        is_face_convex_witness(d, f).map_err(|t| PseudolinearError::NotFaceConvex { face: f, triangle: t })?;
        let boundary = boundary_cycle(d, f)?;
        let sides = SideTable::new(d, f);
        let m = d.num_edges();
        let mut frames = Vec::with_capacity(m);
        for e in 0..m {
            match frame::build_frame(d, f, &boundary, sides.sets(d, e)) {
                Ok(fr) => frames.push(Some(fr)),
                Err(PseudolinearError::BoundaryEdge(_)) => frames.push(None),
                Err(err) => return Err(err),
            }
        }
        let mut order: Vec<usize> = (0..m).filter(|&e| frames[e].is_some()).collect();
        if let Some(seed) = opts.order_seed {
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        let map = d.map();
        let mut face_angle = vec![usize::MAX; d.n()];
        for &v in &boundary {
            let dd = map
                .darts_at(v)
                .find(|&x| map.face_of(x) == f)
                .ok_or_else(|| internal("boundary vertex misses the witness face"))?;
            face_angle[v] = map.prev(dd);
        }
        Ok(Pseudolinearizer {
            d,
            boundary,
            sides,
            frames,
            order,
            work: Work::from_drawing(d),
            face_angle,
            alpha_ends: vec![None; m],
            circle: Vec::new(),
            done: vec![false; m],
        })
    }

    /// Interior edges in processing order.
    pub fn edge_order(&self) -> &[usize] {
        &self.order
    }

    /// Boundary cycle of the witness face.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn frame(&self, e: usize) -> Option<&EdgeFrame> {
        self.frames[e].as_ref()
    }

    fn frame_or_err(&self, e: usize) -> Result<&EdgeFrame, PseudolinearError> {
        self.frames[e]
            .as_ref()
            .ok_or(PseudolinearError::BoundaryEdge(self.d.ends(e)))
    }

    fn path_sets(&self, fr: &EdgeFrame) -> PathSets {
        let n = self.d.n();
        let m = self.d.num_edges();
        let mut verts = [vec![false; n], vec![false; n]];
        let mut edges = [vec![false; m], vec![false; m]];
        for j in 0..2 {
            for &x in &fr.paths[j] {
                verts[j][x] = true;
            }
            for (a, b) in fr.path_edges(j) {
                edges[j][self.d.edge(a, b)] = true;
            }
        }
        PathSets {
            edge: self.d.edge(fr.edge.0, fr.edge.1),
            ends: fr.edge,
            verts,
            edges,
        }
    }

    /// Which side paths (bit 0: side 1, bit 1: side 2) the curve `c`
    /// touches at vertex `x`. Passing through an end of the edge or crossing
    /// the edge counts for both paths.
    fn touch(&self, x: usize, c: usize, ps: &PathSets) -> u8 {
        let w = &self.work;
        match w.kind[x] {
            Kind::Graph => {
                if x == ps.ends.0 || x == ps.ends.1 {
                    3
                } else {
                    ps.verts[0][x] as u8 | (ps.verts[1][x] as u8) << 1
                }
            }
            Kind::Crossing => w
                .rotation(x)
                .into_iter()
                .find(|&y| w.curve[y] != c && w.drawn[y])
                .map(|y| {
                    let g = w.curve[y];
                    if g == ps.edge {
                        3
                    } else {
                        ps.edges[0][g] as u8 | (ps.edges[1][g] as u8) << 1
                    }
                })
                .unwrap_or(0),
            _ => 0,
        }
    }

    /// Vertices of the interior arc of `e`, from its `u` end.
    fn alpha_vertices(&self, e: usize) -> Result<Vec<usize>, PseudolinearError> {
        let ends = self.alpha_ends[e].ok_or_else(|| internal(format!("arc of edge {e} not built")))?;
        let start = self.work.rotation(ends[0]).into_iter().find(|&y| self.work.curve[y] == e);
        let start = start.ok_or_else(|| internal(format!("arc of edge {e} has no end dart")))?;
        Ok(self.work.walk(start))
    }

    /// Whether the built arc of edge `j` is unavoidable for edge `i`: it
    /// touches both side paths of `i`.
    pub fn classify_unavoidable(&self, j: usize, i: usize) -> Result<bool, PseudolinearError> {
        let fr = self.frame_or_err(i)?;
        let ps = self.path_sets(fr);
        let mut bits = 0;
        for x in self.alpha_vertices(j)? {
            bits |= self.touch(x, j, &ps);
        }
        Ok(bits == 3)
    }

    /// Points touching each side path of `i` along the built arc of `j`.
    fn path_touch_counts(&self, j: usize, i: usize) -> Result<[usize; 2], PseudolinearError> {
        let ps = self.path_sets(self.frame_or_err(i)?);
        let mut counts = [0, 0];
        for x in self.alpha_vertices(j)? {
            let t = self.touch(x, j, &ps);
            counts[0] += (t & 1) as usize;
            counts[1] += (t >> 1) as usize;
        }
        Ok(counts)
    }

    /// Arc end points on boundary edge `(a1, a2)` from `a1`, each with the
    /// dart of its arc, and the segments of the edge grouped by how many end
    /// points precede them.
    fn boundary_points(&self, a1: usize, a2: usize) -> Result<(Vec<usize>, Vec<Vec<usize>>), PseudolinearError> {
        let w = &self.work;
        let fe = self.d.edge(a1, a2);
        let start = w
            .curve_dart(a1, fe, true)
            .ok_or_else(|| internal("boundary edge has no dart at its end"))?;
        let darts = w.walk_darts(start);
        if w.target(*darts.last().unwrap()) != a2 {
            return Err(internal("boundary edge walk missed its far end"));
        }
        let mut points = Vec::new();
        let mut groups = vec![vec![darts[0]]];
        for &s in &darts[1..] {
            let z = w.origin[s];
            if w.kind[z] == Kind::Eta {
                let ad = w
                    .rotation(z)
                    .into_iter()
                    .find(|&y| w.curve[y] != fe)
                    .ok_or_else(|| internal("end point without an arc"))?;
                points.push(ad);
                groups.push(Vec::new());
            }
            groups.last_mut().unwrap().push(s);
        }
        Ok((points, groups))
    }

    /// Restrictions on where the arc of `i` may end at its end `a`.
    pub fn restrictions(&self, i: usize, a: usize) -> Result<RestrictionIntervals, PseudolinearError> {
        let fr = self.frame_or_err(i)?;
        let ef = fr
            .end(a)
            .ok_or_else(|| internal(format!("vertex {a} needs no extension for edge {i}")))?;
        let ps = self.path_sets(fr);
        let (a1, a2) = ef.boundary_edge;
        let (arc_darts, _) = self.boundary_points(a1, a2)?;
        let w = &self.work;
        let mut points = Vec::new();
        let mut side1_reach = 0;
        let mut side2_first = usize::MAX;
        for (k, &ad) in arc_darts.iter().enumerate() {
            let pos = k + 1;
            let j = w.curve[ad];
            points.push(j);
            if !self.classify_unavoidable(j, i)? {
                continue;
            }
            let walk = w.walk(ad);
            let hit = walk[1..]
                .iter()
                .map(|&x| (x, self.touch(x, j, &ps)))
                .find(|&(_, t)| t != 0)
                .ok_or_else(|| internal("unavoidable arc never meets the side paths"))?;
            let anchor = if hit.0 == ps.ends.0 || hit.0 == ps.ends.1 {
                let (p, q) = self.d.ends(j);
                let z = if p == hit.0 { q } else { p };
                3 - self.sides.side(i, z)
            } else {
                match hit.1 {
                    1 => 1,
                    2 => 2,
                    _ => return Err(internal("arc reaches the edge before leaving the end region")),
                }
            };
            if anchor == 1 {
                side1_reach = side1_reach.max(pos);
            } else {
                side2_first = side2_first.min(pos);
            }
        }
        let len = points.len();
        let side2_reach = if side2_first == usize::MAX { 0 } else { len + 1 - side2_first };
        if side1_reach + side2_reach > len {
            return Err(internal(format!(
                "restrictions at vertex {a} for edge {i} overlap"
            )));
        }
        let gap = if a == fr.edge.0 { side1_reach } else { len - side2_reach };
        Ok(RestrictionIntervals {
            vertex: a,
            boundary_edge: (a1, a2),
            points,
            side1_reach,
            side2_reach,
            gap,
        })
    }

    /// Dart after which an extension of curve `c` leaves graph vertex `x`
    /// inside the sector that opens after drawn dart `lo`. Extensions in a
    /// sector are ordered like the drawn darts of their curves, counted
    /// counterclockwise from the end of the sector.
    fn ext_slot(&self, x: usize, lo: usize, c: usize) -> Result<usize, PseudolinearError> {
        let w = &self.work;
        let rot = w.rotation_from(lo);
        let hi = rot
            .iter()
            .position(|&y| y != lo && w.drawn[y])
            .ok_or_else(|| internal(format!("vertex {x} has a single drawn dart")))?;
        let ranked: Vec<usize> = rot[hi..]
            .iter()
            .chain(rot[..hi].iter())
            .filter(|&&y| w.drawn[y])
            .map(|&y| w.curve[y])
            .collect();
        let rank = |g: usize| ranked.iter().position(|&h| h == g);
        let rc = rank(c).ok_or_else(|| internal(format!("curve {c} has no drawn dart at vertex {x}")))?;
        let mut at = lo;
        for &y in &rot[1..hi] {
            if rank(w.curve[y]).ok_or_else(|| internal("extension of a curve not drawn here"))? < rc {
                at = y;
            } else {
                break;
            }
        }
        Ok(at)
    }

    /// Builds the interior arcs of all interior edges, in processing order.
    pub fn build_alphas(&mut self) -> Result<Vec<AlphaArc>, PseudolinearError> {
        let order = self.order.clone();
        order.into_iter().map(|e| self.build_alpha(e)).collect()
    }

    /// Extends edge `i` inside the disc away from the witness face.
    pub fn build_alpha(&mut self, i: usize) -> Result<AlphaArc, PseudolinearError> {
        if self.alpha_ends[i].is_some() {
            return Err(internal(format!("arc of edge {i} already built")));
        }
        let fr = self.frame_or_err(i)?.clone();
        let built: Vec<usize> = (0..self.d.num_edges()).filter(|&j| self.alpha_ends[j].is_some()).collect();
        let mut unavoidable = Vec::new();
        for &j in &built {
            let counts = self.path_touch_counts(j, i)?;
            if counts[0] > 2 || counts[1] > 2 {
                return Err(internal(format!(
                    "arc of edge {j} meets a side path of edge {i} more than twice"
                )));
            }
            if self.classify_unavoidable(j, i)? {
                unavoidable.push(j);
            }
        }
        let (u, v) = fr.edge;
        let mut ends = [u, v];
        let mut restrictions = Vec::new();
        for ef in &fr.ends {
            let rs = self.restrictions(i, ef.vertex)?;
            let (_, groups) = self.boundary_points(rs.boundary_edge.0, rs.boundary_edge.1)?;
            let slot = self.ext_slot(ef.vertex, ef.corner.0, i)?;
            let faces = self.work.faces();
            let mut qcurves = Vec::new();
            for k in 0..ef.cycle.len() {
                qcurves.push(self.d.edge(ef.cycle[k], ef.cycle[(k + 1) % ef.cycle.len()]));
            }
            let w = &self.work;
            let blocked = |d: usize| w.drawn[d] && qcurves.contains(&w.curve[d]);
            let (region, parent) = w.explore(&faces, faces.id[w.next[slot]], &blocked);
            let tgt = groups[rs.gap]
                .iter()
                .flat_map(|&s| [s, w.twin[s]])
                .find(|&s| region[faces.id[s]])
                .ok_or_else(|| internal(format!("boundary gap unreachable from vertex {}", ef.vertex)))?;
            let path = w.path_to(&faces, &parent, faces.id[tgt]);
            let z = self.work.route(i, slot, &path, RouteEnd::Split(tgt, Kind::Eta));
            ends[if ef.vertex == u { 0 } else { 1 }] = z;
            restrictions.push(rs);
        }
        self.alpha_ends[i] = Some(ends);
        let verts = self.alpha_vertices(i)?;
        let vset: BTreeSet<usize> = verts.iter().copied().collect();
        for &j in &built {
            let shared = self.alpha_vertices(j)?.iter().filter(|x| vset.contains(x)).count();
            if shared > 1 {
                return Err(internal(format!("arcs of edges {i} and {j} meet {shared} times")));
            }
            if shared == 0 && unavoidable.contains(&j) {
                return Err(internal(format!("arc of edge {i} misses unavoidable arc of edge {j}")));
            }
        }
        let meets = self.meets(&verts, i);
        self.check_crossed_edges(i, &verts)?;
        Ok(AlphaArc {
            edge: i,
            meets,
            unavoidable,
            restrictions,
        })
    }

    fn meets(&self, verts: &[usize], c: usize) -> Vec<usize> {
        let w = &self.work;
        let mut out = Vec::new();
        for &x in verts {
            let mut here: Vec<usize> = w
                .rotation(x)
                .into_iter()
                .map(|y| w.curve[y])
                .filter(|&g| g != c && g != CIRCLE)
                .collect();
            here.sort_unstable();
            here.dedup();
            out.extend(here);
        }
        out
    }

    /// Every drawn edge met by the extensions of `i` has an end on each side.
    fn check_crossed_edges(&self, i: usize, verts: &[usize]) -> Result<(), PseudolinearError> {
        let w = &self.work;
        for &x in verts {
            if !matches!(w.kind[x], Kind::Crossing | Kind::Eta) {
                continue;
            }
            let drawn_here = w.rotation(x).into_iter().any(|y| w.curve[y] == i && w.drawn[y]);
            if drawn_here {
                continue;
            }
            for y in w.rotation(x) {
                let g = w.curve[y];
                if g == i || !w.drawn[y] {
                    continue;
                }
                let (p, q) = self.d.ends(g);
                let s = &self.sides;
                let split = (s.in_side(i, p, 1) && s.in_side(i, q, 2)) || (s.in_side(i, p, 2) && s.in_side(i, q, 1));
                if !split {
                    return Err(internal(format!("arc of edge {i} crosses edge {g} within one side")));
                }
            }
        }
        Ok(())
    }

    /// Extends curve `c` from the sectors after `s1` and `s2` to antipodal
    /// points of the circle, without crossing drawn segments, the circle or
    /// the curves in `barriers`.
    fn extend_to_circle(&mut self, c: usize, s1: usize, s2: usize, barriers: &[usize]) -> Result<(), PseudolinearError> {
        let faces = self.work.faces();
        let w = &self.work;
        let blocked = |d: usize| {
            let g = w.curve[d];
            w.drawn[d] || g == CIRCLE || g == c || barriers.contains(&g)
        };
        let (r1, p1) = w.explore(&faces, faces.id[w.next[s1]], &blocked);
        let (r2, _) = w.explore(&faces, faces.id[w.next[s2]], &blocked);
        let len = self.circle.len();
        let half = len / 2;
        let s = (0..len)
            .find(|&s| r1[faces.id[self.circle[s]]] && r2[faces.id[self.circle[(s + half) % len]]])
            .ok_or_else(|| internal(format!("no antipodal circle segments reachable for curve {c}")))?;
        let (t1, t2) = (self.circle[s], self.circle[(s + half) % len]);
        let path = w.path_to(&faces, &p1, faces.id[t1]);
        self.attach_to_circle(c, s1, &path, t1);
        let faces = self.work.faces();
        let w = &self.work;
        let blocked = |d: usize| {
            let g = w.curve[d];
            w.drawn[d] || g == CIRCLE || g == c || barriers.contains(&g)
        };
        let (r2, p2) = w.explore(&faces, faces.id[w.next[s2]], &blocked);
        if !r2[faces.id[t2]] {
            return Err(internal(format!("second end of curve {c} lost its circle segment")));
        }
        let path = w.path_to(&faces, &p2, faces.id[t2]);
        self.attach_to_circle(c, s2, &path, t2);
        Ok(())
    }

    fn attach_to_circle(&mut self, c: usize, start: usize, path: &[usize], seg: usize) {
        let z = self.work.route(c, start, path, RouteEnd::Split(seg, Kind::Circle));
        let pos = self.circle.iter().position(|&g| g == seg).unwrap();
        self.circle.insert(pos + 1, self.work.vdart[z]);
    }

    /// Extends the boundary edges through the witness face, in cycle order.
    pub fn build_betas(&mut self) -> Result<Vec<BetaArc>, PseudolinearError> {
        if !self.circle.is_empty() {
            return Err(internal("boundary arcs already built"));
        }
        let cyc = self.boundary.clone();
        let k = cyc.len();
        let mut curves = Vec::with_capacity(k);
        for i in 1..=k {
            let (x, y) = (cyc[i - 1], cyc[i % k]);
            let c = self.d.edge(x, y);
            curves.push(c);
            let sx = self.ext_slot(x, self.face_angle[x], c)?;
            let sy = self.ext_slot(y, self.face_angle[y], c)?;
            if i == 1 {
                let (g0, g1, _) = self.work.open_circle(c, sx);
                self.circle = vec![g0, g1];
                let faces = self.work.faces();
                let corner = self.work.twin[g0];
                if faces.id[self.work.next[sy]] != faces.id[self.work.next[corner]] {
                    return Err(internal("circle is not inside the witness face"));
                }
                self.work.route(c, sy, &[], RouteEnd::Corner(corner));
            } else {
                let mut barriers = vec![curves[i - 2]];
                if i == k {
                    barriers.push(curves[0]);
                }
                self.extend_to_circle(c, sx, sy, &barriers)?;
            }
            self.done[c] = true;
        }
        let mut out = Vec::with_capacity(k);
        for &c in &curves {
            let verts = self.curve_vertices(c)?;
            let meets = self.meets(&verts, c).into_iter().filter(|g| curves.contains(g)).collect();
            out.push(BetaArc { edge: c, meets });
        }
        Ok(out)
    }

    /// Vertices of a curve that reaches the circle, from one circle point.
    fn curve_vertices(&self, c: usize) -> Result<Vec<usize>, PseudolinearError> {
        let w = &self.work;
        let start = self
            .circle
            .iter()
            .map(|&g| w.origin[g])
            .find_map(|z| w.rotation(z).into_iter().find(|&y| w.curve[y] == c))
            .ok_or_else(|| internal(format!("curve {c} does not reach the circle")))?;
        Ok(w.walk(start))
    }

    /// Completes every interior arc through the witness face and reads off
    /// the arrangement.
    pub fn complete_to_pseudolines(&mut self) -> Result<DiskArrangement, PseudolinearError> {
        if self.circle.is_empty() {
            return Err(internal("boundary arcs not built"));
        }
        for e in self.order.clone() {
            let ends = self.alpha_ends[e].ok_or_else(|| internal(format!("arc of edge {e} not built")))?;
            let mut slots = [0; 2];
            for (k, &z) in ends.iter().enumerate() {
                slots[k] = match self.work.kind[z] {
                    Kind::Eta => self.face_side_slot(z, e)?,
                    _ => self.ext_slot(z, self.face_angle[z], e)?,
                };
            }
            let verts = self.alpha_vertices(e)?;
            let lambda: Vec<usize> = self.meets(&verts, e).into_iter().filter(|&g| self.done[g]).collect();
            self.extend_to_circle(e, slots[0], slots[1], &lambda)?;
            self.done[e] = true;
        }
        self.read_arrangement()
    }

    /// Sector of an arc end point that lies in the witness face.
    fn face_side_slot(&self, z: usize, e: usize) -> Result<usize, PseudolinearError> {
        let w = &self.work;
        let rot = w.rotation(z);
        if rot.len() != 3 {
            return Err(internal(format!("end point {z} has degree {}", rot.len())));
        }
        let k = rot
            .iter()
            .position(|&y| w.curve[y] == e)
            .ok_or_else(|| internal("end point without its arc"))?;
        // the sector between the two boundary darts not containing the arc
        Ok(rot[(k + 1) % 3])
    }

    fn check_antipodal(&self) -> Result<(), PseudolinearError> {
        let w = &self.work;
        for x in 0..w.kind.len() {
            if w.kind[x] == Kind::Circle {
                continue;
            }
            let rot = w.rotation(x);
            let deg = rot.len();
            if deg % 2 == 1 || (0..deg).any(|i| w.curve[rot[i]] != w.curve[rot[(i + deg / 2) % deg]]) {
                return Err(internal(format!("curves through vertex {x} do not all cross there")));
            }
        }
        Ok(())
    }

    fn read_arrangement(&self) -> Result<DiskArrangement, PseudolinearError> {
        let m = self.d.num_edges();
        if let Some(e) = (0..m).find(|&e| !self.done[e]) {
            return Err(internal(format!("curve {e} is incomplete")));
        }
        self.check_antipodal()?;
        let w = &self.work;
        // circle darts run clockwise around the disc; list the points counterclockwise
        let points: Vec<usize> = self.circle.iter().rev().map(|&g| w.origin[g]).collect();
        let mut slots = Vec::with_capacity(points.len());
        let mut seen = vec![false; m];
        let mut start_dart = vec![usize::MAX; m];
        for &z in &points {
            let d = w
                .rotation(z)
                .into_iter()
                .find(|&y| w.curve[y] != CIRCLE)
                .ok_or_else(|| internal("circle point without a curve"))?;
            let c = w.curve[d];
            if seen[c] {
                slots.push((c, SlotEnd::End));
            } else {
                seen[c] = true;
                start_dart[c] = d;
                slots.push((c, SlotEnd::Start));
            }
        }
        let mut arcs = Vec::with_capacity(m);
        for c in 0..m {
            let mut crossings = Vec::new();
            let mut d = start_dart[c];
            loop {
                let x = w.target(d);
                if w.kind[x] == Kind::Circle {
                    break;
                }
                let rot = w.rotation(x);
                let deg = rot.len();
                let back = rot.iter().position(|&y| y == w.twin[d]).unwrap();
                let out = rot[(back + deg / 2) % deg];
                if w.kind[x] == Kind::Graph {
                    let k = deg / 2;
                    if back < k {
                        crossings.extend((0..k).rev().filter(|&j| j != back).map(|j| w.curve[rot[j]]));
                    } else {
                        crossings.extend((0..k).filter(|&j| j != back - k).map(|j| w.curve[rot[j]]));
                    }
                } else {
                    crossings.push(w.curve[rot[(back + 1) % deg]]);
                }
                d = out;
            }
            arcs.push(ArcRecord {
                crossings,
                pseudoline: true,
            });
        }
        Ok(DiskArrangement { arcs, slots })
    }
}

/// How an arrangement fails to extend a drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionViolation {
    WrongCount { expected: usize, found: usize },
    NotPseudolines(ArrViolation),
    /// The curves through a graph vertex are not crossed consecutively.
    SplitVertex { edge: usize, vertex: usize },
    /// The crossings on the drawn edge differ from the drawing.
    Chain { edge: usize },
}

/// Checks that `arr` is a pseudoline arrangement with one pseudoline per edge
/// of `d`, numbered like the edges, that contains the drawing: each
/// pseudoline meets the pseudolines of the edges at each end of its edge
/// consecutively, and the crossings lying on the drawn parts of both curves
/// are exactly the crossings of the drawing, in drawn order.
pub fn verify_extension(d: &Drawing, arr: &DiskArrangement) -> Result<(), ExtensionViolation> {
    let m = d.num_edges();
    if arr.num_arcs() != m {
        return Err(ExtensionViolation::WrongCount {
            expected: m,
            found: arr.num_arcs(),
        });
    }
    validate_arrangement(arr, true).map_err(ExtensionViolation::NotPseudolines)?;
    // per pseudoline, the open stretch between its vertex blocks and whether
    // it runs from the u block to the v block
    let mut stretch = Vec::with_capacity(m);
    for e in 0..m {
        let (u, v) = d.ends(e);
        let list = &arr.arcs[e].crossings;
        let block = |x: usize| -> Result<(usize, usize), ExtensionViolation> {
            let pos: Vec<usize> = (0..list.len())
                .filter(|&k| {
                    let (p, q) = d.ends(list[k]);
                    p == x || q == x
                })
                .collect();
            let ok = pos.len() == d.n() - 2 && pos.windows(2).all(|w| w[1] == w[0] + 1);
            if ok {
                Ok((pos[0], pos[pos.len() - 1] + 1))
            } else {
                Err(ExtensionViolation::SplitVertex { edge: e, vertex: x })
            }
        };
        let (bu, bv) = (block(u)?, block(v)?);
        stretch.push(if bu.1 <= bv.0 { (bu.1, bv.0, true) } else { (bv.1, bu.0, false) });
    }
    let on_drawn = |e: usize, g: usize| {
        let (lo, hi, _) = stretch[e];
        arr.arcs[e].crossings[lo..hi].contains(&g)
    };
    for e in 0..m {
        let (lo, hi, forward) = stretch[e];
        let mut found: Vec<usize> = arr.arcs[e].crossings[lo..hi]
            .iter()
            .copied()
            .filter(|&g| on_drawn(g, e))
            .collect();
        if !forward {
            found.reverse();
        }
        let expect: Vec<usize> = d.edge_crossings(e).iter().map(|c| c.partner).collect();
        if found != expect {
            return Err(ExtensionViolation::Chain { edge: e });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
