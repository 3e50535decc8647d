//! Arrangements of arcs and pseudolines in the disk model of the projective
//! plane.
//!
//! The boundary circle carries `2m` endpoint slots for `m` arcs, listed
//! counterclockwise; slot `i` is antipodal to slot `i + m`. Each arc records
//! the arcs it crosses in order from its start slot to its end slot.
//!
//! The derived [`ArrMap`] planarizes the disk: slot vertices `0..2m`, crossing
//! vertices after them, arc segments, and the boundary circle split at the
//! slots. The face outside the circle is not a valid locator.

use std::collections::HashMap;

use crate::planar_map::{MapError, PlanarMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlotEnd {
    Start,
    End,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcRecord {
    /// Arcs crossed, in order from the start slot.
    pub crossings: Vec<usize>,
    pub pseudoline: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskArrangement {
    pub arcs: Vec<ArcRecord>,
    /// Counterclockwise cycle of endpoint slots.
    pub slots: Vec<(usize, SlotEnd)>,
}

/// A point of the disk: inside a face, or inside a segment of an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArrPoint {
    Face(usize),
    OnArc { arc: usize, segment: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrViolation {
    SlotCount { expected: usize, found: usize },
    BadSlots { arc: usize },
    SelfCrossing { arc: usize },
    UnknownArc { arc: usize, listed: usize },
    DuplicateCrossing { arcs: (usize, usize) },
    Asymmetric { arcs: (usize, usize) },
    /// Crossing status disagrees with whether the endpoints interlace.
    Parity { arcs: (usize, usize) },
    NotAntipodal { arc: usize },
    Parallel { arcs: (usize, usize) },
    /// Crossing orders cannot be drawn in the disk.
    NotPlanar(MapError),
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArrCertificate {
    pub arcs: usize,
    pub crossings: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArrError {
    #[error("locator {0:?} does not name a point of the disk")]
    InvalidLocator(ArrPoint),
    #[error("both points lie on arc {0}")]
    SameLine(usize),
    #[error("arrangement is not valid: {0:?}")]
    Invalid(ArrViolation),
    #[error("internal error: {0}")]
    InternalError(String),
}

impl DiskArrangement {
    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    /// Start and end slot index of every arc.
    pub fn slot_positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.arcs.len()];
        for (i, &(a, end)) in self.slots.iter().enumerate() {
            if a < pos.len() {
                match end {
                    SlotEnd::Start => pos[a].0 = i,
                    SlotEnd::End => pos[a].1 = i,
                }
            }
        }
        pos
    }

    pub fn crosses(&self, a: usize, b: usize) -> bool {
        self.arcs[a].crossings.contains(&b)
    }

    pub fn num_crossings(&self) -> usize {
        self.arcs.iter().map(|a| a.crossings.len()).sum::<usize>() / 2
    }
}

/// Checks slot structure, crossing symmetry, interlacing parity, the
/// pseudoline conditions and that the crossing orders fit in the disk.
pub fn validate_arrangement(
    arr: &DiskArrangement,
    require_pseudolines: bool,
) -> Result<ArrCertificate, ArrViolation> {
    let m = arr.arcs.len();
    if m == 0 {
        return Err(ArrViolation::Empty);
    }
    if arr.slots.len() != 2 * m {
        return Err(ArrViolation::SlotCount {
            expected: 2 * m,
            found: arr.slots.len(),
        });
    }
    let mut count = vec![[0usize; 2]; m];
    for &(a, end) in &arr.slots {
        if a >= m {
            return Err(ArrViolation::BadSlots { arc: a });
        }
        count[a][(end == SlotEnd::End) as usize] += 1;
    }
    if let Some(a) = count.iter().position(|c| *c != [1, 1]) {
        return Err(ArrViolation::BadSlots { arc: a });
    }
    let mut listed: HashMap<(usize, usize), usize> = HashMap::new();
    for (a, rec) in arr.arcs.iter().enumerate() {
        for &b in &rec.crossings {
            if b == a {
                return Err(ArrViolation::SelfCrossing { arc: a });
            }
            if b >= m {
                return Err(ArrViolation::UnknownArc { arc: a, listed: b });
            }
            let c = listed.entry((a, b)).or_insert(0);
            *c += 1;
            if *c > 1 {
                return Err(ArrViolation::DuplicateCrossing {
                    arcs: (a.min(b), a.max(b)),
                });
            }
        }
    }
    for &(a, b) in listed.keys() {
        if !listed.contains_key(&(b, a)) {
            return Err(ArrViolation::Asymmetric {
                arcs: (a.min(b), a.max(b)),
            });
        }
    }
    let pos = arr.slot_positions();
    for a in 0..m {
        let (s, e) = pos[a];
        let antipodal = (s + m) % (2 * m) == e;
        if (arr.arcs[a].pseudoline || require_pseudolines) && !antipodal {
            return Err(ArrViolation::NotAntipodal { arc: a });
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            let cross = listed.contains_key(&(a, b));
            if cross != interlaced(pos[a], pos[b]) {
                return Err(ArrViolation::Parity { arcs: (a, b) });
            }
            if require_pseudolines && !cross {
                return Err(ArrViolation::Parallel { arcs: (a, b) });
            }
        }
    }
    ArrMap::build(arr).map_err(ArrViolation::NotPlanar)?;
    Ok(ArrCertificate {
        arcs: m,
        crossings: listed.len() / 2,
    })
}

/// Whether chords with endpoint slots `x` and `y` interlace on the circle.
fn interlaced(x: (usize, usize), y: (usize, usize)) -> bool {
    let (lo, hi) = (x.0.min(x.1), x.0.max(x.1));
    let inside = |s: usize| lo < s && s < hi;
    inside(y.0) != inside(y.1)
}

/// Planarized disk model of an arrangement.
#[derive(Debug, Clone)]
pub struct ArrMap {
    pub map: PlanarMap,
    m: usize,
    seg_off: Vec<usize>,
    gamma_off: usize,
    outside: usize,
    /// Arc id of a dart's segment, or `m` for the boundary circle.
    dart_line: Vec<usize>,
    /// Segment index along the arc, or boundary segment index.
    dart_seg: Vec<usize>,
}

impl ArrMap {
    /// Builds the disk map. Assumes slots and crossing lists are structurally
    /// sound; planarity is checked by the map constructor.
    pub fn build(arr: &DiskArrangement) -> Result<ArrMap, MapError> {
        let m = arr.arcs.len();
        let ns = 2 * m;
        let pos = arr.slot_positions();
        let mut seg_off = Vec::with_capacity(m);
        let mut total = 0;
        for a in &arr.arcs {
            seg_off.push(total);
            total += a.crossings.len() + 1;
        }
        let gamma_off = total;
        total += ns;
        let nd = 2 * total;
        let mut dart_line = vec![0; nd];
        let mut dart_seg = vec![0; nd];
        for (a, rec) in arr.arcs.iter().enumerate() {
            for j in 0..=rec.crossings.len() {
                let s = seg_off[a] + j;
                dart_line[2 * s] = a;
                dart_line[2 * s + 1] = a;
                dart_seg[2 * s] = j;
                dart_seg[2 * s + 1] = j;
            }
        }
        for s in 0..ns {
            let g = gamma_off + s;
            dart_line[2 * g] = m;
            dart_line[2 * g + 1] = m;
            dart_seg[2 * g] = s;
            dart_seg[2 * g + 1] = s;
        }
        // crossing vertices in order of arc pairs
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (a, rec) in arr.arcs.iter().enumerate() {
            for &b in &rec.crossings {
                if a < b {
                    pairs.push((a, b));
                }
            }
        }
        pairs.sort_unstable();
        for (i, &p) in pairs.iter().enumerate() {
            index.insert(p, ns + i);
        }
        let nv = ns + pairs.len();
        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for s in 0..ns {
            let (a, end) = arr.slots[s];
            let fwd = 2 * (gamma_off + s);
            let back = 2 * (gamma_off + (s + ns - 1) % ns) + 1;
            let arc_dart = match end {
                SlotEnd::Start => 2 * seg_off[a],
                SlotEnd::End => 2 * (seg_off[a] + arr.arcs[a].crossings.len()) + 1,
            };
            rot[s] = vec![fwd, arc_dart, back];
        }
        let mut position: HashMap<(usize, usize), usize> = HashMap::new();
        for (a, rec) in arr.arcs.iter().enumerate() {
            for (j, &b) in rec.crossings.iter().enumerate() {
                position.insert((a, b), j);
            }
        }
        for &(a, b) in &pairs {
            let x = index[&(a, b)];
            let i = position[&(a, b)];
            let j = position[&(b, a)];
            let a_next = 2 * (seg_off[a] + i + 1);
            let a_prev = 2 * (seg_off[a] + i) + 1;
            let b_next = 2 * (seg_off[b] + j + 1);
            let b_prev = 2 * (seg_off[b] + j) + 1;
            // b starts on the left of a iff its start slot lies counterclockwise
            // strictly between a's end and a's start
            let (sa, ea) = pos[a];
            let sb = pos[b].0;
            let from_left = ccw_between(ea, sb, sa, ns);
            rot[x] = if from_left {
                vec![a_next, b_prev, a_prev, b_next]
            } else {
                vec![a_next, b_next, a_prev, b_prev]
            };
        }
        let mut vertex_of = vec![usize::MAX; nd];
        let mut next = vec![usize::MAX; nd];
        for (v, r) in rot.iter().enumerate() {
            for (i, &d) in r.iter().enumerate() {
                vertex_of[d] = v;
                next[d] = r[(i + 1) % r.len()];
            }
        }
        // arc segment darts start at crossings along the arc
        for (a, rec) in arr.arcs.iter().enumerate() {
            for j in 0..=rec.crossings.len() {
                let s = seg_off[a] + j;
                let from = if j == 0 {
                    pos[a].0
                } else {
                    let b = rec.crossings[j - 1];
                    index[&(a.min(b), a.max(b))]
                };
                let to = if j == rec.crossings.len() {
                    pos[a].1
                } else {
                    let b = rec.crossings[j];
                    index[&(a.min(b), a.max(b))]
                };
                if vertex_of[2 * s] != from || vertex_of[2 * s + 1] != to {
                    return Err(MapError::RotationMismatch(2 * s));
                }
            }
        }
        let twin = (0..nd).map(|d| d ^ 1).collect();
        let map = PlanarMap::new(twin, next, vertex_of)?;
        let outside = map.face_of(2 * gamma_off);
        Ok(ArrMap {
            map,
            m,
            seg_off,
            gamma_off,
            outside,
            dart_line,
            dart_seg,
        })
    }

    pub fn num_arcs(&self) -> usize {
        self.m
    }
    pub fn outside_face(&self) -> usize {
        self.outside
    }
    /// Arc of a dart's segment, or `num_arcs()` for the boundary circle.
    pub fn dart_line(&self, d: usize) -> usize {
        self.dart_line[d]
    }
    pub fn dart_segment(&self, d: usize) -> usize {
        self.dart_seg[d]
    }
    pub fn is_boundary(&self, d: usize) -> bool {
        self.dart_line[d] == self.m
    }
    /// Forward dart of segment `j` of arc `a`.
    pub fn arc_dart(&self, a: usize, j: usize) -> usize {
        2 * (self.seg_off[a] + j)
    }
    /// Counterclockwise dart of boundary segment `s` (from slot `s` to `s+1`);
    /// the disk is on its left.
    pub fn boundary_dart(&self, s: usize) -> usize {
        2 * (self.gamma_off + s)
    }
    pub fn num_boundary_segments(&self) -> usize {
        2 * self.m
    }
    pub fn num_arc_segments(&self, a: usize) -> usize {
        let end = if a + 1 < self.m {
            self.seg_off[a + 1]
        } else {
            self.gamma_off
        };
        end - self.seg_off[a]
    }
    /// Faces of the disk.
    pub fn inner_faces(&self) -> Vec<usize> {
        (0..self.map.num_faces()).filter(|&f| f != self.outside).collect()
    }

    fn check(&self, p: ArrPoint) -> Result<(), ArrError> {
        let ok = match p {
            ArrPoint::Face(f) => f < self.map.num_faces() && f != self.outside,
            ArrPoint::OnArc { arc, segment } => arc < self.m && segment < self.num_arc_segments(arc),
        };
        if ok {
            Ok(())
        } else {
            Err(ArrError::InvalidLocator(p))
        }
    }

    /// Faces touching a point: one for face points, two for arc points.
    fn faces_at(&self, p: ArrPoint) -> Vec<usize> {
        match p {
            ArrPoint::Face(f) => vec![f],
            ArrPoint::OnArc { arc, segment } => {
                let d = self.arc_dart(arc, segment);
                vec![self.map.face_of(d), self.map.left_face(d)]
            }
        }
    }

    /// Dual distances inside the disk from the faces of `target`.
    fn distances_to(&self, target: ArrPoint) -> Vec<Option<usize>> {
        let seeds = self.faces_at(target);
        let out = self.outside;
        self.map
            .dual_distances(&seeds, |d| self.is_boundary(d), |f| f != out)
    }
}

fn ccw_between(from: usize, x: usize, to: usize, len: usize) -> bool {
    let dx = (x + len - from) % len;
    let dt = (to + len - from) % len;
    dx > 0 && dx < dt
}

/// A walk in the dual of the disk map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPath {
    pub faces: Vec<usize>,
    /// Crossed segments as `(arc, segment index)`, in walk order.
    pub crossed: Vec<(usize, usize)>,
}

/// Greedy dual walk from `a` to `b`: from each face cross the first segment in
/// its walk whose far side is one step closer to `b`. The walk crosses exactly
/// the arcs separating the two points, each once.
pub fn dual_path(arr: &DiskArrangement, a: ArrPoint, b: ArrPoint) -> Result<DualPath, ArrError> {
    let am = ArrMap::build(arr).map_err(|e| ArrError::Invalid(ArrViolation::NotPlanar(e)))?;
    dual_path_in(&am, a, b)
}

/// [`dual_path`] on a prebuilt disk map.
pub fn dual_path_in(am: &ArrMap, a: ArrPoint, b: ArrPoint) -> Result<DualPath, ArrError> {
    am.check(a)?;
    am.check(b)?;
    if let (ArrPoint::OnArc { arc: x, .. }, ArrPoint::OnArc { arc: y, .. }) = (a, b) {
        if x == y {
            return Err(ArrError::SameLine(x));
        }
    }
    let dist = am.distances_to(b);
    let start = am
        .faces_at(a)
        .into_iter()
        .min_by_key(|&f| dist[f].unwrap_or(usize::MAX))
        .unwrap();
    let map = &am.map;
    let mut faces = vec![start];
    let mut crossed = Vec::new();
    let mut cur = start;
    let mut dc = dist[cur].ok_or_else(|| ArrError::InternalError("disk is disconnected".into()))?;
    while dc > 0 {
        let step = map
            .face(cur)
            .iter()
            .copied()
            .find(|&d| !am.is_boundary(d) && dist[map.left_face(d)] == Some(dc - 1))
            .ok_or_else(|| ArrError::InternalError("no descending step".into()))?;
        crossed.push((am.dart_line(step), am.dart_segment(step)));
        cur = map.left_face(step);
        faces.push(cur);
        dc -= 1;
    }
    Ok(DualPath { faces, crossed })
}

/// Face of the projective plane picture: disk faces glued across antipodal
/// boundary segments.
struct ProjectiveDual<'a> {
    am: &'a ArrMap,
    /// Disk face adjacent to each boundary segment.
    boundary_face: Vec<usize>,
}

/// A step between projective faces: the line crossed (arc id, or `m` for the
/// boundary circle) and its segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Step {
    to: usize,
    line: usize,
    segment: usize,
}

impl<'a> ProjectiveDual<'a> {
    fn new(am: &'a ArrMap) -> Self {
        let boundary_face = (0..am.num_boundary_segments())
            .map(|s| am.map.left_face(am.boundary_dart(s)))
            .collect();
        ProjectiveDual { am, boundary_face }
    }

    /// Steps out of face `f` in face-walk order. Boundary segment `s` of `f`
    /// leads to the face at the antipodal segment; the step records the
    /// segment it leaves through.
    fn steps(&self, f: usize) -> Vec<Step> {
        let am = self.am;
        let m = am.num_arcs();
        let ns = am.num_boundary_segments();
        am.map
            .face(f)
            .iter()
            .map(|&d| {
                if am.is_boundary(d) {
                    // walking the disk face, boundary darts run clockwise
                    let s = am.dart_segment(d);
                    Step {
                        to: self.boundary_face[(s + m) % ns],
                        line: m,
                        segment: s,
                    }
                } else {
                    Step {
                        to: am.map.left_face(d),
                        line: am.dart_line(d),
                        segment: am.dart_segment(d),
                    }
                }
            })
            .collect()
    }

    fn flood(&self, seeds: &[usize], blocked: &[usize]) -> Vec<bool> {
        let mut mark = vec![false; self.am.map.num_faces()];
        let mut stack = Vec::new();
        for &s in seeds {
            if !mark[s] {
                mark[s] = true;
                stack.push(s);
            }
        }
        while let Some(f) = stack.pop() {
            for st in self.steps(f) {
                if blocked.contains(&st.line) || mark[st.to] {
                    continue;
                }
                mark[st.to] = true;
                stack.push(st.to);
            }
        }
        mark
    }

    /// Greedy shortest walk inside `region` from `from` to `to`, never crossing
    /// `blocked` lines. Returns the crossed `(line, segment)` pairs.
    fn path(
        &self,
        region: &[bool],
        blocked: &[usize],
        from: usize,
        to: usize,
    ) -> Result<Vec<(usize, usize)>, ArrError> {
        let nf = self.am.map.num_faces();
        let mut dist = vec![usize::MAX; nf];
        let mut queue = std::collections::VecDeque::new();
        dist[to] = 0;
        queue.push_back(to);
        while let Some(f) = queue.pop_front() {
            for st in self.steps(f) {
                if blocked.contains(&st.line) || !region[st.to] || dist[st.to] != usize::MAX {
                    continue;
                }
                dist[st.to] = dist[f] + 1;
                queue.push_back(st.to);
            }
        }
        if dist[from] == usize::MAX {
            return Err(ArrError::InternalError("region is disconnected".into()));
        }
        let mut out = Vec::new();
        let mut cur = from;
        while cur != to {
            let st = self
                .steps(cur)
                .into_iter()
                .find(|st| {
                    !blocked.contains(&st.line) && region[st.to] && dist[st.to] + 1 == dist[cur]
                })
                .ok_or_else(|| ArrError::InternalError("no descending step".into()))?;
            out.push((st.line, st.segment));
            cur = st.to;
        }
        Ok(out)
    }
}

/// A point on a line of the projective picture: an arc segment, or a boundary
/// segment (line `m`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct LinePoint {
    line: usize,
    segment: usize,
}

/// Adds one pseudoline through `a` and `b`. Every old pseudoline is crossed
/// exactly once and old crossings keep their relative order.
pub fn levi_extend(
    arr: &DiskArrangement,
    a: ArrPoint,
    b: ArrPoint,
) -> Result<DiskArrangement, ArrError> {
    let m = arr.arcs.len();
    if m == 0 {
        // a single face; any antipodal pair will do
        for p in [a, b] {
            if p != ArrPoint::Face(0) {
                return Err(ArrError::InvalidLocator(p));
            }
        }
        return Ok(DiskArrangement {
            arcs: vec![ArcRecord {
                crossings: vec![],
                pseudoline: true,
            }],
            slots: vec![(0, SlotEnd::Start), (0, SlotEnd::End)],
        });
    }
    validate_arrangement(arr, true).map_err(ArrError::Invalid)?;
    let am = ArrMap::build(arr).map_err(|e| ArrError::Invalid(ArrViolation::NotPlanar(e)))?;
    am.check(a)?;
    am.check(b)?;
    let pd = ProjectiveDual::new(&am);

    let pa = relocate(&am, a, line_of(b))?;
    let pb = relocate(&am, b, Some(pa.line))?;
    if pa.line == pb.line {
        return Err(ArrError::SameLine(pa.line));
    }

    // the two sides of each relocated point
    let sides = |p: LinePoint| -> (usize, usize) {
        if p.line == m {
            let ns = am.num_boundary_segments();
            (pd.boundary_face[p.segment], pd.boundary_face[(p.segment + m) % ns])
        } else {
            let d = am.arc_dart(p.line, p.segment);
            (am.map.face_of(d), am.map.left_face(d))
        }
    };
    let (a1, a2) = sides(pa);
    let (b1, b2) = sides(pb);
    let blocked = [pa.line, pb.line];
    let region = pd.flood(&[a1], &blocked);
    if region[a2] {
        return Err(ArrError::InternalError("the two lines do not separate".into()));
    }
    let (b_in, b_out) = match (region[b1], region[b2]) {
        (true, false) => (b1, b2),
        (false, true) => (b2, b1),
        _ => return Err(ArrError::InternalError("second point not on the region boundary".into())),
    };
    let other: Vec<bool> = region.iter().map(|&r| !r).collect();
    let gamma1 = pd.path(&region, &blocked, a1, b_in)?;
    let gamma2 = pd.path(&other, &blocked, b_out, a2)?;

    // cyclic crossing sequence of the new curve, leaving a on its first side
    let mut seq: Vec<(usize, usize)> = Vec::with_capacity(m + 1);
    seq.push((pa.line, pa.segment));
    seq.extend(gamma1);
    seq.push((pb.line, pb.segment));
    seq.extend(gamma2);
    let mut seen = vec![0usize; m + 1];
    for &(l, _) in &seq {
        seen[l] += 1;
    }
    if seen.iter().any(|&c| c != 1) {
        return Err(ArrError::InternalError(format!(
            "new curve crosses some line {:?} times",
            seen
        )));
    }

    // The crossing at `a` runs from side a2 into side a1, so the sequence is
    // traversed a2 -> a -> a1 -> ... ; a boundary crossing at segment s in the
    // walk order leaves the disk at s and re-enters at the antipodal segment.
    let cut = seq.iter().position(|&(l, _)| l == m).unwrap();
    let exit_seg = if cut == 0 {
        // crossing at a: from a2 (antipodal segment) into a1 (segment of pa)
        (pa.segment + m) % (2 * m)
    } else if pb.line == m {
        // crossing at b: from b_in into b_out
        if pd.boundary_face[pb.segment] == b_in {
            pb.segment
        } else {
            (pb.segment + m) % (2 * m)
        }
    } else {
        seq[cut].1
    };
    let entry_seg = (exit_seg + m) % (2 * m);
    let order: Vec<(usize, usize)> = seq[cut + 1..]
        .iter()
        .chain(&seq[..cut])
        .copied()
        .collect();

    let new_id = m;
    let mut arcs = arr.arcs.clone();
    for &(l, s) in &order {
        arcs[l].crossings.insert(s, new_id);
    }
    arcs.push(ArcRecord {
        crossings: order.iter().map(|&(l, _)| l).collect(),
        pseudoline: true,
    });
    let mut slots = Vec::with_capacity(2 * m + 2);
    for (i, &sl) in arr.slots.iter().enumerate() {
        slots.push(sl);
        if i == exit_seg {
            slots.push((new_id, SlotEnd::End));
        }
        if i == entry_seg {
            slots.push((new_id, SlotEnd::Start));
        }
    }
    let out = DiskArrangement { arcs, slots };
    validate_arrangement(&out, true)
        .map_err(|v| ArrError::InternalError(format!("extension does not validate: {v:?}")))?;
    Ok(out)
}

fn line_of(p: ArrPoint) -> Option<usize> {
    match p {
        ArrPoint::OnArc { arc, .. } => Some(arc),
        ArrPoint::Face(_) => None,
    }
}

/// Moves a face point onto the first segment of its face that is not on
/// `avoid`; the boundary circle is used only when no arc segment qualifies.
fn relocate(am: &ArrMap, p: ArrPoint, avoid: Option<usize>) -> Result<LinePoint, ArrError> {
    match p {
        ArrPoint::OnArc { arc, segment } => Ok(LinePoint { line: arc, segment }),
        ArrPoint::Face(f) => {
            let walk = am.map.face(f);
            let arc = walk
                .iter()
                .copied()
                .find(|&d| !am.is_boundary(d) && Some(am.dart_line(d)) != avoid);
            if let Some(d) = arc {
                return Ok(LinePoint {
                    line: am.dart_line(d),
                    segment: am.dart_segment(d),
                });
            }
            walk.iter()
                .copied()
                .find(|&d| am.is_boundary(d))
                .map(|d| LinePoint {
                    line: am.num_arcs(),
                    segment: am.dart_segment(d),
                })
                .ok_or_else(|| ArrError::InternalError("face has no usable boundary".into()))
        }
    }
}
