//! Combinatorial maps on the sphere.
//!
//! A map is given by two permutations on darts. `twin` pairs the two halves of
//! every segment and `next` gives the counterclockwise successor around the
//! origin vertex. Faces are the orbits of `d -> next(twin(d))`; with this
//! convention the face of a dart lies on its right, so bounded faces of a plane
//! picture are walked clockwise.

use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("array lengths differ (twin {twin}, next {next}, vertex_of {vertex_of})")]
    LengthMismatch {
        twin: usize,
        next: usize,
        vertex_of: usize,
    },
    #[error("twin is not a fixed-point-free involution at dart {0}")]
    NonInvolution(usize),
    #[error("next is not a permutation (dart {0})")]
    NotPermutation(usize),
    #[error("rotation orbit through dart {0} does not match vertex_of")]
    RotationMismatch(usize),
    #[error("vertex {0} has no darts")]
    IsolatedVertex(usize),
    #[error("segment of dart {0} has the same face on both sides")]
    Bridge(usize),
    #[error("not a connected sphere map: V - E + F = {euler}, {components} component(s)")]
    NonSphere { euler: i64, components: usize },
}

/// Validated sphere map with precomputed faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarMap {
    twin: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    vertex_of: Vec<usize>,
    first_dart: Vec<usize>,
    face_of: Vec<usize>,
    faces: Vec<Vec<usize>>,
}

/// Builds and validates a map; see [`PlanarMap::new`].
pub fn build_map(
    twin: Vec<usize>,
    next: Vec<usize>,
    vertex_of: Vec<usize>,
) -> Result<PlanarMap, MapError> {
    PlanarMap::new(twin, next, vertex_of)
}

impl PlanarMap {
    pub fn new(
        twin: Vec<usize>,
        next: Vec<usize>,
        vertex_of: Vec<usize>,
    ) -> Result<Self, MapError> {
        let nd = twin.len();
        if next.len() != nd || vertex_of.len() != nd {
            return Err(MapError::LengthMismatch {
                twin: nd,
                next: next.len(),
                vertex_of: vertex_of.len(),
            });
        }
        for d in 0..nd {
            let t = twin[d];
            if t >= nd || t == d || twin[t] != d {
                return Err(MapError::NonInvolution(d));
            }
        }
        let mut prev = vec![usize::MAX; nd];
        for d in 0..nd {
            let x = next[d];
            if x >= nd || prev[x] != usize::MAX {
                return Err(MapError::NotPermutation(d));
            }
            prev[x] = d;
        }
        let nv = vertex_of.iter().map(|&v| v + 1).max().unwrap_or(0);
        let mut first_dart = vec![usize::MAX; nv];
        let mut seen = vec![false; nd];
        for d in 0..nd {
            let v = vertex_of[d];
            if seen[d] {
                continue;
            }
            if first_dart[v] != usize::MAX {
                // a second orbit at the same vertex
                return Err(MapError::RotationMismatch(d));
            }
            first_dart[v] = d;
            let mut x = d;
            loop {
                if vertex_of[x] != v {
                    return Err(MapError::RotationMismatch(x));
                }
                seen[x] = true;
                x = next[x];
                if x == d {
                    break;
                }
            }
        }
        if let Some(v) = first_dart.iter().position(|&d| d == usize::MAX) {
            return Err(MapError::IsolatedVertex(v));
        }

        let mut face_of = vec![usize::MAX; nd];
        let mut faces = Vec::new();
        for d in 0..nd {
            if face_of[d] != usize::MAX {
                continue;
            }
            let f = faces.len();
            let mut walk = Vec::new();
            let mut x = d;
            loop {
                face_of[x] = f;
                walk.push(x);
                x = next[twin[x]];
                if x == d {
                    break;
                }
            }
            faces.push(walk);
        }

        let map = PlanarMap {
            twin,
            next,
            prev,
            vertex_of,
            first_dart,
            face_of,
            faces,
        };
        let components = map.components();
        let euler = map.num_vertices() as i64 - map.num_segments() as i64 + map.num_faces() as i64;
        if components != 1 || euler != 2 {
            return Err(MapError::NonSphere { euler, components });
        }
        for d in 0..nd {
            if map.face_of[d] == map.face_of[map.twin[d]] {
                return Err(MapError::Bridge(d.min(map.twin[d])));
            }
        }
        Ok(map)
    }

    fn components(&self) -> usize {
        let nv = self.num_vertices();
        let mut comp = vec![usize::MAX; nv];
        let mut count = 0;
        for s in 0..nv {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for d in self.darts_at(v) {
                    let w = self.target(d);
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        count
    }

    pub fn num_darts(&self) -> usize {
        self.twin.len()
    }
    pub fn num_vertices(&self) -> usize {
        self.first_dart.len()
    }
    pub fn num_segments(&self) -> usize {
        self.twin.len() / 2
    }
    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }
    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }
    pub fn next(&self, d: usize) -> usize {
        self.next[d]
    }
    pub fn prev(&self, d: usize) -> usize {
        self.prev[d]
    }
    pub fn origin(&self, d: usize) -> usize {
        self.vertex_of[d]
    }
    pub fn target(&self, d: usize) -> usize {
        self.vertex_of[self.twin[d]]
    }
    /// Face on the right of `d`.
    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }
    /// Face on the left of `d`.
    pub fn left_face(&self, d: usize) -> usize {
        self.face_of[self.twin[d]]
    }
    /// Successor of `d` on its face walk.
    pub fn face_next(&self, d: usize) -> usize {
        self.next[self.twin[d]]
    }
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }
    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }
    pub fn degree(&self, v: usize) -> usize {
        self.darts_at(v).count()
    }
    pub fn first_dart(&self, v: usize) -> usize {
        self.first_dart[v]
    }

    /// Darts leaving `v` in counterclockwise order, starting at its first dart.
    pub fn darts_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.darts_from(self.first_dart[v])
    }

    /// Darts around the origin of `start`, counterclockwise from `start`.
    pub fn darts_from(&self, start: usize) -> impl Iterator<Item = usize> + '_ {
        let mut cur = Some(start);
        std::iter::from_fn(move || {
            let d = cur?;
            let nx = self.next[d];
            cur = if nx == start { None } else { Some(nx) };
            Some(d)
        })
    }

    /// Vertices on the boundary walk of face `f`, in walk order.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&d| self.origin(d)).collect()
    }

    /// Segment index of a dart; segments are numbered by their smaller dart.
    pub fn segment_darts(&self) -> Vec<(usize, usize)> {
        (0..self.num_darts())
            .filter(|&d| d < self.twin[d])
            .map(|d| (d, self.twin[d]))
            .collect()
    }

    /// Mirror image: rotations reversed.
    pub fn mirrored(&self) -> PlanarMap {
        PlanarMap::new(self.twin.clone(), self.prev.clone(), self.vertex_of.clone())
            .expect("mirror of a valid map is valid")
    }

    /// Isomorphism invariant of the map with colored vertices, up to
    /// relabeling and reflection. Two connected maps get equal codes iff some
    /// dart bijection, possibly reversing all rotations, preserves twins,
    /// rotations and vertex colors.
    pub fn canonical_code(&self, color: &[u8]) -> Vec<usize> {
        let nd = self.num_darts();
        let mut best: Option<Vec<usize>> = None;
        for mirror in [false, true] {
            let rot = if mirror { &self.prev } else { &self.next };
            for start in 0..nd {
                let mut label = vec![usize::MAX; nd];
                let mut order = Vec::with_capacity(nd);
                label[start] = 0;
                order.push(start);
                let mut i = 0;
                while i < order.len() {
                    let d = order[i];
                    for x in [self.twin[d], rot[d]] {
                        if label[x] == usize::MAX {
                            label[x] = order.len();
                            order.push(x);
                        }
                    }
                    i += 1;
                }
                let mut code = Vec::with_capacity(3 * nd);
                for &d in &order {
                    code.push(label[self.twin[d]]);
                    code.push(label[rot[d]]);
                    code.push(color[self.vertex_of[d]] as usize);
                }
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Faces reachable from `seeds` without crossing a segment whose dart is
    /// `blocked`. `blocked` is queried for both darts of a segment.
    pub fn flood_faces(&self, seeds: &[usize], blocked: impl Fn(usize) -> bool) -> Vec<bool> {
        let mut mark = vec![false; self.num_faces()];
        let mut stack: Vec<usize> = Vec::new();
        for &s in seeds {
            if !mark[s] {
                mark[s] = true;
                stack.push(s);
            }
        }
        while let Some(f) = stack.pop() {
            for &d in &self.faces[f] {
                if blocked(d) {
                    continue;
                }
                let g = self.left_face(d);
                if !mark[g] {
                    mark[g] = true;
                    stack.push(g);
                }
            }
        }
        mark
    }

    /// Breadth-first dual distances from `seeds`, never crossing blocked darts
    /// and never entering faces rejected by `allowed`.
    pub fn dual_distances(
        &self,
        seeds: &[usize],
        blocked: impl Fn(usize) -> bool,
        allowed: impl Fn(usize) -> bool,
    ) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.num_faces()];
        let mut queue = VecDeque::new();
        for &s in seeds {
            if dist[s].is_none() && allowed(s) {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(f) = queue.pop_front() {
            let df = dist[f].unwrap();
            for &d in &self.faces[f] {
                if blocked(d) {
                    continue;
                }
                let g = self.left_face(d);
                if dist[g].is_none() && allowed(g) {
                    dist[g] = Some(df + 1);
                    queue.push_back(g);
                }
            }
        }
        dist
    }

    pub fn dual_graph(&self) -> DualGraph {
        let edges = self
            .segment_darts()
            .into_iter()
            .enumerate()
            .map(|(segment, (d, t))| DualEdge {
                segment,
                dart: d,
                faces: (self.face_of[d], self.face_of[t]),
            })
            .collect();
        DualGraph {
            num_nodes: self.num_faces(),
            edges,
        }
    }
}

/// One dual edge per segment of the primal map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualEdge {
    pub segment: usize,
    /// Smaller dart of the segment; `faces.0` lies on its right.
    pub dart: usize,
    pub faces: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    pub num_nodes: usize,
    pub edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn degree(&self, f: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.faces.0 == f) as usize + (e.faces.1 == f) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_nodes];
        for e in &self.edges {
            deg[e.faces.0] += 1;
            deg[e.faces.1] += 1;
        }
        deg
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle: darts 2k (i -> i+1) and 2k+1 (i+1 -> i).
    fn triangle() -> PlanarMap {
        let twin = vec![1, 0, 3, 2, 5, 4];
        // vertex 0: darts 0 (to 1) and 5 (to 2); vertex 1: 1, 2; vertex 2: 3, 4
        let vertex_of = vec![0, 1, 1, 2, 2, 0];
        let next = vec![5, 2, 1, 4, 3, 0];
        PlanarMap::new(twin, next, vertex_of).unwrap()
    }

    #[test]
    fn triangle_counts() {
        let m = triangle();
        assert_eq!(
            (m.num_vertices(), m.num_segments(), m.num_faces()),
            (3, 3, 2)
        );
        assert!(m.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn twin_errors() {
        let e = PlanarMap::new(vec![0, 1], vec![0, 1], vec![0, 1]).unwrap_err();
        assert_eq!(e, MapError::NonInvolution(0));
    }

    #[test]
    fn next_errors() {
        let e = PlanarMap::new(vec![1, 0], vec![0, 0], vec![0, 1]).unwrap_err();
        assert_eq!(e, MapError::NotPermutation(1));
    }

    #[test]
    fn single_segment_is_a_bridge() {
        let e = PlanarMap::new(vec![1, 0], vec![0, 1], vec![0, 1]).unwrap_err();
        assert_eq!(e, MapError::Bridge(0));
    }

    #[test]
    fn two_triangles_are_not_a_sphere() {
        let t = triangle();
        let mut twin = Vec::new();
        let mut next = Vec::new();
        let mut vo = Vec::new();
        for off in [0usize, 6] {
            for d in 0..6 {
                twin.push(t.twin(d) + off);
                next.push(t.next(d) + off);
                vo.push(t.origin(d) + off / 2);
            }
        }
        let e = PlanarMap::new(twin, next, vo).unwrap_err();
        assert!(matches!(e, MapError::NonSphere { components: 2, .. }));
    }

    #[test]
    fn dual_degrees_equal_face_lengths() {
        let m = triangle();
        let g = m.dual_graph();
        assert_eq!(g.edges.len(), 3);
        for f in 0..m.num_faces() {
            assert_eq!(g.degree(f), m.face(f).len());
        }
    }
}
