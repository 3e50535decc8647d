//! Mutable sphere map used while curves are grown through a drawing.

use std::collections::VecDeque;

use crate::drawing::Drawing;

/// Curve label of the boundary circle.
pub(crate) const CIRCLE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Kind {
    Graph,
    Crossing,
    /// End of an interior arc on a boundary edge.
    Eta,
    /// Point of the boundary circle.
    Circle,
}

/// Where a route stops.
#[derive(Debug, Clone, Copy)]
pub(crate) enum RouteEnd {
    /// Inside the sector following this dart.
    Corner(usize),
    /// At a new vertex splitting the segment of this dart.
    Split(usize, Kind),
}

#[derive(Debug, Clone)]
pub(crate) struct Work {
    pub twin: Vec<usize>,
    pub next: Vec<usize>,
    pub origin: Vec<usize>,
    /// Curve of each dart: a graph edge index, or [`CIRCLE`].
    pub curve: Vec<usize>,
    /// Whether the dart belongs to the drawn part of its curve.
    pub drawn: Vec<bool>,
    pub kind: Vec<Kind>,
    /// Some dart leaving each vertex.
    pub vdart: Vec<usize>,
}

/// Faces of the current map.
pub(crate) struct Faces {
    pub id: Vec<usize>,
    pub walks: Vec<Vec<usize>>,
}

impl Work {
    pub fn from_drawing(d: &Drawing) -> Work {
        let map = d.map();
        let nd = map.num_darts();
        let nv = map.num_vertices();
        Work {
            twin: (0..nd).map(|x| map.twin(x)).collect(),
            next: (0..nd).map(|x| map.next(x)).collect(),
            origin: (0..nd).map(|x| map.origin(x)).collect(),
            curve: (0..nd).map(|x| d.dart_edge(x)).collect(),
            drawn: vec![true; nd],
            kind: (0..nv)
                .map(|x| if d.is_graph_vertex(x) { Kind::Graph } else { Kind::Crossing })
                .collect(),
            vdart: (0..nv).map(|x| map.first_dart(x)).collect(),
        }
    }

    pub fn num_darts(&self) -> usize {
        self.twin.len()
    }

    pub fn target(&self, d: usize) -> usize {
        self.origin[self.twin[d]]
    }

    /// Darts leaving `x`, counterclockwise from its stored dart.
    pub fn rotation(&self, x: usize) -> Vec<usize> {
        self.rotation_from(self.vdart[x])
    }

    pub fn rotation_from(&self, start: usize) -> Vec<usize> {
        let mut out = vec![start];
        let mut d = self.next[start];
        while d != start {
            out.push(d);
            d = self.next[d];
        }
        out
    }

    pub fn faces(&self) -> Faces {
        let nd = self.num_darts();
        let mut id = vec![usize::MAX; nd];
        let mut walks = Vec::new();
        for s in 0..nd {
            if id[s] != usize::MAX {
                continue;
            }
            let mut walk = Vec::new();
            let mut x = s;
            loop {
                id[x] = walks.len();
                walk.push(x);
                x = self.next[self.twin[x]];
                if x == s {
                    break;
                }
            }
            walks.push(walk);
        }
        Faces { id, walks }
    }

    /// Dart of curve `c` at `x` other than `d`.
    pub fn other_dart(&self, x: usize, d: usize) -> Option<usize> {
        let c = self.curve[d];
        self.rotation(x).into_iter().find(|&y| y != d && self.curve[y] == c)
    }

    /// Dart of curve `c` leaving `x` with the given drawn flag.
    pub fn curve_dart(&self, x: usize, c: usize, drawn: bool) -> Option<usize> {
        self.rotation(x)
            .into_iter()
            .find(|&y| self.curve[y] == c && self.drawn[y] == drawn)
    }

    /// Darts of the curve leaving along `start`, in order, up to where the
    /// curve stops.
    pub fn walk_darts(&self, start: usize) -> Vec<usize> {
        let mut out = vec![start];
        let mut d = start;
        while let Some(nd) = self.other_dart(self.target(d), self.twin[d]) {
            out.push(nd);
            d = nd;
        }
        out
    }

    /// Vertices met by the curve leaving along `start`, beginning with the
    /// origin of `start` and ending where the curve stops.
    pub fn walk(&self, start: usize) -> Vec<usize> {
        let darts = self.walk_darts(start);
        let mut out: Vec<usize> = darts.iter().map(|&d| self.origin[d]).collect();
        out.push(self.target(*darts.last().unwrap()));
        out
    }

    fn add_vertex(&mut self, kind: Kind) -> usize {
        self.kind.push(kind);
        self.vdart.push(usize::MAX);
        self.kind.len() - 1
    }

    /// New unattached segment; both darts form one-element rotations.
    fn add_segment(&mut self, curve: usize, drawn: bool) -> (usize, usize) {
        let p = self.twin.len();
        let q = p + 1;
        self.twin.extend([q, p]);
        self.next.extend([p, q]);
        self.origin.extend([usize::MAX, usize::MAX]);
        self.curve.extend([curve, curve]);
        self.drawn.extend([drawn, drawn]);
        (p, q)
    }

    /// Places dart `p` right after `at` in the rotation at `at`'s origin.
    fn insert_after(&mut self, at: usize, p: usize) {
        let nx = self.next[at];
        self.next[at] = p;
        self.next[p] = nx;
        self.origin[p] = self.origin[at];
    }

    /// Attaches dart `p` as the only dart of the isolated vertex `x`.
    fn attach(&mut self, x: usize, p: usize) {
        self.next[p] = p;
        self.origin[p] = x;
        self.vdart[x] = p;
    }

    /// Splits the segment of `d` at a new vertex `w`. Returns `(w, d2, t2)`
    /// where `d2` continues `d` past `w` and `t2` leads back along `d`.
    pub fn split(&mut self, d: usize, kind: Kind) -> (usize, usize, usize) {
        let t = self.twin[d];
        let w = self.add_vertex(kind);
        let (d2, t2) = self.add_segment(self.curve[d], self.drawn[d]);
        self.twin[d] = t2;
        self.twin[t2] = d;
        self.twin[t] = d2;
        self.twin[d2] = t;
        self.origin[d2] = w;
        self.origin[t2] = w;
        self.next[d2] = t2;
        self.next[t2] = d2;
        self.vdart[w] = d2;
        (w, d2, t2)
    }

    /// Draws a new piece of curve `c` from the sector after `start`, crossing
    /// the segments of `crossed` in order. Each crossed dart must have the
    /// face being left on its right. Returns the vertex where the piece ends.
    pub fn route(&mut self, c: usize, start: usize, crossed: &[usize], end: RouteEnd) -> usize {
        let mut at = start;
        for &s in crossed {
            let (_, d2, t2) = self.split(s, Kind::Crossing);
            let (p, q) = self.add_segment(c, false);
            self.insert_after(at, p);
            self.insert_after(t2, q);
            at = d2;
        }
        let (p, q) = self.add_segment(c, false);
        self.insert_after(at, p);
        match end {
            RouteEnd::Corner(b) => {
                self.insert_after(b, q);
                self.origin[b]
            }
            RouteEnd::Split(s, kind) => {
                let (w, _, t2) = self.split(s, kind);
                self.insert_after(t2, q);
                w
            }
        }
    }

    /// Creates a two-point circle inside the face of the sector after
    /// `corner` and joins that sector to the first circle point by curve `c`.
    /// Returns the two circle darts with the annulus on their right, in
    /// circle order, followed by the dart bounding the cap.
    pub fn open_circle(&mut self, c: usize, corner: usize) -> (usize, usize, usize) {
        let a = self.add_vertex(Kind::Circle);
        let b = self.add_vertex(Kind::Circle);
        let (x1, y1) = self.add_segment(CIRCLE, false);
        let (x2, y2) = self.add_segment(CIRCLE, false);
        self.attach(a, x1);
        self.insert_after(x1, x2);
        self.attach(b, y1);
        self.insert_after(y1, y2);
        let (p, q) = self.add_segment(c, false);
        self.insert_after(corner, p);
        self.insert_after(x2, q);
        (x1, y2, x2)
    }

    /// Breadth-first search over faces from `start`, never crossing blocked
    /// darts. Returns the reached faces and, per face, the dart crossed to
    /// enter it.
    pub fn explore(&self, faces: &Faces, start: usize, blocked: &dyn Fn(usize) -> bool) -> (Vec<bool>, Vec<usize>) {
        let nf = faces.walks.len();
        let mut seen = vec![false; nf];
        let mut parent = vec![usize::MAX; nf];
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        while let Some(f) = queue.pop_front() {
            for &d in &faces.walks[f] {
                if blocked(d) {
                    continue;
                }
                let g = faces.id[self.twin[d]];
                if !seen[g] {
                    seen[g] = true;
                    parent[g] = d;
                    queue.push_back(g);
                }
            }
        }
        (seen, parent)
    }

    /// Darts crossed on the search-tree path from the search start to `target`.
    pub fn path_to(&self, faces: &Faces, parent: &[usize], target: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut f = target;
        while parent[f] != usize::MAX {
            let d = parent[f];
            out.push(d);
            f = faces.id[d];
        }
        out.reverse();
        out
    }
}
