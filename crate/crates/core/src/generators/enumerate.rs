//! Exhaustive enumeration of good drawings of small complete graphs.
//!
//! Drawings of `K_{k+1}` are grown from drawings of `K_k` by routing the edges
//! of the new vertex through the dual of a working map, one crossing at a
//! time. A route never crosses an edge sharing an endpoint with it and never
//! crosses the same edge twice, so every result is good. Isomorphic results
//! are merged by [`Drawing::canonical_code`].

use std::collections::BTreeMap;

use crate::drawing::{edge_index, from_points, validate_good, CrossingEntry, Drawing, DrawingSpec, ExactPoint};

use super::GeneratorError;

/// Mutable map whose darts carry their graph edge as an endpoint pair.
#[derive(Clone)]
struct Work {
    twin: Vec<usize>,
    next: Vec<usize>,
    origin: Vec<usize>,
    ends: Vec<(usize, usize)>,
    forward: Vec<bool>,
    /// Graph vertex id of each map vertex.
    graph: Vec<Option<usize>>,
}

impl Work {
    fn from_drawing(d: &Drawing) -> Work {
        let map = d.map();
        let nd = map.num_darts();
        let mut forward = vec![false; nd];
        for e in 0..d.num_edges() {
            for &x in d.chain(e) {
                forward[x] = true;
            }
        }
        Work {
            twin: (0..nd).map(|x| map.twin(x)).collect(),
            next: (0..nd).map(|x| map.next(x)).collect(),
            origin: (0..nd).map(|x| map.origin(x)).collect(),
            ends: (0..nd).map(|x| d.ends(d.dart_edge(x))).collect(),
            forward,
            graph: (0..map.num_vertices())
                .map(|x| d.is_graph_vertex(x).then_some(x))
                .collect(),
        }
    }

    fn prev(&self, d: usize) -> usize {
        let mut x = d;
        while self.next[x] != d {
            x = self.next[x];
        }
        x
    }

    fn face_walk(&self, d: usize) -> Vec<usize> {
        let mut out = vec![d];
        let mut x = self.next[self.twin[d]];
        while x != d {
            out.push(x);
            x = self.next[self.twin[x]];
        }
        out
    }

    fn add_vertex(&mut self, graph: Option<usize>) -> usize {
        self.graph.push(graph);
        self.graph.len() - 1
    }

    /// New segment of edge `ends`; the first dart points forward iff `fwd`.
    fn add_segment(&mut self, ends: (usize, usize), fwd: bool) -> (usize, usize) {
        let p = self.twin.len();
        let q = p + 1;
        self.twin.extend([q, p]);
        self.next.extend([p, q]);
        self.origin.extend([usize::MAX, usize::MAX]);
        self.ends.extend([ends, ends]);
        self.forward.extend([fwd, !fwd]);
        (p, q)
    }

    /// Puts dart `p` right after `at` in the rotation at `at`'s origin.
    fn insert_after(&mut self, at: usize, p: usize) {
        let nx = self.next[at];
        self.next[at] = p;
        self.next[p] = nx;
        self.origin[p] = self.origin[at];
    }

    /// Splits the segment of `d` at a new crossing vertex `w`. Returns
    /// `(w, d2, t2)` where `d2` continues `d` past `w` and `t2` leads back.
    fn split(&mut self, d: usize) -> (usize, usize, usize) {
        let t = self.twin[d];
        let w = self.add_vertex(None);
        let (d2, t2) = self.add_segment(self.ends[d], self.forward[d]);
        self.twin[d] = t2;
        self.twin[t2] = d;
        self.twin[t] = d2;
        self.twin[d2] = t;
        self.origin[d2] = w;
        self.origin[t2] = w;
        self.next[d2] = t2;
        self.next[t2] = d2;
        (w, d2, t2)
    }

    fn vertex_of_graph(&self, v: usize) -> usize {
        self.graph.iter().position(|&g| g == Some(v)).unwrap()
    }

    fn darts_at(&self, x: usize) -> Vec<usize> {
        (0..self.twin.len()).filter(|&d| self.origin[d] == x).collect()
    }

    fn to_spec(&self, n: usize) -> DrawingSpec {
        let edge = |(a, b): (usize, usize)| edge_index(n, a, b);
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            let x = self.vertex_of_graph(v);
            let start = self.darts_at(x)[0];
            let mut d = start;
            loop {
                let (a, b) = self.ends[d];
                rotation[v].push(if a == v { b } else { a });
                d = self.next[d];
                if d == start {
                    break;
                }
            }
        }
        let mut crossings = vec![Vec::new(); n * (n - 1) / 2];
        for a in 0..n {
            let x = self.vertex_of_graph(a);
            for d0 in self.darts_at(x) {
                if !self.forward[d0] {
                    continue;
                }
                let e = edge(self.ends[d0]);
                let mut d = d0;
                loop {
                    let t = self.twin[d];
                    if self.graph[self.origin[t]].is_some() {
                        break;
                    }
                    let e_next = self.next[self.next[t]];
                    let x = self.next[e_next];
                    crossings[e].push(CrossingEntry {
                        partner: edge(self.ends[x]),
                        from_left: !self.forward[x],
                    });
                    d = e_next;
                }
            }
        }
        DrawingSpec {
            n,
            rotation,
            crossings,
        }
    }
}

/// Routes of one new edge from `(x, dx)`, the sector after dart `dx` at map
/// vertex `x`. With `target == None` the route ends at a new pendant vertex
/// `v`; otherwise at a corner of graph vertex `target`.
struct Router {
    v: usize,
    target: Option<usize>,
    /// Segment darts point away from the route start iff `fwd`.
    fwd: bool,
}

impl Router {
    fn edge(&self, start: usize) -> (usize, usize) {
        let u = self.target.unwrap_or(start);
        (u.min(self.v), u.max(self.v))
    }

    fn run(&self, w: &Work, dx: usize, crossed: &mut Vec<(usize, usize)>, out: &mut Vec<Work>, start: usize) {
        let ends = self.edge(start);
        let walk = w.face_walk(w.next[dx]);
        match self.target {
            None => {
                let mut w2 = w.clone();
                let v = w2.add_vertex(Some(self.v));
                let (p, q) = w2.add_segment(ends, self.fwd);
                w2.insert_after(dx, p);
                w2.origin[q] = v;
                out.push(w2);
            }
            Some(u) => {
                for &dy in &walk {
                    if w.graph[w.origin[dy]] == Some(u) {
                        let mut w2 = w.clone();
                        let (p, q) = w2.add_segment(ends, self.fwd);
                        let py = w2.prev(dy);
                        w2.insert_after(dx, p);
                        w2.insert_after(py, q);
                        out.push(w2);
                    }
                }
            }
        }
        for &s in &walk {
            let g = w.ends[s];
            let touches = |y: usize| g.0 == y || g.1 == y;
            if touches(ends.0) || touches(ends.1) || crossed.contains(&g) {
                continue;
            }
            let mut w2 = w.clone();
            let (_, d2, t2) = w2.split(s);
            let (p, q) = w2.add_segment(ends, self.fwd);
            w2.insert_after(dx, p);
            w2.insert_after(t2, q);
            crossed.push(g);
            self.run(&w2, d2, crossed, out, start);
            crossed.pop();
        }
    }
}

/// All good drawings of `K_{k+1}` obtained by adding vertex `k` to `base`.
fn extend(base: &Drawing) -> Vec<Work> {
    let k = base.n();
    let mut layer = Vec::new();
    let w0 = Work::from_drawing(base);
    // first edge: from vertex 0 out to a new pendant vertex k
    let x0 = w0.vertex_of_graph(0);
    for dx in w0.darts_at(x0) {
        let r = Router {
            v: k,
            target: None,
            fwd: true,
        };
        r.run(&w0, dx, &mut Vec::new(), &mut layer, 0);
    }
    for u in 1..k {
        let mut nextl = Vec::new();
        for w in &layer {
            let xv = w.vertex_of_graph(k);
            for dx in w.darts_at(xv) {
                let r = Router {
                    v: k,
                    target: Some(u),
                    fwd: false,
                };
                r.run(w, dx, &mut Vec::new(), &mut nextl, u);
            }
        }
        layer = nextl;
    }
    layer
}

/// Every good drawing of `K_n` up to isomorphism of sphere maps (vertex
/// relabeling and reflection allowed), in order of crossing count and then
/// canonical code.
pub fn enumerate_good_drawings(n: usize) -> Result<Vec<Drawing>, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::BadSize { n, min: 3 });
    }
    let tri = [(0, 0), (4, 0), (0, 4)].map(|(x, y)| ExactPoint::new(x, y));
    let mut current = vec![from_points(&tri)?];
    for k in 3..n {
        let mut classes: BTreeMap<(usize, Vec<usize>), Drawing> = BTreeMap::new();
        for base in &current {
            for w in extend(base) {
                let d = Drawing::from_spec(&w.to_spec(k + 1))?;
                debug_assert!(validate_good(&d).is_ok());
                classes
                    .entry((d.num_crossings(), d.canonical_code()))
                    .or_insert(d);
            }
        }
        current = classes.into_values().collect();
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_has_two_drawings() {
        let ds = enumerate_good_drawings(4).unwrap();
        let counts: Vec<usize> = ds.iter().map(|d| d.num_crossings()).collect();
        assert_eq!(counts, vec![0, 1]);
    }

    #[test]
    fn bundled_corpus_matches_enumeration() {
        for n in 3..=5 {
            let mut found: Vec<Vec<usize>> = enumerate_good_drawings(n)
                .unwrap()
                .iter()
                .map(|d| d.canonical_code())
                .collect();
            let mut bundled: Vec<Vec<usize>> = crate::generators::gen_exhaustive_small(n)
                .unwrap()
                .iter()
                .map(|d| d.canonical_code())
                .collect();
            found.sort();
            bundled.sort();
            assert_eq!(found, bundled, "n = {n}");
        }
    }

    /// Published count of good drawings of K6 with distinct crossing-pair sets
    /// up to vertex relabeling.
    #[test]
    fn k6_weak_classes() {
        let n = 6;
        let edges = crate::drawing::edge_list(n);
        let mut perms = Vec::new();
        permutations(&mut Vec::new(), n, &mut perms);
        let mut classes = std::collections::BTreeSet::new();
        for d in enumerate_good_drawings(n).unwrap() {
            let best = perms
                .iter()
                .map(|p| {
                    let mut pairs = Vec::new();
                    for e in 0..edges.len() {
                        for g in e + 1..edges.len() {
                            if d.crosses(e, g) {
                                let (a, b) = edges[e];
                                let (c, x) = edges[g];
                                let e2 = edge_index(n, p[a], p[b]);
                                let g2 = edge_index(n, p[c], p[x]);
                                pairs.push((e2.min(g2), e2.max(g2)));
                            }
                        }
                    }
                    pairs.sort_unstable();
                    pairs
                })
                .min()
                .unwrap();
            classes.insert(best);
        }
        assert_eq!(classes.len(), 102);
    }

    fn permutations(cur: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !cur.contains(&i) {
                cur.push(i);
                permutations(cur, n, out);
                cur.pop();
            }
        }
    }

    #[test]
    fn enumerated_drawings_are_good() {
        for d in enumerate_good_drawings(5).unwrap() {
            assert!(validate_good(&d).is_ok());
        }
    }
}
