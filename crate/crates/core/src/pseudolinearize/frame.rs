//! Hull paths and end regions of one edge relative to the witness face.

use crate::convexity::{convex_hull, SideSets};
use crate::drawing::Drawing;

use super::PseudolinearError;

/// Region between the two side hulls and the boundary cycle at one end of an
/// edge that is not on the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndFrame {
    pub vertex: usize,
    /// Boundary edge closing the region, as its end on the side-1 path
    /// followed by its end on the side-2 path.
    pub boundary_edge: (usize, usize),
    /// Vertices of the bounding cycle: along the side-1 path from `vertex`,
    /// across the boundary edge, and back along the side-2 path.
    pub cycle: Vec<usize>,
    /// Drawing darts at `vertex` whose counterclockwise sector opens into
    /// the region: the region lies between `corner.0` and `corner.1`.
    pub corner: (usize, usize),
    /// Faces of the drawing inside the region.
    pub faces: Vec<usize>,
}

/// Frame of edge `uv` relative to the witness face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFrame {
    pub edge: (usize, usize),
    pub sides: SideSets,
    /// Hull cycles of the two side sets.
    pub side_cycles: [Vec<usize>; 2],
    /// Per side, the part of its hull cycle through `uv` whose ends lie on
    /// the boundary cycle, listed from the `u` end to the `v` end.
    pub paths: [Vec<usize>; 2],
    /// Ends of `uv` off the boundary cycle, `u` first.
    pub ends: Vec<EndFrame>,
}

impl EdgeFrame {
    /// Graph edges of the side-`j` path (`j` in `0..2`), as ordered pairs.
    pub fn path_edges(&self, j: usize) -> Vec<(usize, usize)> {
        self.paths[j]
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect()
    }

    pub fn end(&self, a: usize) -> Option<&EndFrame> {
        self.ends.iter().find(|x| x.vertex == a)
    }
}

fn on_cycle_edge(cycle: &[usize], a: usize, b: usize) -> bool {
    let k = cycle.len();
    (0..k).any(|i| {
        let (p, q) = (cycle[i], cycle[(i + 1) % k]);
        (p == a && q == b) || (p == b && q == a)
    })
}

pub(crate) fn build_frame(
    d: &Drawing,
    f: usize,
    boundary: &[usize],
    sides: SideSets,
) -> Result<EdgeFrame, PseudolinearError> {
    let (u, v) = sides.edge;
    if on_cycle_edge(boundary, u, v) {
        return Err(PseudolinearError::BoundaryEdge((u, v)));
    }
    let internal = |what: &str| PseudolinearError::InternalError(format!("frame of edge ({u}, {v}): {what}"));
    let on_b = |x: usize| boundary.contains(&x);
    let mut side_cycles: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    let mut paths: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for j in 0..2 {
        let set = if j == 0 { &sides.side1 } else { &sides.side2 };
        if set.len() < 3 {
            return Err(internal("a side set is empty"));
        }
        let hull = convex_hull(d, f, set).map_err(|_| internal("side hull is not a cycle"))?;
        let cyc = hull.cycle;
        let len = cyc.len();
        let iu = cyc.iter().position(|&x| x == u).ok_or_else(|| internal("u off its side hull"))?;
        let iv = cyc.iter().position(|&x| x == v).ok_or_else(|| internal("v off its side hull"))?;
        // step leading away from v when starting at u
        let step = if cyc[(iu + 1) % len] == v {
            len - 1
        } else if cyc[(iu + len - 1) % len] == v {
            1
        } else {
            return Err(internal("uv is not a side hull edge"));
        };
        let mut upart = vec![u];
        let mut i = iu;
        while !on_b(cyc[i]) {
            i = (i + step) % len;
            upart.push(cyc[i]);
            if upart.len() > len {
                return Err(internal("side hull misses the boundary"));
            }
        }
        let mut vpart = vec![v];
        i = iv;
        while !on_b(cyc[i]) {
            i = (i + len - step) % len;
            vpart.push(cyc[i]);
            if vpart.len() > len {
                return Err(internal("side hull misses the boundary"));
            }
        }
        upart.reverse();
        upart.extend(vpart);
        paths[j] = upart;
        side_cycles[j] = cyc;
    }
    let map = d.map();
    let mut ends = Vec::new();
    for (a, b, at_u) in [(u, v, true), (v, u, false)] {
        if on_b(a) {
            continue;
        }
        // the path from a to its boundary end, per side
        let leg = |j: usize| -> Vec<usize> {
            let p = &paths[j];
            let ia = p.iter().position(|&x| x == a).unwrap();
            if at_u {
                p[..=ia].iter().rev().copied().collect()
            } else {
                p[ia..].to_vec()
            }
        };
        let (leg1, leg2) = (leg(0), leg(1));
        let (a1, a2) = (*leg1.last().unwrap(), *leg2.last().unwrap());
        if !on_cycle_edge(boundary, a1, a2) {
            return Err(internal("path ends are not joined by a boundary edge"));
        }
        let mut cycle = leg1.clone();
        cycle.extend(leg2.iter().rev().take(leg2.len() - 1));
        let dp1 = d.dart_towards(a, leg1[1]);
        let dp2 = d.dart_towards(a, leg2[1]);
        let db = d.dart_towards(a, b);
        let mut x = map.next(dp1);
        let mut through_b = false;
        while x != dp2 {
            through_b |= x == db;
            x = map.next(x);
        }
        let corner = if through_b { (dp2, dp1) } else { (dp1, dp2) };
        if map.next(corner.0) != corner.1 {
            return Err(internal("an edge enters the end region"));
        }
        let mut qedges = Vec::new();
        for i in 0..cycle.len() {
            qedges.push(d.edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
        let region = map.flood_faces(&[map.face_of(corner.1)], |dd| qedges.contains(&d.dart_edge(dd)));
        if region[f] {
            return Err(internal("end region reaches the witness face"));
        }
        ends.push(EndFrame {
            vertex: a,
            boundary_edge: (a1, a2),
            cycle,
            corner,
            faces: (0..region.len()).filter(|&g| region[g]).collect(),
        });
    }
    Ok(EdgeFrame {
        edge: (u, v),
        sides,
        side_cycles,
        paths,
        ends,
    })
}
