//! Deterministic SVG output for drawings and arrangements.
//!
//! Drawings with coordinates are drawn straight. Drawings without coordinates
//! and arrangements are laid out as rubber bands: the vertices of one face
//! are pinned to a circle and every other vertex of the planarization is
//! relaxed toward the average of its neighbors.

use std::fmt::Write as _;

use num::ToPrimitive;

use crate::arrangement::{ArrMap, DiskArrangement, SlotEnd};
use crate::drawing::Drawing;
use crate::planar_map::{MapError, PlanarMap};

const SIZE: f64 = 400.0;
const MARGIN: f64 = 30.0;
const RELAX_ROUNDS: usize = 2000;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

type Pt = (f64, f64);

fn header(out: &mut String) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
}

fn polyline(out: &mut String, pts: &[Pt], color: &str) {
    let coords: Vec<String> = pts.iter().map(|p| format!("{:.2},{:.2}", p.0, p.1)).collect();
    let _ = writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
        coords.join(" ")
    );
}

fn dot(out: &mut String, p: Pt, label: &str) {
    let _ = writeln!(out, r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="black"/>"#, p.0, p.1);
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="11" font-family="sans-serif">{label}</text>"#,
        p.0 + 6.0,
        p.1 - 6.0
    );
}

fn circle_point(i: usize, k: usize) -> Pt {
    let c = SIZE / 2.0;
    let r = c - MARGIN;
    let t = std::f64::consts::TAU * i as f64 / k as f64;
    // screen y grows downward, so negate to keep counterclockwise order
    (c + r * t.cos(), c - r * t.sin())
}

/// Relaxes free vertices toward the average of their neighbors.
fn relax(map: &PlanarMap, pos: &mut [Pt], pinned: &[bool]) {
    for _ in 0..RELAX_ROUNDS {
        for v in 0..pos.len() {
            if pinned[v] {
                continue;
            }
            let (mut sx, mut sy, mut k) = (0.0, 0.0, 0.0);
            for d in map.darts_at(v) {
                let w = map.target(d);
                sx += pos[w].0;
                sy += pos[w].1;
                k += 1.0;
            }
            if k > 0.0 {
                pos[v] = (sx / k, sy / k);
            }
        }
    }
}

fn drawing_layout(d: &Drawing) -> Vec<Pt> {
    let map = d.map();
    let nv = map.num_vertices();
    if let Some(coords) = d.coords() {
        let xs: Vec<f64> = coords.iter().map(|p| p.x.to_f64().unwrap_or(0.0)).collect();
        let ys: Vec<f64> = coords.iter().map(|p| p.y.to_f64().unwrap_or(0.0)).collect();
        let (x0, x1) = xs.iter().fold((f64::MAX, f64::MIN), |a, &x| (a.0.min(x), a.1.max(x)));
        let (y0, y1) = ys.iter().fold((f64::MAX, f64::MIN), |a, &y| (a.0.min(y), a.1.max(y)));
        let span = (x1 - x0).max(y1 - y0).max(1.0);
        let scale = (SIZE - 2.0 * MARGIN) / span;
        let mut pos = vec![(0.0, 0.0); nv];
        for v in 0..coords.len() {
            pos[v] = (MARGIN + (xs[v] - x0) * scale, SIZE - MARGIN - (ys[v] - y0) * scale);
        }
        return pos;
    }
    let outer = d.outer().unwrap_or_else(|| {
        (0..map.num_faces())
            .max_by_key(|&f| (map.face(f).len(), std::cmp::Reverse(f)))
            .unwrap_or(0)
    });
    let ring = map.face_vertices(outer);
    let mut pos = vec![(SIZE / 2.0, SIZE / 2.0); nv];
    let mut pinned = vec![false; nv];
    // the outer face walk runs clockwise around the picture
    for (i, &v) in ring.iter().rev().enumerate() {
        pos[v] = circle_point(i, ring.len());
        pinned[v] = true;
    }
    relax(map, &mut pos, &pinned);
    pos
}

/// SVG of a drawing: graph vertices as labeled dots, edges as polylines
/// through their crossings.
pub fn render_drawing_svg(d: &Drawing) -> String {
    let pos = drawing_layout(d);
    let map = d.map();
    let mut out = String::new();
    header(&mut out);
    for e in 0..d.num_edges() {
        let chain = d.chain(e);
        let mut pts: Vec<Pt> = chain.iter().map(|&x| pos[map.origin(x)]).collect();
        if let Some(&last) = chain.last() {
            pts.push(pos[map.target(last)]);
        }
        polyline(&mut out, &pts, "#333333");
    }
    for v in 0..d.n() {
        dot(&mut out, pos[v], &v.to_string());
    }
    out.push_str("</svg>\n");
    out
}

/// SVG of an arrangement in the disk model: the boundary circle, one colored
/// polyline per arc, and slot labels `a+` / `a-` for start and end slots.
pub fn render_arrangement_svg(arr: &DiskArrangement) -> Result<String, MapError> {
    let am = ArrMap::build(arr)?;
    let map = &am.map;
    let ns = am.num_boundary_segments();
    let mut pos = vec![(SIZE / 2.0, SIZE / 2.0); map.num_vertices()];
    let mut pinned = vec![false; map.num_vertices()];
    for s in 0..ns {
        pos[s] = circle_point(s, ns);
        pinned[s] = true;
    }
    relax(map, &mut pos, &pinned);
    let mut out = String::new();
    header(&mut out);
    let _ = writeln!(
        out,
        r#"<circle cx="{c:.2}" cy="{c:.2}" r="{r:.2}" fill="none" stroke="black" stroke-width="1"/>"#,
        c = SIZE / 2.0,
        r = SIZE / 2.0 - MARGIN
    );
    for a in 0..am.num_arcs() {
        let k = am.num_arc_segments(a);
        let mut pts: Vec<Pt> = (0..k).map(|j| pos[map.origin(am.arc_dart(a, j))]).collect();
        pts.push(pos[map.target(am.arc_dart(a, k - 1))]);
        polyline(&mut out, &pts, PALETTE[a % PALETTE.len()]);
    }
    for (s, &(a, end)) in arr.slots.iter().enumerate() {
        let mark = if end == SlotEnd::Start { '+' } else { '-' };
        let (x, y) = pos[s];
        let c = SIZE / 2.0;
        let (lx, ly) = (c + (x - c) * 1.07, c + (y - c) * 1.07);
        let _ = writeln!(
            out,
            r#"<text x="{lx:.2}" y="{ly:.2}" font-size="10" font-family="sans-serif" text-anchor="middle">{a}{mark}</text>"#
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::from_points;
    use crate::generators::{gen_convex_position, gen_tin_can};
    use crate::pseudolinearize::pseudolinearize;
    use crate::ExactPoint;

    #[test]
    fn triangle_has_three_dots_and_segments() {
        let p = [ExactPoint::new(0, 0), ExactPoint::new(4, 0), ExactPoint::new(0, 4)];
        let svg = render_drawing_svg(&from_points(&p).unwrap());
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<polyline").count(), 3);
    }

    #[test]
    fn output_is_deterministic() {
        let d = gen_tin_can(6).unwrap();
        assert_eq!(render_drawing_svg(&d), render_drawing_svg(&d));
        let arr = pseudolinearize(&d, crate::convexity::face_convex_witnesses(&d)[0]).unwrap();
        assert_eq!(render_arrangement_svg(&arr).unwrap(), render_arrangement_svg(&arr).unwrap());
    }

    #[test]
    fn k4_arrangement_has_six_curves() {
        let d = gen_convex_position(4).unwrap();
        let arr = pseudolinearize(&d, d.outer().unwrap()).unwrap();
        let svg = render_arrangement_svg(&arr).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 6);
        let crossings: usize = (0..6).map(|a| arr.arcs[a].crossings.len()).sum::<usize>() / 2;
        assert_eq!(crossings, 15);
        assert_eq!(svg.matches("<text").count(), 12);
    }
}
