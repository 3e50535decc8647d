//! Brute-force geometry used as an oracle for rectilinear drawings.

#![allow(dead_code)]

use num::ToPrimitive;
use pseudolin::Drawing;

pub type P = (i64, i64);

pub fn points(d: &Drawing) -> Vec<P> {
    d.coords()
        .expect("rectilinear drawing")
        .iter()
        .map(|q| (q.x.to_i64().unwrap(), q.y.to_i64().unwrap()))
        .collect()
}

pub fn orient(a: P, b: P, c: P) -> i128 {
    (b.0 - a.0) as i128 * (c.1 - a.1) as i128 - (b.1 - a.1) as i128 * (c.0 - a.0) as i128
}

/// Whether `x` lies strictly inside triangle `abc`.
pub fn inside(a: P, b: P, c: P, x: P) -> bool {
    let s = [orient(a, b, x), orient(b, c, x), orient(c, a, x)];
    s.iter().all(|&v| v > 0) || s.iter().all(|&v| v < 0)
}

/// Whether segments `ab` and `cd` cross at a point interior to both.
pub fn segments_cross(a: P, b: P, c: P, d: P) -> bool {
    let s1 = orient(a, b, c).signum() * orient(a, b, d).signum();
    let s2 = orient(c, d, a).signum() * orient(c, d, b).signum();
    s1 < 0 && s2 < 0
}
