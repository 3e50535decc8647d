//! Drawing generators: random and convex point sets, tin-can drawings and the
//! exhaustive corpus of small drawings.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod enumerate;
pub use enumerate::enumerate_good_drawings;

use crate::arrangement::{ArcRecord, DiskArrangement, SlotEnd};
use crate::drawing::points::straight_crossings;
use crate::drawing::{
    edge_index, from_points, num_edges, CrossingEntry, Drawing, DrawingError, DrawingSpec,
    ExactPoint,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("n must be at least {min}, got {n}")]
    BadSize { n: usize, min: usize },
    #[error("coordinate bound {bound} is below n^2 = {need}")]
    BoundTooSmall { bound: u64, need: u64 },
    #[error("no degeneracy-free point set after {0} attempts")]
    ExhaustedRetries(usize),
    #[error("exhaustive corpus only covers n <= 5, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    RandomPoints,
    ConvexPosition,
    TinCan,
}

/// Everything needed to reproduce a generated drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub seed: u64,
    pub bound: u64,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Drawing, GeneratorError> {
        match self.kind {
            GeneratorKind::RandomPoints => gen_random_points(self.n, self.seed, self.bound),
            GeneratorKind::ConvexPosition => gen_convex_position(self.n),
            GeneratorKind::TinCan => gen_tin_can(self.n),
        }
    }
}

const MAX_ATTEMPTS: usize = 1000;

/// Uniform integer points in `[0, bound]^2`, redrawn from the same stream until
/// the set has no collinear triple and no concurrent crossing.
pub fn gen_random_points(n: usize, seed: u64, bound: u64) -> Result<Drawing, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::BadSize { n, min: 3 });
    }
    let need = (n as u64) * (n as u64);
    if bound < need {
        return Err(GeneratorError::BoundTooSmall { bound, need });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let pts: Vec<ExactPoint> = (0..n)
            .map(|_| ExactPoint::new(rng.gen_range(0..=bound), rng.gen_range(0..=bound)))
            .collect();
        match from_points(&pts) {
            Ok(d) => return Ok(d),
            Err(
                DrawingError::DuplicatePoint(..)
                | DrawingError::CollinearTriple(..)
                | DrawingError::ConcurrentCrossing(..),
            ) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(GeneratorError::ExhaustedRetries(MAX_ATTEMPTS))
}

/// Points `(x, x^2)` on a parabola; see [`parabola`].
pub fn gen_convex_position(n: usize) -> Result<Drawing, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::BadSize { n, min: 3 });
    }
    Ok(from_points(&parabola(n))?)
}

/// `n` points `(x, x^2)` with `x` taken greedily from `0, 1, 2, ...`,
/// skipping any `x` that would make three segments meet in one point.
fn parabola(n: usize) -> Vec<ExactPoint> {
    let mut pts: Vec<ExactPoint> = Vec::with_capacity(n);
    let mut x: i64 = 0;
    while pts.len() < n {
        pts.push(ExactPoint::new(x, x * x));
        if pts.len() >= 6 && from_points(&pts).is_err() {
            pts.pop();
        }
        x += 1;
    }
    pts
}

/// Harary-Hill crossing count `H(n)`.
pub fn harary_hill(n: usize) -> usize {
    (n / 2) * (n.saturating_sub(1) / 2) * (n.saturating_sub(2) / 2) * (n.saturating_sub(3) / 2) / 4
}

/// Cylindrical layout of the tin-can drawing. Angles are in turns.
struct TinCan {
    n: usize,
    p: usize,
    inner: Vec<BigRational>,
    outer: Vec<BigRational>,
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

impl TinCan {
    fn new(n: usize) -> TinCan {
        let p = n.div_ceil(2);
        let q = n / 2;
        // small irregular offsets keep three spirals from meeting in a point
        let inner = (0..p as i64)
            .map(|a| rat(a, p as i64) + rat(a * a, 100_003))
            .collect();
        let outer = (0..q as i64)
            .map(|b| rat(2 * b + 1, 2 * q as i64) + rat(1, 1000) + rat(b * b * b, 1_000_033))
            .collect();
        TinCan { n, p, inner, outer }
    }

    /// Signed angular travel of the spiral from inner `a` to outer `b`, in
    /// `(-1/2, 1/2]`.
    fn helix(&self, a: usize, b: usize) -> BigRational {
        let mut d = &self.outer[b] - &self.inner[a];
        d = &d - d.floor();
        if d > rat(1, 2) {
            d -= BigRational::one();
        }
        d
    }

    fn spec(&self) -> DrawingSpec {
        let (n, p) = (self.n, self.p);
        let q = n - p;
        let m = num_edges(n);
        let mut crossings: Vec<Vec<CrossingEntry>> = vec![Vec::new(); m];

        let lid = |k: usize| straight_crossings(&parabola(k)).expect("parabola is in general position");
        for (local, list) in lid(p).into_iter().enumerate() {
            let (a, b) = local_ends(p, local);
            let e = edge_index(n, a, b);
            crossings[e] = list
                .into_iter()
                .map(|c| {
                    let (x, y) = local_ends(p, c.partner);
                    CrossingEntry {
                        partner: edge_index(n, x, y),
                        from_left: c.from_left,
                    }
                })
                .collect();
        }
        // the outer lid is a mirror image of a convex picture
        for (local, list) in lid(q).into_iter().enumerate() {
            let (a, b) = local_ends(q, local);
            let e = edge_index(n, p + a, p + b);
            crossings[e] = list
                .into_iter()
                .map(|c| {
                    let (x, y) = local_ends(q, c.partner);
                    CrossingEntry {
                        partner: edge_index(n, p + x, p + y),
                        from_left: !c.from_left,
                    }
                })
                .collect();
        }

        let spirals: Vec<(usize, usize, BigRational)> = (0..p)
            .flat_map(|a| (0..q).map(move |b| (a, b)))
            .map(|(a, b)| (a, b, self.helix(a, b)))
            .collect();
        for (a, b, d1) in &spirals {
            let e = edge_index(n, *a, p + b);
            let mut hits: Vec<(BigRational, CrossingEntry)> = Vec::new();
            for (c, x, d2) in &spirals {
                if c == a || x == b {
                    continue;
                }
                for k in -1i64..=1 {
                    let s2 = &self.inner[*c] + BigRational::from_integer(k.into());
                    let start = &self.inner[*a] - &s2;
                    let end = &self.inner[*a] + d1 - (&s2 + d2);
                    if (start.is_positive() && end.is_negative())
                        || (start.is_negative() && end.is_positive())
                    {
                        let t = (&s2 - &self.inner[*a]) / (d1 - d2);
                        hits.push((
                            t,
                            CrossingEntry {
                                partner: edge_index(n, *c, p + x),
                                from_left: d2 < d1,
                            },
                        ));
                    }
                }
            }
            hits.sort_by(|x, y| x.0.cmp(&y.0));
            debug_assert!(hits.windows(2).all(|w| w[0].0 != w[1].0));
            crossings[e] = hits.into_iter().map(|h| h.1).collect();
        }

        let mut rotation = Vec::with_capacity(n);
        for a in 0..p {
            let mut spokes: Vec<(BigRational, usize)> =
                (0..q).map(|b| (self.helix(a, b), p + b)).collect();
            spokes.sort_by(|x, y| x.0.cmp(&y.0));
            let mut rot: Vec<usize> = spokes.into_iter().map(|s| s.1).collect();
            rot.extend((1..p).map(|i| (a + i) % p));
            rotation.push(rot);
        }
        for b in 0..q {
            let mut spokes: Vec<(BigRational, usize)> = (0..p).map(|a| (self.helix(a, b), a)).collect();
            spokes.sort_by(|x, y| x.0.cmp(&y.0));
            let mut rot: Vec<usize> = spokes.into_iter().map(|s| s.1).collect();
            rot.extend((1..q).map(|i| p + (b + q - i) % q));
            rotation.push(rot);
        }
        DrawingSpec {
            n,
            rotation,
            crossings,
        }
    }
}

fn local_ends(k: usize, e: usize) -> (usize, usize) {
    let mut idx = 0;
    for a in 0..k {
        for b in a + 1..k {
            if idx == e {
                return (a, b);
            }
            idx += 1;
        }
    }
    unreachable!("edge index out of range")
}

/// Tin-can drawing: `ceil(n/2)` vertices on an inner rim, `floor(n/2)` on an
/// outer rim, lids drawn as convex chord systems and rim-to-rim edges as
/// shortest spirals. It has `H(n)` crossings. Vertices `0..ceil(n/2)` are the
/// inner rim.
pub fn gen_tin_can(n: usize) -> Result<Drawing, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::BadSize { n, min: 3 });
    }
    Ok(Drawing::from_spec(&TinCan::new(n).spec())?)
}

/// Number of inner-rim vertices of the tin-can drawing on `n` vertices.
pub fn tin_can_inner(n: usize) -> usize {
    n.div_ceil(2)
}

/// Per-triangle choice of side for the tin-can drawing, following its
/// geodesic picture: lid triangles take the side within their lid, mixed
/// triangles the side containing the wall sector at their lone-rim vertex.
/// Entry `i` refers to the `i`-th triangle in lexicographic order and is 0 or
/// 1, indexing the pair returned by `Drawing::triangle_sides`.
pub fn tin_can_geodesic_assignment(d: &Drawing) -> Vec<u8> {
    let n = d.n();
    let p = tin_can_inner(n);
    let inner = |v: usize| v < p;
    let map = d.map();
    crate::convexity::triangles(n)
        .map(|t| {
            let (a, _) = d.triangle_sides(t);
            let k = t.iter().filter(|&&v| inner(v)).count();
            let pick_a = match k {
                3 => !a.contained.iter().any(|&v| !inner(v)),
                0 => !a.contained.iter().any(|&v| inner(v)),
                _ => {
                    let lone = *t.iter().find(|&&v| inner(v) == (k == 1)).unwrap();
                    let others: Vec<usize> = t.iter().copied().filter(|&v| v != lone).collect();
                    // darts at the lone vertex in counterclockwise order
                    let rot: Vec<usize> = map.darts_at(lone).collect();
                    let pos = |w: usize| {
                        let dd = d.dart_towards(lone, w);
                        rot.iter().position(|&x| x == dd).unwrap()
                    };
                    let is_spoke = |x: usize| {
                        let (u, v) = d.ends(d.dart_edge(x));
                        inner(u) != inner(v)
                    };
                    let (p0, p1) = (pos(others[0]), pos(others[1]));
                    let len = rot.len();
                    // walk counterclockwise from one spoke to the other through spokes only
                    let through_spokes = |from: usize, to: usize| {
                        let mut i = (from + 1) % len;
                        while i != to {
                            if !is_spoke(rot[i]) {
                                return false;
                            }
                            i = (i + 1) % len;
                        }
                        true
                    };
                    let from = if through_spokes(p0, p1) { p0 } else { p1 };
                    let corner = map.next(rot[from]);
                    a.contains_face(map.face_of(corner))
                }
            };
            if pick_a {
                0
            } else {
                1
            }
        })
        .collect()
}

/// Every good drawing of `K_n` for `n <= 5` up to isomorphism, loaded from the
/// bundled fixtures.
pub fn gen_exhaustive_small(n: usize) -> Result<Vec<Drawing>, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::BadSize { n, min: 3 });
    }
    let texts: &[&str] = match n {
        3 => &[include_str!("../../fixtures/k3.drawing")],
        4 => &[
            include_str!("../../fixtures/k4_planar.drawing"),
            include_str!("../../fixtures/k4_crossing.drawing"),
        ],
        5 => K5_FIXTURES,
        _ => return Err(GeneratorError::TooLarge(n)),
    };
    Ok(texts
        .iter()
        .map(|t| crate::io::parse_drawing(t).expect("bundled fixture parses"))
        .collect())
}

const K5_FIXTURES: &[&str] = &[
    include_str!("../../fixtures/k5_a.drawing"),
    include_str!("../../fixtures/k5_b.drawing"),
    include_str!("../../fixtures/k5_c.drawing"),
    include_str!("../../fixtures/k5_d.drawing"),
    include_str!("../../fixtures/k5_e.drawing"),
];

/// Random arrangement of `m` pseudolines from a wiring diagram: starting
/// from the order `0..m`, a uniformly chosen adjacent pair that has not
/// crossed yet is swapped until the order is reversed.
pub fn gen_random_pseudolines(m: usize, seed: u64) -> DiskArrangement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..m).collect();
    let mut arcs: Vec<ArcRecord> = (0..m)
        .map(|_| ArcRecord {
            crossings: Vec::new(),
            pseudoline: true,
        })
        .collect();
    loop {
        let open: Vec<usize> = (0..m.saturating_sub(1)).filter(|&i| order[i] < order[i + 1]).collect();
        if open.is_empty() {
            break;
        }
        let i = open[rng.gen_range(0..open.len())];
        let (a, b) = (order[i], order[i + 1]);
        arcs[a].crossings.push(b);
        arcs[b].crossings.push(a);
        order.swap(i, i + 1);
    }
    let slots = (0..m)
        .map(|a| (a, SlotEnd::Start))
        .chain((0..m).map(|a| (a, SlotEnd::End)))
        .collect();
    DiskArrangement { arcs, slots }
}
