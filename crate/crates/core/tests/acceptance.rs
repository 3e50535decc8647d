//! Acceptance suite. Every criterion prints one PASS/FAIL line; the run
//! fails if any criterion fails. Built without the libtest harness so the
//! lines are never captured.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pseudolin::arrangement::{
    dual_path, levi_extend, validate_arrangement, ArrMap, ArrPoint, DiskArrangement,
};
use pseudolin::convexity::{
    check_four_vertex_sides, check_no_interlacing, check_side_hulls, face_convex_witnesses,
    forbidden_config_check, SideTable,
};
use pseudolin::generators::{
    enumerate_good_drawings, gen_exhaustive_small, gen_random_points, gen_random_pseudolines,
    gen_tin_can, harary_hill, tin_can_geodesic_assignment,
};
use pseudolin::pseudolinearize::{pseudolinearize, verify_extension};
use pseudolin::triangles::{
    check_hereditary, check_iv_property, empty_census, iv_ordering, verify_convex_bound,
    verify_face_convex_bound, SideAssignment,
};
use pseudolin::Drawing;

type Outcome = Result<String, String>;
/// Name, check and time budget in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Harary-Hill number straight from the product formula.
fn hh(n: usize) -> usize {
    (n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2) / 4
}

fn random_drawing(n: usize, seed: u64) -> Drawing {
    gen_random_points(n, seed, 1000.max((n * n) as u64)).unwrap()
}

/// Pseudolinearization of every edge, checked for count, pairwise single
/// crossings, sub-chains and crossing preservation.
fn check_pseudolinear(d: &Drawing, f: usize) -> Result<DiskArrangement, String> {
    let arr = pseudolinearize(d, f).map_err(|e| format!("face {f}: {e}"))?;
    let m = d.num_edges();
    if arr.num_arcs() != m {
        return Err(format!("{} pseudolines for {m} edges", arr.num_arcs()));
    }
    validate_arrangement(&arr, true).map_err(|v| format!("invalid arrangement {v:?}"))?;
    if arr.num_crossings() != choose2(m) {
        return Err(format!("{} crossings among {m} pseudolines", arr.num_crossings()));
    }
    for a in 0..m {
        for b in 0..m {
            let k = arr.arcs[a].crossings.iter().filter(|&&x| x == b).count();
            if k != usize::from(a != b) {
                return Err(format!("pseudolines {a} and {b} cross {k} times"));
            }
        }
    }
    verify_extension(d, &arr).map_err(|v| format!("not an extension: {v:?}"))?;
    Ok(arr)
}

fn c1_pseudolinearization() -> Outcome {
    for seed in 1..=200u64 {
        let n = 4 + (seed as usize - 1) % 7;
        let d = random_drawing(n, seed);
        check_pseudolinear(&d, d.outer().unwrap()).map_err(|e| format!("n={n} seed={seed}: {e}"))?;
    }
    let d = gen_tin_can(6).unwrap();
    let w = face_convex_witnesses(&d);
    for &f in &w {
        check_pseudolinear(&d, f).map_err(|e| format!("tin-can K6: {e}"))?;
    }
    Ok(format!("200 rectilinear drawings and tin-can K6 on {} witness faces", w.len()))
}

/// Inner faces and arc segments of an arrangement, as locators.
fn locators(arr: &DiskArrangement) -> (Vec<ArrPoint>, Vec<ArrPoint>) {
    let am = ArrMap::build(arr).unwrap();
    let faces = am.inner_faces().into_iter().map(ArrPoint::Face).collect();
    let mut segs = Vec::new();
    for arc in 0..arr.num_arcs() {
        for segment in 0..=arr.arcs[arc].crossings.len() {
            segs.push(ArrPoint::OnArc { arc, segment });
        }
    }
    (faces, segs)
}

fn fuzz_arrangements() -> Vec<DiskArrangement> {
    let mut out = Vec::new();
    for (i, n) in [4, 5, 6].into_iter().enumerate() {
        for seed in 1..=4u64 {
            let d = random_drawing(n, seed + 10 * i as u64);
            out.push(pseudolinearize(&d, d.outer().unwrap()).unwrap());
        }
    }
    let d = gen_tin_can(6).unwrap();
    out.push(pseudolinearize(&d, face_convex_witnesses(&d)[0]).unwrap());
    for m in 1..=7 {
        out.push(gen_random_pseudolines(m, m as u64));
    }
    out
}

fn c2_levi() -> Outcome {
    let pool = fuzz_arrangements();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut cases = 0;
    while cases < 500 {
        let arr = &pool[rng.gen_range(0..pool.len())];
        let (faces, segs) = locators(arr);
        let pick = |rng: &mut ChaCha8Rng| {
            if rng.gen_bool(0.5) {
                faces[rng.gen_range(0..faces.len())]
            } else {
                segs[rng.gen_range(0..segs.len())]
            }
        };
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        if let (ArrPoint::OnArc { arc: x, .. }, ArrPoint::OnArc { arc: y, .. }) = (a, b) {
            if x == y {
                continue;
            }
        }
        cases += 1;
        let m = arr.num_arcs();
        let ext = levi_extend(arr, a, b).map_err(|e| format!("{a:?} {b:?}: {e:?}"))?;
        validate_arrangement(&ext, true).map_err(|v| format!("{a:?} {b:?}: invalid {v:?}"))?;
        if ext.num_arcs() != m + 1 {
            return Err(format!("{} pseudolines after adding one to {m}", ext.num_arcs()));
        }
        for x in 0..m {
            let kept: Vec<usize> = ext.arcs[x].crossings.iter().copied().filter(|&g| g != m).collect();
            if kept != arr.arcs[x].crossings {
                return Err(format!("crossings of pseudoline {x} changed"));
            }
        }
        for p in [a, b] {
            if let ArrPoint::OnArc { arc, segment } = p {
                let at = ext.arcs[arc].crossings.iter().position(|&g| g == m);
                if at != Some(segment) {
                    return Err(format!("new pseudoline misses segment {segment} of {arc}"));
                }
            }
        }
    }
    Ok(format!("{cases} cases over {} arrangements", pool.len()))
}

/// Arcs separating two faces, by two-coloring the faces once per arc.
fn separating_arcs(arr: &DiskArrangement, a: usize, b: usize) -> Vec<usize> {
    let am = ArrMap::build(arr).unwrap();
    let map = &am.map;
    let mut out = Vec::new();
    for arc in 0..arr.num_arcs() {
        let mut color = vec![None; map.num_faces()];
        color[a] = Some(false);
        let mut stack = vec![a];
        while let Some(f) = stack.pop() {
            for &d in map.face(f) {
                if am.is_boundary(d) {
                    continue;
                }
                let g = map.left_face(d);
                let c = color[f].unwrap() ^ (am.dart_line(d) == arc);
                if color[g].is_none() {
                    color[g] = Some(c);
                    stack.push(g);
                }
            }
        }
        if color[b] == Some(true) {
            out.push(arc);
        }
    }
    out
}

fn c3_dual_path() -> Outcome {
    let pool = fuzz_arrangements();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for case in 0..300 {
        let arr = &pool[case % pool.len()];
        let inner = ArrMap::build(arr).unwrap().inner_faces();
        let a = inner[rng.gen_range(0..inner.len())];
        let b = inner[rng.gen_range(0..inner.len())];
        let path = dual_path(arr, ArrPoint::Face(a), ArrPoint::Face(b)).map_err(|e| format!("{e:?}"))?;
        let mut crossed: Vec<usize> = path.crossed.iter().map(|c| c.0).collect();
        crossed.sort_unstable();
        if crossed.windows(2).any(|w| w[0] == w[1]) {
            return Err(format!("case {case}: an arc is crossed twice"));
        }
        let oracle = separating_arcs(arr, a, b);
        if crossed != oracle {
            return Err(format!("case {case}: path crosses {crossed:?}, separators {oracle:?}"));
        }
    }
    Ok("300 cases".into())
}

fn c4_forbidden_configuration() -> Outcome {
    let mut corpus: Vec<Drawing> = (3..=5).flat_map(|n| gen_exhaustive_small(n).unwrap()).collect();
    let exhaustive = corpus.len();
    corpus.extend((1..=100u64).map(|seed| random_drawing(4 + seed as usize % 5, seed)));
    let mut faces = 0;
    for (i, d) in corpus.iter().enumerate() {
        let w = face_convex_witnesses(d);
        for f in 0..d.map().num_faces() {
            faces += 1;
            if w.contains(&f) != forbidden_config_check(d, f) {
                return Err(format!("drawing {i}, face {f}"));
            }
        }
    }
    Ok(format!("{exhaustive} exhaustive + 100 random drawings, {faces} faces"))
}

fn c5_tin_can() -> Outcome {
    let d = gen_tin_can(6).unwrap();
    if d.num_crossings() != 3 || hh(6) != 3 {
        return Err(format!("tin-can K6 has {} crossings", d.num_crossings()));
    }
    let map = d.map();
    let triangles: Vec<usize> = (0..map.num_faces())
        .filter(|&f| {
            let vs = map.face_vertices(f);
            vs.len() == 3 && vs.iter().all(|&x| d.is_graph_vertex(x))
        })
        .collect();
    if triangles.len() != 2 {
        return Err(format!("{} faces bounded by 3-cycles", triangles.len()));
    }
    let w = face_convex_witnesses(&d);
    if !triangles.iter().all(|f| w.contains(f)) {
        return Err(format!("3-cycle faces {triangles:?}, witnesses {w:?}"));
    }
    for n in 3..=12 {
        let c = gen_tin_can(n).unwrap().num_crossings();
        if c != hh(n) || harary_hill(n) != hh(n) {
            return Err(format!("tin-can K{n}: {c} crossings, H = {}", hh(n)));
        }
    }
    Ok("3 crossings, both 3-cycle faces witness; H(n) matches for n <= 12".into())
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    (b.0 - a.0) as i128 * (c.1 - a.1) as i128 - (b.1 - a.1) as i128 * (c.0 - a.0) as i128
}

/// Triangles of the point set with no point strictly inside.
fn geometric_empty_triangles(d: &Drawing) -> usize {
    let p: Vec<(i64, i64)> = d
        .coords()
        .unwrap()
        .iter()
        .map(|q| (q.x.to_i64().unwrap(), q.y.to_i64().unwrap()))
        .collect();
    let n = p.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let inside = (0..n).any(|x| {
                    let s = [orient(p[i], p[j], p[x]), orient(p[j], p[k], p[x]), orient(p[k], p[i], p[x])];
                    s.iter().all(|&v| v > 0) || s.iter().all(|&v| v < 0)
                });
                count += usize::from(!inside);
            }
        }
    }
    count
}

fn c6_census() -> Outcome {
    for seed in 1..=50u64 {
        let n = 3 + seed as usize % 10;
        let d = random_drawing(n, seed);
        let got = empty_census(&d, d.outer()).outer_total.unwrap();
        let want = geometric_empty_triangles(&d);
        if got != want {
            return Err(format!("n={n} seed={seed}: census {got}, geometry {want}"));
        }
    }
    Ok("50 drawings, n in 3..=12".into())
}

fn c7_face_convex_bound() -> Outcome {
    let mut lines = Vec::new();
    for n in [10, 15, 20, 25, 30] {
        for seed in 1..=2u64 {
            let d = random_drawing(n, seed);
            let r = verify_face_convex_bound(&d, d.outer().unwrap()).map_err(|e| e.to_string())?;
            if !r.bound_holds() || !r.incident_empty_holds() {
                return Err(format!(
                    "n={n} seed={seed}: census {} bound {} missing {:?}",
                    r.census, r.bound, r.missing_incident_empty
                ));
            }
            if seed == 1 {
                lines.push(format!("n={n}: {} >= {}", r.census, r.bound));
            }
        }
    }
    Ok(lines.join(", "))
}

fn c8_convex_bound() -> Outcome {
    let mut corpus: Vec<(String, Drawing)> = (6..=10).map(|n| (format!("tin-can {n}"), gen_tin_can(n).unwrap())).collect();
    corpus.extend((4..=15).map(|n| (format!("random {n}"), random_drawing(n, n as u64))));
    for (name, d) in &corpus {
        let r = verify_convex_bound(d).map_err(|e| format!("{name}: {e}"))?;
        if !r.crossed_edges_in_two() || !r.census_holds() || !r.crossed_count_holds() {
            return Err(format!("{name}: {r:?}"));
        }
    }
    Ok(format!("{} drawings", corpus.len()))
}

fn face_convex_corpus() -> Vec<Drawing> {
    let mut corpus: Vec<Drawing> = (3..=5).flat_map(|n| gen_exhaustive_small(n).unwrap()).collect();
    corpus.extend((6..=7).flat_map(|n| (1..=3u64).map(move |s| random_drawing(n, s))));
    corpus.extend((6..=7).map(|n| gen_tin_can(n).unwrap()));
    corpus.retain(|d| !face_convex_witnesses(d).is_empty());
    corpus
}

fn c9_iv_ordering() -> Outcome {
    let mut corpus = face_convex_corpus();
    corpus.extend((8..=10).map(|n| random_drawing(n, 9)));
    let mut checked = 0;
    for (i, d) in corpus.iter().enumerate() {
        for f in face_convex_witnesses(d) {
            let o = iv_ordering(d, f).map_err(|e| format!("drawing {i}: {e}"))?;
            check_iv_property(d, &o, &SideAssignment::avoiding(d, f))
                .map_err(|w| format!("drawing {i} face {f}: {w:?}"))?;
            checked += 1;
        }
    }
    for n in 4..=10 {
        let d = random_drawing(n, 90 + n as u64);
        check_hereditary(&d, &SideAssignment::avoiding(&d, d.outer().unwrap()))
            .map_err(|w| format!("rectilinear n={n}: {w:?}"))?;
    }
    for n in 6..=10 {
        let d = gen_tin_can(n).unwrap();
        let a = SideAssignment::from_sides(n, tin_can_geodesic_assignment(&d)).map_err(|e| e.to_string())?;
        check_hereditary(&d, &a).map_err(|w| format!("tin-can n={n}: {w:?}"))?;
    }
    Ok(format!("{checked} (drawing, face) orderings; heredity on 7 rectilinear and 5 tin-can drawings"))
}

fn c10_side_sets() -> Outcome {
    let mut corpus = face_convex_corpus();
    corpus.extend(
        enumerate_good_drawings(6)
            .unwrap()
            .into_iter()
            .filter(|d| !face_convex_witnesses(d).is_empty()),
    );
    let (mut quads, mut subsets) = (0usize, 0usize);
    for (i, d) in corpus.iter().enumerate() {
        let n = d.n();
        for f in face_convex_witnesses(d) {
            let sides = SideTable::new(d, f);
            for u in 0..n {
                for v in u + 1..n {
                    let rest: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
                    for (a, &x) in rest.iter().enumerate() {
                        for &y in &rest[a + 1..] {
                            quads += 1;
                            let r = check_four_vertex_sides(d, f, &sides, (u, v), x, y);
                            if !r.all() {
                                return Err(format!("drawing {i} face {f} uv=({u},{v}) x={x} y={y}: {r:?}"));
                            }
                        }
                    }
                    for mask in 1u32..(1 << rest.len()) {
                        let mut w = vec![u, v];
                        w.extend(rest.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x));
                        subsets += 1;
                        let r = check_side_hulls(d, f, &sides, (u, v), &w);
                        if !r.all() {
                            return Err(format!("drawing {i} face {f} uv=({u},{v}) W={w:?}: {r:?}"));
                        }
                        if !check_no_interlacing(d, f, &sides, (u, v), &w) {
                            return Err(format!("drawing {i} face {f} uv=({u},{v}) W={w:?}: sides interlace"));
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{} drawings, {quads} (uv, x, y) and {subsets} (uv, W) tuples", corpus.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 pseudolinearization soundness", c1_pseudolinearization, 60),
        ("2 Levi enlargement", c2_levi, 30),
        ("3 dual-path oracle equivalence", c3_dual_path, 10),
        ("4 forbidden-configuration equivalence", c4_forbidden_configuration, 60),
        ("5 tin-can K6 and crossing counts", c5_tin_can, 1),
        ("6 census oracle equivalence", c6_census, 60),
        ("7 face-convex census bound", c7_face_convex_bound, 120),
        ("8 convex census bound", c8_convex_bound, 60),
        ("9 intermediate-value ordering and heredity", c9_iv_ordering, 60),
        ("10 side-set property suites", c10_side_sets, 120),
    ];
    let mut failed = Vec::new();
    for (name, run, budget) in criteria {
        let t = Instant::now();
        let outcome = run();
        let took = t.elapsed();
        let over = took > Duration::from_secs(budget);
        match (&outcome, over) {
            (Ok(detail), false) => println!("PASS criterion {name}: {detail} [{took:.2?}]"),
            (Ok(detail), true) => {
                println!("FAIL criterion {name}: {detail} [{took:.2?} over the {budget} s budget]");
                failed.push(name);
            }
            (Err(why), _) => {
                println!("FAIL criterion {name}: {why} [{took:.2?}]");
                failed.push(name);
            }
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
