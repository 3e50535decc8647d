//! Line-oriented text formats for drawings and arrangements.
//!
//! Drawing files:
//!
//! ```text
//! drawing 1
//! n 4
//! vertex 0 : 1 2 3
//! ...
//! edge 1 0 2 : 4L
//! ...
//! outer 2
//! coord 0 0 0
//! end
//! ```
//!
//! `vertex` lines give the counterclockwise neighbor order. `edge` lines give
//! the crossing partners in order from the smaller endpoint; `L` means the
//! partner arrives from the left. `outer` and `coord` lines are optional.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use num::bigint::BigInt;

use crate::arrangement::{ArcRecord, DiskArrangement, SlotEnd};
use crate::drawing::{edge_list, num_edges, CrossingEntry, Drawing, DrawingSpec, ExactPoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn perr(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Non-empty, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ParseError> {
    tok.ok_or_else(|| perr(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| perr(line, format!("bad {what}")))
}

pub fn write_drawing(d: &Drawing) -> String {
    let spec = d.to_spec();
    let mut out = String::new();
    writeln!(out, "drawing 1").unwrap();
    writeln!(out, "n {}", spec.n).unwrap();
    for (u, rot) in spec.rotation.iter().enumerate() {
        let r: Vec<String> = rot.iter().map(|w| w.to_string()).collect();
        writeln!(out, "vertex {u} : {}", r.join(" ")).unwrap();
    }
    for (e, (u, v)) in edge_list(spec.n).into_iter().enumerate() {
        let c: Vec<String> = spec.crossings[e]
            .iter()
            .map(|c| format!("{}{}", c.partner, if c.from_left { 'L' } else { 'R' }))
            .collect();
        if c.is_empty() {
            writeln!(out, "edge {e} {u} {v} :").unwrap();
        } else {
            writeln!(out, "edge {e} {u} {v} : {}", c.join(" ")).unwrap();
        }
    }
    if let Some(f) = d.outer() {
        writeln!(out, "outer {f}").unwrap();
    }
    if let Some(pts) = d.coords() {
        for (i, p) in pts.iter().enumerate() {
            writeln!(out, "coord {i} {} {}", p.x, p.y).unwrap();
        }
    }
    writeln!(out, "end").unwrap();
    out
}

pub fn parse_drawing(text: &str) -> Result<Drawing, ParseError> {
    let mut lines = content_lines(text);
    let (l0, header) = lines.next().ok_or_else(|| perr(0, "empty input"))?;
    let mut h = header.split_whitespace();
    if h.next() != Some("drawing") {
        return Err(perr(l0, "expected 'drawing <version>'"));
    }
    let version: u32 = num(h.next(), l0, "version")?;
    if version != 1 {
        return Err(perr(l0, format!("unsupported version {version}")));
    }
    let (l1, nline) = lines.next().ok_or_else(|| perr(l0, "missing 'n' line"))?;
    let mut t = nline.split_whitespace();
    if t.next() != Some("n") {
        return Err(perr(l1, "expected 'n <count>'"));
    }
    let n: usize = num(t.next(), l1, "vertex count")?;
    if n < 3 {
        return Err(perr(l1, "n must be at least 3"));
    }
    let m = num_edges(n);
    let ends = edge_list(n);
    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut crossings: Vec<Option<Vec<CrossingEntry>>> = vec![None; m];
    let mut outer = None;
    let mut coords: Vec<Option<ExactPoint>> = vec![None; n];
    let mut any_coord = false;
    let mut ended = false;
    let mut last_line = l1;
    for (ln, line) in lines {
        last_line = ln;
        if ended {
            return Err(perr(ln, "content after 'end'"));
        }
        let (head, tail) = match line.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (line, None),
        };
        let mut tok = head.split_whitespace();
        match tok.next() {
            Some("vertex") => {
                let u: usize = num(tok.next(), ln, "vertex id")?;
                if u >= n || rotation[u].is_some() {
                    return Err(perr(ln, "vertex id out of range or repeated"));
                }
                let tail = tail.ok_or_else(|| perr(ln, "missing ':'"))?;
                let rot = tail
                    .split_whitespace()
                    .map(|s| s.parse().map_err(|_| perr(ln, "bad neighbor")))
                    .collect::<Result<Vec<usize>, _>>()?;
                rotation[u] = Some(rot);
            }
            Some("edge") => {
                let e: usize = num(tok.next(), ln, "edge id")?;
                let u: usize = num(tok.next(), ln, "endpoint")?;
                let v: usize = num(tok.next(), ln, "endpoint")?;
                if e >= m || crossings[e].is_some() {
                    return Err(perr(ln, "edge id out of range or repeated"));
                }
                if ends[e] != (u, v) {
                    return Err(perr(ln, format!("edge {e} must join {:?}", ends[e])));
                }
                let tail = tail.ok_or_else(|| perr(ln, "missing ':'"))?;
                let list = tail
                    .split_whitespace()
                    .map(|s| {
                        let (idx, side) = s.split_at(s.len().saturating_sub(1));
                        let from_left = match side {
                            "L" => true,
                            "R" => false,
                            _ => return Err(perr(ln, format!("bad crossing '{s}'"))),
                        };
                        let partner = idx
                            .parse()
                            .map_err(|_| perr(ln, format!("bad crossing '{s}'")))?;
                        Ok(CrossingEntry { partner, from_left })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                crossings[e] = Some(list);
            }
            Some("outer") => {
                if outer.is_some() {
                    return Err(perr(ln, "repeated 'outer'"));
                }
                outer = Some((num::<usize>(tok.next(), ln, "face id")?, ln));
            }
            Some("coord") => {
                let i: usize = num(tok.next(), ln, "vertex id")?;
                let x: BigInt = num(tok.next(), ln, "x")?;
                let y: BigInt = num(tok.next(), ln, "y")?;
                if i >= n || coords[i].is_some() {
                    return Err(perr(ln, "coordinate id out of range or repeated"));
                }
                coords[i] = Some(ExactPoint { x, y });
                any_coord = true;
            }
            Some("end") => ended = true,
            Some(other) => return Err(perr(ln, format!("unknown record '{other}'"))),
            None => return Err(perr(ln, "empty record")),
        }
    }
    if !ended {
        return Err(perr(last_line, "missing 'end'"));
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(u, r)| r.ok_or_else(|| perr(last_line, format!("missing vertex {u}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let crossings = crossings
        .into_iter()
        .enumerate()
        .map(|(e, c)| c.ok_or_else(|| perr(last_line, format!("missing edge {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let spec = DrawingSpec {
        n,
        rotation,
        crossings,
    };
    let mut d = Drawing::from_spec(&spec).map_err(|e| perr(last_line, e.to_string()))?;
    if let Some((f, ln)) = outer {
        if f >= d.map().num_faces() {
            return Err(perr(ln, format!("face {f} does not exist")));
        }
        d.set_outer(Some(f));
    }
    if any_coord {
        let pts = coords
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| perr(last_line, "coordinates must be given for all vertices"))?;
        d.set_coords(pts);
    }
    Ok(d)
}

/// Arrangement files:
///
/// ```text
/// arrangement 1
/// arcs 2
/// slots 0s 1s 0e 1e
/// arc 0 P : 1
/// arc 1 P : 0
/// end
/// ```
///
/// `slots` lists the endpoint slots counterclockwise around the boundary
/// circle (`s` start, `e` end of the arc). `P` flags a pseudoline, `A` a plain
/// arc.
pub fn write_arrangement(a: &DiskArrangement) -> String {
    let mut out = String::new();
    writeln!(out, "arrangement 1").unwrap();
    writeln!(out, "arcs {}", a.arcs.len()).unwrap();
    let slots: Vec<String> = a
        .slots
        .iter()
        .map(|&(arc, end)| format!("{arc}{}", if end == SlotEnd::Start { 's' } else { 'e' }))
        .collect();
    writeln!(out, "slots {}", slots.join(" ")).unwrap();
    for (i, arc) in a.arcs.iter().enumerate() {
        let c: Vec<String> = arc.crossings.iter().map(|x| x.to_string()).collect();
        let flag = if arc.pseudoline { 'P' } else { 'A' };
        if c.is_empty() {
            writeln!(out, "arc {i} {flag} :").unwrap();
        } else {
            writeln!(out, "arc {i} {flag} : {}", c.join(" ")).unwrap();
        }
    }
    writeln!(out, "end").unwrap();
    out
}

/// Parses an arrangement file. Only the syntax is checked here; use
/// `validate_arrangement` for the combinatorial invariants.
pub fn parse_arrangement(text: &str) -> Result<DiskArrangement, ParseError> {
    let mut lines = content_lines(text);
    let (l0, header) = lines.next().ok_or_else(|| perr(0, "empty input"))?;
    let mut h = header.split_whitespace();
    if h.next() != Some("arrangement") {
        return Err(perr(l0, "expected 'arrangement <version>'"));
    }
    let version: u32 = num(h.next(), l0, "version")?;
    if version != 1 {
        return Err(perr(l0, format!("unsupported version {version}")));
    }
    let (l1, aline) = lines.next().ok_or_else(|| perr(l0, "missing 'arcs' line"))?;
    let mut t = aline.split_whitespace();
    if t.next() != Some("arcs") {
        return Err(perr(l1, "expected 'arcs <count>'"));
    }
    let k: usize = num(t.next(), l1, "arc count")?;
    let mut slots = None;
    let mut arcs: Vec<Option<ArcRecord>> = vec![None; k];
    let mut ended = false;
    let mut last_line = l1;
    for (ln, line) in lines {
        last_line = ln;
        if ended {
            return Err(perr(ln, "content after 'end'"));
        }
        let (head, tail) = match line.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (line, None),
        };
        let mut tok = head.split_whitespace();
        match tok.next() {
            Some("slots") => {
                if slots.is_some() {
                    return Err(perr(ln, "repeated 'slots'"));
                }
                let s = tok
                    .map(|s| {
                        let (idx, end) = s.split_at(s.len().saturating_sub(1));
                        let end = match end {
                            "s" => SlotEnd::Start,
                            "e" => SlotEnd::End,
                            _ => return Err(perr(ln, format!("bad slot '{s}'"))),
                        };
                        let arc: usize = idx.parse().map_err(|_| perr(ln, format!("bad slot '{s}'")))?;
                        if arc >= k {
                            return Err(perr(ln, format!("slot arc {arc} out of range")));
                        }
                        Ok((arc, end))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if s.len() != 2 * k {
                    return Err(perr(ln, format!("expected {} slots, found {}", 2 * k, s.len())));
                }
                slots = Some(s);
            }
            Some("arc") => {
                let i: usize = num(tok.next(), ln, "arc id")?;
                if i >= k || arcs[i].is_some() {
                    return Err(perr(ln, "arc id out of range or repeated"));
                }
                let pseudoline = match tok.next() {
                    Some("P") => true,
                    Some("A") => false,
                    _ => return Err(perr(ln, "expected flag P or A")),
                };
                let tail = tail.ok_or_else(|| perr(ln, "missing ':'"))?;
                let crossings = tail
                    .split_whitespace()
                    .map(|s| s.parse().map_err(|_| perr(ln, format!("bad arc id '{s}'"))))
                    .collect::<Result<Vec<usize>, _>>()?;
                arcs[i] = Some(ArcRecord {
                    crossings,
                    pseudoline,
                });
            }
            Some("end") => ended = true,
            Some(other) => return Err(perr(ln, format!("unknown record '{other}'"))),
            None => return Err(perr(ln, "empty record")),
        }
    }
    if !ended {
        return Err(perr(last_line, "missing 'end'"));
    }
    let slots = slots.ok_or_else(|| perr(last_line, "missing 'slots'"))?;
    let arcs = arcs
        .into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| perr(last_line, format!("missing arc {i}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DiskArrangement { arcs, slots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_random_points, gen_tin_can};

    #[test]
    fn drawing_round_trip_is_exact() {
        for d in [gen_random_points(7, 3, 1000).unwrap(), gen_tin_can(8).unwrap()] {
            let text = write_drawing(&d);
            let back = parse_drawing(&text).unwrap();
            assert_eq!(back, d);
            assert_eq!(write_drawing(&back), text);
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = parse_drawing("drawing 2\nn 3\nend\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_drawing("drawing 1\nn 3\nvertex 0 : 1 2\nbogus\n").unwrap_err();
        assert_eq!(e.line, 4);
    }
}
