//! Command-line front end: generate drawings, check convexity, build and
//! extend pseudoline arrangements, count empty triangles, render SVG.
//!
//! Exit codes: 0 on success, 1 when a check or construction fails (the
//! violating witness is printed), 2 on unreadable or malformed input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pseudolin::arrangement::{levi_extend, validate_arrangement, ArrPoint, DiskArrangement};
use pseudolin::convexity::{face_convex_witnesses, forbidden_config_witness, is_convex_drawing};
use pseudolin::generators::{tin_can_geodesic_assignment, GeneratorKind, GeneratorSpec};
use pseudolin::io::{parse_arrangement, parse_drawing, write_arrangement, write_drawing};
use pseudolin::pseudolinearize::{pseudolinearize_with, PseudolinearizeOptions};
use pseudolin::render::{render_arrangement_svg, render_drawing_svg};
use pseudolin::triangles::{
    check_hereditary, empty_census, verify_face_convex_bound, verify_convex_bound, SideAssignment,
};
use pseudolin::Drawing;

#[derive(Parser)]
#[command(name = "pseudolin", version, about = "Face-convex drawings of complete graphs and their pseudoline extensions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    RandomPoints,
    ConvexPosition,
    TinCan,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Convention {
    /// Empty discs anywhere on the sphere.
    All,
    /// Empty discs avoiding the outer face.
    Outer,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a drawing file.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Coordinate bound for random points; defaults to 100 n^2.
        #[arg(long)]
        bound: Option<u64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Report goodness and convexity of a drawing. Without flags every check
    /// except --hereditary runs.
    Check {
        file: PathBuf,
        #[arg(long)]
        good: bool,
        #[arg(long)]
        convex: bool,
        #[arg(long)]
        face_convex: bool,
        /// Side assignment: `avoiding:<face>`, `geodesic`, or a file of 0/1
        /// digits, one per triangle.
        #[arg(long)]
        hereditary: Option<String>,
    },
    /// Extend the edges of a face-convex drawing to pseudolines.
    Pseudolinearize {
        file: PathBuf,
        /// Witness face id, or `auto` for the lowest witness.
        #[arg(long, default_value = "auto")]
        face: String,
        /// Shuffle the order in which interior edges are processed.
        #[arg(long)]
        order_seed: Option<u64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Add a pseudoline through two points of an arrangement. Points are
    /// `face:<id>` or `arc:<arc>:<segment>`.
    Levi {
        file: PathBuf,
        from: String,
        to: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Count empty triangles and check the lower bounds.
    Triangles {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        convention: Convention,
        /// Outer face for the `outer` convention and --verify-41; defaults to
        /// the face stored in the file, then the lowest witness face.
        #[arg(long)]
        face: Option<usize>,
        #[arg(long = "verify-41")]
        verify_41: bool,
        #[arg(long = "verify-45")]
        verify_45: bool,
    },
    /// Render a drawing or arrangement file as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// A check failed or a construction was impossible.
    Check(String),
    /// Input could not be read or parsed.
    Input(String),
}

type Res = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_drawing(path: &Path) -> Result<Drawing, Failure> {
    parse_drawing(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_arrangement(path: &Path) -> Result<DiskArrangement, Failure> {
    parse_arrangement(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Res {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn gen(kind: Kind, n: usize, seed: u64, bound: Option<u64>, out: Option<&Path>) -> Res {
    let kind = match kind {
        Kind::RandomPoints => GeneratorKind::RandomPoints,
        Kind::ConvexPosition => GeneratorKind::ConvexPosition,
        Kind::TinCan => GeneratorKind::TinCan,
    };
    let spec = GeneratorSpec {
        kind,
        n,
        seed,
        bound: bound.unwrap_or(100 * (n * n) as u64),
    };
    let d = spec.generate().map_err(|e| Failure::Check(e.to_string()))?;
    emit(out, &write_drawing(&d))
}

fn assignment(d: &Drawing, spec: &str) -> Result<SideAssignment, Failure> {
    let sides: Vec<u8> = if let Some(f) = spec.strip_prefix("avoiding:") {
        let f: usize = f.parse().map_err(|_| Failure::Input(format!("bad face in '{spec}'")))?;
        if f >= d.map().num_faces() {
            return Err(Failure::Input(format!("face {f} does not exist")));
        }
        return Ok(SideAssignment::avoiding(d, f));
    } else if spec == "geodesic" {
        tin_can_geodesic_assignment(d)
    } else {
        read(Path::new(spec))?
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Failure::Input(format!("{spec}: expected 0/1 digits"))),
            })
            .collect::<Result<_, _>>()?
    };
    let a = SideAssignment::from_sides(d.n(), sides).map_err(|e| Failure::Input(e.to_string()))?;
    a.validate(d).map_err(|e| Failure::Check(format!("invalid assignment: {e}")))?;
    Ok(a)
}

fn check(file: &Path, good: bool, convex: bool, face_convex: bool, hereditary: Option<&str>) -> Res {
    let d = load_drawing(file)?;
    let all = !(good || convex || face_convex || hereditary.is_some());
    let mut failed = Vec::new();
    if good || all {
        match d.validate_good() {
            Ok(c) => println!("good: PASS ({} crossings)", c.crossings),
            Err(v) => {
                println!("good: FAIL {v:?}");
                failed.push("good");
            }
        }
    }
    if convex || all {
        match is_convex_drawing(&d) {
            Ok(()) => println!("convex: PASS"),
            Err(t) => {
                println!("convex: FAIL triangle {t:?} has no convex side");
                failed.push("convex");
            }
        }
    }
    if face_convex || all {
        let w = face_convex_witnesses(&d);
        if w.is_empty() {
            println!("face-convex: FAIL no witness face");
            for f in 0..d.map().num_faces() {
                if let Some(k4) = forbidden_config_witness(&d, f) {
                    println!("  face {f}: crossing K4 {k4:?} encloses it on the wrong side");
                }
            }
            failed.push("face-convex");
        } else {
            let ids: Vec<String> = w.iter().map(|f| f.to_string()).collect();
            println!("face-convex: PASS witness faces {}", ids.join(" "));
        }
    }
    if let Some(spec) = hereditary {
        let a = assignment(&d, spec)?;
        match check_hereditary(&d, &a) {
            Ok(()) => println!("hereditary: PASS"),
            Err(w) => {
                println!("hereditary: FAIL {w:?}");
                failed.push("hereditary");
            }
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed: {}", failed.join(", "))))
    }
}

fn pick_face(d: &Drawing, face: &str) -> Result<usize, Failure> {
    if face == "auto" {
        return face_convex_witnesses(d).first().copied().ok_or_else(|| {
            let k4 = forbidden_config_witness(d, 0);
            Failure::Check(format!(
                "drawing is not face-convex; face 0 has forbidden crossing K4 {k4:?}"
            ))
        });
    }
    face.parse()
        .map_err(|_| Failure::Input(format!("--face expects a face id or 'auto', got '{face}'")))
}

fn pseudolinearize_cmd(file: &Path, face: &str, order_seed: Option<u64>, out: Option<&Path>, svg: Option<&Path>) -> Res {
    let d = load_drawing(file)?;
    let f = pick_face(&d, face)?;
    let arr = pseudolinearize_with(&d, f, &PseudolinearizeOptions { order_seed }).map_err(|e| {
        let k4 = forbidden_config_witness(&d, f).map(|k| format!("; crossing K4 {k:?}")).unwrap_or_default();
        Failure::Check(format!("{e}{k4}"))
    })?;
    if let Some(p) = svg {
        let text = render_arrangement_svg(&arr).map_err(|e| Failure::Check(format!("{e:?}")))?;
        emit(Some(p), &text)?;
    }
    emit(out, &write_arrangement(&arr))
}

fn locator(s: &str) -> Result<ArrPoint, Failure> {
    let bad = || Failure::Input(format!("bad point '{s}': use face:<id> or arc:<arc>:<segment>"));
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["face", f] => Ok(ArrPoint::Face(f.parse().map_err(|_| bad())?)),
        ["arc", a, j] => Ok(ArrPoint::OnArc {
            arc: a.parse().map_err(|_| bad())?,
            segment: j.parse().map_err(|_| bad())?,
        }),
        _ => Err(bad()),
    }
}

fn levi(file: &Path, from: &str, to: &str, out: Option<&Path>) -> Res {
    let arr = load_arrangement(file)?;
    validate_arrangement(&arr, true).map_err(|v| Failure::Check(format!("input is not a pseudoline arrangement: {v:?}")))?;
    let (a, b) = (locator(from)?, locator(to)?);
    let ext = levi_extend(&arr, a, b).map_err(|e| Failure::Check(format!("{e:?}")))?;
    emit(out, &write_arrangement(&ext))
}

fn triangles_cmd(file: &Path, convention: Convention, face: Option<usize>, v41: bool, v45: bool) -> Res {
    let d = load_drawing(file)?;
    let outer = face.or(d.outer()).or_else(|| face_convex_witnesses(&d).first().copied());
    if let Some(f) = face {
        if f >= d.map().num_faces() {
            return Err(Failure::Input(format!("face {f} does not exist")));
        }
    }
    let mut failed = false;
    let census = empty_census(&d, outer);
    match convention {
        Convention::All => println!("empty triangles (all): {}", census.total),
        Convention::Outer => match (outer, census.outer_total) {
            (Some(f), Some(t)) => println!("empty triangles (avoiding face {f}): {t}"),
            _ => return Err(Failure::Check("no outer face for the outer convention".into())),
        },
    }
    if v41 {
        let f = outer.ok_or_else(|| Failure::Check("no outer face for --verify-41".into()))?;
        let r = verify_face_convex_bound(&d, f).map_err(|e| Failure::Check(e.to_string()))?;
        println!("verify-41 census >= bound: {} ({} >= {})", verdict(r.bound_holds()), r.census, r.bound);
        println!(
            "verify-41 empty triangle on each populated side: {} ({} missing)",
            verdict(r.incident_empty_holds()),
            r.missing_incident_empty.len()
        );
        println!(
            "verify-41 census >= 2 * pairs with two: {} ({} pairs)",
            verdict(r.pair_count_holds()),
            r.pairs_with_two
        );
        println!("verify-41 left pattern: {}", verdict(r.left_pattern.passed()));
        println!("verify-41 right pattern: {}", verdict(r.right_pattern.passed()));
        failed |= !r.passed();
    }
    if v45 {
        let r = verify_convex_bound(&d).map_err(|e| Failure::Check(e.to_string()))?;
        println!(
            "verify-45 crossed edges in two empty triangles: {} ({} short)",
            verdict(r.crossed_edges_in_two()),
            r.poor_edges.len()
        );
        println!(
            "verify-45 census >= 2/3 crossed edges: {} ({} vs {})",
            verdict(r.census_holds()),
            r.census,
            r.crossed_edges
        );
        println!(
            "verify-45 crossed edges >= C(n,2) - (3n-6): {} ({})",
            verdict(r.crossed_count_holds()),
            r.crossed_edges
        );
        failed |= !r.passed();
    }
    if failed {
        Err(Failure::Check("bound check failed".into()))
    } else {
        Ok(())
    }
}

fn render(file: &Path, out: Option<&Path>) -> Res {
    let text = read(file)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    let svg = if first.starts_with("arrangement") {
        let arr = parse_arrangement(&text).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
        render_arrangement_svg(&arr).map_err(|e| Failure::Check(format!("arrangement is not planar: {e:?}")))?
    } else {
        let d = parse_drawing(&text).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
        render_drawing_svg(&d)
    };
    emit(out, &svg)
}

fn run(cli: Cli) -> Res {
    match cli.cmd {
        Cmd::Gen { kind, n, seed, bound, out } => gen(kind, n, seed, bound, out.as_deref()),
        Cmd::Check {
            file,
            good,
            convex,
            face_convex,
            hereditary,
        } => check(&file, good, convex, face_convex, hereditary.as_deref()),
        Cmd::Pseudolinearize {
            file,
            face,
            order_seed,
            out,
            svg,
        } => pseudolinearize_cmd(&file, &face, order_seed, out.as_deref(), svg.as_deref()),
        Cmd::Levi { file, from, to, out } => levi(&file, &from, &to, out.as_deref()),
        Cmd::Triangles {
            file,
            convention,
            face,
            verify_41,
            verify_45,
        } => triangles_cmd(&file, convention, face, verify_41, verify_45),
        Cmd::Render { file, out } => render(&file, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
