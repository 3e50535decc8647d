use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudolin")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

fn gen(dir: &TempDir, kind: &str, n: usize, seed: u64) -> String {
    let out = path(dir, &format!("{kind}-{n}-{seed}.txt"));
    let o = run(&["gen", "--kind", kind, "--n", &n.to_string(), "--seed", &seed.to_string(), "-o", &out]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn tin_can_k6_reports_two_witness_faces() {
    let dir = TempDir::new().unwrap();
    let f = gen(&dir, "tin-can", 6, 1);
    let o = run(&["check", &f, "--face-convex"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let line = text.lines().find(|l| l.starts_with("face-convex: PASS")).unwrap();
    let ids = line.split("witness faces").nth(1).unwrap().split_whitespace().count();
    assert!(ids >= 2, "{line}");
}

#[test]
fn random_drawing_pseudolinearizes() {
    let dir = TempDir::new().unwrap();
    let f = gen(&dir, "random-points", 8, 7);
    let arr = path(&dir, "arr.txt");
    let svg = path(&dir, "arr.svg");
    let o = run(&["pseudolinearize", &f, "--face", "auto", "-o", &arr, "--svg", &svg]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let text = std::fs::read_to_string(&arr).unwrap();
    let parsed = pseudolin::io::parse_arrangement(&text).unwrap();
    assert_eq!(parsed.num_arcs(), 28);
    let ext = path(&dir, "ext.txt");
    let o = run(&["levi", &arr, "face:0", "arc:0:0", "-o", &ext]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let grown = pseudolin::io::parse_arrangement(&std::fs::read_to_string(&ext).unwrap()).unwrap();
    assert_eq!(grown.num_arcs(), 29);
}

#[test]
fn tin_can_k8_convex_bound_passes() {
    let dir = TempDir::new().unwrap();
    let f = gen(&dir, "tin-can", 8, 1);
    let o = run(&["triangles", &f, "--verify-45"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("verify-45")).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|l| l.contains("PASS")), "{text}");
}

#[test]
fn render_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = gen(&dir, "tin-can", 7, 1);
    let a = stdout(&run(&["render", &f]));
    let b = stdout(&run(&["render", &f]));
    assert!(a.starts_with("<svg"));
    assert_eq!(a, b);
}

#[test]
fn bad_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let f = path(&dir, "junk.txt");
    std::fs::write(&f, "not a drawing\n").unwrap();
    assert_eq!(run(&["check", &f]).status.code(), Some(2));
    assert!(!Path::new(&path(&dir, "missing.txt")).exists());
    assert_eq!(run(&["check", &path(&dir, "missing.txt")]).status.code(), Some(2));
}

#[test]
fn non_witness_face_exits_with_one() {
    let dir = TempDir::new().unwrap();
    let f = gen(&dir, "tin-can", 6, 1);
    let d = pseudolin::io::parse_drawing(&std::fs::read_to_string(&f).unwrap()).unwrap();
    let w = pseudolin::convexity::face_convex_witnesses(&d);
    let bad = (0..d.map().num_faces()).find(|x| !w.contains(x)).unwrap();
    let o = run(&["pseudolinearize", &f, "--face", &bad.to_string()]);
    assert_eq!(o.status.code(), Some(1));
}
