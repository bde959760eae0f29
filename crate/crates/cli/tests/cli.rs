use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

struct Workdir(TempDir);

impl Workdir {
    fn new() -> Self {
        Workdir(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn first_game(&self) -> (PathBuf, PathBuf) {
        (
            self.file("a.txt", "3 2\n2 -inf\n8 -inf\n-inf 0\n"),
            self.file("b.txt", "3 2\n1 -inf\n-3 -12\n-9 5\n"),
        )
    }

    /// The three half-spaces with parameter `a`, as rational tokens.
    fn geometric(&self, a: &str) -> (PathBuf, PathBuf) {
        let (p, q) = a.split_once('/').map_or_else(|| (a.parse::<i64>().unwrap() * 2, 2), |(p, q)| {
            (p.parse().unwrap(), q.parse().unwrap())
        });
        let r = |num: i64| format!("{num}/{q}");
        let lhs = format!("3 3\n0 -inf -inf\n-inf -2 -inf\n-inf -2 {}\n", r(-p));
        let rhs = format!(
            "3 3\n-inf {} {}\n{} -inf {}\n2 -inf -inf\n",
            r(p - 2 * q),
            r(p - q),
            r(p),
            r(p - q)
        );
        (self.file("ga.txt", &lhs), self.file("gb.txt", &rhs))
    }
}

fn run(args: &[&str], paths: &[(&str, &PathBuf)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tropgame"));
    cmd.args(args);
    for (flag, p) in paths {
        cmd.arg(flag).arg(p);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cone_first_example() {
    let w = Workdir::new();
    let (a, b) = w.first_game();
    let o = run(&["cone"], &[("--lhs", &a), ("--rhs", &b)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "feasible\nsupport: 2\nwitness: -inf 0\n");
}

#[test]
fn cone_json_report() {
    let w = Workdir::new();
    let (a, b) = w.first_game();
    let o = run(&["--json", "cone", "--support"], &[("--lhs", &a), ("--rhs", &b)]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "feasible");
    assert_eq!(v["support"], serde_json::json!([2]));
    assert_eq!(v["witness"], serde_json::json!(["-inf", "0"]));
}

#[test]
fn cone_geometric_flips_at_minus_half() {
    let w = Workdir::new();
    for (a, code) in [("1", 0), ("-1/2", 0), ("-3/2", 1)] {
        let (l, r) = w.geometric(a);
        let o = run(&["--scale", "2", "cone"], &[("--lhs", &l), ("--rhs", &r)]);
        assert_eq!(o.status.code(), Some(code), "a = {a}: {}", stdout(&o));
    }
}

#[test]
fn cone_finite_and_integer() {
    let w = Workdir::new();
    let (a, b) = w.first_game();
    let o = run(&["cone", "--finite"], &[("--lhs", &a), ("--rhs", &b)]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["cone", "--integer"], &[("--lhs", &a), ("--rhs", &b)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("witness: -inf"));
}

#[test]
fn malformed_token_is_a_usage_error() {
    let w = Workdir::new();
    let a = w.file("a.txt", "1 2\n0 2x\n");
    let b = w.file("b.txt", "1 2\n0 0\n");
    let o = run(&["cone"], &[("--lhs", &a), ("--rhs", &b)]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2, column 3"), "{err}");
}

#[test]
fn shape_mismatch_is_a_usage_error() {
    let w = Workdir::new();
    let a = w.file("a.txt", "1 2\n0 0\n");
    let b = w.file("b.txt", "1 3\n0 0 0\n");
    assert_eq!(run(&["cone"], &[("--lhs", &a), ("--rhs", &b)]).status.code(), Some(2));
}

#[test]
fn poly_examples() {
    let w = Workdir::new();
    let a = w.file("a.txt", "1 1\n0\n");
    let b = w.file("b.txt", "1 1\n1\n");
    let c = w.file("c.txt", "0\n");
    let d = w.file("d.txt", "-inf\n");
    let o = run(&["poly"], &[("--lhs", &a), ("--rhs", &b), ("--c", &c), ("--d", &d)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let bottom = w.file("bb.txt", "1 1\n-inf\n");
    let o = run(&["poly"], &[("--lhs", &a), ("--rhs", &bottom), ("--c", &c), ("--d", &d)]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));

    let o = run(&["poly"], &[("--lhs", &a), ("--rhs", &b), ("--c", &c)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn game_values() {
    let w = Workdir::new();
    let (a, b) = w.first_game();
    let o = run(&["game", "--value"], &[("--lhs", &a), ("--rhs", &b)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("chi: -1 5\n"), "{}", stdout(&o));

    let (l, r) = w.geometric("1");
    let o = run(&["--scale", "2", "game", "--value"], &[("--lhs", &l), ("--rhs", &r)]);
    assert!(stdout(&o).contains("chi: 3/2 3/2 3/2\n"), "{}", stdout(&o));
}

#[test]
fn game_winners_and_certificates() {
    let w = Workdir::new();
    let (a, b) = w.first_game();
    let o = run(&["game", "--winners"], &[("--lhs", &a), ("--rhs", &b)]);
    assert_eq!(stdout(&o), "winners: 2\n");

    let (l, r) = w.geometric("1");
    let s = w.file("max.txt", "max 3 3 1\n");
    let o = run(&["--scale", "2", "game"], &[("--lhs", &l), ("--rhs", &r), ("--certify", &s)]);
    assert!(stdout(&o).contains("values: 3/2 3/2 3/2\n"), "{}", stdout(&o));
    let s = w.file("min.txt", "min 1 2 3\n");
    let o = run(&["--scale", "2", "game"], &[("--lhs", &l), ("--rhs", &r), ("--certify", &s)]);
    assert!(stdout(&o).contains("values: 3/2 3/2 3/2\n"), "{}", stdout(&o));

    let s = w.file("bad.txt", "max 3 3 2\n");
    let o = run(&["--scale", "2", "game"], &[("--lhs", &l), ("--rhs", &r), ("--certify", &s)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn game_dot_export() {
    let w = Workdir::new();
    let (a, b) = w.first_game();
    let dot = w.0.path().join("g.dot");
    let o = run(&["game"], &[("--lhs", &a), ("--rhs", &b), ("--dot", &dot)]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(dot).unwrap();
    assert_eq!(text.matches("shape=circle").count(), 2);
    assert_eq!(text.matches("shape=box").count(), 3);
    // One arc per finite entry of A and of B.
    assert_eq!(text.matches("->").count(), 3 + 5);
}

#[test]
fn game_requires_the_assumptions() {
    let w = Workdir::new();
    let a = w.file("a.txt", "1 2\n0 -inf\n");
    let b = w.file("b.txt", "1 2\n0 0\n");
    assert_eq!(run(&["game"], &[("--lhs", &a), ("--rhs", &b)]).status.code(), Some(2));
}

#[test]
fn rank_examples() {
    let w = Workdir::new();
    let abcd = w.file("abcd.txt", "4 3\n0 2 0\n0 3 2\n0 1 1\n1 3 0\n");
    let abce = w.file("abce.txt", "4 3\n0 2 0\n0 3 2\n0 1 1\n1 1 0\n");
    let o = run(&["rank", "--independent"], &[("--matrix", &abcd)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness: 0 -2 -1\n"));
    assert_eq!(run(&["rank"], &[("--matrix", &abce)]).status.code(), Some(0));
    assert_eq!(stdout(&run(&["rank", "--exact"], &[("--matrix", &abcd)])), "rank: 2\n");
    assert_eq!(run(&["rank", "--at-least", "3"], &[("--matrix", &abce)]).status.code(), Some(0));
    assert_eq!(run(&["rank", "--at-least", "3"], &[("--matrix", &abcd)]).status.code(), Some(1));
    assert_eq!(run(&["rank", "--max"], &[("--matrix", &abcd)]).status.code(), Some(0));

    let zeros = w.file("z.txt", "2 2\n0 0\n0 0\n");
    assert_eq!(run(&["rank", "--singular"], &[("--matrix", &zeros)]).status.code(), Some(0));
    let diag = w.file("d.txt", "2 2\n2 -inf\n-inf 3\n");
    assert_eq!(run(&["rank", "--singular"], &[("--matrix", &diag)]).status.code(), Some(1));
    let rhs = w.file("rhs.txt", "5 5\n");
    let o = run(&["rank"], &[("--matrix", &diag), ("--cramer", &rhs)]);
    assert_eq!(stdout(&o), "solved\nsolution: 3 2\n");
}

#[test]
fn conflicting_modes_are_rejected() {
    let w = Workdir::new();
    let m = w.file("m.txt", "1 1\n0\n");
    assert_eq!(run(&["rank", "--exact", "--singular"], &[("--matrix", &m)]).status.code(), Some(2));
}
