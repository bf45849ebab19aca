use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn apg(args: &[&str]) -> Output {
    apg_env(args, &[])
}

fn apg_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_apg"));
    cmd.args(args).env_remove("APG_NODE_LIMIT");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn value(o: &Output, key: &str) -> String {
    let prefix = format!("{key}: ");
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix(&prefix).map(str::to_string))
        .unwrap_or_else(|| panic!("no `{key}` in:\n{}", stdout(o)))
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn butterfly(dir: &TempDir) -> PathBuf {
    let p = dir.path().join("butterfly.apg");
    let o = apg(&["gadget", "butterfly", "-o", s(&p)]);
    assert!(o.status.success(), "{}", stderr(&o));
    p
}

#[test]
fn solves_the_butterfly() {
    let dir = TempDir::new().unwrap();
    let b = butterfly(&dir);
    let o = apg(&["solve", s(&b), "--first", "left"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&o, "result"), "LeftWin");
    assert_eq!(value(&o, "algo"), "search");
    let o = apg(&["solve", s(&b), "--first", "right"]);
    assert_eq!(value(&o, "result"), "Draw");
    let o = apg(&["outcome", s(&b)]);
    assert_eq!(value(&o, "outcome"), "L-");
}

#[test]
fn trace_follows_the_result() {
    let dir = TempDir::new().unwrap();
    let b = butterfly(&dir);
    let o = apg(&["solve", s(&b), "--first", "left", "--trace"]);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("move: ")).count(), 5);
    assert!(out.contains("move: 1 Left alpha "));
    assert_eq!(value(&o, "final"), "won by Left");
}

#[test]
fn empty_game_is_a_draw() {
    let dir = TempDir::new().unwrap();
    let e = file(&dir, "empty.apg", "# nothing here\n");
    assert_eq!(value(&apg(&["outcome", s(&e)]), "outcome"), "D");
}

#[test]
fn auto_uses_poly22_for_small_edges() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "p3.apg", "red u v\nred v w\n");
    let o = apg(&["solve", s(&g), "--first", "right"]);
    assert_eq!(value(&o, "algo"), "poly22");
    assert_eq!(value(&o, "result"), "RightWin");
    let o = apg(&["solve", s(&g), "--first", "right", "--algo", "search"]);
    assert_eq!(value(&o, "result"), "RightWin");
    let b = butterfly(&dir);
    let o = apg(&["solve", s(&b), "--first", "left", "--algo", "poly22"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn delay_of_w3() {
    let dir = TempDir::new().unwrap();
    let w = dir.path().join("w3.apg");
    apg(&["gadget", "wk", "--k", "3", "--color", "red", "-o", s(&w)]);
    assert_eq!(value(&apg(&["delay", s(&w), "--player", "right"]), "delay"), "2");
    assert_eq!(value(&apg(&["delay", s(&w), "--player", "left"]), "delay"), "inf");
}

#[test]
fn union_checks_the_table() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.apg");
    let b = dir.path().join("b.apg");
    apg(&["gadget", "exemplar", "--outcome", "L", "-o", s(&a)]);
    apg(&["gadget", "exemplar", "--outcome", "D", "-o", s(&b)]);
    let o = apg(&["union", s(&a), s(&b), "--check-table3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&o, "outcome_union"), "L");
    assert_eq!(value(&o, "union_table"), "consistent");
    assert!(stdout(&o).contains("renamed: a -> a#2"));
}

#[test]
fn reduce_and_embed() {
    let dir = TempDir::new().unwrap();
    let cnf = file(&dir, "f.cnf", "p cnf 3 1\n1 2 3 0\n");
    let g = dir.path().join("g.apg");
    let prov = dir.path().join("prov.txt");
    let o = apg(&["reduce", "sat23", s(&cnf), "-o", s(&g), "--provenance", s(&prov)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(value(&o, "vertices"), "15");
    assert!(std::fs::read_to_string(&prov).unwrap().contains("¬x1 -> nx1"));
    assert_eq!(value(&apg(&["solve", s(&g), "--first", "left"]), "result"), "Draw");

    let m = dir.path().join("m.apg");
    let o = apg(&["embed", "mm4", s(&g), "-o", s(&m)]);
    assert_eq!(value(&o, "rank"), "4");
    assert_eq!(value(&o, "vertices"), "17");

    let q = file(&dir, "q.cnf", "p cnf 2 1\n1 1 1 0\n");
    let o = apg(&["reduce", "qbf33", s(&q), "-o", s(&g)]);
    assert_eq!(value(&o, "vertices"), "23");
}

#[test]
fn diagnostics_name_file_and_line() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.apg", "blue a b\npurple c\n");
    let o = apg(&["outcome", s(&bad)]);
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).contains(&format!("{}:2:", s(&bad))), "{}", stderr(&o));

    let cnf = file(&dir, "bad.cnf", "p cnf 3 1\n1 2 0\n");
    let o = apg(&["reduce", "sat23", s(&cnf), "-o", s(&dir.path().join("x.apg"))]);
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(apg(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(apg(&["solve"]).status.code(), Some(64));
    assert_eq!(apg(&["outcome", "/nonexistent/file.apg"]).status.code(), Some(64));
    assert_eq!(apg(&["--help"]).status.code(), Some(0));
}

#[test]
fn node_budget_from_the_environment() {
    let dir = TempDir::new().unwrap();
    let b = butterfly(&dir);
    let o = apg_env(&["solve", s(&b), "--first", "right", "--algo", "search"], &[("APG_NODE_LIMIT", "1")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("node budget of 1 exceeded"));
    let o = apg_env(&["outcome", s(&b)], &[("APG_NODE_LIMIT", "lots")]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn verify_poly22_reports_agreement() {
    let o = apg(&["verify", "poly22", "--seed", "1", "--trials", "10000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&o, "agreement"), "10000/10000");
    assert_eq!(value(&o, "seed"), "1");
}

#[test]
fn verify_output_is_reproducible() {
    let a = apg(&["verify", "lemmas", "--seed", "5", "--trials", "100"]);
    let b = apg(&["verify", "lemmas", "--seed", "5", "--trials", "100"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(value(&a, "verdict"), "pass");
}

#[test]
fn verify_reductions_reports_the_script_gap() {
    let o = apg(&["verify", "reductions"]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.contains("check: qbf_to_33\ntrials: 230\nassertions: 460\nfailures: 0\n"), "{out}");
    assert!(out.contains("unit_clause_gadgets_failing: 78"));
}

#[test]
fn gadget_files_round_trip() {
    let dir = TempDir::new().unwrap();
    let w = dir.path().join("w.apg");
    apg(&["gadget", "wk", "--k", "2", "-o", s(&w)]);
    let text = std::fs::read_to_string(&w).unwrap();
    assert_eq!(text, "vertices u v1 v2\nblue u v1\nblue u v2\n");
}
