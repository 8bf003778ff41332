use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use ordchain_cli::{run, EXIT_INPUT, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};
use tempfile::TempDir;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn ordchain(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("ordchain").chain(args.iter().copied()), &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no `{key}` in\n{out}"))
}

#[test]
fn encode_empty_word_as_zero() {
    let r = ordchain(&["encode", "--map", "rational", "e"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out, "0/1\n");
}

#[test]
fn encode_each_map() {
    assert_eq!(ordchain(&["encode", "--map", "double", "0", "5"]).out, "00\n110011\n");
    assert_eq!(ordchain(&["encode", "--map", "binary", "e", "0"]).out, "e\n0001\n");
    assert_eq!(ordchain(&["encode", "--map", "rational", "--expansion", "0.1"]).out, "5/8 0.101\n");
}

#[test]
fn encode_rejects_bad_token() {
    let r = ordchain(&["encode", "--map", "binary", "1.x"]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("argument 1") && r.err.contains("`1.x`"), "{}", r.err);
}

#[test]
fn reduce_closure_of_single_branch() {
    let dir = TempDir::new().unwrap();
    let tree = write(&dir, "tree.txt", "1.1.0\n");
    let image = dir.path().join("image.txt");
    let r = ordchain(&["reduce", s(&tree), "--target", "subset", "--horizon", "100", "--closure", "-o", s(&image)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(field(&r.out, "L_img").parse::<usize>().unwrap() >= 4);
    assert_eq!(field(&r.out, "verdict"), "ok");
    let written = fs::read_to_string(&image).unwrap();
    assert_eq!(written.lines().count(), 100);
    assert_eq!(written.lines().next(), Some("e"));

    let r = ordchain(&["analyze", s(&image), "--order", "subset"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(field(&r.out, "longest chain").parse::<usize>().unwrap() >= 4);
}

#[test]
fn reduce_strict_mode_names_missing_prefix() {
    let dir = TempDir::new().unwrap();
    let tree = write(&dir, "tree.txt", "e\n# comment\n1.0\n");
    let r = ordchain(&["reduce", s(&tree), "--target", "rl", "--horizon", "10"]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("tree.txt:3") && r.err.contains("`1.0`") && r.err.contains("`1`"), "{}", r.err);
}

#[test]
fn analyze_reports_chain_and_constant() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "y.txt", "3 1 4 1 5\n9 2 6 5 3 5\n");
    let r = ordchain(&["analyze", s(&f), "--order", "int", "--strict"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(field(&r.out, "longest chain"), "4");
    assert_eq!(field(&r.out, "witness"), "0:3 2:4 4:5 5:9");
    assert_eq!(field(&r.out, "patience"), "4");
    assert_eq!(field(&r.out, "constant subsequence"), "5 x3");
}

#[test]
fn analyze_error_names_file_line_and_token() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "y.txt", "4 2\n8 0 16\n");
    let r = ordchain(&["analyze", s(&f), "--order", "divides"]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("y.txt:2") && r.err.contains("`0`"), "{}", r.err);

    let f = write(&dir, "w.txt", "e 0\n0.1 x.2\n");
    let r = ordchain(&["analyze", s(&f), "--order", "rl"]);
    assert!(r.err.contains("w.txt:2") && r.err.contains("`x.2`"), "{}", r.err);
}

#[test]
fn analyze_rejects_empty_and_missing_files() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "empty.txt", "# nothing\n");
    assert_eq!(ordchain(&["analyze", s(&f), "--order", "int"]).code, EXIT_INPUT);
    let r = ordchain(&["analyze", "/nonexistent/y.txt", "--order", "int"]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("/nonexistent/y.txt"));
}

#[test]
fn domain_applies_only_to_delta() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "y.txt", "1/2 1/2 3/4\n");
    let r = ordchain(&["analyze", s(&f), "--order", "delta", "--domain", "rational"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert_eq!(field(&r.out, "longest chain"), "2");
    let r = ordchain(&["analyze", s(&f), "--order", "int", "--domain", "rational"]);
    assert_eq!(r.code, EXIT_INPUT);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ordchain(&["analyze", "x", "--order", "bogus"]).code, EXIT_USAGE);
    assert_eq!(ordchain(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(ordchain(&["encode", "--map", "rational", "--nope", "e"]).code, EXIT_USAGE);
    let help = ordchain(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.out.contains("decide-up"));
}

#[test]
fn fuzz_subset_is_clean_and_deterministic() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("fuzz.csv");
    let args = ["fuzz", "--pipeline", "subset", "--trials", "1000", "--seed", "7", "--horizon", "200", "--csv", s(&csv)];
    let r = ordchain(&args);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("0 violations"), "{}", r.out);
    let first = fs::read_to_string(&csv).unwrap();
    let mut lines = first.lines();
    assert_eq!(lines.next(), Some("trial,seed,L_tree,L_img,verdict"));
    assert_eq!(lines.count(), 1000);
    assert!(first.lines().skip(1).all(|l| l.ends_with(",ok")));

    let again = ordchain(&args);
    assert_eq!(again.out, r.out);
    assert_eq!(fs::read_to_string(&csv).unwrap(), first);
}

#[test]
fn fuzz_csv_to_stdout_and_custom_pipeline() {
    let r = ordchain(&["fuzz", "--pipeline", "binary@subset-bit", "--trials", "5", "--seed", "1", "--horizon", "30"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out.lines().count(), 6);
    assert!(r.err.contains("5 trials"));
    let r = ordchain(&["fuzz", "--pipeline", "rational@subset"]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("--pipeline"), "{}", r.err);
}

#[test]
fn fuzz_reported_seed_reproduces_row() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("fuzz.csv");
    ordchain(&["fuzz", "--pipeline", "rl", "--trials", "3", "--seed", "11", "--horizon", "50", "--csv", s(&csv)]);
    let text = fs::read_to_string(&csv).unwrap();
    let row: Vec<&str> = text.lines().nth(3).unwrap().split(',').collect();
    let seed: u64 = row[1].parse().unwrap();
    let t = ordchain::reductions::generate_tree(&ordchain::reductions::TreeGenSpec { seed, ..Default::default() }).unwrap();
    let (l_tree, l_img, _) = ordchain::reductions::check_tree(&ordchain::reductions::Target::Rl.pipeline(), &t, 50).unwrap();
    assert_eq!((row[2], row[3]), (l_tree.to_string().as_str(), l_img.to_string().as_str()));
}

#[test]
fn classify_prints_trend_table() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "x.txt", "0 1/2 1 1/4 3/4\n");
    let r = ordchain(&["classify", s(&f)]);
    assert_eq!(r.code, EXIT_OK);
    let rows: Vec<&str> = r.out.lines().skip(2).collect();
    assert_eq!(rows, ["2\t0", "4\t1", "5\t2"]);
}

#[test]
fn cantor_dump_and_extraction() {
    let r = ordchain(&["cantor", "--set", "cantor3", "--depth", "1"]);
    assert_eq!(r.code, EXIT_OK);
    let dump: Vec<&str> = r.out.lines().skip(1).collect();
    assert_eq!(dump, ["e 0/1 1/1 1/3 2/3", "0 0/1 1/3", "1 2/3 1/1"]);

    let r = ordchain(&["cantor", "--depth", "8", "--fixture", "midpoints", "--extract", "Y", "-n", "100", "--pairs", "200"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.out);
    assert!(r.out.contains("# Y: 100 elements"));
    assert!(r.out.contains("200 pairs sampled, 0 without a witness"));

    let r = ordchain(&["cantor", "--depth", "8", "--fixture", "endpoints", "--extract", "p", "-n", "100", "--pairs", "200"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.out);
    assert!(!r.out.lines().any(|l| l == "1/3"));
}

#[test]
fn cantor_from_files() {
    let dir = TempDir::new().unwrap();
    let stages = write(&dir, "stages.txt", "0 1\n0 1/3; 2/3 1\n0 1/9; 2/9 1/3; 2/3 7/9; 8/9 1\n");
    let stream = write(&dir, "x.txt", "1/2 1/6 5/6 1/5\n");
    let r = ordchain(&["cantor", "--stages", s(&stages), "--depth", "2", "--stream", s(&stream), "--extract", "Y"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let picks: Vec<&str> = r.out.lines().skip_while(|l| !l.starts_with("# Y")).skip(1).collect();
    assert_eq!(picks, ["1/6", "1/2", "5/6"]);

    let coarse = write(&dir, "coarse.txt", "0 1\n0 1/3; 2/3 1\n");
    let r = ordchain(&["cantor", "--stages", s(&coarse), "--depth", "2"]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("no gap"), "{}", r.err);

    let broken = write(&dir, "broken.txt", "0 1\n0 1/3; 2/3 x\n");
    let r = ordchain(&["cantor", "--stages", s(&broken), "--depth", "1"]);
    assert!(r.err.contains("broken.txt:2") && r.err.contains("`x`"), "{}", r.err);

    let r = ordchain(&["cantor", "--depth", "1", "--extract", "P"]);
    assert_eq!(r.code, EXIT_INPUT);
}

#[test]
fn decide_up_verdicts() {
    let r = ordchain(&["decide-up", "2 | 3 6", "--order", "divides"]);
    assert_eq!(field(&r.out, "member"), "true");
    assert_eq!(field(&r.out, "cycle"), "6 -> 6");
    let r = ordchain(&["decide-up", "| 6 3", "--order", "divides", "--strict"]);
    assert_eq!(field(&r.out, "member"), "false");
    assert_eq!(field(&r.out, "cycle"), "none");
    let r = ordchain(&["decide-up", "1 2", "--order", "int"]);
    assert_eq!(r.code, EXIT_INPUT);
    let r = ordchain(&["decide-up", "1 | ", "--order", "int"]);
    assert_eq!(r.code, EXIT_INPUT);
}

#[test]
fn check_axioms_exit_codes() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "support.txt", "e 0 1.0 0.0 2\n");
    let r = ordchain(&["check-axioms", s(&f), "--order", "rl"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(field(&r.out, "violations"), "0");
    let r = ordchain(&["check-axioms", s(&f), "--order", "subset"]);
    assert_eq!(r.code, EXIT_OK);
    let r = ordchain(&["check-axioms", s(&f), "--order", "subset", "--total"]);
    assert_eq!(r.code, EXIT_VIOLATION);
    assert!(r.out.contains("totality violated by"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ordchain");
    let st = Command::new(bin).args(["encode", "--map", "rational", "e"]).output().unwrap();
    assert_eq!(st.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&st.stdout), "0/1\n");
    let st = Command::new(bin).args(["encode"]).output().unwrap();
    assert_eq!(st.status.code(), Some(2));
    let st = Command::new(bin).args(["decide-up", "1 2", "--order", "int"]).output().unwrap();
    assert_eq!(st.status.code(), Some(1));
}
