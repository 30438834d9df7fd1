mod common;

use std::fs;
use std::process::{Command, Output};

use common::fixture_path;

fn domdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domdist")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn analyze_edgelist_path() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(&dir, "p4.txt", "# P4\nn 4\n0 1\n1 2\n2 3\n");
    let out = domdist(&["analyze", &p4]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("graph     Ch (n = 4)"), "{text}");
    assert!(text.contains("gamma     2"));
    assert!(text.contains("(4 minimum dominating sets)"));
    assert!(text.contains("r-subset(5)        skipped (n = 4 < 5)"));
    assert!(text.contains("verdict: all bounds hold"));

    // explicit format agrees with detection
    let explicit = domdist(&["--format", "edgelist", "analyze", &p4]);
    assert_eq!(stdout(&explicit), text);
}

#[test]
fn analyze_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "k13.g6", "CF\n");
    let json = dir.path().join("out.jsonl");
    let out = domdist(&["analyze", &g, "--jsonl", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(fs::read_to_string(&json).unwrap().trim()).unwrap();
    assert_eq!(v["graph"], "CF");
    assert_eq!(v["gamma"], 1);
    assert_eq!(v["boundary_ecc"]["equality"], true);
    assert_eq!(v["fatal"], false);
}

#[test]
fn analyze_rejects_several_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "two.g6", "Bw\nBg\n");
    assert_eq!(domdist(&["analyze", &g]).status.code(), Some(2));
}

#[test]
fn verify_fixture_corpus() {
    let corpus = fixture_path("connected5.g6");
    let out = domdist(&["verify", corpus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("graphs processed  21"), "{text}");
    assert!(text.contains("violations        0"));
}

#[test]
fn verify_skips_bad_lines_unless_strict() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write(&dir, "mixed.g6", "Bw\nA?\nCF\n");
    let lenient = domdist(&["verify", &corpus]);
    assert_eq!(lenient.status.code(), Some(0));
    assert!(stdout(&lenient).contains("line 2: graph is disconnected"));

    let strict = domdist(&["verify", "--strict", &corpus]);
    assert_eq!(strict.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&strict.stderr).contains("line 2"));
}

#[test]
fn tight_lists_matching_graphs() {
    let corpus = fixture_path("connected4.g6");
    let out = domdist(&["tight", corpus.to_str().unwrap(), "--bound", "triple"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Cs\n"); // K_1,3 with centre 0
    let r6 = domdist(&["tight", corpus.to_str().unwrap(), "--bound", "r-subset:6"]);
    assert_eq!(r6.status.code(), Some(0));
    assert_eq!(stdout(&r6), "");
}

#[test]
fn lift_default_and_explicit_sets() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(&dir, "c4.txt", "n 4\n0 1\n1 2\n2 3\n3 0\n");
    let out = domdist(&["lift", &c4, "--set", "0,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("verified   gamma(T) = gamma(G) = 2"), "{text}");

    assert_eq!(domdist(&["lift", &c4]).status.code(), Some(0));
    // a dominating set that is not minimum is an input error
    assert_eq!(domdist(&["lift", &c4, "--set", "0,1,2"]).status.code(), Some(2));
}

#[test]
fn counterexample_succeeds() {
    let out = domdist(&["counterexample"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("claim refuted     true"));
}

#[test]
fn usage_errors_exit_two() {
    let corpus = fixture_path("connected3.g6");
    let c = corpus.to_str().unwrap();
    assert_eq!(domdist(&[]).status.code(), Some(2));
    assert_eq!(domdist(&["tight", c, "--bound", "radius"]).status.code(), Some(2));
    assert_eq!(domdist(&["verify", "/nonexistent.g6"]).status.code(), Some(2));
    assert_eq!(domdist(&["verify", c, "--r", "2"]).status.code(), Some(2));
    assert_eq!(domdist(&["verify", c, "--format", "sparse6"]).status.code(), Some(2));
    assert_eq!(domdist(&["--help"]).status.code(), Some(0));
}
