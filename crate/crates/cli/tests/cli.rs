use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use edgering::fixtures;
use edgering::io::{graph_to_text, parse_graph_text};
use edgering::report::{analyze, AnalysisReport};

fn edgering(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgering")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name).to_string_lossy().into_owned()
}

#[test]
fn gen_t1min() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t1.txt");
    let o = edgering(&["gen", "--n", "2", "--s", "1,0,1,0", "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "d=9 diameter=4 type=Type1");
    let g = parse_graph_text(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g, fixtures::t1min());
}

#[test]
fn gen_friendship_to_stdout() {
    let o = edgering(&["gen", "--n", "3", "--s", "0,0,0,0,0,0"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("diameter=2"));
    assert_eq!(parse_graph_text(&stdout(&o)).unwrap(), fixtures::friend3());
}

#[test]
fn gen_from_spec_file() {
    let o = edgering(&["gen", "--spec", &fixture("t2min.json")]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("d=11 diameter=4 type=Type2"));
}

#[test]
fn gen_rejects_bad_specs() {
    let o = edgering(&["gen", "--n", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("EmptySpec"));
    let o = edgering(&["gen", "--n", "2", "--s", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("MalformedSpec"));
}

#[test]
fn analyze_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    for (name, g) in fixtures::all() {
        if g.vertex_count() > 12 {
            continue;
        }
        let input = dir.path().join(format!("{name}.txt"));
        let json = dir.path().join(format!("{name}.json"));
        fs::write(&input, graph_to_text(&g)).unwrap();
        let o = edgering(&["analyze", input.to_str().unwrap(), "--json", json.to_str().unwrap()]);
        assert!(o.status.success(), "{name}: {}", stderr(&o));
        let cli: AnalysisReport = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
        assert_eq!(cli, analyze(&g, 8).unwrap(), "{name}");
    }
}

#[test]
fn analyze_t1min_report() {
    let o = edgering(&["analyze", &fixture("t1min.json")]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("normal: false"));
    assert!(text.contains(r#"facet {"kind":"regular","vertex":"w"} dim 8"#));
    assert!(text.contains("s2: true"));
}

#[test]
fn analyze_bowtie_has_no_holes() {
    let o = edgering(&["analyze", &fixture("bowtie.txt")]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("normal: true"));
    assert!(!stdout(&o).contains("holes"));
}

#[test]
fn analyze_json_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        assert!(edgering(&["analyze", &fixture("t2min.json"), "--json", out.to_str().unwrap()]).status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn analyze_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 3\na\nb\n").unwrap();
    assert_eq!(edgering(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(edgering(&["analyze", "/nonexistent/graph.txt"]).status.code(), Some(2));
    let o = edgering(&["analyze", &fixture("n4a.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--max-d"));
}

#[test]
fn degree_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_edgering"))
        .args(["analyze", &fixture("t1min.json"), "--degree", "10"])
        .env("EDGERING_MAX_DEGREE", "6")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("holes up to degree 6: 1"));
}

#[test]
fn verify_paper_single_suite() {
    let o = edgering(&["verify-paper", "--only", "lemmas"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("[PASS] 4 lemmas"));
    assert!(text.contains("1 of 1 criteria passed"));
    assert_eq!(edgering(&["verify-paper", "--only", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_paper_detects_tampered_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let text = graph_to_text(&fixtures::t1min());
    let tampered: Vec<&str> = text.lines().filter(|l| *l != "w x1").collect();
    let mut body = tampered[1..].join("\n");
    body.insert_str(0, "9 11\n");
    fs::write(dir.path().join("t1min.txt"), body + "\n").unwrap();
    let o = edgering(&["verify-paper", "--only", "taxonomy", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] 8 taxonomy"));
}
