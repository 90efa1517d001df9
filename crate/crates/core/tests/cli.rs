use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn hosoya(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hosoya")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hosoya-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn build_writes_hgraph() {
    let path = tmp("ring.hgraph");
    let o = hosoya(&["build", "ring:n=3,m=1,r=2,s=1", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("hgraph 1\nvertices 12\n"));

    let o = hosoya(&["build", "path:n=1"]);
    assert_eq!(stdout(&o), "hgraph 1\nvertices 1\n");

    let o = hosoya(&["build", "dbond:xs=4,4,4,4;ys=6,3,3"]);
    assert!(stdout(&o).contains("vertices 16\n"));
}

#[test]
fn build_rejects_bad_field() {
    let o = hosoya(&["build", "ring:n=3,m=1,r=2,s=zero"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`s`"));
}

#[test]
fn z_both_methods() {
    let o = hosoya(&["z", "ring:n=3,m=1,r=2,s=1", "--method", "both"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "301 301\n".to_string()));

    let o = hosoya(&["z", "path:n=1"]);
    assert_eq!(stdout(&o), "1\n");

    let part = format!("radial:m=8,part={}", fixture("d3-2-3-3.json"));
    let o = hosoya(&["z", &part, "--method", "cf"]);
    assert_eq!(stdout(&o), "5589762048\n");
    let o = hosoya(&["z", &part, "--method", "both"]);
    assert_eq!(stdout(&o), "5589762048 5589762048\n");
}

#[test]
fn z_on_hgraph_files() {
    let path = tmp("benzene.hgraph");
    assert!(hosoya(&["build", "ring:n=3,m=1,r=2,s=1", "-o", path.to_str().unwrap()]).status.success());
    let o = hosoya(&["z", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "301\n");
    let o = hosoya(&["z", path.to_str().unwrap(), "--method", "cf"]);
    assert_eq!(o.status.code(), Some(3));
    let o = hosoya(&["z", "naphthalene", "--method", "both"]);
    assert_eq!(o.status.code(), Some(3));
    let o = hosoya(&["z", "naphthalene"]);
    assert_eq!(stdout(&o), "532\n");
}

#[test]
fn z_trace_outline() {
    let o = hosoya(&["z", "cycle:n=3", "--trace"]);
    let out = stdout(&o);
    assert!(out.starts_with("4\nG: Z = 4 split on edge"));
}

#[test]
fn cf_modes() {
    let o = hosoya(&["cf", &fixture("benzene-negative.json"), "--mode", "negative"]);
    assert_eq!(stdout(&o), "301/45\n");
    let o = hosoya(&["cf", &fixture("general-5.json")]);
    assert_eq!(stdout(&o), "5/1\nk\tp_k\tq_k\n0\t5\t1\n");
    let o = hosoya(&["cf", &fixture("period1-depth3.json"), "--mode", "tree"]);
    assert_eq!(stdout(&o), "143118495/35605089\n");
    let o = hosoya(&["cf", &fixture("d3-2-3-3.json")]);
    assert_eq!(stdout(&o), "30/12\nk\tp_k\tq_k\n0\t2\t1\n1\t8\t3\n2\t30\t12\n");

    let o = hosoya(&["cf", &fixture("general-5.json"), "--mode", "tree"]);
    assert_eq!(o.status.code(), Some(2));
    let bad = tmp("bad.json");
    std::fs::write(&bad, r#"{"a0": 1, "terms": [[0, 1]]}"#).unwrap();
    assert_eq!(hosoya(&["cf", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn seq_examples() {
    let o = hosoya(&["seq", "--r", "1", "--s", "2", "--m", "0", "--count", "11"]);
    assert_eq!(stdout(&o), "2\n4\n12\n40\n136\n464\n1584\n5408\n18464\n63040\n215232\n");
    let o = hosoya(&["seq", "--r", "2", "--s", "1", "--m", "1", "--count", "4"]);
    assert_eq!(stdout(&o), "2\n7\n45\n301\n");
    let o = hosoya(&["seq", "--r", "3", "--s", "3", "--count", "1"]);
    assert_eq!(stdout(&o), "2\n");
    assert_eq!(hosoya(&["seq", "--r", "0", "--s", "1"]).status.code(), Some(2));
    assert_eq!(hosoya(&["seq", "--r", "1", "--s", "1", "--count", "0"]).status.code(), Some(2));
}

fn rows(out: &str) -> Vec<&str> {
    out.lines().filter(|l| l.ends_with("\tPASS") || l.ends_with("\tFAIL")).collect()
}

#[test]
fn verify_suites() {
    let o = hosoya(&["verify", "theorem1", "--n", "1..4", "--m", "0..2", "--r", "1..3", "--s", "1..3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(rows(&out).len(), 108);
    assert!(rows(&out).iter().all(|r| r.ends_with("PASS")));

    let o = hosoya(&["verify", "lemma1", "--max-spine", "5", "--max-x", "3", "--max-y", "3", "--samples", "200"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(rows(&stdout(&o)).len(), 200);

    let o = hosoya(&["verify", "transforms", "--cycle-n", "3..12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(rows(&stdout(&o)).len(), 10);

    for suite in ["lemma2", "remark2", "radial"] {
        let o = hosoya(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "lemma1", "--samples", "50", "--seed", "11"];
    assert_eq!(hosoya(&args).stdout, hosoya(&args).stdout);
    let args = ["verify", "lemma2", "--samples", "30", "--seed", "5"];
    assert_eq!(hosoya(&args).stdout, hosoya(&args).stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hosoya(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hosoya(&["z", "ring:n=3"]).status.code(), Some(2));
    assert_eq!(hosoya(&["verify", "theorem1", "--n", "5..1"]).status.code(), Some(2));
}
