use std::path::PathBuf;
use std::process::{Command, Output};

use kmatch::io::{read_graph, write_graph};
use kmatch::named;

fn kmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmatch"))
        .args(args)
        .env("KMATCH_WORKERS", "2")
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kmatch-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn random_verify_is_byte_identical() {
    let a = kmatch(&["verify", "--random", "5", "--n", "10", "--seed", "7"]);
    let b = kmatch(&["verify", "--random", "5", "--n", "10", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let recs = lines(&a);
    assert_eq!(recs.len(), 5);
    assert!(recs.iter().all(|r| r["pass"] == true && r["elapsed_ms"].is_null()));
}

#[test]
fn timing_fills_elapsed() {
    let out = kmatch(&["--timing", "verify", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(lines(&out).iter().all(|r| r["elapsed_ms"].is_u64()));
}

#[test]
fn nu_and_certify_on_petersen() {
    let dir = scratch("petersen");
    let file = dir.join("petersen.txt");
    write_graph(&file, &named::petersen()).unwrap();
    let f = file.to_str().unwrap();

    let out = kmatch(&["nu", "--k", "2", f]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(lines(&out)[0]["nu"]["value"], 9);

    let out = kmatch(&["certify", f]);
    assert_eq!(out.status.code(), Some(0));
    let rec = &lines(&out)[0];
    assert_eq!(rec["command"], "certify");
    assert!(rec["certificate"]["pair_total"].as_u64().unwrap() >= 9);
}

#[test]
fn bad_input_exits_with_two() {
    let dir = scratch("bad");
    let file = dir.join("bad.txt");
    std::fs::write(&file, "p 2 1\ne 0 5\n").unwrap();
    let out = kmatch(&["certify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = kmatch(&["certify", dir.join("missing.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = kmatch(&["search-tight", "--n", "4", "--bound", "nope"]);
    assert_eq!(out.status.code(), Some(2));

    // Usage errors come from clap.
    let out = kmatch(&["nu", "--k", "7", "x"]);
    assert_eq!(out.status.code(), Some(2));
    let out = kmatch(&["verify", "--max-n", "4", "--random", "3", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_writes_readable_files() {
    let dir = scratch("enumerate");
    let out = kmatch(&["enumerate", "--n", "6", "--out", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let recs = lines(&out);
    assert_eq!(recs.len(), 6);
    for r in &recs {
        let g = read_graph(dir.join(r["source"].as_str().unwrap())).unwrap();
        assert_eq!(g.n(), 6);
        assert!(g.is_cubic());
    }
}

#[test]
fn search_tight_reports_rechecked_graphs() {
    let out = kmatch(&["search-tight", "--n", "4", "--bound", "nu2_4_5"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = lines(&out);
    assert!(!recs.is_empty());
    assert!(recs.iter().all(|r| r["checks"][0]["name"] == "tight_nu2_4_5" && r["pass"] == true));
}
