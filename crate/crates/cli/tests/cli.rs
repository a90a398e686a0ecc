//! Drives the `specgap` binary end to end through pipes and files.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn specgap(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_specgap"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &[u8]) -> Vec<u8> {
    let out = specgap(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn json_lines(bytes: &[u8]) -> Vec<Value> {
    String::from_utf8(bytes.to_vec()).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn plane_gap_through_a_pipe() {
    let g6 = ok(&["gen", "pg", "--q", "2"], b"");
    let rows = json_lines(&ok(&["gap", "--from", "0"], &g6));
    assert_eq!(rows.len(), 1);
    let gap = rows[0]["gap"].as_f64().unwrap();
    assert!((gap - 2f64.sqrt()).abs() < 1e-11);
    assert_eq!(rows[0]["kind"], "adjacency_from_0");
}

#[test]
fn friendship_gap_is_one_half() {
    let g6 = ok(&["gen", "friendship", "--k", "3"], b"");
    let rows = json_lines(&ok(&["gap", "--from", "1"], &g6));
    assert_eq!(rows[0]["gap"].as_f64(), Some(0.5));
}

#[test]
fn missing_input_exits_two() {
    let out = specgap(&["gap", "--from", "0", "--in", "definitely-missing.g6"], b"");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("definitely-missing.g6"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(specgap(&["frobnicate"], b"").status.code(), Some(2));
    assert_eq!(specgap(&["gap", "--from", "7"], b"Bw\n").status.code(), Some(2));
    assert_eq!(specgap(&["gen", "nosuch"], b"").status.code(), Some(2));
    assert_eq!(specgap(&["gen", "cycle", "n", "5"], b"").status.code(), Some(2));
    assert_eq!(specgap(&["gap", "--from", "0"], b"not graph6\n").status.code(), Some(2));
}

#[test]
fn spectrum_matrices() {
    let tri = b"Bw\n";
    let adj = json_lines(&ok(&["spectrum", "--matrix", "adj"], tri));
    let values: Vec<f64> = adj[0]["eigenvalues"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    assert_eq!(values, [-1.0, -1.0, 2.0]);
    let nlap = json_lines(&ok(&["spectrum", "--matrix", "nlap"], tri));
    assert_eq!(nlap[0]["eigenvalues"][2].as_f64(), Some(1.5));
    let m = json_lines(&ok(&["spectrum", "--matrix", "m"], tri));
    assert_eq!(m[0]["eigenvalues"][0].as_f64(), Some(0.25));
}

#[test]
fn phi_and_recognize() {
    let heawood = ok(&["gen", "heawood"], b"");
    let phi = ok(&["phi"], &heawood);
    assert_eq!(phi.iter().filter(|&&b| b == b'\n').count(), 1);
    let r = json_lines(&ok(&["recognize"], &heawood));
    assert_eq!(r[0]["family"], "projective-plane");
    assert_eq!(r[0]["parameters"]["order"], 2);
    let book = ok(&["gen", "book", "--k", "4"], b"");
    assert_eq!(json_lines(&ok(&["recognize"], &book))[0]["family"], "book");
}

#[test]
fn nlap_power_on_heawood() {
    let heawood = ok(&["gen", "heawood"], b"");
    let rows = json_lines(&ok(&["nlap-power", "--l", "2", "--json"], &heawood));
    let top = rows[0]["eigenvalues"].as_array().unwrap().last().unwrap().as_f64().unwrap();
    assert!((top - 7.0 / 9.0).abs() < 1e-11);
}

#[test]
fn edgelist_round_trip() {
    let el = ok(&["gen", "petersen", "--format", "edgelist"], b"");
    assert!(String::from_utf8_lossy(&el).starts_with("10 15\n"));
    let back = ok(&["phi", "--format", "edgelist"], &el);
    assert!(String::from_utf8_lossy(&back).starts_with("10 30\n"));
}

#[test]
fn enumerate_matches_census() {
    let out = ok(&["enumerate", "--n", "10", "--d", "3"], b"");
    assert_eq!(String::from_utf8(out).unwrap().lines().count(), 19);
    let petersen = ok(&["enumerate", "--n", "10", "--d", "3", "--min-girth", "5"], b"");
    assert_eq!(petersen.iter().filter(|&&b| b == b'\n').count(), 1);
}

#[test]
fn gen_ranges_emit_one_graph_per_line() {
    let out = ok(&["gen", "cycle", "--n", "3..7"], b"");
    assert_eq!(String::from_utf8(out).unwrap().lines().count(), 5);
}

#[test]
fn verify_writes_versioned_report() {
    let dir = std::env::temp_dir().join(format!("specgap-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let report = dir.join("report.jsonl");
    let out = specgap(
        &[
            "verify",
            "--corpus",
            "regular:n=4..10,d=3;pg:q=2..3;friendship:k=1..3",
            "--theorems",
            "main,main2,trichotomy,d2,lemmas",
            "--jobs",
            "2",
            "--out",
            report.to_str().unwrap(),
        ],
        b"",
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = json_lines(&std::fs::read(&report).unwrap());
    assert_eq!(rows[0], serde_json::json!({ "schema": "specgap/1" }));
    let aggregate = &rows.last().unwrap()["aggregate"];
    assert_eq!(aggregate["graphs"], 1 + 2 + 5 + 19 + 2 + 3);
    assert_eq!(aggregate["theorems"]["main"]["fail"], 0);
    assert!(rows[1..rows.len() - 1].iter().all(|r| r["status"] != "fail"));

    // Same input, same bytes.
    let again = dir.join("again.jsonl");
    ok(
        &[
            "verify",
            "--corpus",
            "regular:n=4..10,d=3;pg:q=2..3;friendship:k=1..3",
            "--theorems",
            "main,main2,trichotomy,d2,lemmas",
            "--out",
            again.to_str().unwrap(),
        ],
        b"",
    );
    assert_eq!(std::fs::read(&report).unwrap(), std::fs::read(&again).unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_reads_graph6_files() {
    let dir = std::env::temp_dir().join(format!("specgap-cli-file-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("cages.g6");
    std::fs::write(&file, [ok(&["gen", "mcgee"], b""), ok(&["gen", "tutte-coxeter"], b"")].concat()).unwrap();
    let corpus = format!("file:{}", file.display());
    let rows = json_lines(&ok(&["verify", "--corpus", &corpus, "--theorems", "girth7"], b""));
    assert_eq!(rows.last().unwrap()["aggregate"]["theorems"]["girth7"]["pass"], 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_errors() {
    assert_eq!(specgap(&["verify", "--corpus", "cycle:n=3", "--theorems", "bogus"], b"").status.code(), Some(2));
    let empty = specgap(&["verify", "--corpus", "cycle:n=3;where:min_degree=3"], b"");
    assert_eq!(empty.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&empty.stderr).contains("empty"));
}
