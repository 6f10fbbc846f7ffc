use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn twinreduce(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twinreduce"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn reduce_json_trace_replays() {
    let dir = TempDir::new().unwrap();
    for code in ["Ch", "D~{", "D?{", "IheA@GUAo"] {
        for policy in [&["--policy", "det"][..], &["--policy", "rand", "--seed", "9"]] {
            let mut args = vec!["reduce", "--g6", code, "--format", "json"];
            args.extend_from_slice(policy);
            let out = twinreduce(&args);
            assert_eq!(out.status.code(), Some(0));
            let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
            assert_eq!(doc["schema"], "twinreduce/1");
            let trace = write(&dir, "trace.json", &stdout(&out));
            let check = twinreduce(&["check-trace", "--g6", code, "--trace", &trace]);
            assert_eq!(
                check.status.code(),
                Some(0),
                "{code}: {}",
                String::from_utf8_lossy(&check.stderr)
            );
        }
    }
}

#[test]
fn reduce_text_trace_replays_and_tampering_is_caught() {
    let dir = TempDir::new().unwrap();
    let out = twinreduce(&["reduce", "--g6", "D?{"]);
    let text = stdout(&out);
    assert!(text.starts_with("# reduced @\n"));
    let trace = write(&dir, "trace.txt", &text);
    assert_eq!(
        twinreduce(&["check-trace", "--g6", "D?{", "--trace", &trace])
            .status
            .code(),
        Some(0)
    );
    let bad = write(&dir, "bad.txt", &text.replacen("open", "closed", 1));
    assert_eq!(
        twinreduce(&["check-trace", "--g6", "D?{", "--trace", &bad])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn reduce_outputs_are_byte_identical_across_runs() {
    let args = [
        "reduce",
        "--g6",
        "IheA@GUAo",
        "--format",
        "json",
        "--policy",
        "rand",
        "--seed",
        "3",
    ];
    assert_eq!(twinreduce(&args).stdout, twinreduce(&args).stdout);
    let gg = [
        "groupgraph",
        "--in",
        &fixture("d4.gens"),
        "--kind",
        "commuting",
        "--format",
        "graph6",
    ];
    let with_jobs: Vec<&str> = gg.iter().copied().chain(["--jobs", "3"]).collect();
    assert_eq!(twinreduce(&gg).stdout, twinreduce(&with_jobs).stdout);
}

#[test]
fn reduce_reads_stdin_edge_lists() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_twinreduce"))
        .args(["reduce", "--in", "-", "--format", "graph6"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"n 4\n0 1\n1 2\n2 3\n3 0\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    // C4 collapses to K2 through its two open twin pairs, then to K1.
    assert_eq!(stdout(&out), "@\n");
}

#[test]
fn cograph_exit_codes() {
    let p4 = twinreduce(&["cograph", "--g6", "Ch"]);
    assert_eq!(p4.status.code(), Some(1));
    assert_eq!(stdout(&p4), "not cograph\n0 1 2 3\n");
    let k1 = twinreduce(&["cograph", "--g6", "@"]);
    assert_eq!(k1.status.code(), Some(0));
    assert!(stdout(&k1).starts_with("cograph\n"));
    let c5 = twinreduce(&["cograph", "--g6", "Dhc"]);
    assert_eq!(c5.status.code(), Some(1));
    let witness: Vec<usize> = stdout(&c5)
        .lines()
        .nth(1)
        .unwrap()
        .split(' ')
        .map(|t| t.parse().unwrap())
        .collect();
    let [a, b, c, d] = witness[..] else {
        panic!("{witness:?}")
    };
    let c5_edge = |u: usize, v: usize| (u + 1) % 5 == v || (v + 1) % 5 == u;
    assert!(c5_edge(a, b) && c5_edge(b, c) && c5_edge(c, d));
    assert!(!c5_edge(a, c) && !c5_edge(a, d) && !c5_edge(b, d));
    let c4 = twinreduce(&["cograph", "--g6", "Cl"]);
    assert_eq!(c4.status.code(), Some(0));
}

#[test]
fn siblings_check_and_join() {
    let dir = TempDir::new().unwrap();
    let split = write(&dir, "split.txt", "0 1\n2 3\n");
    let ends = write(&dir, "ends.txt", "0 3\n1\n2\n");
    let inner = write(&dir, "inner.txt", "0\n1 2\n3\n");
    let p4 = twinreduce(&["siblings", "--g6", "Ch", "--partition", &split]);
    assert_eq!(p4.status.code(), Some(1));
    assert_eq!(stdout(&p4), "not sibling\nmixed-edges-between-parts 1 2 3\n");
    let whole = write(&dir, "whole.txt", "0 1 2 3\n");
    let one_part = twinreduce(&["siblings", "--g6", "Ch", "--partition", &whole]);
    assert_eq!(one_part.status.code(), Some(1));
    assert_eq!(stdout(&one_part), "not sibling\nP4-inside-part 0 1 2 3\n");
    let k4 = twinreduce(&["siblings", "--g6", "C~", "--partition", &split]);
    assert_eq!((k4.status.code(), stdout(&k4)), (Some(0), "sibling\n".into()));
    let joined = twinreduce(&["siblings", "--g6", "C~", "--partition", &ends, "--partition", &inner]);
    assert_eq!(joined.status.code(), Some(0));
    assert_eq!(stdout(&joined), "join\n0 3\n1 2\nsibling\n");
}

#[test]
fn series_reports_and_verifies() {
    let empty4 = twinreduce(&["series", "--g6", "C?", "--verify"]);
    assert_eq!(empty4.status.code(), Some(0));
    let text = stdout(&empty4);
    assert!(
        text.lines().any(|l| l.split_whitespace().eq(["0", "open", "4", "24"])),
        "{text}"
    );
    assert!(text.contains("verify: pass"));
    let p4 = twinreduce(&["series", "--g6", "Ch"]);
    assert!(stdout(&p4).starts_with("no stages, |N| = 1\n"));
    let p3 = twinreduce(&["series", "--g6", "Bg", "--format", "json", "--verify"]);
    let doc: serde_json::Value = serde_json::from_slice(&p3.stdout).unwrap();
    assert_eq!(doc["schema"], "twinreduce/1");
    assert_eq!(p3.status.code(), Some(0));
    let big = twinreduce(&["series", "--g6", "J??????????", "--verify"]);
    assert_eq!(big.status.code(), Some(4));
}

#[test]
fn groupgraph_summaries() {
    let s3 = twinreduce(&[
        "groupgraph",
        "--in",
        &fixture("s3.gens"),
        "--kind",
        "power",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&s3.stdout).unwrap();
    assert_eq!((doc["group_order"].as_u64(), doc["edges"].as_u64()), (Some(6), Some(6)));
    let wrong = twinreduce(&["groupgraph", "--in", &fixture("m11.gens"), "--expect-order", "10"]);
    assert_eq!(wrong.status.code(), Some(5));
    let capped = twinreduce(&["groupgraph", "--in", &fixture("m11.gens"), "--cap", "100"]);
    assert_eq!(capped.status.code(), Some(4));
}

#[test]
fn m11_pipeline_through_the_cli() {
    let m11 = fixture("m11.gens");
    let args = [
        "groupgraph",
        "--in",
        &m11,
        "--expect-order",
        "7920",
        "--reduce",
        "--jobs",
        "4",
        "--format",
        "json",
    ];
    let out = twinreduce(&args);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let largest = &doc["reduced"]["largest"];
    assert_eq!(doc["reduced"]["vertices"], 386);
    assert_eq!(largest["vertices"], 385);
    assert_eq!(largest["girth"], 10);
    assert_eq!(largest["semiregular"], true);

    let dropped = twinreduce(&[
        "groupgraph",
        "--in",
        &m11,
        "--reduce",
        "--drop-isolated",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&dropped.stdout).unwrap();
    assert_eq!(doc["reduced"]["vertices"], 385);
}

#[test]
fn error_exit_codes() {
    assert_eq!(twinreduce(&["reduce", "--g6", "D?o!"]).status.code(), Some(2));
    let missing = Path::new(env!("CARGO_MANIFEST_DIR")).join("no-such-file");
    assert_eq!(
        twinreduce(&["reduce", "--in", missing.to_str().unwrap()]).status.code(),
        Some(3)
    );
    assert_eq!(
        twinreduce(&["reduce", "--g6", "Ch", "--seed", "1"]).status.code(),
        Some(2)
    );
}
