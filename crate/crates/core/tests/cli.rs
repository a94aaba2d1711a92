use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_strongedge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, body: &[u8]) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gen_then_color_keeps_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let out = out.to_str().unwrap();
    let st = run(&["gen", "--family", "multi-k-degenerate", "--n", "30", "--k", "3", "--seed", "4", "--parallel-prob", "0.3", "--output", out]);
    assert!(st.status.success());
    let text = std::fs::read_to_string(out).unwrap();
    let header: Vec<usize> = text.lines().next().unwrap().split_whitespace().map(|t| t.parse().unwrap()).collect();
    let report = json(&run(&["color", "--input", out]));
    assert_eq!(report["n"], header[0]);
    assert_eq!(report["m"], header[1]);
    assert_eq!(report["valid"], true);
    assert_eq!(report["assignment"].as_array().unwrap().len(), header[1]);
}

#[test]
fn verify_rejects_bad_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "p4.txt", b"4 3\n0 1\n1 2\n2 3\n");
    let bad = write(&dir, "bad.json", br#"{"assignment":[{"id":0,"edge":[0,1],"color":0},{"id":1,"edge":[1,2],"color":1},{"id":2,"edge":[2,3],"color":0}]}"#);
    let o = run(&["verify", "--input", &g, "--coloring", &bad]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coloring"]["verdict"], "fail");
    assert_eq!(v["violating_edges"], serde_json::json!([[0, 1], [2, 3]]));

    let good = write(&dir, "good.json", &run(&["color", "--input", &g]).stdout);
    assert!(run(&["verify", "--input", &g, "--coloring", &good]).status.success());
}

#[test]
fn order_output_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "g.txt", &run(&["gen", "--n", "25", "--k", "2", "--seed", "9"]).stdout);
    let ord = run(&["order", "--input", &g, "--policy", "lowest-id"]);
    let o = write(&dir, "ord.json", &ord.stdout);
    let v = json(&run(&["verify", "--input", &g, "--ordering", &o]));
    assert_eq!(v["ordering"]["verdict"], "pass");
    assert!(run(&["audit", "--input", &g, "--ordering", &o]).status.success());
}

#[test]
fn bench_rows_have_nonnegative_slack() {
    let v = json(&run(&["bench", "--n", "40", "--k", "3", "--count", "100", "--jobs", "4"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 100);
    for r in rows {
        assert!(r["slack"].as_i64().unwrap() >= 0, "{r}");
        assert_eq!(r["audit_pass"], true);
        assert!(r.get("wall_ms").is_none());
    }
    assert_eq!(v["summary"]["failures"], 0);
}

#[test]
fn stdin_and_dimacs_input() {
    let v = json(&run_stdin(&["degeneracy"], "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"));
    assert_eq!(v["k"], 2);
    let dimacs = "c triangle plus pendant\np edge 4 4\ne 1 2\ne 2 3\ne 3 1\ne 3 4\n";
    let v = json(&run_stdin(&["color"], dimacs));
    assert_eq!(v["m"], 4);
    assert_eq!(v["colors_used"], 4);
    // labels in output are the 1-based DIMACS ids
    assert_eq!(v["assignment"][3]["edge"], serde_json::json!([3, 4]));
}

#[test]
fn exact_on_c5() {
    let v = json(&run_stdin(&["exact"], "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"));
    assert_eq!(v["chi_s"], 5);
    assert_eq!(v["timed_out"], false);
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run_stdin(&["color"], "3 1\n0 0\n").status.code(), Some(2));
    assert_eq!(run(&["color", "--input", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--family", "nope"]).status.code(), Some(2));
}

#[test]
fn k_below_degeneracy_is_an_input_error() {
    let o = run_stdin(&["order", "--k", "1"], "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}
