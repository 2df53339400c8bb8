use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn signet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_signet")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn floats(v: &Value) -> Vec<f64> {
    v.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn unbalanced_triangle_spectrum() {
    let v = json(&signet(&["spectrum", "--family", "cycle:n=3,r=1"]));
    assert_eq!(floats(&v["spectrum"]), vec![-2.0, 1.0, 1.0]);
    assert_eq!(floats(&v["laplacian_spectrum"]), vec![1.0, 1.0, 4.0]);
    assert_eq!(v["energy"].as_f64(), Some(4.0));
    assert_eq!(v["balance"]["balanced"], Value::Bool(false));
    assert_eq!(v["balance"]["c"], 1);
}

#[test]
fn line_graph_of_complete_graph() {
    // Λ(+K_4): eigenvalues −2 ×3, 2 ×3
    let v = json(&signet(&["spectrum", "--family", "complete:n=4,sign=+", "--line"]));
    assert_eq!(floats(&v["spectrum"]), vec![-2.0, -2.0, -2.0, 2.0, 2.0, 2.0]);
    assert_eq!(v["energy"].as_f64(), Some(12.0));
}

#[test]
fn csv_output() {
    let o = signet(&["spectrum", "--family", "path:n=3", "--csv"]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines, vec!["-1.41421356237", "0", "1.41421356237"]);
}

#[test]
fn empty_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("empty.json");
    fs::write(&p, r#"{"n":0,"edges":[]}"#).unwrap();
    let v = json(&signet(&["spectrum", "--file", p.to_str().unwrap()]));
    assert_eq!(v["spectrum"], Value::Array(vec![]));
    assert_eq!(v["energy"].as_f64(), Some(0.0));
    assert_eq!(v["laplacian_energy"].as_f64(), Some(0.0));
    assert_eq!(v["balance"]["b"], 0);
}

#[test]
fn grid_from_two_paths() {
    let o = signet(&["product", "--family", "path:n=3,r=1", "--family", "path:n=4,r=2", "--basis", "cartesian"]);
    assert!(o.status.success());
    let g = signet::io::from_json_str(stdout(&o).trim()).unwrap();
    // n·r1 + m·r2 with m = 3, n = 4
    assert_eq!(g.negative_edge_count(), 4 + 3 * 2);
    assert_eq!(g, signet::families::grid(3, 1, 4, 2).unwrap().canonical());
}

#[test]
fn custom_strong_basis() {
    let strong = signet(&["product", "path:n=2", "path:n=2", "--basis", "11"]);
    let named = signet(&["product", "path:n=2", "path:n=2", "--basis", "strong"]);
    assert_eq!(stdout(&strong), stdout(&named));
    assert_eq!(stdout(&strong).trim(), r#"{"n":4,"edges":[[0,3,1],[1,2,1]]}"#);
}

#[test]
fn p1_is_cartesian_byte_for_byte() {
    let a = signet(&["product", "cycle:n=3,r=1", "path:n=3", "complete:n=2,sign=-", "--basis", "p=1"]);
    let b = signet(&["product", "cycle:n=3,r=1", "path:n=3", "complete:n=2,sign=-", "--basis", "cartesian"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn files_and_families_keep_command_line_order() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("k2.json");
    fs::write(&p, r#"{"n":2,"edges":[[0,1,-1]]}"#).unwrap();
    let a = signet(&["product", "--family", "path:n=3", "--file", p.to_str().unwrap()]);
    let b = signet(&["product", "--file", p.to_str().unwrap(), "--family", "path:n=3"]);
    assert!(a.status.success() && b.status.success());
    assert_ne!(a.stdout, b.stdout);
    let first = signet::io::from_json_str(stdout(&a).trim()).unwrap();
    let expected = signet::products::cartesian(&[
        signet::families::path(3, 0).unwrap(),
        signet::SignedGraph::from_triples(2, &[(0, 1, -1)]).unwrap(),
    ])
    .unwrap();
    assert_eq!(first, expected.canonical());
}

#[test]
fn line_of_short_path() {
    let o = signet(&["line", "--family", "path:n=3"]);
    assert_eq!(stdout(&o).trim(), r#"{"n":2,"edges":[[0,1,1]]}"#);
}

#[test]
fn matrices_on_request() {
    let v = json(&signet(&["line", "--family", "path:n=3,r=1", "--matrix"]));
    assert_eq!(v["graph"]["n"], 2);
    let a: Vec<Vec<i64>> = serde_json::from_value(v["adjacency"].clone()).unwrap();
    assert_eq!(a, vec![vec![0, -1], vec![-1, 0]]);
    let l: Vec<Vec<i64>> = serde_json::from_value(v["laplacian"].clone()).unwrap();
    assert_eq!(l, vec![vec![1, 1], vec![1, 1]]);
}

#[test]
fn graph_json_round_trip_through_cli() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.json");
    let canonical = r#"{"n":4,"edges":[[0,1,1],[0,2,-1],[1,3,-1],[2,3,1]]}"#;
    fs::write(&input, canonical).unwrap();
    // Cartesian product with K_1 is the graph itself
    let out = dir.path().join("out.json");
    let o = signet(&["product", "--file", input.to_str().unwrap(), "--family", "path:n=1", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(fs::read_to_string(&out).unwrap().trim(), canonical);
}

#[test]
fn exit_codes() {
    assert_eq!(signet(&["spectrum", "--family", "cycle:n=2"]).status.code(), Some(2));
    assert_eq!(signet(&["spectrum", "--family", "cycle:n=4,x=1"]).status.code(), Some(2));
    assert_eq!(signet(&["spectrum", "--file", "/nonexistent/graph.json"]).status.code(), Some(2));
    assert_eq!(signet(&["product", "path:n=2", "path:n=2", "--basis", "10"]).status.code(), Some(2));
    assert_eq!(signet(&["product", "path:n=2"]).status.code(), Some(2));
    assert_eq!(signet(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(signet(&["frobnicate"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(&p, r#"{"n":2,"edges":[[0,0,1]]}"#).unwrap();
    assert_eq!(signet(&["line", "--file", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_closed_forms_passes() {
    let o = signet(&["verify", "closed-forms", "--max", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("suite closed-forms: PASS"));
    assert!(text.contains("finding:"));
}

#[test]
fn verify_acharya_passes() {
    let o = signet(&["verify", "acharya", "--max", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_json_is_deterministic_and_ordered() {
    let args = ["verify", "rank", "kirchhoff", "--max", "6", "--seed", "11", "--json"];
    let a = signet(&args);
    let b = signet(&args);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let names: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(names, vec!["kirchhoff", "rank"]);
    assert_eq!(v["seed"], 11);
}

#[test]
fn seed_from_environment() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_signet"))
            .args(["verify", "kirchhoff", "--max", "4", "--json"])
            .env("SIGNET_SEED", seed)
            .output()
            .unwrap()
    };
    let v = json(&run("42"));
    assert_eq!(v["seed"], 42);
}
