use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorful"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn verify_colorful_associahedron_three() {
    let o = run(&["verify", "--family", "colorful_associahedron", "-n", "3"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    for needle in [
        "f-vector: 84/126/36",
        "chromatic index χ₁: 3 (expected 3)",
        "|Γ|: 72 (expected 72)",
        "genus: 4 (expected 4)",
        "result: pass",
    ] {
        assert!(out.contains(needle), "missing {needle:?} in\n{out}");
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_colorful_cyclohedron_one_is_a_hexagon() {
    let o = run(&["verify", "--family", "colorful_cyclohedron", "-n", "1"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("f-vector: 6/6"));
    assert!(out.contains("|Γ|: 12 (expected 12)"));
}

#[test]
fn bad_coloring_is_invalid_input() {
    let o = run(&["build", "--from-file", &data("bad_coloring.json")]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("proper coloring violated at vertex"), "{err}");
}

#[test]
fn graph_file_round_trip() {
    let o = run(&["verify", "--from-file", &data("square.json")]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("f-vector: 4/4"));
    assert!(out.contains("|Γ|: 8"));

    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("cli_pentagon_pair.json");
    let o = run(&[
        "build",
        "--family",
        "colorful_associahedron",
        "-n",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "check-iso",
        "--from-file",
        path.to_str().unwrap(),
        "--with",
        "colorful_associahedron",
        "--with-n",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["data"]["witness"].as_array().unwrap().len(), 10 + 10 + 2);
}

#[test]
fn invalid_inputs_exit_two() {
    for args in [
        vec!["verify", "--family", "colorful_associahedron", "-n", "9"],
        vec!["verify", "--family", "colorful_cyclohedron"],
        vec!["verify"],
        vec!["surface", "--family", "colorful_associahedron", "-n", "2"],
        vec!["aut", "--family", "associahedron", "-n", "3", "--mode", "preserving"],
        vec!["quotient", "--family", "associahedron", "-n", "3"],
        vec!["verify", "--family", "associahedron", "-n", "3", "--format", "dot"],
        vec!["build", "--from-file", "/nonexistent/graph.json"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn failed_check_exits_one() {
    let o = run(&[
        "check-iso",
        "--family",
        "colorful_associahedron",
        "-n",
        "2",
        "--with",
        "associahedron",
        "--with-n",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  isomorphic"));
}

#[test]
fn exit_status_agrees_with_check_lines() {
    for args in [
        vec!["verify", "--family", "cyclohedron", "-n", "2"],
        vec!["verify", "--family", "cyclohedron", "-n", "1"],
        vec!["report", "--table", "surfaces"],
        vec!["report", "--table", "K_table", "-n", "3"],
        vec!["facet-stats", "--family", "colorful_associahedron", "-n", "3"],
    ] {
        let o = run(&args);
        let out = stdout(&o);
        let failed = out.contains("FAIL") || out.contains("mismatch");
        assert_eq!(o.status.code(), Some(if failed { 1 } else { 0 }), "{args:?}\n{out}");
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["aut", "--family", "colorful_associahedron", "-n", "3", "--format", "json"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["data"]["automorphisms"]["order"], 72);

    let args = ["check-axioms", "--family", "colorful_associahedron", "-n", "4", "--seed", "7", "--format", "json"];
    let a = stdout(&run(&args));
    assert_eq!(a, stdout(&run(&args)));
    assert!(a.contains("\"seed\": 7"));
}

#[test]
fn tables() {
    let o = run(&["report", "--table", "counts", "--format", "csv"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("Gc_3 vertices,n! C_{n+1},84,84,match"));
    let o = run(&["report", "--table", "K_table", "-n", "3"]);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("n=3")).count(), 7);
    assert!(out.contains("(n-2)n      3          3         match"), "{out}");
}

#[test]
fn exports() {
    let o = run(&["build", "--family", "colorful_cyclohedron", "-n", "1", "--format", "dot"]);
    assert!(stdout(&o).starts_with("graph G {"));
    let o = run(&["build-polytope", "--family", "colorful_associahedron", "-n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["f_vector"], serde_json::json!([10, 10, 1]));
    let o = run(&["check-covering", "--family", "colorful_associahedron", "-n", "2"]);
    assert!(stdout(&o).contains("vertex fiber size: 2 (expected 2)"));
}
