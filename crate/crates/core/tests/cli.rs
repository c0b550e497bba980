use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn cheeger(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cheeger"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_single_triangle_text_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "t.txt", "# one triangle\n0 1 2\n");
    let o = cheeger(&["verify", &file]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("H = 3/2"), "{out}");
    assert!(out.contains("bound = 1.5"), "{out}");
    assert!(out.contains("equality: yes"), "{out}");
}

#[test]
fn verify_json_is_deterministic() {
    let a = cheeger(&["--json", "verify", "corpus:bipyramid-5"]);
    let b = cheeger(&["--json", "--workers", "4", "verify", "corpus:bipyramid-5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["H"]["value"], serde_json::json!({ "num": 49, "den": 12 }));
}

#[test]
fn verify_reports_fixture_expectations() {
    let o = cheeger(&["verify", "corpus:ex43-reconstruction"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("H = 3"), "{out}");
    assert!(!out.contains("DIFFERS"), "{out}");
}

#[test]
fn non_constant_degree_is_not_applicable() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "fan.txt", "0 1 2\n0 1 3\n0 1 4\n");
    let o = cheeger(&["verify", &file]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("bound: not applicable (non-constant D)"));
    let o = cheeger(&["bounds", &file]);
    assert!(stdout(&o).contains("bound: not applicable (non-constant D)"));
}

#[test]
fn invalid_input_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write(dir.path(), "dup.txt", "0 0 1\n");
    let o = cheeger(&["verify", &dup]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("duplicate vertex `0`"),
        "{}",
        stderr(&o)
    );

    let bad = write(dir.path(), "bad.json", "{\"facets\": [[0, 1,]]}");
    let o = cheeger(&["verify", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));

    let impure = write(dir.path(), "impure.txt", "0 1 2\n2 3\n");
    assert_eq!(cheeger(&["verify", &impure]).status.code(), Some(2));
    let o = cheeger(&["validate", &impure]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("pure: no"));

    assert_eq!(
        cheeger(&["verify", "/nonexistent/file"]).status.code(),
        Some(2)
    );
    assert_eq!(cheeger(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn budget_is_a_compute_error() {
    let o = cheeger(&["--max-exact-vertices", "5", "cheeger", "corpus:bipyramid-6"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cheeger(&["--max-exact-vertices", "5", "verify", "corpus:bipyramid-6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped"));
}

#[test]
fn stdin_and_json_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cheeger"))
        .args(["--json", "cheeger", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"facets":[["a","b","c"],["b","c","d"]]}"#)
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["H"], serde_json::json!({ "num": 4, "den": 3 }));
    assert_eq!(v["side_a"], serde_json::json!(["a"]));
}

#[test]
fn embedded_dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let o = cheeger(&["embedded", "corpus:ex41", "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("regular: 2-regular"));
    assert_eq!(
        std::fs::read_to_string(&dot).unwrap(),
        "graph {\n\"0,1\" -- \"0,2\";\n\"0,1\" -- \"1,2\";\n\"0,2\" -- \"1,2\";\n}\n"
    );
}

#[test]
fn spectrum_of_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "k3.json",
        r#"{"adjacency": [[0,1,1],[1,0,1],[1,1,0]]}"#,
    );
    let o = cheeger(&["spectrum", "--graph", &file]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("eigenvalues: 2 -1 -1"),
        "{}",
        stdout(&o)
    );
    let o = cheeger(&["--json", "spectrum", "--graph", "corpus:ex43-graph"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["lambda"].as_f64().unwrap() - (1.0 + 5f64.sqrt())).abs() < 1e-9);
    let asym = write(dir.path(), "a.json", r#"{"adjacency": [[0,1],[0,0]]}"#);
    assert_eq!(
        cheeger(&["spectrum", "--graph", &asym]).status.code(),
        Some(2)
    );
}

#[test]
fn cheeger_with_prt_and_info() {
    let o = cheeger(&["cheeger", "--prt", "corpus:simplex-closure-2"]);
    let out = stdout(&o);
    assert!(
        out.contains("H = 3/2") && out.contains("prt h = 3"),
        "{out}"
    );
    let o = cheeger(&["info", "corpus:bipyramid-6"]);
    let out = stdout(&o);
    assert!(
        out.contains("face counts: 8 18 12") && out.contains("delta_min: 4"),
        "{out}"
    );
}

#[test]
fn corpus_emit_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = cheeger(&["corpus", "emit", "ex41"]);
    assert_eq!(o.status.code(), Some(0));
    let file = write(dir.path(), "ex41.json", &stdout(&o));
    let a = cheeger(&["--json", "verify", &file]);
    let b = cheeger(&["--json", "verify", "corpus:ex41"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&cheeger(&["corpus", "list"])).contains("capped-antiprism-<m>"));
}
