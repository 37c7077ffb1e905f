//! End-to-end tests against the built binary: input handling, output
//! formats, exit codes.

use std::process::{Command, Output};

fn nilgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("valid JSON on stdout")
}

#[test]
fn analyze_f7_reports_not_nilpotent_not_engel() {
    let out = nilgraph(&["analyze", "fixture:f7", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["nilpotent"], false);
    assert_eq!(v["positively_engel"], false);
    assert_eq!(v["nilpotency_class"], serde_json::Value::Null);
    assert!(v["witness"].is_object());
    assert_eq!(v["lower_graph"]["edge_count"], 0);
}

#[test]
fn analyze_s18_reports_empty_upper_graph_and_engel() {
    let out = nilgraph(&["analyze", "fixture:s18", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["upper_graph"]["edge_count"], 0);
    assert_eq!(v["positively_engel"], true);
    assert_eq!(v["nilpotent"], false);
    assert_eq!(v["neumann_taylor"], true);
}

#[test]
fn analyze_t19_is_not_neumann_taylor() {
    let out = nilgraph(&["analyze", "fixture:t19", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["upper_graph"]["edge_count"], 0);
    assert_eq!(v["neumann_taylor"], false);
}

#[test]
fn analyze_trivial_table_from_file() {
    let dir = std::env::temp_dir().join("nilgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trivial.txt");
    std::fs::write(&path, "1\n0\n").unwrap();
    let out = nilgraph(&["analyze", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["commutative"], true);
    assert_eq!(v["nilpotency_class"], 1);
    // all three graphs of a commutative semigroup are empty
    for kind in ["upper_graph", "lower_graph", "noncommuting_graph"] {
        assert_eq!(v[kind]["edge_count"], 0);
    }
}

#[test]
fn graph_c3_upper_is_the_triangle_dot() {
    let out = nilgraph(&["graph", "fixture:c3", "--kind", "upper"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "graph G {\n  0 [label=\"a\"];\n  1 [label=\"b\"];\n  2 [label=\"c\"];\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"
    );
}

#[test]
fn graph_accepts_the_table_alias() {
    let plain = nilgraph(&["graph", "fixture:c3", "--kind", "upper"]);
    let alias = nilgraph(&["graph", "fixture:c3_table", "--kind", "upper"]);
    assert_eq!(stdout(&plain), stdout(&alias));
}

#[test]
fn graph_f7_lower_json_is_empty() {
    let out = nilgraph(&["graph", "fixture:f7", "--kind", "lower", "--out", "json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"order\":7,\"edges\":[]}\n");
}

#[test]
fn enumerate_order_4_counts_126_classes() {
    let out = nilgraph(&["enumerate", "--order", "4", "--modulo", "isoanti"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["count"], 126);
    assert_eq!(v["order"], 4);
    assert_eq!(v["modulo"], "isoanti");
}

#[test]
fn enumerate_emits_reparsable_files() {
    let dir = std::env::temp_dir().join("nilgraph-cli-test-emit");
    let _ = std::fs::remove_dir_all(&dir);
    let out = nilgraph(&[
        "enumerate",
        "--order",
        "3",
        "--modulo",
        "isoanti",
        "--emit",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["count"], 18);
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert_eq!(files.len(), 18);
    // round trip: an emitted table re-parses to an identical semigroup
    let text = std::fs::read_to_string(&files[0]).unwrap();
    let reparsed = nilgraph::io::parse_cayley_table(&text).unwrap();
    assert_eq!(nilgraph::io::emit_cayley_table(&reparsed), text);
}

#[test]
fn enumerate_rejects_order_beyond_the_cap() {
    let out = nilgraph(&["enumerate", "--order", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn realize_p4_on_four_elements_finds_nothing() {
    let out = nilgraph(&["realize", "--graph", "p4", "--order", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "none\n");
}

#[test]
fn realize_k3_finds_a_rectangular_band() {
    let out = nilgraph(&["realize", "--graph", "k3", "--order", "3"]);
    assert!(out.status.success());
    let s = nilgraph::io::parse_cayley_table(&stdout(&out)).unwrap();
    assert!(s.is_band() && s.is_simple());
    assert!(s.upper_graph().is_complete());
}

#[test]
fn realize_accepts_json_edge_lists() {
    let out = nilgraph(&[
        "realize",
        "--graph",
        "{\"order\":4,\"edges\":[[0,1],[1,2],[2,3]]}",
        "--order",
        "4",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "none\n");
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = std::env::temp_dir().join("nilgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "2\n0 x\n0 0\n").unwrap();
    let out = nilgraph(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "stderr was: {err}");
    assert!(err.contains("column 3"), "stderr was: {err}");
}

#[test]
fn unknown_fixture_exits_2() {
    let out = nilgraph(&["analyze", "fixture:nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_paper_fast_passes() {
    let out = nilgraph(&["verify-paper", "--level", "fast"]);
    let text = stdout(&out);
    assert!(out.status.success(), "output: {text}");
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 40);
    assert!(!text.contains("FAIL"));
}

#[test]
fn analysis_flags_are_mutually_consistent_on_fixtures() {
    for name in nilgraph::constructions::fixture_names() {
        let out = nilgraph(&["analyze", &format!("fixture:{name}"), "--format", "json"]);
        let v = json(&out);
        // complete upper graph forces a band; an empty one forces Engel
        if v["upper_graph"]["complete"] == true {
            assert_eq!(v["band"], true, "{name}");
        }
        if v["upper_graph"]["empty"] == true {
            assert_eq!(v["positively_engel"], true, "{name}");
        }
        if v["nilpotent"] == true {
            assert!(v["nilpotency_class"].is_u64(), "{name}");
            assert_eq!(v["witness"], serde_json::Value::Null, "{name}");
        }
    }
}
