//! End-to-end checks of the command line binary: exit codes, JSON shapes,
//! and the emit/replay/analyze pipeline.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn kappar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kappar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn kappar_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kappar"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn gallery_list_names_every_entry() {
    let out = kappar(&["gallery", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in [
        "affine_plane",
        "line_conic",
        "Y333",
        "ramanujam",
        "S",
        "MS",
        "arrangement",
    ] {
        assert!(
            text.lines()
                .any(|l| l.split_whitespace().next() == Some(name)),
            "missing {name}"
        );
    }
}

#[test]
fn gallery_tables_agree_for_every_entry() {
    let cases: &[&[&str]] = &[
        &["affine_plane"],
        &["line_conic"],
        &["Y333"],
        &["ramanujam"],
        &["S", "3", "4"],
        &["MS", "2"],
        &["arrangement", "2", "1"],
        &["arrangement", "0", "2"],
    ];
    for args in cases {
        let mut full = vec!["gallery"];
        full.extend(args.iter().copied());
        let out = kappar(&full);
        assert!(out.status.success(), "{args:?}: {}", stderr(&out));
        assert!(!stdout(&out).contains("NO"), "{args:?} disagreed");
    }
}

#[test]
fn bad_gallery_arguments_exit_two() {
    assert_eq!(kappar(&["gallery", "nope"]).status.code(), Some(2));
    assert_eq!(kappar(&["gallery", "S", "2"]).status.code(), Some(2));
    assert_eq!(kappar(&["gallery", "S", "4", "6"]).status.code(), Some(2));
    assert_eq!(kappar(&["gallery", "MS", "1"]).status.code(), Some(2));
}

#[test]
fn analyze_reads_stdin_and_reports() {
    let doc = stdout(&kappar(&["gallery", "Y333", "--emit-surface"]));
    let out = kappar_stdin(&["analyze", "-"], &doc);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["kappa"]["value"], "0");
    assert_eq!(v["kappa"]["certification"], "certified");
    assert_eq!(v["kappa_real"]["result"]["value"], "0");
    assert_eq!(v["homology"]["torsion_invariants"], serde_json::json!([9]));
    assert!(v["kappa_real"].get("before_elimination").is_none());
}

#[test]
fn no_loop_elimination_exposes_the_raw_value() {
    let doc = stdout(&kappar(&["gallery", "line_conic", "--emit-surface"]));
    let out = kappar_stdin(&["analyze", "-", "--no-loop-elimination"], &doc);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["kappa_real"]["before_elimination"]["value"], "0");
    assert_eq!(v["kappa_real"]["result"]["value"], "-inf");
    assert_eq!(
        v["kappa_real"]["eliminated_loops"]
            .as_array()
            .unwrap()
            .len(),
        1
    );
}

#[test]
fn analyze_flags_violations_with_exit_one() {
    let doc = r#"{
        "name": "bad",
        "picard_rank": 1,
        "k_self": 9,
        "components": [
            {"id": 0, "name": "L", "weight": 1, "genus": 1,
             "reality": "real_infinite", "in_boundary": true, "class": [1]}
        ],
        "edges": []
    }"#;
    let out = kappar_stdin(&["analyze", "-"], doc);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!v["validate"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_json_exits_two_with_a_diagnostic() {
    let out = kappar_stdin(&["analyze", "-"], "{\"name\": ");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parse"));
    let out = kappar(&["analyze", "/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scripts_replay_through_the_binary() {
    let script = stdout(&kappar(&["gallery", "MS", "2", "--emit-script"]));
    let out = kappar_stdin(&["script", "-"], &script);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["name"], "MS(2)");
    assert_eq!(v["components"].as_array().unwrap().len(), 11);
    let in_boundary = v["components"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["in_boundary"] == true)
        .count();
    assert_eq!(in_boundary, 10);
}

#[test]
fn dot_renders_galleries_and_files() {
    let out = kappar(&["dot", "--gallery", "ramanujam"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).matches("solid,bold").count(), 10);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doc.json");
    std::fs::write(
        &path,
        stdout(&kappar(&["gallery", "line_conic", "--emit-surface"])),
    )
    .unwrap();
    let out = kappar(&["dot", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).matches("style=dashed").count(), 2);

    let out = kappar(&["dot", "--gallery", "S", "2", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"C0 (-1)\""));
}
