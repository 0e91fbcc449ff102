//! End-to-end checks of the command line interface: outputs, file formats,
//! exit codes, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn lrembed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrembed"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn tableaux_count_of_the_five_component_family() {
    let out = lrembed(&[
        "tableaux",
        "--alpha",
        "3,2",
        "--beta",
        "5,4,3,2,1",
        "--gamma",
        "4,3,2,1",
        "--count",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "5");
}

#[test]
fn tableaux_empty_content() {
    let out = lrembed(&[
        "tableaux", "--alpha", "", "--beta", "3", "--gamma", "3", "--count",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn tableaux_usage_error_exits_2() {
    let out = lrembed(&[
        "tableaux", "--alpha", "2", "--beta", "2", "--gamma", "1", "--count",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tableaux_check_reports_lattice_violation() {
    let out = lrembed(&["tableaux", "--check", &fixture("bad_lattice.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("LATTICE_VIOLATION"));

    let out = lrembed(&["tableaux", "--check", &fixture("four_map_tableau.json")]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"valid\""));
}

#[test]
fn pmaps_classes_of_the_four_map_example() {
    let out = lrembed(&[
        "pmaps",
        "--file",
        &fixture("four_map_tableau.json"),
        "--list",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 4);

    let out = lrembed(&[
        "pmaps",
        "--file",
        &fixture("four_map_tableau.json"),
        "--classes",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 2);

    let out = lrembed(&[
        "pmaps",
        "--file",
        &fixture("four_map_tableau.json"),
        "--ebp-only",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(v["ebp"], serde_json::json!(true));
    let mut poles: Vec<Vec<u64>> = v["decomposition"]["poles"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            p.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect()
        })
        .collect();
    poles.sort();
    assert_eq!(poles, vec![vec![0, 1], vec![0, 2, 3], vec![2]]);
    assert_eq!(v["decomposition"]["empty"], serde_json::json!([]));
}

#[test]
fn poles_data_and_split() {
    let out = lrembed(&["poles", "--sequence", "1,3,4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["blocks"], serde_json::json!([5, 2]));
    assert_eq!(v["shifts"], serde_json::json!([2, 1]));
    assert_eq!(v["gaps"], serde_json::json!([0, 2]));
    assert_eq!(
        v["tableau"]["grid"],
        serde_json::json!([[0, 0], [0, 1], [0], [2], [3]])
    );

    let out = lrembed(&["poles", "--sequence", "1,3,4", "--split", "1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["padding"], serde_json::json!([4]));
    assert_eq!(v["ambient"], serde_json::json!([5, 4, 2]));

    // splitting at a gap index is an input error
    let out = lrembed(&["poles", "--sequence", "1,3,4", "--split", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = lrembed(&["poles", "--endo-count", "5,2"]);
    assert_eq!(stdout(&out).trim(), "12");
}

#[test]
fn embed_round_trip() {
    let out = lrembed(&["embed", "--file", &fixture("pole_134.json"), "--heights"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["heights"], serde_json::json!([[1, 3, 4]]));

    let out = lrembed(&["embed", "--file", &fixture("pole_134.json"), "--tableau"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["tableau"]["chain"],
        serde_json::json!([[3, 1], [3, 2], [4, 2], [5, 2]])
    );
}

#[test]
fn poset_dot_and_certification() {
    let out = lrembed(&[
        "poset",
        "--alpha",
        "3,2",
        "--beta",
        "5,4,3,2,1",
        "--gamma",
        "4,3,2,1",
        "--dot",
        "-",
        "--certify",
        "--prime",
        "5",
    ]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph boundary"));
    assert_eq!(dot.matches("->").count(), 5);

    // deterministic output
    let again = lrembed(&[
        "poset",
        "--alpha",
        "3,2",
        "--beta",
        "5,4,3,2,1",
        "--gamma",
        "4,3,2,1",
        "--dot",
        "-",
        "--certify",
        "--prime",
        "5",
    ]);
    assert_eq!(out.stdout, again.stdout);

    let summary = lrembed(&["poset", "--alpha", "1", "--beta", "2", "--gamma", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&summary)).unwrap();
    assert_eq!(v["nodes"], serde_json::json!(1));
    assert_eq!(v["hasse_edges"], serde_json::json!(0));
}

#[test]
fn poset_json_dump() {
    let out = lrembed(&[
        "poset",
        "--alpha",
        "4,2",
        "--beta",
        "5,4,2",
        "--gamma",
        "3,2",
        "--json",
        "-",
        "--certify",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["nodes"].as_array().unwrap().len() >= 2);
    let edges = v["edges"].as_array().unwrap();
    assert!(edges
        .iter()
        .any(|e| e["kind"] == "BOX_MOVE" && e["certified"] == serde_json::json!(true)));
}

#[test]
fn verify_suites_report_json_lines() {
    let out = lrembed(&["verify", "pole-roundtrip", "--max-size", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], serde_json::json!("pass"));
    }

    let out = lrembed(&["verify", "endo-count", "--max-size", "5", "--prime", "2"]);
    assert!(out.status.success());

    let out = lrembed(&["verify", "box-family", "--max-size", "6", "--prime", "5"]);
    assert!(out.status.success());

    let out = lrembed(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));

    let out = lrembed(&["verify", "pole-roundtrip", "--prime", "9"]);
    assert_eq!(out.status.code(), Some(2));
}
