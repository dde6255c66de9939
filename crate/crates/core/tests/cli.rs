use std::io::Write;
use std::process::{Command, Output, Stdio};

use locdom::generators::{make_family, FamilySpec};
use locdom::io::graph_to_json;
use serde_json::Value;

fn locdom(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_locdom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {:?}", stdout(o)))
}

#[test]
fn gen_piped_into_lambda_with_constant_map() {
    let gen = locdom(&["gen", "--family", "complete", "--n", "5"], "");
    assert!(gen.status.success());
    let graph = stdout(&gen);
    assert_eq!(
        graph.trim(),
        graph_to_json(&make_family(FamilySpec::Complete { n: 5 }).unwrap())
    );
    let out = locdom(&["lambda", "--map", "constant:0", "--json"], &graph);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["lambda"], 7);
    assert_eq!(v["witness"].as_array().unwrap().len(), 7);
    assert!(v["stats"]["sets_tested"].as_u64().unwrap() >= 1);
}

#[test]
fn identity_on_p3_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.json");
    std::fs::write(&path, r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
    let p = path.to_str().unwrap();
    let out = locdom(&["lambda", "--graph", p, "--map", "identity", "--json"], "");
    assert_eq!(json(&out)["lambda"], 3);
    let out = locdom(&["lambda", "--graph", p, "--json"], "");
    assert_eq!(json(&out)["lambda"], 2);
}

#[test]
fn functigraph_document_is_auto_detected() {
    let doc = r#"{"base":{"n":3,"edges":[[0,1],[1,2]]},"map":[0,1,2]}"#;
    let out = locdom(&["lambda", "--functigraph", "--deterministic-witness", "--json"], doc);
    let v = json(&out);
    assert_eq!(v["lambda"], 3);
    let again = locdom(&["lambda", "--deterministic-witness", "--no-prune", "--json"], doc);
    assert_eq!(json(&again)["witness"], v["witness"]);
    let oracle = locdom(&["oracle", "--json"], doc);
    assert_eq!(json(&oracle)["lambda"], 3);
}

#[test]
fn twins_command() {
    let star = r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4]]}"#;
    let out = locdom(&["twins", "--json"], star);
    let v = json(&out);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 2);
    assert_eq!(classes[1]["members"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(classes[1]["kind"], "non-adjacent-twins");
    let text = locdom(&["twins"], star);
    assert!(stdout(&text).contains("non-adjacent-twins {1, 2, 3, 4}"));
}

#[test]
fn edge_list_input() {
    let out = locdom(&["lambda", "--json"], "# C4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(json(&out)["lambda"], 2);
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(locdom(&["lambda", "--bogus"], "").status.code(), Some(2));
    assert_eq!(locdom(&["lambda"], "{not json").status.code(), Some(2));
    assert_eq!(
        locdom(&["lambda"], r#"{"n":3,"edges":[[1,0]]}"#).status.code(),
        Some(2)
    );
    assert_eq!(
        locdom(&["lambda", "--functigraph"], r#"{"n":2,"edges":[[0,1]]}"#).status.code(),
        Some(2)
    );
    assert_eq!(
        locdom(&["lambda", "--map", "constant:0"], r#"{"n":4,"edges":[[0,1],[2,3]]}"#)
            .status
            .code(),
        Some(2)
    );
    let long_path: Vec<String> = (0..25).map(|u| format!("{u} {}", u + 1)).collect();
    assert_eq!(
        locdom(&["oracle"], &long_path.join("\n")).status.code(),
        Some(2)
    );
    assert_eq!(
        locdom(&["gen", "--family", "h_graph", "--n", "2", "--i", "1"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(locdom(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn gen_families_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    let out = locdom(
        &["gen", "--family", "h_graph", "--n", "7", "--i", "2", "-o", path.to_str().unwrap()],
        "",
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 7);
    assert_eq!(v["edges"].as_array().unwrap().len(), 21 - 2);

    let out = locdom(&["gen", "--family", "pendant_gap", "--t", "3"], "");
    let v = json(&out);
    assert_eq!(v["n"], 5);
}

#[test]
fn verify_small_sweep_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let js = dir.path().join("out.json");
    let out = locdom(
        &[
            "verify",
            "--nmax-complete",
            "6",
            "--nmax-hi",
            "6",
            "--nmax-bounds",
            "4",
            "--gap-tmax",
            "3",
            "--csv",
            csv.to_str().unwrap(),
            "--json",
            js.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "case_id,n,params,predicted,computed,match,millis"
    );
    let rows: Vec<_> = lines.collect();
    assert!(rows.iter().all(|r| r.contains(",true,")));
    // all 7 signatures of n=5 and all 11 of n=6
    let complete_n6 = rows
        .iter()
        .filter(|r| r.starts_with("complete-") && r.split(',').nth(1) == Some("6"))
        .count();
    assert_eq!(complete_n6, 11);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&js).unwrap()).unwrap();
    assert_eq!(report["summary"]["mismatched"], 0);
    assert!(report["rows"][0]["witness"].is_array());
}

#[test]
fn verify_csv_to_stdout() {
    let out = locdom(
        &[
            "verify",
            "--nmax-complete",
            "4",
            "--nmax-hi",
            "5",
            "--nmax-bounds",
            "3",
            "--no-gap",
            "--csv",
            "-",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("case_id,"));
}
