use std::process::{Command, Output};

use serde_json::Value;

fn modgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn z12_ssi_json_has_four_vertices_and_four_edges() {
    let v = stdout_json(&modgraph(&[
        "graph", "--kind", "SSI", "--module", "Z12", "--format", "json",
    ]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(
        v["edges"],
        serde_json::json!([[0, 1], [0, 2], [0, 3], [1, 3]])
    );
    let labels: Vec<&str> = v["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["2M", "3M", "4M", "6M"]);
}

#[test]
fn metrics_format_names_vertices() {
    let v = stdout_json(&modgraph(&[
        "graph", "--kind", "pss", "--module", "Z12", "--format", "metrics",
    ]));
    assert_eq!(v["universal_vertices"], serde_json::json!(["6M"]));
    assert_eq!(v["metrics"]["domination_number"], 1);
}

#[test]
fn dot_output_lists_each_edge_once() {
    let out = modgraph(&["graph", "--kind", "pss", "--module", "Z12"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches(" -- ").count(), 4);
}

#[test]
fn non_dividing_factor_is_rejected() {
    let out = modgraph(&["enumerate", "--module", "Z5", "--ring", "Z6"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("5 does not divide 6"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_descriptor_and_unknown_graph_exit_two() {
    assert_eq!(
        modgraph(&["enumerate", "--module", "Zx"]).status.code(),
        Some(2)
    );
    assert_eq!(
        modgraph(&["graph", "--kind", "XYZ", "--module", "Z6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        modgraph(&["graph", "--kind", "pis", "--module", "Z2xZ4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        modgraph(&["check", "--checks", "C42"]).status.code(),
        Some(2)
    );
}

#[test]
fn size_guard_exits_three() {
    let out = modgraph(&["enumerate", "--module", "Z8192"]);
    assert_eq!(out.status.code(), Some(3));
    let raised = modgraph(&["enumerate", "--module", "Z8192", "--max-order", "8192"]);
    assert!(raised.status.success());
    let family = modgraph(&["check", "--family", "cyclic:5000..5001"]);
    assert_eq!(family.status.code(), Some(3));
}

#[test]
fn enumerate_json_lists_every_submodule() {
    let v = stdout_json(&modgraph(&[
        "enumerate",
        "--module",
        "Z2xZ4",
        "--format",
        "json",
    ]));
    assert_eq!(v["ring"], "Z4");
    assert_eq!(v["order"], 8);
    let rows = v["submodules"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let total: u64 = rows
        .iter()
        .map(|r| r["elements"].as_array().unwrap().len() as u64)
        .sum();
    let orders: u64 = rows.iter().map(|r| r["order"].as_u64().unwrap()).sum();
    assert_eq!(total, orders);
}

#[test]
fn classify_marks_extremal_submodules() {
    let v = stdout_json(&modgraph(&[
        "classify", "--module", "Z12", "--format", "json",
    ]));
    let text = v.to_string();
    assert!(text.contains("\"2M\"") && text.contains("\"6M\""));
    let plain = modgraph(&["classify", "--module", "Z12"]);
    let table = String::from_utf8(plain.stdout).unwrap();
    assert!(table.lines().count() >= 5);
    assert!(table.lines().all(|l| l == l.trim_end()));
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z12.json");
    let path_text = path.to_str().unwrap();
    let args = [
        "graph", "--kind", "ssi", "--module", "Z12", "--format", "json",
    ];
    let direct = modgraph(&args).stdout;
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path_text]);
    let out = modgraph(&with_out);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct);

    let missing = dir.path().join("no/such/dir/out.json");
    let mut bad = args.to_vec();
    bad.extend(["--out", missing.to_str().unwrap()]);
    assert_eq!(modgraph(&bad).status.code(), Some(2));
}

#[test]
fn strict_exit_code_follows_the_report() {
    let clean = modgraph(&[
        "check",
        "--family",
        "cyclic:2..11",
        "--checks",
        "strict",
        "--strict",
    ]);
    assert_eq!(clean.status.code(), Some(0));
    assert_eq!(stdout_json(&clean)["status"], "passed");

    let failing = modgraph(&[
        "check", "--family", "zmod:Z12", "--checks", "C3", "--strict",
    ]);
    assert_eq!(failing.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&failing.stdout).unwrap();
    assert_eq!(report["summary"]["fail"], 1);
    assert!(report["results"][0]["witness"]["facts"].is_array());

    let lenient = modgraph(&["check", "--family", "zmod:Z12", "--checks", "C3"]);
    assert_eq!(lenient.status.code(), Some(0));
}

#[test]
fn findings_fail_only_on_request() {
    let args = [
        "check", "--family", "zmod:Z16", "--checks", "C6,D6", "--strict",
    ];
    assert_eq!(modgraph(&args).status.code(), Some(0));
    let mut strict = args.to_vec();
    strict.push("--fail-on-findings");
    assert_eq!(modgraph(&strict).status.code(), Some(1));
}

#[test]
fn check_text_format_and_list() {
    let out = modgraph(&[
        "check", "--family", "zmod:Z16", "--checks", "C6", "--format", "text",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("finding C6 on Z16/Z16"), "{text}");
    assert!(text.trim_end().ends_with("status=passed"));

    let list = String::from_utf8(modgraph(&["check", "--list"]).stdout).unwrap();
    assert_eq!(list.lines().count(), 30);
    assert_eq!(list.lines().filter(|l| l.contains("report")).count(), 3);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &[
            "graph",
            "--kind",
            "ssi-tilde",
            "--module",
            "Z36",
            "--format",
            "json",
        ][..],
        &["enumerate", "--module", "Z3xZ9", "--format", "json"],
        &["check", "--family", "product:ab<=16;vector:2^3"],
    ] {
        let first = modgraph(args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, modgraph(args).stdout, "{args:?}");
    }
}

#[test]
fn timing_is_opt_in() {
    let plain = stdout_json(&modgraph(&["check", "--family", "cyclic:2..20"]));
    assert!(plain["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["millis"] == 0));
    let timed = modgraph(&["check", "--family", "cyclic:2..20", "--timing"]);
    assert!(timed.status.success());
}
