use std::process::Command;

use serde_json::Value;

fn rectwind(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rectwind"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let doc = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), doc, String::from_utf8(out.stderr).unwrap())
}

const Z2_MINUS_1: &str = r#"[["-1","0"],["0","0"],["1","0"]]"#;

#[test]
fn count_inside_square() {
    let (code, doc, _) = rectwind(&["count", "--poly", Z2_MINUS_1, "--rect", "-2", "2", "-2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["count"], 2);
}

#[test]
fn winding_with_root_on_edge() {
    let poly = r#"[["-1","0"],["1","0"]]"#;
    let (code, doc, _) = rectwind(&["winding", "--poly", poly, "--rect", "-1", "1", "-1", "1", "--trace"]);
    assert_eq!(code, 0);
    assert_eq!(doc["winding"]["value"], "1/2");
    assert_eq!(doc["winding"]["vanishes_on_boundary"], true);
    assert_eq!(doc["trace"].as_array().unwrap().len(), 4);

    let (code, doc, stderr) = rectwind(&["count", "--poly", poly, "--rect", "-1", "1", "-1", "1"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "RootOnBoundary");
    assert!(stderr.starts_with("error:"));
}

#[test]
fn malformed_input_exits_one() {
    let (code, doc, _) = rectwind(&["count", "--poly", "[[1.5, 0]]", "--rect", "0", "1", "0", "1"]);
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["kind"], "Parse");
    let (code, _, _) = rectwind(&["count", "--poly", Z2_MINUS_1, "--rect", "1", "0", "0", "1"]);
    assert_eq!(code, 1);
    let (code, _, _) = rectwind(&["count", "--rect", "0", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn input_file_with_flag_override() {
    let dir = std::env::temp_dir().join(format!("rectwind-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("job.json");
    std::fs::write(&path, format!(r#"{{"poly": {Z2_MINUS_1}, "rect": ["0", "2", "-1", "1"]}}"#)).unwrap();
    let p = path.to_str().unwrap();
    let (code, doc, _) = rectwind(&["--input", p, "count"]);
    assert_eq!((code, doc["count"].clone()), (0, Value::from(1)));
    let (code, doc, _) = rectwind(&["--input", p, "count", "--rect", "-2", "2", "-2", "2"]);
    assert_eq!((code, doc["count"].clone()), (0, Value::from(2)));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_round_trips_as_input() {
    let (_, doc, _) = rectwind(&["isolate", "--poly", Z2_MINUS_1, "--rect", "-2", "2", "-2", "2", "--min-width", "1/16"]);
    let boxes = doc["boxes"].as_array().unwrap();
    assert_eq!(boxes.len(), 2);
    for b in boxes {
        let r = &b["rectangle"];
        let coords: Vec<&str> = ["x0", "x1", "y0", "y1"].iter().map(|k| r[*k].as_str().unwrap()).collect();
        let mut args = vec!["count", "--poly", Z2_MINUS_1, "--rect"];
        args.extend(coords);
        let (code, doc, _) = rectwind(&args);
        assert_eq!((code, doc["count"].clone()), (0, Value::from(1)));
    }
}

#[test]
fn subres_and_bounds() {
    let (code, doc, _) = rectwind(&["subres", "--p", r#"["0","0","1"]"#, "--q", r#"["1","1"]"#]);
    assert_eq!(code, 0);
    assert_eq!(doc["sequence"][2]["sres"], "-1");
    let (code, doc, _) = rectwind(&[
        "subres",
        "--p",
        r#"[["0","0","1"],[],["1"]]"#,
        "--q",
        r#"[["0","1"],["1"]]"#,
        "--degree-bound",
        "2",
    ]);
    assert_eq!(code, 0, "{doc}");
    assert!(doc["degree_report"]["entries"].is_array());
    let (code, doc, _) = rectwind(&["bounds", "--d", "4", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(doc["report"]["beta"], "15");
    assert_eq!(doc["report"]["gamma"], "71253");
}

#[test]
fn table_output_and_help() {
    let out = Command::new(env!("CARGO_BIN_EXE_rectwind"))
        .args(["--format", "table", "index", "--q", "[1]", "--p", "[-2, 0, 1]", "--a", "1", "--b", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "index  1");
    let out = Command::new(env!("CARGO_BIN_EXE_rectwind")).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
