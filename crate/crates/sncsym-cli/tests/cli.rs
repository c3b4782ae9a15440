//! End-to-end tests of the `sncsym` binary: golden files for the worked
//! examples, JSON round-trips, and exit-code conventions.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sncsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR")))
        .expect("golden file")
}

#[test]
fn golden_outputs() {
    let cases: &[(&[&str], &str)] = &[
        (&["enumerate", "--n", "2", "--m", "2"], "enumerate_2_2.txt"),
        (
            &["convert", "--from", "m", "--to", "p", "m[({0},{0,1},{2})]"],
            "convert_m_to_p.txt",
        ),
        (
            &["convert", "--from", "m", "--to", "e", "m[({0},{0,1},{2})]"],
            "convert_m_to_e.txt",
        ),
        (
            &["convert", "--from", "m", "--to", "h", "m[({0},{0,1},{2})]"],
            "convert_m_to_h.txt",
        ),
        (&["schur", "--kind", "1", "(2,1;)"], "schur_staircase.txt"),
        (
            &["product", "m[({0},{0,3},{1,2})]", "m[({0,2},{1})]"],
            "product_shuffle.txt",
        ),
        (
            &["inner", "--n", "2", "--m", "1", "--format", "csv"],
            "inner_2_1.csv",
        ),
        (
            &["kostka", "--n", "2", "--m", "1", "--kind", "1"],
            "kostka_2_1.txt",
        ),
        (&["mobius", "--n", "3", "--m", "0"], "mobius_3_0.txt"),
        (&["project", "m[({0},{0,1},{2})]"], "project_example.txt"),
    ];
    for (args, file) in cases {
        assert_eq!(stdout(args), golden(file), "golden mismatch for {file}");
    }
}

#[test]
fn json_round_trips_through_module_parsers() {
    let text = stdout(&[
        "convert",
        "--from",
        "m",
        "--to",
        "h",
        "--format",
        "json",
        "m[({0},{0,1},{2})]",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let el = sncsym::algebra::Element::from_json(&v).unwrap();
    assert_eq!(el.to_json(), v);

    let text = stdout(&["schur", "--kind", "2", "--format", "json", "(1;1)"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(sncsym::algebra::Element::from_json(&v).unwrap().to_json(), v);

    let text = stdout(&["project", "--format", "json", "m[({0},{0,1},{2})]"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(sncsym::ssym::SElement::from_json(&v).unwrap().to_json(), v);
}

#[test]
fn lift_then_project_round_trip() {
    let lifted = stdout(&["lift", "m[(2,0;1)]"]);
    let back = stdout(&["project", "--", lifted.trim()]);
    assert_eq!(back.trim(), "m[(2,0;1)]");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["convert", "--from", "m", "--to", "q", "m[({0,1})]"][..],
        &["convert", "--from", "p", "--to", "m", "m[({0,1})]"],
        &["expand", "m[(oops"],
        &["inner", "m[({0,1})]"],
        &["enumerate", "--n", "2"],
        &["nonsense"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "args {args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join("sncsym_out_test.txt");
    let _ = std::fs::remove_file(&path);
    let out = run(&[
        "enumerate",
        "--n",
        "1",
        "--m",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, "({0},{1})\n({0,1})\n");
    let _ = std::fs::remove_file(&path);
}

#[test]
fn verify_small_degree_exits_zero() {
    let out = run(&["verify", "--max-degree", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["identities"].as_array().unwrap().len() >= 27);
}
