use std::process::{Command, Output};

use algknot_core::rational::{int, parse};
use algknot_core::{upsilon_of, KnotSpec};
use serde_json::Value;

fn algknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algknot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = algknot(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn info_reports_every_derived_field() {
    let v = json(&["info", "--puiseux", "8;10,31"]);
    for key in [
        "puiseux",
        "gcd_chain",
        "semigroup_generators",
        "cable_stages",
        "milnor",
        "genus",
        "tau",
        "first_singularity",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["genus"], 42);
    assert_eq!(v["milnor"], 84);
    assert_eq!(v["first_singularity"], "1/4");
}

#[test]
fn torus_flag_and_text_output() {
    let v = json(&["info", "--torus", "5", "4"]);
    assert_eq!(v["genus"], 6);
    let out = algknot(&["info", "--torus", "4", "5"]);
    assert!(out.status.success());
    assert!(!out.stdout.is_empty());
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        &["info", "--puiseux", "4;6,8"][..],
        &["info", "--puiseux", "4;6"],
        &["info", "--torus", "4", "6"],
        &["upsilon", "--puiseux", "4;6,7", "--at", "3/2"],
        &["signature", "--puiseux", "4;6,7"],
        &[
            "obstruct", "--k0", "torus", "3", "10", "--k1", "torus", "4", "5",
        ],
    ] {
        let out = algknot(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn upsilon_samples_interpolate_breakpoints() {
    let v = json(&[
        "upsilon",
        "--puiseux",
        "4;6,7",
        "--samples",
        "16",
        "--at",
        "1/3",
    ]);
    let u = upsilon_of(&"4;6,7".parse::<KnotSpec>().unwrap());
    let samples = v["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 17);
    for s in samples {
        let t = parse(s["t"].as_str().unwrap()).unwrap();
        let value = parse(s["v"].as_str().unwrap()).unwrap();
        assert_eq!(u.evaluate(&t).unwrap(), value);
    }
    let at = &v["evaluations"][0];
    assert_eq!(
        parse(at["v"].as_str().unwrap()).unwrap(),
        u.evaluate(&parse("1/3").unwrap()).unwrap()
    );
}

#[test]
fn extended_upsilon_is_symmetric() {
    let v = json(&["upsilon", "--torus", "3", "4", "--extend"]);
    let points = v["breakpoints"].as_array().unwrap();
    let last = points.last().unwrap();
    assert_eq!(parse(last["t"].as_str().unwrap()).unwrap(), int(2));
    assert_eq!(parse(last["v"].as_str().unwrap()).unwrap(), int(0));
}

#[test]
fn signature_steps_cover_unit_interval() {
    let v = json(&["signature", "--torus", "2", "3", "--at", "1/2"]);
    assert_eq!(v["evaluations"][0]["value"], -2);
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.first().unwrap()["from"], "0/1");
    assert_eq!(steps.last().unwrap()["to"], "1/1");
}

#[test]
fn obstruct_csv_has_one_row() {
    let out = algknot(&[
        "--format", "csv", "obstruct", "--k0", "8;10,31", "--k1", "4;30,31",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("k0,k1,g0,g1"));
    assert!(lines[1].ends_with("Obstructed"));
}

#[test]
fn search_family_rows_reparse() {
    let v = json(&["search-family", "--max-a", "6", "--max-c", "40"]);
    let rows = v.as_array().unwrap();
    assert!(!rows.is_empty());
    for row in rows {
        let k0: KnotSpec = row["seq0"].as_str().unwrap().parse().unwrap();
        let k1: KnotSpec = row["seq1"].as_str().unwrap().parse().unwrap();
        assert_eq!(row["g0"], k0.genus());
        assert_eq!(row["g1"], k1.genus());
        assert!(k0.genus() <= k1.genus());
    }
}
