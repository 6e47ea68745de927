use std::process::{Command, Output};

use serde_json::Value;

fn fcg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcg")).args(args).output().expect("spawn fcg")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = fcg(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    let once = serde_json::to_string(&v).unwrap();
    let back: Value = serde_json::from_str(&once).unwrap();
    assert_eq!(back, v, "{args:?} does not round-trip");
    assert_eq!(serde_json::to_string(&back).unwrap(), once);
    v
}

#[test]
fn e8_dimension() {
    let v = json(&["dim", "--case", "E8", "--q", "61", "--json"]);
    assert_eq!(v["dim"], 13);
    assert_eq!(v["dim_endo"], 13);
}

#[test]
fn depth_example() {
    let o = fcg(&["depth", "--type", "D4", "--twist", "3", "--vertex", "a134", "--parabolic", "a0,a2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1/12");
    let v = json(&["depth", "--type", "E6", "--twist", "2", "--vertex", "a35", "--parabolic", "a0,a2,a4,a16", "--json"]);
    assert_eq!(v["r"], "1/18");
}

#[test]
fn every_subcommand_round_trips() {
    let runs: [&[&str]; 9] = [
        &["stable", "--case", "B-split", "--n", "12", "--q", "13", "--json"],
        &["xset", "--case", "B-split", "--n", "12", "--q", "13", "--json"],
        &["yset", "--case", "D-split-even", "--n", "16", "--q", "61", "--json"],
        &["phi", "--case", "A-ram", "--n", "6", "--q", "7", "--json"],
        &["endoscopy", "--case", "E7-split", "--q", "13", "--json"],
        &["finite-dim", "--type", "D18", "--isogeny", "z", "--q", "5", "--json"],
        &["diagram", "--type", "D4", "--json"],
        &["depth", "--type", "E7", "--vertex", "a0", "--parabolic", "a4,a7", "--json"],
        &["verify", "--family", "G2,F4", "--json"],
    ];
    for args in runs {
        json(args);
    }
}

#[test]
fn phi_graph_for_b12() {
    let v = json(&["phi", "--case", "B-split", "--n", "12", "--q", "13", "--json"]);
    assert_eq!(v["total"], 5);
    assert_eq!(v["entries"].as_array().unwrap().len(), 5);
}

#[test]
fn diagram_counts() {
    let v = json(&["diagram", "--type", "D4", "--json"]);
    assert_eq!(v["automorphisms"], 24);
    assert_eq!(v["omega"], 4);
    assert_eq!(v["marks"], serde_json::json!([1, 1, 2, 1, 1]));
}

#[test]
fn tsv_columns() {
    let o = fcg(&["yset", "--case", "B-split", "--n", "12", "--q", "13", "--tsv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "case\tn\tq\tentry-label\tmult/dim\tside");
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.len() == 6 && r[0] == "B-split" && r[1] == "12" && r[2] == "13" && r[5] == "Y"));
}

#[test]
fn verify_sweep_passes() {
    let o = fcg(&[
        "verify",
        "--family",
        "all",
        "--n-max",
        "60",
        "--q",
        "61,67,71,73,79,83,89,97,101,103,107,109,113",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("ok: "));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--family", "D", "--n-max", "30", "--json"];
    assert_eq!(stdout(&fcg(&args)), stdout(&fcg(&args)));
}

#[test]
fn usage_errors_exit_2() {
    let bad: [&[&str]; 6] = [
        &["dim", "--case", "nope", "--q", "7"],
        &["dim", "--case", "B-split", "--q", "7"],
        &["dim", "--case", "B-split", "--n", "1", "--q", "7"],
        &["dim", "--case", "E8", "--q", "1"],
        &["dim", "--case", "E8", "--q", "61", "--json", "--tsv"],
        &["depth", "--type", "D4", "--twist", "3", "--vertex", "a9"],
    ];
    for args in bad {
        assert_eq!(fcg(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(fcg(&[]).status.code(), Some(2));
}

#[test]
fn entries_decode_into_library_types() {
    let v = json(&["xset", "--case", "B-split", "--n", "12", "--q", "13", "--json"]);
    let xs: Vec<fc_core::XEntry> = serde_json::from_value(v["entries"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&xs).unwrap(), v["entries"]);
    let v = json(&["endoscopy", "--case", "D-split-even", "--n", "8", "--q", "61", "--json"]);
    let data: Vec<fc_core::EndoDatum> = serde_json::from_value(v["entries"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&data).unwrap(), v["entries"]);
    assert_eq!(data.iter().map(|d| d.contribution).sum::<u64>(), v["total"].as_u64().unwrap());
}
