use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_indres"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("indres-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_s4_holds() {
    let out = run(&["verify", "S4", "-p", "2", "--sylow", "--h", "normalizer", "--props", "irc"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["quotients"]["q1_text"], "Z^2");
    assert_eq!(r["quotients"]["q1"]["free_rank"], 2);
    assert_eq!(r["all_hold"], true);
}

#[test]
fn verify_psu33_fails_with_certificate() {
    let out = run(&["verify", "PSU3(3)", "-p", "3", "--sylow", "--props", "irc"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let v = &r["verdicts"][0];
    assert_eq!(v["property"], "irc");
    assert_eq!(v["holds"], false);
    assert!(v["failure_certificate"].as_str().unwrap().contains("maximum matching"));
}

#[test]
fn malformed_group_file_is_an_error() {
    let path = scratch("bad.json");
    std::fs::write(&path, r#"{"degree": 3, "generators": [[1, 2]]}"#).unwrap();
    let out = run(&["verify", path.to_str().unwrap(), "-p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "format");
    std::fs::write(&path, "not json").unwrap();
    let out = run(&["table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn precondition_errors_are_records() {
    let out = run(&["verify", "S4", "-p", "2", "--props", "g"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "precondition");
    let out = run(&["verify", "S4", "-p", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "domain");
    let out = run(&["verify", "S4", "-p", "2", "--props", "irc,bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn error_record_goes_to_output_file() {
    let path = scratch("err.json");
    let out = run(&["verify", "NoSuchGroup", "-p", "2", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["error"]["kind"], "domain");
}

#[test]
fn order_1000_witness() {
    let group = fixture("extraspecial_q8.json");
    let witness = fixture("extraspecial_q8_witness.json");
    let out = run(&["verify", &group, "-p", "2", "--props", "wirc,pres,pind,g", "--witness", &witness, "--block", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["property_g"]["holds"], true);
    let out = run(&["verify", &group, "-p", "2", "--props", "irc"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn witness_outside_the_block_is_rejected() {
    let group = fixture("extraspecial_q8.json");
    let witness = fixture("extraspecial_q8_witness.json");
    let out = run(&["verify", &group, "-p", "2", "--props", "g", "--witness", &witness, "--block", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "domain");
}

#[test]
fn reports_are_byte_stable() {
    let a = run(&["verify", "A5", "-p", "2", "--props", "all,in"]);
    let b = run(&["verify", "A5", "-p", "2", "--props", "all,in"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn table_round_trip_and_supplied_tables() {
    let path = scratch("a5.json");
    let out = run(&["table", "A5", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let t = indres::chartab::load_table(&path).unwrap();
    assert_eq!(t.order(), 60);
    let checked = run(&["table", "A5", "--check", path.to_str().unwrap()]);
    assert_eq!(checked.status.code(), Some(0));
    let computed = run(&["verify", "A5", "-p", "5", "--props", "all"]);
    let supplied = run(&["verify", "A5", "-p", "5", "--props", "all", "--g-table", path.to_str().unwrap()]);
    assert_eq!(computed.status.code(), Some(0));
    assert_eq!(json(&computed)["quotients"], json(&supplied)["quotients"]);
    let wrong = run(&["verify", "S5", "-p", "5", "--g-table", path.to_str().unwrap()]);
    assert_eq!(wrong.status.code(), Some(2));
    assert_eq!(json(&wrong)["error"]["kind"], "consistency");
}

#[test]
fn explicit_subgroups() {
    // P = <(1,2)(3,4)> inside H = <(1,2)(3,4), (1,3)(2,4)> in S4
    let p = scratch("p.json");
    let h = scratch("h.json");
    std::fs::write(&p, r#"{"degree": 4, "generators": [[2, 1, 4, 3]]}"#).unwrap();
    std::fs::write(&h, r#"{"degree": 4, "generators": [[2, 1, 4, 3], [3, 4, 1, 2]], "order": "4"}"#).unwrap();
    let out = run(&["verify", "A4", "-p", "2", "--p-subgroup", p.to_str().unwrap(), "--h", h.to_str().unwrap(), "--props", "pres,pind"]);
    // N_A4(P) = V4 = H
    assert!(matches!(out.status.code(), Some(0) | Some(1)), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["h_order"], 4);
    let bad_h = scratch("badh.json");
    std::fs::write(&bad_h, r#"{"degree": 4, "generators": [[2, 1, 4, 3]], "order": "2"}"#).unwrap();
    let out = run(&["verify", "S4", "-p", "2", "--h", bad_h.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "precondition");
}

#[test]
fn blocks_and_quotients() {
    let out = run(&["blocks", "M11", "-p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let total: usize = r["blocks"].as_array().unwrap().iter().map(|b| b["chars"].as_array().unwrap().len()).sum();
    assert_eq!(total, 10);
    let out = run(&["quotients", "S8", "-p", "3"]);
    assert_eq!(json(&out)["q1_text"], "[Z^2] + [Z^2]");
    let out = run(&["quotients", "M12", "-p", "2", "--defect-block", "1"]);
    assert_eq!(json(&out)["q1_text"], "Z/2");
}

#[test]
fn oracles() {
    let out = run(&["oracle", "brute-classes", "Q8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["class_sizes"].as_array().unwrap().len(), 5);
    let out = run(&["oracle", "brute-table", "S3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["degrees"], serde_json::json!([1, 1, 2]));
    let out = run(&["oracle", "subgroup-lattice", "S4", "-p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["identical"], true);
    assert_eq!(r["brute_hnf"], r["elementary_hnf"]);
    let out = run(&["oracle", "subgroup-lattice", "S6", "-p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "budget");
}

#[test]
fn paper_table_small() {
    let path = scratch("rows.txt");
    let out = run(&["paper-table", "--suite", "small", "-o", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(Path::new(&path)).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.lines().any(|l| l.starts_with("A5 ") && l.contains("| Z ") && l.ends_with("match")));
    assert!(text.ends_with("31 of 31 rows match\n"));
}
