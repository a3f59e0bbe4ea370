use std::process::{Command, Output};

use sptcrank::combinatorics::{oracle_spt, SptKind};
use sptcrank::spt::SptFamily;
use sptcrank::Int;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sptcrank")).args(args).env_remove("SPTCRANK_ORDER").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<i64>>) {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r.records().map(|rec| rec.unwrap().iter().map(|f| f.parse().unwrap()).collect()).collect();
    (header, rows)
}

#[test]
fn verify_theorem_suite_as_json() {
    let o = run(&["verify", "--filter", "thm5", "--order", "250", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "thm5");
    assert_eq!(v["summary"]["total"], 4);
    assert_eq!(v["summary"]["failed"], 0);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 4);
    for c in cases {
        let mut keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, ["first_mismatch", "id", "millis", "order", "pass"]);
        assert_eq!(c["pass"], true);
        assert_eq!(c["order"], 250);
    }
}

#[test]
fn json_report_is_stable_apart_from_timing() {
    let strip = |o: Output| -> String { stdout(&o).lines().filter(|l| !l.contains("\"millis\"")).collect() };
    let args = ["verify", "--filter", "cor6", "--format", "json"];
    assert_eq!(strip(run(&args)), strip(run(&args)));
}

#[test]
fn verify_single_and_unknown_ids() {
    let o = run(&["verify", "--id", "eqintro1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS eqintro1"));
    let o = run(&["verify", "--id", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nope"));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--id", "eqintro1", "--all"]).status.code(), Some(2));
}

#[test]
fn order_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_sptcrank"))
        .args(["eval", "--expr", "1/(1-q)"])
        .env("SPTCRANK_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(stdout(&o).trim(), "1,1,1,1");
}

#[test]
fn congruences() {
    let o = run(&["congruence", "--family", "A5", "--mod", "7", "--residue", "1", "--max", "700"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["congruence", "--family", "E2", "--mod", "3", "--residue", "0", "--max", "900"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("M_E2(k,3,n) is the same for every k"));
}

#[test]
fn congruence_counterexample_has_a_witness() {
    // smallest n ≡ 2 (mod 3) with 3 ∤ spt_A1(n), by enumeration
    let expected = (2..=60u32)
        .step_by(3)
        .find(|&n| oracle_spt(SptKind::Family(SptFamily::A1), n).unwrap().rem_euclid(3) != 0)
        .unwrap();
    let o = run(&["congruence", "--family", "A1", "--mod", "3", "--residue", "2", "--max", "60", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], false);
    assert_eq!(v["witness"], expected);
}

#[test]
fn a1_table_matches_enumeration() {
    let o = run(&["table", "--family", "A1", "--max", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = csv_rows(&stdout(&o));
    assert_eq!(header, ["n", "value"]);
    assert_eq!(rows.len(), 21);
    for row in rows {
        let want = oracle_spt(SptKind::Family(SptFamily::A1), row[0] as u32).unwrap();
        assert_eq!(Int::from(row[1]), want, "n = {}", row[0]);
    }
}

#[test]
fn residue_columns_sum_to_spt() {
    let o = run(&["table", "--family", "E4", "--max", "40", "--what", "mresidue", "--mod", "3"]);
    let (header, rows) = csv_rows(&stdout(&o));
    assert_eq!(header, ["n", "value", "m0", "m1", "m2"]);
    for row in rows {
        assert_eq!(row[2..].iter().sum::<i64>(), row[1]);
    }
    let o = run(&["table", "--family", "E4", "--max", "4", "--what", "mresidue"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn c1_and_c5_agree_on_odd_n() {
    let (_, c1) = csv_rows(&stdout(&run(&["table", "--family", "C1", "--max", "60"])));
    let (_, c5) = csv_rows(&stdout(&run(&["table", "--family", "C5", "--max", "60"])));
    for n in (1..=60).step_by(2) {
        assert_eq!(c1[n][1], c5[n][1], "n = {n}");
    }
    assert!((0..=60).step_by(2).any(|n| c1[n][1] != c5[n][1]));
}

#[test]
fn table_as_json() {
    let o = run(&["table", "--family", "A3", "--max", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].get("m").is_none());
    for (n, r) in rows.iter().enumerate() {
        let want = oracle_spt(SptKind::Family(SptFamily::A3), n as u32).unwrap();
        assert_eq!(r["value"].as_i64().map(Int::from), Some(want));
    }
}

#[test]
fn oracle_checks() {
    let o = run(&["oracle-check", "--kind", "plain", "--max", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let first = stdout(&o).lines().next().unwrap().to_string();
    let values: Vec<i64> = first.trim_start_matches("plain: ").split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(values[4], 10);
    for kind in ["A1", "E2", "bar", "M2"] {
        assert_eq!(run(&["oracle-check", "--kind", kind, "--max", "24"]).status.code(), Some(0), "{kind}");
    }
    assert_eq!(run(&["oracle-check", "--kind", "A1", "--max", "40"]).status.code(), Some(2));
    assert_eq!(run(&["oracle-check", "--kind", "B7", "--max", "4"]).status.code(), Some(2));
}

#[test]
fn nonnegativity_scans() {
    let o = run(&["scan-nonneg", "--family", "E4", "--max", "300"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("E4: 0 negative"));
    for x in ["C1", "C5"] {
        let o = run(&["scan-nonneg", "--family", x, "--max", "200"]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).starts_with(&format!("{x}: 0 negative")));
    }
    assert_eq!(run(&["scan-nonneg", "--family", "A1", "--max", "20"]).status.code(), Some(2));
    assert_eq!(run(&["scan-nonneg", "--family", "Z9", "--max", "20"]).status.code(), Some(2));
}

#[test]
fn eval_expressions() {
    let o = run(&["eval", "--expr", "eta(1)", "--order", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1,-1,-1,0,0,1,0,1");

    let a = run(&["eval", "--expr", "jac(1,5)*jac(2,5)", "--order", "40"]);
    let b = run(&["eval", "--expr", "eta(1)/eta(5)", "--order", "40"]);
    assert_eq!(stdout(&a), stdout(&b));

    let o = run(&["eval", "--expr", "1/(1-q^0)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["eval", "--expr", "eta(2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 5"));
}
