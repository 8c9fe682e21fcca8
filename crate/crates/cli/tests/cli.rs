use qconnect_cli::{run_args, EXIT_ERROR, EXIT_OK, EXIT_USAGE};
use regex::Regex;
use serde_json::Value;
use std::process::Command;

fn run(args: &str) -> (u8, String, String) {
    let out = run_args(std::iter::once("qconnect").chain(args.split_whitespace()));
    (out.code, out.stdout, out.stderr)
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

fn no_floats(text: &str) {
    let float = Regex::new(r"(^|[^A-Za-z0-9.])-?\d+(\.\d+([eE][+-]?\d+)?|[eE][+-]?\d+)\b|NaN|\binf\b").unwrap();
    assert!(!float.is_match(text), "float literal in output:\n{text}");
}

#[test]
fn float_detector() {
    for t in ["0.5", "x=-1.25", "3e-4", " 2.0E+3", "NaN"] {
        assert!(std::panic::catch_unwind(|| no_floats(t)).is_err(), "{t}");
    }
    no_floats(r#""Eq2.1" "lemma2.2" "Table1:q-meixner" "-5/6" "2/5+1/3i""#);
}

#[test]
fn little_q_laguerre_inversion() {
    let (code, out, _) = run("invert --family little-q-laguerre --param a=1/2 --q 1/3 --n 1 --format json");
    assert_eq!(code, EXIT_OK);
    let doc = json(&out);
    assert_eq!(doc["schema_version"], "1");
    let rows: Vec<(u64, String)> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["m"].as_u64().unwrap(), r["value"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(rows, [(0, "5/6".to_string()), (1, "-5/6".to_string())]);
    no_floats(&out);
}

#[test]
fn oracle_agrees_on_the_same_request() {
    let base = "invert --family little-q-laguerre --param a=1/2 --q 1/3 --n 4";
    let (_, closed, _) = run(base);
    let (_, oracle, _) = run(&format!("{base} --oracle"));
    let values = |t: &str| json(t)["rows"].as_array().unwrap().iter().map(|r| r["value"].clone()).collect::<Vec<_>>();
    assert_eq!(values(&closed), values(&oracle));
}

#[test]
fn racah_product_mismatch_is_rejected() {
    let (code, out, err) = run(
        "connect --from q-racah:alpha=1/3,beta=2/7,gamma=3/5,delta=5/11 \
         --to q-racah:alpha=4/9,beta=1/6,gamma=3/5,delta=7/11 --q 2/5 --n 3",
    );
    assert_eq!(code, EXIT_ERROR);
    assert!(out.is_empty());
    assert_eq!(json(&err)["error"]["kind"], "PreconditionViolated");
}

#[test]
fn racah_with_matching_product_connects() {
    let (code, out, _) = run(
        "connect --from q-racah:alpha=1/3,beta=2/7,gamma=3/5,delta=5/11 \
         --to q-racah:alpha=4/9,beta=1/6,gamma=3/7,delta=7/11 --q 2/5 --n 3",
    );
    assert_eq!(code, EXIT_OK, "{out}");
    let rows = json(&out)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r["provenance"] == "Eq4.6"));
}

#[test]
fn recursion_suite_passes() {
    let (code, out, _) = run("verify --suite lemma22 --n-max 8 --q 2/5");
    assert_eq!(code, EXIT_OK);
    let doc = json(&out);
    assert_eq!(doc["summary"]["mismatched"], 0);
    assert_eq!(doc["summary"]["errors"], 0);
    assert!(doc["summary"]["matched"].as_u64().unwrap() > 0);
    no_floats(&out);
}

#[test]
fn printed_form_is_reported_as_mismatch() {
    let (code, out, _) = run("verify --suite table1 --family q-meixner --n-max 4 --as-printed");
    assert_eq!(code, qconnect_cli::EXIT_FAILED_CHECKS);
    assert!(json(&out)["summary"]["mismatched"].as_u64().unwrap() > 0);
}

#[test]
fn same_seed_same_bytes() {
    let req = "verify --suite table2 --family q-hahn --n-max 4 --seed 17";
    assert_eq!(run(req), run(req));
    let (_, other, _) = run("verify --suite table2 --family q-hahn --n-max 4 --seed 18");
    assert_ne!(run(req).1, other);
}

#[test]
fn csv_table() {
    let (code, out, _) = run("table --family q-charlier --param a=3/4 --q 1/2 --n-max 2 --format csv");
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], r#""n","m","value","provenance""#);
    assert_eq!(lines.len(), 1 + 1 + 2 + 3);
    assert!(lines[1..].iter().all(|l| l.ends_with(r#""Table1:q-charlier""#)));
    no_floats(&out);
}

#[test]
fn connection_table_rows_are_ordered() {
    let (code, out, _) = run("table --from generic-q:a1=1/3,b1=2/9 --to generic-q:a1=3/7 --q 2/5 --n-max 3");
    assert_eq!(code, EXIT_OK, "{out}");
    let doc = json(&out);
    let keys: Vec<(u64, u64)> =
        doc["rows"].as_array().unwrap().iter().map(|r| (r["n"].as_u64().unwrap(), r["m"].as_u64().unwrap())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn ledger_lists_corrections() {
    let (code, out, _) = run("ledger");
    assert_eq!(code, EXIT_OK);
    let doc = json(&out);
    let entries = doc["ledger"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["location"] == "Table1:q-meixner"));
    assert!(entries.iter().all(|e| !e["corrected_form"].as_str().unwrap().is_empty()));
}

#[test]
fn bad_input_is_reported() {
    let (code, _, err) = run("invert --family no-such-family --q 1/2 --n 1");
    assert_eq!((code, json(&err)["error"]["kind"].clone()), (EXIT_ERROR, "UnknownFamily".into()));
    let (code, _, err) = run("invert --family q-charlier --param a=1/0 --q 1/2 --n 1");
    assert_eq!((code, json(&err)["error"]["kind"].clone()), (EXIT_ERROR, "ZeroDenominator".into()));
    let (code, _, err) = run("invert --family q-charlier --param z=1/3 --q 1/2 --n 1");
    assert_eq!((code, json(&err)["error"]["kind"].clone()), (EXIT_ERROR, "Binding".into()));
    let (code, _, err) = run("invert --family q-charlier --param a=1/3 --n 1");
    assert_eq!((code, json(&err)["error"]["kind"].clone()), (EXIT_ERROR, "Binding".into()));
    let (code, _, _) = run("verify --suite nope");
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_qconnect");
    let ok = Command::new(bin).args(["invert", "--family", "q-charlier", "--param", "a=3/4", "--q", "1/2", "--n", "2"]).output().unwrap();
    assert!(ok.status.success());
    let bad = Command::new(bin).args(["invert", "--family", "q-charlier", "--q", "1/2", "--n", "2"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_ERROR as i32));
    assert!(bad.stdout.is_empty());
}
