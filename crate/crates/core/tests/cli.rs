use std::process::{Command, Output};

use nullcone::cli::{parse_rational, Report, VerifySummary, WeightTable, EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn nullcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nullcone")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_json_schema() {
    let o = nullcone(&["analyze", "--type", "A", "--rank", "3", "--weight", "0,2,0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let r: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.schema, "nullcone/1");
    assert_eq!((r.dim_module, r.dim_nullcone, r.num_components), (20, 15, 2));
    assert_eq!(r.scope, "catalog");
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.get("timing_ms").is_none());
    for s in v["strata"].as_array().unwrap() {
        for q in s["lambda"].as_array().unwrap() {
            let q = q.as_str().expect("rationals are strings");
            assert!(q.contains('/'));
            parse_rational(q).unwrap();
        }
        parse_rational(s["norm2"].as_str().unwrap()).unwrap();
    }
}

#[test]
fn analyze_formats_agree() {
    let base = ["analyze", "--type", "G", "--rank", "2", "--weight", "1,0"];
    let table = stdout(&nullcone(&base));
    assert!(table.contains("6"), "{table}");
    let tsv = stdout(&nullcone(&[&base[..], &["--format", "tsv"]].concat()));
    let lines: Vec<&str> = tsv.lines().collect();
    assert!(lines.len() >= 2);
    let cols = lines[0].split('\t').count();
    assert!(lines.iter().all(|l| l.split('\t').count() == cols), "{tsv}");
}

#[test]
fn non_catalog_module_is_scoped() {
    let o = nullcone(&["analyze", "--type", "A", "--rank", "2", "--weight", "2,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let r: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.scope, "maximal-dimension components only");
    assert!(r.catalog.is_none());
}

#[test]
fn output_independent_of_threads() {
    let args = ["analyze", "--type", "B", "--rank", "3", "--weight", "2,0,0", "--format", "json", "--threads"];
    let one = nullcone(&[&args[..], &["1"]].concat()).stdout;
    for t in ["2", "8"] {
        assert_eq!(nullcone(&[&args[..], &[t]].concat()).stdout, one);
    }
}

#[test]
fn timing_is_opt_in() {
    let o = nullcone(&["analyze", "--type", "A", "--rank", "1", "--weight", "2", "--format", "json", "--timing"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn weights_command() {
    let o = nullcone(&["weights", "--type", "A", "--rank", "2", "--weight", "1,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let w: WeightTable = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(w.dim_module, 8);
    assert_eq!(w.weights.iter().map(|r| r.multiplicity).sum::<u64>(), 8);
    assert_eq!(w.weights.len(), 7);
}

#[test]
fn verify_small_cap() {
    let o = nullcone(&["verify", "--dim-cap", "16", "--max-rank", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let v: VerifySummary = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.failed, 0);
    assert!(v.passed > 20);
    assert_eq!(v.passed + v.skipped, v.rows.len());
}

#[test]
fn list_catalog() {
    let o = nullcone(&["list-catalog", "--max-rank", "3", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.contains("G2")));
    assert!(!text.lines().any(|l| l.contains("D4")));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["analyze", "--type", "A", "--rank", "2"][..],
        &["analyze", "--type", "X", "--rank", "2", "--weight", "1,0"],
        &["analyze", "--type", "A", "--rank", "2", "--weight", "1,0,0"],
        &["analyze", "--type", "A", "--rank", "2", "--weight", "-1,0"],
        &["analyze", "--type", "A", "--rank", "2", "--weight", "0,0"],
        &["analyze", "--type", "G", "--rank", "3", "--weight", "1,0,0"],
        &["frobnicate"],
        &["analyze", "--type", "A", "--rank", "2", "--weight", "1,0", "--format", "xml"],
    ] {
        let o = nullcone(args);
        assert_eq!(o.status.code(), Some(EXIT_USAGE), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn budgets_exit_3() {
    let o = nullcone(&["analyze", "--type", "A", "--rank", "3", "--weight", "0,2,0", "--max-subsets", "2"]);
    assert_eq!(o.status.code(), Some(EXIT_BUDGET));
    let o = nullcone(&["analyze", "--type", "E", "--rank", "8", "--weight", "0,0,0,0,0,0,0,1", "--dim-cap", "100"]);
    assert_eq!(o.status.code(), Some(EXIT_BUDGET));
    let o = nullcone(&["verify", "--dim-cap", "40", "--max-rank", "3", "--max-subsets", "3"]);
    assert_eq!(o.status.code(), Some(EXIT_BUDGET));
}

#[test]
fn mismatch_code() {
    let mut v: VerifySummary = serde_json::from_slice(
        &nullcone(&["verify", "--dim-cap", "8", "--max-rank", "2", "--format", "json"]).stdout,
    )
    .unwrap();
    assert_eq!(v.exit_code(), EXIT_OK);
    v.failed = 1;
    assert_eq!(v.exit_code(), EXIT_MISMATCH);
}
