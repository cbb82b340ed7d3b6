use std::process::{Command, Output};

use g2cy::classify::TableDiff;
use g2cy::invariants::InvariantRecord;
use g2cy_cli::{BundleReport, ClassifyReport, CohomologyReport, ParabolicReport, RootsReport, TableReport};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn g2cy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2cy")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(args: &[&str]) -> T {
    let out = g2cy(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let value: T = serde_json::from_str(&text).expect("valid JSON");
    let mut again = serde_json::to_string_pretty(&value).unwrap();
    again.push('\n');
    assert_eq!(again, text, "{args:?} does not round-trip");
    value
}

#[test]
fn classify_dim3_against_published_markdown() {
    let out = g2cy(&["classify", "--dim", "3", "--check-paper", "--format", "md"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("| ") && !l.starts_with("| No.")).collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0], "| 1 | P1 | (1,1) |");
    assert_eq!(rows[2], "| 3 | P2 | (1,1) |");
    assert!(text.contains("missing 0, extra 0"));
}

#[test]
fn published_table_exit_codes() {
    for (dim, code) in [(2, 0), (3, 0), (4, 2), (5, 0)] {
        let d = dim.to_string();
        assert_eq!(g2cy(&["classify", "--dim", &d, "--check-paper"]).status.code(), Some(code), "dim {dim}");
    }
    let out = g2cy(&["classify", "--dim", "4", "--check-paper", "--parabolic", "P2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn published_table_json_reports_the_extra_row() {
    let out = g2cy(&["classify", "--dim", "4", "--check-paper", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let diff: TableDiff = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((diff.matched.len(), diff.missing.len(), diff.extra.len()), (5, 0, 1));
    assert_eq!(diff.extra[0].to_string(), "B: (1,0) ⊕ (1,2)");
    assert_eq!(diff.extra_invariants.len(), 1);
}

#[test]
fn invariants_p1_threefold_json() {
    let r: InvariantRecord = round_trip(&["invariants", "P1", "(1,1)", "--format", "json"]);
    assert_eq!((r.deg, r.c2h, r.h11, r.h12), (Some(42), Some(84), Some(1), Some(50)));
    assert_eq!(r.euler, Some(-98));
    assert!(r.discrepancies.is_empty());
    let raw: serde_json::Value = serde_json::from_str(&stdout(&g2cy(&["invariants", "P1", "(1,1)", "--format", "json"]))).unwrap();
    assert_eq!(raw["deg"], 42);
    assert_eq!(raw["c2H"], 84);
    assert_eq!(raw["h11"], 1);
    assert_eq!(raw["h12"], 50);
}

#[test]
fn invariants_p2_threefold_flags_c2() {
    let r: InvariantRecord = round_trip(&["invariants", "P2", "(1,1)", "--format", "json"]);
    assert_eq!((r.deg, r.h11, r.h12), (Some(14), Some(1), Some(50)));
    assert_eq!(r.c2h, Some(56));
    assert_eq!(r.discrepancies, vec!["c2H: computed 56, published 50".to_string()]);
}

#[test]
fn roots() {
    let out = g2cy(&["roots"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("positive roots (6)"));
    assert!(text.contains("weyl order 12"));
    assert!(text.contains("rho (1,1)"));
    let r: RootsReport = round_trip(&["roots", "--format", "json"]);
    assert_eq!((r.positive_roots.len(), r.weyl_order), (6, 12));
    assert_eq!(r.rho.coords(), &[1, 1]);
}

#[test]
fn json_round_trips() {
    let p: ParabolicReport = round_trip(&["parabolic", "B", "--format", "json"]);
    assert_eq!((p.dim, p.anticanonical.coords()), (6, &[2, 2][..]));
    let b: BundleReport = round_trip(&["bundle", "P2", "(0,1)+(0,4)", "--format", "json"]);
    assert!(b.calabi_yau && b.globally_generated);
    let c: CohomologyReport = round_trip(&["cohomology", "P1", "(-3,0)", "--format", "json"]);
    assert_eq!(c.euler, -1);
    let t: TableReport = round_trip(&["table", "4", "--format", "json"]);
    assert_eq!(t.rows.len(), 7);
    let k: ClassifyReport = round_trip(&["classify", "--dim", "3", "--format", "json"]);
    assert_eq!((k.rows.len(), k.invariants.len()), (8, 8));
    let d: TableDiff = serde_json::from_str(&stdout(&g2cy(&["classify", "--dim", "2", "--check-paper", "--format", "json"]))).unwrap();
    assert_eq!(d.matched.len(), 7);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["classify", "--dim", "3", "--format", "json"][..],
        &["invariants", "P2", "(1,1)", "--format", "json"],
        &["classify", "--dim", "4", "--check-paper"],
        &["roots", "--format", "md"],
    ] {
        let a = g2cy(args);
        let b = g2cy(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
    let seq = g2cy(&["classify", "--dim", "2", "--format", "json", "--sequential"]);
    let par = g2cy(&["classify", "--dim", "2", "--format", "json"]);
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn seed_is_accepted_and_ignored() {
    let a = g2cy(&["classify", "--dim", "3", "--seed", "7"]);
    let b = g2cy(&["classify", "--dim", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_go_to_stderr() {
    for args in [
        &["classify", "--dim", "6"][..],
        &["frobnicate"],
        &["roots", "--unknown"],
        &["parabolic", "P3"],
        &["table", "5"],
    ] {
        let out = g2cy(args);
        assert_ne!(out.status.code(), Some(0), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["invariants", "P1", "(1,0)"][..],
        &["invariants", "P1", "(0,-1)+(3,1)"],
        &["bundle", "P1", "(1,1"],
        &["cohomology", "P2", "(1,-1,2)"],
    ] {
        let out = g2cy(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "), "{args:?}");
    }
}

#[test]
fn markdown_and_text_tables() {
    let md = stdout(&g2cy(&["table", "3", "--format", "md"]));
    assert!(md.starts_with("Table 3: "));
    assert_eq!(md.lines().filter(|l| l.starts_with("| ") && !l.starts_with("| No.")).count(), 8);
    let text = stdout(&g2cy(&["cohomology", "P1", "(1,0)"]));
    assert!(text.contains("H^0 = V_(1,0), dim 14"));
}
