use std::process::{Command, Output};

use spos_core::SValueReport;

fn spos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spos"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table_default_rows() {
    let out = spos(&["table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let eix = text.lines().find(|l| l.starts_with("EIX ")).unwrap();
    let cells: Vec<&str> = eix.split_whitespace().collect();
    assert!(cells.windows(3).any(|w| w == ["4", "112", "55"]), "{eix}");
    let fi = text.lines().find(|l| l.starts_with("FI ")).unwrap();
    assert!(fi
        .split_whitespace()
        .collect::<Vec<_>>()
        .windows(3)
        .any(|w| w == ["4", "28", "13"]));
}

#[test]
fn table_rank_one_override() {
    let out = spos(&["table", "--ai", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let ai = text.lines().nth(1).unwrap();
    assert!(ai.starts_with("AI,SU(2)/SO(2),n=2,1,2,1,"), "{ai}");
}

#[test]
fn table_exception_override_still_exits_zero() {
    let out = spos(&["table", "--diii", "6", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let row = stdout(&out)
        .lines()
        .find(|l| l.starts_with("DIII"))
        .unwrap()
        .to_string();
    assert!(row.ends_with(",15,13,15,false,true"), "{row}");
}

#[test]
fn table_csv_header_matches_json_keys() {
    let csv_out = stdout(&spos(&["table", "--format", "csv"]));
    let header: Vec<&str> = csv_out.lines().next().unwrap().split(',').collect();
    let json: serde_json::Value =
        serde_json::from_slice(&spos(&["table", "--format", "json"]).stdout).unwrap();
    let keys: Vec<&str> = json[0]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    let mut sorted_header = header.clone();
    sorted_header.sort_unstable();
    let mut sorted_keys = keys.clone();
    sorted_keys.sort_unstable();
    assert_eq!(sorted_header, sorted_keys);
}

#[test]
fn markdown_table() {
    let text = stdout(&spos(&["table", "--format", "markdown"]));
    assert!(text.starts_with("| family |"));
    assert_eq!(text.lines().count(), 21);
}

#[test]
fn compute_detail_eii() {
    let out = spos(&["compute", "EII", "--detail"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "s_k: 16 19 9 11"), "{text}");
    assert!(text.lines().any(|l| l == "s = 19"));
}

#[test]
fn compute_aiii_2_2() {
    let text = stdout(&spos(&["compute", "AIII", "--p", "2", "--q", "2"]));
    assert!(text.lines().any(|l| l == "s = 4"), "{text}");
}

#[test]
fn compute_parameter_error() {
    let out = spos(&["compute", "DIII", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("n ≥ 3"));
}

#[test]
fn compute_missing_or_extra_flags() {
    assert_eq!(
        spos(&["compute", "AIII", "--p", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(spos(&["compute", "EI", "--n", "3"]).status.code(), Some(2));
    assert_eq!(
        spos(&["compute", "AI", "--p", "2", "--q", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(spos(&["compute", "XYZ"]).status.code(), Some(2));
}

#[test]
fn compute_json_round_trip() {
    for args in [
        &["compute", "EVI", "--format", "json"][..],
        &["compute", "BDI", "--p", "3", "--q", "5", "--format", "json"],
        &["compute", "CI", "--n", "4", "--format", "json", "--detail"],
    ] {
        let out = spos(args);
        let rep: SValueReport = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(rep, SValueReport::compute(&rep.space));
        let again = serde_json::to_string_pretty(&rep).unwrap() + "\n";
        assert_eq!(again, stdout(&out));
    }
}

#[test]
fn roots_listings() {
    let f4 = stdout(&spos(&["roots", "F4"]));
    assert_eq!(f4.lines().filter(|l| l.starts_with('(')).count(), 24);
    assert_eq!(f4.lines().last(), Some("24 positive roots"));

    let g2 = stdout(&spos(&["roots", "G2"]));
    let vectors: Vec<&str> = g2.lines().filter(|l| l.starts_with('(')).collect();
    assert_eq!(vectors.len(), 6);
    assert_eq!(vectors.last(), Some(&"(3,2)"));

    assert_eq!(stdout(&spos(&["roots", "A1"])), "(1)\n1 positive roots\n");
    assert_eq!(spos(&["roots", "B1"]).status.code(), Some(2));
}

#[test]
fn roots_json_and_csv() {
    let v: serde_json::Value =
        serde_json::from_slice(&spos(&["roots", "E6", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["count"], 36);
    assert_eq!(v["roots"][35], serde_json::json!([1, 2, 2, 3, 2, 1]));
    let csv = stdout(&spos(&["roots", "B3", "--format", "csv"]));
    assert_eq!(csv.lines().next(), Some("height,a1,a2,a3"));
    assert_eq!(csv.lines().count(), 10);
}

#[test]
fn verify_passes_with_json_summary() {
    let out = spos(&["verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    assert!(checks.iter().any(|c| c["name"] == "exceptional_s_k"));
}

#[test]
fn verify_extended_rank() {
    assert_eq!(spos(&["verify", "--max-rank", "12"]).status.code(), Some(0));
}

#[test]
fn discrepancies_diii() {
    let out = spos(&[
        "discrepancies",
        "DIII",
        "--range",
        "3..10",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "params,enumerated,table,corrected\nn=4,6,3,6\nn=6,15,13,15\n"
    );
}

#[test]
fn discrepancies_ai_empty() {
    let out = spos(&[
        "discrepancies",
        "AI",
        "--range",
        "2..12",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["entries"], serde_json::json!([]));
    assert_eq!(v["scanned"], 11);
}

#[test]
fn discrepancies_surface_text_note() {
    let text = stdout(&spos(&["discrepancies", "AIII", "--range", "1..4"]));
    assert!(
        text.contains("text inconsistency at AIII p=2 q=3"),
        "{text}"
    );
}

#[test]
fn discrepancies_usage_errors() {
    assert_eq!(
        spos(&["discrepancies", "BDI", "--range", "1..3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(spos(&["discrepancies", "DIII"]).status.code(), Some(2));
    assert_eq!(
        spos(&["discrepancies", "EI", "--range", "1..2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        spos(&["discrepancies", "DIII", "--range", "9..3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(spos(&["discrepancies", "EI"]).status.code(), Some(0));
}

#[test]
fn export_catalog() {
    let v: serde_json::Value = serde_json::from_slice(&spos(&["export"]).stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 19);
    assert_eq!(rows[0]["family"], "AI");
    let csv = stdout(&spos(&["export", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 20);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table"][..],
        &["table", "--format", "csv"],
        &["table", "--format", "markdown"],
        &["compute", "EVIII", "--detail"],
        &["verify"],
    ] {
        assert_eq!(spos(args).stdout, spos(args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(spos(&[]).status.code(), Some(2));
    assert_eq!(spos(&["table", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(spos(&["frobnicate"]).status.code(), Some(2));
}
