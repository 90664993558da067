//! Text, markdown, JSON and CSV renderings. All output is deterministic.

use std::fmt::Write as _;

use serde::Serialize;
use spos_core::svalue::TextNote;
use spos_core::{CatalogEntry, DiscrepancyReport, RootSystem, SValueReport};

use crate::table::TableRow;
use crate::verify::{Status, VerifyReport};

/// Left-aligned columns separated by two spaces.
fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let pad = w - cell.chars().count();
                let _ = write!(s, "{cell}{}  ", " ".repeat(pad));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

fn markdown(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n", header.join(" | "));
    out += &format!("|{}\n", "---|".repeat(header.len()));
    for row in rows {
        out += &format!("| {} |\n", row.join(" | "));
    }
    out
}

fn csv_from<T: Serialize>(rows: impl IntoIterator<Item = T>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("rows serialize to flat records");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 input")
}

fn csv_records(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory writer");
    for row in rows {
        w.write_record(row).expect("in-memory writer");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 input")
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

const TABLE_HEADER: [&str; 8] = [
    "family",
    "space",
    "params",
    "rank",
    "dimension",
    "s",
    "s_table",
    "matches_table",
];

fn table_cells(rows: &[TableRow]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| {
            vec![
                r.family.to_string(),
                r.label.clone(),
                r.params.clone(),
                r.rank.to_string(),
                r.dimension.to_string(),
                r.s.to_string(),
                r.s_table.to_string(),
                yes_no(r.matches_table),
            ]
        })
        .collect()
}

pub fn table_text(rows: &[TableRow]) -> String {
    columns(&TABLE_HEADER, &table_cells(rows))
}

pub fn table_markdown(rows: &[TableRow]) -> String {
    markdown(&TABLE_HEADER, &table_cells(rows))
}

pub fn table_csv(rows: &[TableRow]) -> String {
    csv_from(rows)
}

pub fn report_text(rep: &SValueReport, detail: bool) -> String {
    let sp = &rep.space;
    let mut out = format!("{}  {}", sp.family(), sp.label());
    if !sp.params().to_string().is_empty() {
        let _ = write!(out, "  ({})", sp.params());
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "ambient {}, rank {}, dimension {}",
        sp.ambient(),
        sp.r(),
        sp.dimension()
    );
    let _ = writeln!(out, "s = {}", rep.s);
    if detail {
        let _ = writeln!(out, "s_k: {}", join(&rep.s_k, " "));
        let _ = writeln!(out, "argmax k: {}", join(&rep.argmax, " "));
        let _ = writeln!(out, "|Δ_k⁺|: {}", join(&rep.delta_counts, " "));
        let _ = writeln!(out, "zero_count: {}", rep.zero_count);
        let _ = writeln!(
            out,
            "multiplicities ({} restricted roots):",
            rep.multiplicities.len()
        );
        for m in &rep.multiplicities {
            let _ = writeln!(out, "  {}  {}", m.lambda, m.count);
        }
    }
    out
}

fn report_fields(rep: &SValueReport, detail: bool) -> Vec<(&'static str, String)> {
    let sp = &rep.space;
    let mut fields = vec![
        ("family", sp.family().to_string()),
        ("space", sp.label().to_string()),
        ("params", sp.params().to_string()),
        ("ambient", sp.ambient().to_string()),
        ("rank", sp.r().to_string()),
        ("dimension", sp.dimension().to_string()),
        ("s", rep.s.to_string()),
    ];
    if detail {
        fields.push(("s_k", join(&rep.s_k, " ")));
        fields.push(("argmax", join(&rep.argmax, " ")));
        fields.push(("delta_counts", join(&rep.delta_counts, " ")));
        fields.push(("zero_count", rep.zero_count.to_string()));
    }
    fields
}

pub fn report_markdown(rep: &SValueReport, detail: bool) -> String {
    let rows: Vec<Vec<String>> = report_fields(rep, detail)
        .into_iter()
        .map(|(k, v)| vec![k.to_string(), v])
        .collect();
    let mut out = markdown(&["field", "value"], &rows);
    if detail {
        let mult: Vec<Vec<String>> = rep
            .multiplicities
            .iter()
            .map(|m| vec![m.lambda.to_string(), m.count.to_string()])
            .collect();
        out.push('\n');
        out += &markdown(&["λ", "multiplicity"], &mult);
    }
    out
}

pub fn report_csv(rep: &SValueReport, detail: bool) -> String {
    let fields = report_fields(rep, detail);
    let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
    let row: Vec<String> = fields.into_iter().map(|(_, v)| v).collect();
    csv_records(&header, &[row])
}

#[derive(Serialize)]
struct RootsJson<'a> {
    lie_type: String,
    roots: Vec<&'a [i32]>,
    count: usize,
}

fn root_cells(system: &RootSystem) -> Vec<Vec<String>> {
    system
        .positive_roots()
        .iter()
        .enumerate()
        .map(|(i, r)| vec![(i + 1).to_string(), r.height().to_string(), r.to_string()])
        .collect()
}

pub fn roots_text(system: &RootSystem) -> String {
    let mut out = String::new();
    for r in system.positive_roots() {
        let _ = writeln!(out, "{r}");
    }
    let _ = writeln!(out, "{} positive roots", system.len());
    out
}

pub fn roots_markdown(system: &RootSystem) -> String {
    let mut out = markdown(&["#", "height", "root"], &root_cells(system));
    let _ = writeln!(out, "\n{} positive roots", system.len());
    out
}

pub fn roots_csv(system: &RootSystem) -> String {
    let l = system.rank();
    let mut header = vec!["height".to_string()];
    header.extend((1..=l).map(|i| format!("a{i}")));
    let rows: Vec<Vec<String>> = system
        .positive_roots()
        .iter()
        .map(|r| {
            let mut row = vec![r.height().to_string()];
            row.extend(r.coeffs().iter().map(i32::to_string));
            row
        })
        .collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    csv_records(&header, &rows)
}

pub fn roots_json(system: &RootSystem) -> String {
    json(&RootsJson {
        lie_type: system.lie_type().to_string(),
        roots: system.positive_roots().iter().map(|r| r.coeffs()).collect(),
        count: system.len(),
    })
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
    }
}

fn verify_cells(rep: &VerifyReport) -> Vec<Vec<String>> {
    rep.checks
        .iter()
        .map(|c| {
            vec![
                c.name.to_string(),
                status_word(c.status).to_string(),
                c.detail.clone(),
            ]
        })
        .collect()
}

pub fn verify_text(rep: &VerifyReport) -> String {
    let mut out = columns(&["check", "status", "detail"], &verify_cells(rep));
    let failed = rep.failed().count();
    if failed == 0 {
        let _ = writeln!(out, "all {} checks passed", rep.checks.len());
    } else {
        let _ = writeln!(out, "{failed} of {} checks failed", rep.checks.len());
    }
    out
}

pub fn verify_markdown(rep: &VerifyReport) -> String {
    markdown(&["check", "status", "detail"], &verify_cells(rep))
}

pub fn verify_csv(rep: &VerifyReport) -> String {
    csv_from(&rep.checks)
}

const DISCREPANCY_HEADER: [&str; 4] = ["params", "enumerated", "table", "corrected"];

fn discrepancy_cells(rep: &DiscrepancyReport) -> Vec<Vec<String>> {
    rep.entries
        .iter()
        .map(|d| {
            vec![
                d.params.to_string(),
                d.enumerated.to_string(),
                d.table.to_string(),
                d.corrected.to_string(),
            ]
        })
        .collect()
}

fn notes_text(notes: &[TextNote]) -> String {
    let mut out = String::new();
    for n in notes {
        let _ = writeln!(
            out,
            "text inconsistency at {} {}: {}",
            n.family, n.params, n.note
        );
    }
    out
}

pub fn discrepancies_text(rep: &DiscrepancyReport) -> String {
    let mut out = format!(
        "{}: {} instances scanned, {} differ from the table formula\n",
        rep.family,
        rep.scanned,
        rep.entries.len()
    );
    if !rep.entries.is_empty() {
        out += &columns(&DISCREPANCY_HEADER, &discrepancy_cells(rep));
    }
    out + &notes_text(&rep.notes)
}

pub fn discrepancies_markdown(rep: &DiscrepancyReport) -> String {
    let mut out = format!("{}: {} instances scanned\n\n", rep.family, rep.scanned);
    out += &markdown(&DISCREPANCY_HEADER, &discrepancy_cells(rep));
    if !rep.notes.is_empty() {
        out.push('\n');
        for n in &rep.notes {
            let _ = writeln!(out, "- {} {}: {}", n.family, n.params, n.note);
        }
    }
    out
}

pub fn discrepancies_csv(rep: &DiscrepancyReport) -> String {
    csv_records(&DISCREPANCY_HEADER, &discrepancy_cells(rep))
}

const CATALOG_HEADER: [&str; 7] = [
    "family",
    "label",
    "constraints",
    "rank",
    "dimension",
    "s",
    "proj_rule",
];

fn catalog_cells(cat: &[CatalogEntry]) -> Vec<Vec<String>> {
    cat.iter()
        .map(|e| {
            vec![
                e.family.to_string(),
                e.label.to_string(),
                e.constraints.to_string(),
                e.rank.to_string(),
                e.dimension.to_string(),
                e.s.to_string(),
                e.proj_rule.to_string(),
            ]
        })
        .collect()
}

pub fn catalog_text(cat: &[CatalogEntry]) -> String {
    columns(&CATALOG_HEADER, &catalog_cells(cat))
}

pub fn catalog_markdown(cat: &[CatalogEntry]) -> String {
    markdown(&CATALOG_HEADER, &catalog_cells(cat))
}

pub fn catalog_csv(cat: &[CatalogEntry]) -> String {
    csv_from(cat)
}
