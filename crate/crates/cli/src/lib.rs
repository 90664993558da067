//! Library side of the `spos` binary: argument types, command dispatch and
//! rendering, kept here so integration tests can drive them directly.

pub mod args;
pub mod render;
pub mod table;
pub mod verify;

use args::{Cli, Command, ComputeArgs, DiscrepancyArgs, Format};
use spos_core::{
    catalog, discrepancy_report, make_space, positive_roots, FamilyTag, ParamKind, ParamRange,
    Params, SValueReport,
};

/// Standard output plus exit status of a successful dispatch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// Usage and parameter errors; the binary maps these to exit status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] spos_core::Error),
}

pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Table(a) => {
            let rows = table::build_rows(&a)?;
            let code = if rows.iter().all(|r| r.matches_corrected) {
                0
            } else {
                EXIT_VERIFY_FAILED
            };
            let stdout = match a.format {
                Format::Text => render::table_text(&rows),
                Format::Markdown => render::table_markdown(&rows),
                Format::Json => render::json(&rows),
                Format::Csv => render::table_csv(&rows),
            };
            Ok(Outcome { stdout, code })
        }
        Command::Compute(a) => {
            let space = make_space(a.family, compute_params(&a)?)?;
            let rep = SValueReport::compute(&space);
            Ok(Outcome::ok(match a.format {
                Format::Text => render::report_text(&rep, a.detail),
                Format::Markdown => render::report_markdown(&rep, a.detail),
                Format::Json => render::json(&rep),
                Format::Csv => render::report_csv(&rep, a.detail),
            }))
        }
        Command::Roots(a) => {
            let system = positive_roots(a.lie_type);
            Ok(Outcome::ok(match a.format {
                Format::Text => render::roots_text(&system),
                Format::Markdown => render::roots_markdown(&system),
                Format::Json => render::roots_json(&system),
                Format::Csv => render::roots_csv(&system),
            }))
        }
        Command::Verify(a) => {
            let rep = verify::run(a.max_rank);
            let code = if rep.passed { 0 } else { EXIT_VERIFY_FAILED };
            let stdout = match a.format {
                Format::Text => render::verify_text(&rep),
                Format::Markdown => render::verify_markdown(&rep),
                Format::Json => render::json(&rep),
                Format::Csv => render::verify_csv(&rep),
            };
            Ok(Outcome { stdout, code })
        }
        Command::Discrepancies(a) => {
            let rep = discrepancy_report(a.family, &discrepancy_range(&a)?)?;
            Ok(Outcome::ok(match a.format {
                Format::Text => render::discrepancies_text(&rep),
                Format::Markdown => render::discrepancies_markdown(&rep),
                Format::Json => render::json(&rep),
                Format::Csv => render::discrepancies_csv(&rep),
            }))
        }
        Command::Export(a) => {
            let cat = catalog();
            Ok(Outcome::ok(match a.format {
                Format::Text => render::catalog_text(cat),
                Format::Markdown => render::catalog_markdown(cat),
                Format::Json => render::json(cat),
                Format::Csv => render::catalog_csv(cat),
            }))
        }
    }
}

fn compute_params(a: &ComputeArgs) -> Result<Params, CliError> {
    let family = a.family;
    match (family.param_kind(), a.n, a.p, a.q) {
        (ParamKind::Fixed, None, None, None) => Ok(Params::none()),
        (ParamKind::Fixed, ..) => Err(CliError::Usage(format!("{family} takes no parameters"))),
        (ParamKind::N, Some(n), None, None) => Ok(Params::n(n)),
        (ParamKind::N, ..) => Err(CliError::Usage(format!("{family} takes exactly --n"))),
        (ParamKind::PQ, None, Some(p), Some(q)) => Ok(Params::pq(p, q)),
        (ParamKind::PQ, ..) => Err(CliError::Usage(format!(
            "{family} takes exactly --p and --q"
        ))),
    }
}

fn discrepancy_range(a: &DiscrepancyArgs) -> Result<ParamRange, CliError> {
    let family: FamilyTag = a.family;
    match (family.param_kind(), a.range) {
        (ParamKind::Fixed, None) => Ok(ParamRange::Fixed),
        (ParamKind::Fixed, Some(_)) => Err(CliError::Usage(format!(
            "{family} takes no parameter range"
        ))),
        (_, None) => Err(CliError::Usage(format!("{family} requires --range A..B"))),
        (ParamKind::N, Some((lo, hi))) => Ok(ParamRange::N(lo..=hi)),
        (ParamKind::PQ, Some((lo, hi))) => Ok(ParamRange::PQ(lo..=hi, lo..=hi)),
    }
}
