use clap::{Args, Parser, Subcommand, ValueEnum};
use spos_core::{FamilyTag, LieType};

#[derive(Debug, Parser)]
#[command(
    name = "spos",
    version,
    about = "Partial-positivity index s of compact symmetric spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One row per family: rank, dimension, s (enumerated and closed form).
    Table(TableArgs),
    /// Compute s for a single space.
    Compute(ComputeArgs),
    /// List the positive roots of a Lie type in canonical order.
    Roots(RootsArgs),
    /// Run the invariant suite; exit 1 if any check fails.
    Verify(VerifyArgs),
    /// Instances where enumeration disagrees with the table formula.
    Discrepancies(DiscrepancyArgs),
    /// Dump the family catalog.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Markdown,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// AI parameter n.
    #[arg(long, value_name = "N", default_value_t = 5)]
    pub ai: u32,
    /// AII parameter n.
    #[arg(long, value_name = "N", default_value_t = 4)]
    pub aii: u32,
    /// AIII parameters p,q.
    #[arg(long, value_name = "P,Q", value_parser = parse_pair, default_value = "3,4")]
    pub aiii: (u32, u32),
    /// BDI parameters p,q.
    #[arg(long, value_name = "P,Q", value_parser = parse_pair, default_value = "3,4")]
    pub bdi: (u32, u32),
    /// DIII parameter n.
    #[arg(long, value_name = "N", default_value_t = 7)]
    pub diii: u32,
    /// CI parameter n.
    #[arg(long, value_name = "N", default_value_t = 4)]
    pub ci: u32,
    /// CII parameters p,q.
    #[arg(long, value_name = "P,Q", value_parser = parse_pair, default_value = "2,3")]
    pub cii: (u32, u32),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(value_parser = parse_family)]
    pub family: FamilyTag,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
    /// Also print s_k, |Δ_k⁺|, the zero fibre and multiplicities.
    #[arg(long)]
    pub detail: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    /// Lie type such as A3, E6, G2.
    #[arg(value_parser = parse_lie_type)]
    pub lie_type: LieType,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Also sweep every classical instance with ambient rank up to this bound.
    #[arg(long, value_name = "R", default_value_t = 10)]
    pub max_rank: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DiscrepancyArgs {
    #[arg(value_parser = parse_family)]
    pub family: FamilyTag,
    /// Inclusive parameter range `a..b`; for p,q families it applies to both.
    #[arg(long, value_name = "A..B", value_parser = parse_range)]
    pub range: Option<(u32, u32)>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

pub fn parse_family(s: &str) -> Result<FamilyTag, String> {
    s.parse().map_err(|e: spos_core::Error| e.to_string())
}

pub fn parse_lie_type(s: &str) -> Result<LieType, String> {
    s.parse().map_err(|e: spos_core::Error| e.to_string())
}

pub fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected P,Q, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

/// `a..b` or `a..=b`, both inclusive.
pub fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    let (a, b) = (num(a)?, num(b)?);
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}
