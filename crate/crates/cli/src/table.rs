use serde::Serialize;
use spos_core::{
    closed_form_s, make_space, s_value, ClosedFormMode, FamilyTag, ParamKind, Params, Result,
};

use crate::args::TableArgs;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub family: FamilyTag,
    pub label: String,
    pub params: String,
    pub rank: usize,
    pub dimension: usize,
    pub s: usize,
    pub s_table: usize,
    pub s_corrected: usize,
    pub matches_table: bool,
    pub matches_corrected: bool,
}

impl TableRow {
    pub fn new(family: FamilyTag, params: Params) -> Result<Self> {
        let space = make_space(family, params)?;
        let s = s_value(&space);
        let s_table = closed_form_s(&space, ClosedFormMode::Table);
        let s_corrected = closed_form_s(&space, ClosedFormMode::Corrected);
        Ok(TableRow {
            family,
            label: space.label().to_string(),
            params: space.params().to_string(),
            rank: space.r(),
            dimension: space.dimension(),
            s,
            s_table,
            s_corrected,
            matches_table: s == s_table,
            matches_corrected: s == s_corrected,
        })
    }
}

pub fn table_params(args: &TableArgs, family: FamilyTag) -> Params {
    use FamilyTag::*;
    match family {
        AI => Params::n(args.ai),
        AII => Params::n(args.aii),
        AIII => Params::pq(args.aiii.0, args.aiii.1),
        BDI => Params::pq(args.bdi.0, args.bdi.1),
        DIII => Params::n(args.diii),
        CI => Params::n(args.ci),
        CII => Params::pq(args.cii.0, args.cii.1),
        f => {
            debug_assert_eq!(f.param_kind(), ParamKind::Fixed);
            Params::none()
        }
    }
}

pub fn build_rows(args: &TableArgs) -> Result<Vec<TableRow>> {
    FamilyTag::ALL
        .iter()
        .map(|&f| TableRow::new(f, table_params(args, f)))
        .collect()
}
