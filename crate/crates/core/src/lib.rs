//! Root systems, restricted root data of compact symmetric spaces, and the
//! partial-positivity index `s`.
//!
//! ```
//! use spos_core::{make_space, s_value, FamilyTag, Params};
//!
//! let space = make_space(FamilyTag::AIII, Params::pq(3, 4)).unwrap();
//! assert_eq!(s_value(&space), 13);
//! ```

pub mod error;
pub mod reference;
pub mod rootsys;
pub mod svalue;
pub mod symspace;

pub use error::{Error, Result};
pub use rootsys::{
    cartan_matrix, epsilon_realization, highest_root, positive_roots, Family, LieType, RootSystem,
    RootVector,
};
pub use svalue::{
    closed_form_s, delta_k_positive, discrepancy_report, l1_maximal_indices, minimizer_check,
    restricted_multiplicities, s_value, s_vector, ClosedFormMode, DiscrepancyReport, ParamRange,
    SValueReport,
};
pub use symspace::{
    catalog, catalog_entry, make_space, CatalogEntry, FamilyTag, ParamKind, Params,
    RestrictedVector, RestrictionMap, SymmetricSpace,
};
