//! Partial-positivity index `s` of a compact symmetric space.
//!
//! For each restricted index `k`, `Δ_k⁺` collects the positive roots whose
//! restriction is nonzero but has vanishing `k`-th coefficient. Then
//! `s_k = r + |Δ_k⁺|` and `s = max_k s_k`, with `s = 1` for rank one.
//! Everything here is exact integer counting over at most 120 roots.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{positive_roots, LieType, RootSystem, RootVector};
use crate::symspace::{make_space, FamilyTag, ParamKind, Params, RestrictedVector, SymmetricSpace};

/// Positive roots paired with their restrictions.
fn restricted_roots(
    space: &SymmetricSpace,
    system: &RootSystem,
) -> Vec<(RootVector, RestrictedVector)> {
    system
        .positive_roots()
        .iter()
        .map(|a| {
            let res = space.restrict(a).expect("ambient rank matches map length");
            (a.clone(), res)
        })
        .collect()
}

fn check_k(space: &SymmetricSpace, k: usize) -> Result<()> {
    if k == 0 || k > space.r() {
        return Err(Error::IndexOutOfRange { k, r: space.r() });
    }
    Ok(())
}

/// `Δ_k⁺ = {α ∈ Δ⁺ : α′ ≠ 0, m′_k(α) = 0}`, in canonical root order.
pub fn delta_k_positive(space: &SymmetricSpace, k: usize) -> Result<Vec<RootVector>> {
    check_k(space, k)?;
    let system = positive_roots(space.ambient());
    Ok(delta_k_from(&restricted_roots(space, &system), k))
}

fn delta_k_from(pairs: &[(RootVector, RestrictedVector)], k: usize) -> Vec<RootVector> {
    pairs
        .iter()
        .filter(|(_, res)| !res.is_zero() && res.get(k) == 0)
        .map(|(a, _)| a.clone())
        .collect()
}

/// `s_k = r + |Δ_k⁺|` for `k = 1..=r`.
pub fn s_vector(space: &SymmetricSpace) -> Vec<usize> {
    let system = positive_roots(space.ambient());
    let pairs = restricted_roots(space, &system);
    (1..=space.r())
        .map(|k| space.r() + delta_k_from(&pairs, k).len())
        .collect()
}

pub fn s_value(space: &SymmetricSpace) -> usize {
    if space.r() == 1 {
        return 1;
    }
    s_vector(space).into_iter().max().expect("r ≥ 2")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multiplicity {
    pub lambda: RestrictedVector,
    pub count: usize,
}

/// Fibre counts of the restriction over `Δ⁺`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplicities {
    pub zero_count: usize,
    pub by_lambda: BTreeMap<RestrictedVector, usize>,
}

impl Multiplicities {
    pub fn nonzero_total(&self) -> usize {
        self.by_lambda.values().sum()
    }
}

fn multiplicities_from(pairs: &[(RootVector, RestrictedVector)]) -> Multiplicities {
    let mut zero_count = 0;
    let mut by_lambda = BTreeMap::new();
    for (_, res) in pairs {
        if res.is_zero() {
            zero_count += 1;
        } else {
            *by_lambda.entry(res.clone()).or_insert(0) += 1;
        }
    }
    Multiplicities {
        zero_count,
        by_lambda,
    }
}

pub fn restricted_multiplicities(space: &SymmetricSpace) -> Multiplicities {
    let system = positive_roots(space.ambient());
    multiplicities_from(&restricted_roots(space, &system))
}

/// Everything computed for one space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ReportWire", try_from = "ReportWire")]
pub struct SValueReport {
    pub space: SymmetricSpace,
    pub s_k: Vec<usize>,
    pub argmax: Vec<usize>,
    pub s: usize,
    pub delta_counts: Vec<usize>,
    pub zero_count: usize,
    pub multiplicities: Vec<Multiplicity>,
}

impl SValueReport {
    pub fn compute(space: &SymmetricSpace) -> Self {
        let system = positive_roots(space.ambient());
        let pairs = restricted_roots(space, &system);
        let r = space.r();
        let delta_counts: Vec<usize> = (1..=r).map(|k| delta_k_from(&pairs, k).len()).collect();
        let s_k: Vec<usize> = delta_counts.iter().map(|d| r + d).collect();
        let s = if r == 1 {
            1
        } else {
            *s_k.iter().max().expect("r ≥ 1")
        };
        let top = *s_k.iter().max().expect("r ≥ 1");
        let argmax = (1..=r).filter(|&k| s_k[k - 1] == top).collect();
        let mult = multiplicities_from(&pairs);
        SValueReport {
            space: space.clone(),
            s_k,
            argmax,
            s,
            delta_counts,
            zero_count: mult.zero_count,
            multiplicities: mult
                .by_lambda
                .into_iter()
                .map(|(lambda, count)| Multiplicity { lambda, count })
                .collect(),
        }
    }

    pub fn nonzero_count(&self) -> usize {
        self.multiplicities.iter().map(|m| m.count).sum()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ReportWire {
    family: FamilyTag,
    params: Params,
    l: usize,
    r: usize,
    dimension: usize,
    s_k: Vec<usize>,
    s: usize,
    argmax: Vec<usize>,
    zero_count: usize,
    multiplicities: Vec<Multiplicity>,
}

impl From<SValueReport> for ReportWire {
    fn from(rep: SValueReport) -> Self {
        ReportWire {
            family: rep.space.family(),
            params: rep.space.params(),
            l: rep.space.l(),
            r: rep.space.r(),
            dimension: rep.space.dimension(),
            s_k: rep.s_k,
            s: rep.s,
            argmax: rep.argmax,
            zero_count: rep.zero_count,
            multiplicities: rep.multiplicities,
        }
    }
}

impl TryFrom<ReportWire> for SValueReport {
    type Error = String;

    fn try_from(w: ReportWire) -> std::result::Result<Self, String> {
        let space = make_space(w.family, w.params).map_err(|e| e.to_string())?;
        if (space.l(), space.r(), space.dimension()) != (w.l, w.r, w.dimension) {
            return Err(format!(
                "{}: (l, r, dimension) = ({}, {}, {}) disagrees with catalog ({}, {}, {})",
                w.family,
                w.l,
                w.r,
                w.dimension,
                space.l(),
                space.r(),
                space.dimension()
            ));
        }
        if w.s_k.len() != w.r {
            return Err(format!("s_k has {} entries, expected {}", w.s_k.len(), w.r));
        }
        let delta_counts = w
            .s_k
            .iter()
            .map(|&s| {
                s.checked_sub(w.r)
                    .ok_or_else(|| format!("s_k entry {s} below r"))
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(SValueReport {
            space,
            s_k: w.s_k,
            argmax: w.argmax,
            s: w.s,
            delta_counts,
            zero_count: w.zero_count,
            multiplicities: w.multiplicities,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosedFormMode {
    /// The table formula, verbatim.
    Table,
    /// The table formula with the low-rank exceptions applied.
    Corrected,
}

/// A low-rank instance where the closed form disagrees with direct
/// enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub family: FamilyTag,
    pub params: Params,
    pub s: usize,
}

/// Exceptions to the table formulas (rank-one spaces are handled
/// separately: `s = 1`).
pub const EXCEPTION_LEDGER: [LedgerEntry; 6] = [
    LedgerEntry {
        family: FamilyTag::AIII,
        params: Params::PQ { p: 2, q: 2 },
        s: 4,
    },
    LedgerEntry {
        family: FamilyTag::BDI,
        params: Params::PQ { p: 2, q: 2 },
        s: 3,
    },
    LedgerEntry {
        family: FamilyTag::BDI,
        params: Params::PQ { p: 3, q: 3 },
        s: 6,
    },
    LedgerEntry {
        family: FamilyTag::DIII,
        params: Params::N { n: 4 },
        s: 6,
    },
    LedgerEntry {
        family: FamilyTag::DIII,
        params: Params::N { n: 6 },
        s: 15,
    },
    LedgerEntry {
        family: FamilyTag::CII,
        params: Params::PQ { p: 2, q: 2 },
        s: 6,
    },
];

/// Low-rank cases where the hand case analysis states an ordering of
/// the `s_k` that direct counting does not reproduce. None of them change
/// `s` relative to the corrected closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TextNote {
    pub family: FamilyTag,
    pub params: Params,
    pub note: &'static str,
}

pub const TEXT_NOTES: [TextNote; 3] = [
    TextNote {
        family: FamilyTag::AIII,
        params: Params::PQ { p: 2, q: 3 },
        note:
            "l = 4 case analysis concludes s_1 > s_2 yet s = s_2; direct count gives s_k = (5, 4), \
               so s = s_1 = 5 = 1+2(p-1)(q-1) and no exception applies",
    },
    TextNote {
        family: FamilyTag::BDI,
        params: Params::PQ { p: 2, q: 2 },
        note: "case analysis states s_1 < s_2; direct count gives s_k = (3, 3), s = 3",
    },
    TextNote {
        family: FamilyTag::BDI,
        params: Params::PQ { p: 3, q: 3 },
        note: "case analysis states s_3 > s_1 > s_2; direct count gives s_k = (5, 6, 6), s = 6",
    },
];

/// The table `s` formula for the family, evaluated at the space's
/// parameters (fixed families return their tabulated value).
pub fn table_formula(space: &SymmetricSpace) -> usize {
    use FamilyTag::*;
    let (n, p, q) = match space.params() {
        Params::N { n } => (n as i64, 0, 0),
        Params::PQ { p, q } => (0, p as i64, q as i64),
        Params::None {} => (0, 0, 0),
    };
    let v = match space.family() {
        AI => n * (n - 1) / 2,
        AII => (n - 1) * (2 * n - 3),
        AIII => 1 + 2 * (p - 1) * (q - 1),
        BDI => 1 + (p - 1) * (q - 1),
        DIII => 1 + (n - 2) * (n - 3),
        CI => 1 + n * (n - 1),
        CII => 1 + 4 * (p - 1) * (q - 1),
        EI => 26,
        EII => 19,
        EIII => 11,
        EIV => 10,
        EV => 43,
        EVI => 31,
        EVII => 27,
        EVIII => 71,
        EIX => 55,
        FI => 13,
        FII => 1,
        G => 3,
    };
    usize::try_from(v).expect("table formulas are nonnegative on valid parameters")
}

pub fn ledger_lookup(space: &SymmetricSpace) -> Option<&'static LedgerEntry> {
    EXCEPTION_LEDGER
        .iter()
        .find(|e| e.family == space.family() && e.params == space.params())
}

pub fn closed_form_s(space: &SymmetricSpace, mode: ClosedFormMode) -> usize {
    match mode {
        ClosedFormMode::Table => table_formula(space),
        ClosedFormMode::Corrected => {
            if space.r() == 1 {
                1
            } else if let Some(e) = ledger_lookup(space) {
                e.s
            } else {
                table_formula(space)
            }
        }
    }
}

/// Parameter sweep for [`discrepancy_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamRange {
    Fixed,
    N(RangeInclusive<u32>),
    /// All unordered pairs `p ≤ q` with `p ∈ ps`, `q ∈ qs`.
    PQ(RangeInclusive<u32>, RangeInclusive<u32>),
}

impl ParamRange {
    pub fn params(&self) -> Vec<Params> {
        match self {
            ParamRange::Fixed => vec![Params::none()],
            ParamRange::N(ns) => ns.clone().map(Params::n).collect(),
            ParamRange::PQ(ps, qs) => {
                let set: BTreeSet<Params> = ps
                    .clone()
                    .flat_map(|p| qs.clone().map(move |q| Params::pq(p, q)))
                    .collect();
                set.into_iter().collect()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub params: Params,
    pub enumerated: usize,
    pub table: usize,
    pub corrected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub family: FamilyTag,
    pub scanned: usize,
    pub entries: Vec<Discrepancy>,
    pub notes: Vec<TextNote>,
}

/// Instances in the range where enumeration disagrees with the table
/// formula, plus any case-analysis notes that fall inside the range.
pub fn discrepancy_report(family: FamilyTag, range: &ParamRange) -> Result<DiscrepancyReport> {
    let kind_ok = matches!(
        (family.param_kind(), range),
        (ParamKind::Fixed, ParamRange::Fixed)
            | (ParamKind::N, ParamRange::N(_))
            | (ParamKind::PQ, ParamRange::PQ(..))
    );
    if !kind_ok {
        return Err(Error::Parameter {
            family,
            constraint: format!("a {:?}-style parameter range", family.param_kind()),
        });
    }
    let params = range.params();
    let spaces = params
        .iter()
        .map(|&p| make_space(family, p))
        .collect::<Result<Vec<_>>>()?;

    let mut entries = Vec::new();
    for space in &spaces {
        let enumerated = s_value(space);
        let table = closed_form_s(space, ClosedFormMode::Table);
        if enumerated != table {
            entries.push(Discrepancy {
                params: space.params(),
                enumerated,
                table,
                corrected: closed_form_s(space, ClosedFormMode::Corrected),
            });
        }
    }
    let notes = TEXT_NOTES
        .iter()
        .filter(|n| n.family == family && spaces.iter().any(|s| s.params() == n.params))
        .copied()
        .collect();
    Ok(DiscrepancyReport {
        family,
        scanned: spaces.len(),
        entries,
        notes,
    })
}

/// Indices `k` (1-based) with `μ_k = 1`, where `μ` is the highest root.
/// These are exactly the `k` for which `{α : m_k(α) = 0}` is a maximal
/// closed subsystem of rank `l − 1`.
pub fn l1_maximal_indices(lie_type: LieType) -> Result<BTreeSet<usize>> {
    let mu = positive_roots(lie_type).highest_root()?;
    Ok(mu
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &m)| m == 1)
        .map(|(i, _)| i + 1)
        .collect())
}

/// Maximality of `Δ_k = {α ∈ Δ : m_k(α) = 0}` checked directly: adjoining
/// any root outside `Δ_k` and closing must give all of `Δ`.
pub fn subsystem_is_maximal(system: &RootSystem, k: usize) -> bool {
    let all = system.all_roots();
    let (inside, outside): (Vec<_>, Vec<_>) = all.iter().cloned().partition(|a| a[k - 1] == 0);
    outside.iter().all(|beta| {
        let mut seed = inside.clone();
        seed.push(beta.clone());
        system.closure(&seed).len() == all.len()
    })
}

/// For `f(t) = t(T − t)` over integers `1 ≤ t ≤ r`: is the minimum `f(1)`?
/// Requires `T > 0`, `1 ≤ r ≤ T` and `T − r ≥ 1`.
pub fn minimizer_check(total: i64, r: i64) -> Result<bool> {
    if total <= 0 || r < 1 || r > total || total - r < 1 {
        return Err(Error::Precondition(format!(
            "need T > 0, 1 ≤ r ≤ T, T − r ≥ 1 (got T = {total}, r = {r})"
        )));
    }
    let f = |t: i64| t * (total - t);
    let min = (1..=r).map(f).min().expect("r ≥ 1");
    Ok(min == f(1))
}

/// `(l − k)(l − 1 − k) = l(l − 1) + k² − k(2l − 1)`.
pub fn product_expansion_holds(l: i64, k: i64) -> bool {
    (l - k) * (l - 1 - k) == l * (l - 1) + k * k - k * (2 * l - 1)
}

/// `(l − k)(l − 1 − k) − (l − r)(l − 1 − r) = (r − k)(2l − 1 − r − k)`.
pub fn product_difference_holds(l: i64, k: i64, r: i64) -> bool {
    (l - k) * (l - 1 - k) - (l - r) * (l - 1 - r) == (r - k) * (2 * l - 1 - r - k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootVector;

    fn space(f: FamilyTag, p: Params) -> SymmetricSpace {
        make_space(f, p).unwrap()
    }

    fn fixed(f: FamilyTag) -> SymmetricSpace {
        space(f, Params::none())
    }

    #[test]
    fn s_vectors_of_exceptional_examples() {
        assert_eq!(
            s_vector(&fixed(FamilyTag::EI)),
            vec![26, 21, 17, 13, 17, 26]
        );
        assert_eq!(
            s_vector(&fixed(FamilyTag::EVIII)),
            vec![50, 36, 30, 22, 24, 31, 45, 71]
        );
        assert_eq!(s_vector(&fixed(FamilyTag::G)), vec![3, 3]);
    }

    #[test]
    fn s_values() {
        assert_eq!(s_value(&fixed(FamilyTag::EVII)), 27);
        assert_eq!(s_value(&fixed(FamilyTag::FII)), 1);
        assert_eq!(s_value(&space(FamilyTag::BDI, Params::pq(2, 2))), 3);
    }

    #[test]
    fn delta_k_examples() {
        assert_eq!(
            delta_k_positive(&fixed(FamilyTag::EIII), 1).unwrap().len(),
            6
        );
        assert_eq!(delta_k_positive(&fixed(FamilyTag::EI), 4).unwrap().len(), 7);
        let ai3 = space(FamilyTag::AI, Params::n(3));
        assert_eq!(
            delta_k_positive(&ai3, 1).unwrap(),
            vec![RootVector::simple(2, 2)]
        );
        assert_eq!(
            delta_k_positive(&ai3, 3),
            Err(Error::IndexOutOfRange { k: 3, r: 2 })
        );
        assert!(delta_k_positive(&ai3, 0).is_err());
    }

    #[test]
    fn closed_forms() {
        let d6 = space(FamilyTag::DIII, Params::n(6));
        assert_eq!(closed_form_s(&d6, ClosedFormMode::Table), 13);
        assert_eq!(closed_form_s(&d6, ClosedFormMode::Corrected), 15);
        let ai7 = space(FamilyTag::AI, Params::n(7));
        assert_eq!(closed_form_s(&ai7, ClosedFormMode::Table), 21);
        assert_eq!(closed_form_s(&ai7, ClosedFormMode::Corrected), 21);
        let cii = space(FamilyTag::CII, Params::pq(2, 2));
        assert_eq!(closed_form_s(&cii, ClosedFormMode::Table), 5);
        assert_eq!(closed_form_s(&cii, ClosedFormMode::Corrected), 6);
    }

    #[test]
    fn discrepancies_diii() {
        let rep = discrepancy_report(FamilyTag::DIII, &ParamRange::N(3..=10)).unwrap();
        let got: Vec<_> = rep
            .entries
            .iter()
            .map(|d| (d.params, d.enumerated, d.table))
            .collect();
        assert_eq!(got, vec![(Params::n(4), 6, 3), (Params::n(6), 15, 13)]);
        assert!(rep.entries.iter().all(|d| d.corrected == d.enumerated));
    }

    #[test]
    fn discrepancies_ai_empty() {
        let rep = discrepancy_report(FamilyTag::AI, &ParamRange::N(2..=12)).unwrap();
        assert!(rep.entries.is_empty());
        assert_eq!(rep.scanned, 11);
    }

    #[test]
    fn discrepancies_cii() {
        let rep = discrepancy_report(FamilyTag::CII, &ParamRange::PQ(1..=6, 1..=6)).unwrap();
        assert_eq!(rep.entries.len(), 1);
        assert_eq!(rep.entries[0].params, Params::pq(2, 2));
    }

    #[test]
    fn aiii_text_note_surfaces() {
        let rep = discrepancy_report(FamilyTag::AIII, &ParamRange::PQ(2..=3, 2..=3)).unwrap();
        assert_eq!(rep.entries.len(), 1);
        assert_eq!(rep.notes.len(), 1);
        assert_eq!(rep.notes[0].params, Params::pq(2, 3));
        let s = space(FamilyTag::AIII, Params::pq(2, 3));
        assert_eq!(s_vector(&s), vec![5, 4]);
    }

    #[test]
    fn discrepancy_range_errors() {
        assert!(discrepancy_report(FamilyTag::BDI, &ParamRange::PQ(1..=2, 1..=2)).is_err());
        assert!(discrepancy_report(FamilyTag::AI, &ParamRange::PQ(1..=2, 1..=2)).is_err());
    }

    #[test]
    fn multiplicities() {
        let ai = restricted_multiplicities(&space(FamilyTag::AI, Params::n(6)));
        assert_eq!(ai.zero_count, 0);
        assert!(ai.by_lambda.values().all(|&c| c == 1));

        let eiv = restricted_multiplicities(&fixed(FamilyTag::EIV));
        assert_eq!((eiv.nonzero_total(), eiv.zero_count), (24, 12));

        let aii = restricted_multiplicities(&space(FamilyTag::AII, Params::n(2)));
        assert_eq!((aii.nonzero_total(), aii.zero_count), (4, 2));
    }

    #[test]
    fn l1_maximal() {
        let a5: LieType = "A5".parse().unwrap();
        assert_eq!(l1_maximal_indices(a5).unwrap(), (1..=5).collect());
        assert_eq!(
            l1_maximal_indices("E6".parse().unwrap()).unwrap(),
            BTreeSet::from([1, 6])
        );
        assert!(l1_maximal_indices("E8".parse().unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn minimizer() {
        assert_eq!(minimizer_check(10, 5), Ok(true));
        assert_eq!(minimizer_check(7, 6), Ok(true));
        assert!(minimizer_check(4, 4).is_err());
        assert!(minimizer_check(0, 1).is_err());
        assert!(minimizer_check(5, 0).is_err());
    }

    #[test]
    fn report_fields_consistent() {
        let rep = SValueReport::compute(&fixed(FamilyTag::EIV));
        assert_eq!(rep.s_k, vec![10, 10]);
        assert_eq!(rep.argmax, vec![1, 2]);
        assert_eq!(rep.delta_counts, vec![8, 8]);
        assert_eq!(rep.zero_count + rep.nonzero_count(), 36);
        assert_eq!(rep.space.r() + rep.nonzero_count(), rep.space.dimension());
    }

    #[test]
    fn report_json_shape() {
        let rep = SValueReport::compute(&fixed(FamilyTag::G));
        let v = serde_json::to_value(&rep).unwrap();
        for key in [
            "family",
            "params",
            "l",
            "r",
            "dimension",
            "s_k",
            "s",
            "argmax",
            "zero_count",
            "multiplicities",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["multiplicities"][0]["lambda"], serde_json::json!([0, 1]));
        let back: SValueReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn report_json_rejects_inconsistent_dimension() {
        let rep = SValueReport::compute(&space(FamilyTag::CI, Params::n(3)));
        let mut v = serde_json::to_value(&rep).unwrap();
        v["dimension"] = serde_json::json!(99);
        assert!(serde_json::from_value::<SValueReport>(v).is_err());
    }
}
