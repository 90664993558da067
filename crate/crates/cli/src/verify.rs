//! Invariant suite behind `spos verify`.
//!
//! Space construction goes through a caller-supplied builder so that a
//! deliberately broken catalog can be fed in as a negative control.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use spos_core::reference::{
    DELTA_LISTINGS, E6_POSITIVE_ROOTS, EXCEPTIONAL_S_K, EXCEPTIONAL_TABLE, F4_POSITIVE_ROOTS,
    G2_POSITIVE_ROOTS,
};
use spos_core::svalue::{
    ledger_lookup, product_difference_holds, product_expansion_holds, subsystem_is_maximal,
    EXCEPTION_LEDGER,
};
use spos_core::*;

pub type SpaceBuilder<'a> = &'a (dyn Fn(FamilyTag, Params) -> Result<SymmetricSpace> + Sync);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Collects mismatches; passes iff none were recorded.
struct Tally {
    name: &'static str,
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) -> Check {
        if self.failures.is_empty() {
            Check {
                name: self.name,
                status: Status::Pass,
                detail: format!("{} cases", self.checked),
            }
        } else {
            let mut detail = format!("{} of {} cases failed: ", self.failures.len(), self.checked);
            let shown: Vec<_> = self.failures.iter().take(5).cloned().collect();
            detail.push_str(&shown.join("; "));
            if self.failures.len() > 5 {
                let _ = write!(detail, "; …");
            }
            Check {
                name: self.name,
                status: Status::Fail,
                detail,
            }
        }
    }
}

/// Parameter ranges always covered by the closed-form sweep.
const BASE_RANGES: [(FamilyTag, u32, u32); 7] = [
    (FamilyTag::AI, 2, 12),
    (FamilyTag::AII, 2, 8),
    (FamilyTag::AIII, 1, 8),
    (FamilyTag::BDI, 2, 10),
    (FamilyTag::DIII, 3, 10),
    (FamilyTag::CI, 2, 10),
    (FamilyTag::CII, 1, 6),
];

/// The base ranges plus every valid classical instance whose ambient rank
/// is at most `max_rank`.
pub fn sweep(max_rank: usize) -> Vec<(FamilyTag, Params)> {
    let mut out = BTreeSet::new();
    let bound = 2 * max_rank as u32 + 2;
    for (family, lo, hi) in BASE_RANGES {
        let pq = family.param_kind() == ParamKind::PQ;
        for a in 1..=hi.max(bound) {
            for b in if pq { a..=hi.max(bound) } else { 0..=0 } {
                let params = if pq { Params::pq(a, b) } else { Params::n(a) };
                let in_base = if pq {
                    a >= lo && b <= hi
                } else {
                    a >= lo && a <= hi
                };
                let Ok(space) = make_space(family, params) else {
                    continue;
                };
                if in_base || space.l() <= max_rank {
                    out.insert((family, params));
                }
            }
        }
    }
    out.into_iter().collect()
}

fn fixed_families() -> impl Iterator<Item = FamilyTag> {
    FamilyTag::ALL
        .into_iter()
        .filter(|f| f.param_kind() == ParamKind::Fixed)
}

fn lie(family: Family, rank: usize) -> LieType {
    LieType::new(family, rank).expect("valid type")
}

fn root_set(t: LieType) -> BTreeSet<RootVector> {
    positive_roots(t).positive_roots().iter().cloned().collect()
}

fn check_root_counts(max_rank: usize) -> Check {
    let mut t = Tally::new("root_counts");
    let top = max_rank.max(12);
    for l in 1..=top {
        let n = positive_roots(lie(Family::A, l)).len();
        t.expect(n == l * (l + 1) / 2, || format!("A{l}: {n}"));
    }
    for l in 2..=top {
        for f in [Family::B, Family::C] {
            if let Ok(ty) = LieType::new(f, l) {
                let n = positive_roots(ty).len();
                t.expect(n == l * l, || format!("{ty}: {n}"));
            }
        }
    }
    for l in 3..=top {
        if let Ok(ty) = LieType::new(Family::D, l) {
            let n = positive_roots(ty).len();
            t.expect(n == l * (l - 1), || format!("{ty}: {n}"));
        }
    }
    for (name, want) in [("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6)] {
        let n = positive_roots(name.parse().unwrap()).len();
        t.expect(n == want, || format!("{name}: {n}"));
    }
    t.finish()
}

fn check_reference_lists() -> Check {
    let mut t = Tally::new("reference_root_lists");
    let cases: [(&str, BTreeSet<RootVector>); 3] = [
        (
            "E6",
            E6_POSITIVE_ROOTS
                .iter()
                .map(|r| RootVector::new(r.to_vec()))
                .collect(),
        ),
        (
            "F4",
            F4_POSITIVE_ROOTS
                .iter()
                .map(|r| RootVector::new(r.to_vec()))
                .collect(),
        ),
        (
            "G2",
            G2_POSITIVE_ROOTS
                .iter()
                .map(|r| RootVector::new(r.to_vec()))
                .collect(),
        ),
    ];
    for (name, listed) in cases {
        let gen = root_set(name.parse().unwrap());
        t.expect(gen == listed, || {
            let extra: Vec<_> = gen.difference(&listed).map(|r| r.to_string()).collect();
            let missing: Vec<_> = listed.difference(&gen).map(|r| r.to_string()).collect();
            format!("{name}: generated-only {extra:?}, listed-only {missing:?}")
        });
    }
    t.finish()
}

fn check_generator_equivalence() -> Check {
    let mut t = Tally::new("generator_equivalence");
    let mut types = vec!["E6".parse::<LieType>().unwrap()];
    for l in 1..=8 {
        for f in [Family::A, Family::B, Family::C, Family::D] {
            if let Ok(ty) = LieType::new(f, l) {
                types.push(ty);
            }
        }
    }
    for ty in types {
        let ok = epsilon_realization(ty)
            .map(|e| e == root_set(ty))
            .unwrap_or(false);
        t.expect(ok, || format!("{ty}"));
    }
    t.finish()
}

fn check_highest_root_criterion() -> Check {
    let mut t = Tally::new("highest_root_criterion");
    let e6 = highest_root("E6".parse().unwrap());
    t.expect(e6 == Ok(RootVector::new(vec![1, 2, 2, 3, 2, 1])), || {
        format!("E6 highest root {e6:?}")
    });
    let mut types: Vec<LieType> = Vec::new();
    for l in 1..=4 {
        for f in [Family::A, Family::B, Family::C, Family::D] {
            if let Ok(ty) = LieType::new(f, l) {
                if ty.is_irreducible() {
                    types.push(ty);
                }
            }
        }
    }
    for name in ["A5", "F4", "G2"] {
        types.push(name.parse().unwrap());
    }
    for ty in types {
        let system = positive_roots(ty);
        let brute: BTreeSet<usize> = (1..=ty.rank())
            .filter(|&k| subsystem_is_maximal(&system, k))
            .collect();
        let crit = l1_maximal_indices(ty);
        t.expect(crit.as_ref() == Ok(&brute), || {
            format!("{ty}: criterion {crit:?}, closure {brute:?}")
        });
    }
    t.finish()
}

fn check_exceptional_s_k(build: SpaceBuilder) -> Check {
    let mut t = Tally::new("exceptional_s_k");
    for &(family, want) in EXCEPTIONAL_S_K {
        let got = build(family, Params::none()).map(|s| s_vector(&s));
        t.expect(got.as_deref() == Ok(want), || {
            format!("{family}: {got:?}, expected {want:?}")
        });
    }
    let fii = build(FamilyTag::FII, Params::none()).map(|s| s_value(&s));
    t.expect(fii == Ok(1), || format!("FII: s = {fii:?}"));
    t.finish()
}

fn check_exceptional_delta_sets(build: SpaceBuilder) -> Check {
    let mut t = Tally::new("exceptional_delta_sets");
    for listing in DELTA_LISTINGS {
        let want: BTreeSet<RootVector> = listing
            .roots
            .iter()
            .map(|r| RootVector::new(r.to_vec()))
            .collect();
        let got: Result<BTreeSet<RootVector>> = build(listing.family, Params::none())
            .and_then(|s| delta_k_positive(&s, listing.k))
            .map(|v| v.into_iter().collect());
        t.expect(got.as_ref() == Ok(&want), || {
            format!(
                "{} k={}: {} roots, expected {}",
                listing.family,
                listing.k,
                got.map(|g| g.len()).unwrap_or(0),
                want.len()
            )
        });
    }
    t.finish()
}

fn check_exceptional_table(build: SpaceBuilder) -> Check {
    let mut t = Tally::new("exceptional_table");
    for &(family, rank, dim, s) in EXCEPTIONAL_TABLE {
        let got = build(family, Params::none()).map(|sp| (sp.r(), sp.dimension(), s_value(&sp)));
        t.expect(got == Ok((rank, dim, s)), || {
            format!("{family}: {got:?}, expected {:?}", (rank, dim, s))
        });
    }
    t.finish()
}

struct Computed {
    family: FamilyTag,
    params: Params,
    result: Result<SValueReport>,
}

fn compute_all(build: SpaceBuilder, instances: &[(FamilyTag, Params)]) -> Vec<Computed> {
    instances
        .par_iter()
        .map(|&(family, params)| Computed {
            family,
            params,
            result: build(family, params).map(|s| SValueReport::compute(&s)),
        })
        .collect()
}

fn check_dimension_law(computed: &[Computed]) -> Check {
    let mut t = Tally::new("dimension_law");
    for c in computed {
        match &c.result {
            Ok(rep) => {
                let r = rep.space.r();
                let nonzero = rep.nonzero_count();
                let total = rep.space.ambient().positive_root_count();
                t.expect(
                    r + nonzero == rep.space.dimension() && rep.zero_count + nonzero == total,
                    || {
                        format!(
                            "{} {}: {r} + {nonzero} vs dimension {}",
                            c.family,
                            c.params,
                            rep.space.dimension()
                        )
                    },
                );
            }
            Err(e) => t.expect(false, || format!("{} {}: {e}", c.family, c.params)),
        }
    }
    t.finish()
}

fn check_closed_forms(computed: &[Computed]) -> Check {
    let mut t = Tally::new("closed_form_agreement");
    for c in computed {
        if let Ok(rep) = &c.result {
            let corrected = closed_form_s(&rep.space, ClosedFormMode::Corrected);
            t.expect(rep.s == corrected, || {
                format!(
                    "{} {}: enumerated {}, corrected closed form {corrected}",
                    c.family, c.params, rep.s
                )
            });
        } else {
            t.expect(false, || {
                format!("{} {}: construction failed", c.family, c.params)
            });
        }
    }
    t.finish()
}

fn check_discrepancy_scan(computed: &[Computed]) -> Check {
    let mut t = Tally::new("discrepancy_scan");
    let mut flagged = BTreeSet::new();
    let mut scanned = BTreeSet::new();
    for c in computed {
        if let Ok(rep) = &c.result {
            scanned.insert((c.family, c.params));
            if rep.s != closed_form_s(&rep.space, ClosedFormMode::Table) {
                flagged.insert((c.family, c.params));
                t.expect(ledger_lookup(&rep.space).is_some(), || {
                    format!("{} {}: unexpected discrepancy", c.family, c.params)
                });
            }
        }
    }
    for e in EXCEPTION_LEDGER {
        if scanned.contains(&(e.family, e.params)) {
            t.expect(flagged.contains(&(e.family, e.params)), || {
                format!("{} {}: ledger entry not reproduced", e.family, e.params)
            });
        }
    }
    t.finish()
}

fn check_low_rank_vectors(build: SpaceBuilder) -> Check {
    let mut t = Tally::new("low_rank_s_vectors");
    let cases: [(FamilyTag, Params, &[usize]); 6] = [
        (FamilyTag::AIII, Params::pq(2, 2), &[3, 4]),
        (FamilyTag::AIII, Params::pq(2, 3), &[5, 4]),
        (FamilyTag::BDI, Params::pq(2, 2), &[3, 3]),
        (FamilyTag::BDI, Params::pq(3, 3), &[5, 6, 6]),
        (FamilyTag::DIII, Params::n(6), &[13, 8, 15]),
        (FamilyTag::CII, Params::pq(2, 2), &[5, 6]),
    ];
    for (family, params, want) in cases {
        let got = build(family, params).map(|s| s_vector(&s));
        t.expect(got.as_deref() == Ok(want), || {
            format!("{family} {params}: {got:?}, expected {want:?}")
        });
    }
    t.finish()
}

fn check_identities() -> Check {
    let mut t = Tally::new("algebraic_identities");
    for l in -20..=20 {
        for k in -20..=20 {
            t.expect(product_expansion_holds(l, k), || {
                format!("expansion l={l} k={k}")
            });
            for r in -20..=20 {
                t.expect(product_difference_holds(l, k, r), || {
                    format!("difference l={l} k={k} r={r}")
                });
            }
        }
    }
    for total in 2..=50 {
        for r in 1..total {
            t.expect(minimizer_check(total, r) == Ok(true), || {
                format!("minimizer T={total} r={r}")
            });
        }
    }
    t.finish()
}

pub fn run_with(max_rank: usize, build: SpaceBuilder) -> VerifyReport {
    let mut instances = sweep(max_rank);
    instances.extend(fixed_families().map(|f| (f, Params::none())));
    let computed = compute_all(build, &instances);

    let checks = vec![
        check_root_counts(max_rank),
        check_reference_lists(),
        check_generator_equivalence(),
        check_highest_root_criterion(),
        check_exceptional_s_k(build),
        check_exceptional_delta_sets(build),
        check_exceptional_table(build),
        check_dimension_law(&computed),
        check_closed_forms(&computed),
        check_discrepancy_scan(&computed),
        check_low_rank_vectors(build),
        check_identities(),
    ];
    VerifyReport {
        passed: checks.iter().all(|c| c.status == Status::Pass),
        checks,
    }
}

pub fn run(max_rank: usize) -> VerifyReport {
    run_with(max_rank, &make_space)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_contains_base_ranges() {
        let s = sweep(4);
        assert!(s.contains(&(FamilyTag::AI, Params::n(12))));
        assert!(s.contains(&(FamilyTag::BDI, Params::pq(10, 10))));
        assert!(s.contains(&(FamilyTag::CII, Params::pq(6, 6))));
        assert!(!s.contains(&(FamilyTag::CII, Params::pq(6, 7))));
        assert!(!s.contains(&(FamilyTag::BDI, Params::pq(1, 2))));
    }

    #[test]
    fn sweep_extends_with_rank() {
        let s = sweep(12);
        assert!(s.contains(&(FamilyTag::AI, Params::n(13))));
        assert!(s.contains(&(FamilyTag::AIII, Params::pq(1, 12))));
        assert!(!s.contains(&(FamilyTag::AI, Params::n(14))));
    }

    #[test]
    fn tally_reports_failures() {
        let mut t = Tally::new("x");
        t.expect(true, String::new);
        t.expect(false, || "bad".into());
        let c = t.finish();
        assert_eq!(c.status, Status::Fail);
        assert!(c.detail.starts_with("1 of 2"));
    }
}
