use std::collections::BTreeSet;

use proptest::prelude::*;
use spos_core::svalue::{product_difference_holds, product_expansion_holds, subsystem_is_maximal};
use spos_core::*;

fn classical_space() -> impl Strategy<Value = SymmetricSpace> {
    prop_oneof![
        (2u32..=8).prop_map(|n| (FamilyTag::AI, Params::n(n))),
        (2u32..=5).prop_map(|n| (FamilyTag::AII, Params::n(n))),
        (1u32..=5, 1u32..=5).prop_map(|(p, q)| (FamilyTag::AIII, Params::pq(p, q))),
        (1u32..=5, 3u32..=6).prop_map(|(p, q)| (FamilyTag::BDI, Params::pq(p, q))),
        (3u32..=8).prop_map(|n| (FamilyTag::DIII, Params::n(n))),
        (2u32..=6).prop_map(|n| (FamilyTag::CI, Params::n(n))),
        (1u32..=4, 1u32..=4).prop_map(|(p, q)| (FamilyTag::CII, Params::pq(p, q))),
    ]
    .prop_map(|(f, p)| make_space(f, p).unwrap())
}

fn any_space() -> impl Strategy<Value = SymmetricSpace> {
    let fixed: Vec<FamilyTag> = FamilyTag::ALL
        .iter()
        .copied()
        .filter(|f| f.param_kind() == ParamKind::Fixed)
        .collect();
    prop_oneof![
        classical_space(),
        proptest::sample::select(fixed).prop_map(|f| make_space(f, Params::none()).unwrap()),
    ]
}

fn vectors(l: usize) -> impl Strategy<Value = (Vec<i32>, Vec<i32>)> {
    (
        proptest::collection::vec(-5i32..=5, l),
        proptest::collection::vec(-5i32..=5, l),
    )
}

proptest! {
    #[test]
    fn restriction_is_linear((space, (a, b)) in any_space().prop_flat_map(|s| {
        let l = s.l();
        (Just(s), vectors(l))
    })) {
        let (a, b) = (RootVector::new(a), RootVector::new(b));
        let ra = space.restrict(&a).unwrap();
        let rb = space.restrict(&b).unwrap();
        let rab = space.restrict(&(&a + &b)).unwrap();
        let sum: Vec<i32> = ra.coeffs().iter().zip(rb.coeffs()).map(|(x, y)| x + y).collect();
        prop_assert_eq!(rab.coeffs(), &sum[..]);
        let neg = space.restrict(&(-&a)).unwrap();
        prop_assert!(neg.coeffs().iter().zip(ra.coeffs()).all(|(x, y)| *x == -*y));
    }

    #[test]
    fn relabeling_permutes_s_vector(space in any_space(), shuffle in any::<u64>()) {
        let r = space.r();
        let mut perm: Vec<usize> = (1..=r).collect();
        let mut x = shuffle;
        for i in (1..r).rev() {
            let j = (x % (i as u64 + 1)) as usize;
            perm.swap(i, j);
            x /= i as u64 + 1;
        }
        let relabeled = space.with_map(space.map().permuted(&perm).unwrap()).unwrap();
        let before = s_vector(&space);
        let after = s_vector(&relabeled);
        for j in 1..=r {
            prop_assert_eq!(after[perm[j - 1] - 1], before[j - 1]);
        }
        prop_assert_eq!(s_value(&space), s_value(&relabeled));
    }

    #[test]
    fn dimension_law(space in any_space()) {
        let m = restricted_multiplicities(&space);
        prop_assert_eq!(space.r() + m.nonzero_total(), space.dimension());
        prop_assert_eq!(m.zero_count + m.nonzero_total(), space.ambient().positive_root_count());
    }

    #[test]
    fn report_invariants(space in any_space()) {
        let rep = SValueReport::compute(&space);
        prop_assert_eq!(rep.s_k.len(), space.r());
        prop_assert!(rep.s_k.iter().all(|&s| s >= space.r()));
        prop_assert!(!rep.argmax.is_empty());
        prop_assert!(rep.s <= space.dimension());
        prop_assert_eq!(rep.s, closed_form_s(&space, ClosedFormMode::Corrected));
    }

    #[test]
    fn report_json_round_trip(space in any_space()) {
        let rep = SValueReport::compute(&space);
        let json = serde_json::to_string(&rep).unwrap();
        let back: SValueReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, rep);
    }

    #[test]
    fn product_expansion(l in -20i64..=20, k in -20i64..=20) {
        prop_assert!(product_expansion_holds(l, k));
    }

    #[test]
    fn product_difference(l in -20i64..=20, k in -20i64..=20, r in -20i64..=20) {
        prop_assert!(product_difference_holds(l, k, r));
    }

    #[test]
    fn minimizer_at_one(total in 2i64..=200, r in 1i64..=199) {
        prop_assume!(r < total);
        prop_assert_eq!(minimizer_check(total, r), Ok(true));
    }
}

#[test]
fn generators_agree_on_classical_types() {
    for (fam, lo) in [
        (Family::A, 1),
        (Family::B, 2),
        (Family::C, 3),
        (Family::D, 4),
    ] {
        for l in lo..=8 {
            let t = LieType::new(fam, l).unwrap();
            let gen: BTreeSet<RootVector> =
                positive_roots(t).positive_roots().iter().cloned().collect();
            assert_eq!(epsilon_realization(t).unwrap(), gen, "{t}");
        }
    }
    let e6: LieType = "E6".parse().unwrap();
    let gen: BTreeSet<RootVector> = positive_roots(e6)
        .positive_roots()
        .iter()
        .cloned()
        .collect();
    assert_eq!(epsilon_realization(e6).unwrap(), gen);
}

#[test]
fn positive_root_counts() {
    for l in 1..=10usize {
        assert_eq!(
            positive_roots(LieType::new(Family::A, l).unwrap()).len(),
            l * (l + 1) / 2
        );
    }
    for l in 2..=10usize {
        assert_eq!(
            positive_roots(LieType::new(Family::B, l).unwrap()).len(),
            l * l
        );
        assert_eq!(
            positive_roots(LieType::new(Family::C, l).unwrap()).len(),
            l * l
        );
    }
    for l in 3..=10usize {
        assert_eq!(
            positive_roots(LieType::new(Family::D, l).unwrap()).len(),
            l * (l - 1)
        );
    }
    for (t, n) in [("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6)] {
        assert_eq!(positive_roots(t.parse().unwrap()).len(), n, "{t}");
    }
}

#[test]
fn coefficient_one_nodes_give_maximal_levi_subsystems() {
    let mut types = vec![];
    for l in 1..=6 {
        types.push(LieType::new(Family::A, l).unwrap());
    }
    for l in 2..=5 {
        types.push(LieType::new(Family::B, l).unwrap());
        types.push(LieType::new(Family::C, l).unwrap());
    }
    for l in 3..=6 {
        types.push(LieType::new(Family::D, l).unwrap());
    }
    for t in ["E6", "E7", "F4", "G2"] {
        types.push(t.parse().unwrap());
    }
    for t in types {
        let system = positive_roots(t);
        let expected = l1_maximal_indices(t).unwrap();
        let brute: BTreeSet<usize> = (1..=t.rank())
            .filter(|&k| subsystem_is_maximal(&system, k))
            .collect();
        assert_eq!(brute, expected, "{t}");
    }
}
