use std::collections::BTreeSet;

use spos_core::reference::{
    delta_listing, exceptional_s_k, DELTA_LISTINGS, E6_POSITIVE_ROOTS, EXCEPTIONAL_S_K,
    EXCEPTIONAL_TABLE, F4_MISPRINTED_ENTRY, F4_POSITIVE_ROOTS, G2_POSITIVE_ROOTS,
};
use spos_core::svalue::table_formula;
use spos_core::*;

fn generated(t: &str) -> BTreeSet<Vec<i32>> {
    positive_roots(t.parse().unwrap())
        .positive_roots()
        .iter()
        .map(|r| r.coeffs().to_vec())
        .collect()
}

fn listed<const L: usize>(rows: &[[i32; L]]) -> BTreeSet<Vec<i32>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

#[test]
fn e6_roots_match_listing() {
    assert_eq!(generated("E6"), listed(&E6_POSITIVE_ROOTS));
}

#[test]
fn g2_roots_match_listing() {
    assert_eq!(generated("G2"), listed(&G2_POSITIVE_ROOTS));
}

#[test]
fn f4_roots_match_listing() {
    let gen = generated("F4");
    assert_eq!(gen, listed(&F4_POSITIVE_ROOTS));
    assert!(!gen.contains(F4_MISPRINTED_ENTRY.as_slice()));
    assert!(!positive_roots("F4".parse().unwrap())
        .contains(&RootVector::new(F4_MISPRINTED_ENTRY.to_vec())));
}

#[test]
fn exceptional_s_vectors_match() {
    for &(family, expected) in EXCEPTIONAL_S_K {
        let space = make_space(family, Params::none()).unwrap();
        assert_eq!(s_vector(&space), expected, "{family}");
    }
}

#[test]
fn delta_listings_match() {
    for listing in DELTA_LISTINGS {
        let space = make_space(listing.family, Params::none()).unwrap();
        let got: BTreeSet<Vec<i32>> = delta_k_positive(&space, listing.k)
            .unwrap()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        let want: BTreeSet<Vec<i32>> = listing.roots.iter().map(|r| r.to_vec()).collect();
        assert_eq!(
            got.len(),
            listing.roots.len(),
            "{} k={} has duplicates",
            listing.family,
            listing.k
        );
        assert_eq!(got, want, "{} k={}", listing.family, listing.k);
    }
}

#[test]
fn listings_are_consistent_with_s_vectors() {
    for &(family, s_k) in EXCEPTIONAL_S_K {
        let r = s_k.len();
        for (k, &s) in s_k.iter().enumerate() {
            if let Some(l) = delta_listing(family, k + 1) {
                assert_eq!(r + l.roots.len(), s, "{family} k={}", k + 1);
            }
        }
    }
    assert!(exceptional_s_k(FamilyTag::FII).is_none());
}

#[test]
fn exceptional_table_columns() {
    for &(family, rank, dim, s) in EXCEPTIONAL_TABLE {
        let space = make_space(family, Params::none()).unwrap();
        assert_eq!(space.r(), rank, "{family}");
        assert_eq!(space.dimension(), dim, "{family}");
        assert_eq!(s_value(&space), s, "{family}");
        assert_eq!(table_formula(&space), s, "{family}");
        let entry = catalog_entry(family);
        assert_eq!(entry.dimension, dim.to_string(), "{family}");
        assert_eq!(entry.s, s.to_string(), "{family}");
        assert_eq!(entry.rank, rank.to_string(), "{family}");
    }
}

#[test]
fn dimension_law_for_exceptional_spaces() {
    for &(family, ..) in EXCEPTIONAL_TABLE {
        let space = make_space(family, Params::none()).unwrap();
        let m = restricted_multiplicities(&space);
        assert_eq!(space.r() + m.nonzero_total(), space.dimension(), "{family}");
        assert_eq!(
            m.zero_count + m.nonzero_total(),
            space.ambient().positive_root_count()
        );
    }
}
