//! Frozen reference values for the exceptional spaces and the closed-form
//! table: explicit positive-root listings, `Δ_k⁺` listings, `s_k` vectors,
//! and the (rank, dimension, s) columns.
//!
//! These are independent of the generators in [`crate::rootsys`] and
//! [`crate::svalue`] and are used to check them.

use crate::symspace::FamilyTag;

/// A listing of `Δ_k⁺ = {α > 0 : α′ ≠ 0, m′_k(α) = 0}` for one space.
#[derive(Debug, Clone, Copy)]
pub struct DeltaListing {
    pub family: FamilyTag,
    pub k: usize,
    pub roots: &'static [&'static [i32]],
}

/// Reference `s_k` vectors of the exceptional spaces with `r > 1`.
pub const EXCEPTIONAL_S_K: &[(FamilyTag, &[usize])] = &[
    (FamilyTag::EI, &[26, 21, 17, 13, 17, 26]),
    (FamilyTag::EII, &[16, 19, 9, 11]),
    (FamilyTag::EIII, &[8, 11]),
    (FamilyTag::EIV, &[10, 10]),
    (FamilyTag::EV, &[37, 28, 23, 17, 20, 28, 43]),
    (FamilyTag::EVI, &[31, 17, 11, 22]),
    (FamilyTag::EVII, &[21, 12, 27]),
    (FamilyTag::EVIII, &[50, 36, 30, 22, 24, 31, 45, 71]),
    (FamilyTag::EIX, &[34, 15, 29, 55]),
    (FamilyTag::FI, &[13, 8, 8, 13]),
    (FamilyTag::G, &[3, 3]),
];

/// (family, rank, dimension, s) for the twelve fixed rows.
pub const EXCEPTIONAL_TABLE: &[(FamilyTag, usize, usize, usize)] = &[
    (FamilyTag::EI, 6, 42, 26),
    (FamilyTag::EII, 4, 40, 19),
    (FamilyTag::EIII, 2, 32, 11),
    (FamilyTag::EIV, 2, 26, 10),
    (FamilyTag::EV, 7, 70, 43),
    (FamilyTag::EVI, 4, 64, 31),
    (FamilyTag::EVII, 3, 54, 27),
    (FamilyTag::EVIII, 8, 128, 71),
    (FamilyTag::EIX, 4, 112, 55),
    (FamilyTag::FI, 4, 28, 13),
    (FamilyTag::FII, 1, 16, 1),
    (FamilyTag::G, 2, 8, 3),
];

pub fn delta_listing(family: FamilyTag, k: usize) -> Option<&'static DeltaListing> {
    DELTA_LISTINGS
        .iter()
        .find(|d| d.family == family && d.k == k)
}

pub fn exceptional_s_k(family: FamilyTag) -> Option<&'static [usize]> {
    EXCEPTIONAL_S_K
        .iter()
        .find(|(f, _)| *f == family)
        .map(|(_, v)| *v)
}

/// Positive roots of `E_6`, reference listing order.
pub const E6_POSITIVE_ROOTS: [[i32; 6]; 36] = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
    [1, 0, 1, 0, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 1, 0, 1, 0, 0],
    [0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 1, 1],
    [1, 0, 1, 1, 0, 0],
    [0, 1, 1, 1, 0, 0],
    [0, 0, 1, 1, 1, 0],
    [0, 1, 0, 1, 1, 0],
    [0, 0, 0, 1, 1, 1],
    [1, 1, 1, 1, 0, 0],
    [1, 0, 1, 1, 1, 0],
    [0, 1, 1, 1, 1, 0],
    [0, 0, 1, 1, 1, 1],
    [0, 1, 0, 1, 1, 1],
    [1, 1, 1, 1, 1, 0],
    [1, 0, 1, 1, 1, 1],
    [0, 1, 1, 1, 1, 1],
    [0, 1, 1, 2, 1, 0],
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 2, 1, 0],
    [0, 1, 1, 2, 1, 1],
    [1, 1, 1, 2, 1, 1],
    [1, 1, 2, 2, 1, 0],
    [0, 1, 1, 2, 2, 1],
    [1, 1, 2, 2, 1, 1],
    [1, 1, 1, 2, 2, 1],
    [1, 1, 2, 2, 2, 1],
    [1, 1, 2, 3, 2, 1],
    [1, 2, 2, 3, 2, 1],
];

/// Positive roots of `F_4`, reference listing order. The fourth-row
/// entry of the source listing reads `2α_2+α_3`, which is not a root of `F_4`; it is
/// recorded here as `α_2+2α_3` (see [`F4_MISPRINTED_ENTRY`]).
pub const F4_POSITIVE_ROOTS: [[i32; 4]; 24] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [0, 1, 1, 0],
    [0, 0, 1, 1],
    [0, 1, 2, 0],
    [1, 1, 1, 0],
    [0, 1, 1, 1],
    [1, 1, 2, 0],
    [1, 1, 1, 1],
    [0, 1, 2, 1],
    [1, 2, 2, 0],
    [0, 1, 2, 2],
    [1, 1, 2, 1],
    [1, 1, 2, 2],
    [1, 2, 2, 1],
    [1, 2, 2, 2],
    [1, 2, 3, 1],
    [1, 2, 3, 2],
    [1, 2, 4, 2],
    [1, 3, 4, 2],
    [2, 3, 4, 2],
];

/// Positive roots of `G_2`, reference listing order.
pub const G2_POSITIVE_ROOTS: [[i32; 2]; 6] = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];

/// The `F_4` source-listing entry that is not a root.
pub const F4_MISPRINTED_ENTRY: [i32; 4] = [0, 2, 1, 0];

/// Reference `Δ_k⁺` listings for the exceptional spaces.
pub const DELTA_LISTINGS: &[DeltaListing] = &[
    DeltaListing {
        family: FamilyTag::EI,
        k: 1,
        roots: &[
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0, 0],
            &[0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1],
            &[0, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1],
            &[0, 1, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1],
            &[0, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 1, 0],
            &[0, 1, 1, 2, 1, 1],
            &[0, 1, 1, 2, 2, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EI,
        k: 2,
        roots: &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[1, 0, 1, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1],
            &[1, 0, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1],
            &[1, 0, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 1],
            &[1, 0, 1, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EI,
        k: 3,
        roots: &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0],
            &[0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1],
            &[0, 1, 0, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EI,
        k: 4,
        roots: &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EI,
        k: 5,
        roots: &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0, 0],
            &[1, 0, 1, 1, 0, 0],
            &[0, 1, 1, 1, 0, 0],
            &[1, 1, 1, 1, 0, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EI,
        k: 6,
        roots: &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 1, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0, 0],
            &[0, 0, 0, 1, 1, 0],
            &[1, 0, 1, 1, 0, 0],
            &[0, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 0],
            &[1, 1, 1, 1, 0, 0],
            &[1, 0, 1, 1, 1, 0],
            &[0, 1, 1, 1, 1, 0],
            &[1, 1, 1, 1, 1, 0],
            &[0, 1, 1, 2, 1, 0],
            &[1, 1, 1, 2, 1, 0],
            &[1, 1, 2, 2, 1, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EII,
        k: 1,
        roots: &[
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0, 0],
            &[0, 0, 0, 1, 1, 0],
            &[0, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 0],
            &[0, 1, 1, 1, 1, 0],
            &[0, 1, 1, 2, 1, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EII,
        k: 2,
        roots: &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[1, 0, 1, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1],
            &[1, 0, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1],
            &[1, 0, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 1],
            &[1, 0, 1, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EII,
        k: 3,
        roots: &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EII,
        k: 4,
        roots: &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EIII,
        k: 1,
        roots: &[
            &[0, 1, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0],
            &[0, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 0],
            &[0, 1, 1, 1, 1, 0],
            &[0, 1, 1, 2, 1, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EIII,
        k: 2,
        roots: &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[1, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1],
            &[1, 0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1],
            &[1, 0, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 1],
            &[1, 0, 1, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EIV,
        k: 1,
        roots: &[
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 1, 1, 1],
            &[0, 0, 1, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1],
            &[0, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 1, 1],
            &[0, 1, 1, 2, 2, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EIV,
        k: 2,
        roots: &[
            &[1, 0, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0],
            &[1, 0, 1, 1, 0, 0],
            &[1, 1, 1, 1, 0, 0],
            &[1, 0, 1, 1, 1, 0],
            &[1, 1, 1, 1, 1, 0],
            &[1, 1, 1, 2, 1, 0],
            &[1, 1, 2, 2, 1, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EV,
        k: 1,
        roots: &[
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[0, 1, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1, 1],
            &[0, 1, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 1, 2, 1, 0, 0],
            &[0, 1, 1, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 1],
            &[0, 1, 1, 2, 1, 1, 0],
            &[0, 1, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 2, 1, 0],
            &[0, 1, 1, 2, 1, 1, 1],
            &[0, 1, 1, 2, 2, 1, 1],
            &[0, 1, 1, 2, 2, 2, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EV,
        k: 2,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[1, 0, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1, 1],
            &[1, 0, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1],
            &[1, 0, 1, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 1, 1],
            &[1, 0, 1, 1, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EV,
        k: 3,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[0, 1, 0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EV,
        k: 4,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EV,
        k: 5,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[1, 0, 1, 1, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0, 0],
            &[1, 1, 1, 1, 0, 0, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EV,
        k: 6,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0],
            &[1, 0, 1, 1, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 0, 0],
            &[1, 1, 1, 1, 0, 0, 0],
            &[1, 0, 1, 1, 1, 0, 0],
            &[0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 1, 2, 1, 0, 0],
            &[1, 1, 1, 1, 1, 0, 0],
            &[1, 1, 1, 2, 1, 0, 0],
            &[1, 1, 2, 2, 1, 0, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EV,
        k: 7,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 1, 0, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0],
            &[1, 0, 1, 1, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0],
            &[1, 1, 1, 1, 0, 0, 0],
            &[1, 0, 1, 1, 1, 0, 0],
            &[0, 1, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 1, 0],
            &[0, 1, 1, 2, 1, 0, 0],
            &[1, 1, 1, 1, 1, 0, 0],
            &[1, 0, 1, 1, 1, 1, 0],
            &[0, 1, 1, 1, 1, 1, 0],
            &[1, 1, 1, 2, 1, 0, 0],
            &[1, 1, 1, 1, 1, 1, 0],
            &[0, 1, 1, 2, 1, 1, 0],
            &[1, 1, 2, 2, 1, 0, 0],
            &[1, 1, 1, 2, 1, 1, 0],
            &[0, 1, 1, 2, 2, 1, 0],
            &[1, 1, 2, 2, 1, 1, 0],
            &[1, 1, 1, 2, 2, 1, 0],
            &[1, 1, 2, 2, 2, 1, 0],
            &[1, 1, 2, 3, 2, 1, 0],
            &[1, 2, 2, 3, 2, 1, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVI,
        k: 1,
        roots: &[
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[0, 1, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1, 1],
            &[0, 1, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 1, 2, 1, 0, 0],
            &[0, 1, 1, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 1],
            &[0, 1, 1, 2, 1, 1, 0],
            &[0, 1, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 2, 1, 0],
            &[0, 1, 1, 2, 1, 1, 1],
            &[0, 1, 1, 2, 2, 1, 1],
            &[0, 1, 1, 2, 2, 2, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVI,
        k: 2,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[0, 1, 0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVI,
        k: 3,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVI,
        k: 4,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0],
            &[1, 0, 1, 1, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 0, 0],
            &[1, 1, 1, 1, 0, 0, 0],
            &[1, 0, 1, 1, 1, 0, 0],
            &[0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 1, 2, 1, 0, 0],
            &[1, 1, 1, 1, 1, 0, 0],
            &[1, 1, 1, 2, 1, 0, 0],
            &[1, 1, 2, 2, 1, 0, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVII,
        k: 1,
        roots: &[
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1, 1],
            &[0, 0, 1, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 1, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 1],
            &[0, 1, 1, 2, 1, 1, 0],
            &[0, 1, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 2, 1, 0],
            &[0, 1, 1, 2, 1, 1, 1],
            &[0, 1, 1, 2, 2, 1, 1],
            &[0, 1, 1, 2, 2, 2, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVII,
        k: 2,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[1, 0, 1, 0, 0, 0, 0],
            &[1, 0, 1, 1, 0, 0, 0],
            &[1, 1, 1, 1, 0, 0, 0],
            &[1, 0, 1, 1, 1, 0, 0],
            &[1, 1, 1, 1, 1, 0, 0],
            &[1, 1, 1, 2, 1, 0, 0],
            &[1, 1, 2, 2, 1, 0, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVII,
        k: 3,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0],
            &[1, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0],
            &[1, 1, 1, 1, 0, 0, 0],
            &[1, 0, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 1, 0],
            &[1, 1, 1, 1, 1, 0, 0],
            &[1, 0, 1, 1, 1, 1, 0],
            &[0, 1, 1, 1, 1, 1, 0],
            &[1, 1, 1, 2, 1, 0, 0],
            &[1, 1, 1, 1, 1, 1, 0],
            &[0, 1, 1, 2, 1, 1, 0],
            &[1, 1, 2, 2, 1, 0, 0],
            &[1, 1, 1, 2, 1, 1, 0],
            &[0, 1, 1, 2, 2, 1, 0],
            &[1, 1, 2, 2, 1, 1, 0],
            &[1, 1, 1, 2, 2, 1, 0],
            &[1, 1, 2, 2, 2, 1, 0],
            &[1, 1, 2, 3, 2, 1, 0],
            &[1, 2, 2, 3, 2, 1, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVIII,
        k: 1,
        roots: &[
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1],
            &[0, 1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0, 0],
            &[0, 1, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1, 1],
            &[0, 1, 1, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 1, 2, 1, 0, 0, 0],
            &[0, 1, 1, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 1, 1, 0, 0],
            &[0, 1, 1, 1, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 2, 1, 0, 0],
            &[0, 1, 1, 2, 1, 1, 1, 0],
            &[0, 1, 1, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 2, 1, 1, 0],
            &[0, 1, 1, 2, 1, 1, 1, 1],
            &[0, 1, 1, 2, 2, 2, 1, 0],
            &[0, 1, 1, 2, 2, 1, 1, 1],
            &[0, 1, 1, 2, 2, 2, 1, 1],
            &[0, 1, 1, 2, 2, 2, 2, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVIII,
        k: 2,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[1, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1],
            &[1, 0, 1, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1, 1],
            &[1, 0, 1, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1, 1, 1],
            &[1, 0, 1, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1, 1],
            &[1, 0, 1, 1, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 1, 1, 1],
            &[1, 0, 1, 1, 1, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVIII,
        k: 3,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1],
            &[0, 1, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVIII,
        k: 4,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1, 1],
            &[0, 0, 0, 0, 1, 1, 1, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVIII,
        k: 5,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1],
            &[1, 0, 1, 1, 0, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 1],
            &[1, 1, 1, 1, 0, 0, 0, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVIII,
        k: 6,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1],
            &[1, 0, 1, 1, 0, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0, 0],
            &[0, 1, 0, 1, 1, 0, 0, 0],
            &[1, 0, 1, 1, 1, 0, 0, 0],
            &[1, 1, 1, 1, 0, 0, 0, 0],
            &[0, 1, 1, 1, 1, 0, 0, 0],
            &[1, 1, 1, 1, 1, 0, 0, 0],
            &[0, 1, 1, 2, 1, 0, 0, 0],
            &[1, 1, 1, 2, 1, 0, 0, 0],
            &[1, 1, 2, 2, 1, 0, 0, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVIII,
        k: 7,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0, 0],
            &[1, 0, 1, 1, 0, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0, 0],
            &[0, 1, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0, 0],
            &[1, 0, 1, 1, 1, 0, 0, 0],
            &[1, 1, 1, 1, 0, 0, 0, 0],
            &[0, 1, 1, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 1, 0, 0],
            &[1, 1, 1, 1, 1, 0, 0, 0],
            &[0, 1, 1, 2, 1, 0, 0, 0],
            &[1, 0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 1, 1, 1, 1, 0, 0],
            &[1, 1, 1, 2, 1, 0, 0, 0],
            &[1, 1, 1, 1, 1, 1, 0, 0],
            &[0, 1, 1, 2, 1, 1, 0, 0],
            &[1, 1, 2, 2, 1, 0, 0, 0],
            &[1, 1, 1, 2, 1, 1, 0, 0],
            &[0, 1, 1, 2, 2, 1, 0, 0],
            &[1, 1, 2, 2, 1, 1, 0, 0],
            &[1, 1, 1, 2, 2, 1, 0, 0],
            &[1, 1, 2, 2, 2, 1, 0, 0],
            &[1, 1, 2, 3, 2, 1, 0, 0],
            &[1, 2, 2, 3, 2, 1, 0, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EVIII,
        k: 8,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 0],
            &[1, 0, 1, 1, 0, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0, 0],
            &[0, 1, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 0, 1, 1, 1, 0],
            &[1, 0, 1, 1, 1, 0, 0, 0],
            &[1, 1, 1, 1, 0, 0, 0, 0],
            &[0, 1, 1, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 1, 0],
            &[1, 1, 1, 1, 1, 0, 0, 0],
            &[0, 1, 1, 2, 1, 0, 0, 0],
            &[1, 0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 1, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 1, 1, 0],
            &[1, 1, 1, 2, 1, 0, 0, 0],
            &[1, 1, 1, 1, 1, 1, 0, 0],
            &[0, 1, 1, 2, 1, 1, 0, 0],
            &[1, 0, 1, 1, 1, 1, 1, 0],
            &[0, 1, 1, 1, 1, 1, 1, 0],
            &[1, 1, 2, 2, 1, 0, 0, 0],
            &[1, 1, 1, 2, 1, 1, 0, 0],
            &[0, 1, 1, 2, 2, 1, 0, 0],
            &[1, 1, 1, 1, 1, 1, 1, 0],
            &[0, 1, 1, 2, 1, 1, 1, 0],
            &[1, 1, 2, 2, 1, 1, 0, 0],
            &[1, 1, 1, 2, 2, 1, 0, 0],
            &[1, 1, 1, 2, 1, 1, 1, 0],
            &[0, 1, 1, 2, 2, 1, 1, 0],
            &[1, 1, 2, 2, 2, 1, 0, 0],
            &[1, 1, 2, 2, 1, 1, 1, 0],
            &[1, 1, 1, 2, 2, 1, 1, 0],
            &[0, 1, 1, 2, 2, 2, 1, 0],
            &[1, 1, 2, 3, 2, 1, 0, 0],
            &[1, 1, 2, 2, 2, 1, 1, 0],
            &[1, 1, 1, 2, 2, 2, 1, 0],
            &[1, 2, 2, 3, 2, 1, 0, 0],
            &[1, 1, 2, 3, 2, 1, 1, 0],
            &[1, 1, 2, 2, 2, 2, 1, 0],
            &[1, 2, 2, 3, 2, 1, 1, 0],
            &[1, 1, 2, 3, 2, 2, 1, 0],
            &[1, 2, 2, 3, 2, 2, 1, 0],
            &[1, 1, 2, 3, 3, 2, 1, 0],
            &[1, 2, 2, 3, 3, 2, 1, 0],
            &[1, 2, 2, 4, 3, 2, 1, 0],
            &[1, 2, 3, 4, 3, 2, 1, 0],
            &[2, 2, 3, 4, 3, 2, 1, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EIX,
        k: 1,
        roots: &[
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 1, 1],
            &[0, 0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 1, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 1, 1, 0, 0],
            &[0, 1, 1, 1, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 2, 1, 0, 0],
            &[0, 1, 1, 2, 1, 1, 1, 0],
            &[0, 1, 1, 1, 1, 1, 1, 1],
            &[0, 1, 1, 2, 2, 1, 1, 0],
            &[0, 1, 1, 2, 1, 1, 1, 1],
            &[0, 1, 1, 2, 2, 2, 1, 0],
            &[0, 1, 1, 2, 2, 1, 1, 1],
            &[0, 1, 1, 2, 2, 2, 1, 1],
            &[0, 1, 1, 2, 2, 2, 2, 1],
        ],
    },
    DeltaListing {
        family: FamilyTag::EIX,
        k: 2,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[1, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1],
            &[1, 0, 1, 1, 0, 0, 0, 0],
            &[1, 0, 1, 1, 1, 0, 0, 0],
            &[1, 1, 1, 1, 0, 0, 0, 0],
            &[1, 1, 1, 1, 1, 0, 0, 0],
            &[1, 1, 1, 2, 1, 0, 0, 0],
            &[1, 1, 2, 2, 1, 0, 0, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EIX,
        k: 3,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[1, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0, 0],
            &[1, 0, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0, 0],
            &[1, 0, 1, 1, 1, 0, 0, 0],
            &[1, 1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 1, 0, 0],
            &[1, 1, 1, 1, 1, 0, 0, 0],
            &[1, 0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 1, 1, 1, 1, 0, 0],
            &[1, 1, 1, 2, 1, 0, 0, 0],
            &[1, 1, 1, 1, 1, 1, 0, 0],
            &[0, 1, 1, 2, 1, 1, 0, 0],
            &[1, 1, 2, 2, 1, 0, 0, 0],
            &[1, 1, 1, 2, 1, 1, 0, 0],
            &[0, 1, 1, 2, 2, 1, 0, 0],
            &[1, 1, 2, 2, 1, 1, 0, 0],
            &[1, 1, 1, 2, 2, 1, 0, 0],
            &[1, 1, 2, 2, 2, 1, 0, 0],
            &[1, 1, 2, 3, 2, 1, 0, 0],
            &[1, 2, 2, 3, 2, 1, 0, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::EIX,
        k: 4,
        roots: &[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[1, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 0],
            &[1, 0, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 0, 1, 1, 1, 0],
            &[1, 0, 1, 1, 1, 0, 0, 0],
            &[1, 1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 1, 1, 0],
            &[1, 1, 1, 1, 1, 0, 0, 0],
            &[1, 0, 1, 1, 1, 1, 0, 0],
            &[0, 1, 1, 1, 1, 1, 0, 0],
            &[0, 0, 1, 1, 1, 1, 1, 0],
            &[0, 1, 0, 1, 1, 1, 1, 0],
            &[1, 1, 1, 2, 1, 0, 0, 0],
            &[1, 1, 1, 1, 1, 1, 0, 0],
            &[0, 1, 1, 2, 1, 1, 0, 0],
            &[1, 0, 1, 1, 1, 1, 1, 0],
            &[0, 1, 1, 1, 1, 1, 1, 0],
            &[1, 1, 2, 2, 1, 0, 0, 0],
            &[1, 1, 1, 2, 1, 1, 0, 0],
            &[0, 1, 1, 2, 2, 1, 0, 0],
            &[1, 1, 1, 1, 1, 1, 1, 0],
            &[0, 1, 1, 2, 1, 1, 1, 0],
            &[1, 1, 2, 2, 1, 1, 0, 0],
            &[1, 1, 1, 2, 2, 1, 0, 0],
            &[1, 1, 1, 2, 1, 1, 1, 0],
            &[0, 1, 1, 2, 2, 1, 1, 0],
            &[1, 1, 2, 2, 2, 1, 0, 0],
            &[1, 1, 2, 2, 1, 1, 1, 0],
            &[1, 1, 1, 2, 2, 1, 1, 0],
            &[0, 1, 1, 2, 2, 2, 1, 0],
            &[1, 1, 2, 3, 2, 1, 0, 0],
            &[1, 1, 2, 2, 2, 1, 1, 0],
            &[1, 1, 1, 2, 2, 2, 1, 0],
            &[1, 2, 2, 3, 2, 1, 0, 0],
            &[1, 1, 2, 3, 2, 1, 1, 0],
            &[1, 1, 2, 2, 2, 2, 1, 0],
            &[1, 2, 2, 3, 2, 1, 1, 0],
            &[1, 1, 2, 3, 2, 2, 1, 0],
            &[1, 2, 2, 3, 2, 2, 1, 0],
            &[1, 1, 2, 3, 3, 2, 1, 0],
            &[1, 2, 2, 3, 3, 2, 1, 0],
            &[1, 2, 2, 4, 3, 2, 1, 0],
            &[1, 2, 3, 4, 3, 2, 1, 0],
            &[2, 2, 3, 4, 3, 2, 1, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::FI,
        k: 1,
        roots: &[
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[0, 1, 1, 0],
            &[0, 0, 1, 1],
            &[0, 1, 2, 0],
            &[0, 1, 1, 1],
            &[0, 1, 2, 1],
            &[0, 1, 2, 2],
        ],
    },
    DeltaListing {
        family: FamilyTag::FI,
        k: 2,
        roots: &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 1, 1]],
    },
    DeltaListing {
        family: FamilyTag::FI,
        k: 3,
        roots: &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[1, 1, 0, 0]],
    },
    DeltaListing {
        family: FamilyTag::FI,
        k: 4,
        roots: &[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[1, 1, 0, 0],
            &[0, 1, 1, 0],
            &[0, 1, 2, 0],
            &[1, 1, 1, 0],
            &[1, 1, 2, 0],
            &[1, 2, 2, 0],
        ],
    },
    DeltaListing {
        family: FamilyTag::G,
        k: 1,
        roots: &[&[0, 1]],
    },
    DeltaListing {
        family: FamilyTag::G,
        k: 2,
        roots: &[&[1, 0]],
    },
];
