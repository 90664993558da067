//! Catalog of the irreducible compact symmetric spaces and their
//! restriction maps on simple-root coefficients.
//!
//! Each space carries a projection `proj` of simple-root indices onto
//! restricted indices `{0, 1, …, r}`: `proj[i] = j` means `α_i′ = λ_j`, and
//! `0` means `α_i′ = 0`. Restricting a root is then a linear fold of its
//! coefficients.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Family, LieType, RootVector};

#[allow(clippy::upper_case_acronyms)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyTag {
    AI,
    AII,
    AIII,
    BDI,
    DIII,
    CI,
    CII,
    EI,
    EII,
    EIII,
    EIV,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    FII,
    G,
}

/// How a family is parametrised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Fixed,
    N,
    PQ,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 19] = [
        FamilyTag::AI,
        FamilyTag::AII,
        FamilyTag::AIII,
        FamilyTag::BDI,
        FamilyTag::DIII,
        FamilyTag::CI,
        FamilyTag::CII,
        FamilyTag::EI,
        FamilyTag::EII,
        FamilyTag::EIII,
        FamilyTag::EIV,
        FamilyTag::EV,
        FamilyTag::EVI,
        FamilyTag::EVII,
        FamilyTag::EVIII,
        FamilyTag::EIX,
        FamilyTag::FI,
        FamilyTag::FII,
        FamilyTag::G,
    ];

    pub fn param_kind(self) -> ParamKind {
        use FamilyTag::*;
        match self {
            AI | AII | DIII | CI => ParamKind::N,
            AIII | BDI | CII => ParamKind::PQ,
            _ => ParamKind::Fixed,
        }
    }

    pub fn name(self) -> &'static str {
        use FamilyTag::*;
        match self {
            AI => "AI",
            AII => "AII",
            AIII => "AIII",
            BDI => "BDI",
            DIII => "DIII",
            CI => "CI",
            CII => "CII",
            EI => "EI",
            EII => "EII",
            EIII => "EIII",
            EIV => "EIV",
            EV => "EV",
            EVI => "EVI",
            EVII => "EVII",
            EVIII => "EVIII",
            EIX => "EIX",
            FI => "FI",
            FII => "FII",
            G => "G",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        FamilyTag::ALL
            .into_iter()
            .find(|f| f.name() == up)
            .ok_or_else(|| Error::ParseFamily(s.to_string()))
    }
}

/// Family parameters. `(p, q)` pairs are stored normalised to `p ≤ q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Params {
    PQ { p: u32, q: u32 },
    N { n: u32 },
    None {},
}

impl Params {
    pub fn n(n: u32) -> Self {
        Params::N { n }
    }

    pub fn pq(p: u32, q: u32) -> Self {
        Params::PQ {
            p: p.min(q),
            q: p.max(q),
        }
    }

    pub fn none() -> Self {
        Params::None {}
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::PQ { p, q } => write!(f, "p={p} q={q}"),
            Params::N { n } => write!(f, "n={n}"),
            Params::None {} => Ok(()),
        }
    }
}

/// Projection of simple-root indices onto restricted indices `0..=r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RestrictionMap {
    r: usize,
    proj: Vec<usize>,
}

impl RestrictionMap {
    /// Checks `r ≤ l`, entries in `0..=r`, and that every `1..=r` is hit.
    pub fn new(r: usize, proj: Vec<usize>) -> Result<Self> {
        let l = proj.len();
        if r == 0 || r > l {
            return Err(Error::InvalidMap(format!("rank {r} not in 1..={l}")));
        }
        if let Some(bad) = proj.iter().find(|&&j| j > r) {
            return Err(Error::InvalidMap(format!("entry {bad} exceeds rank {r}")));
        }
        if let Some(missing) = (1..=r).find(|j| !proj.contains(j)) {
            return Err(Error::InvalidMap(format!("λ_{missing} is not realised")));
        }
        Ok(RestrictionMap { r, proj })
    }

    pub fn identity(l: usize) -> Self {
        RestrictionMap {
            r: l,
            proj: (1..=l).collect(),
        }
    }

    pub fn l(&self) -> usize {
        self.proj.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Entries are 0-based positions over 1-based simple-root labels:
    /// `proj()[i - 1]` is the image of `α_i`.
    pub fn proj(&self) -> &[usize] {
        &self.proj
    }

    /// Relabels restricted indices: `λ_j ↦ λ_{perm[j-1]}`. `perm` must be
    /// a permutation of `1..=r`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = perm.to_vec();
        seen.sort_unstable();
        if seen != (1..=self.r).collect::<Vec<_>>() {
            return Err(Error::InvalidMap(format!(
                "{perm:?} is not a permutation of 1..={}",
                self.r
            )));
        }
        let proj = self
            .proj
            .iter()
            .map(|&j| if j == 0 { 0 } else { perm[j - 1] })
            .collect();
        Ok(RestrictionMap { r: self.r, proj })
    }

    pub fn is_identity(&self) -> bool {
        self.proj.iter().enumerate().all(|(i, &j)| j == i + 1)
    }
}

/// Coefficients `m′_1 … m′_r` of a restricted root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RestrictedVector(Vec<i32>);

impl RestrictedVector {
    pub fn new(coeffs: Vec<i32>) -> Self {
        RestrictedVector(coeffs)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    /// `m′_k`, with `k` 1-based.
    pub fn get(&self, k: usize) -> i32 {
        self.0[k - 1]
    }
}

impl fmt::Display for RestrictedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&RootVector::new(self.0.clone()), f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSpace {
    family: FamilyTag,
    params: Params,
    ambient: LieType,
    dimension: usize,
    label: String,
    map: RestrictionMap,
}

impl SymmetricSpace {
    pub fn family(&self) -> FamilyTag {
        self.family
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn ambient(&self) -> LieType {
        self.ambient
    }

    pub fn l(&self) -> usize {
        self.ambient.rank()
    }

    pub fn r(&self) -> usize {
        self.map.r()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn map(&self) -> &RestrictionMap {
        &self.map
    }

    /// Same space with a different restriction map. Used for relabelling
    /// checks and for corrupted-catalog fixtures.
    pub fn with_map(&self, map: RestrictionMap) -> Result<Self> {
        if map.l() != self.l() {
            return Err(Error::LengthMismatch {
                expected: self.l(),
                found: map.l(),
            });
        }
        Ok(SymmetricSpace {
            map,
            ..self.clone()
        })
    }

    /// `m′_j(α) = Σ_{proj[i] = j} m_i(α)`.
    pub fn restrict(&self, root: &RootVector) -> Result<RestrictedVector> {
        if root.len() != self.l() {
            return Err(Error::LengthMismatch {
                expected: self.l(),
                found: root.len(),
            });
        }
        let mut out = vec![0; self.r()];
        for (m, &j) in root.coeffs().iter().zip(self.map.proj()) {
            if j > 0 {
                out[j - 1] += m;
            }
        }
        Ok(RestrictedVector(out))
    }

    pub fn is_zero_restriction(&self, root: &RootVector) -> Result<bool> {
        Ok(self.restrict(root)?.is_zero())
    }
}

fn param_err(family: FamilyTag, constraint: impl Into<String>) -> Error {
    Error::Parameter {
        family,
        constraint: constraint.into(),
    }
}

fn lie(family: Family, rank: usize) -> LieType {
    LieType::new(family, rank).expect("catalog ambient types are valid")
}

/// `proj[2i] = i` for `1 ≤ i ≤ count`, zero elsewhere.
fn even_nodes(l: usize, count: usize) -> Vec<usize> {
    (1..=l)
        .map(|i| {
            if i % 2 == 0 && i / 2 <= count {
                i / 2
            } else {
                0
            }
        })
        .collect()
}

/// `proj[i] = i` for `i ≤ count`, zero elsewhere.
fn leading_nodes(l: usize, count: usize) -> Vec<usize> {
    (1..=l).map(|i| if i <= count { i } else { 0 }).collect()
}

/// Builds a catalog instance.
///
/// `(p, q)` families accept either order. Fixed families take
/// [`Params::None`].
pub fn make_space(family: FamilyTag, params: Params) -> Result<SymmetricSpace> {
    use FamilyTag::*;

    let kind = family.param_kind();
    let params = match (kind, params) {
        (ParamKind::PQ, Params::PQ { p, q }) => Params::pq(p, q),
        (ParamKind::N, Params::N { .. }) | (ParamKind::Fixed, Params::None {}) => params,
        (ParamKind::PQ, _) => return Err(param_err(family, "parameters p and q")),
        (ParamKind::N, _) => return Err(param_err(family, "parameter n")),
        (ParamKind::Fixed, _) => return Err(param_err(family, "no parameters")),
    };

    let (ambient, r, dimension, label, proj): (LieType, usize, usize, String, Vec<usize>) =
        match (family, params) {
            (AI, Params::N { n }) => {
                if n < 2 {
                    return Err(param_err(family, "n ≥ 2"));
                }
                let n = n as usize;
                let l = n - 1;
                let label = format!("SU({n})/SO({n})");
                (
                    lie(Family::A, l),
                    l,
                    l * (n + 2) / 2,
                    label,
                    (1..=l).collect(),
                )
            }
            (AII, Params::N { n }) => {
                if n < 2 {
                    return Err(param_err(family, "n ≥ 2"));
                }
                let n = n as usize;
                let l = 2 * n - 1;
                let label = format!("SU({})/Sp({n})", 2 * n);
                (
                    lie(Family::A, l),
                    n - 1,
                    (n - 1) * (2 * n + 1),
                    label,
                    even_nodes(l, n - 1),
                )
            }
            (AIII, Params::PQ { p, q }) => {
                if p < 1 {
                    return Err(param_err(family, "p ≥ 1"));
                }
                let (p, q) = (p as usize, q as usize);
                let l = p + q - 1;
                let mut proj = vec![0; l];
                for i in 1..=p {
                    proj[i - 1] = i;
                    proj[l - i] = i;
                }
                let label = format!("SU({})/S(U_{p}×U_{q})", p + q);
                (lie(Family::A, l), p, 2 * p * q, label, proj)
            }
            (BDI, Params::PQ { p, q }) => {
                if p < 1 || p + q < 4 {
                    return Err(param_err(family, "p ≥ 1 and p + q ≥ 4"));
                }
                let (p, q) = (p as usize, q as usize);
                let label = format!("SO({})/SO({p})×SO({q})", p + q);
                if (p + q) % 2 == 1 {
                    let l = (p + q - 1) / 2;
                    (lie(Family::B, l), p, p * q, label, leading_nodes(l, p))
                } else {
                    let l = (p + q) / 2;
                    let proj = if p + 1 == l {
                        let mut v = leading_nodes(l, p);
                        v[l - 1] = p;
                        v
                    } else {
                        leading_nodes(l, p)
                    };
                    (lie(Family::D, l), p, p * q, label, proj)
                }
            }
            (DIII, Params::N { n }) => {
                if n < 3 {
                    return Err(param_err(family, "n ≥ 3"));
                }
                let n = n as usize;
                let r = n / 2;
                let proj = if n.is_multiple_of(2) {
                    even_nodes(n, r)
                } else {
                    let mut v = even_nodes(n, (n - 3) / 2);
                    v[n - 2] = r;
                    v[n - 1] = r;
                    v
                };
                let label = format!("SO({})/U({n})", 2 * n);
                (lie(Family::D, n), r, n * (n - 1), label, proj)
            }
            (CI, Params::N { n }) => {
                if n < 2 {
                    return Err(param_err(family, "n ≥ 2"));
                }
                let n = n as usize;
                let label = format!("Sp({n})/U({n})");
                (lie(Family::C, n), n, n * (n + 1), label, (1..=n).collect())
            }
            (CII, Params::PQ { p, q }) => {
                if p < 1 {
                    return Err(param_err(family, "p ≥ 1"));
                }
                let (p, q) = (p as usize, q as usize);
                let l = p + q;
                let label = format!("Sp({l})/Sp({p})×Sp({q})");
                (lie(Family::C, l), p, 4 * p * q, label, even_nodes(l, p))
            }
            (fixed, _) => {
                let (ambient, dimension, proj) = exceptional(fixed);
                let r = proj.iter().copied().max().unwrap_or(0);
                let label = catalog_entry(fixed).label.to_string();
                (ambient, r, dimension, label, proj)
            }
        };

    let map = RestrictionMap::new(r, proj).expect("catalog restriction maps are well formed");
    Ok(SymmetricSpace {
        family,
        params,
        ambient,
        dimension,
        label,
        map,
    })
}

/// Ambient type, dimension and restriction map of the fixed families.
fn exceptional(family: FamilyTag) -> (LieType, usize, Vec<usize>) {
    use FamilyTag::*;
    match family {
        EI => (lie(Family::E, 6), 42, vec![1, 2, 3, 4, 5, 6]),
        EII => (lie(Family::E, 6), 40, vec![1, 2, 3, 4, 3, 1]),
        EIII => (lie(Family::E, 6), 32, vec![1, 2, 0, 0, 0, 1]),
        EIV => (lie(Family::E, 6), 26, vec![1, 0, 0, 0, 0, 2]),
        EV => (lie(Family::E, 7), 70, (1..=7).collect()),
        EVI => (lie(Family::E, 7), 64, vec![1, 0, 2, 3, 0, 4, 0]),
        EVII => (lie(Family::E, 7), 54, vec![1, 0, 0, 0, 0, 2, 3]),
        EVIII => (lie(Family::E, 8), 128, (1..=8).collect()),
        EIX => (lie(Family::E, 8), 112, vec![1, 0, 0, 0, 0, 2, 3, 4]),
        FI => (lie(Family::F, 4), 28, vec![1, 2, 3, 4]),
        // Only α_4 survives; the s-value of a rank-one space does not
        // depend on the map, but the dimension count does.
        FII => (lie(Family::F, 4), 16, vec![0, 0, 0, 1]),
        G => (lie(Family::G, 2), 8, vec![1, 2]),
        _ => unreachable!("{family} is parametrised"),
    }
}

/// One row of the family catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub family: FamilyTag,
    pub label: &'static str,
    pub constraints: &'static str,
    pub rank: &'static str,
    pub dimension: &'static str,
    pub s: &'static str,
    pub proj_rule: &'static str,
}

const CATALOG: [CatalogEntry; 19] = [
    CatalogEntry {
        family: FamilyTag::AI,
        label: "SU(n)/SO(n)",
        constraints: "n ≥ 2",
        rank: "n-1",
        dimension: "(n-1)(n+2)/2",
        s: "n(n-1)/2",
        proj_rule: "A_{n-1}; α_i' = λ_i",
    },
    CatalogEntry {
        family: FamilyTag::AII,
        label: "SU(2n)/Sp(n)",
        constraints: "n ≥ 2",
        rank: "n-1",
        dimension: "(n-1)(2n+1)",
        s: "(n-1)(2n-3)",
        proj_rule: "A_{2n-1}; α_{2i}' = λ_i, α_{2i-1}' = 0",
    },
    CatalogEntry {
        family: FamilyTag::AIII,
        label: "SU(p+q)/S(U_p×U_q)",
        constraints: "p ≥ 1 (p ≤ q after swap)",
        rank: "min(p,q)",
        dimension: "2pq",
        s: "1+2(p-1)(q-1)",
        proj_rule: "A_{p+q-1}; α_i' = α_{l+1-i}' = λ_i for i ≤ p, middle nodes 0",
    },
    CatalogEntry {
        family: FamilyTag::BDI,
        label: "SO(p+q)/SO(p)×SO(q)",
        constraints: "p ≥ 1, p + q ≥ 4 (p ≤ q after swap)",
        rank: "min(p,q)",
        dimension: "pq",
        s: "1+(p-1)(q-1)",
        proj_rule: "B_l (p+q odd) or D_l (p+q even); α_i' = λ_i for i ≤ p, rest 0; D_l with p = l-1: α_{l-1}' = α_l' = λ_{l-1}",
    },
    CatalogEntry {
        family: FamilyTag::DIII,
        label: "SO(2n)/U(n)",
        constraints: "n ≥ 3",
        rank: "[n/2]",
        dimension: "n(n-1)",
        s: "1+(n-2)(n-3)",
        proj_rule: "D_n; α_{2i}' = λ_i, odd nodes 0; n odd: α_{n-1}' = α_n' = λ_r",
    },
    CatalogEntry {
        family: FamilyTag::CI,
        label: "Sp(n)/U(n)",
        constraints: "n ≥ 2",
        rank: "n",
        dimension: "n(n+1)",
        s: "1+n(n-1)",
        proj_rule: "C_n; α_i' = λ_i",
    },
    CatalogEntry {
        family: FamilyTag::CII,
        label: "Sp(p+q)/Sp(p)×Sp(q)",
        constraints: "p ≥ 1 (p ≤ q after swap)",
        rank: "min(p,q)",
        dimension: "4pq",
        s: "1+4(p-1)(q-1)",
        proj_rule: "C_{p+q}; α_{2i}' = λ_i for i ≤ p, rest 0",
    },
    CatalogEntry {
        family: FamilyTag::EI,
        label: "(𝔢_6(−78), 𝔰𝔭(4))",
        constraints: "fixed",
        rank: "6",
        dimension: "42",
        s: "26",
        proj_rule: "E_6; proj = [1,2,3,4,5,6]",
    },
    CatalogEntry {
        family: FamilyTag::EII,
        label: "(𝔢_6(−78), 𝔰𝔲(6)+𝔰𝔲(2))",
        constraints: "fixed",
        rank: "4",
        dimension: "40",
        s: "19",
        proj_rule: "E_6; proj = [1,2,3,4,3,1]",
    },
    CatalogEntry {
        family: FamilyTag::EIII,
        label: "(𝔢_6(−78), 𝔰𝔬(10)+ℝ)",
        constraints: "fixed",
        rank: "2",
        dimension: "32",
        s: "11",
        proj_rule: "E_6; proj = [1,2,0,0,0,1]",
    },
    CatalogEntry {
        family: FamilyTag::EIV,
        label: "(𝔢_6(−78), 𝔣(4))",
        constraints: "fixed",
        rank: "2",
        dimension: "26",
        s: "10",
        proj_rule: "E_6; proj = [1,0,0,0,0,2]",
    },
    CatalogEntry {
        family: FamilyTag::EV,
        label: "(𝔢_7(−133), 𝔰𝔲(8))",
        constraints: "fixed",
        rank: "7",
        dimension: "70",
        s: "43",
        proj_rule: "E_7; proj = [1,2,3,4,5,6,7]",
    },
    CatalogEntry {
        family: FamilyTag::EVI,
        label: "(𝔢_7(−133), 𝔰𝔬(12)+𝔰𝔲(2))",
        constraints: "fixed",
        rank: "4",
        dimension: "64",
        s: "31",
        proj_rule: "E_7; proj = [1,0,2,3,0,4,0]",
    },
    CatalogEntry {
        family: FamilyTag::EVII,
        label: "(𝔢_7(−133), 𝔢_6+ℝ)",
        constraints: "fixed",
        rank: "3",
        dimension: "54",
        s: "27",
        proj_rule: "E_7; proj = [1,0,0,0,0,2,3]",
    },
    CatalogEntry {
        family: FamilyTag::EVIII,
        label: "(𝔢_8(−248), 𝔰𝔬(16))",
        constraints: "fixed",
        rank: "8",
        dimension: "128",
        s: "71",
        proj_rule: "E_8; proj = [1,2,3,4,5,6,7,8]",
    },
    CatalogEntry {
        family: FamilyTag::EIX,
        label: "(𝔢_8(−248), 𝔢_7+𝔰𝔲(2))",
        constraints: "fixed",
        rank: "4",
        dimension: "112",
        s: "55",
        proj_rule: "E_8; proj = [1,0,0,0,0,2,3,4]",
    },
    CatalogEntry {
        family: FamilyTag::FI,
        label: "(𝔣_4(−52), 𝔰𝔭(3)+𝔰𝔲(2))",
        constraints: "fixed",
        rank: "4",
        dimension: "28",
        s: "13",
        proj_rule: "F_4; proj = [1,2,3,4]",
    },
    CatalogEntry {
        family: FamilyTag::FII,
        label: "(𝔣_4(−52), 𝔰𝔬(9))",
        constraints: "fixed",
        rank: "1",
        dimension: "16",
        s: "1",
        proj_rule: "F_4; proj = [0,0,0,1] (rank one: s = 1 regardless of map)",
    },
    CatalogEntry {
        family: FamilyTag::G,
        label: "(𝔤_2(−14), 𝔰𝔲(2)+𝔰𝔲(2))",
        constraints: "fixed",
        rank: "2",
        dimension: "8",
        s: "3",
        proj_rule: "G_2; proj = [1,2]",
    },
];

/// All 19 family rows, in table order.
pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

pub fn catalog_entry(family: FamilyTag) -> &'static CatalogEntry {
    CATALOG
        .iter()
        .find(|e| e.family == family)
        .expect("every family has a catalog row")
}
