//! Positive root systems of the simple complex Lie algebras.
//!
//! Roots are integer coefficient vectors over the simple roots. Node
//! numbering follows the usual Dynkin diagrams with these conventions:
//!
//! * `B_l`: `α_l` short. `C_l`: `α_l` long.
//! * `D_l`: chain `α_1 … α_{l-1}`, with `α_l` attached to `α_{l-2}`.
//! * `E_l`: chain `α_1 – α_3 – α_4 – … – α_l`, with `α_2` attached to `α_4`.
//! * `F_4`: `α_1, α_2` long, `α_3, α_4` short.
//! * `G_2`: `α_1` short.
//!
//! Generation is exact: positive roots are built height by height from the
//! simple roots using Cartan integers and root strings.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A simple Lie algebra type: family letter plus rank.
///
/// `D_2` (reducible, `A_1 × A_1`) and `D_3` (`≅ A_3`) are admitted since the
/// low-rank orthogonal Grassmannians need them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let constraint = match family {
            Family::A if rank < 1 => Some("rank ≥ 1"),
            Family::B | Family::C | Family::D if rank < 2 => Some("rank ≥ 2"),
            Family::E if !(6..=8).contains(&rank) => Some("rank ∈ {6, 7, 8}"),
            Family::F if rank != 4 => Some("rank = 4"),
            Family::G if rank != 2 => Some("rank = 2"),
            _ => None,
        };
        match constraint {
            Some(constraint) => Err(Error::InvalidRank {
                family,
                rank,
                constraint,
            }),
            None => Ok(LieType { family, rank }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_irreducible(&self) -> bool {
        !(self.family == Family::D && self.rank == 2)
    }

    /// Number of positive roots, from the closed formulas.
    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseLieType(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(err()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| err())?;
        LieType::new(family, rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Coefficients `(m_1, …, m_l)` of a root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(Vec<i32>);

impl RootVector {
    pub fn new(coeffs: Vec<i32>) -> Self {
        RootVector(coeffs)
    }

    pub fn zero(l: usize) -> Self {
        RootVector(vec![0; l])
    }

    /// The simple root `α_i`, with `i` 1-based.
    pub fn simple(l: usize, i: usize) -> Self {
        let mut v = vec![0; l];
        v[i - 1] = 1;
        RootVector(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&m| m >= 0) && self.0.iter().any(|&m| m > 0)
    }

    /// Coefficient-wise `self ≥ other`.
    pub fn dominates(&self, other: &RootVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    fn with_added(&self, i: usize, delta: i32) -> RootVector {
        let mut v = self.0.clone();
        v[i] += delta;
        RootVector(v)
    }
}

impl Index<usize> for RootVector {
    type Output = i32;

    fn index(&self, i: usize) -> &i32 {
        &self.0[i]
    }
}

impl Add for &RootVector {
    type Output = RootVector;

    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;

    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;

    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// Canonical order: height, then coefficients in descending lexicographic
/// order (so `α_1` precedes `α_2`).
pub fn canonical_cmp(a: &RootVector, b: &RootVector) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0))
}

/// Cartan matrix `a_ij = 2(α_i, α_j)/(α_j, α_j)`.
pub fn cartan_matrix(lie_type: LieType) -> Vec<Vec<i32>> {
    let l = lie_type.rank();
    let mut a = vec![vec![0; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // link(i, j, a_ij, a_ji), 1-based nodes
    let mut link = |i: usize, j: usize, aij: i32, aji: i32| {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    match lie_type.family() {
        Family::A => {
            for i in 1..l {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 1..l - 1 {
                link(i, i + 1, -1, -1);
            }
            link(l - 1, l, -2, -1);
        }
        Family::C => {
            for i in 1..l - 1 {
                link(i, i + 1, -1, -1);
            }
            link(l - 1, l, -1, -2);
        }
        Family::D => {
            for i in 1..l - 1 {
                link(i, i + 1, -1, -1);
            }
            if l >= 3 {
                link(l - 2, l, -1, -1);
            }
        }
        Family::E => {
            link(1, 3, -1, -1);
            link(2, 4, -1, -1);
            for i in 3..l {
                link(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            link(1, 2, -1, -1);
            link(2, 3, -2, -1);
            link(3, 4, -1, -1);
        }
        Family::G => link(1, 2, -1, -3),
    }
    a
}

/// The positive roots of a simple Lie algebra together with its Cartan
/// matrix. Immutable once built.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i32>>,
    positive: Vec<RootVector>,
    members: HashSet<RootVector>,
}

impl RootSystem {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Positive roots in canonical order.
    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn len(&self) -> usize {
        self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }

    /// Membership in `Δ = Δ⁺ ∪ −Δ⁺`.
    pub fn contains(&self, v: &RootVector) -> bool {
        if v.len() != self.rank() {
            return false;
        }
        self.members.contains(v) || self.members.contains(&-v)
    }

    pub fn contains_positive(&self, v: &RootVector) -> bool {
        self.members.contains(v)
    }

    /// All roots, positive ones first.
    pub fn all_roots(&self) -> Vec<RootVector> {
        let mut all = self.positive.clone();
        all.extend(self.positive.iter().map(|r| -r));
        all
    }

    /// `⟨β, α_i∨⟩ = Σ_j m_j a_ji`, with `i` 0-based.
    pub fn pairing(&self, beta: &RootVector, i: usize) -> i32 {
        (0..self.rank()).map(|j| beta[j] * self.cartan[j][i]).sum()
    }

    /// `(p, q)` for the `α_i`-string through `β`: `β − pα_i, …, β + qα_i`
    /// are the members of `Δ ∪ {0}` on the string. `i` is 0-based.
    pub fn string(&self, beta: &RootVector, i: usize) -> (i32, i32) {
        let in_system = |v: &RootVector| v.is_zero() || self.contains(v);
        let mut p = 0;
        while in_system(&beta.with_added(i, -(p + 1))) {
            p += 1;
        }
        let mut q = 0;
        while in_system(&beta.with_added(i, q + 1)) {
            q += 1;
        }
        (p, q)
    }

    /// The unique positive root of maximal height.
    pub fn highest_root(&self) -> Result<RootVector> {
        if !self.lie_type.is_irreducible() {
            return Err(Error::Reducible(self.lie_type));
        }
        Ok(self
            .positive
            .last()
            .expect("root system is nonempty")
            .clone())
    }

    /// Smallest closed, symmetric subset of `Δ` containing `seed`.
    pub fn closure(&self, seed: &[RootVector]) -> BTreeSet<RootVector> {
        let mut set: BTreeSet<RootVector> = BTreeSet::new();
        for r in seed {
            set.insert(r.clone());
            set.insert(-r);
        }
        loop {
            let current: Vec<&RootVector> = set.iter().collect();
            let mut added = Vec::new();
            for (x, a) in current.iter().enumerate() {
                for b in &current[x..] {
                    let s = *a + *b;
                    if self.contains(&s) && !set.contains(&s) {
                        added.push(s);
                    }
                }
            }
            if added.is_empty() {
                return set;
            }
            set.extend(added);
        }
    }
}

/// Generates `Δ⁺` by height-by-height closure.
///
/// At each height, `β + α_i` is admitted iff `q = p − ⟨β, α_i∨⟩ > 0`, where
/// `p` is the largest integer with `β − pα_i` a root. `2α_i` is never a root.
pub fn positive_roots(lie_type: LieType) -> RootSystem {
    let l = lie_type.rank();
    let cartan = cartan_matrix(lie_type);
    let mut system = RootSystem {
        lie_type,
        cartan,
        positive: Vec::new(),
        members: HashSet::new(),
    };

    let mut layer: Vec<RootVector> = (1..=l).map(|i| RootVector::simple(l, i)).collect();
    while !layer.is_empty() {
        for r in &layer {
            system.members.insert(r.clone());
        }
        system.positive.extend(layer.iter().cloned());

        let mut next: BTreeSet<RootVector> = BTreeSet::new();
        for beta in &layer {
            for i in 0..l {
                if beta.height() == 1 && beta[i] == 1 {
                    continue;
                }
                let mut p = 0;
                while system.members.contains(&beta.with_added(i, -(p + 1))) {
                    p += 1;
                }
                if p - system.pairing(beta, i) > 0 {
                    next.insert(beta.with_added(i, 1));
                }
            }
        }
        layer = next.into_iter().collect();
    }

    system.positive.sort_by(canonical_cmp);
    system
}

pub fn highest_root(lie_type: LieType) -> Result<RootVector> {
    positive_roots(lie_type).highest_root()
}

/// Accumulates `mult · (α_from + … + α_to)` into `v` (1-based, empty if
/// `from > to`).
fn add_chain(v: &mut [i32], from: usize, to: usize, mult: i32) {
    for i in from..=to {
        if i >= 1 {
            v[i - 1] += mult;
        }
    }
}

/// Positive roots from the orthonormal `ε`-models, converted to
/// simple-root coefficients by closed-form identities.
///
/// Supported: `A_l`, `B_l`, `C_l`, `D_l`, `E_6`. This is an independent
/// route to the same sets [`positive_roots`] produces.
pub fn epsilon_realization(lie_type: LieType) -> Result<BTreeSet<RootVector>> {
    let l = lie_type.rank();
    let mut out = BTreeSet::new();
    let mut push = |v: Vec<i32>| {
        out.insert(RootVector(v));
    };
    match lie_type.family() {
        Family::A => {
            // ε_i − ε_j = α_i + … + α_{j−1}, 1 ≤ i < j ≤ l+1
            for i in 1..=l + 1 {
                for j in i + 1..=l + 1 {
                    let mut v = vec![0; l];
                    add_chain(&mut v, i, j - 1, 1);
                    push(v);
                }
            }
        }
        Family::B => {
            for i in 1..=l {
                // ε_i = α_i + … + α_l
                let mut v = vec![0; l];
                add_chain(&mut v, i, l, 1);
                push(v);
                for j in i + 1..=l {
                    // ε_i − ε_j = α_i + … + α_{j−1}
                    let mut minus = vec![0; l];
                    add_chain(&mut minus, i, j - 1, 1);
                    push(minus);
                    // ε_i + ε_j = α_i + … + α_{j−1} + 2(α_j + … + α_l)
                    let mut plus = vec![0; l];
                    add_chain(&mut plus, i, j - 1, 1);
                    add_chain(&mut plus, j, l, 2);
                    push(plus);
                }
            }
        }
        Family::C => {
            for i in 1..=l {
                // 2ε_i = 2(α_i + … + α_{l−1}) + α_l
                let mut v = vec![0; l];
                add_chain(&mut v, i, l - 1, 2);
                v[l - 1] += 1;
                push(v);
                for j in i + 1..=l {
                    let mut minus = vec![0; l];
                    add_chain(&mut minus, i, j - 1, 1);
                    push(minus);
                    // ε_i + ε_j = α_i + … + α_{j−1} + 2(α_j + … + α_{l−1}) + α_l
                    let mut plus = vec![0; l];
                    add_chain(&mut plus, i, j - 1, 1);
                    add_chain(&mut plus, j, l - 1, 2);
                    plus[l - 1] += 1;
                    push(plus);
                }
            }
        }
        Family::D => {
            for i in 1..=l {
                for j in i + 1..=l {
                    let mut minus = vec![0; l];
                    add_chain(&mut minus, i, j - 1, 1);
                    push(minus);
                    // ε_i + ε_j = α_i + … + α_{l−2} + α_j + … + α_l
                    let mut plus = vec![0; l];
                    add_chain(&mut plus, i, l - 2, 1);
                    add_chain(&mut plus, j, l, 1);
                    push(plus);
                }
            }
        }
        Family::E if l == 6 => {
            for v in e6_epsilon_roots() {
                push(v);
            }
        }
        _ => return Err(Error::Unsupported(lie_type)),
    }
    Ok(out)
}

/// `E_6` inside `R^6` with simple roots `β_i = ε_i − ε_{i+1}` (i ≤ 5) and
/// `β_6 = ε_4 + ε_5 + ε_6`. Positive roots are `ε_i − ε_j`,
/// `ε_i + ε_j + ε_k` and `Σε`. In the `β` basis the chain is
/// `β_1 … β_5` with `β_6` on `β_3`; relabelled onto the E-series numbering
/// `β_1 → α_1, β_2 → α_3, β_3 → α_4, β_4 → α_5, β_5 → α_6, β_6 → α_2`.
fn e6_epsilon_roots() -> Vec<Vec<i32>> {
    const RELABEL: [usize; 6] = [1, 3, 4, 5, 6, 2];

    // ε_a − ε_b in the β basis, for a ≤ b.
    let diff = |v: &mut [i32; 6], a: usize, b: usize| {
        for m in a..b {
            v[m - 1] += 1;
        }
    };

    let mut in_beta: Vec<[i32; 6]> = Vec::new();
    for i in 1..=6 {
        for j in i + 1..=6 {
            let mut v = [0; 6];
            diff(&mut v, i, j);
            in_beta.push(v);
        }
    }
    // ε_i + ε_j + ε_k = β_6 + (ε_i − ε_4) + (ε_j − ε_5) + (ε_k − ε_6)
    for i in 1..=4 {
        for j in i + 1..=5 {
            for k in j + 1..=6 {
                let mut v = [0; 6];
                v[5] += 1;
                diff(&mut v, i, 4);
                diff(&mut v, j, 5);
                diff(&mut v, k, 6);
                in_beta.push(v);
            }
        }
    }
    // Σε = (ε_1 + ε_2 + ε_3) + β_6
    let mut total = [0; 6];
    total[5] += 2;
    diff(&mut total, 1, 4);
    diff(&mut total, 2, 5);
    diff(&mut total, 3, 6);
    in_beta.push(total);

    in_beta
        .into_iter()
        .map(|b| {
            let mut v = vec![0; 6];
            for (idx, &target) in RELABEL.iter().enumerate() {
                v[target - 1] = b[idx];
            }
            v
        })
        .collect()
}
