//! Irreducible reduced root systems of types A–G.
//!
//! Nodes are numbered 1..=rank following Bourbaki's plates. Roots and weights
//! are stored in the basis of simple roots with exact rational coordinates.
//! The Cartan matrix entry `cartan[i][j]` is `⟨α_j, α_i^∨⟩`, so the pairing of
//! a weight with coordinates `c` against the coroot `α_i^∨` is `(cartan·c)_i`.

mod irrep;
mod weights;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{format_rational, parse_rational};
use crate::Rational;

pub use irrep::{weight_support, weights_of_irrep, WeightMultiplicity, IRREP_MAX_RANK};
pub use weights::{apply_permutation, NodePermutation};

/// A node of a Dynkin diagram, numbered from 1.
pub type Node = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("invalid rank {rank} for type {family} (allowed: {allowed})")]
    InvalidRank { family: Family, rank: usize, allowed: &'static str },
    #[error("bad root system token {0:?} (expected a letter A-G followed by a rank, e.g. D5)")]
    BadToken(String),
    #[error("length mismatch: expected {expected} coordinates, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("weight is not dominant: Dynkin labels must be nonnegative integers")]
    NotDominant,
    #[error("rank {rank} exceeds the cap of {max} for weight-system enumeration")]
    RankTooLarge { rank: usize, max: usize },
    #[error("not a permutation of 1..={0}")]
    BadPermutation(usize),
    #[error("root system data does not match type {0}: {1}")]
    Inconsistent(RootSystemType, &'static str),
    #[error(transparent)]
    Parse(#[from] crate::scalar::ParseScalarError),
}

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

impl Family {
    pub const ALL: [Family; 7] = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    fn allowed_ranks(self) -> &'static str {
        match self {
            Family::A => "n >= 1",
            Family::B | Family::C => "n >= 2",
            Family::D => "n >= 3",
            Family::E => "6, 7 or 8",
            Family::F => "4",
            Family::G => "2",
        }
    }

    fn rank_ok(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 3,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }

    /// Whether the family comes in a series indexed by an arbitrary rank.
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = RootSystemError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(RootSystemError::BadToken(s.to_string())),
        }
    }
}

/// A Cartan–Killing type such as `D5`. Rank bounds are enforced on
/// construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    family: Family,
    rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        if family.rank_ok(rank) {
            Ok(RootSystemType { family, rank })
        } else {
            Err(RootSystemError::InvalidRank { family, rank, allowed: family.allowed_ranks() })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `D3` is the same diagram as `A3` (with node 1 of D3 in the middle).
    pub fn alias_warning(&self) -> Option<&'static str> {
        (self.family == Family::D && self.rank == 3)
            .then_some("D3 is isomorphic to A3; Bourbaki D-numbering is used (node 1 is the middle node)")
    }

    /// Every type in the test range A1–A8, B2–B8, C2–C8, D3–D8, E6–E8, F4, G2.
    pub fn test_range() -> Vec<RootSystemType> {
        let mut out = Vec::new();
        for (family, ranks) in [
            (Family::A, 1..=8),
            (Family::B, 2..=8),
            (Family::C, 2..=8),
            (Family::D, 3..=8),
            (Family::E, 6..=8),
            (Family::F, 4..=4),
            (Family::G, 2..=2),
        ] {
            out.extend(ranks.map(|n| RootSystemType { family, rank: n }));
        }
        out
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = RootSystemError;

    /// Parses tokens of the form `[A-G][0-9]+`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootSystemError::BadToken(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let family: Family = letter.to_string().parse().map_err(|_| bad())?;
        let rank: usize = digits.parse().map_err(|_| bad())?;
        RootSystemType::new(family, rank)
    }
}

/// A vector of exact rational coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        WeightVector(coords)
    }

    pub fn zero(rank: usize) -> Self {
        WeightVector(vec![Rational::zero(); rank])
    }

    /// The simple root `α_node`.
    pub fn simple_root(rank: usize, node: Node) -> Self {
        let mut v = Self::zero(rank);
        v.0[node - 1] = Rational::one();
        v
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        WeightVector(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coefficient of `α_node`.
    pub fn coeff(&self, node: Node) -> &Rational {
        &self.0[node - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn check_len(&self, other: &Self) -> Result<(), RootSystemError> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(RootSystemError::LengthMismatch { expected: self.len(), found: other.len() })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RootSystemError> {
        self.check_len(other)?;
        Ok(WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RootSystemError> {
        self.check_len(other)?;
        Ok(WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        WeightVector(self.0.iter().map(|a| a * s).collect())
    }

    /// Coordinates as `"p/q"` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(coords: &[S]) -> Result<Self, RootSystemError> {
        coords
            .iter()
            .map(|s| parse_rational(s.as_ref()).map_err(RootSystemError::from))
            .collect::<Result<Vec<_>, _>>()
            .map(WeightVector)
    }

    /// All coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub(crate) fn to_integers(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| i64::try_from(c.to_integer()).ok()).flatten())
            .collect()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// An irreducible root system with its simple and positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    ty: RootSystemType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<WeightVector>,
    highest_root: WeightVector,
}

/// Bourbaki Cartan matrix, `cartan[i][j] = ⟨α_j, α_i^∨⟩`.
fn cartan_matrix(ty: RootSystemType) -> Vec<Vec<i64>> {
    let n = ty.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match ty.family {
        Family::A | Family::B | Family::C => (1..n).for_each(|i| link(i, i + 1)),
        Family::D => {
            (1..n - 1).for_each(|i| link(i, i + 1));
            link(n - 2, n);
        }
        Family::E => {
            link(1, 3);
            link(2, 4);
            (3..n).for_each(|i| link(i, i + 1));
        }
        Family::F => (1..4).for_each(|i| link(i, i + 1)),
        Family::G => link(1, 2),
    }
    match ty.family {
        // α_n short
        Family::B => a[n - 1][n - 2] = -2,
        // α_n long
        Family::C => a[n - 2][n - 1] = -2,
        // α_1, α_2 long; α_3, α_4 short
        Family::F => a[2][1] = -2,
        // α_1 short, α_2 long
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// Positive roots by closure under root strings, in order of increasing
/// height. For a root `β` and simple root `α_i`, the `α_i`-string through
/// `β` is `β − pα_i, …, β + qα_i` with `p − q = ⟨β, α_i^∨⟩`; `β + α_i` is a
/// root iff `q > 0`.
fn positive_root_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut next = 0;
    while next < roots.len() {
        let beta = roots[next].clone();
        next += 1;
        for i in 0..n {
            let mut p = 0;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if !seen.contains(&down) {
                    break;
                }
                p += 1;
            }
            let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
            if p - pairing > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if seen.insert(up.clone()) {
                    roots.push(up);
                }
            }
        }
    }
    roots.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then_with(|| b.cmp(a)));
    roots
}

impl RootSystem {
    pub fn build(ty: RootSystemType) -> Self {
        let cartan = cartan_matrix(ty);
        let roots = positive_root_closure(&cartan);
        let highest = roots.last().cloned().expect("a root system has roots");
        RootSystem {
            ty,
            cartan,
            positive_roots: roots.iter().map(|r| WeightVector::from_integers(r)).collect(),
            highest_root: WeightVector::from_integers(&highest),
        }
    }

    /// Builds from a family and rank, checking the rank bounds.
    pub fn of(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        RootSystemType::new(family, rank).map(Self::build)
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn family(&self) -> Family {
        self.ty.family
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> Vec<WeightVector> {
        (1..=self.rank()).map(|i| WeightVector::simple_root(self.rank(), i)).collect()
    }

    pub fn positive_roots(&self) -> &[WeightVector] {
        &self.positive_roots
    }

    /// The positive root dominating every other positive root coefficientwise.
    pub fn highest_root(&self) -> &WeightVector {
        &self.highest_root
    }

    /// `⟨w, α_node^∨⟩`
    pub fn coroot_pairing(&self, w: &WeightVector, node: Node) -> Rational {
        self.cartan[node - 1]
            .iter()
            .zip(w.coords())
            .map(|(&a, c)| c * Rational::from_integer(a.into()))
            .sum()
    }

    /// Coordinates in the fundamental-weight basis (the Dynkin labels).
    pub fn dynkin_labels(&self, w: &WeightVector) -> Result<Vec<Rational>, RootSystemError> {
        self.check_len(w)?;
        Ok((1..=self.rank()).map(|i| self.coroot_pairing(w, i)).collect())
    }

    pub(crate) fn check_len(&self, w: &WeightVector) -> Result<(), RootSystemError> {
        if w.len() == self.rank() {
            Ok(())
        } else {
            Err(RootSystemError::LengthMismatch { expected: self.rank(), found: w.len() })
        }
    }

    /// Whether `w` is a root (positive or negative).
    pub fn is_root(&self, w: &WeightVector) -> bool {
        let neg = w.scale(&-Rational::one());
        self.positive_roots.iter().any(|r| r == w || *r == neg)
    }
}

/// JSON form: `{"family":"D","rank":5,"cartan":[[...]],"highest_root":["1","2","2","1","1"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub family: Family,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub highest_root: Vec<String>,
}

impl From<&RootSystem> for RootSystemJson {
    fn from(rs: &RootSystem) -> Self {
        RootSystemJson {
            family: rs.family(),
            rank: rs.rank(),
            cartan: rs.cartan.clone(),
            highest_root: rs.highest_root.to_strings(),
        }
    }
}

impl TryFrom<RootSystemJson> for RootSystem {
    type Error = RootSystemError;

    /// Rebuilds from family and rank and checks the recorded data agrees.
    fn try_from(j: RootSystemJson) -> Result<Self, Self::Error> {
        let rs = RootSystem::of(j.family, j.rank)?;
        if j.cartan != rs.cartan {
            return Err(RootSystemError::Inconsistent(rs.ty, "cartan matrix"));
        }
        if WeightVector::from_strings(&j.highest_root)? != rs.highest_root {
            return Err(RootSystemError::Inconsistent(rs.ty, "highest root"));
        }
        Ok(rs)
    }
}

impl Serialize for RootSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RootSystemJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RootSystemJson::deserialize(d)?;
        RootSystem::try_from(j).map_err(serde::de::Error::custom)
    }
}
