//! Rational Hodge structures through their Hodge numbers.
//!
//! A [`HodgeStructure`] records only `h^{p,q} = dim V^{p,q}`; it is the data
//! the classification arguments need. Questions about actual subspaces
//! (period domains, Siegel space) live in [`period`].

pub mod period;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use period::{period_domain_membership, siegel_membership, FilteredSpace, FilteredSpaceJson, PeriodVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HodgeError {
    #[error("h^{{{p},{q}}} != h^{{{q},{p}}}: Hodge numbers must be symmetric")]
    RealityViolation { p: i32, q: i32 },
    #[error("filtration of weight {weight} is not opposed at p = {p}: dim F^p + dim F^(m+1-p) != dim V_m")]
    NotOpposed { weight: i32, p: i32 },
    #[error("the level of the zero Hodge structure is undefined")]
    EmptyStructure,
    #[error("bad filtration: {0}")]
    BadFiltration(String),
    #[error("the form is degenerate or has the wrong size")]
    DegenerateForm,
    #[error("the form is not alternating")]
    NotAlternating,
    #[error("J is not a complex structure: J² != -1")]
    NotComplexStructure,
    #[error("bad matrix entry: {0}")]
    BadEntry(String),
}

/// Hodge numbers `(p, q) ↦ h^{p,q}`, symmetric under `(p, q) ↦ (q, p)`.
/// Zero entries are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct HodgeStructure {
    numbers: BTreeMap<(i32, i32), u64>,
}

/// Builds the Hodge structure on which `h(z)` acts on the `(p, q)` part as
/// `z^{-p} z̄^{-q}`, from the dimensions of those parts.
pub fn hodge_from_h(parts: &BTreeMap<(i32, i32), u64>) -> Result<HodgeStructure, HodgeError> {
    HodgeStructure::new(parts.iter().map(|(&k, &v)| (k, v)))
}

impl HodgeStructure {
    pub fn new(parts: impl IntoIterator<Item = ((i32, i32), u64)>) -> Result<Self, HodgeError> {
        let mut numbers = BTreeMap::new();
        for (k, v) in parts {
            if v > 0 {
                *numbers.entry(k).or_insert(0) += v;
            }
        }
        for (&(p, q), &v) in &numbers {
            if numbers.get(&(q, p)) != Some(&v) {
                return Err(HodgeError::RealityViolation { p, q });
            }
        }
        Ok(HodgeStructure { numbers })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `H_1` of an elliptic curve: type `{(−1,0),(0,−1)}`.
    pub fn elliptic_h1() -> Self {
        HodgeStructure { numbers: BTreeMap::from([((-1, 0), 1), ((0, -1), 1)]) }
    }

    pub fn h(&self, p: i32, q: i32) -> u64 {
        self.numbers.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn numbers(&self) -> &BTreeMap<(i32, i32), u64> {
        &self.numbers
    }

    pub fn support(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        self.numbers.keys().copied()
    }

    pub fn dim(&self) -> u64 {
        self.numbers.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.numbers.is_empty()
    }

    /// `m ↦ dim V_m`
    pub fn weight_dims(&self) -> BTreeMap<i32, u64> {
        let mut out = BTreeMap::new();
        for (&(p, q), &v) in &self.numbers {
            *out.entry(p + q).or_insert(0) += v;
        }
        out
    }

    /// The weight, if the structure is pure and nonzero.
    pub fn pure_weight(&self) -> Option<i32> {
        let w = self.weight_dims();
        (w.len() == 1).then(|| *w.keys().next().unwrap())
    }

    pub fn tate(m: i32) -> Self {
        HodgeStructure { numbers: BTreeMap::from([((-m, -m), 1)]) }
    }

    pub fn dual(&self) -> Self {
        HodgeStructure { numbers: self.numbers.iter().map(|(&(p, q), &v)| ((-p, -q), v)).collect() }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut numbers = self.numbers.clone();
        for (&k, &v) in &other.numbers {
            *numbers.entry(k).or_insert(0) += v;
        }
        HodgeStructure { numbers }
    }

    /// `h^{p,q} = Σ h1^{a,b}·h2^{p−a,q−b}`
    pub fn tensor(&self, other: &Self) -> Self {
        let mut numbers = BTreeMap::new();
        for (&(a, b), &x) in &self.numbers {
            for (&(c, d), &y) in &other.numbers {
                *numbers.entry((a + c, b + d)).or_insert(0) += x * y;
            }
        }
        HodgeStructure { numbers }
    }

    /// `End(V) = V^∨ ⊗ V`
    pub fn end_structure(&self) -> Self {
        self.dual().tensor(self)
    }

    /// Weight gradation together with the Hodge filtration
    /// `F^p = ⊕_{p′ ≥ p} V^{p′,q′}` on each graded piece.
    pub fn to_filtration(&self) -> FiltrationProfile {
        let mut weights = BTreeMap::new();
        for (m, dim) in self.weight_dims() {
            let ps: Vec<i32> = self.support().filter(|&(p, q)| p + q == m).map(|(p, _)| p).collect();
            let (lo, hi) = (*ps.iter().min().unwrap(), *ps.iter().max().unwrap());
            let dims = (lo..=hi)
                .map(|p| (p..=hi).map(|pp| self.h(pp, m - pp)).sum())
                .collect();
            weights.insert(m, WeightFiltration::normalized(dim, lo, dims));
        }
        FiltrationProfile { weights }
    }

    /// The inverse of [`HodgeStructure::to_filtration`]:
    /// `h^{p,m−p} = dim F^p − dim F^{p+1}` on `V_m`, after checking that
    /// `dim F^p + dim F^{m+1−p} = dim V_m` for every `p`.
    pub fn from_filtration(fp: &FiltrationProfile) -> Result<Self, HodgeError> {
        let mut numbers = BTreeMap::new();
        for (&m, wf) in &fp.weights {
            let lo = wf.start.min(m + 1 - wf.end()) - 1;
            let hi = wf.end().max(m + 1 - wf.start) + 1;
            for p in lo..=hi {
                if wf.dim_f(p) + wf.dim_f(m + 1 - p) != wf.dim {
                    return Err(HodgeError::NotOpposed { weight: m, p });
                }
            }
            for p in lo..=hi {
                let h = wf.dim_f(p) - wf.dim_f(p + 1);
                if h > 0 {
                    numbers.insert((p, m - p), h);
                }
            }
        }
        HodgeStructure::new(numbers)
    }

    /// `m ↦ (−1)^m`, the action of `C²` on `V_m`.
    pub fn weil_square_sign(&self) -> BTreeMap<i32, i8> {
        self.weight_dims()
            .keys()
            .map(|&m| (m, if m.rem_euclid(2) == 0 { 1 } else { -1 }))
            .collect()
    }

    /// `max |p − q|` over the support.
    pub fn level(&self) -> Result<u32, HodgeError> {
        self.support()
            .map(|(p, q)| p.abs_diff(q))
            .max()
            .ok_or(HodgeError::EmptyStructure)
    }

    /// Support inside `{(1,−1), (0,0), (−1,1)}`.
    pub fn sv1_check(&self) -> bool {
        self.support().all(|k| matches!(k, (1, -1) | (0, 0) | (-1, 1)))
    }

    /// Level at most one in the strict sense: either a sum of copies of one
    /// `Q(m)`, or of type `{(p, p+1), (p+1, p)}` for a single `p`.
    pub fn is_level_at_most_one(&self) -> bool {
        let support: Vec<(i32, i32)> = self.support().collect();
        match support.as_slice() {
            [] => true,
            [(p, q)] => p == q,
            [(a, b), (c, d)] => a + 1 == *c && b == c && d == a,
            _ => false,
        }
    }
}

/// `C` acts on `V^{p,q}` as `i^{q−p}`; returns `(q − p) mod 4`.
pub fn weil_exponent(p: i32, q: i32) -> u8 {
    (q - p).rem_euclid(4) as u8
}

impl fmt::Display for HodgeStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.numbers.iter().map(|(&(p, q), &v)| format!("({p},{q}):{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The filtration on one weight piece `V_m`: `dim F^p` is `dim` for
/// `p < start`, `dims[p − start]` inside the recorded window, and 0 after it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightFiltration {
    dim: u64,
    start: i32,
    dims: Vec<u64>,
}

impl WeightFiltration {
    /// Validates that the dimensions weakly decrease and are bounded by `dim`.
    pub fn new(dim: u64, start: i32, dims: Vec<u64>) -> Result<Self, HodgeError> {
        if dims.iter().any(|&d| d > dim) {
            return Err(HodgeError::BadFiltration(format!("dim F^p exceeds dim V_m = {dim}")));
        }
        if dims.windows(2).any(|w| w[1] > w[0]) {
            return Err(HodgeError::BadFiltration("dim F^p must weakly decrease in p".into()));
        }
        Ok(Self::normalized(dim, start, dims))
    }

    fn normalized(dim: u64, mut start: i32, mut dims: Vec<u64>) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        let lead = dims.iter().take_while(|&&d| d == dim).count();
        dims.drain(..lead);
        start += lead as i32;
        if dims.is_empty() {
            // a single jump from dim to 0
            start = if lead > 0 { start } else { start };
        }
        WeightFiltration { dim, start, dims }
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    fn end(&self) -> i32 {
        self.start + self.dims.len() as i32
    }

    /// `dim F^p`
    pub fn dim_f(&self, p: i32) -> u64 {
        if p < self.start {
            self.dim
        } else if p >= self.end() {
            0
        } else {
            self.dims[(p - self.start) as usize]
        }
    }
}

/// A weight gradation with a Hodge filtration on each graded piece.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FiltrationProfile {
    weights: BTreeMap<i32, WeightFiltration>,
}

impl FiltrationProfile {
    pub fn new(weights: BTreeMap<i32, WeightFiltration>) -> Self {
        FiltrationProfile { weights: weights.into_iter().filter(|(_, w)| w.dim > 0).collect() }
    }

    pub fn weights(&self) -> &BTreeMap<i32, WeightFiltration> {
        &self.weights
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn dim_v(&self, m: i32) -> u64 {
        self.weights.get(&m).map_or(0, |w| w.dim)
    }

    /// `dim F^p` inside `V_m`.
    pub fn dim_f(&self, m: i32, p: i32) -> u64 {
        self.weights.get(&m).map_or(0, |w| w.dim_f(p))
    }
}

#[derive(Serialize, Deserialize)]
struct BigradingEntry {
    p: i32,
    q: i32,
    dim: u64,
}

/// JSON form: `{"bigrading":[{"p":-1,"q":0,"dim":1},...]}`.
#[derive(Serialize, Deserialize)]
struct HodgeStructureJson {
    bigrading: Vec<BigradingEntry>,
}

impl Serialize for HodgeStructure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        HodgeStructureJson {
            bigrading: self.numbers.iter().map(|(&(p, q), &dim)| BigradingEntry { p, q, dim }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HodgeStructure {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = HodgeStructureJson::deserialize(d)?;
        HodgeStructure::new(j.bigrading.into_iter().map(|e| ((e.p, e.q), e.dim))).map_err(serde::de::Error::custom)
    }
}
