//! Weight systems of irreducible representations by Freudenthal's formula.
//!
//! Only meant for small ranks, where it serves as an independent check on
//! statements phrased through the highest weight alone.

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};

use super::{RootSystem, RootSystemError, WeightVector};
use crate::Rational;

pub const IRREP_MAX_RANK: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiplicity {
    pub weight: WeightVector,
    pub multiplicity: u64,
}

/// Integer Dynkin labels of a dominant weight, or `NotDominant`.
fn dominant_labels(rs: &RootSystem, highest: &WeightVector) -> Result<Vec<i64>, RootSystemError> {
    if rs.rank() > IRREP_MAX_RANK {
        return Err(RootSystemError::RankTooLarge { rank: rs.rank(), max: IRREP_MAX_RANK });
    }
    rs.dynkin_labels(highest)?
        .iter()
        .map(|l| {
            if l.is_integer() && !l.is_negative() {
                i64::try_from(l.to_integer()).map_err(|_| RootSystemError::NotDominant)
            } else {
                Err(RootSystemError::NotDominant)
            }
        })
        .collect()
}

/// Weights of `V(λ)` keyed by depth `λ − μ` in simple-root coordinates.
///
/// The weight set is the saturated set generated by `λ`: close under
/// `μ ↦ μ − jα_i` for `1 ≤ j ≤ ⟨μ, α_i^∨⟩`.
fn saturate(rs: &RootSystem, labels: &[i64]) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let cartan = rs.cartan();
    let label_of = |depth: &[i64]| -> Vec<i64> {
        (0..n)
            .map(|k| labels[k] - (0..n).map(|i| cartan[k][i] * depth[i]).sum::<i64>())
            .collect()
    };
    let start = vec![0i64; n];
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::from([(start.clone(), ())]);
    let mut out = vec![start];
    let mut next = 0;
    while next < out.len() {
        let depth = out[next].clone();
        next += 1;
        let l = label_of(&depth);
        for i in 0..n {
            for j in 1..=l[i].max(0) {
                let mut d = depth.clone();
                d[i] += j;
                if seen.insert(d.clone(), ()).is_none() {
                    out.push(d);
                }
            }
        }
    }
    out.sort_by_key(|d| (d.iter().sum::<i64>(), d.clone()));
    out
}

fn to_weight(highest: &WeightVector, depth: &[i64]) -> WeightVector {
    highest
        .checked_sub(&WeightVector::from_integers(depth))
        .expect("depth has the rank's length")
}

/// The distinct weights of the irreducible representation with highest
/// weight `highest`, in order of increasing depth below it.
pub fn weight_support(rs: &RootSystem, highest: &WeightVector) -> Result<Vec<WeightVector>, RootSystemError> {
    let labels = dominant_labels(rs, highest)?;
    Ok(saturate(rs, &labels).iter().map(|d| to_weight(highest, d)).collect())
}

/// All weights with multiplicities, via Freudenthal's recursion
///
/// `((λ+ρ,λ+ρ) − (μ+ρ,μ+ρ))·m(μ) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα)·(μ+kα, α)`.
pub fn weights_of_irrep(
    rs: &RootSystem,
    highest: &WeightVector,
) -> Result<Vec<WeightMultiplicity>, RootSystemError> {
    let labels = dominant_labels(rs, highest)?;
    let depths = saturate(rs, &labels);
    let rho = rs.rho();
    let shifted = highest.checked_add(&rho)?;
    let top = rs.inner_product(&shifted, &shifted);
    let roots: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .map(|r| r.to_integers().expect("roots are integral"))
        .collect();
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    let mut out = Vec::with_capacity(depths.len());
    for depth in &depths {
        let mu = to_weight(highest, depth);
        let m = if depth.iter().all(|&d| d == 0) {
            1
        } else {
            let mut num = Rational::zero();
            for (root, root_w) in roots.iter().zip(rs.positive_roots()) {
                // μ + kα has depth `depth − kα`; stop once it leaves the weight set.
                let mut k = 1;
                loop {
                    let d: Vec<i64> = depth.iter().zip(root).map(|(a, b)| a - k * b).collect();
                    if d.iter().any(|&x| x < 0) {
                        break;
                    }
                    if let Some(&mk) = mult.get(&d) {
                        let up = to_weight(highest, &d);
                        num += Rational::from_integer(mk.into()) * rs.inner_product(&up, root_w);
                    }
                    k += 1;
                }
            }
            let mrho = mu.checked_add(&rho)?;
            let den = &top - rs.inner_product(&mrho, &mrho);
            assert!(den.is_positive(), "Freudenthal denominator must be positive");
            let m = Rational::from_integer(2.into()) * num / den;
            assert!(m.is_integer() && !m.is_negative(), "multiplicities are nonnegative integers");
            u64::try_from(m.to_integer()).expect("multiplicity fits in u64")
        };
        mult.insert(depth.clone(), m);
        out.push(WeightMultiplicity { weight: mu, multiplicity: m });
    }
    Ok(out)
}
