//! Symplectic representations attached to a special node.
//!
//! A special node `s` determines the minuscule cocharacter `μ̄` with
//! `⟨α_s, μ̄⟩ = 1` and `⟨α_i, μ̄⟩ = 0` for the other simple roots, so
//! `⟨w, μ̄⟩` is just the `α_s`-coefficient of `w`. The fundamental weight
//! `ϖ_i` occurs in a symplectic representation iff the `α_s`-coefficient of
//! `ϖ_i + τϖ_i` is exactly 1, where `τ` is the opposition involution.

mod hodge_type;
mod rational;

use std::collections::BTreeSet;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::quotient_order;
use crate::rootsys::{Family, Node, RootSystem, RootSystemError, RootSystemType, WeightVector};
use crate::Rational;

pub use hodge_type::{hodge_type_decision, FactorInput, HodgeTypeVerdict, Isogeny, NotHodgeReason, QuotientDetail};
pub use rational::{is_mixed_type_d, validate_node_family, DiagramNode, Flavor, NodeFamily, RealFactorSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("node {node} is not a special node of {ty}")]
    NotSpecialNode { ty: RootSystemType, node: Node },
    #[error("weight index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("factors do not share a single type: {0} vs {1}")]
    InhomogeneousFactors(RootSystemType, RootSystemType),
    #[error("invalid Galois action: {0}")]
    BadGaloisAction(String),
    #[error("node {node} of factor {factor} does not exist")]
    BadDiagramNode { factor: usize, node: Node },
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// A root system together with a chosen special node `α_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialPair {
    rs: RootSystem,
    special_node: Node,
}

impl SpecialPair {
    pub fn new(rs: RootSystem, special_node: Node) -> Result<Self, ClassError> {
        if rs.special_nodes().contains(&special_node) {
            Ok(SpecialPair { rs, special_node })
        } else {
            Err(ClassError::NotSpecialNode { ty: rs.root_type(), node: special_node })
        }
    }

    pub fn of(ty: RootSystemType, special_node: Node) -> Result<Self, ClassError> {
        Self::new(RootSystem::build(ty), special_node)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn special_node(&self) -> Node {
        self.special_node
    }

    /// `⟨w, μ̄⟩`, the coefficient of `α_s` in `w`.
    pub fn mu_pairing(&self, w: &WeightVector) -> Result<Rational, ClassError> {
        if w.len() != self.rs.rank() {
            return Err(RootSystemError::LengthMismatch { expected: self.rs.rank(), found: w.len() }.into());
        }
        Ok(w.coeff(self.special_node).clone())
    }

    /// `⟨ϖ_i + τϖ_i, μ̄⟩ = 1`
    pub fn is_symplectic_weight(&self, i: Node) -> Result<bool, ClassError> {
        let rank = self.rs.rank();
        if i == 0 || i > rank {
            return Err(ClassError::IndexOutOfRange { index: i, rank });
        }
        let w = self.rs.fundamental_weight(i);
        let tw = self.rs.opposition_involution().apply(&w)?;
        Ok(self.mu_pairing(&w.checked_add(&tw)?)?.is_one())
    }

    pub fn symplectic_nodes(&self) -> SymplecticVerdict {
        let nodes: BTreeSet<Node> = (1..=self.rs.rank())
            .filter(|&i| self.is_symplectic_weight(i).expect("index in range"))
            .collect();
        let kernel_index = generated_subgroup_index(&self.rs, &nodes);
        SymplecticVerdict { faithful: kernel_index == 1, kernel_index, nodes }
    }
}

/// Index in `P/Q` of the subgroup generated by the images of `ϖ_i`, `i ∈ nodes`.
///
/// In fundamental-weight coordinates `P = Zⁿ` and `Q` is spanned by the
/// columns of the Cartan matrix (`α_j = Σ_k ⟨α_j, α_k^∨⟩ ϖ_k`), so the index
/// is the order of `Zⁿ / (Q + Σ Z·e_i)`, read off a Smith normal form.
pub fn generated_subgroup_index(rs: &RootSystem, nodes: &BTreeSet<Node>) -> u64 {
    let n = rs.rank();
    let a = rs.cartan();
    let mut generators: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|k| a[k][j]).collect()).collect();
    generators.extend(nodes.iter().map(|&i| (1..=n).map(|k| i64::from(k == i)).collect()));
    quotient_order(n, &generators).expect("the root lattice has finite index")
}

/// The outcome of the symplectic-node analysis for one special node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymplecticVerdict {
    /// Fundamental weights (by node) admitting symplectic representations.
    pub nodes: BTreeSet<Node>,
    /// The symplectic weights generate `P/Q`.
    pub faithful: bool,
    /// Index in `P/Q` of the subgroup they generate.
    pub kernel_index: u64,
}

/// On `D4` the special nodes 1, 3, 4 are permuted by triality, so all three
/// cases reduce to `s = 1`.
pub fn d4_triality_equivalence(s: Node) -> Result<Node, ClassError> {
    match s {
        1 | 3 | 4 => Ok(1),
        _ => Err(ClassError::NotSpecialNode { ty: RootSystemType::new(Family::D, 4)?, node: s }),
    }
}
