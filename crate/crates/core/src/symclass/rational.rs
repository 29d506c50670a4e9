//! Real factors of a group over Q and rational families of symplectic nodes.

use std::collections::BTreeSet;

use super::{ClassError, SpecialPair};
use crate::rootsys::{Family, Node, RootSystem, RootSystemType};

/// How `h̄` looks on one real factor `H_v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// `H_v` compact, `h̄_v` trivial
    Compact,
    /// `H_v` noncompact, `h̄_v` attached to this special node
    Noncompact(Node),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RealFactorSpec {
    ty: RootSystemType,
    flavor: Flavor,
}

impl RealFactorSpec {
    pub fn new(ty: RootSystemType, flavor: Flavor) -> Result<Self, ClassError> {
        if let Flavor::Noncompact(s) = flavor {
            SpecialPair::of(ty, s)?;
        }
        Ok(RealFactorSpec { ty, flavor })
    }

    pub fn compact(ty: RootSystemType) -> Self {
        RealFactorSpec { ty, flavor: Flavor::Compact }
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn special_node(&self) -> Option<Node> {
        match self.flavor {
            Flavor::Compact => None,
            Flavor::Noncompact(s) => Some(s),
        }
    }

    /// `D_n^R`: type `D_n`, `n ≥ 5`, noncompact at node 1.
    pub fn is_d_real(&self) -> bool {
        self.ty.family() == Family::D && self.ty.rank() >= 5 && self.special_node() == Some(1)
    }

    /// `D_n^H`: type `D_n`, `n ≥ 5`, noncompact at node `n − 1` or `n`.
    pub fn is_d_quaternionic(&self) -> bool {
        let n = self.ty.rank();
        self.ty.family() == Family::D
            && n >= 5
            && matches!(self.special_node(), Some(s) if s == n - 1 || s == n)
    }
}

fn common_type(factors: &[RealFactorSpec]) -> Result<Option<RootSystemType>, ClassError> {
    let Some(first) = factors.first() else {
        return Ok(None);
    };
    match factors.iter().find(|f| f.ty != first.ty) {
        Some(other) => Err(ClassError::InhomogeneousFactors(first.ty, other.ty)),
        None => Ok(Some(first.ty)),
    }
}

/// Whether the real factors of one almost-simple group mix the flavors
/// `D_n^R` and `D_n^H` (`n ≥ 5`). No diagram automorphism of `D_n`, `n ≥ 5`,
/// carries node 1 to `n − 1` or `n`, so such a group has no rational
/// symplectic representation.
pub fn is_mixed_type_d(factors: &[RealFactorSpec]) -> Result<bool, ClassError> {
    common_type(factors)?;
    Ok(factors.iter().any(RealFactorSpec::is_d_real) && factors.iter().any(RealFactorSpec::is_d_quaternionic))
}

/// A node of the Dynkin diagram `D = ⊔_v D_v` of `H_C`: node `node` of the
/// diagram of real factor `factor` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramNode {
    pub factor: usize,
    pub node: Node,
}

/// A collection `S` of subsets of `D` together with the Galois action on `D`,
/// given by permutation generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeFamily {
    factors: Vec<RealFactorSpec>,
    generators: Vec<Vec<DiagramNode>>,
    subsets: BTreeSet<BTreeSet<DiagramNode>>,
}

impl NodeFamily {
    /// `generators[g]` lists the images of the diagram nodes in their
    /// canonical order (factor by factor, nodes ascending); see
    /// [`NodeFamily::diagram_nodes`]. Each generator must be a bijection that
    /// maps every factor's diagram onto a single factor's diagram.
    pub fn new(
        factors: Vec<RealFactorSpec>,
        generators: Vec<Vec<DiagramNode>>,
        subsets: Vec<BTreeSet<DiagramNode>>,
    ) -> Result<Self, ClassError> {
        common_type(&factors)?;
        let nf = NodeFamily { factors, generators, subsets: subsets.into_iter().collect() };
        let all = nf.diagram_nodes();
        let all_set: BTreeSet<DiagramNode> = all.iter().copied().collect();
        for s in &nf.subsets {
            if let Some(bad) = s.iter().find(|d| !all_set.contains(d)) {
                return Err(ClassError::BadDiagramNode { factor: bad.factor, node: bad.node });
            }
        }
        for (g, images) in nf.generators.iter().enumerate() {
            if images.len() != all.len() || images.iter().copied().collect::<BTreeSet<_>>() != all_set {
                return Err(ClassError::BadGaloisAction(format!("generator {g} is not a permutation of D")));
            }
            for v in 0..nf.factors.len() {
                let targets: BTreeSet<usize> = all
                    .iter()
                    .zip(images)
                    .filter(|(d, _)| d.factor == v)
                    .map(|(_, im)| im.factor)
                    .collect();
                if targets.len() != 1 {
                    return Err(ClassError::BadGaloisAction(format!(
                        "generator {g} splits the diagram of factor {v}"
                    )));
                }
            }
        }
        Ok(nf)
    }

    pub fn factors(&self) -> &[RealFactorSpec] {
        &self.factors
    }

    pub fn subsets(&self) -> &BTreeSet<BTreeSet<DiagramNode>> {
        &self.subsets
    }

    pub fn diagram_nodes(&self) -> Vec<DiagramNode> {
        self.factors
            .iter()
            .enumerate()
            .flat_map(|(factor, f)| (1..=f.ty.rank()).map(move |node| DiagramNode { factor, node }))
            .collect()
    }

    /// Indices of the noncompact real factors.
    pub fn noncompact_factors(&self) -> BTreeSet<usize> {
        (0..self.factors.len()).filter(|&v| self.factors[v].special_node().is_some()).collect()
    }

    fn act(&self, g: &[DiagramNode], s: &BTreeSet<DiagramNode>) -> BTreeSet<DiagramNode> {
        let all = self.diagram_nodes();
        s.iter()
            .map(|d| g[all.iter().position(|x| x == d).expect("validated node")])
            .collect()
    }

    fn is_symplectic_node(&self, d: &DiagramNode) -> bool {
        let f = &self.factors[d.factor];
        match f.special_node() {
            Some(s) => SpecialPair::new(RootSystem::build(f.ty), s)
                .and_then(|p| p.is_symplectic_weight(d.node))
                .unwrap_or(false),
            None => false,
        }
    }
}

/// Checks that
///
/// (a) every `S` meets the noncompact part of `D` in nothing or in a single
///     symplectic node of one noncompact factor, and
/// (b) the collection is stable under the Galois action and contains a
///     nonempty subset.
pub fn validate_node_family(nf: &NodeFamily) -> bool {
    let nc = nf.noncompact_factors();
    let condition_a = nf.subsets.iter().all(|s| {
        let hits: Vec<&DiagramNode> = s.iter().filter(|d| nc.contains(&d.factor)).collect();
        match hits.as_slice() {
            [] => true,
            [d] => nf.is_symplectic_node(d),
            _ => false,
        }
    });
    let nonempty = nf.subsets.iter().any(|s| !s.is_empty());
    let stable = nf
        .generators
        .iter()
        .all(|g| nf.subsets.iter().all(|s| nf.subsets.contains(&nf.act(g, s))));
    condition_a && nonempty && stable
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    fn nc(t: &str, s: Node) -> RealFactorSpec {
        RealFactorSpec::new(ty(t), Flavor::Noncompact(s)).unwrap()
    }

    fn dn(factor: usize, node: Node) -> DiagramNode {
        DiagramNode { factor, node }
    }

    #[test]
    fn mixed_type_examples() {
        assert!(is_mixed_type_d(&[nc("D5", 1), nc("D5", 5)]).unwrap());
        assert!(!is_mixed_type_d(&[nc("D5", 1), RealFactorSpec::compact(ty("D5"))]).unwrap());
        assert!(!is_mixed_type_d(&[nc("D4", 1), nc("D4", 4)]).unwrap());
        assert!(matches!(
            is_mixed_type_d(&[nc("D5", 1), nc("D6", 6)]),
            Err(ClassError::InhomogeneousFactors(..))
        ));
        assert!(RealFactorSpec::new(ty("D5"), Flavor::Noncompact(2)).is_err());
    }

    #[test]
    fn single_noncompact_factor() {
        let f = vec![nc("C3", 3)];
        let s = vec![[dn(0, 1)].into_iter().collect()];
        let nf = NodeFamily::new(f, vec![], s).unwrap();
        assert!(validate_node_family(&nf));
    }

    #[test]
    fn two_noncompact_nodes_in_one_subset() {
        // A3 ⊔ A3, both noncompact at node 1; swapping factors.
        let f = vec![nc("A3", 1), nc("A3", 1)];
        let swap: Vec<DiagramNode> = (0..2).flat_map(|v| (1..=3).map(move |i| dn(1 - v, i))).collect();
        let both: BTreeSet<_> = [dn(0, 1), dn(1, 1)].into_iter().collect();
        let nf = NodeFamily::new(f.clone(), vec![swap.clone()], vec![both]).unwrap();
        assert!(!validate_node_family(&nf));

        let singles = vec![[dn(0, 1)].into_iter().collect(), [dn(1, 1)].into_iter().collect()];
        let nf = NodeFamily::new(f.clone(), vec![swap.clone()], singles).unwrap();
        assert!(validate_node_family(&nf));

        let lonely = vec![[dn(0, 1)].into_iter().collect()];
        let nf = NodeFamily::new(f, vec![swap], lonely).unwrap();
        assert!(!validate_node_family(&nf));
    }

    #[test]
    fn compact_nodes_are_unconstrained() {
        let f = vec![nc("B2", 1), RealFactorSpec::compact(ty("B2"))];
        let s: BTreeSet<_> = [dn(0, 2), dn(1, 1), dn(1, 2)].into_iter().collect();
        let nf = NodeFamily::new(f.clone(), vec![], vec![s]).unwrap();
        assert!(validate_node_family(&nf));
        // node 1 of B2 is not symplectic for s = 1
        let s: BTreeSet<_> = [dn(0, 1)].into_iter().collect();
        assert!(!validate_node_family(&NodeFamily::new(f.clone(), vec![], vec![s]).unwrap()));
        let empty = NodeFamily::new(f, vec![], vec![BTreeSet::new()]).unwrap();
        assert!(!validate_node_family(&empty));
    }

    #[test]
    fn malformed_actions_are_rejected() {
        let f = vec![nc("A2", 1), nc("A2", 1)];
        // maps node 1 of factor 0 to factor 1 but node 2 to factor 0
        let split = vec![dn(1, 1), dn(0, 2), dn(0, 1), dn(1, 2)];
        assert!(matches!(NodeFamily::new(f.clone(), vec![split], vec![]), Err(ClassError::BadGaloisAction(_))));
        let short = vec![dn(0, 1)];
        assert!(NodeFamily::new(f.clone(), vec![short], vec![]).is_err());
        let bad_node = vec![[dn(0, 3)].into_iter().collect()];
        assert!(matches!(NodeFamily::new(f, vec![], bad_node), Err(ClassError::BadDiagramNode { .. })));
    }
}
