use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Family, Node, RootSystem, RootSystemError, WeightVector};
use crate::matrix::Matrix;
use crate::Rational;

/// A permutation of the nodes `1..=n` of a Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodePermutation {
    images: Vec<Node>,
}

impl NodePermutation {
    /// `images[k]` is the image of node `k + 1`.
    pub fn new(images: Vec<Node>) -> Result<Self, RootSystemError> {
        let n = images.len();
        let distinct: BTreeSet<_> = images.iter().copied().collect();
        if distinct.len() != n || images.iter().any(|&i| i == 0 || i > n) {
            return Err(RootSystemError::BadPermutation(n));
        }
        Ok(NodePermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        NodePermutation { images: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, node: Node) -> Node {
        self.images[node - 1]
    }

    pub fn images(&self) -> &[Node] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| i == k + 1)
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.len()).all(|i| self.image(self.image(i)) == i)
    }

    /// `Σ c_i α_i ↦ Σ c_i α_{τ(i)}`. On a diagram automorphism this sends
    /// `ϖ_i` to `ϖ_{τ(i)}`.
    pub fn apply(&self, w: &WeightVector) -> Result<WeightVector, RootSystemError> {
        if w.len() != self.len() {
            return Err(RootSystemError::LengthMismatch { expected: self.len(), found: w.len() });
        }
        let mut out = vec![Rational::zero(); self.len()];
        for (k, c) in w.coords().iter().enumerate() {
            out[self.images[k] - 1] = c.clone();
        }
        Ok(WeightVector::new(out))
    }
}

impl fmt::Display for NodePermutation {
    /// Cycle notation including fixed points, e.g. `(1 3)(2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut done = vec![false; self.len()];
        for start in 1..=self.len() {
            if done[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            done[start - 1] = true;
            let mut i = self.image(start);
            while i != start {
                cycle.push(i);
                done[i - 1] = true;
                i = self.image(i);
            }
            let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

pub fn apply_permutation(p: &NodePermutation, w: &WeightVector) -> Result<WeightVector, RootSystemError> {
    p.apply(w)
}

impl RootSystem {
    fn cartan_rational(&self) -> Matrix<Rational> {
        let n = self.rank();
        Matrix::from_fn(n, n, |i, j| Rational::from_integer(self.cartan[i][j].into()))
    }

    /// `ϖ_1, …, ϖ_n` in simple-root coordinates: the solution of
    /// `⟨ϖ_i, α_j^∨⟩ = δ_ij`, i.e. the columns of the inverse Cartan matrix.
    pub fn fundamental_weights(&self) -> Vec<WeightVector> {
        let inv = self
            .cartan_rational()
            .inverse()
            .expect("Cartan matrices of finite type are invertible");
        inv.columns().into_iter().map(WeightVector::new).collect()
    }

    pub fn fundamental_weight(&self, node: Node) -> WeightVector {
        self.fundamental_weights().swap_remove(node - 1)
    }

    /// Converts Dynkin labels (fundamental-weight coordinates) to simple-root
    /// coordinates.
    pub fn from_dynkin_labels(&self, labels: &[Rational]) -> Result<WeightVector, RootSystemError> {
        if labels.len() != self.rank() {
            return Err(RootSystemError::LengthMismatch { expected: self.rank(), found: labels.len() });
        }
        let mut acc = WeightVector::zero(self.rank());
        for (w, l) in self.fundamental_weights().iter().zip(labels) {
            acc = acc.checked_add(&w.scale(l))?;
        }
        Ok(acc)
    }

    /// `(P(R) : Q(R)) = |det cartan|`.
    pub fn connection_index(&self) -> u64 {
        let det = self.cartan_rational().determinant();
        assert!(det.is_integer());
        u64::try_from(det.to_integer().abs()).expect("connection index fits in u64")
    }

    /// Nodes whose coefficient in the highest root is 1.
    pub fn special_nodes(&self) -> BTreeSet<Node> {
        (1..=self.rank())
            .filter(|&i| self.highest_root.coeff(i).is_one())
            .collect()
    }

    /// The involution `α ↦ −w₀(α)` of the diagram: nontrivial exactly on
    /// `A_n` (n ≥ 2), `D_n` with `n` odd, and `E_6`.
    pub fn opposition_involution(&self) -> NodePermutation {
        let n = self.rank();
        let images: Vec<Node> = match self.family() {
            Family::A => (1..=n).map(|i| n + 1 - i).collect(),
            Family::D if n % 2 == 1 => (1..=n)
                .map(|i| match i {
                    i if i == n - 1 => n,
                    i if i == n => n - 1,
                    i => i,
                })
                .collect(),
            Family::E if n == 6 => vec![6, 2, 5, 4, 3, 1],
            _ => (1..=n).collect(),
        };
        NodePermutation::new(images).expect("opposition rules are permutations")
    }

    /// Half the squared lengths `(α_i, α_i)/2` of the simple roots, scaled so
    /// the first is 1. They symmetrize the Cartan matrix:
    /// `d_i·cartan[i][j] = d_j·cartan[j][i]`.
    pub fn symmetrizer(&self) -> Vec<Rational> {
        let n = self.rank();
        let mut d: Vec<Option<Rational>> = vec![None; n];
        d[0] = Some(Rational::one());
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && self.cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    let r = Rational::new(self.cartan[i][j].into(), self.cartan[j][i].into());
                    d[j] = Some(di * r);
                    stack.push(j);
                }
            }
        }
        d.into_iter().map(|x| x.expect("irreducible diagrams are connected")).collect()
    }

    /// The invariant inner product `(x, y) = Σ x_i y_j d_i cartan[i][j]`.
    pub fn inner_product(&self, x: &WeightVector, y: &WeightVector) -> Rational {
        let d = self.symmetrizer();
        let mut acc = Rational::zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if self.cartan[i][j] != 0 {
                    acc += xi * yj * &d[i] * Rational::from_integer(self.cartan[i][j].into());
                }
            }
        }
        acc
    }

    /// Half the sum of the positive roots, equal to `ϖ_1 + … + ϖ_n`.
    pub fn rho(&self) -> WeightVector {
        let half = Rational::new(1.into(), 2.into());
        let sum = self
            .positive_roots
            .iter()
            .fold(WeightVector::zero(self.rank()), |acc, r| acc.checked_add(r).unwrap());
        sum.scale(&half)
    }
}
