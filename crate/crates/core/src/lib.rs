//! Exact combinatorics behind Shimura varieties of Hodge type.
//!
//! * [`rootsys`]: root systems of types A–G, special nodes, fundamental
//!   weights and the opposition involution.
//! * [`symclass`]: which fundamental weights give symplectic representations
//!   for a given special node, and the resulting Hodge-type decision.
//! * [`hodgealg`]: Hodge numbers, filtrations, Tate twists, and membership in
//!   period domains and Siegel space over the Gaussian rationals.
//! * [`modcurve`]: congruence subgroups, the Weil pairing on `(Z/N)²` and
//!   component counts of modular curves.
//!
//! Linear algebra ([`matrix`], [`gaussian`]) is generic over an exact
//! [`Field`]; the rest of the crate uses the concrete aliases below.

pub mod gaussian;
pub mod hodgealg;
pub mod lattice;
pub mod matrix;
pub mod modcurve;
pub mod rootsys;
pub mod scalar;
pub mod symclass;

pub use scalar::{Field, OrderedField};

/// Arbitrary-precision rationals, the default scalar.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; fine for small matrices with small entries.
pub type Rational64 = num_rational::Rational64;
/// `a + bi` with `a, b` in [`Rational`].
pub type GaussianRational = gaussian::Gaussian<Rational>;
pub type QMatrix = matrix::Matrix<Rational>;
pub type GaussianMatrix = matrix::Matrix<GaussianRational>;
