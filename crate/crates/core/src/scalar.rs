//! Exact scalar fields.
//!
//! Everything in this crate works over exact fields. The [`Field`] trait is
//! implemented only for rational number types (and the Gaussian rationals
//! built on top of them), so floating point cannot reach code whose answers
//! depend on exact equality with zero.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// An exact commutative field.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Embeds a small integer.
    fn from_i64(n: i64) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

/// A field with a total order compatible with the arithmetic.
pub trait OrderedField: Field + PartialOrd {
    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }
}

macro_rules! impl_ratio_field {
    ($($int:ty),*) => {$(
        impl Field for Ratio<$int> {
            fn from_i64(n: i64) -> Self {
                Ratio::from_integer(<$int>::from(n))
            }
        }
        impl OrderedField for Ratio<$int> {}
    )*};
}

impl_ratio_field!(i64, i128, BigInt);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseScalarError {
    #[error("cannot parse {0:?} as a rational number")]
    BadRational(String),
    #[error("cannot parse {0:?} as a Gaussian rational")]
    BadGaussian(String),
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational<I>(s: &str) -> Result<Ratio<I>, ParseScalarError>
where
    I: Clone + Integer + FromStr,
{
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let bad = || ParseScalarError::BadRational(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: I = n.trim().parse().map_err(|_| bad())?;
            let d: I = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Ratio::new(n, d))
        }
        None => t.parse::<I>().map(Ratio::from_integer).map_err(|_| bad()),
    }
}

/// Formats a rational as `"p/q"` with `q > 0` in lowest terms, or `"p"` when
/// it is an integer.
pub fn format_rational<I>(r: &Ratio<I>) -> String
where
    I: Clone + Integer + Signed + std::fmt::Display,
{
    // Ratio keeps itself reduced with a positive denominator.
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
