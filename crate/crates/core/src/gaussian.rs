//! Gaussian numbers `a + bi` over an ordered exact field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::scalar::{format_rational, parse_rational, Field, OrderedField, ParseScalarError};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian<T> {
    pub re: T,
    pub im: T,
}

impl<T: OrderedField> Gaussian<T> {
    pub fn new(re: T, im: T) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: T) -> Self {
        Gaussian { re, im: T::zero() }
    }

    pub fn i() -> Self {
        Gaussian { re: T::zero(), im: T::one() }
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `a² + b²`
    pub fn norm_sqr(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }
}

impl<T: OrderedField> Add for Gaussian<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Gaussian { re: self.re + o.re, im: self.im + o.im }
    }
}

impl<T: OrderedField> Sub for Gaussian<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Gaussian { re: self.re - o.re, im: self.im - o.im }
    }
}

impl<T: OrderedField> Mul for Gaussian<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let re = self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone();
        let im = self.re * o.im + self.im * o.re;
        Gaussian { re, im }
    }
}

impl<T: OrderedField> Div for Gaussian<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm_sqr();
        assert!(!n.is_zero(), "division by zero Gaussian number");
        let p = self * o.conj();
        Gaussian { re: p.re / n.clone(), im: p.im / n }
    }
}

impl<T: OrderedField> Neg for Gaussian<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Gaussian { re: -self.re, im: -self.im }
    }
}

impl<T: OrderedField> Zero for Gaussian<T> {
    fn zero() -> Self {
        Gaussian { re: T::zero(), im: T::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<T: OrderedField> One for Gaussian<T> {
    fn one() -> Self {
        Gaussian { re: T::one(), im: T::zero() }
    }
}

impl<T: OrderedField> Field for Gaussian<T> {
    fn from_i64(n: i64) -> Self {
        Gaussian::real(T::from_i64(n))
    }
}

impl<I> fmt::Display for Gaussian<Ratio<I>>
where
    I: Clone + Integer + Signed + fmt::Display,
{
    /// `"a"`, `"b*i"` or `"a+b*i"`; components in `p/q` form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&format_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", format_rational(&self.im));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*i", format_rational(&self.re), sign, format_rational(&self.im.abs()))
    }
}

fn parse_imag<I>(s: &str, whole: &str) -> Result<Ratio<I>, ParseScalarError>
where
    I: Clone + Integer + Signed + FromStr,
{
    let bad = || ParseScalarError::BadGaussian(whole.to_string());
    let body = s.strip_suffix('i').ok_or_else(bad)?;
    let body = body.strip_suffix('*').unwrap_or(body).trim();
    match body {
        "" | "+" => Ok(Ratio::one()),
        "-" => Ok(-Ratio::one()),
        b => parse_rational(b).map_err(|_| bad()),
    }
}

impl<I> FromStr for Gaussian<Ratio<I>>
where
    I: Clone + Integer + Signed + FromStr,
    Ratio<I>: OrderedField,
{
    type Err = ParseScalarError;

    /// Accepts `"a"`, `"b*i"`, `"bi"`, `"i"`, `"-i"`, `"a+b*i"` and `"a-b*i"`,
    /// with `a` and `b` of the form `p` or `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ParseScalarError::BadGaussian(s.to_string());
        if t.is_empty() {
            return Err(bad());
        }
        if !t.ends_with('i') {
            return parse_rational(&t).map(Gaussian::real).map_err(|_| bad());
        }
        // The split point is the last sign that is not leading and not part
        // of a denominator such as `1/-2`.
        let bytes = t.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/');
        match split {
            Some(k) => {
                let re = parse_rational(&t[..k]).map_err(|_| bad())?;
                let im = parse_imag(&t[k..], s)?;
                Ok(Gaussian { re, im })
            }
            None => Ok(Gaussian { re: Ratio::zero(), im: parse_imag(&t, s)? }),
        }
    }
}

impl<T: OrderedField> Matrix<Gaussian<T>> {
    pub fn from_real(m: &Matrix<T>) -> Self {
        m.map(|x| Gaussian::real(x.clone()))
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(Gaussian::conj)
    }

    pub fn conj_transpose(&self) -> Self {
        self.conj().transpose()
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    /// Sylvester's criterion for a hermitian matrix: every leading principal
    /// minor is real and strictly positive.
    ///
    /// Returns `false` for non-hermitian input.
    pub fn is_positive_definite_hermitian(&self) -> bool {
        self.is_hermitian()
            && self
                .leading_principal_minors()
                .iter()
                .all(|d| d.is_real() && d.re.is_positive())
    }
}
