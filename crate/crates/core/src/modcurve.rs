//! Elliptic modular curves: principal congruence subgroups, the Weil pairing
//! on `(Z/N)²` and the number of connected components of `Sh_K` for
//! `K = K(N)`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest level accepted by the enumerating routines.
pub const MAX_ENUMERATED_LEVEL: u64 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModCurveError {
    #[error("matrix has determinant {0}, not 1")]
    NotUnimodular(i64),
    #[error("level {level} is outside 1..={max}")]
    OutOfRange { level: u64, max: u64 },
    #[error("torsion points have moduli {0} and {1}")]
    ModulusMismatch(u64, u64),
    #[error("level must be positive")]
    ZeroLevel,
}

/// An integer `2×2` matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMatrix2 {
    pub const IDENTITY: IntMatrix2 = IntMatrix2 { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMatrix2 { a, b, c, d }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn mul(&self, o: &IntMatrix2) -> IntMatrix2 {
        IntMatrix2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    /// `(x, y) ↦ (ax + by, cx + dy)` on `(Z/N)²`.
    pub fn act(&self, p: &TorsionPoint) -> TorsionPoint {
        TorsionPoint::new(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y, p.modulus)
    }
}

/// A point of `(Z/N)²`, coordinates reduced to `0..N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorsionPoint {
    x: i64,
    y: i64,
    modulus: u64,
}

impl TorsionPoint {
    /// # Panics
    /// If `modulus` is zero.
    pub fn new(x: i64, y: i64, modulus: u64) -> Self {
        assert!(modulus > 0, "torsion points need a positive modulus");
        let n = modulus as i64;
        TorsionPoint { x: x.rem_euclid(n), y: y.rem_euclid(n), modulus }
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// Whether `g ≡ 1 (mod N)`; `g` must lie in `SL_2(Z)`.
pub fn in_gamma_n(g: &IntMatrix2, level: u64) -> Result<bool, ModCurveError> {
    if level == 0 {
        return Err(ModCurveError::ZeroLevel);
    }
    let det = g.det();
    if det != 1 {
        return Err(ModCurveError::NotUnimodular(det));
    }
    let n = level as i64;
    Ok([g.a - 1, g.b, g.c, g.d - 1].iter().all(|x| x.rem_euclid(n) == 0))
}

fn check_level(level: u64) -> Result<(), ModCurveError> {
    if (1..=MAX_ENUMERATED_LEVEL).contains(&level) {
        Ok(())
    } else {
        Err(ModCurveError::OutOfRange { level, max: MAX_ENUMERATED_LEVEL })
    }
}

/// `[SL_2(Z) : Γ(N)] = |SL_2(Z/N)|`, by enumerating `SL_2(Z/N)`
/// (reduction mod `N` is onto).
pub fn gamma_n_index(level: u64) -> Result<u64, ModCurveError> {
    check_level(level)?;
    let n = level as i64;
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if (a * d - b * c).rem_euclid(n) == 1 % n {
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

/// `e_N(P, Q) = det[P | Q] mod N`, written additively in `Z/N`.
pub fn weil_pairing(p: &TorsionPoint, q: &TorsionPoint) -> Result<u64, ModCurveError> {
    if p.modulus != q.modulus {
        return Err(ModCurveError::ModulusMismatch(p.modulus, q.modulus));
    }
    let n = p.modulus as i64;
    Ok((p.x * q.y - p.y * q.x).rem_euclid(n) as u64)
}

/// `(P, Q)` is a level-`N` structure when `e_N(P, Q) = 1`.
pub fn is_level_structure(p: &TorsionPoint, q: &TorsionPoint) -> Result<bool, ModCurveError> {
    Ok(weil_pairing(p, q)? == 1 % p.modulus)
}

/// `|Q^× \ A_f^× / det K(N)| = |(Z/N)^×|`, counted by enumeration.
pub fn gl2_component_count(level: u64) -> Result<u64, ModCurveError> {
    if level == 0 {
        return Err(ModCurveError::ZeroLevel);
    }
    Ok((0..level).filter(|&u| u.gcd(&level) == 1).count() as u64)
}
