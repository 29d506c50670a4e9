//! Deciding whether a product of almost-simple pairs is of Hodge type.
//!
//! A product is of Hodge type when every factor is
//!
//! * of type A, B, C or `D^R` and simply connected, or
//! * of type `D_n^H` (`n ≥ 5`) and equal to the quotient of the simply
//!   connected group by the kernel of `ϖ_1`.
//!
//! Conversely every pair of Hodge type is a quotient of such a product, so a
//! factor of an admissible type given in a smaller isogeny form is reported as
//! [`HodgeTypeVerdict::QuotientOfHodgeType`]: which of those quotients are
//! themselves of Hodge type is not decided here.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::rational::{is_mixed_type_d, Flavor, RealFactorSpec};
use super::{generated_subgroup_index, ClassError};
use crate::rootsys::{Family, RootSystem, RootSystemType};

/// Which group in the isogeny class an almost-simple factor is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Isogeny {
    SimplyConnected,
    /// The simply connected group modulo the kernel of `ϖ_1` on its centre.
    Varpi1Quotient,
    Adjoint,
}

/// One almost-simple factor `(H_i, h̄_i)` over Q: its absolute type, the
/// flavors of its real factors, and its isogeny form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorInput {
    ty: RootSystemType,
    flavors: Vec<Flavor>,
    isogeny: Isogeny,
}

impl FactorInput {
    /// Validates every noncompact flavor against the special nodes of `ty`.
    pub fn new(ty: RootSystemType, flavors: Vec<Flavor>, isogeny: Isogeny) -> Result<Self, ClassError> {
        for f in &flavors {
            RealFactorSpec::new(ty, *f)?;
        }
        Ok(FactorInput { ty, flavors, isogeny })
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn flavors(&self) -> &[Flavor] {
        &self.flavors
    }

    pub fn isogeny(&self) -> Isogeny {
        self.isogeny
    }

    pub fn real_factors(&self) -> Vec<RealFactorSpec> {
        self.flavors
            .iter()
            .map(|&f| RealFactorSpec::new(self.ty, f).expect("validated on construction"))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NotHodgeReason {
    ExceptionalE6,
    ExceptionalE7,
    ExceptionalE8F4G2,
    MixedTypeD,
    WrongIsogenyForm,
    /// Every real factor is compact, so `h̄` cannot generate the group.
    NoNoncompactFactor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuotientDetail {
    /// 0-based index of the factor.
    pub factor: usize,
    pub isogeny: Isogeny,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum HodgeTypeVerdict {
    HodgeType,
    /// Every factor has an admissible type, but the listed ones are proper
    /// quotients of the admissible isogeny form.
    QuotientOfHodgeType(Vec<QuotientDetail>),
    NotHodgeType(NotHodgeReason),
}

enum FactorOutcome {
    Pass,
    Quotient,
    Fail(NotHodgeReason),
}

/// `ϖ_1` is faithful on the centre of the simply connected group, i.e. its
/// image generates `P/Q`.
fn varpi1_faithful(rs: &RootSystem) -> bool {
    generated_subgroup_index(rs, &BTreeSet::from([1])) == 1
}

fn classify_factor(f: &FactorInput) -> FactorOutcome {
    use NotHodgeReason::*;
    let (family, n) = (f.ty.family(), f.ty.rank());
    match family {
        Family::E if n == 6 => return FactorOutcome::Fail(ExceptionalE6),
        Family::E if n == 7 => return FactorOutcome::Fail(ExceptionalE7),
        Family::E | Family::F | Family::G => return FactorOutcome::Fail(ExceptionalE8F4G2),
        _ => {}
    }
    if f.flavors.iter().all(|fl| *fl == Flavor::Compact) {
        return FactorOutcome::Fail(NoNoncompactFactor);
    }
    let real = f.real_factors();
    if is_mixed_type_d(&real).expect("one type per factor") {
        return FactorOutcome::Fail(MixedTypeD);
    }
    let rs = RootSystem::build(f.ty);
    if real.iter().any(RealFactorSpec::is_d_quaternionic) {
        return match f.isogeny {
            Isogeny::SimplyConnected => FactorOutcome::Fail(WrongIsogenyForm),
            Isogeny::Varpi1Quotient => FactorOutcome::Pass,
            Isogeny::Adjoint => FactorOutcome::Quotient,
        };
    }
    // A, B, C, D^R, and D4 (where triality identifies the special nodes).
    match f.isogeny {
        Isogeny::SimplyConnected => FactorOutcome::Pass,
        Isogeny::Varpi1Quotient if varpi1_faithful(&rs) => FactorOutcome::Pass,
        Isogeny::Adjoint if rs.connection_index() == 1 => FactorOutcome::Pass,
        Isogeny::Varpi1Quotient | Isogeny::Adjoint => FactorOutcome::Quotient,
    }
}

/// Decides the Hodge type of a product of almost-simple factors. The first
/// failing factor determines the reason in a `NotHodgeType` verdict.
pub fn hodge_type_decision(factors: &[FactorInput]) -> HodgeTypeVerdict {
    let mut quotients = Vec::new();
    for (k, f) in factors.iter().enumerate() {
        match classify_factor(f) {
            FactorOutcome::Pass => {}
            FactorOutcome::Quotient => quotients.push(QuotientDetail { factor: k, isogeny: f.isogeny }),
            FactorOutcome::Fail(reason) => return HodgeTypeVerdict::NotHodgeType(reason),
        }
    }
    if quotients.is_empty() {
        HodgeTypeVerdict::HodgeType
    } else {
        HodgeTypeVerdict::QuotientOfHodgeType(quotients)
    }
}
