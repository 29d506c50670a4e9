//! Argument grammars. A malformed argument is a [`UsageError`]; a well-formed
//! argument that fails a mathematical precondition is returned as the inner
//! domain error.

use std::fmt;

use shimura::hodgealg::{HodgeError, HodgeStructure};
use shimura::rootsys::{RootSystemError, RootSystemType};
use shimura::symclass::{ClassError, FactorInput, Flavor, Isogeny};
use shimura::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError {
    flag: &'static str,
    msg: String,
}

impl UsageError {
    pub fn new(flag: &'static str, msg: impl Into<String>) -> Self {
        UsageError { flag, msg: msg.into() }
    }
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid value for {}: {}", self.flag, self.msg)
    }
}

/// `[A-G][0-9]+`. A token of the wrong shape is a usage error; a rank
/// outside the family's range is a domain error.
pub fn parse_type_token(token: &str) -> Result<Result<RootSystemType, RootSystemError>, UsageError> {
    parse_type_for("<TYPE>", token)
}

fn parse_type_for(flag: &'static str, token: &str) -> Result<Result<RootSystemType, RootSystemError>, UsageError> {
    match token.parse::<RootSystemType>() {
        Err(e @ RootSystemError::BadToken(_)) => Err(UsageError::new(flag, e.to_string())),
        other => Ok(other),
    }
}

/// Comma-separated Dynkin labels, one per node.
pub fn parse_labels(text: &str, rank: usize) -> Result<Vec<Rational>, UsageError> {
    let labels: Vec<i64> = text
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| UsageError::new("--irrep", format!("{t:?} is not an integer"))))
        .collect::<Result<_, _>>()?;
    if labels.len() != rank {
        return Err(UsageError::new("--irrep", format!("expected {rank} labels, found {}", labels.len())));
    }
    Ok(labels.into_iter().map(|x| Rational::from_integer(x.into())).collect())
}

fn parse_flavor(t: &str) -> Result<Flavor, UsageError> {
    match t.trim() {
        "c" => Ok(Flavor::Compact),
        s => s
            .strip_prefix("nc")
            .and_then(|k| k.parse().ok())
            .map(Flavor::Noncompact)
            .ok_or_else(|| UsageError::new("--factor", format!("flavor {s:?} is neither `c` nor `nc<node>`"))),
    }
}

fn parse_isogeny(t: &str) -> Result<Isogeny, UsageError> {
    match t.trim() {
        "sc" => Ok(Isogeny::SimplyConnected),
        "q1" => Ok(Isogeny::Varpi1Quotient),
        "ad" => Ok(Isogeny::Adjoint),
        s => Err(UsageError::new("--factor", format!("isogeny {s:?} is not one of sc, q1, ad"))),
    }
}

/// `TYPE:FLAVORS[:ISOGENY]`: one almost-simple factor with one flavor per
/// real factor (`c` compact, `nc<k>` noncompact at special node `k`) and an
/// isogeny form (`sc` simply connected, the default; `q1` the quotient by
/// the kernel of `ϖ_1`; `ad` adjoint). Example: `D5:nc1,c:sc`.
pub fn parse_factor(spec: &str) -> Result<Result<FactorInput, ClassError>, UsageError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if !(2..=3).contains(&parts.len()) {
        return Err(UsageError::new("--factor", format!("{spec:?} is not TYPE:FLAVORS[:ISOGENY]")));
    }
    let ty = match parse_type_for("--factor", parts[0].trim())? {
        Ok(t) => t,
        Err(e) => return Ok(Err(e.into())),
    };
    let flavors = parts[1].split(',').map(parse_flavor).collect::<Result<Vec<_>, _>>()?;
    let iso = parts.get(2).map_or(Ok(Isogeny::SimplyConnected), |t| parse_isogeny(t))?;
    Ok(FactorInput::new(ty, flavors, iso))
}

/// `elliptic`, `zero`, `tate:M`, or `p,q=h;p,q=h;…`.
pub fn parse_hodge(spec: &str) -> Result<Result<HodgeStructure, HodgeError>, UsageError> {
    let spec = spec.trim();
    let bad = |why: String| UsageError::new("<HODGE>", why);
    match spec {
        "elliptic" => return Ok(Ok(HodgeStructure::elliptic_h1())),
        "zero" | "" => return Ok(Ok(HodgeStructure::zero())),
        _ => {}
    }
    if let Some(m) = spec.strip_prefix("tate:") {
        let m = m.trim().parse().map_err(|_| bad(format!("{m:?} is not an integer")))?;
        return Ok(Ok(HodgeStructure::tate(m)));
    }
    let mut parts = Vec::new();
    for entry in spec.split(';').filter(|e| !e.trim().is_empty()) {
        let shape = || bad(format!("{entry:?} is not of the form p,q=h"));
        let (pq, h) = entry.split_once('=').ok_or_else(shape)?;
        let (p, q) = pq.split_once(',').ok_or_else(shape)?;
        let p: i32 = p.trim().parse().map_err(|_| shape())?;
        let q: i32 = q.trim().parse().map_err(|_| shape())?;
        let h: u64 = h.trim().parse().map_err(|_| shape())?;
        parts.push(((p, q), h));
    }
    Ok(HodgeStructure::new(parts))
}
