//! Period domains and Siegel space, checked exactly over `Q(i)`.
//!
//! The form matrix `T` holds the coordinates of the polarization `t_0`
//! relative to `(2πi)^{-m}`; with that convention the Hodge–Riemann condition
//! reads `t_0(v, C v̄) > 0` for `v ≠ 0`, where `C` is the Weil operator.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{HodgeError, HodgeStructure};
use crate::{GaussianMatrix, GaussianRational, QMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PeriodVerdict {
    Member,
    /// Some `dim F^p` differs from the reference filtration.
    FailsA,
    /// `F^p ⊕ conj(F^{m+1−p}) ≠ V_C` for some `p`.
    FailsB,
    /// `t_0(F^p, F^q) ≠ 0` for some `p + q = m + 1`.
    FailsC,
    /// `t_0(v, C v̄)` is not positive definite.
    FailsD,
}

/// A descending filtration of `V_C` for a vector space `V` of pure weight `m`
/// carrying a rational form, together with the Hodge numbers of the
/// reference point that fix the dimensions.
///
/// `F^p` for an unlisted `p` equals the next listed step above it, `V_C`
/// below the first step and `0` above the last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredSpace {
    weight: i32,
    form: QMatrix,
    steps: BTreeMap<i32, GaussianMatrix>,
    reference: HodgeStructure,
}

impl FilteredSpace {
    /// `steps` pairs each `p` with a matrix whose columns span `F^p`.
    pub fn new(
        weight: i32,
        form: QMatrix,
        steps: Vec<(i32, GaussianMatrix)>,
        reference: HodgeStructure,
    ) -> Result<Self, HodgeError> {
        let n = form.nrows();
        if !form.is_square() || n == 0 || form.determinant().is_zero() {
            return Err(HodgeError::DegenerateForm);
        }
        if reference.pure_weight() != Some(weight) || reference.dim() != n as u64 {
            return Err(HodgeError::BadFiltration(format!(
                "reference Hodge numbers must be pure of weight {weight} and dimension {n}"
            )));
        }
        let mut map = BTreeMap::new();
        for (p, basis) in steps {
            if basis.nrows() != n {
                return Err(HodgeError::BadFiltration(format!("F^{p} basis has {} rows, expected {n}", basis.nrows())));
            }
            if map.insert(p, basis).is_some() {
                return Err(HodgeError::BadFiltration(format!("F^{p} listed twice")));
            }
        }
        let listed: Vec<(&i32, &GaussianMatrix)> = map.iter().collect();
        for w in listed.windows(2) {
            if !w[0].1.spans(w[1].1) {
                return Err(HodgeError::BadFiltration(format!("F^{} does not contain F^{}", w[1].0, w[0].0)));
            }
        }
        Ok(FilteredSpace { weight, form, steps: map, reference })
    }

    /// The filtration `F^0 = ker(J + i)` of `V_C`, `V` of weight `−1`,
    /// determined by a complex structure `J` on `V`.
    pub fn from_complex_structure(form: &QMatrix, j: &QMatrix) -> Result<Self, HodgeError> {
        let n = form.nrows();
        if !j.is_square() || j.nrows() != n || n % 2 != 0 {
            return Err(HodgeError::DegenerateForm);
        }
        if &(j * j) != &(-&QMatrix::identity(n)) {
            return Err(HodgeError::NotComplexStructure);
        }
        let jc = GaussianMatrix::from_real(j);
        let shifted = &jc + &GaussianMatrix::identity(n).scale(&GaussianRational::i());
        let f0 = GaussianMatrix::from_columns(n, &shifted.kernel());
        let half = (n / 2) as u64;
        let reference = HodgeStructure::new([((-1, 0), half), ((0, -1), half)])?;
        FilteredSpace::new(-1, form.clone(), vec![(0, f0)], reference)
    }

    pub fn weight(&self) -> i32 {
        self.weight
    }

    pub fn ambient_dim(&self) -> usize {
        self.form.nrows()
    }

    pub fn form(&self) -> &QMatrix {
        &self.form
    }

    pub fn reference(&self) -> &HodgeStructure {
        &self.reference
    }

    /// A spanning matrix for `F^p`.
    pub fn f(&self, p: i32) -> GaussianMatrix {
        let n = self.ambient_dim();
        match (self.steps.keys().next(), self.steps.range(p..).next()) {
            (Some(&first), _) if p < first => GaussianMatrix::identity(n),
            (_, Some((_, basis))) => basis.clone(),
            _ => GaussianMatrix::zeros(n, 0),
        }
    }

    fn reference_dim(&self, p: i32) -> usize {
        let m = self.weight;
        self.reference
            .support()
            .filter(|&(pp, _)| pp >= p)
            .map(|(pp, _)| self.reference.h(pp, m - pp) as usize)
            .sum()
    }

    /// Every `p` at which something could change, with a margin of one.
    fn relevant_range(&self) -> std::ops::RangeInclusive<i32> {
        let m = self.weight;
        let mut ps: BTreeSet<i32> = self.steps.keys().copied().collect();
        ps.extend(self.reference.support().map(|(p, _)| p));
        let mirrored: Vec<i32> = ps.iter().map(|&p| m + 1 - p).collect();
        ps.extend(mirrored);
        let lo = ps.iter().next().copied().unwrap_or(0) - 1;
        let hi = ps.iter().next_back().copied().unwrap_or(0) + 1;
        lo..=hi
    }
}

/// `span(A) ∩ span(B)`
fn intersection(a: &GaussianMatrix, b: &GaussianMatrix) -> GaussianMatrix {
    let n = a.nrows();
    let stacked = a.hstack(&-b);
    let vectors: Vec<Vec<GaussianRational>> = stacked
        .kernel()
        .into_iter()
        .map(|x| a.mul_vec(&x[..a.ncols()]))
        .collect();
    GaussianMatrix::from_columns(n, &vectors).column_span()
}

/// Checks the four conditions for `F` to lie in the period domain of the
/// reference point, returning the first that fails.
pub fn period_domain_membership(space: &FilteredSpace) -> PeriodVerdict {
    let n = space.ambient_dim();
    let m = space.weight;
    let range = space.relevant_range();

    if range.clone().any(|p| space.f(p).rank() != space.reference_dim(p)) {
        return PeriodVerdict::FailsA;
    }

    for p in range.clone() {
        let (a, b) = (space.f(p), space.f(m + 1 - p).conj());
        if a.rank() + b.rank() != n || a.hstack(&b).rank() != n {
            return PeriodVerdict::FailsB;
        }
    }

    let t = GaussianMatrix::from_real(&space.form);
    for p in range.clone() {
        let (a, b) = (space.f(p), space.f(m + 1 - p));
        if !(&(&a.transpose() * &t) * &b).is_zero() {
            return PeriodVerdict::FailsC;
        }
    }

    // Basis adapted to V_C = ⊕ V^{p,q}, V^{p,q} = F^p ∩ conj(F^q).
    let mut columns = Vec::new();
    let mut weil = Vec::new();
    for p in range {
        let q = m - p;
        let piece = intersection(&space.f(p), &space.f(q).conj());
        for c in piece.columns() {
            columns.push(c);
            weil.push(i64::from(q - p));
        }
    }
    let basis = GaussianMatrix::from_columns(n, &columns);
    if columns.len() != n || basis.rank() != n {
        return PeriodVerdict::FailsD;
    }
    // H(b_j, b_k) = b_jᵀ T C(b̄_k) = i^{p_k − q_k} · b_jᵀ T b̄_k
    let raw = &(&basis.transpose() * &t) * &basis.conj();
    let gram = GaussianMatrix::from_fn(n, n, |j, k| raw[(j, k)].clone() * GaussianRational::i_pow(-weil[k]));
    if gram.is_positive_definite_hermitian() {
        PeriodVerdict::Member
    } else {
        PeriodVerdict::FailsD
    }
}

/// Whether the complex structure `J` lies in the Siegel space of the
/// alternating form `ψ`: `J` preserves `ψ` and `ψ(x, Jy)` is positive
/// definite.
pub fn siegel_membership(form: &QMatrix, j: &QMatrix) -> Result<bool, HodgeError> {
    let n = form.nrows();
    if !form.is_square() || n == 0 || form.determinant().is_zero() {
        return Err(HodgeError::DegenerateForm);
    }
    if form.transpose() != -form || (0..n).any(|i| !form[(i, i)].is_zero()) {
        return Err(HodgeError::NotAlternating);
    }
    if !j.is_square() || j.nrows() != n {
        return Err(HodgeError::DegenerateForm);
    }
    if &(j * j) != &(-&QMatrix::identity(n)) {
        return Err(HodgeError::NotComplexStructure);
    }
    let preserves = &(&j.transpose() * form) * j == *form;
    let psi_j = form * j;
    Ok(preserves && psi_j.is_positive_definite())
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    p: i32,
    /// `n` rows; the columns span `F^p`.
    basis: Vec<Vec<String>>,
}

/// JSON form of a [`FilteredSpace`]. Matrix entries are strings such as
/// `"1/2"`, `"-i"` or `"1/2+3/4*i"`; the form must be real.
#[derive(Serialize, Deserialize)]
pub struct FilteredSpaceJson {
    weight: i32,
    form: Vec<Vec<String>>,
    filtration: Vec<StepJson>,
    hodge_numbers: HodgeStructure,
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<GaussianMatrix, HodgeError> {
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(HodgeError::BadEntry("ragged matrix".into()));
    }
    let parsed: Vec<Vec<GaussianRational>> = rows
        .iter()
        .map(|r| r.iter().map(|s| s.parse().map_err(|_| HodgeError::BadEntry(s.clone()))).collect())
        .collect::<Result<_, _>>()?;
    if parsed.is_empty() {
        return Ok(GaussianMatrix::zeros(0, 0));
    }
    Ok(GaussianMatrix::from_rows(parsed))
}

fn format_matrix(m: &GaussianMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

impl TryFrom<FilteredSpaceJson> for FilteredSpace {
    type Error = HodgeError;

    fn try_from(j: FilteredSpaceJson) -> Result<Self, HodgeError> {
        let form = parse_matrix(&j.form)?;
        if form.to_rows().iter().flatten().any(|x| !x.is_real()) {
            return Err(HodgeError::BadEntry("the form must have rational entries".into()));
        }
        let form: QMatrix = form.map(|x| x.re.clone());
        let n = form.nrows();
        let steps = j
            .filtration
            .iter()
            .map(|s| {
                let b = parse_matrix(&s.basis)?;
                Ok((s.p, if s.basis.is_empty() { GaussianMatrix::zeros(n, 0) } else { b }))
            })
            .collect::<Result<Vec<_>, HodgeError>>()?;
        FilteredSpace::new(j.weight, form, steps, j.hodge_numbers)
    }
}

impl From<&FilteredSpace> for FilteredSpaceJson {
    fn from(s: &FilteredSpace) -> Self {
        FilteredSpaceJson {
            weight: s.weight,
            form: format_matrix(&GaussianMatrix::from_real(&s.form)),
            filtration: s.steps.iter().map(|(&p, b)| StepJson { p, basis: format_matrix(b) }).collect(),
            hodge_numbers: s.reference.clone(),
        }
    }
}

impl Serialize for FilteredSpace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FilteredSpaceJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FilteredSpace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        FilteredSpace::try_from(FilteredSpaceJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

fn rational_matrix(rows: &[&[i64]]) -> QMatrix {
    QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect())
}

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn cols(n: usize, c: &[&[&str]]) -> GaussianMatrix {
        let v: Vec<Vec<GaussianRational>> = c.iter().map(|col| col.iter().map(|s| g(s)).collect()).collect();
        GaussianMatrix::from_columns(n, &v)
    }

    fn det_form() -> QMatrix {
        rational_matrix(&[&[0, 1], &[-1, 0]])
    }

    fn omega4() -> QMatrix {
        rational_matrix(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]])
    }

    #[test]
    fn elliptic_curve_point() {
        let j = rational_matrix(&[&[0, -1], &[1, 0]]);
        assert_eq!(siegel_membership(&det_form(), &j), Ok(true));
        let space = FilteredSpace::from_complex_structure(&det_form(), &j).unwrap();
        assert_eq!(period_domain_membership(&space), PeriodVerdict::Member);
        // the conjugate point lies in the other half plane
        let minus_j = -&j;
        assert_eq!(siegel_membership(&det_form(), &minus_j), Ok(false));
        let space = FilteredSpace::from_complex_structure(&det_form(), &minus_j).unwrap();
        assert_eq!(period_domain_membership(&space), PeriodVerdict::FailsD);
    }

    #[test]
    fn explicit_filtrations() {
        let e = HodgeStructure::elliptic_h1();
        let good = FilteredSpace::new(-1, det_form(), vec![(0, cols(2, &[&["1", "i"]]))], e.clone()).unwrap();
        assert_eq!(period_domain_membership(&good), PeriodVerdict::Member);

        // a real line is its own conjugate
        let real = FilteredSpace::new(-1, det_form(), vec![(0, cols(2, &[&["1", "0"]]))], e.clone()).unwrap();
        assert_eq!(period_domain_membership(&real), PeriodVerdict::FailsB);

        let wrong_dim = FilteredSpace::new(-1, det_form(), vec![(0, GaussianMatrix::identity(2))], e).unwrap();
        assert_eq!(period_domain_membership(&wrong_dim), PeriodVerdict::FailsA);

        let h = HodgeStructure::new([((-1, 0), 2), ((0, -1), 2)]).unwrap();
        let f0 = cols(4, &[&["1", "i", "0", "0"], &["0", "0", "1", "-i"]]);
        let not_isotropic = FilteredSpace::new(-1, omega4(), vec![(0, f0)], h).unwrap();
        assert_eq!(period_domain_membership(&not_isotropic), PeriodVerdict::FailsC);
    }

    #[test]
    fn siegel_errors() {
        let j = rational_matrix(&[&[0, -1], &[1, 0]]);
        assert_eq!(siegel_membership(&det_form(), &QMatrix::identity(2)), Err(HodgeError::NotComplexStructure));
        assert_eq!(siegel_membership(&QMatrix::identity(2), &j), Err(HodgeError::NotAlternating));
        assert_eq!(siegel_membership(&QMatrix::zeros(2, 2), &j), Err(HodgeError::DegenerateForm));
        // J preserves the form, but ψ(x, Jx) vanishes on e1
        let j4 = rational_matrix(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        assert_eq!(siegel_membership(&omega4(), &j4), Ok(false));
        let space = FilteredSpace::from_complex_structure(&omega4(), &j4).unwrap();
        assert_eq!(period_domain_membership(&space), PeriodVerdict::FailsD);
    }

    #[test]
    fn construction_errors() {
        let e = HodgeStructure::elliptic_h1();
        let line = cols(2, &[&["1", "i"]]);
        assert_eq!(
            FilteredSpace::new(-1, QMatrix::zeros(2, 2), vec![(0, line.clone())], e.clone()),
            Err(HodgeError::DegenerateForm)
        );
        let other = cols(2, &[&["1", "-i"]]);
        assert!(matches!(
            FilteredSpace::new(-1, det_form(), vec![(-1, line.clone()), (0, other)], e.clone()),
            Err(HodgeError::BadFiltration(_))
        ));
        assert!(matches!(
            FilteredSpace::new(0, det_form(), vec![(0, line)], e),
            Err(HodgeError::BadFiltration(_))
        ));
    }

    #[test]
    fn json_roundtrip() {
        let text = r#"{"weight":-1,"form":[["0","1"],["-1","0"]],
            "filtration":[{"p":0,"basis":[["1"],["i"]]}],
            "hodge_numbers":{"bigrading":[{"p":-1,"q":0,"dim":1},{"p":0,"q":-1,"dim":1}]}}"#;
        let space: FilteredSpace = serde_json::from_str(text).unwrap();
        assert_eq!(period_domain_membership(&space), PeriodVerdict::Member);
        let again: FilteredSpace = serde_json::from_str(&serde_json::to_string(&space).unwrap()).unwrap();
        assert_eq!(again, space);
        let complex_form = text.replace(r#"["0","1"]"#, r#"["i","1"]"#);
        assert!(serde_json::from_str::<FilteredSpace>(&complex_form).is_err());
    }
}
