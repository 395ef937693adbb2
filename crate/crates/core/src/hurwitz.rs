//! Boundary labels of the Hurwitz space and the closed-form Hodge class.
//!
//! For covers with only simple branching (`l` absent) the class is written
//! in the symmetric basis `δ_{k,μ}`, `2 ≤ k ≤ b/2`. With an extra `l`-fold
//! ramification point over `p_1` it is written in the side-marked basis
//! `δ¹_{k,μ}`, `2 ≤ k ≤ b − 2`, where `k` counts the branch points on the
//! component containing `p_1`. The two are related by
//! `δ_{k,μ} = δ¹_{k,μ} + δ¹_{b−k,μ}` for `k < b/2` and `δ_{b/2,μ} = δ¹_{b/2,μ}`.
//!
//! Labels are restricted to those allowed by the sign of the monodromy
//! (see [`BoundaryLabel::is_parity_feasible`]); the remaining formal symbols
//! name empty divisors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formats::{enumerate_formats, RamificationFormat};
use crate::monodromy::CoverOracle;
use crate::rational::{self, int, rat, Rational};

/// Largest degree accepted by [`HurwitzParams`].
pub const MAX_DEGREE: u32 = 64;
/// Largest genus accepted by [`HurwitzParams`].
pub const MAX_GENUS: u32 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HurwitzParams {
    g: u32,
    d: u32,
    l: Option<u32>,
    b: u32,
}

impl HurwitzParams {
    /// `b = 2g − 2 + 2d` without `l`, `b = 2g + 2d − l` with it; `b ≥ 4`.
    pub fn new(g: u32, d: u32, l: Option<u32>) -> Result<Self> {
        if g > MAX_GENUS {
            return Err(Error::out_of_range("genus", g.into(), 0, MAX_GENUS.into()));
        }
        if !(2..=MAX_DEGREE).contains(&d) {
            return Err(Error::out_of_range(
                "degree",
                d.into(),
                2,
                MAX_DEGREE.into(),
            ));
        }
        let b = match l {
            None => 2 * g + 2 * d - 2,
            Some(l) => {
                if !(2..=d).contains(&l) {
                    return Err(Error::out_of_range("l", l.into(), 2, d.into()));
                }
                2 * g + 2 * d - l
            }
        };
        if b < 4 {
            return Err(Error::InvalidParams(format!(
                "g = {g}, d = {d} gives b = {b} branch points; need at least 4"
            )));
        }
        Ok(HurwitzParams { g, d, l, b })
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn l(&self) -> Option<u32> {
        self.l
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// True when labels carry a side marking for `p_1`.
    pub fn is_marked(&self) -> bool {
        self.l.is_some()
    }

    /// Same `(g, d)` without the extra ramification point.
    pub fn without_l(&self) -> Result<Self> {
        Self::new(self.g, self.d, None)
    }
}

impl fmt::Display for HurwitzParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={} d={}", self.g, self.d)?;
        if let Some(l) = self.l {
            write!(f, " l={l}")?;
        }
        write!(f, " b={}", self.b)
    }
}

/// `δ_{k,μ}` (`side1 = None`) or a side-marked `δ¹` label. For marked labels
/// `side1 = Some(true)` means the `k`-point side contains `p_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryLabel {
    pub k: u32,
    pub mu: RamificationFormat,
    pub side1: Option<bool>,
}

impl BoundaryLabel {
    pub fn new(k: u32, mu: RamificationFormat, side1: Option<bool>) -> Self {
        BoundaryLabel { k, mu, side1 }
    }

    /// Checks index ranges and that the marking matches the params.
    pub fn validate(&self, params: &HurwitzParams) -> Result<()> {
        let b = params.b;
        if !(2..=b - 2).contains(&self.k) {
            return Err(Error::out_of_range("k", self.k.into(), 2, (b - 2).into()));
        }
        self.mu.expect_degree(params.d)?;
        match (params.l, self.side1) {
            (None, Some(_)) => Err(Error::InvalidParams(
                "side marking given without an l-fold point".into(),
            )),
            (Some(_), None) => Err(Error::InvalidParams(
                "labels need a side marking when l is given".into(),
            )),
            _ => Ok(()),
        }
    }

    /// The sign condition for monodromy with product the identity on the
    /// `k`-point side: the transpositions, the `l`-cycle if present and the
    /// node permutation must have even total reflection length.
    pub fn is_parity_feasible(&self, params: &HurwitzParams) -> bool {
        self.parity_sum(params).is_multiple_of(2)
    }

    /// Total reflection length on the `k`-point side.
    pub fn parity_sum(&self, params: &HurwitzParams) -> u32 {
        let node = self.mu.reflection_length();
        match (params.l, self.side1) {
            (Some(l), Some(true)) => (self.k - 1) + (l - 1) + node,
            _ => self.k + node,
        }
    }

    /// The same divisor in the basis where the marked side contains `p_1`:
    /// `(k, μ, false)` becomes `(b − k, μ, true)`.
    pub fn to_side1(&self, b: u32) -> Self {
        match self.side1 {
            Some(false) => BoundaryLabel::new(b - self.k, self.mu.clone(), Some(true)),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for BoundaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side1 {
            None => write!(f, "delta[{},{}]", self.k, self.mu),
            Some(true) => write!(f, "delta1[{},{}]", self.k, self.mu),
            Some(false) => write!(f, "delta1'[{},{}]", self.k, self.mu),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EnumerationMode {
    /// Every parity-feasible label.
    #[default]
    Formal,
    /// Only labels certified nonempty by the monodromy oracle.
    Strict,
}

impl FromStr for EnumerationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formal" => Ok(EnumerationMode::Formal),
            "strict" => Ok(EnumerationMode::Strict),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

fn check_format(params: &HurwitzParams, mu: &RamificationFormat) -> Result<()> {
    mu.expect_degree(params.d)
}

fn lcm_rational(mu: &RamificationFormat) -> Rational {
    Rational::from_integer(mu.lcm().into())
}

/// `m(μ) · (k(b−k)/(8(b−1)) − (d − Σ 1/m_i)/12)`, for any `k`.
pub fn symmetric_term(b: u32, d: u32, k: u32, mu: &RamificationFormat) -> Rational {
    let (b, k) = (i64::from(b), i64::from(k));
    let bracket = rat(k * (b - k), 8 * (b - 1)) - (int(d.into()) - mu.reciprocal_sum()) / int(12);
    lcm_rational(mu) * bracket
}

/// `m(μ) · (2l+1)(l−2)/(24l) · (b−k)(b−1−k)/((b−1)(b−2))`.
pub fn extra_term(b: u32, l: u32, k: u32, mu: &RamificationFormat) -> Rational {
    let (b, k, l) = (i64::from(b), i64::from(k), i64::from(l));
    lcm_rational(mu)
        * rat((2 * l + 1) * (l - 2), 24 * l)
        * rat((b - k) * (b - 1 - k), (b - 1) * (b - 2))
}

/// Coefficient of `δ_{k,μ}` in the Hodge class for simple branching.
pub fn kkz_coefficient(
    params: &HurwitzParams,
    k: u32,
    mu: &RamificationFormat,
) -> Result<Rational> {
    if params.l.is_some() {
        return Err(Error::InvalidParams(
            "kkz_coefficient takes parameters without l".into(),
        ));
    }
    if !(2..=params.b / 2).contains(&k) {
        return Err(Error::out_of_range("k", k.into(), 2, (params.b / 2).into()));
    }
    check_format(params, mu)?;
    Ok(symmetric_term(params.b, params.d, k, mu))
}

/// Coefficient of `δ¹_{k,μ}` with an `l`-fold point; with `side1 = false`
/// only the symmetric part is returned.
pub fn ext_coefficient(
    params: &HurwitzParams,
    k: u32,
    mu: &RamificationFormat,
    side1: bool,
) -> Result<Rational> {
    let Some(l) = params.l else {
        return Err(Error::InvalidParams("ext_coefficient needs l".into()));
    };
    if !(2..=params.b - 2).contains(&k) {
        return Err(Error::out_of_range("k", k.into(), 2, (params.b - 2).into()));
    }
    check_format(params, mu)?;
    let sym = symmetric_term(params.b, params.d, k, mu);
    Ok(if side1 {
        sym + extra_term(params.b, l, k, mu)
    } else {
        sym
    })
}

/// Boundary labels ordered by `k`, then `μ` in format order.
pub fn enumerate_boundary(
    params: &HurwitzParams,
    mode: EnumerationMode,
) -> Result<Vec<BoundaryLabel>> {
    let (k_max, side1) = match params.l {
        None => (params.b / 2, None),
        Some(_) => (params.b - 2, Some(true)),
    };
    let formats = enumerate_formats(params.d);
    let mut out = Vec::new();
    for k in 2..=k_max {
        for mu in &formats {
            let label = BoundaryLabel::new(k, mu.clone(), side1);
            if label.is_parity_feasible(params) {
                out.push(label);
            }
        }
    }
    if mode == EnumerationMode::Strict {
        let mut oracle = CoverOracle::new(params.d)?;
        let mut kept = Vec::with_capacity(out.len());
        for label in out {
            if oracle.exists_cover(params, &label)? {
                kept.push(label);
            }
        }
        out = kept;
    }
    Ok(out)
}

/// A Hodge class written as a combination of boundary labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeExpression {
    params: HurwitzParams,
    terms: BTreeMap<BoundaryLabel, Rational>,
}

impl HodgeExpression {
    /// Checks every label against the params; zero coefficients are kept.
    pub fn from_terms(
        params: HurwitzParams,
        terms: BTreeMap<BoundaryLabel, Rational>,
    ) -> Result<Self> {
        for label in terms.keys() {
            label.validate(&params)?;
            if label.side1 == Some(false) {
                return Err(Error::InvalidParams(format!(
                    "{label}: expressions use the p1-side marking"
                )));
            }
            if label.side1.is_none() && 2 * label.k > params.b {
                return Err(Error::out_of_range(
                    "k",
                    label.k.into(),
                    2,
                    (params.b / 2).into(),
                ));
            }
            if !label.is_parity_feasible(&params) {
                return Err(Error::InvalidParams(format!(
                    "{label} violates the monodromy sign condition"
                )));
            }
        }
        Ok(HodgeExpression { params, terms })
    }

    pub fn params(&self) -> &HurwitzParams {
        &self.params
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BoundaryLabel, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, label: &BoundaryLabel) -> Rational {
        self.terms
            .get(label)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Equality of classes: same params and equal coefficients, absent
    /// labels counting as zero.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.params == other.params
            && self
                .terms
                .keys()
                .chain(other.terms.keys())
                .all(|l| self.coefficient(l) == other.coefficient(l))
    }

    /// Rewrites a symmetric expression in the side-marked basis of the same
    /// Hurwitz space viewed with `l = 2`.
    pub fn expand_marked(&self) -> Result<Self> {
        if self.params.l.is_some() {
            return Err(Error::InvalidParams(
                "expression is already side-marked".into(),
            ));
        }
        let params = HurwitzParams::new(self.params.g, self.params.d, Some(2))?;
        let b = params.b;
        let mut terms = BTreeMap::new();
        for (label, c) in &self.terms {
            let mut put = |k| {
                terms.insert(
                    BoundaryLabel::new(k, label.mu.clone(), Some(true)),
                    c.clone(),
                );
            };
            put(label.k);
            if 2 * label.k != b {
                put(b - label.k);
            }
        }
        Self::from_terms(params, terms)
    }

    /// Inverse of [`expand_marked`](Self::expand_marked): folds an `l = 2`
    /// expression back to the symmetric basis, provided `δ¹_{k,μ}` and
    /// `δ¹_{b−k,μ}` carry equal coefficients.
    pub fn fold_symmetric(&self) -> Result<Self> {
        if self.params.l != Some(2) {
            return Err(Error::InvalidParams(
                "only l = 2 expressions fold to the symmetric basis".into(),
            ));
        }
        let params = self.params.without_l()?;
        let b = params.b;
        let mut terms = BTreeMap::new();
        for (label, c) in &self.terms {
            let mirror = BoundaryLabel::new(b - label.k, label.mu.clone(), Some(true));
            if self.coefficient(&mirror) != *c {
                return Err(Error::NotSymmetric(format!(
                    "{label} has {} but {mirror} has {}",
                    rational::format_rational(c),
                    rational::format_rational(&self.coefficient(&mirror))
                )));
            }
            if 2 * label.k <= b {
                terms.insert(
                    BoundaryLabel::new(label.k, label.mu.clone(), None),
                    c.clone(),
                );
            }
        }
        Self::from_terms(params, terms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&HodgeWire::from(self)).expect("serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&HodgeWire::from(self)).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(HodgeWire::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let wire: HodgeWire = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        wire.try_into()
    }
}

impl fmt::Display for HodgeExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda =")?;
        if self.terms.is_empty() {
            return write!(f, " 0");
        }
        for (i, (label, c)) in self.terms.iter().enumerate() {
            let sep = if i == 0 { " " } else { " + " };
            write!(f, "{sep}({}){label}", rational::format_rational(c))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HodgeTermWire {
    k: u32,
    mu: RamificationFormat,
    side1: Option<bool>,
    m_lcm: u64,
    branches: u64,
    #[serde(with = "rational::serde_str")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HodgeWire {
    g: u32,
    d: u32,
    l: Option<u32>,
    b: u32,
    terms: Vec<HodgeTermWire>,
}

impl From<&HodgeExpression> for HodgeWire {
    fn from(e: &HodgeExpression) -> Self {
        HodgeWire {
            g: e.params.g,
            d: e.params.d,
            l: e.params.l,
            b: e.params.b,
            terms: e
                .terms
                .iter()
                .map(|(label, c)| HodgeTermWire {
                    k: label.k,
                    mu: label.mu.clone(),
                    side1: label.side1,
                    // degree <= MAX_DEGREE keeps both far below u64::MAX
                    m_lcm: label.mu.lcm().to_u64().expect("lcm fits in u64"),
                    branches: label.mu.branch_count().to_u64().expect("fits in u64"),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<HodgeWire> for HodgeExpression {
    type Error = Error;

    fn try_from(w: HodgeWire) -> Result<Self> {
        let params = HurwitzParams::new(w.g, w.d, w.l)?;
        if params.b != w.b {
            return Err(Error::Parse(format!(
                "b = {} inconsistent with parameters ({params})",
                w.b
            )));
        }
        let mut terms = BTreeMap::new();
        for t in w.terms {
            if t.mu.lcm().to_u64() != Some(t.m_lcm)
                || t.mu.branch_count().to_u64() != Some(t.branches)
            {
                return Err(Error::Parse(format!(
                    "metadata mismatch for format {}",
                    t.mu
                )));
            }
            let label = BoundaryLabel::new(t.k, t.mu, t.side1);
            if terms.insert(label.clone(), t.coeff).is_some() {
                return Err(Error::Parse(format!("duplicate label {label}")));
            }
        }
        HodgeExpression::from_terms(params, terms)
    }
}

/// The closed-form Hodge class on the labels of [`enumerate_boundary`].
pub fn hodge_class(params: &HurwitzParams, mode: EnumerationMode) -> Result<HodgeExpression> {
    let mut terms = BTreeMap::new();
    for label in enumerate_boundary(params, mode)? {
        let c = match params.l {
            None => kkz_coefficient(params, label.k, &label.mu)?,
            Some(_) => ext_coefficient(params, label.k, &label.mu, true)?,
        };
        terms.insert(label, c);
    }
    HodgeExpression::from_terms(*params, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(parts: &[u32]) -> RamificationFormat {
        RamificationFormat::new(parts.to_vec()).unwrap()
    }

    fn params(g: u32, d: u32, l: Option<u32>) -> HurwitzParams {
        HurwitzParams::new(g, d, l).unwrap()
    }

    fn sym(k: u32, parts: &[u32]) -> BoundaryLabel {
        BoundaryLabel::new(k, mu(parts), None)
    }

    #[test]
    fn params_validation() {
        assert_eq!(params(1, 2, None).b(), 4);
        assert_eq!(params(1, 3, Some(3)).b(), 5);
        assert!(HurwitzParams::new(0, 2, None).is_err());
        assert!(HurwitzParams::new(1, 1, None).is_err());
        assert!(HurwitzParams::new(1, 3, Some(4)).is_err());
        assert!(HurwitzParams::new(1, 3, Some(1)).is_err());
        assert!(HurwitzParams::new(0, 3, Some(3)).is_err());
    }

    #[test]
    fn simple_branching_examples() {
        assert_eq!(
            kkz_coefficient(&params(1, 2, None), 2, &mu(&[1, 1])).unwrap(),
            rat(1, 6)
        );
        assert_eq!(
            kkz_coefficient(&params(2, 2, None), 3, &mu(&[2])).unwrap(),
            rat(1, 5)
        );
        assert_eq!(
            kkz_coefficient(&params(1, 3, None), 2, &mu(&[3])).unwrap(),
            rat(-1, 15)
        );
        assert!(kkz_coefficient(&params(2, 2, None), 4, &mu(&[2])).is_err());
        assert!(kkz_coefficient(&params(2, 2, None), 2, &mu(&[2, 1])).is_err());
        assert!(kkz_coefficient(&params(2, 2, Some(2)), 2, &mu(&[2])).is_err());
    }

    #[test]
    fn ext_examples() {
        let p = params(1, 3, Some(3));
        assert_eq!(
            ext_coefficient(&p, 2, &mu(&[1, 1, 1]), true).unwrap(),
            rat(3, 16) + rat(7, 144)
        );
        assert_eq!(
            ext_coefficient(&p, 2, &mu(&[1, 1, 1]), true).unwrap(),
            rat(17, 72)
        );
        assert_eq!(
            ext_coefficient(&p, 2, &mu(&[1, 1, 1]), false).unwrap(),
            rat(3, 16)
        );
        assert!(ext_coefficient(&params(1, 3, None), 2, &mu(&[3]), true).is_err());
        assert!(ext_coefficient(&p, 4, &mu(&[3]), true).is_err());
    }

    #[test]
    fn ext_at_l2_matches_simple_branching() {
        for g in 1..=4 {
            for d in 2..=5 {
                let p2 = params(g, d, Some(2));
                let p = params(g, d, None);
                for k in 2..=p.b() / 2 {
                    for m in enumerate_formats(d) {
                        assert_eq!(
                            ext_coefficient(&p2, k, &m, true).unwrap(),
                            kkz_coefficient(&p, k, &m).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn strict_boundary_examples() {
        let strict =
            |g, d| enumerate_boundary(&params(g, d, None), EnumerationMode::Strict).unwrap();
        assert_eq!(strict(1, 2), vec![sym(2, &[1, 1])]);
        assert_eq!(strict(2, 2), vec![sym(2, &[1, 1]), sym(3, &[2])]);
        let mut got = strict(1, 3);
        got.sort();
        let mut want = vec![sym(2, &[1, 1, 1]), sym(2, &[3]), sym(3, &[2, 1])];
        want.sort();
        assert_eq!(got, want);
        // format order inside each k
        assert_eq!(
            strict(1, 3),
            vec![sym(2, &[3]), sym(2, &[1, 1, 1]), sym(3, &[2, 1])]
        );
    }

    #[test]
    fn strict_guard() {
        assert!(enumerate_boundary(&params(0, 6, None), EnumerationMode::Strict).is_err());
        assert!(enumerate_boundary(&params(0, 6, None), EnumerationMode::Formal).is_ok());
    }

    #[test]
    fn hodge_examples() {
        let e = hodge_class(&params(2, 2, None), EnumerationMode::Formal).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.coefficient(&sym(2, &[1, 1])), rat(1, 5));
        assert_eq!(e.coefficient(&sym(3, &[2])), rat(1, 5));
        let e = hodge_class(&params(1, 2, None), EnumerationMode::Formal).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(&sym(2, &[1, 1])), rat(1, 6));
    }

    #[test]
    fn l_case_spot_label_is_empty() {
        // (k-1) + (l-1) + (d-r) = 1 + 2 + 0 is odd: no monodromy exists.
        let p = params(1, 3, Some(3));
        let label = BoundaryLabel::new(2, mu(&[1, 1, 1]), Some(true));
        assert!(!label.is_parity_feasible(&p));
        assert!(!crate::monodromy::exists_cover(&p, &label).unwrap());
        let e = hodge_class(&p, EnumerationMode::Formal).unwrap();
        assert!(!e.terms().any(|(l, _)| *l == label));
        // its mirror (2, (1,1,1), false) = (3, (1,1,1), true) is present
        let mirror = BoundaryLabel::new(2, mu(&[1, 1, 1]), Some(false)).to_side1(p.b());
        assert!(e.terms().any(|(l, _)| *l == mirror));
    }

    #[test]
    fn expand_and_fold() {
        let e = hodge_class(&params(2, 3, None), EnumerationMode::Formal).unwrap();
        let m = e.expand_marked().unwrap();
        assert_eq!(
            m,
            hodge_class(&params(2, 3, Some(2)), EnumerationMode::Formal).unwrap()
        );
        assert_eq!(m.fold_symmetric().unwrap(), e);
        let l3 = hodge_class(&params(2, 3, Some(3)), EnumerationMode::Formal).unwrap();
        assert!(l3.fold_symmetric().is_err());
    }

    #[test]
    fn json_shape() {
        let e = hodge_class(&params(2, 2, None), EnumerationMode::Formal).unwrap();
        assert_eq!(
            e.to_json(),
            concat!(
                r#"{"g":2,"d":2,"l":null,"b":6,"terms":["#,
                r#"{"k":2,"mu":[1,1],"side1":null,"m_lcm":1,"branches":1,"coeff":"1/5"},"#,
                r#"{"k":3,"mu":[2],"side1":null,"m_lcm":2,"branches":1,"coeff":"1/5"}]}"#
            )
        );
        assert_eq!(HodgeExpression::from_json(&e.to_json()).unwrap(), e);
    }

    #[test]
    fn json_rejects_inconsistent_input() {
        let bad = [
            r#"{"g":2,"d":2,"l":null,"b":5,"terms":[]}"#,
            r#"{"g":2,"d":2,"l":null,"b":6,"terms":[{"k":2,"mu":[2],"side1":null,"m_lcm":2,"branches":1,"coeff":"1"}]}"#,
            r#"{"g":2,"d":2,"l":null,"b":6,"terms":[{"k":3,"mu":[2],"side1":null,"m_lcm":1,"branches":1,"coeff":"1"}]}"#,
            r#"{"g":2,"d":2,"l":null,"b":6,"terms":[{"k":4,"mu":[1,1],"side1":null,"m_lcm":1,"branches":1,"coeff":"1"}]}"#,
            r#"{"g":2,"d":2,"l":2,"b":6,"terms":[{"k":2,"mu":[1,1],"side1":false,"m_lcm":1,"branches":1,"coeff":"1"}]}"#,
            r#"{"g":2,"d":2,"l":null,"b":6,"terms":[],"extra":1}"#,
        ];
        for s in bad {
            assert!(HodgeExpression::from_json(s).is_err(), "{s}");
        }
    }
}
