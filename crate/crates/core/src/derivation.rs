//! Symbolic re-derivation of the Hodge class.
//!
//! The relative dualizing sheaf of the family of covers is written as
//! `ω_t = f*ω + Σ c_i R_i`, where `f*ω` is pulled back from the universal
//! rational curve and `R_i` is the ramification section over the `i`-th
//! branch point. Squaring and pushing forward through [`PushforwardTable`]
//! gives a class in pulled-back `T` and `ψ` symbols. [`reduce`] then
//! rewrites those into boundary symbols:
//!
//! * `Σ_i ψ_i = Σ_j j(b−j)/(b−1) T^j`;
//! * `ψ_1 = Σ_k (b−k)(b−1−k)/((b−1)(b−2)) T1(k)`, where `T1(k)` collects the
//!   boundary divisors whose `p_1`-side has `k` points;
//! * `T^j = T1(j) + T1(b−j)` (`j < b/2`), `T^{b/2} = T1(b/2)`;
//! * `T1(k) = Σ_μ m(μ) δ¹_{k,μ}`.
//!
//! Finally `12 λ = t_*[ω_t²] + Σ m(μ) (Σ_i 1/m_i) δ_{k,μ}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formats::{enumerate_formats, RamificationFormat};
use crate::hurwitz::{self, BoundaryLabel, EnumerationMode, HodgeExpression, HurwitzParams};
use crate::rational::{self, int, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// `δ_{k,μ}`, symmetric basis, `k ≤ b/2`.
    Delta(u32, RamificationFormat),
    /// `δ¹_{k,μ}`: `p_1` lies on the side with `k` branch points.
    Delta1(u32, RamificationFormat),
    /// `q* T_b^j`.
    TPull(u32),
    /// `q*` of the boundary divisors whose `p_1`-side has `k` points.
    TPull1(u32),
    /// `q* ψ_i`.
    PsiPull(u32),
    Lambda,
    /// `t_*[ω_t²]`.
    OmegaSq,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Delta(k, mu) => write!(f, "Delta({k},{mu})"),
            Symbol::Delta1(k, mu) => write!(f, "Delta1({k},{mu})"),
            Symbol::TPull(j) => write!(f, "TPull({j})"),
            Symbol::TPull1(k) => write!(f, "TPull1({k})"),
            Symbol::PsiPull(i) => write!(f, "PsiPull({i})"),
            Symbol::Lambda => write!(f, "Lambda"),
            Symbol::OmegaSq => write!(f, "OmegaSq"),
        }
    }
}

/// A formal rational combination of [`Symbol`]s over a Hurwitz base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalClass {
    params: HurwitzParams,
    terms: BTreeMap<Symbol, Rational>,
}

impl FormalClass {
    pub fn zero(params: HurwitzParams) -> Self {
        FormalClass {
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        params: HurwitzParams,
        terms: impl IntoIterator<Item = (Symbol, Rational)>,
    ) -> Self {
        let mut out = Self::zero(params);
        for (s, c) in terms {
            out.add_term(s, c);
        }
        out
    }

    pub fn params(&self) -> &HurwitzParams {
        &self.params
    }

    pub fn add_term(&mut self, symbol: Symbol, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(symbol.clone())
            .or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&symbol);
        }
    }

    pub fn add_class(&mut self, other: &FormalClass) {
        for (s, c) in &other.terms {
            self.add_term(s.clone(), c.clone());
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self::from_terms(
            self.params,
            self.terms.iter().map(|(s, c)| (s.clone(), c * factor)),
        )
    }

    pub fn coefficient(&self, symbol: &Symbol) -> Rational {
        self.terms
            .get(symbol)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Symbol, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when only `Delta`/`Delta1` symbols remain.
    pub fn is_reduced(&self) -> bool {
        self.terms
            .keys()
            .all(|s| matches!(s, Symbol::Delta(..) | Symbol::Delta1(..)))
    }
}

impl fmt::Display for FormalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}){s}", rational::format_rational(c))?;
        }
        Ok(())
    }
}

/// A summand of `ω_t`: the pulled-back dualizing sheaf or a ramification
/// section `R_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaPiece {
    Pullback,
    Section(u32),
}

/// `ω_t = f*ω + Σ_i c_i R_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaTotal {
    pub section_coeffs: Vec<Rational>,
}

impl OmegaTotal {
    pub fn pieces(&self) -> impl Iterator<Item = (OmegaPiece, Rational)> + '_ {
        std::iter::once((OmegaPiece::Pullback, Rational::one())).chain(
            self.section_coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (OmegaPiece::Section(i as u32 + 1), c.clone())),
        )
    }
}

/// `c_i = 1` for every simple branch point, `c_1 = l − 1` at the `l`-fold point.
pub fn omega_total(params: &HurwitzParams) -> OmegaTotal {
    let mut section_coeffs = vec![Rational::one(); params.b() as usize];
    if let Some(l) = params.l() {
        section_coeffs[0] = int(i64::from(l) - 1);
    }
    OmegaTotal { section_coeffs }
}

/// `t_*` of degree-two products of the pieces of `ω_t`:
///
/// * `f*ω · f*ω ↦ −d Σ_j TPull(j)`
/// * `f*ω · R_i ↦ PsiPull(i)`
/// * `R_i · R_j ↦ 0` for `i ≠ j`
/// * `R_i · R_i ↦ −(1/e_i) PsiPull(i)`, with `e_i` the ramification order
///   of the section (`2`, or `l` at `p_1`).
#[derive(Clone, Debug)]
pub struct PushforwardTable {
    params: HurwitzParams,
    orders: Vec<u32>,
}

impl PushforwardTable {
    pub fn new(params: &HurwitzParams) -> Self {
        let mut orders = vec![2; params.b() as usize];
        if let Some(l) = params.l() {
            orders[0] = l;
        }
        PushforwardTable {
            params: *params,
            orders,
        }
    }

    pub fn push(&self, a: OmegaPiece, b: OmegaPiece) -> FormalClass {
        let p = self.params;
        let mut out = FormalClass::zero(p);
        match (a, b) {
            (OmegaPiece::Pullback, OmegaPiece::Pullback) => {
                for j in 2..=p.b() / 2 {
                    out.add_term(Symbol::TPull(j), -int(p.d().into()));
                }
            }
            (OmegaPiece::Pullback, OmegaPiece::Section(i))
            | (OmegaPiece::Section(i), OmegaPiece::Pullback) => {
                out.add_term(Symbol::PsiPull(i), Rational::one());
            }
            (OmegaPiece::Section(i), OmegaPiece::Section(j)) if i == j => {
                let e = self.orders[i as usize - 1];
                out.add_term(Symbol::PsiPull(i), -rat(1, e.into()));
            }
            (OmegaPiece::Section(_), OmegaPiece::Section(_)) => {}
        }
        out
    }
}

/// `t_*[ω_t²]`, expanded bilinearly through the pushforward table.
pub fn push_omega_square(params: &HurwitzParams) -> FormalClass {
    let table = PushforwardTable::new(params);
    let omega = omega_total(params);
    let pieces: Vec<_> = omega.pieces().collect();
    let mut out = FormalClass::zero(*params);
    for (a, ca) in &pieces {
        for (b, cb) in &pieces {
            out.add_class(&table.push(*a, *b).scaled(&(ca * cb)));
        }
    }
    out
}

/// `(2l+1)(l−2)/(2l)`, the excess coefficient of `q*ψ_1` in `t_*[ω_t²]`.
pub fn psi1_excess(l: u32) -> Rational {
    let l = i64::from(l);
    rat((2 * l + 1) * (l - 2), 2 * l)
}

/// Which boundary symbols a reduced class is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// `Delta(k, μ)`, `k ≤ b/2`.
    Symmetric,
    /// `Delta1(k, μ)`, `2 ≤ k ≤ b − 2`.
    Marked,
}

impl Basis {
    /// The basis used by [`hurwitz::hodge_class`] for these params.
    pub fn for_params(params: &HurwitzParams) -> Self {
        if params.is_marked() {
            Basis::Marked
        } else {
            Basis::Symmetric
        }
    }
}

/// Parity feasibility of `δ¹_{k,μ}`. Without `l` the marked point is a simple
/// branch point, which is the `l = 2` rule.
fn marked_feasible(params: &HurwitzParams, k: u32, mu: &RamificationFormat) -> bool {
    let l = params.l().unwrap_or(2);
    ((k - 1) + (l - 1) + mu.reflection_length()).is_multiple_of(2)
}

/// One step of a derivation, with the class it produced.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub rule: &'static str,
    pub note: String,
    pub class: FormalClass,
}

#[derive(Serialize)]
struct TraceTermWire {
    symbol: String,
    #[serde(with = "rational::serde_str")]
    coeff: Rational,
}

#[derive(Serialize)]
struct TraceStepWire<'a> {
    rule: &'a str,
    note: &'a str,
    terms: Vec<TraceTermWire>,
}

impl TraceStep {
    fn new(rule: &'static str, note: impl Into<String>, class: &FormalClass) -> Self {
        TraceStep {
            rule,
            note: note.into(),
            class: class.clone(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(TraceStepWire {
            rule: self.rule,
            note: &self.note,
            terms: self
                .class
                .terms()
                .map(|(s, c)| TraceTermWire {
                    symbol: s.to_string(),
                    coeff: c.clone(),
                })
                .collect(),
        })
        .expect("serializable")
    }
}

fn check_symbols(x: &FormalClass) -> Result<()> {
    let b = x.params.b();
    for s in x.terms.keys() {
        let ok = match s {
            Symbol::Lambda | Symbol::OmegaSq => {
                return Err(Error::UnknownSymbol(s.to_string()));
            }
            Symbol::Delta(k, mu) => (2..=b / 2).contains(k) && mu.degree() == x.params.d(),
            Symbol::Delta1(k, mu) => (2..=b - 2).contains(k) && mu.degree() == x.params.d(),
            Symbol::TPull(j) => (2..=b / 2).contains(j),
            Symbol::TPull1(k) => (2..=b - 2).contains(k),
            Symbol::PsiPull(i) => (1..=b).contains(i),
        };
        if !ok {
            return Err(Error::UnknownSymbol(format!(
                "{s} (out of range for b = {b})"
            )));
        }
    }
    Ok(())
}

/// Replaces the `PsiPull` symbols: the part common to `ψ_2, …, ψ_b` becomes
/// a multiple of `Σψ_i` and is rewritten through `T` classes; the remaining
/// `ψ_1` excess is expanded into `TPull1` symbols.
pub fn rewrite_psi(x: &FormalClass) -> Result<FormalClass> {
    check_symbols(x)?;
    let p = x.params;
    let b = p.b();
    let common = x.coefficient(&Symbol::PsiPull(2));
    for i in 3..=b {
        if x.coefficient(&Symbol::PsiPull(i)) != common {
            return Err(Error::NotSymmetric(format!(
                "PsiPull({i}) and PsiPull(2) have different coefficients; \
                 only psi_1 can be rewritten on its own"
            )));
        }
    }
    let excess = x.coefficient(&Symbol::PsiPull(1)) - &common;

    let mut out = FormalClass::zero(p);
    for (s, c) in &x.terms {
        if !matches!(s, Symbol::PsiPull(_)) {
            out.add_term(s.clone(), c.clone());
        }
    }
    let bb = i64::from(b);
    for j in 2..=b / 2 {
        let jj = i64::from(j);
        out.add_term(Symbol::TPull(j), &common * rat(jj * (bb - jj), bb - 1));
    }
    for k in 2..=b - 2 {
        let kk = i64::from(k);
        out.add_term(
            Symbol::TPull1(k),
            &excess * rat((bb - kk) * (bb - 1 - kk), (bb - 1) * (bb - 2)),
        );
    }
    Ok(out)
}

/// Splits `TPull(j)` and `Delta(k, μ)` by the side containing `p_1`.
pub fn split_by_marked_side(x: &FormalClass) -> Result<FormalClass> {
    check_symbols(x)?;
    let p = x.params;
    let b = p.b();
    let mut out = FormalClass::zero(p);
    for (s, c) in &x.terms {
        match s {
            Symbol::TPull(j) => {
                out.add_term(Symbol::TPull1(*j), c.clone());
                if 2 * j != b {
                    out.add_term(Symbol::TPull1(b - j), c.clone());
                }
            }
            Symbol::Delta(k, mu) => {
                for side in [*k, b - k] {
                    if marked_feasible(&p, side, mu) {
                        out.add_term(Symbol::Delta1(side, mu.clone()), c.clone());
                    }
                    if 2 * k == b {
                        break;
                    }
                }
            }
            _ => out.add_term(s.clone(), c.clone()),
        }
    }
    Ok(out)
}

/// `TPull1(k) ↦ Σ_μ m(μ) Delta1(k, μ)` over the parity-feasible formats.
pub fn rewrite_marked_pullbacks(x: &FormalClass) -> Result<FormalClass> {
    check_symbols(x)?;
    let p = x.params;
    let formats = enumerate_formats(p.d());
    let mut out = FormalClass::zero(p);
    for (s, c) in &x.terms {
        match s {
            Symbol::TPull1(k) => {
                for mu in &formats {
                    if marked_feasible(&p, *k, mu) {
                        let m = Rational::from_integer(mu.lcm().into());
                        out.add_term(Symbol::Delta1(*k, mu.clone()), c * m);
                    }
                }
            }
            _ => out.add_term(s.clone(), c.clone()),
        }
    }
    Ok(out)
}

/// Folds `Delta1` symbols into `Delta(k, μ) = Delta1(k, μ) + Delta1(b−k, μ)`;
/// fails if the two sides carry different coefficients.
pub fn fold_symmetric(x: &FormalClass) -> Result<FormalClass> {
    check_symbols(x)?;
    let p = x.params;
    let b = p.b();
    let mut out = FormalClass::zero(p);
    for (s, c) in &x.terms {
        match s {
            Symbol::Delta1(k, mu) => {
                let mirror = Symbol::Delta1(b - k, mu.clone());
                let other = x.coefficient(&mirror);
                if other != *c {
                    return Err(Error::NotSymmetric(format!(
                        "{s} has {} but {mirror} has {}",
                        rational::format_rational(c),
                        rational::format_rational(&other)
                    )));
                }
                if 2 * k <= b {
                    out.add_term(Symbol::Delta(*k, mu.clone()), c.clone());
                }
            }
            _ => out.add_term(s.clone(), c.clone()),
        }
    }
    Ok(out)
}

/// Rewrites `x` to boundary symbols in the requested basis.
pub fn reduce(x: &FormalClass, basis: Basis) -> Result<FormalClass> {
    reduce_traced(x, basis, &mut Vec::new())
}

pub fn reduce_traced(
    x: &FormalClass,
    basis: Basis,
    trace: &mut Vec<TraceStep>,
) -> Result<FormalClass> {
    check_symbols(x)?;
    let b = x.params.b();
    let y = rewrite_psi(x)?;
    trace.push(TraceStep::new(
        "psi_relation",
        format!(
            "sum_i psi_i = sum_j j({b}-j)/{} T^j; psi_1 excess = sum_k ({b}-k)({}-k)/{} T1(k)",
            b - 1,
            b - 1,
            (b - 1) * (b - 2)
        ),
        &y,
    ));
    let y = split_by_marked_side(&y)?;
    trace.push(TraceStep::new(
        "split_by_p1_side",
        format!("T^j = T1(j) + T1({b}-j) for j < b/2, T^(b/2) = T1(b/2)"),
        &y,
    ));
    let y = rewrite_marked_pullbacks(&y)?;
    trace.push(TraceStep::new(
        "pullback_dictionary",
        "q* T1(k) = sum_mu m(mu) delta1(k,mu)",
        &y,
    ));
    match basis {
        Basis::Marked => Ok(y),
        Basis::Symmetric => {
            let z = fold_symmetric(&y)?;
            trace.push(TraceStep::new(
                "fold",
                "delta(k,mu) = delta1(k,mu) + delta1(b-k,mu)",
                &z,
            ));
            Ok(z)
        }
    }
}

/// `Σ m(μ) (Σ_i 1/m_i) δ` over the formal boundary labels, in the basis of
/// the params.
pub fn node_term(params: &HurwitzParams) -> Result<FormalClass> {
    let mut out = FormalClass::zero(*params);
    for label in hurwitz::enumerate_boundary(params, EnumerationMode::Formal)? {
        let m = Rational::from_integer(label.mu.lcm().into());
        let weight = m * label.mu.reciprocal_sum();
        out.add_term(label_symbol(&label), weight);
    }
    Ok(out)
}

fn label_symbol(label: &BoundaryLabel) -> Symbol {
    match label.side1 {
        None => Symbol::Delta(label.k, label.mu.clone()),
        Some(_) => Symbol::Delta1(label.k, label.mu.clone()),
    }
}

fn to_expression(x: &FormalClass) -> Result<HodgeExpression> {
    let p = x.params;
    let mut terms = BTreeMap::new();
    for (s, c) in &x.terms {
        let label = match s {
            Symbol::Delta(k, mu) if !p.is_marked() => BoundaryLabel::new(*k, mu.clone(), None),
            Symbol::Delta1(k, mu) if p.is_marked() => {
                BoundaryLabel::new(*k, mu.clone(), Some(true))
            }
            _ => return Err(Error::UnknownSymbol(format!("{s} in a final expression"))),
        };
        terms.insert(label, c.clone());
    }
    // keep vanishing coefficients so the label set matches the closed form
    for label in hurwitz::enumerate_boundary(&p, EnumerationMode::Formal)? {
        terms.entry(label).or_insert_with(Rational::zero);
    }
    HodgeExpression::from_terms(p, terms)
}

/// The derived Hodge class with the steps that produced it.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub expression: HodgeExpression,
    pub trace: Vec<TraceStep>,
}

pub fn derive_hodge(params: &HurwitzParams) -> Result<HodgeExpression> {
    Ok(derive_hodge_traced(params)?.expression)
}

pub fn derive_hodge_traced(params: &HurwitzParams) -> Result<Derivation> {
    let mut trace = Vec::new();
    let omega = omega_total(params);
    let coeffs: Vec<String> = omega
        .section_coeffs
        .iter()
        .map(rational::format_rational)
        .collect();
    trace.push(TraceStep::new(
        "omega_total",
        format!(
            "omega_t = f*omega + sum_i c_i R_i with c = [{}]",
            coeffs.join(",")
        ),
        &FormalClass::zero(*params),
    ));

    let square = push_omega_square(params);
    trace.push(TraceStep::new(
        "push_omega_square",
        "t_*[omega_t^2] via f*w.f*w = -d sum T^j, f*w.R_i = psi_i, R_i.R_i = -psi_i/e_i",
        &square,
    ));

    let basis = Basis::for_params(params);
    let reduced = reduce_traced(&square, basis, &mut trace)?;

    let node = node_term(params)?;
    let note = if params.is_marked() {
        "node term m(mu) sum 1/m_i on each delta1 label (same local multiplicity as without l)"
    } else {
        "node term m(mu) sum 1/m_i on each delta label"
    };
    trace.push(TraceStep::new("node_term", note, &node));

    let mut twelve_lambda = reduced;
    twelve_lambda.add_class(&node);
    trace.push(TraceStep::new(
        "riemann_roch",
        "12 lambda = t_*[omega_t^2] + node term",
        &twelve_lambda,
    ));

    let lambda = twelve_lambda.scaled(&rat(1, 12));
    trace.push(TraceStep::new("divide", "lambda", &lambda));

    Ok(Derivation {
        expression: to_expression(&lambda)?,
        trace,
    })
}

/// True iff the derived class equals the closed form coefficient for
/// coefficient on the formal label basis.
pub fn check_theorems(params: &HurwitzParams) -> Result<bool> {
    let derived = derive_hodge(params)?;
    let closed = hurwitz::hodge_class(params, EnumerationMode::Formal)?;
    Ok(derived.agrees_with(&closed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(g: u32, d: u32, l: Option<u32>) -> HurwitzParams {
        HurwitzParams::new(g, d, l).unwrap()
    }

    fn mu(parts: &[u32]) -> RamificationFormat {
        RamificationFormat::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn omega_total_examples() {
        let p = params(2, 2, None);
        assert!(omega_total(&p).section_coeffs.iter().all(|c| c.is_one()));
        assert_eq!(omega_total(&p).section_coeffs.len(), 6);
        let o = omega_total(&params(1, 3, Some(3)));
        assert_eq!(o.section_coeffs[0], int(2));
        assert!(o.section_coeffs[1..].iter().all(|c| c.is_one()));
        assert!(omega_total(&params(1, 3, Some(2)))
            .section_coeffs
            .iter()
            .all(|c| c.is_one()));
    }

    #[test]
    fn table_is_symmetric() {
        let p = params(1, 3, Some(3));
        let t = PushforwardTable::new(&p);
        let pieces = [
            OmegaPiece::Pullback,
            OmegaPiece::Section(1),
            OmegaPiece::Section(3),
        ];
        for a in pieces {
            for b in pieces {
                assert_eq!(t.push(a, b), t.push(b, a));
            }
        }
        assert!(t
            .push(OmegaPiece::Section(1), OmegaPiece::Section(2))
            .is_zero());
        assert_eq!(
            t.push(OmegaPiece::Section(1), OmegaPiece::Section(1))
                .coefficient(&Symbol::PsiPull(1)),
            rat(-1, 3)
        );
    }

    #[test]
    fn omega_square_reductions() {
        let reduced = reduce(&push_omega_square(&params(1, 2, None)), Basis::Symmetric).unwrap();
        assert!(reduced.is_zero());

        let reduced = reduce(&push_omega_square(&params(2, 2, None)), Basis::Symmetric).unwrap();
        assert_eq!(
            reduced.coefficient(&Symbol::Delta(2, mu(&[1, 1]))),
            rat(2, 5)
        );

        let sq = push_omega_square(&params(1, 3, Some(3)));
        let excess = sq.coefficient(&Symbol::PsiPull(1)) - sq.coefficient(&Symbol::PsiPull(2));
        assert_eq!(excess, rat(7, 6));
        assert_eq!(psi1_excess(3), rat(7, 6));
    }

    #[test]
    fn reduce_examples() {
        let p = params(2, 2, None);
        let x = FormalClass::from_terms(p, [(Symbol::TPull(2), int(1))]);
        let r = reduce(&x, Basis::Symmetric).unwrap();
        assert_eq!(
            r,
            FormalClass::from_terms(p, [(Symbol::Delta(2, mu(&[1, 1])), int(1))])
        );

        // b = 5: Σ ψ_i = (3/2) T^2
        let p5 = params(1, 3, Some(3));
        let x = FormalClass::from_terms(p5, (1..=5).map(|i| (Symbol::PsiPull(i), int(1))));
        assert_eq!(
            rewrite_psi(&x).unwrap(),
            FormalClass::from_terms(p5, [(Symbol::TPull(2), rat(3, 2))])
        );

        let zero = FormalClass::zero(p);
        assert!(reduce(&zero, Basis::Symmetric).unwrap().is_zero());
    }

    #[test]
    fn reduce_rejects_unexpanded_symbols() {
        let p = params(2, 2, None);
        for s in [Symbol::Lambda, Symbol::OmegaSq, Symbol::TPull(9)] {
            let x = FormalClass::from_terms(p, [(s, int(1))]);
            assert!(matches!(
                reduce(&x, Basis::Symmetric),
                Err(Error::UnknownSymbol(_))
            ));
        }
        let lopsided = FormalClass::from_terms(p, [(Symbol::PsiPull(3), int(1))]);
        assert!(reduce(&lopsided, Basis::Marked).is_err());
        let psi1 = FormalClass::from_terms(p, [(Symbol::PsiPull(1), int(1))]);
        assert!(reduce(&psi1, Basis::Marked).is_ok());
        assert!(matches!(
            reduce(&psi1, Basis::Symmetric),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn derive_examples() {
        let e = derive_hodge(&params(1, 2, None)).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(
            e.coefficient(&BoundaryLabel::new(2, mu(&[1, 1]), None)),
            rat(1, 6)
        );

        let e = derive_hodge(&params(2, 2, None)).unwrap();
        assert_eq!(
            e.coefficient(&BoundaryLabel::new(2, mu(&[1, 1]), None)),
            rat(1, 5)
        );
        assert_eq!(
            e.coefficient(&BoundaryLabel::new(3, mu(&[2]), None)),
            rat(1, 5)
        );

        for (g, d) in [(1, 2), (2, 3), (3, 4)] {
            let marked = derive_hodge(&params(g, d, Some(2))).unwrap();
            assert_eq!(
                marked.fold_symmetric().unwrap(),
                derive_hodge(&params(g, d, None)).unwrap()
            );
        }
    }

    #[test]
    fn derived_matches_closed_form_examples() {
        assert!(check_theorems(&params(2, 2, None)).unwrap());
        assert!(check_theorems(&params(1, 3, Some(3))).unwrap());
        assert!(check_theorems(&params(0, 3, None)).unwrap());
    }

    #[test]
    fn trace_has_every_stage() {
        let d = derive_hodge_traced(&params(1, 3, Some(3))).unwrap();
        let rules: Vec<_> = d.trace.iter().map(|s| s.rule).collect();
        assert_eq!(
            rules,
            [
                "omega_total",
                "push_omega_square",
                "psi_relation",
                "split_by_p1_side",
                "pullback_dictionary",
                "node_term",
                "riemann_roch",
                "divide"
            ]
        );
        assert!(d.trace.last().unwrap().class.is_reduced());
    }
}
