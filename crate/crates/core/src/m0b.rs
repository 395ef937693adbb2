//! Divisor calculus on the moduli space of stable `b`-pointed rational curves.
//!
//! Boundary divisors `S_b^Λ` are indexed by subsets `Λ ⊂ {1, …, b}` with
//! `2 ≤ #Λ ≤ b − 2`, modulo `S_b^Λ = S_b^{Λ^c}`. The canonical representative
//! of each pair is the side meeting `{1, 2, 3}` in at most one point.
//!
//! Boundary classes satisfy linear relations once `b ≥ 5`, so a coefficient
//! map is not a normal form. Classes are compared numerically instead, by
//! pairing against every F-curve (see [`classes_equal_numerically`]).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, int, rat, Rational};

/// Largest number of marked points supported.
pub const MAX_POINTS: u32 = 20;
/// Largest number of F-curves [`enumerate_fcurves`] will list (b ≤ 13).
pub const FCURVE_LIMIT: u128 = 5_000_000;

fn check_points(b: u32) -> Result<()> {
    if !(4..=MAX_POINTS).contains(&b) {
        return Err(Error::out_of_range("b", b.into(), 4, MAX_POINTS.into()));
    }
    Ok(())
}

fn full_mask(b: u32) -> u64 {
    (1u64 << b) - 1
}

fn mask_members(mask: u64) -> impl Iterator<Item = u32> {
    (0..64).filter(move |i| mask >> i & 1 == 1).map(|i| i + 1)
}

/// Subsets of `{1..b}` of size `j`, as bitmasks (bit `i − 1` for point `i`).
fn subsets_of_size(b: u32, j: u32) -> impl Iterator<Item = u64> {
    // Gosper's hack
    let limit = 1u64 << b;
    let mut next = (1..=b).contains(&j).then(|| (1u64 << j) - 1);
    std::iter::from_fn(move || {
        let cur = next?;
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        let n = (((r ^ cur) >> 2) / c) | r;
        next = (n < limit).then_some(n);
        Some(cur)
    })
}

/// A canonical boundary label `Λ` on `b` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MarkedSubset {
    b: u32,
    mask: u64,
}

impl MarkedSubset {
    /// Returns whichever of `members`, its complement meets `{1,2,3}` at most
    /// once. Points are 1-based.
    pub fn canonicalize(b: u32, members: &[u32]) -> Result<Self> {
        check_points(b)?;
        let mut mask = 0u64;
        for &m in members {
            if m == 0 || m > b {
                return Err(Error::out_of_range("marked point", m.into(), 1, b.into()));
            }
            if mask >> (m - 1) & 1 == 1 {
                return Err(Error::Parse(format!("point {m} repeated")));
            }
            mask |= 1 << (m - 1);
        }
        Self::from_mask(b, mask)
    }

    pub(crate) fn from_mask(b: u32, mask: u64) -> Result<Self> {
        let size = mask.count_ones();
        if size < 2 || size + 2 > b {
            return Err(Error::out_of_range(
                "subset size",
                size.into(),
                2,
                i64::from(b) - 2,
            ));
        }
        let mask = if (mask & 0b111).count_ones() <= 1 {
            mask
        } else {
            full_mask(b) & !mask
        };
        Ok(MarkedSubset { b, mask })
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn members(&self) -> Vec<u32> {
        mask_members(self.mask).collect()
    }

    pub fn complement_members(&self) -> Vec<u32> {
        mask_members(full_mask(self.b) & !self.mask).collect()
    }

    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, point: u32) -> bool {
        point >= 1 && point <= self.b && self.mask >> (point - 1) & 1 == 1
    }

    fn mask(&self) -> u64 {
        self.mask
    }
}

impl Ord for MarkedSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.b
            .cmp(&other.b)
            .then_with(|| mask_members(self.mask).cmp(mask_members(other.mask)))
    }
}

impl PartialOrd for MarkedSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MarkedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members().iter().map(u32::to_string).collect();
        write!(f, "S^{{{}}}", m.join(","))
    }
}

/// A formal rational combination of boundary divisors on `b` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    b: u32,
    coeffs: BTreeMap<MarkedSubset, Rational>,
}

impl DivisorClass {
    pub fn zero(b: u32) -> Result<Self> {
        check_points(b)?;
        Ok(DivisorClass {
            b,
            coeffs: BTreeMap::new(),
        })
    }

    /// The single boundary divisor `S_b^Λ` with coefficient 1.
    pub fn boundary(subset: MarkedSubset) -> Self {
        let mut c = DivisorClass {
            b: subset.b,
            coeffs: BTreeMap::new(),
        };
        c.add_term(subset, Rational::one());
        c
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Adds `coeff · S^Λ`; panics if `Λ` lives on a different number of points.
    pub fn add_term(&mut self, subset: MarkedSubset, coeff: Rational) {
        assert_eq!(subset.b, self.b, "subset on wrong number of points");
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(subset).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&subset);
        }
    }

    pub fn coeff(&self, subset: &MarkedSubset) -> Rational {
        self.coeffs
            .get(subset)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MarkedSubset, &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        let mut out = DivisorClass {
            b: self.b,
            coeffs: BTreeMap::new(),
        };
        for (s, c) in &self.coeffs {
            out.add_term(*s, c * factor);
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, Rational::one())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -Rational::one())
    }

    fn combine(&self, other: &Self, sign: Rational) -> Result<Self> {
        if self.b != other.b {
            return Err(Error::MismatchedPoints {
                left: self.b,
                right: other.b,
            });
        }
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_term(*s, c * &sign);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DivisorClassWire::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let wire: DivisorClassWire =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        wire.try_into()
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}){}", rational::format_rational(c), s)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermWire {
    lambda: Vec<u32>,
    #[serde(with = "rational::serde_str")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DivisorClassWire {
    b: u32,
    terms: Vec<TermWire>,
}

impl From<&DivisorClass> for DivisorClassWire {
    fn from(c: &DivisorClass) -> Self {
        DivisorClassWire {
            b: c.b,
            terms: c
                .coeffs
                .iter()
                .map(|(s, q)| TermWire {
                    lambda: s.members(),
                    coeff: q.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<DivisorClassWire> for DivisorClass {
    type Error = Error;

    fn try_from(w: DivisorClassWire) -> Result<Self> {
        let mut out = DivisorClass::zero(w.b)?;
        for t in w.terms {
            let s = MarkedSubset::canonicalize(w.b, &t.lambda)?;
            out.add_term(s, t.coeff);
        }
        Ok(out)
    }
}

/// An F-curve: a partition of `{1..b}` into four nonempty blocks, ordered by
/// least element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FCurve {
    b: u32,
    blocks: [u64; 4],
}

impl FCurve {
    /// Builds an F-curve from four blocks in any order.
    pub fn new(b: u32, blocks: [&[u32]; 4]) -> Result<Self> {
        check_points(b)?;
        let mut masks = [0u64; 4];
        let mut seen = 0u64;
        for (mask, block) in masks.iter_mut().zip(blocks) {
            if block.is_empty() {
                return Err(Error::Parse("empty F-curve block".into()));
            }
            for &p in block {
                if p == 0 || p > b {
                    return Err(Error::out_of_range("marked point", p.into(), 1, b.into()));
                }
                let bit = 1u64 << (p - 1);
                if seen & bit != 0 {
                    return Err(Error::Parse(format!("point {p} repeated")));
                }
                seen |= bit;
                *mask |= bit;
            }
        }
        if seen != full_mask(b) {
            return Err(Error::Parse("F-curve blocks must cover every point".into()));
        }
        masks.sort_unstable_by_key(|m| m.trailing_zeros());
        Ok(FCurve { b, blocks: masks })
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn blocks(&self) -> [Vec<u32>; 4] {
        self.blocks.map(|m| mask_members(m).collect())
    }

    /// Intersection number with a single boundary divisor.
    fn pair_boundary(&self, subset: &MarkedSubset) -> i64 {
        let s = subset.mask();
        let sc = full_mask(self.b) & !s;
        let [a, b, c, d] = self.blocks;
        let mut total = 0;
        for (x, y) in [(a | b, c | d), (a | c, b | d), (a | d, b | c)] {
            if s == x || s == y {
                total += 1;
            }
        }
        for blk in self.blocks {
            if blk.count_ones() >= 2 && (s == blk || sc == blk) {
                total -= 1;
            }
        }
        total
    }
}

impl Ord for FCurve {
    fn cmp(&self, other: &Self) -> Ordering {
        self.b.cmp(&other.b).then_with(|| {
            self.blocks
                .iter()
                .map(|&m| mask_members(m))
                .zip(other.blocks.iter().map(|&m| mask_members(m)))
                .map(|(x, y)| x.cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for FCurve {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

impl FCurve {
    /// Parses `"1,2|3|4|5"`; `b` is the largest point mentioned.
    pub fn parse(s: &str) -> Result<Self> {
        let blocks: Vec<Vec<u32>> = s
            .split('|')
            .map(|blk| {
                blk.split(',')
                    .map(|t| {
                        let t = t.trim();
                        if t.is_empty() || !t.bytes().all(|c| c.is_ascii_digit()) {
                            return Err(Error::Parse(format!("bad point {t:?} in {s:?}")));
                        }
                        t.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        if blocks.len() != 4 {
            return Err(Error::Parse(format!(
                "F-curve needs 4 blocks, got {}",
                blocks.len()
            )));
        }
        let b = blocks.iter().flatten().copied().max().unwrap_or(0);
        FCurve::new(b, [&blocks[0], &blocks[1], &blocks[2], &blocks[3]])
    }
}

impl FromStr for FCurve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// All F-curves on `b` points, blocks ordered by least element, curves in
/// lexicographic order of their block lists.
pub fn enumerate_fcurves(b: u32) -> Result<Vec<FCurve>> {
    check_points(b)?;
    let size = fcurve_count(b);
    if size > FCURVE_LIMIT {
        return Err(Error::EnumerationTooLarge {
            size,
            limit: FCURVE_LIMIT,
        });
    }
    // restricted growth strings with exactly four values
    fn go(i: u32, b: u32, used: usize, blocks: &mut [u64; 4], out: &mut Vec<FCurve>) {
        if i == b {
            if used == 4 {
                out.push(FCurve { b, blocks: *blocks });
            }
            return;
        }
        if 4 - used > (b - i) as usize {
            return;
        }
        for k in 0..(used + 1).min(4) {
            blocks[k] |= 1 << i;
            go(i + 1, b, used.max(k + 1), blocks, out);
            blocks[k] &= !(1 << i);
        }
    }
    let mut out = Vec::new();
    go(0, b, 0, &mut [0; 4], &mut out);
    out.sort();
    Ok(out)
}

/// Number of F-curves on `b` points, the Stirling number `S(b, 4)`.
pub fn fcurve_count(b: u32) -> u128 {
    let p = |base: u128| base.pow(b);
    (p(4) + 6 * p(2) - 4 * p(3) - 4) / 24
}

/// Intersection number of a divisor class with an F-curve.
///
/// For `S^Λ` and blocks `(A, B, C, D)`: `+1` for each of the three splittings
/// `A∪B | C∪D`, `A∪C | B∪D`, `A∪D | B∪C` equal to `{Λ, Λ^c}`, and `−1` when
/// `Λ` or `Λ^c` is a single block of size at least two.
pub fn pair(class: &DivisorClass, f: &FCurve) -> Result<Rational> {
    if class.b != f.b {
        return Err(Error::MismatchedPoints {
            left: class.b,
            right: f.b,
        });
    }
    let mut total = Rational::zero();
    for (s, c) in &class.coeffs {
        let n = f.pair_boundary(s);
        if n != 0 {
            total += c * int(n);
        }
    }
    Ok(total)
}

/// True iff the two classes pair identically with every F-curve.
pub fn classes_equal_numerically(x: &DivisorClass, y: &DivisorClass) -> Result<bool> {
    let diff = x.try_sub(y)?;
    for f in enumerate_fcurves(x.b)? {
        if !pair(&diff, &f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `T_b^j`: the sum of boundary divisors with a side of size `j`.
///
/// Built literally as `Σ_{#Λ=j} S^Λ`, halved when `j = b/2`, so every
/// unordered divisor ends up with coefficient 1.
pub fn t_class(b: u32, j: u32) -> Result<DivisorClass> {
    check_points(b)?;
    if j < 2 || 2 * j > b {
        return Err(Error::out_of_range("j", j.into(), 2, (b / 2).into()));
    }
    let weight = if 2 * j == b { rat(1, 2) } else { int(1) };
    let mut out = DivisorClass::zero(b)?;
    for mask in subsets_of_size(b, j) {
        out.add_term(MarkedSubset::from_mask(b, mask)?, weight.clone());
    }
    Ok(out)
}

/// `ψ_i = Σ_{j=1}^{b−3} (b−1−j)(b−2−j)/((b−1)(b−2)) Σ_{A ∌ i, #A=j} S^{{i}∪A}`.
pub fn psi_class(b: u32, i: u32) -> Result<DivisorClass> {
    check_points(b)?;
    if i < 1 || i > b {
        return Err(Error::out_of_range("i", i.into(), 1, b.into()));
    }
    let bb = i64::from(b);
    let bit = 1u64 << (i - 1);
    let mut out = DivisorClass::zero(b)?;
    for j in 1..=b - 3 {
        let jj = i64::from(j);
        let coeff = rat((bb - 1 - jj) * (bb - 2 - jj), (bb - 1) * (bb - 2));
        // subsets of the other b-1 points, spread around bit i
        for packed in subsets_of_size(b - 1, j) {
            let low = packed & (bit - 1);
            let high = (packed & !(bit - 1)) << 1;
            let mask = low | high | bit;
            out.add_term(MarkedSubset::from_mask(b, mask)?, coeff.clone());
        }
    }
    Ok(out)
}

/// `ψ = Σ_i ψ_i`, summed term by term.
pub fn psi_total(b: u32) -> Result<DivisorClass> {
    let mut out = DivisorClass::zero(b)?;
    for i in 1..=b {
        out = out.try_add(&psi_class(b, i)?)?;
    }
    Ok(out)
}

/// `Σ_{j=2}^{[b/2]} j(b−j)/(b−1) · T_b^j`.
pub fn psi_total_closed(b: u32) -> Result<DivisorClass> {
    let mut out = DivisorClass::zero(b)?;
    let bb = i64::from(b);
    for j in 2..=b / 2 {
        let jj = i64::from(j);
        out = out.try_add(&t_class(b, j)?.scaled(&rat(jj * (bb - jj), bb - 1)))?;
    }
    Ok(out)
}

/// `κ_1 = ψ − Σ_j T_b^j`.
pub fn kappa1(b: u32) -> Result<DivisorClass> {
    let mut out = psi_total(b)?;
    for j in 2..=b / 2 {
        out = out.try_sub(&t_class(b, j)?)?;
    }
    Ok(out)
}

/// Pullback along the forgetful map from `b + 1` to `b` points:
/// `S_b^Λ ↦ S_{b+1}^Λ + S_{b+1}^{Λ ∪ {b+1}}`.
pub fn pullback_universal(class: &DivisorClass) -> Result<DivisorClass> {
    let b = class.b;
    let mut out = DivisorClass::zero(b + 1)?;
    let new_point = 1u64 << b;
    for (s, c) in &class.coeffs {
        out.add_term(MarkedSubset::from_mask(b + 1, s.mask)?, c.clone());
        out.add_term(
            MarkedSubset::from_mask(b + 1, s.mask | new_point)?,
            c.clone(),
        );
    }
    Ok(out)
}

/// Named classes accepted on the command line:
/// `psi`, `psi_i:I`, `T:J`, `kappa1`, `S:1,2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    Psi,
    PsiI(u32),
    T(u32),
    Kappa1,
    Boundary(Vec<u32>),
}

impl ClassSpec {
    pub fn build(&self, b: u32) -> Result<DivisorClass> {
        match self {
            ClassSpec::Psi => psi_total(b),
            ClassSpec::PsiI(i) => psi_class(b, *i),
            ClassSpec::T(j) => t_class(b, *j),
            ClassSpec::Kappa1 => kappa1(b),
            ClassSpec::Boundary(members) => Ok(DivisorClass::boundary(MarkedSubset::canonicalize(
                b, members,
            )?)),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::Psi => write!(f, "psi"),
            ClassSpec::PsiI(i) => write!(f, "psi_i:{i}"),
            ClassSpec::T(j) => write!(f, "T:{j}"),
            ClassSpec::Kappa1 => write!(f, "kappa1"),
            ClassSpec::Boundary(m) => {
                let m: Vec<String> = m.iter().map(u32::to_string).collect();
                write!(f, "S:{}", m.join(","))
            }
        }
    }
}

impl FromStr for ClassSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| -> Result<u32> {
            if t.is_empty() || !t.bytes().all(|c| c.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad index {t:?} in class {s:?}")));
            }
            t.parse()
                .map_err(|_| Error::Parse(format!("bad index {t:?} in class {s:?}")))
        };
        match s.split_once(':') {
            None => match s {
                "psi" => Ok(ClassSpec::Psi),
                "kappa1" => Ok(ClassSpec::Kappa1),
                _ => Err(Error::Parse(format!("unknown class {s:?}"))),
            },
            Some(("psi_i", i)) => Ok(ClassSpec::PsiI(num(i)?)),
            Some(("T", j)) => Ok(ClassSpec::T(num(j)?)),
            Some(("S", members)) => Ok(ClassSpec::Boundary(
                members.split(',').map(num).collect::<Result<_>>()?,
            )),
            Some(_) => Err(Error::Parse(format!("unknown class {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(b: u32, m: &[u32]) -> MarkedSubset {
        MarkedSubset::canonicalize(b, m).unwrap()
    }

    fn f(spec: &str) -> FCurve {
        spec.parse().unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(s(5, &[1, 2]).members(), vec![3, 4, 5]);
        assert_eq!(s(5, &[4, 5]).members(), vec![4, 5]);
        assert_eq!(s(6, &[1, 4, 5]).members(), vec![1, 4, 5]);
    }

    #[test]
    fn canonicalize_rejects_bad_sizes() {
        assert!(MarkedSubset::canonicalize(5, &[1]).is_err());
        assert!(MarkedSubset::canonicalize(5, &[1, 2, 3, 4]).is_err());
        assert!(MarkedSubset::canonicalize(5, &[1, 6]).is_err());
        assert!(MarkedSubset::canonicalize(5, &[1, 1]).is_err());
        assert!(MarkedSubset::canonicalize(3, &[1, 2]).is_err());
    }

    #[test]
    fn t_class_examples() {
        let t = t_class(4, 2).unwrap();
        assert_eq!(t.len(), 3);
        assert!(t.terms().all(|(_, c)| *c == int(1)));
        let t = t_class(5, 2).unwrap();
        assert_eq!(t.len(), 10);
        assert!(t.terms().all(|(_, c)| *c == int(1)));
        let t = t_class(6, 2).unwrap();
        assert_eq!(t.len(), 15);
        assert!(t.terms().all(|(_, c)| *c == int(1)));
        // balanced: C(6,3)/2 unordered divisors
        let t = t_class(6, 3).unwrap();
        assert_eq!(t.len(), 10);
        assert!(t.terms().all(|(_, c)| *c == int(1)));
        assert!(t_class(6, 4).is_err());
        assert!(t_class(6, 1).is_err());
    }

    #[test]
    fn psi_class_examples() {
        let p = psi_class(4, 1).unwrap();
        let mut expected = DivisorClass::zero(4).unwrap();
        for m in [[1, 2], [1, 3], [1, 4]] {
            expected.add_term(s(4, &m), rat(1, 3));
        }
        assert_eq!(p, expected);

        let p = psi_class(5, 1).unwrap();
        let mut expected = DivisorClass::zero(5).unwrap();
        for a in 2..=5 {
            expected.add_term(s(5, &[1, a]), rat(1, 2));
        }
        for a in 2..=5 {
            for c in a + 1..=5 {
                expected.add_term(s(5, &[1, a, c]), rat(1, 6));
            }
        }
        assert_eq!(p, expected);

        assert_eq!(pair(&p, &f("1,2|3|4|5")).unwrap(), int(0));
        assert!(psi_class(5, 0).is_err());
        assert!(psi_class(5, 6).is_err());
    }

    #[test]
    fn psi_total_examples() {
        let closed4 = psi_total_closed(4).unwrap();
        assert_eq!(closed4.len(), 3);
        assert!(closed4.terms().all(|(_, c)| *c == rat(4, 3)));
        // at b = 4 there are no relations, so coefficients agree exactly
        assert_eq!(psi_total(4).unwrap(), closed4);

        let closed5 = psi_total_closed(5).unwrap();
        assert_eq!(closed5, t_class(5, 2).unwrap().scaled(&rat(3, 2)));
        assert_eq!(
            pair(&psi_total(5).unwrap(), &f("1,2|3|4|5")).unwrap(),
            int(3)
        );
    }

    #[test]
    fn kappa1_examples() {
        let k4 = kappa1(4).unwrap();
        assert!(k4.terms().all(|(_, c)| *c == rat(1, 3)));
        assert_eq!(k4.len(), 3);
        let half_t = t_class(5, 2).unwrap().scaled(&rat(1, 2));
        assert!(classes_equal_numerically(&kappa1(5).unwrap(), &half_t).unwrap());
        assert_eq!(pair(&kappa1(5).unwrap(), &f("1,2|3|4|5")).unwrap(), int(1));
    }

    #[test]
    fn pullback_examples() {
        let c = DivisorClass::boundary(s(4, &[1, 2]));
        let up = pullback_universal(&c).unwrap();
        let mut expected = DivisorClass::zero(5).unwrap();
        expected.add_term(s(5, &[1, 2]), int(1));
        expected.add_term(s(5, &[1, 2, 5]), int(1));
        assert_eq!(up, expected);

        let zero = DivisorClass::zero(4).unwrap();
        assert!(pullback_universal(&zero).unwrap().is_zero());

        let two = c.try_add(&DivisorClass::boundary(s(4, &[1, 3]))).unwrap();
        assert_eq!(pullback_universal(&two).unwrap().len(), 4);
    }

    #[test]
    fn pair_examples() {
        let fc = f("1,2|3|4|5");
        let one = |m: &[u32]| pair(&DivisorClass::boundary(s(5, m)), &fc).unwrap();
        assert_eq!(one(&[1, 2]), int(-1));
        assert_eq!(one(&[3, 4]), int(1));
        assert_eq!(one(&[1, 3]), int(0));
        let g = f("1|2|3|4");
        assert!(pair(&DivisorClass::boundary(s(5, &[1, 2])), &g).is_err());
    }

    #[test]
    fn equality_examples() {
        let psi = psi_total(5).unwrap();
        assert!(classes_equal_numerically(&psi, &psi_total_closed(5).unwrap()).unwrap());
        let t = t_class(5, 2).unwrap();
        assert!(!classes_equal_numerically(&t, &DivisorClass::zero(5).unwrap()).unwrap());
        assert_eq!(pair(&t, &f("1,2|3|4|5")).unwrap(), int(2));
        assert!(classes_equal_numerically(&t, &t).unwrap());
        assert!(classes_equal_numerically(&t, &psi_class(6, 1).unwrap()).is_err());
    }

    #[test]
    fn fcurve_parsing() {
        let fc = f("3|1,2|5|4");
        assert_eq!(fc.to_string(), "1,2|3|4|5");
        assert_eq!(fc.b(), 5);
        for bad in [
            "1,2|3|4",
            "1,2|3|4|4",
            "1|2|3|5",
            "1,2||3|4",
            "a|b|c|d",
            "1|2|3|4|5",
        ] {
            assert!(bad.parse::<FCurve>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn fcurve_counts_are_stirling_numbers() {
        // S(b,4) for b = 4..9
        let expected = [1, 10, 65, 350, 1701, 7770];
        for (b, n) in (4..=9).zip(expected) {
            let all = enumerate_fcurves(b).unwrap();
            assert_eq!(all.len(), n, "b = {b}");
            assert_eq!(fcurve_count(b), n as u128);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(fcurve_count(13), 2_532_530);
        assert!(matches!(
            enumerate_fcurves(14),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn class_spec_parsing() {
        assert_eq!("psi".parse::<ClassSpec>().unwrap(), ClassSpec::Psi);
        for text in ["psi", "psi_i:3", "T:2", "kappa1", "S:1,2"] {
            assert_eq!(text.parse::<ClassSpec>().unwrap().to_string(), text);
        }
        assert_eq!("psi_i:3".parse::<ClassSpec>().unwrap(), ClassSpec::PsiI(3));
        assert_eq!("T:2".parse::<ClassSpec>().unwrap(), ClassSpec::T(2));
        assert_eq!("kappa1".parse::<ClassSpec>().unwrap(), ClassSpec::Kappa1);
        assert_eq!(
            "S:1,2".parse::<ClassSpec>().unwrap(),
            ClassSpec::Boundary(vec![1, 2])
        );
        for bad in [
            "", "psi_i", "psi_i:", "T:x", "S:", "S:1,,2", "kappa2", "Q:1",
        ] {
            assert!(bad.parse::<ClassSpec>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn json_shape() {
        let mut c = DivisorClass::zero(5).unwrap();
        c.add_term(s(5, &[4, 5]), rat(1, 2));
        c.add_term(s(5, &[1, 4]), int(-3));
        assert_eq!(
            c.to_json(),
            r#"{"b":5,"terms":[{"lambda":[1,4],"coeff":"-3"},{"lambda":[4,5],"coeff":"1/2"}]}"#
        );
        assert_eq!(DivisorClass::from_json(&c.to_json()).unwrap(), c);
        assert!(
            DivisorClass::from_json(r#"{"b":5,"terms":[{"lambda":[1],"coeff":"1"}]}"#).is_err()
        );
    }
}
