//! Ramification formats: partitions `μ = (m_1, …, m_r)` of the degree `d`
//! recording the ramification indices over a node of the base curve.
//!
//! Formats are stored in canonical weakly-decreasing order. Their ordering
//! ([`Ord`]) is reverse-lexicographic on the parts, which is also the order
//! produced by [`enumerate_formats`]: `(3) < (2,1) < (1,1,1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Upper bound on the number of root-of-unity tuples enumerated by
/// [`orbit_count_oracle`].
pub const ORBIT_ORACLE_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RamificationFormat {
    parts: Vec<u32>,
}

impl RamificationFormat {
    /// Builds a format from parts in any order; parts must be positive.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidFormat("empty format".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidFormat(format!("zero part in {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.iter().map(|&p| u64::from(p)).sum::<u64>() > u64::from(u32::MAX) {
            return Err(Error::InvalidFormat("degree overflows u32".into()));
        }
        Ok(RamificationFormat { parts })
    }

    /// Builds a format and checks that it partitions `degree`.
    pub fn with_degree(parts: Vec<u32>, degree: u32) -> Result<Self> {
        let mu = Self::new(parts)?;
        mu.expect_degree(degree)?;
        Ok(mu)
    }

    /// The trivial format `(1, …, 1)` of degree `d` (unramified over the node).
    pub fn unramified(d: u32) -> Self {
        RamificationFormat {
            parts: vec![1; d as usize],
        }
    }

    /// The cycle type `(l, 1, …, 1)` of degree `d`.
    pub fn single_cycle(l: u32, d: u32) -> Result<Self> {
        if l == 0 || l > d {
            return Err(Error::out_of_range("l", l.into(), 1, d.into()));
        }
        let mut parts = vec![l];
        parts.extend(std::iter::repeat_n(1, (d - l) as usize));
        Ok(RamificationFormat { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts `r`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `d − r`, the number of transpositions in any factorisation of a
    /// permutation with this cycle type; its parity is the sign.
    pub fn reflection_length(&self) -> u32 {
        self.degree() - self.parts.len() as u32
    }

    /// `m(μ)`, the least common multiple of the parts.
    pub fn lcm(&self) -> BigUint {
        self.parts
            .iter()
            .fold(BigUint::one(), |acc, &m| acc.lcm(&BigUint::from(m)))
    }

    /// `m_1 ⋯ m_r`.
    pub fn product(&self) -> BigUint {
        self.parts
            .iter()
            .fold(BigUint::one(), |acc, &m| acc * BigUint::from(m))
    }

    /// Number of branches `m_1 ⋯ m_r / m(μ)` of the normalized Hurwitz space
    /// along a boundary divisor with this format.
    pub fn branch_count(&self) -> BigUint {
        self.product() / self.lcm()
    }

    /// Ramification index of each normalization branch over the moduli space
    /// of pointed rational curves; equal to `m(μ)`.
    pub fn ramification_index(&self) -> BigUint {
        self.lcm()
    }

    /// `Σ 1/m_i`.
    pub fn reciprocal_sum(&self) -> Rational {
        self.parts
            .iter()
            .map(|&m| Rational::new(1.into(), m.into()))
            .sum()
    }

    pub(crate) fn expect_degree(&self, degree: u32) -> Result<()> {
        if self.degree() != degree {
            return Err(Error::DegreeMismatch {
                format: self.to_string(),
                expected: degree,
                found: self.degree(),
            });
        }
        Ok(())
    }
}

impl Ord for RamificationFormat {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for RamificationFormat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RamificationFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses the comma-separated form `"3,2,1"` (parts in any order).
impl FromStr for RamificationFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                if t.is_empty() || !t.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(Error::InvalidFormat(format!("bad part {t:?} in {s:?}")));
                }
                t.parse::<u32>()
                    .map_err(|_| Error::InvalidFormat(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for RamificationFormat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RamificationFormat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(serde::de::Error::custom("format parts must be descending"));
        }
        RamificationFormat::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `d` in reverse-lexicographic order.
pub fn enumerate_formats(d: u32) -> Vec<RamificationFormat> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<RamificationFormat>) {
        if rest == 0 {
            out.push(RamificationFormat {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first);
            go(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        go(d, d, &mut Vec::new(), &mut out);
    }
    out
}

/// Counts orbits of the cyclic group of order `m(μ)` acting on tuples
/// `(ζ_1, …, ζ_r)` of `m_j`-th roots of unity by simultaneous rotation.
///
/// A tuple is encoded by exponents `a_j mod m_j`; the generator sends every
/// `a_j` to `a_j + 1`. The result equals [`RamificationFormat::branch_count`].
pub fn orbit_count_oracle(mu: &RamificationFormat) -> Result<u64> {
    let size = mu
        .parts
        .iter()
        .try_fold(1u64, |acc, &m| acc.checked_mul(u64::from(m)))
        .filter(|&n| n <= ORBIT_ORACLE_LIMIT)
        .ok_or_else(|| Error::EnumerationTooLarge {
            size: mu.product().try_into().unwrap_or(u128::MAX),
            limit: ORBIT_ORACLE_LIMIT.into(),
        })?;

    let radices: Vec<u64> = mu.parts.iter().map(|&m| u64::from(m)).collect();
    let rotate = |code: u64| -> u64 {
        // mixed radix, first part least significant
        let mut rest = code;
        let mut out = 0;
        let mut scale = 1;
        for &m in &radices {
            let digit = rest % m;
            rest /= m;
            out += ((digit + 1) % m) * scale;
            scale *= m;
        }
        out
    };

    let mut seen = vec![false; size as usize];
    let mut orbits = 0;
    for start in 0..size {
        if seen[start as usize] {
            continue;
        }
        orbits += 1;
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            x = rotate(x);
        }
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(parts: &[u32]) -> RamificationFormat {
        RamificationFormat::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(mu(&[1, 1]).lcm(), 1u32.into());
        assert_eq!(mu(&[2, 2]).lcm(), 2u32.into());
        assert_eq!(mu(&[6, 4, 2]).lcm(), 12u32.into());
    }

    #[test]
    fn branch_count_examples() {
        assert_eq!(mu(&[1, 1, 1]).branch_count(), 1u32.into());
        assert_eq!(mu(&[2, 2]).branch_count(), 2u32.into());
        assert_eq!(mu(&[6, 4, 2]).branch_count(), 4u32.into());
    }

    #[test]
    fn ramification_index_examples() {
        assert_eq!(mu(&[1, 1]).ramification_index(), 1u32.into());
        assert_eq!(mu(&[2]).ramification_index(), 2u32.into());
        assert_eq!(mu(&[3, 2]).ramification_index(), 6u32.into());
    }

    #[test]
    fn orbit_oracle_examples() {
        // (2,2): tuples 00,01,10,11; rotation pairs 00<->11 and 01<->10.
        assert_eq!(orbit_count_oracle(&mu(&[2, 2])).unwrap(), 2);
        assert_eq!(orbit_count_oracle(&mu(&[1])).unwrap(), 1);
        // (3,2): Z/3 x Z/2 is cyclic of order 6, one orbit.
        assert_eq!(orbit_count_oracle(&mu(&[3, 2])).unwrap(), 1);
    }

    #[test]
    fn orbit_oracle_guard() {
        let big = mu(&[11; 6]);
        assert!(matches!(
            orbit_count_oracle(&big),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn enumeration_examples() {
        let show = |d| {
            enumerate_formats(d)
                .iter()
                .map(|m| m.parts().to_vec())
                .collect::<Vec<_>>()
        };
        assert_eq!(show(1), vec![vec![1]]);
        assert_eq!(show(2), vec![vec![2], vec![1, 1]]);
        assert_eq!(show(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert!(enumerate_formats(0).is_empty());
    }

    #[test]
    fn enumeration_is_sorted_by_format_order() {
        for d in 1..=8 {
            let all = enumerate_formats(d);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(
            "3,2,1".parse::<RamificationFormat>().unwrap(),
            mu(&[3, 2, 1])
        );
        assert_eq!("1,3".parse::<RamificationFormat>().unwrap(), mu(&[3, 1]));
        for bad in ["", "0", "3,,1", "a", "-1", "3;1"] {
            assert!(bad.parse::<RamificationFormat>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn serde_rejects_non_canonical() {
        let ok: RamificationFormat = serde_json::from_str("[3,2,1]").unwrap();
        assert_eq!(ok, mu(&[3, 2, 1]));
        assert!(serde_json::from_str::<RamificationFormat>("[1,2]").is_err());
        assert_eq!(serde_json::to_string(&ok).unwrap(), "[3,2,1]");
    }

    #[test]
    fn degree_mismatch() {
        assert!(RamificationFormat::with_degree(vec![2, 1], 4).is_err());
        assert!(RamificationFormat::with_degree(vec![2, 2], 4).is_ok());
    }
}
