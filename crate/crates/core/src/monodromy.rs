//! Symmetric-group monodromy counts.
//!
//! A branched cover of the line of degree `d` is encoded by a tuple of
//! permutations of `{1..d}` with product the identity: one transposition per
//! simple branch point, plus permutations of prescribed cycle type for the
//! remaining special points. Products are read left to right with
//! permutations acting on the right, so `x^(στ) = (x^σ)^τ`.
//!
//! [`brute_count`] enumerates tuples directly, [`character_count`] evaluates
//! the Frobenius class-algebra formula with exact Murnaghan–Nakayama
//! characters, and [`exists_cover`] decides whether a boundary divisor of the
//! Hurwitz space is nonempty by searching for monodromy on both components of
//! the degenerate base and a connected gluing over the node.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formats::{enumerate_formats, RamificationFormat};
use crate::hurwitz::{BoundaryLabel, HurwitzParams};
use crate::rational::Rational;

pub type CycleType = RamificationFormat;

/// Largest degree handled by exhaustive enumeration.
pub const BRUTE_MAX_DEGREE: u32 = 5;
/// Largest number of tuples [`brute_count`] will enumerate.
pub const BRUTE_MAX_TUPLES: u128 = 100_000_000;
/// Largest degree handled by [`character_count`].
pub const CHARACTER_MAX_DEGREE: u32 = 12;

/// A permutation of `{0, …, d−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(d: u32) -> Self {
        Permutation {
            images: (0..d as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen
                .get_mut(x as usize)
                .ok_or_else(|| Error::Parse(format!("{images:?} is not a permutation")))?;
            if *slot {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            *slot = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping `a` and `b` (0-based).
    pub fn transposition(d: u32, a: u32, b: u32) -> Self {
        let mut p = Self::identity(d);
        p.images.swap(a as usize, b as usize);
        p
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn image(&self, x: u32) -> u32 {
        self.images[x as usize].into()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// Cycles including fixed points, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let lens = cycle_lengths(&self.images);
        RamificationFormat::new(lens).expect("nonempty permutation")
    }
}

fn cycle_lengths(images: &[u8]) -> Vec<u32> {
    let mut seen = [false; 32];
    let mut lens = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = images[x] as usize;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

/// All permutations of degree `d` in lexicographic order of their images.
pub fn all_permutations(d: u32) -> Vec<Permutation> {
    let mut cur: Vec<u8> = (0..d as u8).collect();
    let mut out = vec![Permutation {
        images: cur.clone(),
    }];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Permutation {
            images: cur.clone(),
        });
    }
}

/// All permutations of the given cycle type.
pub fn class_elements(ty: &CycleType) -> Vec<Permutation> {
    all_permutations(ty.degree())
        .into_iter()
        .filter(|p| cycle_lengths(&p.images) == ty.parts())
        .collect()
}

fn transpositions(d: u32) -> Vec<Permutation> {
    let mut out = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            out.push(Permutation::transposition(d, a, b));
        }
    }
    out
}

/// Cycle type `(2, 1, …, 1)`, or `None` when `d < 2`.
fn transposition_type(d: u32) -> Option<CycleType> {
    (d >= 2).then(|| RamificationFormat::single_cycle(2, d).expect("2 <= d"))
}

/// The data of a monodromy count: `n` transpositions followed by factors of
/// the listed cycle types, product the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleSpec {
    pub degree: u32,
    pub n_transpositions: u32,
    pub extra_types: Vec<CycleType>,
    pub require_transitive: bool,
}

impl TupleSpec {
    pub fn validate(&self) -> Result<()> {
        if self.degree == 0 {
            return Err(Error::out_of_range("degree", 0, 1, i64::MAX));
        }
        for ty in &self.extra_types {
            ty.expect_degree(self.degree)?;
        }
        Ok(())
    }
}

/// Orbit labels: each point labelled by the least point of its orbit.
fn merge_orbits(labels: &mut [u8], images: &[u8]) {
    for (x, &y) in images.iter().enumerate() {
        let (a, b) = (labels[x], labels[y as usize]);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            for l in labels.iter_mut() {
                if *l == hi {
                    *l = lo;
                }
            }
        }
    }
}

/// Number of tuples `(τ_1, …, τ_n, σ_1, …)` with product the identity, by
/// exhaustive enumeration.
///
/// All factors but the last are enumerated; the last one is then forced to
/// be the inverse of the running product, and the tuple counts iff that
/// inverse has the prescribed cycle type. Transitivity is checked on the
/// orbits of the group generated by the enumerated factors, which already
/// contains the forced one.
pub fn brute_count(spec: &TupleSpec) -> Result<u64> {
    spec.validate()?;
    let d = spec.degree;
    if d > BRUTE_MAX_DEGREE {
        return Err(Error::OracleTooLarge {
            degree: d,
            limit: BRUTE_MAX_DEGREE,
        });
    }

    let mut classes: Vec<(CycleType, Vec<Permutation>)> = Vec::new();
    if spec.n_transpositions > 0 {
        let Some(ty) = transposition_type(d) else {
            return Ok(0);
        };
        let ts = transpositions(d);
        for _ in 0..spec.n_transpositions {
            classes.push((ty.clone(), ts.clone()));
        }
    }
    for ty in &spec.extra_types {
        classes.push((ty.clone(), class_elements(ty)));
    }

    let size = classes
        .iter()
        .try_fold(1u128, |acc, (_, c)| acc.checked_mul(c.len() as u128))
        .unwrap_or(u128::MAX);
    if size > BRUTE_MAX_TUPLES {
        return Err(Error::EnumerationTooLarge {
            size,
            limit: BRUTE_MAX_TUPLES,
        });
    }

    let Some((last_type, _)) = classes.pop() else {
        // empty product
        return Ok(u64::from(!spec.require_transitive || d == 1));
    };

    struct Walk<'a> {
        classes: &'a [(CycleType, Vec<Permutation>)],
        last: &'a [u32],
        transitive: bool,
        count: u64,
    }

    impl Walk<'_> {
        fn go(&mut self, depth: usize, product: &[u8], labels: &[u8]) {
            if depth == self.classes.len() {
                if cycle_lengths(product) != self.last {
                    return;
                }
                if self.transitive && labels.iter().any(|&l| l != 0) {
                    return;
                }
                self.count += 1;
                return;
            }
            let mut next = vec![0u8; product.len()];
            let mut next_labels = labels.to_vec();
            for p in &self.classes[depth].1 {
                for (slot, &x) in next.iter_mut().zip(product) {
                    *slot = p.images[x as usize];
                }
                if self.transitive {
                    next_labels.copy_from_slice(labels);
                    merge_orbits(&mut next_labels, &p.images);
                }
                self.go(depth + 1, &next, &next_labels);
            }
        }
    }

    let mut walk = Walk {
        classes: &classes,
        last: last_type.parts(),
        transitive: spec.require_transitive,
        count: 0,
    };
    let start: Vec<u8> = (0..d as u8).collect();
    walk.go(0, &start, &start);
    Ok(walk.count)
}

/// Irreducible characters of the symmetric group, computed exactly by the
/// Murnaghan–Nakayama rule with memoization.
#[derive(Debug, Default)]
pub struct CharacterTable {
    memo: HashMap<(Vec<u32>, Vec<u32>), i64>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ(ρ)` for partitions `λ`, `ρ` of the same size.
    pub fn character(&mut self, lambda: &RamificationFormat, rho: &CycleType) -> Result<i64> {
        if lambda.degree() != rho.degree() {
            return Err(Error::DegreeMismatch {
                format: rho.to_string(),
                expected: lambda.degree(),
                found: rho.degree(),
            });
        }
        Ok(self.chi(lambda.parts(), rho.parts()))
    }

    fn chi(&mut self, lambda: &[u32], rho: &[u32]) -> i64 {
        let Some((&h, rest)) = rho.split_first() else {
            return 1;
        };
        let key = (lambda.to_vec(), rho.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        // beta numbers: distinct, descending
        let n = lambda.len() as u32;
        let beta: Vec<u32> = lambda
            .iter()
            .enumerate()
            .map(|(i, &p)| p + n - 1 - i as u32)
            .collect();
        let mut total = 0;
        for (i, &x) in beta.iter().enumerate() {
            if x < h || beta.contains(&(x - h)) {
                continue;
            }
            let y = x - h;
            let crossed = beta.iter().filter(|&&z| y < z && z < x).count();
            let mut moved = beta.clone();
            moved[i] = y;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let shape: Vec<u32> = moved
                .iter()
                .enumerate()
                .map(|(j, &z)| z - (n - 1 - j as u32))
                .filter(|&p| p > 0)
                .collect();
            let sign = if crossed % 2 == 0 { 1 } else { -1 };
            total += sign * self.chi(&shape, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Size of the conjugacy class of the given cycle type: `d! / z_ρ`.
pub fn class_size(ty: &CycleType) -> BigInt {
    let mut z = BigInt::one();
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &p in ty.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (part, mult) in counts {
        z *= BigInt::from(part).pow(mult) * factorial(mult);
    }
    factorial(ty.degree()) / z
}

/// The number of product-identity tuples (not necessarily transitive)
/// divided by `d!`, from the Frobenius formula
/// `N = (1/d!) Σ_λ dim(λ)² Π_f |C_f| χ^λ(C_f) / dim(λ)`.
pub fn character_count(spec: &TupleSpec) -> Result<Rational> {
    spec.validate()?;
    let d = spec.degree;
    if d > CHARACTER_MAX_DEGREE {
        return Err(Error::OracleTooLarge {
            degree: d,
            limit: CHARACTER_MAX_DEGREE,
        });
    }
    let mut factors: Vec<CycleType> = Vec::new();
    if spec.n_transpositions > 0 {
        let Some(ty) = transposition_type(d) else {
            return Ok(Rational::zero());
        };
        factors.extend(std::iter::repeat_n(ty, spec.n_transpositions as usize));
    }
    factors.extend(spec.extra_types.iter().cloned());

    let mut table = CharacterTable::new();
    let identity_type = RamificationFormat::unramified(d);
    let mut sum = Rational::zero();
    for lambda in enumerate_formats(d) {
        let dim = Rational::from_integer(table.character(&lambda, &identity_type)?.into());
        let mut term = &dim * &dim;
        for ty in &factors {
            let chi = table.character(&lambda, ty)?;
            term *= Rational::from_integer(class_size(ty) * chi) / &dim;
        }
        sum += term;
    }
    let d_fact = Rational::from_integer(factorial(d));
    Ok(sum / (&d_fact * &d_fact))
}

/// Per-orbit cycle lengths of the node monodromy on one side, sorted.
type Signature = Vec<Vec<u32>>;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct SideState {
    product: [u8; BRUTE_MAX_DEGREE as usize],
    orbits: [u8; BRUTE_MAX_DEGREE as usize],
}

/// Decides nonemptiness of boundary divisors by exhaustive search over the
/// reachable (running product, orbit partition) states of each side of the
/// degenerate cover. Reachable layers are cached, so one oracle can answer
/// many labels for the same degree cheaply.
pub struct CoverOracle {
    d: u32,
    transpositions: Vec<Permutation>,
    // keyed by the cycle length of the distinguished point (1 = none)
    layers: HashMap<u32, Vec<HashSet<SideState>>>,
}

impl CoverOracle {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 || d > BRUTE_MAX_DEGREE {
            return Err(Error::OracleTooLarge {
                degree: d,
                limit: BRUTE_MAX_DEGREE,
            });
        }
        Ok(CoverOracle {
            d,
            transpositions: transpositions(d),
            layers: HashMap::new(),
        })
    }

    fn start_states(&self, special: u32) -> HashSet<SideState> {
        let d = self.d as usize;
        let ty = RamificationFormat::single_cycle(special, self.d).expect("special <= d");
        class_elements(&ty)
            .into_iter()
            .map(|p| {
                let mut st = SideState {
                    product: [0; BRUTE_MAX_DEGREE as usize],
                    orbits: [0; BRUTE_MAX_DEGREE as usize],
                };
                for i in 0..d {
                    st.product[i] = p.images[i];
                    st.orbits[i] = i as u8;
                }
                merge_orbits(&mut st.orbits[..d], &p.images);
                st
            })
            .collect()
    }

    fn layer(&mut self, special: u32, n: u32) -> &HashSet<SideState> {
        let d = self.d as usize;
        if !self.layers.contains_key(&special) {
            let start = self.start_states(special);
            self.layers.insert(special, vec![start]);
        }
        let layers = self.layers.get_mut(&special).expect("inserted above");
        while layers.len() <= n as usize {
            let prev = layers.last().expect("nonempty");
            let mut next = HashSet::new();
            for st in prev {
                for t in &self.transpositions {
                    let mut s = *st;
                    for i in 0..d {
                        s.product[i] = t.images[st.product[i] as usize];
                    }
                    merge_orbits(&mut s.orbits[..d], &t.images);
                    next.insert(s);
                }
            }
            layers.push(next);
        }
        &layers[n as usize]
    }

    /// Signatures of all side data consisting of `n` transpositions and one
    /// `special`-cycle, closed up by a node permutation of type `mu`.
    fn side(&mut self, special: u32, n: u32, mu: &RamificationFormat) -> BTreeSet<Signature> {
        let d = self.d as usize;
        let mut out = BTreeSet::new();
        for st in self.layer(special, n) {
            let product = &st.product[..d];
            if cycle_lengths(product) != mu.parts() {
                continue;
            }
            let p = Permutation {
                images: product.to_vec(),
            };
            let mut by_orbit: HashMap<u8, Vec<u32>> = HashMap::new();
            for cycle in p.cycles() {
                by_orbit
                    .entry(st.orbits[cycle[0] as usize])
                    .or_default()
                    .push(cycle.len() as u32);
            }
            let mut sig: Signature = by_orbit
                .into_values()
                .map(|mut v| {
                    v.sort_unstable();
                    v
                })
                .collect();
            sig.sort();
            out.insert(sig);
        }
        out
    }

    /// True iff some side-1 datum (`n1` transpositions plus a `special1`
    /// cycle) and some side-2 datum glue along a node of type `mu` into a
    /// connected cover.
    pub fn glues(
        &mut self,
        (special1, n1): (u32, u32),
        (special2, n2): (u32, u32),
        mu: &RamificationFormat,
    ) -> Result<bool> {
        mu.expect_degree(self.d)?;
        let left = self.side(special1, n1, mu);
        if left.is_empty() {
            return Ok(false);
        }
        let right = self.side(special2, n2, mu);
        Ok(left
            .iter()
            .any(|a| right.iter().any(|b| connected_gluing_exists(a, b))))
    }

    /// Nonemptiness of the boundary divisor `label` of the Hurwitz space.
    pub fn exists_cover(&mut self, params: &HurwitzParams, label: &BoundaryLabel) -> Result<bool> {
        if params.d() != self.d {
            return Err(Error::InvalidParams(format!(
                "oracle built for degree {}, params have degree {}",
                self.d,
                params.d()
            )));
        }
        label.validate(params)?;
        let b = params.b();
        let k = label.k;
        let (side1, side2) = match (params.l(), label.side1) {
            (None, _) => ((1, k), (1, b - k)),
            (Some(l), Some(true)) => ((l, k - 1), (1, b - k)),
            (Some(l), Some(false)) => ((1, k), (l, b - k - 1)),
            (Some(_), None) => unreachable!("validated"),
        };
        self.glues(side1, side2, &label.mu)
    }
}

/// Whether some length-preserving matching of node cycles connects the
/// bipartite graph of side-1 orbits and side-2 orbits.
fn connected_gluing_exists(a: &Signature, b: &Signature) -> bool {
    let flatten = |sig: &Signature| -> Vec<(u32, usize)> {
        let mut v: Vec<(u32, usize)> = sig
            .iter()
            .enumerate()
            .flat_map(|(o, lens)| lens.iter().map(move |&l| (l, o)))
            .collect();
        v.sort_unstable();
        v
    };
    let ca = flatten(a);
    let cb = flatten(b);
    if ca.iter().map(|c| c.0).ne(cb.iter().map(|c| c.0)) {
        return false;
    }
    let nodes = a.len() + b.len();

    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        r
    }

    fn search(
        i: usize,
        ca: &[(u32, usize)],
        cb: &[(u32, usize)],
        used: &mut Vec<bool>,
        edges: &mut Vec<(usize, usize)>,
        offset: usize,
        nodes: usize,
    ) -> bool {
        if i == ca.len() {
            let mut parent: Vec<usize> = (0..nodes).collect();
            for &(x, y) in edges.iter() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, offset + y));
                parent[rx] = ry;
            }
            let root = find(&mut parent, 0);
            return (0..nodes).all(|n| find(&mut parent, n) == root);
        }
        for j in 0..cb.len() {
            if used[j] || cb[j].0 != ca[i].0 {
                continue;
            }
            used[j] = true;
            edges.push((ca[i].1, cb[j].1));
            let found = search(i + 1, ca, cb, used, edges, offset, nodes);
            edges.pop();
            used[j] = false;
            if found {
                return true;
            }
        }
        false
    }

    search(
        0,
        &ca,
        &cb,
        &mut vec![false; cb.len()],
        &mut Vec::new(),
        a.len(),
        nodes,
    )
}

/// Nonemptiness of one boundary divisor; see [`CoverOracle::exists_cover`].
pub fn exists_cover(params: &HurwitzParams, label: &BoundaryLabel) -> Result<bool> {
    CoverOracle::new(params.d())?.exists_cover(params, label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ty(parts: &[u32]) -> CycleType {
        RamificationFormat::new(parts.to_vec()).unwrap()
    }

    fn spec(d: u32, n: u32, extra: &[&[u32]], transitive: bool) -> TupleSpec {
        TupleSpec {
            degree: d,
            n_transpositions: n,
            extra_types: extra.iter().map(|p| ty(p)).collect(),
            require_transitive: transitive,
        }
    }

    #[test]
    fn composition_is_left_to_right() {
        // (0 1) then (1 2): 0 -> 1 -> 2
        let a = Permutation::transposition(3, 0, 1);
        let b = Permutation::transposition(3, 1, 2);
        assert_eq!(a.then(&b).image(0), 2);
        assert_eq!(a.then(&b).cycle_type(), ty(&[3]));
        assert!(a.then(&a).is_identity());
        let c = a.then(&b);
        assert!(c.then(&c.inverse()).is_identity());
    }

    #[test]
    fn permutation_enumeration() {
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(class_elements(&ty(&[2, 2, 1])).len(), 15);
        assert_eq!(class_elements(&ty(&[3, 1, 1])).len(), 20);
        assert_eq!(transpositions(5).len(), 10);
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
    }

    #[test]
    fn brute_examples() {
        assert_eq!(brute_count(&spec(2, 2, &[&[1, 1]], true)).unwrap(), 1);
        assert_eq!(brute_count(&spec(2, 1, &[&[1, 1]], true)).unwrap(), 0);
        assert_eq!(brute_count(&spec(2, 3, &[&[2]], true)).unwrap(), 1);
    }

    #[test]
    fn brute_edge_cases() {
        assert_eq!(brute_count(&spec(1, 0, &[], true)).unwrap(), 1);
        assert_eq!(brute_count(&spec(3, 0, &[], true)).unwrap(), 0);
        assert_eq!(brute_count(&spec(3, 0, &[], false)).unwrap(), 1);
        assert_eq!(brute_count(&spec(1, 2, &[], false)).unwrap(), 0);
        assert!(matches!(
            brute_count(&spec(6, 1, &[], false)),
            Err(Error::OracleTooLarge { .. })
        ));
        assert!(matches!(
            brute_count(&spec(5, 9, &[], false)),
            Err(Error::EnumerationTooLarge { .. })
        ));
        assert!(brute_count(&spec(3, 1, &[&[2]], false)).is_err());
    }

    #[test]
    fn brute_small_hurwitz_counts() {
        let all = brute_count(&spec(3, 4, &[], false)).unwrap();
        let tr = brute_count(&spec(3, 4, &[], true)).unwrap();
        assert!(tr <= all);
        // tuples of 4 transpositions of S3 with product 1: 3^4 total, 27 of them
        // have product 1 (product of an even number is in A3, uniform), and only
        // the 3 constant tuples are intransitive.
        assert_eq!(all, 27);
        assert_eq!(tr, 24);
    }

    #[test]
    fn characters_of_s3() {
        let mut t = CharacterTable::new();
        let triv = ty(&[3]);
        let sign = ty(&[1, 1, 1]);
        let std = ty(&[2, 1]);
        let cls = [ty(&[1, 1, 1]), ty(&[2, 1]), ty(&[3])];
        let row = |t: &mut CharacterTable, l: &CycleType| -> Vec<i64> {
            cls.iter().map(|c| t.character(l, c).unwrap()).collect()
        };
        assert_eq!(row(&mut t, &triv), vec![1, 1, 1]);
        assert_eq!(row(&mut t, &sign), vec![1, -1, 1]);
        assert_eq!(row(&mut t, &std), vec![2, 0, -1]);
    }

    #[test]
    fn column_orthogonality_up_to_8() {
        // Σ_λ χ^λ(ρ)² = z_ρ = d!/|C_ρ|
        let mut t = CharacterTable::new();
        for d in 1..=8 {
            let parts = enumerate_formats(d);
            for rho in &parts {
                let s: i64 = parts
                    .iter()
                    .map(|l| t.character(l, rho).unwrap().pow(2))
                    .sum();
                assert_eq!(BigInt::from(s) * class_size(rho), factorial(d));
            }
        }
    }

    #[test]
    fn character_examples() {
        assert_eq!(
            character_count(&spec(2, 2, &[&[1, 1]], false)).unwrap(),
            rat(1, 2)
        );
        assert_eq!(
            character_count(&spec(3, 0, &[&[1, 1, 1]], false)).unwrap(),
            rat(1, 6)
        );
        let c = character_count(&spec(3, 2, &[&[3]], false)).unwrap();
        let b = brute_count(&spec(3, 2, &[&[3]], false)).unwrap();
        assert_eq!(
            c * Rational::from_integer(6.into()),
            Rational::from_integer(b.into())
        );
        assert_eq!(
            character_count(&spec(1, 3, &[], false)).unwrap(),
            Rational::zero()
        );
        assert!(character_count(&spec(13, 0, &[], false)).is_err());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&ty(&[2, 2, 1])), 15.into());
        assert_eq!(class_size(&ty(&[1, 1, 1, 1])), 1.into());
        assert_eq!(class_size(&ty(&[4])), 6.into());
    }

    #[test]
    fn exists_cover_examples() {
        let p = HurwitzParams::new(2, 2, None).unwrap();
        let lab = |k, parts: &[u32]| BoundaryLabel::new(k, ty(parts), None);
        assert!(exists_cover(&p, &lab(3, &[2])).unwrap());
        assert!(!exists_cover(&p, &lab(3, &[1, 1])).unwrap());
        let p = HurwitzParams::new(1, 3, None).unwrap();
        assert!(!exists_cover(&p, &lab(2, &[2, 1])).unwrap());
        assert!(exists_cover(&p, &lab(2, &[3])).unwrap());
        let big = HurwitzParams::new(0, 6, None).unwrap();
        assert!(matches!(
            exists_cover(&big, &lab(2, &[1, 1, 1, 1, 1, 1])),
            Err(Error::OracleTooLarge { .. })
        ));
    }

    #[test]
    fn gluing_needs_connectivity() {
        // two sides each splitting {1..d} into two orbits with one fixed
        // cycle apiece can still glue connectedly via a crossed matching
        let a: Signature = vec![vec![1], vec![1]];
        let b: Signature = vec![vec![1, 1]];
        assert!(connected_gluing_exists(&a, &b));
        let b2: Signature = vec![vec![1], vec![1]];
        assert!(!connected_gluing_exists(&a, &b2));
        assert!(!connected_gluing_exists(&vec![vec![2]], &vec![vec![1, 1]]));
    }
}
