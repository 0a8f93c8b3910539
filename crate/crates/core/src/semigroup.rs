//! Numerical semigroups and their relative ideals.
//!
//! A [`NumericalSemigroup`] is stored through its membership table below the
//! conductor `g + 1`; everything above is a member. Valencies are precomputed
//! at construction, so the value is immutable and cheap to share.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug)]
struct Inner {
    generators: Vec<i64>,
    frobenius: i64,
    /// membership of `0..=frobenius`
    member: Vec<bool>,
    gaps: Vec<i64>,
    small: Vec<i64>,
    /// valency of `0..=frobenius`; zero above
    valency: Vec<u32>,
}

/// A submonoid of ℕ with finite complement.
#[derive(Clone)]
pub struct NumericalSemigroup {
    inner: Arc<Inner>,
}

impl NumericalSemigroup {
    /// Builds `⟨gens⟩`. Non-minimal generators are accepted and pruned.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&d| d <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let d = gens.iter().fold(0i64, |acc, &x| num::integer::gcd(acc, x));
        if d != 1 {
            return Err(Error::NonCoprime(d as u64));
        }
        let lo = *gens.iter().min().unwrap();
        let hi = *gens.iter().max().unwrap();
        let bound = (lo * hi) as usize;
        let mut reach = vec![false; bound + 1];
        reach[0] = true;
        for z in 1..=bound {
            reach[z] = gens
                .iter()
                .any(|&d| d as usize <= z && reach[z - d as usize]);
        }
        let frobenius = reach.iter().rposition(|&r| !r).map_or(-1, |z| z as i64);
        let member = reach[..(frobenius + 1) as usize].to_vec();
        Ok(Self::from_table(frobenius, member))
    }

    /// Builds the semigroup whose members below `conductor` are given by
    /// `is_member`; every integer `>= conductor` is taken to be a member.
    pub fn from_predicate(conductor: i64, is_member: impl Fn(i64) -> bool) -> Result<Self> {
        let conductor = conductor.max(0);
        let table: Vec<bool> = (0..conductor).map(|z| z == 0 || is_member(z)).collect();
        if conductor > 0 && !is_member(0) {
            return Err(Error::NotClosed);
        }
        let frobenius = table.iter().rposition(|&r| !r).map_or(-1, |z| z as i64);
        let member = table[..(frobenius + 1) as usize].to_vec();
        let at = |z: i64| z > frobenius || member[z as usize];
        for a in 1..=frobenius {
            if !at(a) {
                continue;
            }
            for b in a..=frobenius - a {
                if at(b) && !at(a + b) {
                    return Err(Error::NotClosed);
                }
            }
        }
        Ok(Self::from_table(frobenius, member))
    }

    /// Builds `ℕ ∖ gaps`, failing when that set is not additively closed.
    pub fn from_gaps(gaps: &[i64]) -> Result<Self> {
        if gaps.iter().any(|&h| h <= 0) {
            return Err(Error::NotClosed);
        }
        let set: BTreeSet<i64> = gaps.iter().copied().collect();
        let conductor = set.last().map_or(0, |g| g + 1);
        Self::from_predicate(conductor, |z| !set.contains(&z))
    }

    /// The full semigroup ℕ.
    pub fn naturals() -> Self {
        Self::from_table(-1, Vec::new())
    }

    fn from_table(frobenius: i64, member: Vec<bool>) -> Self {
        let at = |z: i64| z >= 0 && (z > frobenius || member[z as usize]);
        let gaps: Vec<i64> = (1..=frobenius).filter(|&z| !at(z)).collect();
        let mut small: Vec<i64> = (0..frobenius).filter(|&z| at(z)).collect();
        small.push(frobenius + 1);
        let multiplicity = (1..).find(|&z| at(z)).unwrap();
        let generators = (1..=frobenius + multiplicity + 1)
            .filter(|&x| at(x) && !(multiplicity..=x - multiplicity).any(|y| at(y) && at(x - y)))
            .collect();
        let valency = (0..=frobenius)
            .map(|z| (0..=frobenius - z).filter(|&s| at(s) && !at(z + s)).count() as u32)
            .collect();
        Self {
            inner: Arc::new(Inner {
                generators,
                frobenius,
                member,
                gaps,
                small,
                valency,
            }),
        }
    }

    /// Minimal generators, ascending.
    pub fn generators(&self) -> &[i64] {
        &self.inner.generators
    }

    /// Embedding dimension ν.
    pub fn embedding_dimension(&self) -> usize {
        self.inner.generators.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.inner.generators[0]
    }

    /// Largest gap, or `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.inner.frobenius
    }

    /// `g + 1`: every integer from here on is a member.
    pub fn conductor(&self) -> i64 {
        self.inner.frobenius + 1
    }

    /// H(S), ascending.
    pub fn gaps(&self) -> &[i64] {
        &self.inner.gaps
    }

    /// δ = |H(S)|.
    pub fn genus(&self) -> usize {
        self.inner.gaps.len()
    }

    /// `[s_0 = 0, s_1, …, s_n = g + 1]`.
    pub fn small_elements(&self) -> &[i64] {
        &self.inner.small
    }

    /// Number of elements smaller than the Frobenius number.
    pub fn n(&self) -> usize {
        self.inner.small.len() - 1
    }

    pub fn is_full(&self) -> bool {
        self.inner.frobenius < 0
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= 0 && (z > self.inner.frobenius || self.inner.member[z as usize])
    }

    /// `|{s ∈ S : z + s ∉ S}|`. Negative arguments go through
    /// `val(-z) = val(z) + z`.
    pub fn valency(&self, z: i64) -> u32 {
        if z > self.inner.frobenius {
            0
        } else if z >= 0 {
            self.inner.valency[z as usize]
        } else {
            self.valency(-z) + (-z) as u32
        }
    }

    /// `V_i = {a ∈ ℤ : val(a) ≤ i}`.
    pub fn v_set(&self, i: u32) -> RelativeIdeal {
        RelativeIdeal::from_predicate(self, -(i as i64), self.conductor(), |a| {
            self.valency(a) <= i
        })
        .expect("V_i is a relative ideal")
    }

    /// T(S) = V_1 ∖ V_0, the pseudo-Frobenius numbers.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>> {
        if self.is_full() {
            return Err(Error::FullSemigroup);
        }
        Ok(self
            .gaps()
            .iter()
            .copied()
            .filter(|&h| self.valency(h) == 1)
            .collect())
    }

    /// Cardinality of T(S).
    pub fn semigroup_type(&self) -> Result<usize> {
        self.pseudo_frobenius().map(|t| t.len())
    }

    /// S seen as a relative ideal of itself.
    pub fn as_ideal(&self) -> RelativeIdeal {
        self.elements_from(0)
    }

    /// M = S ∖ {0}.
    pub fn maximal_ideal(&self) -> RelativeIdeal {
        self.elements_from(1)
    }

    /// `S(z) = {s ∈ S : s ≥ z}`.
    pub fn elements_from(&self, z: i64) -> RelativeIdeal {
        let lo = z.max(0);
        RelativeIdeal::from_predicate(self, lo, self.conductor().max(lo), |x| self.contains(x))
            .expect("S(z) is an ideal")
    }

    /// `I_i = S(s_i)`.
    pub fn small_ideal(&self, i: usize) -> RelativeIdeal {
        self.elements_from(self.inner.small[i])
    }

    pub fn is_subset_of(&self, other: &NumericalSemigroup) -> bool {
        (0..self.conductor().max(other.conductor())).all(|z| !self.contains(z) || other.contains(z))
    }

    /// `S_0 = S, S_{i+1} = B(M_i)`, ending with ℕ; each entry carries its
    /// multiplicity.
    pub fn blowup_chain(&self) -> Vec<(NumericalSemigroup, i64)> {
        let mut chain = vec![(self.clone(), self.multiplicity())];
        let mut cur = self.clone();
        while !cur.is_full() {
            cur = cur.maximal_ideal().blowup();
            let e = cur.multiplicity();
            chain.push((cur.clone(), e));
        }
        chain
    }

    /// Multiplicities of the blowup chain, ending in the first 1.
    pub fn multiplicity_sequence(&self) -> Vec<i64> {
        self.blowup_chain().into_iter().map(|(_, e)| e).collect()
    }

    /// ν = e.
    pub fn is_max_embedding_dimension(&self) -> bool {
        self.embedding_dimension() as i64 == self.multiplicity()
    }

    /// The alternative characterization: `M - e` is a semigroup.
    pub fn shifted_maximal_ideal_is_semigroup(&self) -> bool {
        self.maximal_ideal()
            .translate(-self.multiplicity())
            .is_semigroup()
    }

    /// `S_1 = M - e` for a semigroup of maximal embedding dimension.
    pub fn med_blowup(&self) -> Result<NumericalSemigroup> {
        if !self.is_max_embedding_dimension() {
            return Err(Error::NotMaximalEmbeddingDimension);
        }
        self.maximal_ideal()
            .translate(-self.multiplicity())
            .to_semigroup()
            .ok_or_else(|| Error::Invariant("M - e is not a semigroup for an MED semigroup".into()))
    }

    /// `I_i - s_i` is a semigroup for `i = 0..=n`.
    pub fn is_arf(&self) -> bool {
        (0..=self.n()).all(|i| {
            self.small_ideal(i)
                .translate(-self.inner.small[i])
                .is_semigroup()
        })
    }

    /// The Arf semigroup `{0, e_0, e_0 + e_1, …}` with the given
    /// multiplicity sequence. Entries past the end are taken to be 1.
    pub fn arf_from_multiplicity_sequence(seq: &[i64]) -> Result<Self> {
        if let Some(&bad) = seq.iter().find(|&&e| e <= 0) {
            return Err(Error::InvalidSequence(format!(
                "entry {bad} is not positive"
            )));
        }
        let at = |j: usize| seq.get(j).copied().unwrap_or(1);
        for (i, &e) in seq.iter().enumerate() {
            let mut acc = 0;
            let mut j = i + 1;
            while acc < e {
                acc += at(j);
                j += 1;
            }
            if acc != e {
                return Err(Error::InvalidSequence(format!(
                    "e_{i} = {e} is not a sum of consecutive successors"
                )));
            }
        }
        let mut sums = BTreeSet::from([0i64]);
        let mut acc = 0;
        for &e in seq {
            acc += e;
            sums.insert(acc);
        }
        let s = Self::from_predicate(acc, |z| sums.contains(&z))?;
        if !s.is_arf() {
            return Err(Error::Invariant(format!(
                "{s} built from {seq:?} is not Arf"
            )));
        }
        Ok(s)
    }

    /// `z ∈ S ⇔ g - z ∉ S` for every integer z.
    pub fn is_symmetric(&self) -> bool {
        let g = self.frobenius();
        (0..=g).all(|z| self.contains(z) != self.contains(g - z))
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.frobenius == other.inner.frobenius
                && self.inner.member == other.inner.member)
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.member.hash(state);
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, d) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

/// A relative ideal `I ⊆ ℤ` of a numerical semigroup: `I + S ⊆ I` and some
/// translate of `I` lies in `S`.
///
/// Stored canonically as its minimum, the start of its tail (the least `c`
/// with `[c, ∞) ⊆ I`) and a membership bitmap over `[min, tail)`. Two ideals
/// are equal exactly when these agree.
#[derive(Clone)]
pub struct RelativeIdeal {
    owner: NumericalSemigroup,
    min: i64,
    tail: i64,
    bits: Vec<bool>,
}

impl RelativeIdeal {
    /// Members in `[lo, hi)` are those satisfying `is_member`; everything
    /// below `lo` is excluded and everything from `hi` on is included.
    /// Fails with [`Error::NotClosed`] when the result is not closed under
    /// adding `owner`.
    pub fn from_predicate(
        owner: &NumericalSemigroup,
        lo: i64,
        hi: i64,
        is_member: impl Fn(i64) -> bool,
    ) -> Result<Self> {
        let hi = hi.max(lo);
        let raw: Vec<bool> = (lo..hi).map(&is_member).collect();
        let first = raw.iter().position(|&b| b).unwrap_or(raw.len());
        let last_out = raw
            .iter()
            .rposition(|&b| !b)
            .map_or(0, |p| p + 1)
            .max(first);
        let min = lo + first as i64;
        let tail = lo + last_out as i64;
        let ideal = Self {
            owner: owner.clone(),
            min,
            tail,
            bits: raw[first..last_out].to_vec(),
        };
        for z in ideal.min..ideal.tail {
            if ideal.contains(z) && owner.generators().iter().any(|&d| !ideal.contains(z + d)) {
                return Err(Error::NotClosed);
            }
        }
        Ok(ideal)
    }

    /// `⋃ (x + S)` over the given elements.
    pub fn generated_by(owner: &NumericalSemigroup, elements: &[i64]) -> Result<Self> {
        let lo = *elements.iter().min().ok_or(Error::EmptyGenerators)?;
        let hi = lo + owner.conductor();
        Self::from_predicate(owner, lo, hi, |z| {
            elements.iter().any(|&x| owner.contains(z - x))
        })
    }

    pub fn owner(&self) -> &NumericalSemigroup {
        &self.owner
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    /// Least `c` with `[c, ∞) ⊆ I`.
    pub fn tail_start(&self) -> i64 {
        self.tail
    }

    pub fn contains(&self, z: i64) -> bool {
        if z >= self.tail {
            true
        } else if z < self.min {
            false
        } else {
            self.bits[(z - self.min) as usize]
        }
    }

    /// Members below the tail, ascending.
    pub fn small_members(&self) -> impl Iterator<Item = i64> + '_ {
        (self.min..self.tail).filter(move |&z| self.contains(z))
    }

    /// Integers in `[min, tail)` that are not members.
    pub fn holes(&self) -> Vec<i64> {
        (self.min..self.tail)
            .filter(|&z| !self.contains(z))
            .collect()
    }

    fn check_owner(&self, other: &Self) -> Result<()> {
        if self.owner == other.owner {
            Ok(())
        } else {
            Err(Error::OwnerMismatch)
        }
    }

    /// `I - J = {z : z + J ⊆ I}`.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        let lo = self.min - other.min;
        let hi = self.tail - other.min;
        Self::from_predicate(&self.owner, lo, hi, |z| {
            z + other.tail >= self.tail && other.small_members().all(|j| self.contains(z + j))
        })
    }

    /// `I + J`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        let lo = self.min + other.min;
        let hi = self.tail + other.min;
        Self::from_predicate(&self.owner, lo, hi, |z| {
            (other.min..=z - self.min).any(|j| other.contains(j) && self.contains(z - j))
        })
    }

    /// `hI`, for `h ≥ 1`.
    pub fn multiple(&self, h: usize) -> Self {
        assert!(h >= 1, "multiple of an ideal needs h >= 1");
        let mut acc = self.clone();
        for _ in 1..h {
            acc = acc.sum(self).expect("same owner");
        }
        acc
    }

    /// `x + I`.
    pub fn translate(&self, x: i64) -> Self {
        Self {
            owner: self.owner.clone(),
            min: self.min + x,
            tail: self.tail + x,
            bits: self.bits.clone(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        let lo = self.min.min(other.min);
        let hi = self.tail.max(other.tail);
        Self::from_predicate(&self.owner, lo, hi, |z| {
            self.contains(z) && other.contains(z)
        })
    }

    /// `I ∩ ℕ`.
    pub fn nonnegative_part(&self) -> Self {
        let lo = self.min.max(0);
        Self::from_predicate(&self.owner, lo, self.tail.max(lo), |z| self.contains(z))
            .expect("I ∩ ℕ is an ideal")
    }

    /// Contains 0 and is additively closed.
    pub fn is_semigroup(&self) -> bool {
        if self.min != 0 {
            return false;
        }
        let members: Vec<i64> = self.small_members().collect();
        members
            .iter()
            .all(|&a| members.iter().all(|&b| self.contains(a + b)))
    }

    pub fn to_semigroup(&self) -> Option<NumericalSemigroup> {
        if !self.is_semigroup() {
            return None;
        }
        NumericalSemigroup::from_predicate(self.tail, |z| self.contains(z)).ok()
    }

    /// Minimal generators as an S-module: members not in `I + M`.
    pub fn module_generators(&self) -> Vec<i64> {
        let e = self.owner.multiplicity();
        (self.min..self.tail + e)
            .filter(|&z| {
                self.contains(z)
                    && self
                        .owner
                        .generators()
                        .iter()
                        .all(|&d| !self.contains(z - d))
            })
            .collect()
    }

    /// `B(I) = hI - hI` for `h ≫ 0`.
    ///
    /// The chain stops once `(h+1)I = min(I) + hI`; from there on every
    /// `kI` is a translate of `hI`, so `kI - kI` no longer changes.
    pub fn blowup(&self) -> NumericalSemigroup {
        let mut cur = self.clone();
        loop {
            let next = cur.sum(self).expect("same owner");
            if next == cur.translate(self.min) {
                return cur
                    .difference(&cur)
                    .expect("same owner")
                    .to_semigroup()
                    .expect("hI - hI is a semigroup");
            }
            cur = next;
        }
    }
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.min == other.min && self.tail == other.tail && self.bits == other.bits
    }
}

impl Eq for RelativeIdeal {}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<i64> = self.small_members().collect();
        write!(f, "RelativeIdeal({members:?} ∪ [{}, ∞))", self.tail)
    }
}
