//! Monomial ideals of `ℂ[S]`, their stabilizers `I:I ≅ Der(I, I)` and the
//! semigroup overrings `ℂ[T]`, `S ⊆ T ⊆ ℕ`.
//!
//! A monomial ideal is a semigroup ideal `E ⊆ S`, and `I:I = ℂ[E - E]`. Two
//! monomial ideals are equivalent when one is a translate of the other, so
//! each class has a unique representative with minimum 0; these are the
//! sets `S ∪ X` with `X ⊆ H(S)` closed under adding `S`.
//!
//! Only monomial ideals are handled. For other ideals `Der(I, I)` need not
//! match `I:I`; in `k[t⁴, t⁵, t⁶]` the ideal `(t⁴ + t⁵, t⁴ + t⁶)` has
//! derivations generated by `t⁵∂, t⁶∂, t⁷∂`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::semigroup::{NumericalSemigroup, RelativeIdeal};
use crate::weyl::{derivation_for, LaurentPoly, WeylOperator};

/// An integral ideal `E ⊆ S` with `E + S ⊆ E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupIdeal {
    ideal: RelativeIdeal,
}

impl SemigroupIdeal {
    /// `⋃ (x + S)`; every `x` must lie in `S`.
    pub fn generated_by(owner: &NumericalSemigroup, elements: &[i64]) -> Result<Self> {
        if let Some(&x) = elements.iter().find(|&&x| !owner.contains(x)) {
            return Err(Error::NotSemigroupMember(x));
        }
        Ok(Self {
            ideal: RelativeIdeal::generated_by(owner, elements)?,
        })
    }

    pub fn from_relative(ideal: RelativeIdeal) -> Result<Self> {
        if let Some(x) = ideal.small_members().find(|&x| !ideal.owner().contains(x)) {
            return Err(Error::NotSemigroupMember(x));
        }
        Ok(Self { ideal })
    }

    pub fn owner(&self) -> &NumericalSemigroup {
        self.ideal.owner()
    }

    pub fn as_relative(&self) -> &RelativeIdeal {
        &self.ideal
    }

    pub fn contains(&self, z: i64) -> bool {
        self.ideal.contains(z)
    }

    /// Least exponent of a monomial in the ideal.
    pub fn min(&self) -> i64 {
        self.ideal.min()
    }

    /// Minimal monomial generators.
    pub fn generators(&self) -> Vec<i64> {
        self.ideal.module_generators()
    }

    /// `x + E` for `x ∈ S`.
    pub fn translate(&self, x: i64) -> Result<Self> {
        if !self.owner().contains(x) {
            return Err(Error::NotSemigroupMember(x));
        }
        Ok(Self {
            ideal: self.ideal.translate(x),
        })
    }

    /// `E - min(E)`, the canonical member of the equivalence class.
    pub fn normalized(&self) -> RelativeIdeal {
        self.ideal.translate(-self.min())
    }
}

/// A semigroup `T` with `S ⊆ T ⊆ ℕ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oversemigroup {
    semigroup: NumericalSemigroup,
    parent: NumericalSemigroup,
}

impl Oversemigroup {
    pub fn new(parent: &NumericalSemigroup, semigroup: &NumericalSemigroup) -> Result<Self> {
        if !parent.is_subset_of(semigroup) {
            return Err(Error::NotOversemigroup);
        }
        Ok(Self {
            semigroup: semigroup.clone(),
            parent: parent.clone(),
        })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn parent(&self) -> &NumericalSemigroup {
        &self.parent
    }

    /// `T` as a relative ideal of the parent.
    pub fn as_relative(&self) -> RelativeIdeal {
        let t = &self.semigroup;
        RelativeIdeal::from_predicate(&self.parent, 0, t.conductor(), |z| t.contains(z))
            .expect("an oversemigroup is a relative ideal of its parent")
    }
}

fn relative_to_semigroup(r: &RelativeIdeal) -> NumericalSemigroup {
    r.to_semigroup().expect("E - E is a semigroup")
}

/// `E - E`, the semigroup `T` with `E:E = ℂ[T]`.
pub fn stabilizer(ideal: &SemigroupIdeal) -> Oversemigroup {
    let r = ideal.as_relative();
    let t = relative_to_semigroup(&r.difference(r).expect("same owner"));
    Oversemigroup {
        semigroup: t,
        parent: ideal.owner().clone(),
    }
}

/// Generators `t^{n+1}∂` of `Der(I, I)`, one per generator `t^n` of `I:I` as
/// a `ℂ[S]`-module. This is all of `Der(I, I)` for proper ideals; when
/// `0 ∈ I` the derivations also kill `1`, and `Der(I, I)` can be larger.
pub fn der_generators(ideal: &SemigroupIdeal) -> Vec<WeylOperator> {
    stabilizer(ideal)
        .as_relative()
        .module_generators()
        .into_iter()
        .map(derivation_for)
        .collect()
}

/// Whether `op` sends every monomial of the ideal back into the ideal.
/// A term `t^a ∂^b` lowers exponents by at most `b - a`, so monomials more
/// than that past the tail land in the tail and the check stops there.
pub fn maps_ideal_into_itself(ideal: &SemigroupIdeal, op: &WeylOperator) -> bool {
    let r = ideal.as_relative();
    let drop = op
        .terms()
        .map(|((a, b), _)| b as i64 - a)
        .max()
        .unwrap_or(0)
        .max(0);
    (r.min()..=r.tail_start() + drop)
        .filter(|&e| r.contains(e))
        .all(|e| {
            op.apply(&LaurentPoly::t_pow(e))
                .terms()
                .all(|(x, _)| r.contains(x))
        })
}

/// Every semigroup between `S` and ℕ, most gaps first.
///
/// Grows from `S` by adjoining one gap `h` at a time, allowed when
/// `h + d ∈ T` for each generator `d` of `T` and `2h ∈ T`. Adjoining the
/// largest element of `T' ∖ T` always qualifies, so every `T'` is reached.
pub fn oversemigroups(s: &NumericalSemigroup) -> Vec<Oversemigroup> {
    let mut seen: BTreeMap<Vec<i64>, NumericalSemigroup> = BTreeMap::new();
    let mut stack = vec![s.clone()];
    while let Some(t) = stack.pop() {
        if seen.contains_key(t.gaps()) {
            continue;
        }
        for &h in t.gaps() {
            let ok = t.generators().iter().all(|&d| t.contains(h + d)) && t.contains(2 * h);
            if ok {
                let next =
                    NumericalSemigroup::from_predicate(t.conductor(), |z| z == h || t.contains(z))
                        .expect("adjoining an admissible gap keeps closure");
                if !seen.contains_key(next.gaps()) {
                    stack.push(next);
                }
            }
        }
        seen.insert(t.gaps().to_vec(), t);
    }
    let mut out: Vec<NumericalSemigroup> = seen.into_values().collect();
    out.sort_by(|x, y| {
        y.genus()
            .cmp(&x.genus())
            .then_with(|| x.gaps().cmp(y.gaps()))
    });
    out.into_iter()
        .map(|t| Oversemigroup {
            semigroup: t,
            parent: s.clone(),
        })
        .collect()
}

/// `C = {x : x + T ⊆ S}`, the largest common ideal of `S` and `T`.
pub fn conductor_ideal(s: &NumericalSemigroup, t: &Oversemigroup) -> Result<SemigroupIdeal> {
    if t.parent() != s || !s.is_subset_of(t.semigroup()) {
        return Err(Error::NotOversemigroup);
    }
    let c = s.as_ideal().difference(&t.as_relative())?;
    SemigroupIdeal::from_relative(c)
}

/// `r + T` with `r = min(C)`; its stabilizer is `T`.
pub fn realize_as_quotient(t: &Oversemigroup) -> SemigroupIdeal {
    let s = t.parent();
    let r = conductor_ideal(s, t)
        .expect("parent of its own oversemigroup")
        .min();
    SemigroupIdeal::from_relative(t.as_relative().translate(r))
        .expect("r + T lies in S for r in the conductor")
}

/// Principal over its stabilizer: `E = min(E) + (E - E)`.
pub fn is_stable(ideal: &SemigroupIdeal) -> bool {
    ideal.normalized() == stabilizer(ideal).as_relative()
}

/// One equivalence class of monomial ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberClass {
    normalized: RelativeIdeal,
    stabilizer: NumericalSemigroup,
}

impl FiberClass {
    /// Representative with minimum 0 (a relative ideal, not inside `S` in
    /// general).
    pub fn normalized(&self) -> &RelativeIdeal {
        &self.normalized
    }

    /// Gaps of `S` that the normalized representative contains.
    pub fn adjoined_gaps(&self) -> Vec<i64> {
        let s = self.normalized.owner();
        s.gaps()
            .iter()
            .copied()
            .filter(|&h| self.normalized.contains(h))
            .collect()
    }

    /// Naturals missing from the normalized representative.
    pub fn gap_pattern(&self) -> Vec<i64> {
        self.normalized.holes()
    }

    pub fn stabilizer(&self) -> &NumericalSemigroup {
        &self.stabilizer
    }

    pub fn is_stable(&self) -> bool {
        let t = &self.stabilizer;
        (0..self.normalized.tail_start().max(t.conductor()))
            .all(|z| self.normalized.contains(z) == t.contains(z))
    }

    /// The translate `r + E` inside `S` with the least `r ∈ S`.
    pub fn representative(&self) -> SemigroupIdeal {
        let s = self.normalized.owner();
        let r = s
            .as_ideal()
            .difference(&self.normalized)
            .expect("same owner")
            .min();
        SemigroupIdeal::from_relative(self.normalized.translate(r)).expect("S - E shifts E into S")
    }
}

/// All normalized ideals of `S`: `S ∪ X`, `X ⊆ H(S)` with `X + M ⊆ S ∪ X`.
pub fn normalized_ideals(s: &NumericalSemigroup) -> Vec<RelativeIdeal> {
    let mut seen: BTreeMap<Vec<i64>, RelativeIdeal> = BTreeMap::new();
    let mut stack = vec![s.as_ideal()];
    while let Some(e) = stack.pop() {
        let key = e.holes();
        if seen.contains_key(&key) {
            continue;
        }
        for &h in s.gaps() {
            if !e.contains(h) && s.generators().iter().all(|&d| e.contains(h + d)) {
                let next =
                    RelativeIdeal::from_predicate(s, 0, s.conductor(), |z| z == h || e.contains(z))
                        .expect("adjoining an admissible gap keeps closure");
                if !seen.contains_key(&next.holes()) {
                    stack.push(next);
                }
            }
        }
        seen.insert(key, e);
    }
    let mut out: Vec<RelativeIdeal> = seen.into_values().collect();
    out.sort_by(|x, y| {
        let (hx, hy) = (x.holes(), y.holes());
        hy.len().cmp(&hx.len()).then_with(|| hx.cmp(&hy))
    });
    out
}

/// An overring with the ideal classes whose stabilizer it is.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub overring: Oversemigroup,
    pub classes: Vec<FiberClass>,
}

/// The fiber of every oversemigroup, in [`oversemigroups`] order. The fibers
/// partition the ideal classes of `S`.
pub fn fibers(s: &NumericalSemigroup) -> Vec<Fiber> {
    let mut by_gaps: BTreeMap<Vec<i64>, Vec<FiberClass>> = BTreeMap::new();
    for e in normalized_ideals(s) {
        let t = relative_to_semigroup(&e.difference(&e).expect("same owner"));
        by_gaps
            .entry(t.gaps().to_vec())
            .or_default()
            .push(FiberClass {
                normalized: e,
                stabilizer: t,
            });
    }
    oversemigroups(s)
        .into_iter()
        .map(|overring| {
            let classes = by_gaps
                .remove(overring.semigroup().gaps())
                .unwrap_or_default();
            Fiber { overring, classes }
        })
        .collect()
}

/// Ideal classes `E` with `E - E = T`.
pub fn quotient_fiber(s: &NumericalSemigroup, t: &Oversemigroup) -> Result<Vec<FiberClass>> {
    if t.parent() != s {
        return Err(Error::NotOversemigroup);
    }
    Ok(fibers(s)
        .into_iter()
        .find(|f| f.overring.semigroup() == t.semigroup())
        .map(|f| f.classes)
        .unwrap_or_default())
}

/// The three equivalent conditions on `S`, computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct BijectionCheck {
    /// every overring is `E:E` for exactly one ideal class
    pub bijective: bool,
    /// `S = ⟨2, 2k+1⟩` for some `k ≥ 0`
    pub is_two_generated_odd: bool,
    pub all_oversemigroups_symmetric: bool,
}

impl BijectionCheck {
    pub fn consistent(&self) -> bool {
        self.bijective == self.is_two_generated_odd
            && self.bijective == self.all_oversemigroups_symmetric
    }
}

pub fn bijection_check(s: &NumericalSemigroup) -> BijectionCheck {
    let fibers = fibers(s);
    BijectionCheck {
        bijective: fibers.iter().all(|f| f.classes.len() == 1),
        is_two_generated_odd: s.is_full() || s.multiplicity() == 2,
        all_oversemigroups_symmetric: fibers.iter().all(|f| f.overring.semigroup().is_symmetric()),
    }
}

/// Number of ideal classes of `S`.
pub fn class_count(s: &NumericalSemigroup) -> usize {
    normalized_ideals(s).len()
}

/// Gap sets of the oversemigroups, handy for set comparisons.
pub fn oversemigroup_gap_sets(s: &NumericalSemigroup) -> BTreeSet<Vec<i64>> {
    oversemigroups(s)
        .iter()
        .map(|t| t.semigroup().gaps().to_vec())
        .collect()
}
