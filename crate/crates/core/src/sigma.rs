//! The plane monoid Σ ⊆ ℕ² whose semigroup ring is the associated graded
//! ring of the differential operators on `ℂ[S]`.
//!
//! Membership is decided through valencies: `(a, b) ∈ Σ` iff
//! `val(a - b) ≤ b`. The points of a diagonal `a - b = z` that lie in Σ are
//! therefore exactly those with `b ≥ val(z)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A lattice point of ℕ².
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct PlanePoint {
    pub a: u32,
    pub b: u32,
}

impl PlanePoint {
    pub const ORIGIN: PlanePoint = PlanePoint { a: 0, b: 0 };

    pub const fn new(a: u32, b: u32) -> Self {
        Self { a, b }
    }

    pub fn swap(self) -> Self {
        Self::new(self.b, self.a)
    }

    /// `self - other` when it stays in ℕ².
    pub fn checked_sub(self, other: PlanePoint) -> Option<PlanePoint> {
        Some(Self::new(
            self.a.checked_sub(other.a)?,
            self.b.checked_sub(other.b)?,
        ))
    }

    /// Diagonal index `a - b`.
    pub fn diagonal(self) -> i64 {
        self.a as i64 - self.b as i64
    }

    pub fn is_origin(self) -> bool {
        self == Self::ORIGIN
    }
}

impl std::ops::Add for PlanePoint {
    type Output = PlanePoint;

    fn add(self, rhs: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl From<(u32, u32)> for PlanePoint {
    fn from((a, b): (u32, u32)) -> Self {
        Self::new(a, b)
    }
}

impl From<PlanePoint> for (u32, u32) {
    fn from(p: PlanePoint) -> Self {
        (p.a, p.b)
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl fmt::Debug for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for building point sets in tests and examples.
pub fn points(list: &[(u32, u32)]) -> BTreeSet<PlanePoint> {
    list.iter().map(|&p| p.into()).collect()
}

/// Σ for a numerical semigroup S.
#[derive(Clone, Debug)]
pub struct SigmaMonoid {
    base: NumericalSemigroup,
    generators: Vec<PlanePoint>,
    t_sigma: Vec<PlanePoint>,
    box_bound: u32,
}

/// Counts attached to Σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaStatistics {
    /// number of minimal generators
    pub mu: usize,
    pub gap_count: usize,
    pub delta: usize,
    pub nu: usize,
}

impl SigmaMonoid {
    pub fn new(base: &NumericalSemigroup) -> Self {
        let mut gens = BTreeSet::new();
        if base.is_full() {
            gens.insert(PlanePoint::new(1, 0));
            gens.insert(PlanePoint::new(0, 1));
        } else {
            for &d in base.generators() {
                gens.insert(PlanePoint::new(d as u32, 0));
                gens.insert(PlanePoint::new(0, d as u32));
            }
            gens.insert(PlanePoint::new(1, 1));
        }
        let mut t_sigma = Vec::new();
        for &h in base.gaps() {
            for z in [h, -h] {
                let p = PlanePoint::new(base.valency(-z), base.valency(z));
                gens.insert(p);
                t_sigma.push(PlanePoint::new(p.a - 1, p.b - 1));
            }
        }
        t_sigma.sort();
        // every gap (a, b) has b < val(a - b) ≤ n ≤ g + 1 and a - b ≤ g (or
        // the mirror image), so both coordinates stay below 2g + 2
        let window = (2 * base.conductor()).max(1) as u32;
        let mut max_coord = None;
        for a in 0..window {
            for b in 0..window {
                if !Self::member(base, a, b) {
                    max_coord = max_coord.max(Some(a.max(b)));
                }
            }
        }
        Self {
            base: base.clone(),
            generators: gens.into_iter().collect(),
            t_sigma,
            box_bound: max_coord.map_or(1, |m| m + 1),
        }
    }

    fn member(base: &NumericalSemigroup, a: u32, b: u32) -> bool {
        base.valency(a as i64 - b as i64) <= b
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    /// Minimal generators in lexicographic order.
    pub fn minimal_generators(&self) -> &[PlanePoint] {
        &self.generators
    }

    /// Every point with a coordinate `≥ box_bound` is a member.
    pub fn box_bound(&self) -> u32 {
        self.box_bound
    }

    pub fn contains(&self, p: PlanePoint) -> bool {
        Self::member(&self.base, p.a, p.b)
    }

    /// `contains` for possibly negative coordinates.
    pub fn contains_signed(&self, a: i64, b: i64) -> bool {
        a >= 0 && b >= 0 && self.contains(PlanePoint::new(a as u32, b as u32))
    }

    /// ℕ² ∖ Σ, sorted.
    pub fn gaps(&self) -> Vec<PlanePoint> {
        let c = self.box_bound;
        let mut out = Vec::new();
        for a in 0..c {
            for b in 0..c {
                let p = PlanePoint::new(a, b);
                if !self.contains(p) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Ap_(1,1)(Σ): the axis rays `(s, 0)`, `(0, s)` for `s ∈ S` (implicit)
    /// together with the returned finite off-axis part.
    pub fn apery_11(&self) -> Result<Vec<PlanePoint>> {
        if self.base.is_full() {
            return Err(Error::FullSemigroup);
        }
        Ok(self
            .t_sigma
            .iter()
            .map(|t| *t + PlanePoint::new(1, 1))
            .collect())
    }

    /// Whether `p` is in Ap_(1,1)(Σ), including the axis rays.
    pub fn in_apery_11(&self, p: PlanePoint) -> bool {
        self.contains(p)
            && !p
                .checked_sub(PlanePoint::new(1, 1))
                .is_some_and(|q| self.contains(q))
    }

    /// T(Σ) = {τ ∉ Σ : τ + Σ_+ ⊆ Σ_+}, sorted.
    pub fn t_sigma(&self) -> Result<&[PlanePoint]> {
        if self.base.is_full() {
            return Err(Error::FullSemigroup);
        }
        Ok(&self.t_sigma)
    }

    /// Membership in Σ ∪ T(Σ): `val(a - b) ≤ b + 1`.
    pub fn in_union_with_t(&self, p: PlanePoint) -> bool {
        self.base.valency(p.diagonal()) <= p.b + 1
    }

    /// Σ of the first blowup `S_1 = M - e`, for MED semigroups.
    pub fn blowup(&self) -> Result<SigmaMonoid> {
        if self.base.is_full() {
            return Ok(self.clone());
        }
        Ok(SigmaMonoid::new(&self.base.med_blowup()?))
    }

    /// T(Σ) for an Arf semigroup, assembled from the pseudo-Frobenius sets of
    /// its blowups: `(T(S_b) + b, b)` and the mirror image, `b < n`.
    pub fn arf_t_sigma(base: &NumericalSemigroup) -> Result<Vec<PlanePoint>> {
        if base.is_full() {
            return Err(Error::FullSemigroup);
        }
        if !base.is_arf() {
            return Err(Error::NotArf);
        }
        let mut out = BTreeSet::new();
        for (b, (sb, _)) in base.blowup_chain().iter().enumerate().take(base.n()) {
            if sb.is_full() {
                continue;
            }
            for t in sb.pseudo_frobenius()? {
                let p = PlanePoint::new((t + b as i64) as u32, b as u32);
                out.insert(p);
                out.insert(p.swap());
            }
        }
        Ok(out.into_iter().collect())
    }

    pub fn statistics(&self) -> SigmaStatistics {
        SigmaStatistics {
            mu: self.generators.len(),
            gap_count: self.gaps().len(),
            delta: self.base.genus(),
            nu: self.base.embedding_dimension(),
        }
    }

    /// Row-major membership grid over `[0, width) × [0, height)`; row `b`,
    /// column `a`.
    pub fn grid(&self, width: u32, height: u32) -> Vec<Vec<bool>> {
        (0..height)
            .map(|b| {
                (0..width)
                    .map(|a| self.contains(PlanePoint::new(a, b)))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma(g: &[i64]) -> SigmaMonoid {
        SigmaMonoid::new(&NumericalSemigroup::from_generators(g).unwrap())
    }

    #[test]
    fn generators_three_five() {
        let s = sigma(&[3, 5]);
        let expected = points(&[
            (3, 0),
            (5, 0),
            (1, 1),
            (0, 3),
            (0, 5),
            (8, 1),
            (6, 2),
            (4, 2),
            (4, 3),
            (1, 8),
            (2, 6),
            (2, 4),
            (3, 4),
        ]);
        assert_eq!(
            s.minimal_generators()
                .iter()
                .copied()
                .collect::<BTreeSet<_>>(),
            expected
        );
        assert_eq!(s.statistics().mu, 13);
    }

    #[test]
    fn generators_two_five() {
        let s = sigma(&[2, 5]);
        let expected = points(&[
            (2, 0),
            (5, 0),
            (0, 2),
            (0, 5),
            (1, 1),
            (4, 1),
            (3, 2),
            (2, 3),
            (1, 4),
        ]);
        assert_eq!(
            s.minimal_generators()
                .iter()
                .copied()
                .collect::<BTreeSet<_>>(),
            expected
        );
    }

    #[test]
    fn full_semigroup() {
        let s = sigma(&[1]);
        assert_eq!(
            s.minimal_generators(),
            &[PlanePoint::new(0, 1), PlanePoint::new(1, 0)]
        );
        assert!(s.gaps().is_empty());
        assert_eq!(s.t_sigma(), Err(Error::FullSemigroup));
        assert_eq!(s.apery_11(), Err(Error::FullSemigroup));
        assert_eq!(
            s.blowup().unwrap().minimal_generators(),
            s.minimal_generators()
        );
    }

    #[test]
    fn membership() {
        let s = sigma(&[2, 5]);
        assert!(!s.contains(PlanePoint::new(2, 1)));
        for x in 0..12 {
            assert_eq!(
                s.contains(PlanePoint::new(x, 0)),
                s.base().contains(x as i64)
            );
        }
        assert_eq!(
            s.gaps().into_iter().collect::<BTreeSet<_>>(),
            points(&[(1, 0), (3, 0), (0, 1), (0, 3), (2, 1), (1, 2)])
        );
    }

    #[test]
    fn gaps_three_four_five() {
        let s = sigma(&[3, 4, 5]);
        assert_eq!(
            s.gaps(),
            points(&[(1, 0), (2, 0), (0, 1), (0, 2)])
                .into_iter()
                .collect::<Vec<_>>()
        );
        assert_eq!(
            s.statistics(),
            SigmaStatistics {
                mu: 11,
                gap_count: 4,
                delta: 2,
                nu: 3
            }
        );
    }

    #[test]
    fn t_sigma_three_five() {
        let s = sigma(&[3, 5]);
        let expected = points(&[
            (7, 0),
            (5, 1),
            (3, 1),
            (3, 2),
            (0, 7),
            (1, 5),
            (1, 3),
            (2, 3),
        ]);
        assert_eq!(
            s.t_sigma()
                .unwrap()
                .iter()
                .copied()
                .collect::<BTreeSet<_>>(),
            expected
        );
        assert!(s.in_union_with_t(PlanePoint::new(7, 0)));
        assert!(!s.contains(PlanePoint::new(7, 0)));
    }

    #[test]
    fn apery_contains_axes() {
        let s = sigma(&[3, 5]);
        assert!(s.in_apery_11(PlanePoint::new(5, 0)));
        assert!(!s.in_apery_11(PlanePoint::new(4, 0)));
        assert_eq!(s.apery_11().unwrap().len(), 8);
    }

    #[test]
    fn med_blowup_rejected() {
        assert_eq!(
            sigma(&[3, 5]).blowup().unwrap_err(),
            Error::NotMaximalEmbeddingDimension
        );
    }

    #[test]
    fn arf_t() {
        let s = NumericalSemigroup::from_generators(&[2, 5]).unwrap();
        assert_eq!(
            SigmaMonoid::arf_t_sigma(&s)
                .unwrap()
                .into_iter()
                .collect::<BTreeSet<_>>(),
            points(&[(3, 0), (2, 1), (0, 3), (1, 2)])
        );
        let t = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(SigmaMonoid::arf_t_sigma(&t), Err(Error::NotArf));
    }

    #[test]
    fn point_serde_is_a_pair() {
        let json = serde_json::to_string(&PlanePoint::new(4, 3)).unwrap();
        assert_eq!(json, "[4,3]");
        assert_eq!(
            serde_json::from_str::<PlanePoint>(&json).unwrap(),
            PlanePoint::new(4, 3)
        );
    }
}
