//! Ideals of Σ and their irredundant decompositions into irreducible ideals.
//!
//! A [`PlaneIdeal`] generated by points `(a_i, b_i)` doubles as the monomial
//! ideal of `ℂ[Σ]` generated by the `t^{a_i} y^{b_i}`. Σ is partially
//! ordered by `σ ⪯ τ ⇔ τ - σ ∈ Σ`, and `B(x)` is the set of divisors of `x`.
//!
//! Every proper ideal `I` with `a = min a_i` and `b = min b_i` is the
//! intersection of the completely irreducible ideals `Σ ∖ B(x)` for the
//! maximal elements `x` of `Σ ∖ I`, together with the half planes
//! `{x ≥ a}` and `{y ≥ b}` when `a, b > 0`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sigma::{PlanePoint, SigmaMonoid};

/// A finitely generated ideal `⋃ (g + Σ)` of Σ.
#[derive(Clone, Debug)]
pub struct PlaneIdeal {
    sigma: SigmaMonoid,
    generators: Vec<PlanePoint>,
    a_min: u32,
    b_min: u32,
}

/// One of the three kinds of irreducible ideals of Σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IrreducibleComponent {
    /// `Σ ∩ {x ≥ a}`, `a > 0`.
    HalfPlaneX { a: u32 },
    /// `Σ ∩ {y ≥ b}`, `b > 0`.
    HalfPlaneY { b: u32 },
    /// `Σ ∖ B(x)`.
    ComplementOfDivisors { x: PlanePoint },
}

impl IrreducibleComponent {
    pub fn contains(&self, sigma: &SigmaMonoid, p: PlanePoint) -> bool {
        sigma.contains(p)
            && match *self {
                Self::HalfPlaneX { a } => p.a >= a,
                Self::HalfPlaneY { b } => p.b >= b,
                Self::ComplementOfDivisors { x } => !divides(sigma, p, x),
            }
    }

    /// The component as a finitely generated ideal.
    pub fn to_ideal(&self, sigma: &SigmaMonoid) -> Result<PlaneIdeal> {
        let k = sigma.box_bound() + sigma.base().multiplicity() as u32 + 1;
        let (wa, wb) = match *self {
            Self::HalfPlaneX { a } => (a + k, k + k),
            Self::HalfPlaneY { b } => (k + k, b + k),
            Self::ComplementOfDivisors { x } => (x.a + k, x.b + k),
        };
        let gens = sigma.minimal_generators();
        let mut out = Vec::new();
        for a in 0..wa {
            for b in 0..wb {
                let p = PlanePoint::new(a, b);
                if !self.contains(sigma, p) {
                    continue;
                }
                let reducible = gens
                    .iter()
                    .filter_map(|&g| p.checked_sub(g))
                    .any(|q| self.contains(sigma, q));
                if !reducible {
                    out.push(p);
                }
            }
        }
        PlaneIdeal::new(sigma, &out)
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::HalfPlaneX { a } => write!(f, "N_({a},0)"),
            Self::HalfPlaneY { b } => write!(f, "N_(0,{b})"),
            Self::ComplementOfDivisors { x } => write!(f, "Σ∖B{x}"),
        }
    }
}

/// `σ ⪯ x`.
pub fn divides(sigma: &SigmaMonoid, s: PlanePoint, x: PlanePoint) -> bool {
    sigma.contains(s) && x.checked_sub(s).is_some_and(|d| sigma.contains(d))
}

/// `B(x)`, sorted.
pub fn divisors(sigma: &SigmaMonoid, x: PlanePoint) -> Result<Vec<PlanePoint>> {
    if !sigma.contains(x) {
        return Err(Error::NotMember(x));
    }
    let mut out = Vec::new();
    for a in 0..=x.a {
        for b in 0..=x.b {
            let p = PlanePoint::new(a, b);
            if divides(sigma, p, x) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

impl PlaneIdeal {
    /// The ideal generated by `generators`, which must be members of Σ.
    /// Redundant generators are dropped.
    pub fn new(sigma: &SigmaMonoid, generators: &[PlanePoint]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&p) = generators.iter().find(|&&p| !sigma.contains(p)) {
            return Err(Error::NotMember(p));
        }
        let set: BTreeSet<PlanePoint> = generators.iter().copied().collect();
        let minimal: Vec<PlanePoint> = set
            .iter()
            .copied()
            .filter(|&p| !set.iter().any(|&q| q != p && divides(sigma, q, p)))
            .collect();
        Ok(Self {
            sigma: sigma.clone(),
            a_min: minimal.iter().map(|p| p.a).min().unwrap(),
            b_min: minimal.iter().map(|p| p.b).min().unwrap(),
            generators: minimal,
        })
    }

    /// `σ + Σ`.
    pub fn principal(sigma: &SigmaMonoid, point: PlanePoint) -> Result<Self> {
        Self::new(sigma, &[point])
    }

    pub fn sigma(&self) -> &SigmaMonoid {
        &self.sigma
    }

    /// Minimal generators, sorted.
    pub fn generators(&self) -> &[PlanePoint] {
        &self.generators
    }

    pub fn a_min(&self) -> u32 {
        self.a_min
    }

    pub fn b_min(&self) -> u32 {
        self.b_min
    }

    pub fn is_proper(&self) -> bool {
        !self.generators.contains(&PlanePoint::ORIGIN)
    }

    pub fn contains(&self, p: PlanePoint) -> bool {
        self.generators
            .iter()
            .any(|&g| p.checked_sub(g).is_some_and(|d| self.sigma.contains(d)))
    }

    /// Exclusive upper corner of the window that holds all of `Σ ∖ I` inside
    /// the quadrant `{x ≥ a_min, y ≥ b_min}`: past it the generator with the
    /// smaller opposite coordinate reaches every point through a difference
    /// that has a coordinate `≥ box_bound`.
    pub fn scan_bound(&self) -> PlanePoint {
        let c = self.sigma.box_bound();
        PlanePoint::new(
            self.generators.iter().map(|g| g.a).max().unwrap() + c,
            self.generators.iter().map(|g| g.b).max().unwrap() + c,
        )
    }

    /// Maximal elements of `Σ ∖ I` under `⪯`.
    ///
    /// Points with `x < a_min` (or `y < b_min`) are skipped: adding `(0, s)`
    /// (or `(s, 0)`) for `s ∈ S` keeps them outside `I`, so none is maximal.
    pub fn maximal_gaps(&self) -> Result<Vec<PlanePoint>> {
        let hi = self.scan_bound();
        for a in self.a_min..=hi.a {
            if !self.contains(PlanePoint::new(a, hi.b)) {
                return Err(Error::Invariant(format!(
                    "({a},{}) escaped the scan window",
                    hi.b
                )));
            }
        }
        for b in self.b_min..=hi.b {
            if !self.contains(PlanePoint::new(hi.a, b)) {
                return Err(Error::Invariant(format!(
                    "({},{b}) escaped the scan window",
                    hi.a
                )));
            }
        }
        let gens = self.sigma.minimal_generators();
        let mut out = Vec::new();
        for a in self.a_min..hi.a {
            for b in self.b_min..hi.b {
                let p = PlanePoint::new(a, b);
                if self.sigma.contains(p)
                    && !self.contains(p)
                    && gens.iter().all(|&g| self.contains(p + g))
                {
                    out.push(p);
                }
            }
        }
        Ok(out)
    }

    /// The unique irredundant decomposition into irreducible ideals.
    pub fn decompose(&self) -> Result<Vec<IrreducibleComponent>> {
        if !self.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        let mut out: Vec<IrreducibleComponent> = self
            .maximal_gaps()?
            .into_iter()
            .map(|x| IrreducibleComponent::ComplementOfDivisors { x })
            .collect();
        if self.a_min > 0 {
            out.push(IrreducibleComponent::HalfPlaneX { a: self.a_min });
        }
        if self.b_min > 0 {
            out.push(IrreducibleComponent::HalfPlaneY { b: self.b_min });
        }
        Ok(out)
    }

    /// Whether `I = Σ ∖ B(x)` for some `x`: the complement must be finite,
    /// which forces `a_min = b_min = 0`, and must have a single maximum.
    pub fn is_completely_irreducible(&self) -> Result<bool> {
        if !self.is_proper() {
            return Ok(false);
        }
        Ok(self.a_min == 0 && self.b_min == 0 && self.maximal_gaps()?.len() == 1)
    }

    /// A square window `[0, side)²` large enough to witness both soundness
    /// and irredundance of [`decompose`](Self::decompose).
    pub fn verification_side(&self) -> u32 {
        let hi = self.scan_bound();
        hi.a.max(hi.b) + self.sigma.box_bound() + 1
    }
}

/// Checks `I = ⋂ components` pointwise on `[0, side)²` and that dropping any
/// single component changes the intersection on that window.
pub fn verify_decomposition(
    ideal: &PlaneIdeal,
    components: &[IrreducibleComponent],
    side: u32,
) -> DecompositionCheck {
    let sigma = ideal.sigma();
    let window = || (0..side).flat_map(move |a| (0..side).map(move |b| PlanePoint::new(a, b)));
    let window_points: Vec<PlanePoint> = window().filter(|&p| sigma.contains(p)).collect();
    let sound = window_points
        .iter()
        .all(|&p| ideal.contains(p) == components.iter().all(|c| c.contains(sigma, p)));
    let irredundant = (0..components.len()).all(|skip| {
        window_points.iter().any(|&p| {
            !ideal.contains(p)
                && components
                    .iter()
                    .enumerate()
                    .all(|(i, c)| i == skip || c.contains(sigma, p))
        })
    });
    DecompositionCheck { sound, irredundant }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionCheck {
    pub sound: bool,
    pub irredundant: bool,
}

impl DecompositionCheck {
    pub fn passed(&self) -> bool {
        self.sound && self.irredundant
    }
}

/// Maximal elements of `Ap_σ(Σ) = Σ ∖ (σ + Σ)`.
pub fn max_apery(sigma: &SigmaMonoid, point: PlanePoint) -> Result<Vec<PlanePoint>> {
    if point.is_origin() {
        return Err(Error::ZeroElement);
    }
    PlaneIdeal::principal(sigma, point)?.maximal_gaps()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;
    use crate::sigma::points;

    fn sigma(g: &[i64]) -> SigmaMonoid {
        SigmaMonoid::new(&NumericalSemigroup::from_generators(g).unwrap())
    }

    fn p(a: u32, b: u32) -> PlanePoint {
        PlanePoint::new(a, b)
    }

    #[test]
    fn divisor_sets() {
        let s = sigma(&[2, 5]);
        assert_eq!(divisors(&s, p(0, 0)).unwrap(), vec![p(0, 0)]);
        assert_eq!(divisors(&s, p(1, 1)).unwrap(), vec![p(0, 0), p(1, 1)]);
        assert!(divisors(&s, p(2, 2)).unwrap().contains(&p(1, 1)));
        assert_eq!(divisors(&s, p(2, 1)), Err(Error::NotMember(p(2, 1))));
    }

    #[test]
    fn ideal_membership() {
        let s = sigma(&[3, 5]);
        let i = PlaneIdeal::new(&s, &[p(4, 3), p(6, 2)]).unwrap();
        assert!(i.contains(p(4, 3)));
        assert!((0..30).all(|y| !i.contains(p(3, y))));
        assert_eq!(
            PlaneIdeal::new(&s, &[p(7, 0)]).unwrap_err(),
            Error::NotMember(p(7, 0))
        );
        assert_eq!(
            PlaneIdeal::new(&s, &[]).unwrap_err(),
            Error::EmptyGenerators
        );
    }

    #[test]
    fn redundant_generators_dropped() {
        let s = sigma(&[3, 5]);
        let i = PlaneIdeal::new(&s, &[p(1, 1), p(2, 2), p(3, 0)]).unwrap();
        assert_eq!(i.generators(), &[p(1, 1), p(3, 0)]);
    }

    #[test]
    fn maximal_ideal() {
        let s = sigma(&[3, 5]);
        let plus = PlaneIdeal::new(&s, s.minimal_generators()).unwrap();
        assert_eq!(plus.maximal_gaps().unwrap(), vec![p(0, 0)]);
        assert_eq!(
            plus.decompose().unwrap(),
            vec![IrreducibleComponent::ComplementOfDivisors { x: p(0, 0) }]
        );
        assert!(plus.is_completely_irreducible().unwrap());
    }

    #[test]
    fn improper_rejected() {
        let s = sigma(&[3, 5]);
        let full = PlaneIdeal::principal(&s, p(0, 0)).unwrap();
        assert_eq!(full.decompose(), Err(Error::ImproperIdeal));
        assert_eq!(max_apery(&s, p(0, 0)), Err(Error::ZeroElement));
    }

    #[test]
    fn principal_count() {
        let s = sigma(&[3, 5]);
        let i = PlaneIdeal::principal(&s, p(4, 3)).unwrap();
        let comps = i.decompose().unwrap();
        assert_eq!(comps.len(), 10);
        assert!(verify_decomposition(&i, &comps, 40).passed());
    }

    #[test]
    fn max_apery_two_five() {
        let s = sigma(&[2, 5]);
        let m: BTreeSet<_> = max_apery(&s, p(1, 1)).unwrap().into_iter().collect();
        assert_eq!(m, points(&[(4, 1), (3, 2), (1, 4), (2, 3)]));
    }

    #[test]
    fn half_plane_not_completely_irreducible() {
        let s = sigma(&[3, 5]);
        let n = IrreducibleComponent::HalfPlaneX { a: 2 }
            .to_ideal(&s)
            .unwrap();
        assert!((0..40).all(|a| (0..40).all(|b| {
            let q = p(a, b);
            n.contains(q) == (s.contains(q) && a >= 2)
        })));
        assert!(!n.is_completely_irreducible().unwrap());
        let c = IrreducibleComponent::ComplementOfDivisors { x: p(4, 3) };
        assert!(c.to_ideal(&s).unwrap().is_completely_irreducible().unwrap());
    }

    #[test]
    fn component_serde_tags() {
        let c = IrreducibleComponent::ComplementOfDivisors { x: p(4, 3) };
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"kind":"complement_of_divisors","x":[4,3]}"#);
        assert_eq!(
            serde_json::from_str::<IrreducibleComponent>(&json).unwrap(),
            c
        );
    }
}
