//! Independent brute-force oracles shared by the integration tests. Nothing
//! here goes through the valency tables of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use semigroup_diffops::overrings::oversemigroups;
use semigroup_diffops::{NumericalSemigroup, PlanePoint};

/// Membership in `⟨gens⟩` for `0..=limit`, by dynamic programming.
pub fn sieve(gens: &[i64], limit: i64) -> Vec<bool> {
    let mut member = vec![false; limit as usize + 1];
    member[0] = true;
    for z in 1..=limit {
        member[z as usize] = gens.iter().any(|&d| d <= z && member[(z - d) as usize]);
    }
    member
}

/// A semigroup given by its membership sieve, large enough that everything
/// past the end is a member.
pub struct Oracle {
    member: Vec<bool>,
}

impl Oracle {
    pub fn new(gens: &[i64]) -> Self {
        let lo = *gens.iter().min().unwrap();
        let hi = *gens.iter().max().unwrap();
        Self {
            member: sieve(gens, lo * hi + hi),
        }
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= 0 && (z as usize >= self.member.len() || self.member[z as usize])
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.member.len() as i64)
            .filter(|&z| !self.contains(z))
            .collect()
    }

    pub fn frobenius(&self) -> i64 {
        self.gaps().last().copied().unwrap_or(-1)
    }

    /// `|{s ∈ S : z + s ∉ S}|` straight from the definition.
    pub fn valency(&self, z: i64) -> u32 {
        let c = self.frobenius() + 1;
        (0..=c + z.abs())
            .filter(|&s| self.contains(s) && !self.contains(z + s))
            .count() as u32
    }

    /// Σ membership `val(a - b) ≤ b`.
    pub fn sigma_contains(&self, a: u32, b: u32) -> bool {
        self.valency(a as i64 - b as i64) <= b
    }
}

/// Points of `[0, bound]²` that are sums of `generators`.
pub fn closure(generators: &[PlanePoint], bound: u32) -> BTreeSet<PlanePoint> {
    let mut reached = BTreeSet::from([PlanePoint::new(0, 0)]);
    let mut frontier = vec![PlanePoint::new(0, 0)];
    while let Some(p) = frontier.pop() {
        for &g in generators {
            let q = p + g;
            if q.a <= bound && q.b <= bound && reached.insert(q) {
                frontier.push(q);
            }
        }
    }
    reached
}

/// `τ ∉ Σ` with `τ + γ ∈ Σ` for every nonzero `γ`; members are tested with
/// `contains`, the search runs over `[0, bound)²`.
pub fn t_sigma_brute(
    contains: impl Fn(PlanePoint) -> bool,
    gens: &[PlanePoint],
    bound: u32,
) -> Vec<PlanePoint> {
    let mut out = Vec::new();
    for a in 0..bound {
        for b in 0..bound {
            let p = PlanePoint::new(a, b);
            if !contains(p) && gens.iter().all(|&g| contains(p + g)) {
                out.push(p);
            }
        }
    }
    out
}

/// Maximal elements of `points` for the order `x ⪯ y ⇔ y - x ∈ Σ`.
pub fn poset_maxima(
    points: &[PlanePoint],
    contains: impl Fn(PlanePoint) -> bool,
) -> Vec<PlanePoint> {
    let mut out: Vec<PlanePoint> = points
        .iter()
        .copied()
        .filter(|&x| {
            !points
                .iter()
                .any(|&y| y != x && y.checked_sub(x).is_some_and(&contains))
        })
        .collect();
    out.sort();
    out
}

/// A valid Arf multiplicity sequence (without the trailing ones) of length
/// `1..=max_len`, each entry a sum of consecutive successors, capped at `cap`.
pub fn random_arf_sequence(rng: &mut impl Rng, max_len: usize, cap: i64) -> Vec<i64> {
    let len = rng.gen_range(1..=max_len);
    // reversed, with enough trailing ones
    let mut rev: Vec<i64> = vec![1; 8];
    for _ in 0..len {
        let mut options = Vec::new();
        let mut sum = 0;
        for k in 1..=rev.len() {
            sum += rev[rev.len() - k];
            if sum > cap {
                break;
            }
            if sum >= 2 {
                options.push(sum);
            }
        }
        let pick = options[rng.gen_range(0..options.len())];
        rev.push(pick);
    }
    rev.into_iter().rev().take(len).collect()
}

/// Every numerical semigroup with Frobenius number at most `g`, ℕ included.
pub fn all_with_frobenius_at_most(g: i64) -> Vec<NumericalSemigroup> {
    let base: Vec<i64> = (g + 1..=2 * g + 1).collect();
    let s = NumericalSemigroup::from_generators(&base).unwrap();
    oversemigroups(&s)
        .into_iter()
        .map(|t| t.semigroup().clone())
        .collect()
}

pub fn pts(list: &[(u32, u32)]) -> BTreeSet<PlanePoint> {
    list.iter().map(|&(a, b)| PlanePoint::new(a, b)).collect()
}
