//! Brute-force cross-checks behind the `--verify` flag.
//!
//! These recompute things the fast paths derive from valencies: Σ as the
//! additive closure of its generators, T(Σ) from its defining property, and
//! decompositions pointwise on a window. A mismatch is reported as
//! [`Error::Invariant`].

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideals::{verify_decomposition, IrreducibleComponent, PlaneIdeal};
use crate::sigma::{PlanePoint, SigmaMonoid};
use crate::weyl::d_algebra_generators;

/// Points of `[0, bound]²` reachable as sums of `generators`.
pub fn additive_closure(generators: &[PlanePoint], bound: u32) -> BTreeSet<PlanePoint> {
    let side = bound as usize + 1;
    let mut reach = vec![false; side * side];
    reach[0] = true;
    for a in 0..side {
        for b in 0..side {
            if reach[a * side + b] {
                continue;
            }
            reach[a * side + b] = generators.iter().any(|g| {
                let (ga, gb) = (g.a as usize, g.b as usize);
                ga <= a && gb <= b && reach[(a - ga) * side + (b - gb)]
            });
        }
    }
    (0..side)
        .flat_map(|a| (0..side).map(move |b| (a, b)))
        .filter(|&(a, b)| reach[a * side + b])
        .map(|(a, b)| PlanePoint::new(a as u32, b as u32))
        .collect()
}

/// Default window side for the Σ checks: `c + 2g`.
pub fn default_window(sigma: &SigmaMonoid) -> u32 {
    sigma.box_bound() + 2 * sigma.base().frobenius().max(0) as u32
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invariant(what()))
    }
}

/// Closure oracle, symmetry, T(Σ) from its definition, and the generator
/// count `2ν + 1 + 2δ`.
pub fn check_sigma(sigma: &SigmaMonoid, window: u32) -> Result<()> {
    let closure = additive_closure(sigma.minimal_generators(), window);
    for a in 0..=window {
        for b in 0..=window {
            let p = PlanePoint::new(a, b);
            ensure(closure.contains(&p) == sigma.contains(p), || {
                format!("closure oracle disagrees at {p}")
            })?;
            ensure(sigma.contains(p) == sigma.contains(p.swap()), || {
                format!("symmetry fails at {p}")
            })?;
        }
    }
    let s = sigma.base();
    if s.is_full() {
        return ensure(sigma.gaps().is_empty(), || "N has gaps in Σ".into());
    }
    let gens = sigma.minimal_generators();
    let c = sigma.box_bound();
    let mut brute = Vec::new();
    for a in 0..c {
        for b in 0..c {
            let p = PlanePoint::new(a, b);
            if !sigma.contains(p) && gens.iter().all(|&g| sigma.contains(p + g)) {
                brute.push(p);
            }
        }
    }
    ensure(brute == sigma.t_sigma()?, || {
        "T(Σ) differs from its definition".into()
    })?;
    let mu = 2 * s.embedding_dimension() + 1 + 2 * s.genus();
    ensure(gens.len() == mu, || {
        format!("expected {mu} generators, found {}", gens.len())
    })
}

/// Each operator preserves `ℂ[S]` and has the matching monic symbol.
pub fn check_operators(sigma: &SigmaMonoid) -> Result<()> {
    let s = sigma.base();
    for (p, op) in d_algebra_generators(s) {
        ensure(op.preserves_semigroup_ring(s), || {
            format!("operator for {p} leaves C[S]")
        })?;
        let symbol = op.principal_symbol()?;
        let key = (p.a as i64, p.b);
        ensure(
            symbol.len() == 1 && symbol.get(&key).is_some_and(|c| *c == num::one()),
            || format!("operator for {p} has symbol {symbol:?}"),
        )?;
    }
    Ok(())
}

pub fn check_decomposition(
    ideal: &PlaneIdeal,
    components: &[IrreducibleComponent],
    side: u32,
) -> Result<()> {
    let check = verify_decomposition(ideal, components, side);
    ensure(check.sound, || {
        "intersection of components differs from the ideal".into()
    })?;
    ensure(check.irredundant, || "a component is redundant".into())
}
