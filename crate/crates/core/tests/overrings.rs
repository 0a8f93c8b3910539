mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::{all_with_frobenius_at_most, Oracle};
use semigroup_diffops::overrings::{
    bijection_check, class_count, conductor_ideal, der_generators, fibers, is_stable,
    maps_ideal_into_itself, normalized_ideals, oversemigroup_gap_sets, oversemigroups,
    realize_as_quotient, stabilizer,
};
use semigroup_diffops::weyl::derivation_for;
use semigroup_diffops::{NumericalSemigroup, SemigroupIdeal};

fn ns(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

/// Subsets `X` of the gaps, as sorted vectors, for which `keep(S ∪ X)`.
fn gap_subsets(
    s: &NumericalSemigroup,
    keep: impl Fn(&dyn Fn(i64) -> bool) -> bool,
) -> BTreeSet<Vec<i64>> {
    let gaps = s.gaps();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << gaps.len()) {
        let x: Vec<i64> = (0..gaps.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| gaps[i])
            .collect();
        let member = |z: i64| s.contains(z) || x.contains(&z);
        if keep(&member) {
            out.insert(x);
        }
    }
    out
}

fn sample() -> Vec<NumericalSemigroup> {
    [
        &[2, 5][..],
        &[3, 4, 5],
        &[3, 5],
        &[3, 5, 7],
        &[4, 5, 6, 7],
        &[4, 6, 9, 11],
        &[5, 6, 7],
        &[4, 7],
    ]
    .iter()
    .map(|g| ns(g))
    .collect()
}

#[test]
fn oversemigroups_match_subset_enumeration() {
    for s in sample() {
        let c = s.conductor();
        let brute = gap_subsets(&s, |m| {
            (0..=c).all(|a| (0..=c).all(|b| !(m(a) && m(b)) || m(a + b)))
        });
        let brute_gaps: BTreeSet<Vec<i64>> = brute
            .iter()
            .map(|x| {
                s.gaps()
                    .iter()
                    .copied()
                    .filter(|h| !x.contains(h))
                    .collect()
            })
            .collect();
        assert_eq!(oversemigroup_gap_sets(&s), brute_gaps, "{s}");
    }
}

#[test]
fn normalized_ideals_match_subset_enumeration() {
    for s in sample() {
        let c = s.conductor();
        let gens = s.generators().to_vec();
        let brute = gap_subsets(&s, |m| {
            (0..=c).all(|z| !m(z) || gens.iter().all(|&d| m(z + d)))
        });
        assert_eq!(class_count(&s), brute.len(), "{s}");
        let holes: BTreeSet<Vec<i64>> = normalized_ideals(&s).iter().map(|e| e.holes()).collect();
        let expected: BTreeSet<Vec<i64>> = brute
            .iter()
            .map(|x| {
                s.gaps()
                    .iter()
                    .copied()
                    .filter(|h| !x.contains(h))
                    .collect()
            })
            .collect();
        assert_eq!(holes, expected, "{s}");
    }
}

#[test]
fn stabilizer_properties() {
    for s in sample() {
        let oracle = Oracle::new(s.generators());
        for class in fibers(&s).iter().flat_map(|f| f.classes.clone()) {
            let e = class.representative();
            let t = stabilizer(&e);
            assert_eq!(t.semigroup(), class.stabilizer());
            // brute force: k with k + E ⊆ E
            let hi = s.conductor() + e.min() + 4;
            for k in 0..hi {
                let brute = (0..hi + k).all(|z| !e.contains(z) || e.contains(z + k));
                assert_eq!(t.semigroup().contains(k), brute, "{s}: k = {k}");
            }
            // translation invariance
            for x in (1..=s.conductor() + 2).filter(|&x| oracle.contains(x)) {
                assert_eq!(
                    stabilizer(&e.translate(x).unwrap()).semigroup(),
                    t.semigroup()
                );
            }
            // conductor bounds and j + T ⊆ E
            let conductor = conductor_ideal(&s, &t).unwrap();
            assert!(e.min() >= conductor.min());
            let j = e.min();
            for z in 0..hi + j {
                if e.contains(z) {
                    assert!(conductor.contains(z), "{s}: E ⊄ C at {z}");
                }
                if t.semigroup().contains(z) {
                    assert!(e.contains(j + z), "{s}: j + T ⊄ E at {z}");
                }
            }
            // Gorenstein overrings only carry principal classes
            if t.semigroup().is_symmetric() {
                assert!(
                    is_stable(&e) && class.is_stable(),
                    "{s}: unstable class over symmetric T"
                );
            }
            // Der(E, E) is spanned by t^{k+1} d, k ∈ E - E, once 0 ∉ E
            let e = e.translate(s.multiplicity()).unwrap();
            for op in der_generators(&e) {
                assert!(maps_ideal_into_itself(&e, &op));
            }
            for k in -3..hi {
                assert_eq!(
                    maps_ideal_into_itself(&e, &derivation_for(k)),
                    t.semigroup().contains(k),
                    "{s}: derivation for {k}"
                );
            }
        }
    }
}

#[test]
fn every_oversemigroup_is_its_own_stabilizer() {
    for s in sample() {
        for t in oversemigroups(&s) {
            let as_ideal = t.as_relative();
            assert_eq!(as_ideal.difference(&as_ideal).unwrap(), as_ideal);
            let e = realize_as_quotient(&t);
            assert_eq!(stabilizer(&e).semigroup(), t.semigroup());
            assert!(is_stable(&e));
        }
    }
}

#[test]
fn fibers_partition_the_classes() {
    for s in sample() {
        let fibers = fibers(&s);
        let mut seen = BTreeSet::new();
        for f in &fibers {
            assert!(
                !f.classes.is_empty(),
                "{s}: empty fiber over {}",
                f.overring.semigroup()
            );
            for c in &f.classes {
                assert!(seen.insert(c.gap_pattern()), "{s}: class in two fibers");
                assert_eq!(c.stabilizer(), f.overring.semigroup());
            }
        }
        assert_eq!(seen.len(), class_count(&s));
        // exactly one stable class per overring
        for f in &fibers {
            assert_eq!(f.classes.iter().filter(|c| c.is_stable()).count(), 1);
        }
    }
}

#[test]
fn stable_ideals_are_principal_over_their_stabilizer() {
    let s = ns(&[3, 4, 5]);
    let m = SemigroupIdeal::generated_by(&s, &[3, 4, 5]).unwrap();
    assert!(is_stable(&m));
    assert!(stabilizer(&m).semigroup().is_full());
    let e = SemigroupIdeal::generated_by(&s, &[3, 4]).unwrap();
    assert!(!is_stable(&e));
    assert_eq!(stabilizer(&e).semigroup(), &s);
    assert!(SemigroupIdeal::generated_by(&s, &[2]).is_err());
}

#[test]
fn bijection_equivalence_up_to_frobenius_twelve() {
    let start = Instant::now();
    let all = all_with_frobenius_at_most(12);
    let mut bijective = 0;
    for s in &all {
        let check = bijection_check(s);
        assert!(check.consistent(), "{s}: {check:?}");
        bijective += check.bijective as usize;
    }
    // ℕ and <2,2k+1> for k = 1..=6
    assert_eq!(bijective, 7);
    eprintln!("{} semigroups checked in {:?}", all.len(), start.elapsed());
}
