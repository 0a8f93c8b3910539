mod common;

use common::{closure, poset_maxima, t_sigma_brute, Oracle};
use proptest::prelude::*;
use semigroup_diffops::ideals::{max_apery, verify_decomposition, IrreducibleComponent};
use semigroup_diffops::{NumericalSemigroup, PlaneIdeal, PlanePoint, RelativeIdeal, SigmaMonoid};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Generator lists with gcd 1, not containing 1.
fn generators() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..14, 2..5)
        .prop_filter("coprime", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
}

fn semigroup() -> impl Strategy<Value = (Vec<i64>, NumericalSemigroup)> {
    generators().prop_map(|g| {
        let s = NumericalSemigroup::from_generators(&g).unwrap();
        (g, s)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gaps_and_valency_match_oracle((gens, s) in semigroup()) {
        let oracle = Oracle::new(&gens);
        let gaps = oracle.gaps();
        prop_assert_eq!(s.gaps(), gaps.as_slice());
        prop_assert_eq!(s.frobenius(), oracle.frobenius());
        let g = s.frobenius();
        for z in -2 * g - 2..=2 * g + 2 {
            prop_assert_eq!(s.valency(z), oracle.valency(z), "z = {}", z);
            prop_assert_eq!(s.valency(-z) as i64, s.valency(z) as i64 + z);
        }
        for a in 0..=g.max(0) + 1 {
            prop_assert!(s.valency(a) as usize <= s.n());
        }
    }

    #[test]
    fn generators_are_minimal((gens, s) in semigroup()) {
        let mine = s.generators();
        for &d in mine {
            let rest: Vec<i64> = mine.iter().copied().filter(|&x| x != d).collect();
            if !rest.is_empty() {
                prop_assert!(!common::sieve(&rest, d)[d as usize]);
            }
        }
        let original = Oracle::new(&gens);
        let again = Oracle::new(mine);
        prop_assert_eq!(original.gaps(), again.gaps());
    }

    #[test]
    fn pseudo_frobenius_and_type((gens, s) in semigroup()) {
        let oracle = Oracle::new(&gens);
        let m: Vec<i64> = (1..=s.conductor() + s.multiplicity()).filter(|&z| oracle.contains(z)).collect();
        let brute: Vec<i64> = oracle
            .gaps()
            .into_iter()
            .filter(|&x| m.iter().all(|&y| oracle.contains(x + y)))
            .collect();
        let t = s.pseudo_frobenius().unwrap();
        prop_assert_eq!(&t, &brute);
        prop_assert!((t.len() as i64) < s.multiplicity());
        prop_assert_eq!(t.len() as i64 == s.multiplicity() - 1, s.is_max_embedding_dimension());
        prop_assert_eq!(s.is_max_embedding_dimension(), s.shifted_maximal_ideal_is_semigroup());
        let g = s.frobenius();
        let symmetric = (0..=g).all(|z| oracle.contains(z) != oracle.contains(g - z));
        prop_assert_eq!(s.is_symmetric(), symmetric);
        prop_assert_eq!(symmetric, t.len() == 1);
        prop_assert_eq!(symmetric, 2 * s.genus() as i64 == g + 1);
    }

    #[test]
    fn sigma_membership_and_generators((gens, s) in semigroup()) {
        let oracle = Oracle::new(&gens);
        let sigma = SigmaMonoid::new(&s);
        let bound = sigma.box_bound() + 3;
        let generated = closure(sigma.minimal_generators(), bound);
        for a in 0..=bound {
            for b in 0..=bound {
                let p = PlanePoint::new(a, b);
                prop_assert_eq!(sigma.contains(p), oracle.sigma_contains(a, b));
                prop_assert_eq!(sigma.contains(p), sigma.contains(p.swap()));
                prop_assert_eq!(generated.contains(&p), sigma.contains(p));
            }
        }
        let stats = sigma.statistics();
        prop_assert_eq!(stats.mu, 2 * stats.nu + 1 + 2 * stats.delta);
        // every gap lies below the box bound
        for p in sigma.gaps() {
            prop_assert!(p.a < sigma.box_bound() && p.b < sigma.box_bound());
        }
    }

    #[test]
    fn t_sigma_matches_definition((gens, s) in semigroup()) {
        let oracle = Oracle::new(&gens);
        let sigma = SigmaMonoid::new(&s);
        let t = sigma.t_sigma().unwrap();
        let brute = t_sigma_brute(|p| oracle.sigma_contains(p.a, p.b), sigma.minimal_generators(), sigma.box_bound() + 2);
        prop_assert_eq!(t, brute.as_slice());
        prop_assert_eq!(t.len(), 2 * s.genus());
        let apery = sigma.apery_11().unwrap();
        for (tau, alpha) in t.iter().zip(&apery) {
            prop_assert_eq!(*tau + PlanePoint::new(1, 1), *alpha);
            prop_assert!(sigma.minimal_generators().contains(alpha));
        }
        let bound = sigma.box_bound() + 2;
        for a in 0..bound {
            for b in 0..bound {
                let p = PlanePoint::new(a, b);
                prop_assert_eq!(sigma.in_union_with_t(p), sigma.contains(p) || t.contains(&p));
                let on_axis = (p.a == 0 || p.b == 0) && sigma.contains(p);
                if !on_axis && sigma.in_apery_11(p) {
                    prop_assert!(apery.contains(&p));
                }
            }
        }
    }

    #[test]
    fn med_blowup_adds_t((_gens, s) in semigroup()) {
        prop_assume!(s.is_max_embedding_dimension());
        let sigma = SigmaMonoid::new(&s);
        let next = sigma.blowup().unwrap();
        let t = sigma.t_sigma().unwrap();
        let bound = sigma.box_bound() + 2;
        for a in 0..bound {
            for b in 0..bound {
                let p = PlanePoint::new(a, b);
                prop_assert_eq!(next.contains(p), sigma.contains(p) || t.contains(&p));
                prop_assert_eq!(next.contains(p), sigma.contains(p + PlanePoint::new(1, 1)));
            }
        }
        let s1 = next.base();
        for &h in s.gaps() {
            prop_assert_eq!(s1.valency(h) + 1, s.valency(h));
            prop_assert_eq!(s1.valency(-h) + 1, s.valency(-h));
        }
    }

    #[test]
    fn blowup_chain_reaches_naturals((_gens, s) in semigroup()) {
        let chain = s.blowup_chain();
        prop_assert!(chain.last().unwrap().0.is_full());
        for w in chain.windows(2) {
            prop_assert!(w[0].0.is_subset_of(&w[1].0));
            prop_assert_eq!(w[0].1, w[0].0.multiplicity());
        }
        let seq = s.multiplicity_sequence();
        let arf = NumericalSemigroup::arf_from_multiplicity_sequence(&seq).unwrap();
        // the Arf closure contains S, with equality exactly for Arf S
        prop_assert!(s.is_subset_of(&arf));
        prop_assert_eq!(arf == s, s.is_arf());
    }

    #[test]
    fn ideal_difference_matches_brute_force((_gens, s) in semigroup(), x in 0i64..12, y in 0i64..12) {
        let i = RelativeIdeal::generated_by(&s, &[x, y]).unwrap();
        let j = s.maximal_ideal();
        let d = i.difference(&j).unwrap();
        let hi = s.conductor() + 30;
        for z in -hi..hi {
            let brute = (0..hi).all(|w| !j.contains(w) || i.contains(z + w));
            prop_assert_eq!(d.contains(z), brute, "z = {}", z);
        }
        let sum = i.sum(&j).unwrap();
        for z in 0..hi {
            let brute = (0..=z).any(|w| i.contains(w) && j.contains(z - w));
            prop_assert_eq!(sum.contains(z), brute);
        }
    }

    #[test]
    fn principal_decomposition_counts((gens, s) in semigroup(), a in 0u32..9, b in 0u32..9) {
        let oracle = Oracle::new(&gens);
        let sigma = SigmaMonoid::new(&s);
        let p = PlanePoint::new(a, b);
        prop_assume!(!p.is_origin() && sigma.contains(p));
        let ideal = PlaneIdeal::principal(&sigma, p).unwrap();
        let comps = ideal.decompose().unwrap();
        let axis = a == 0 || b == 0;
        let expected = 2 * s.genus() + if axis { 1 } else { 2 };
        prop_assert_eq!(comps.len(), expected);
        let check = verify_decomposition(&ideal, &comps, ideal.verification_side());
        prop_assert!(check.passed(), "{:?}", check);

        let shifted: Vec<PlanePoint> = sigma.t_sigma().unwrap().iter().map(|&t| t + p).collect();
        prop_assert_eq!(max_apery(&sigma, p).unwrap(), shifted.clone());
        // exhaustive maxima of the Apéry set inside a window
        let w = sigma.box_bound() + a.max(b) + 2;
        let member = |q: PlanePoint| oracle.sigma_contains(q.a, q.b);
        let apery: Vec<PlanePoint> = (0..=2 * w)
            .flat_map(|x| (0..=2 * w).map(move |y| PlanePoint::new(x, y)))
            .filter(|&q| member(q) && !q.checked_sub(p).is_some_and(member))
            .collect();
        let maxima: Vec<PlanePoint> = poset_maxima(&apery, member).into_iter().filter(|q| q.a < w && q.b < w).collect();
        prop_assert_eq!(maxima, shifted);
    }

    #[test]
    fn general_decompositions((_gens, s) in semigroup(), pts in prop::collection::vec((0u32..10, 0u32..10), 1..4)) {
        let sigma = SigmaMonoid::new(&s);
        let points: Vec<PlanePoint> = pts
            .into_iter()
            .map(|(a, b)| PlanePoint::new(a, b))
            .filter(|&p| sigma.contains(p) && !p.is_origin())
            .collect();
        prop_assume!(!points.is_empty());
        let ideal = PlaneIdeal::new(&sigma, &points).unwrap();
        let comps = ideal.decompose().unwrap();
        let check = verify_decomposition(&ideal, &comps, ideal.verification_side());
        prop_assert!(check.passed(), "{:?}", check);
        let half_planes = comps.iter().filter(|c| !matches!(c, IrreducibleComponent::ComplementOfDivisors { .. })).count();
        prop_assert_eq!(half_planes, (ideal.a_min() > 0) as usize + (ideal.b_min() > 0) as usize);
        // each component is itself an ideal containing I
        for c in &comps {
            let as_ideal = c.to_ideal(&sigma).unwrap();
            for &g in ideal.generators() {
                prop_assert!(as_ideal.contains(g));
            }
        }
    }
}
