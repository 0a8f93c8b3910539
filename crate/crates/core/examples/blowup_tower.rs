//! For a semigroup of maximal embedding dimension the blowup `S_1 = M - e`
//! satisfies `Σ(S_1) = Σ ∪ T(Σ)`. Walks the chain of blowups down to ℕ.

use semigroup_diffops::report::adds_exactly_t;
use semigroup_diffops::{NumericalSemigroup, SigmaMonoid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let gens = if args.is_empty() {
        vec![4, 6, 9, 11]
    } else {
        args
    };
    let mut sigma = SigmaMonoid::new(&NumericalSemigroup::from_generators(&gens)?);

    while !sigma.base().is_full() {
        let s = sigma.base().clone();
        println!(
            "S = {s}  MED: {}  T(Σ) = {:?}",
            s.is_max_embedding_dimension(),
            sigma.t_sigma()?
        );
        if !s.is_max_embedding_dimension() {
            let b = s.maximal_ideal().blowup();
            println!("  not MED; the blowup of M is {b}, stopping");
            return Ok(());
        }
        let next = sigma.blowup()?;
        println!(
            "  S_1 = {}, Σ(S_1) = Σ ∪ T(Σ): {}",
            next.base(),
            adds_exactly_t(&sigma, &next)
        );
        sigma = next;
    }
    println!("reached N");
    Ok(())
}
