//! The plane monoid Σ = {(a, b) : val(a - b) ≤ b}: its minimal generators,
//! gaps, T(Σ) and the finite part of the Apéry set with respect to (1, 1).

use semigroup_diffops::{NumericalSemigroup, SigmaMonoid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let gens = if args.is_empty() { vec![3, 5] } else { args };
    let s = NumericalSemigroup::from_generators(&gens)?;
    let sigma = SigmaMonoid::new(&s);
    let stats = sigma.statistics();

    println!("S = {s}");
    println!("mu = {} = 2*{} + 1 + 2*{}", stats.mu, stats.nu, stats.delta);
    println!("minimal generators: {:?}", sigma.minimal_generators());
    println!("gaps of Σ ({}): {:?}", stats.gap_count, sigma.gaps());
    if !s.is_full() {
        println!("T(Σ): {:?}", sigma.t_sigma()?);
        println!("Ap_(1,1) off the axes: {:?}", sigma.apery_11()?);
    }
    Ok(())
}
