//! Generators of the ring of differential operators on `ℂ[S]`, one per
//! minimal generator of Σ, with their principal symbols.
//!
//! ```bash
//! cargo run -p semigroup-diffops --example differential_operators -- 2 5
//! ```

use semigroup_diffops::weyl::{d_algebra_generators, render_symbol};
use semigroup_diffops::{NumericalSemigroup, WeylOperator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let gens = if args.is_empty() { vec![2, 5] } else { args };
    let s = NumericalSemigroup::from_generators(&gens)?;
    println!("D(C[S]) for S = {s}");
    for (point, op) in d_algebra_generators(&s) {
        let symbol = render_symbol(&op.principal_symbol()?);
        println!(
            "  {point:<8} {:<10} {}   preserves C[S]: {}",
            symbol,
            op.to_unicode(),
            op.preserves_semigroup_ring(&s)
        );
    }

    // the generating set is not minimal
    let t4d: WeylOperator = "t^4 d".parse()?;
    let t2: WeylOperator = "t^2".parse()?;
    println!("[t^4 d, t^2] = {}", t4d.commutator(&t2));
    Ok(())
}
