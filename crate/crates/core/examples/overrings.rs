//! Overrings of ℂ[S] as stabilizers `E - E` of monomial ideals, the fibers
//! of that map over the ideal classes, and the `⟨2, 2k+1⟩` criterion.

use semigroup_diffops::overrings::{bijection_check, der_generators, fibers, stabilizer};
use semigroup_diffops::{NumericalSemigroup, SemigroupIdeal};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let gens = if args.is_empty() { vec![3, 4, 5] } else { args };
    let s = NumericalSemigroup::from_generators(&gens)?;

    for fiber in fibers(&s) {
        let t = fiber.overring.semigroup();
        println!("T = {t} (symmetric: {})", t.is_symmetric());
        for class in &fiber.classes {
            let rep = class.representative();
            println!(
                "    E = ({:?}), gap pattern {:?}, stable {}",
                rep.generators(),
                class.gap_pattern(),
                class.is_stable()
            );
        }
    }
    println!("{:?}", bijection_check(&s));

    // Der(I, I) for the maximal ideal
    let m = SemigroupIdeal::generated_by(&s, s.generators())?;
    println!("M - M = {}", stabilizer(&m).semigroup());
    for op in der_generators(&m) {
        println!("  {}", op.to_unicode());
    }
    Ok(())
}
