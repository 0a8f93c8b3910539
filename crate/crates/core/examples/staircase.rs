//! Text and SVG pictures of Σ near the origin.

use semigroup_diffops::report::{staircase_svg, staircase_text};
use semigroup_diffops::{NumericalSemigroup, SigmaMonoid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let gens = if args.is_empty() { vec![2, 5] } else { args };
    let sigma = SigmaMonoid::new(&NumericalSemigroup::from_generators(&gens)?);
    let side = sigma.box_bound() + 3;
    print!("{}", staircase_text(&sigma, side, side));

    let path = std::env::temp_dir().join("sigma.svg");
    std::fs::write(&path, staircase_svg(&sigma, side, side))?;
    println!("wrote {}", path.display());
    Ok(())
}
