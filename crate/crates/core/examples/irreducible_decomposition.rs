//! Irredundant decomposition of a monomial ideal of ℂ[Σ] into irreducible
//! ideals, checked pointwise.
//!
//! ```bash
//! cargo run -p semigroup-diffops --example irreducible_decomposition -- 3 5 -- 4,3
//! ```

use semigroup_diffops::ideals::{max_apery, verify_decomposition};
use semigroup_diffops::{NumericalSemigroup, PlaneIdeal, PlanePoint, SigmaMonoid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (gens, points) = match args.iter().position(|a| a == "--") {
        Some(i) => (&args[..i], &args[i + 1..]),
        None => (&args[..], &[][..]),
    };
    let gens: Vec<i64> = if gens.is_empty() {
        vec![3, 5]
    } else {
        gens.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
    };
    let mut pts = Vec::new();
    for p in points {
        let (a, b) = p.split_once(',').ok_or("points look like a,b")?;
        pts.push(PlanePoint::new(a.parse()?, b.parse()?));
    }
    if pts.is_empty() {
        pts.push(PlanePoint::new(4, 3));
    }

    let s = NumericalSemigroup::from_generators(&gens)?;
    let sigma = SigmaMonoid::new(&s);
    let ideal = PlaneIdeal::new(&sigma, &pts)?;
    let components = ideal.decompose()?;
    println!(
        "I = {:?} in Σ({s}): {} components",
        ideal.generators(),
        components.len()
    );
    for c in &components {
        println!("  {c}");
    }
    let side = ideal.verification_side();
    let check = verify_decomposition(&ideal, &components, side);
    println!(
        "window {side}: sound {}, irredundant {}",
        check.sound, check.irredundant
    );
    println!(
        "completely irreducible: {}",
        ideal.is_completely_irreducible()?
    );

    if let [p] = pts[..] {
        println!("maximal elements of Ap_{p}(Σ): {:?}", max_apery(&sigma, p)?);
    }
    Ok(())
}
