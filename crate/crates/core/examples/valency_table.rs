//! Valencies `val(z) = |{s ∈ S : z + s ∉ S}|` and the sets `V_i`.

use semigroup_diffops::NumericalSemigroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let gens = if args.is_empty() { vec![3, 5] } else { args };
    let s = NumericalSemigroup::from_generators(&gens)?;
    let g = s.frobenius();
    println!(
        "S = {s}, g = {g}, gaps = {:?}, small elements = {:?}",
        s.gaps(),
        s.small_elements()
    );

    println!("{:>5} {:>5}", "z", "val");
    for z in -g - 1..=g + 1 {
        println!("{z:>5} {:>5}", s.valency(z));
    }

    for i in 0..=s.n() as u32 {
        let v = s.v_set(i);
        println!("V_{i}: min {}, holes above min {:?}", v.min(), v.holes());
    }
    if !s.is_full() {
        println!("pseudo-Frobenius numbers: {:?}", s.pseudo_frobenius()?);
    }
    Ok(())
}
