//! Arf semigroups from multiplicity sequences, and T(Σ) read off the
//! pseudo-Frobenius sets along the blowup chain.

use semigroup_diffops::{NumericalSemigroup, SigmaMonoid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let seq = if args.is_empty() { vec![4, 2, 2] } else { args };
    let s = NumericalSemigroup::arf_from_multiplicity_sequence(&seq)?;
    println!("sequence {seq:?} -> S = {s}, Arf: {}", s.is_arf());
    println!(
        "multiplicity sequence back: {:?}",
        s.multiplicity_sequence()
    );

    for (i, (si, e)) in s.blowup_chain().iter().enumerate() {
        println!("  S_{i} = {si} (e = {e})");
    }
    if !s.is_full() {
        let direct = SigmaMonoid::new(&s);
        let via_chain = SigmaMonoid::arf_t_sigma(&s)?;
        println!("T(Σ) = {via_chain:?}");
        println!(
            "agrees with the valency computation: {}",
            direct.t_sigma()? == via_chain.as_slice()
        );
    }

    for seq in [vec![3, 2], vec![3, 2, 2], vec![5, 3, 2]] {
        match NumericalSemigroup::arf_from_multiplicity_sequence(&seq) {
            Ok(s) => println!("{seq:?} -> {s}"),
            Err(e) => println!("{seq:?} -> {e}"),
        }
    }
    Ok(())
}
