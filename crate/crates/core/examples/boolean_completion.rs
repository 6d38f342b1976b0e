//! Builds the capacitor on the algebras with 2, 4 and 8 elements and
//! extends a homomorphism along an embedding.

use polarhull::boolean::{build_ba_capacitor, completion, enumerate_homs, is_embedding, sikorski_extend, FinBoolAlg};
use polarhull::capacitor::{verify_corollary_main, verify_theorem_main};
use polarhull::fincat::DEFAULT_ARROW_BUDGET;

fn main() -> polarhull::Result<()> {
    let algebras: Vec<(String, FinBoolAlg)> = (1..=3)
        .map(|n| Ok(((1usize << n).to_string(), FinBoolAlg::from_atoms(n)?)))
        .collect::<polarhull::Result<_>>()?;
    let built = build_ba_capacitor(&algebras, DEFAULT_ARROW_BUDGET)?;
    let spec = &built.capacitor.spec;
    println!("{} algebras, {} homomorphisms, {} essential embeddings", spec.category().object_count(), spec.category().arrow_count(), spec.h.len());
    println!("{}", verify_theorem_main(spec)?.summary());
    println!("{:?}", verify_corollary_main(spec)?);

    let (four, eight, two) = (algebras[1].1, algebras[2].1, algebras[0].1);
    let (_, unit) = completion(&eight)?;
    println!("completion unit of 8: {unit:?}");
    let f = enumerate_homs(&four, &eight).into_iter().find(|f| is_embedding(f)).expect("4 embeds in 8");
    for h in enumerate_homs(&four, &two) {
        let g = sikorski_extend(&four, &eight, &two, &f, &h)?;
        let names: Vec<String> = g.iter().map(|&v| two.element_name(v)).collect();
        println!("h = {h:?} extends along {f:?} to [{}]", names.join(", "));
    }
    Ok(())
}
