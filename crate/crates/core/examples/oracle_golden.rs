//! Runs the brute-force oracles and prints a short digest of their output.

use polarhull::run::oracle::run_oracles;

fn main() -> polarhull::Result<()> {
    let report = run_oracles()?;
    let lattices = report.macneille.iter().filter(|g| g.completion_size == g.elements).count();
    println!("{} posets with at most four elements, {} already complete", report.macneille.len(), lattices);
    for g in &report.multipliers {
        match g.multipliers {
            Some(n) => println!("|M({})| = {n} (|R| = {})", g.ring, g.order),
            None => println!("{} is degenerate", g.ring),
        }
    }
    for g in &report.boolean {
        println!("homs from {} atoms to {} atoms: {}", g.source_atoms, g.target_atoms, g.homs);
    }
    Ok(())
}
