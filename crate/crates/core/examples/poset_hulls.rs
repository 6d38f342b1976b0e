//! Builds the capacitor on every poset with at most three elements and
//! prints the main-theorem ledger.

use std::time::Instant;

use polarhull::capacitor::{derive_negative_class, verify_capacitor, verify_corollary_main, verify_theorem_main};
use polarhull::posets::{build_poset_capacitor, is_continuous_map, posets_up_to, PosetOptions};

fn main() -> polarhull::Result<()> {
    let start = Instant::now();
    let built = build_poset_capacitor(&posets_up_to(3)?, PosetOptions::default())?;
    let spec = &built.capacitor.spec;
    let c = spec.category();
    println!(
        "{} posets ({} inserted), {} monotone maps, {} continuous maps between lattices, built in {:?}",
        c.object_count(),
        built.inserted.len(),
        c.arrow_count(),
        spec.e.arrow_count(),
        start.elapsed()
    );
    let report = verify_capacitor(spec);
    println!("capacitor valid: {}", report.is_valid());
    let ledger = verify_theorem_main(spec)?;
    for entry in &ledger.entries {
        println!("  ({:>2}) {} {}", entry.item, if entry.holds { "holds" } else { "FAILS" }, entry.witness.as_deref().unwrap_or(""));
    }
    println!("{}", ledger.summary());
    let negative = derive_negative_class(spec)?;
    let posets = &built.posets;
    let mut disagree = 0;
    for f in c.arrow_ids() {
        let m = &built.capacitor.universe.maps[f];
        let continuous = is_continuous_map(&posets[m.src], &posets[m.tgt], &m.values)?;
        if continuous != negative.arrows.contains(f) {
            if disagree < 5 {
                println!("  {} continuous={} negative={}", c.arrow_name(f), continuous, !continuous);
            }
            disagree += 1;
        }
    }
    println!("negative class vs continuity: {disagree} disagreements");
    println!("{:?}", verify_corollary_main(spec)?);
    println!("total {:?}", start.elapsed());
    Ok(())
}
