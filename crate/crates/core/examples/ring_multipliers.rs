//! Builds the ring capacitor on F₂, F₂×F₂ and the column ring, whose
//! multiplier ring is inserted, and prints the main-theorem ledger.

use std::time::Instant;

use polarhull::capacitor::{derive_negative_class, verify_capacitor, verify_corollary_main, verify_theorem_main};
use polarhull::fincat::DEFAULT_ARROW_BUDGET;
use polarhull::rings::{build_ring_capacitor, is_non_degenerate_hom, multiplier_ring, FinRing};

fn main() -> polarhull::Result<()> {
    let start = Instant::now();
    let column = FinRing::column_ring();
    let m = multiplier_ring(&column)?;
    println!("|M(column ring)| = {}, unital: {}", m.ring.len(), m.ring.unit().is_some());
    let rings = vec![
        ("F2".to_string(), FinRing::zn(2)),
        ("F2xF2".to_string(), FinRing::f2_power(2)),
        ("col".to_string(), column),
    ];
    let built = build_ring_capacitor(&rings, true, DEFAULT_ARROW_BUDGET)?;
    let spec = &built.capacitor.spec;
    let c = spec.category();
    println!("{} rings ({} inserted), {} homomorphisms", c.object_count(), built.inserted.len(), c.arrow_count());
    println!("capacitor valid: {}", verify_capacitor(spec).is_valid());
    let ledger = verify_theorem_main(spec)?;
    for entry in &ledger.entries {
        println!("  ({:>2}) {} {}", entry.item, if entry.holds { "holds" } else { "FAILS" }, entry.witness.as_deref().unwrap_or(""));
    }
    println!("{}", ledger.summary());
    let negative = derive_negative_class(spec)?;
    for f in c.arrow_ids() {
        let map = &built.capacitor.universe.maps[f];
        let nd = is_non_degenerate_hom(&built.rings[map.tgt], &map.values);
        if nd != negative.arrows.contains(f) {
            println!("  {} non-degenerate={nd} negative={}", c.arrow_name(f), !nd);
        }
    }
    println!("{:?}", verify_corollary_main(spec)?);
    println!("total {:?}", start.elapsed());
    Ok(())
}
