//! Classifies the arrows of a small category of functions and computes a
//! few limits and the essential monics.

use polarhull::fincat::props::{epics, isos, monics, regular_monics};
use polarhull::fincat::{find_universal, regular_comparison, ConcreteCategory, MapArrow, UniversalData, UniversalKind};
use polarhull::polarity::{essential_monics, left_hereditary_core, Monopole};

fn map(src: usize, tgt: usize, values: &[usize]) -> MapArrow {
    MapArrow {
        src,
        tgt,
        values: values.to_vec(),
    }
}

fn main() -> polarhull::Result<()> {
    // 1 = {0}, 2 = {0, 1}, with every function between them
    let maps = vec![
        map(0, 0, &[0]),
        map(0, 1, &[0]),
        map(0, 1, &[1]),
        map(1, 0, &[0, 0]),
        map(1, 1, &[0, 0]),
        map(1, 1, &[0, 1]),
        map(1, 1, &[1, 0]),
        map(1, 1, &[1, 1]),
    ];
    let cc = ConcreteCategory::build(vec![("1".into(), 1), ("2".into(), 2)], maps, 100, |_, m| {
        let v: Vec<String> = m.values.iter().map(|x| x.to_string()).collect();
        format!("[{}]", v.join(""))
    })?;
    let c = &cc.category;
    let (mono, epi, regular, iso) = (monics(c), epics(c), regular_monics(c), isos(c));
    let ess = essential_monics(c);
    for f in c.arrow_ids() {
        println!(
            "{} -> {} {:<5} monic={} epic={} regular={} iso={} essential={}",
            c.object_name(c.src(f)),
            c.object_name(c.tgt(f)),
            c.arrow_name(f),
            mono.contains(f),
            epi.contains(f),
            regular.contains(f),
            iso.contains(f),
            ess.contains(f)
        );
    }
    let core = left_hereditary_core(&Monopole::monics(c.clone()));
    println!("L(monics) has {} of {} monics", core.positive.len(), mono.len());

    let product = find_universal(c, UniversalKind::Product, UniversalData::Objects(1, 1))?;
    println!("2 x 2 exists: {}", !product.absent);
    let terminal = find_universal(c, UniversalKind::Terminal, UniversalData::Nothing)?;
    println!("terminal: {:?}", terminal.apex.map(|x| c.object_name(x)));
    for f in c.arrow_ids() {
        if let Some(r) = regular_comparison(c, f)? {
            println!("comparison of {}: {} (monic={}, epic={})", c.arrow_name(f), c.arrow_name(r.arrow), r.monic, r.epic);
        }
    }
    Ok(())
}
