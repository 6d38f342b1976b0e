//! One PASS/FAIL line per acceptance criterion, each under its time bound.
//! Runs without the test harness so the lines always reach the terminal.
//! The process fails if a criterion fails that is not listed in
//! `KNOWN_FAILURES`, or if a listed one starts passing.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use polarhull::boolean::{build_ba_capacitor, is_embedding, is_surjective, FinBoolAlg};
use polarhull::capacitor::{
    derive_negative_class, verify_capacitor, verify_corollary_main, verify_theorem_main, CapacitorSpec, RigidityViolation,
};
use polarhull::fincat::{props, DEFAULT_ARROW_BUDGET};
use polarhull::hulls::{completions, completions_agree, injective_objects, is_complete};
use polarhull::polarity::left_hereditary_core;
use polarhull::posets::{
    all_posets, build_poset_capacitor, is_continuous_map, is_dense, is_embedding as is_poset_embedding, macneille,
    posets_up_to, FinPoset, PosetOptions,
};
use polarhull::rings::{
    check_quotient_kernel, check_trivial_complement, find_isomorphism, ideals, image, is_essential_ideal, is_ideal,
    is_injective, is_non_degenerate, lift_ideal_embedding, multiplier_ring, pseudocomplement, small_rings,
    build_ring_capacitor, FinRing,
};
use polarhull::run::{build_universe, oracle, parse_universe, run_verification, RunFlags, EXIT_FAIL};

/// Criteria expected to fail, with the reason recorded in the decision notes.
const KNOWN_FAILURES: &[(u8, &str)] = &[(
    2,
    "item 8 (E₋ full) fails on posets, and literal continuity differs from the derived negative class",
)];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: polarhull::Error) -> String {
    e.to_string()
}

fn data(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn macneille_suite() -> Outcome {
    let mut checked = 0;
    for n in 0..=4 {
        for p in all_posets(n).map_err(err)? {
            let m = macneille(&p).map_err(err)?;
            ensure(m.lattice.is_complete_lattice(), || format!("M of {:?} is not complete", p.covers()))?;
            ensure(
                is_poset_embedding(&p, &m.lattice, &m.unit) && is_dense(&m.lattice, &m.unit),
                || format!("unit of {:?} is not a dense embedding", p.covers()),
            )?;
            let mut carrier = m.carrier.clone();
            carrier.sort_by_key(|&a| (a.count_ones(), a));
            ensure(carrier == oracle::macneille_cuts(&p), || format!("cuts of {:?} differ from the oracle", p.covers()))?;
            checked += 1;
        }
    }
    let size = |p: &FinPoset| macneille(p).map(|m| m.lattice.len()).map_err(err);
    ensure(size(&FinPoset::antichain(2))? == 4, || "M(2-antichain) is not 4 elements".into())?;
    ensure(size(&FinPoset::antichain(0))? == 1, || "M(empty) is not 1 element".into())?;
    Ok(format!("{checked} posets up to isomorphism"))
}

fn poset_ledger() -> Outcome {
    let built = build_poset_capacitor(&posets_up_to(3).map_err(err)?, PosetOptions::default()).map_err(err)?;
    let spec = &built.capacitor.spec;
    let ledger = verify_theorem_main(spec).map_err(err)?;
    let negative = derive_negative_class(spec).map_err(err)?;
    let c = spec.category();
    let mut disagree = 0;
    for f in c.arrow_ids() {
        let m = &built.capacitor.universe.maps[f];
        if is_continuous_map(&built.posets[m.src], &built.posets[m.tgt], &m.values).map_err(err)? != negative.arrows.contains(f) {
            disagree += 1;
        }
    }
    let summary = format!("{}, negative class vs continuity: {disagree}/{} arrows disagree", ledger.summary(), c.arrow_count());
    if ledger.all_hold() && disagree == 0 {
        Ok(summary)
    } else {
        let failing: Vec<String> = ledger.entries.iter().filter(|e| !e.holds).map(|e| format!("({})", e.item)).collect();
        Err(format!("{summary}; failing items {}", failing.join(" ")))
    }
}

fn boolean_suite() -> Outcome {
    let algebras: Vec<(String, FinBoolAlg)> =
        [1, 2, 3].iter().map(|&n| ((1usize << n).to_string(), FinBoolAlg::from_atoms(n).unwrap())).collect();
    let built = build_ba_capacitor(&algebras, DEFAULT_ARROW_BUDGET).map_err(err)?;
    let spec = &built.capacitor.spec;
    let c = spec.category();
    let ledger = verify_theorem_main(spec).map_err(err)?;
    ensure(ledger.all_hold(), || format!("{} {:?}", ledger.summary(), ledger.entries))?;
    let injective = injective_objects(&spec.monopole.as_polarity());
    ensure(injective.len() == c.object_count(), || format!("injective objects {injective:?}"))?;
    let maps = &built.capacitor.universe.maps;
    for f in c.arrow_ids() {
        let values = &maps[f].values;
        let target = &built.algebras[maps[f].tgt];
        let name = c.arrow_name(f);
        ensure(spec.h.contains(f) == props::is_iso(c, f).map_err(err)?, || format!("{name}: essential differs from iso"))?;
        ensure(props::is_monic(c, f).map_err(err)? == is_embedding(values), || format!("{name}: monic differs from injective"))?;
        ensure(props::is_epic(c, f).map_err(err)? == is_surjective(target, values), || format!("{name}: epic differs from surjective"))?;
        ensure(props::is_regular_monic(c, f).map_err(err)? == is_embedding(values), || {
            format!("{name}: regular monic differs from embedding")
        })?;
    }
    Ok(format!("{}, {} arrows, {} injective objects", ledger.summary(), c.arrow_count(), injective.len()))
}

fn multiplier_suite() -> Outcome {
    let mut unital = 0;
    for (name, r) in small_rings() {
        if !is_non_degenerate(&r) {
            ensure(multiplier_ring(&r).is_err(), || format!("degenerate {name} was accepted"))?;
            continue;
        }
        let m = multiplier_ring(&r).map_err(err)?;
        ensure(
            is_injective(&m.embedding) && is_essential_ideal(&m.ring, image(&m.embedding)),
            || format!("embedding of {name} is not an essential ideal"),
        )?;
        let golden = oracle::multiplier_pairs(&r).ok_or_else(|| format!("oracle calls {name} degenerate"))?;
        ensure(golden == m.pairs, || format!("multipliers of {name} differ from the oracle"))?;
        if r.unit().is_some() {
            ensure(find_isomorphism(&r, &m.ring).is_some(), || format!("M({name}) is not isomorphic to {name}"))?;
            unital += 1;
        }
    }
    let col = multiplier_ring(&FinRing::column_ring()).map_err(err)?;
    Ok(format!("{unital} unital rings, |M(column ring)| = {}", col.ring.len()))
}

fn ring_lemma_suite() -> Outcome {
    let (mut quotient, mut complement, mut lifts, mut skipped) = (0, 0, 0, 0);
    for (name, r) in small_rings() {
        for i in ideals(&r) {
            let t = check_trivial_complement(&r, i).map_err(err)?;
            ensure(t.agree(), || format!("{name}, ideal {i:#x}: assertions disagree {t:?}"))?;
            complement += 1;
            if pseudocomplement(&r, i).is_some() {
                let q = check_quotient_kernel(&r, i).map_err(err)?;
                ensure(q.holds(), || format!("{name}, ideal {i:#x}: {q:?}"))?;
                quotient += 1;
            }
            if !is_non_degenerate(&r) {
                continue;
            }
            let (a, inclusion) = r.subring(i);
            ensure(is_ideal(&r, image(&inclusion)), || "inclusion image is not an ideal".into())?;
            let Ok(ma) = multiplier_ring(&a) else {
                skipped += 1;
                continue;
            };
            let mb = multiplier_ring(&r).map_err(err)?;
            match lift_ideal_embedding(&ma, &mb, &inclusion) {
                Ok(lift) => {
                    ensure(lift.injective == lift.essential, || format!("{name}, ideal {i:#x}: {lift:?}"))?;
                    ensure(lift.lifts_found == 1, || format!("{name}, ideal {i:#x}: {} lifts", lift.lifts_found))?;
                    lifts += 1;
                }
                Err(_) => skipped += 1,
            }
        }
    }
    Ok(format!(
        "{quotient} quotient checks, {complement} complement checks, {lifts} lifts ({skipped} ideals outside the lemma)"
    ))
}

fn structural(name: &str, spec: &CapacitorSpec) -> Result<String, String> {
    let c = spec.category();
    let relative = spec.monopole.restrict(&spec.h).map_err(err)?;
    for x in c.objects() {
        let all = completions(&relative, x).map_err(err)?;
        for pair in all.windows(2) {
            ensure(completions_agree(c, &pair[0], &pair[1]), || format!("{name}: completions of {} disagree", c.object_name(x)))?;
        }
    }
    for entry in spec.family.iter().flatten() {
        let t = c.tgt(entry.unit);
        ensure(is_complete(&relative, t).map_err(err)?, || format!("{name}: {} is not complete", c.object_name(t)))?;
    }
    let core = left_hereditary_core(&spec.monopole);
    ensure(left_hereditary_core(&core).positive == core.positive, || format!("{name}: L(L(M)) differs from L(M)"))?;
    let ledger = verify_theorem_main(spec).map_err(err)?;
    for item in [7, 10, 12] {
        let e = &ledger.entries[item - 1];
        ensure(e.holds, || format!("{name}: item ({item}) fails: {}", e.witness.as_deref().unwrap_or("")))?;
    }
    Ok(format!("{name} {}", c.arrow_count()))
}

fn structural_suite() -> Outcome {
    let posets = build_poset_capacitor(&posets_up_to(3).map_err(err)?, PosetOptions::default()).map_err(err)?;
    let algebras: Vec<(String, FinBoolAlg)> =
        [1, 2, 3].iter().map(|&n| ((1usize << n).to_string(), FinBoolAlg::from_atoms(n).unwrap())).collect();
    let boolean = build_ba_capacitor(&algebras, DEFAULT_ARROW_BUDGET).map_err(err)?;
    let rings: Vec<(String, FinRing)> = vec![
        ("F2".into(), FinRing::zn(2)),
        ("F2xF2".into(), FinRing::f2_power(2)),
        ("col".into(), FinRing::column_ring()),
    ];
    let rings = build_ring_capacitor(&rings, true, DEFAULT_ARROW_BUDGET).map_err(err)?;
    let parts = [
        structural("posets", &posets.capacitor.spec)?,
        structural("boolean", &boolean.capacitor.spec)?,
        structural("rings", &rings.capacitor.spec)?,
    ];
    Ok(format!("universes and arrow counts: {}", parts.join(", ")))
}

fn exit_status(path: &std::path::Path) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_polarhull"))
        .args(["verify", "--universe"])
        .arg(path)
        .output()
        .ok()?
        .status
        .code()
}

fn negative_controls() -> Outcome {
    let missing = data("posets_missing_completion.json");
    let spec = parse_universe(&missing, None).map_err(|e| e.to_string())?;
    let built = build_universe(&spec).map_err(err)?;
    let report = verify_capacitor(&built.spec);
    ensure(report.existence_failures() == vec![0, 1, 2], || format!("missing completion: {report:?}"))?;
    let cor = verify_corollary_main(&built.spec).map_err(err)?;
    ensure(
        !cor.enough_injectives && !cor.complete_are_injective && !cor.injective_iff_complete,
        || format!("corollary assertions should fail together: {cor:?}"),
    )?;
    ensure(run_verification(&built, RunFlags::default()).map_err(err)?.exit_code() == EXIT_FAIL, || "missing completion passes".into())?;
    ensure(exit_status(&missing) == Some(EXIT_FAIL), || "binary exit status on missing completion".into())?;

    let rigid = data("rigidity_idempotent.json");
    let spec = parse_universe(&rigid, None).map_err(|e| e.to_string())?;
    let built = build_universe(&spec).map_err(err)?;
    let report = verify_capacitor(&built.spec);
    ensure(report.existence_failures().is_empty(), || "rigidity control fails existence".into())?;
    let clause_two = report
        .rigidity_failures()
        .iter()
        .all(|v| matches!(v, RigidityViolation::Endomorphism { .. }));
    ensure(clause_two && !report.rigidity_failures().is_empty(), || format!("rigidity control: {report:?}"))?;
    ensure(exit_status(&rigid) == Some(EXIT_FAIL), || "binary exit status on rigidity control".into())?;
    Ok("existence clause and rigidity clause (2) caught, exit status 1 for both".into())
}

fn main() -> ExitCode {
    type Criterion = (u8, &'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 7] = [
        (1, "MacNeille oracle suite", Duration::from_secs(10), macneille_suite),
        (2, "poset ledger and continuity", Duration::from_secs(120), poset_ledger),
        (3, "Boolean ledger and detectors", Duration::from_secs(60), boolean_suite),
        (4, "multiplier oracle suite", Duration::from_secs(60), multiplier_suite),
        (5, "ring lemma suite", Duration::from_secs(60), ring_lemma_suite),
        (6, "structural property suite", Duration::from_secs(120), structural_suite),
        (7, "negative controls", Duration::from_secs(10), negative_controls),
    ];
    let mut unexpected = false;
    for (id, title, bound, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > bound => Err(format!("{detail}; took {elapsed:?}, bound {bound:?}")),
            other => other,
        };
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id);
        match (&outcome, known) {
            (Ok(detail), None) => println!("criterion {id} PASS {title}: {detail} [{elapsed:.2?}]"),
            (Ok(detail), Some(_)) => {
                unexpected = true;
                println!("criterion {id} PASS {title}: {detail} [{elapsed:.2?}] (listed as a known failure)");
            }
            (Err(why), Some((_, reason))) => println!("criterion {id} FAIL {title}: {why} [{elapsed:.2?}] (known: {reason})"),
            (Err(why), None) => {
                unexpected = true;
                println!("criterion {id} FAIL {title}: {why} [{elapsed:.2?}]");
            }
        }
    }
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
