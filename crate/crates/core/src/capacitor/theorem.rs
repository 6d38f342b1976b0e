use rayon::prelude::*;
use serde::Serialize;

use super::{assemble_voltage, require_verified, CapacitorSpec, DerivedVoltage};
use crate::error::Result;
use crate::fincat::{props, ArrowId, FiniteCategory, ObjId};
use crate::hulls::{injective_objects, is_complete, is_completion, is_injective_polarity};
use crate::polarity::{
    is_negatively_epic, validate_polar_functor, validate_polar_nat_trans, validate_refinement, validate_voltage,
    Monopole, Polarity,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub item: u8,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremLedger {
    pub entries: Vec<LedgerEntry>,
}

impl TheoremLedger {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.holds).count()
    }

    pub fn all_hold(&self) -> bool {
        self.passed() == self.entries.len()
    }

    pub fn summary(&self) -> String {
        format!("theorem_main: {}/{}", self.passed(), self.entries.len())
    }
}

type Check = fn(&CapacitorSpec, &DerivedVoltage) -> Option<String>;

const CHECKS: [Check; 12] = [
    negatives_form_refinement,
    negative_filler_is_functor,
    negative_endofunctor,
    unit_is_natural,
    voltage_axioms,
    units_are_completions,
    units_monic_and_negatively_epic,
    e_minus_fully_faithful,
    e_minus_unique_filler,
    adjunction_bijection,
    u_reflective,
    injective_iff_complete,
];

/// The twelve conclusions, each from its own checker. Entries are computed
/// in parallel and reported in item order.
pub fn verify_theorem_main(spec: &CapacitorSpec) -> Result<TheoremLedger> {
    require_verified(spec)?;
    let v = assemble_voltage(spec)?;
    let entries = CHECKS
        .par_iter()
        .enumerate()
        .map(|(i, check)| {
            let witness = check(spec, &v);
            LedgerEntry {
                item: i as u8 + 1,
                holds: witness.is_none(),
                witness,
            }
        })
        .collect();
    Ok(TheoremLedger { entries })
}

fn name(c: &FiniteCategory, f: ArrowId) -> &str {
    c.arrow_name(f)
}

fn negatives_form_refinement(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    let report = validate_refinement(spec.category(), &v.negative.arrows);
    report.violations.first().map(|w| format!("{w:?}"))
}

fn negative_filler_is_functor(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    let violations = v.j_minus.validate(spec.category(), &spec.e, Some(&v.negative.arrows));
    violations.first().map(|w| format!("{w:?}"))
}

fn negative_endofunctor(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    let flat = Polarity::unpolarized(spec.category().clone());
    let violations = validate_polar_functor(&v.voltage.e, v.polarity(), &flat);
    violations.first().map(|w| format!("{w:?}"))
}

fn unit_is_natural(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    let violations = validate_polar_nat_trans(&v.voltage.unit(), v.polarity(), spec.category());
    violations.first().map(|w| format!("{w:?}"))
}

fn voltage_axioms(_: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    validate_voltage(&v.voltage).first().map(|w| format!("{w:?}"))
}

fn relative(spec: &CapacitorSpec) -> Monopole {
    spec.monopole.restrict(&spec.h).expect("verified capacitor has H inside the positives")
}

fn units_are_completions(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    let c = spec.category();
    let m = relative(spec);
    c.objects()
        .find(|&x| !is_completion(&m, v.unit(x)).unwrap_or(false))
        .map(|x| format!("unit {} of {} is not amphi-terminal", name(c, v.unit(x)), c.object_name(x)))
}

fn units_monic_and_negatively_epic(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    let c = spec.category();
    for x in c.objects() {
        let eta = v.unit(x);
        if !props::is_monic(c, eta).unwrap_or(false) {
            return Some(format!("unit {} is not monic", name(c, eta)));
        }
        if !is_negatively_epic(v.polarity(), eta).unwrap_or(false) {
            return Some(format!("unit {} is not negatively epic", name(c, eta)));
        }
    }
    None
}

/// `C₋(x, y)` for every pair, as id lists.
fn negative_hom<'a>(c: &'a FiniteCategory, v: &'a DerivedVoltage, x: ObjId, y: ObjId) -> impl Iterator<Item = ArrowId> + 'a {
    c.hom(x, y).iter().copied().filter(|&f| v.negative.arrows.contains(f))
}

fn e_minus_fully_faithful(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    let c = spec.category();
    let ex = |x: ObjId| v.voltage.e.object(x);
    for x in c.objects() {
        for y in c.objects() {
            let mut images = Vec::new();
            for f in negative_hom(c, v, x, y) {
                let g = v.e_minus(f)?;
                if !v.negative.arrows.contains(g) {
                    return Some(format!("E₋{} = {} is not negative", name(c, f), name(c, g)));
                }
                if images.contains(&g) {
                    return Some(format!("E₋ identifies {} with another arrow", name(c, f)));
                }
                images.push(g);
            }
            if let Some(g) = negative_hom(c, v, ex(x), ex(y)).find(|g| !images.contains(g)) {
                return Some(format!(
                    "{} in C₋({}, {}) is not E₋ of an arrow {} → {}",
                    name(c, g),
                    c.object_name(ex(x)),
                    c.object_name(ex(y)),
                    c.object_name(x),
                    c.object_name(y)
                ));
            }
        }
    }
    None
}

fn e_minus_unique_filler(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    let c = spec.category();
    for f in v.negative.arrows.iter() {
        let (x, y) = (c.src(f), c.tgt(f));
        let target = c.compose(v.unit(y), f);
        let found: Vec<ArrowId> = negative_hom(c, v, v.voltage.e.object(x), v.voltage.e.object(y))
            .filter(|&g| c.compose(g, v.unit(x)) == target)
            .collect();
        if found != [v.e_minus(f)?] {
            return Some(format!("negative fillers of {}: {:?}", name(c, f), found));
        }
    }
    None
}

/// `ψ ↦ Uψ∘η_x` is a bijection `E(Jx, b) → C₋(x, Ub)` for every `x` and `b`.
fn hom_bijection(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    let c = spec.category();
    let e = &spec.e;
    for x in c.objects() {
        let jx = v.j_minus.object(x);
        for b in e.objects() {
            let mut images = Vec::new();
            for &psi in e.hom(jx, b) {
                let phi = c.compose(spec.u.arrow(psi)?, v.unit(x));
                if !v.negative.arrows.contains(phi) {
                    return Some(format!("transpose of {} is not negative", e.arrow_name(psi)));
                }
                if images.contains(&phi) {
                    return Some(format!("transpose is not injective at {}", e.arrow_name(psi)));
                }
                images.push(phi);
            }
            if let Some(g) = negative_hom(c, v, x, spec.u.object(b)).find(|g| !images.contains(g)) {
                return Some(format!("{} has no transpose in E", name(c, g)));
            }
        }
    }
    None
}

fn adjunction_bijection(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    if let Some(w) = hom_bijection(spec, v) {
        return Some(w);
    }
    let c = spec.category();
    let e = &spec.e;
    let u = |psi: ArrowId| spec.u.arrow(psi).expect("U is total");
    let transpose = |x: ObjId, psi: ArrowId| c.compose(u(psi), v.unit(x));
    // Naturality in the first slot: along every negative h: x' → x.
    for h in v.negative.arrows.iter() {
        let (x0, x) = (c.src(h), c.tgt(h));
        let jh = v.j_minus.arrow(h)?;
        for b in e.objects() {
            for &psi in e.hom(v.j_minus.object(x), b) {
                if transpose(x0, e.compose(psi, jh)) != c.compose(transpose(x, psi), h) {
                    return Some(format!("not natural in the first slot at {}", name(c, h)));
                }
            }
        }
    }
    // Naturality in the second slot: along every arrow φ of E.
    for phi in e.arrow_ids() {
        let b = e.src(phi);
        for x in c.objects() {
            for &psi in e.hom(v.j_minus.object(x), b) {
                if transpose(x, e.compose(phi, psi)) != c.compose(u(phi), transpose(x, psi)) {
                    return Some(format!("not natural in the second slot at {}", e.arrow_name(phi)));
                }
            }
        }
    }
    None
}

fn u_reflective(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    let c = spec.category();
    let e = &spec.e;
    for a in e.objects() {
        for b in e.objects() {
            let images: Vec<ArrowId> = e.hom(a, b).iter().map(|&phi| spec.u.arrow(phi).expect("U is total")).collect();
            if let Some(&g) = images.iter().find(|&&g| !v.negative.arrows.contains(g)) {
                return Some(format!("U sends an arrow to {}, which is not negative", name(c, g)));
            }
            if let Some(g) = negative_hom(c, v, spec.u.object(a), spec.u.object(b)).find(|g| !images.contains(g)) {
                return Some(format!("U is not full: {} is not in its image", name(c, g)));
            }
        }
    }
    if !spec.u.is_faithful(e) {
        return Some("U is not faithful".into());
    }
    hom_bijection(spec, v).map(|w| format!("no reflection: {w}"))
}

fn injective_iff_complete(spec: &CapacitorSpec, v: &DerivedVoltage) -> Option<String> {
    let c = spec.category();
    let m = relative(spec);
    for x in c.objects() {
        let injective = is_injective_polarity(v.polarity(), x).ok()?;
        let complete = is_complete(&m, x).ok()?;
        if injective != complete {
            return Some(format!(
                "{} is {}injective but {}complete",
                c.object_name(x),
                if injective { "" } else { "not " },
                if complete { "" } else { "not " }
            ));
        }
    }
    None
}

/// The three assertions evaluated independently: enough injectives in the
/// positive monopole, complete objects (relative to `H`) are injective, and
/// injective objects are exactly the complete ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub enough_injectives: bool,
    pub complete_are_injective: bool,
    pub injective_iff_complete: bool,
    pub equivalent: bool,
    pub injective: Vec<ObjId>,
    pub complete: Vec<ObjId>,
}

/// Needs only the monopole and a valid `H`; the capacitor itself may fail,
/// which is how the missing-completion control is evaluated.
pub fn verify_corollary_main(spec: &CapacitorSpec) -> Result<CorollaryReport> {
    let c = spec.category();
    let relative = spec.monopole.restrict(&spec.h)?;
    let monopole = spec.monopole.as_polarity();
    let injective = injective_objects(&monopole);
    let complete: Vec<ObjId> = c
        .objects()
        .filter(|&x| is_complete(&relative, x).expect("object in range"))
        .collect();
    let enough_injectives = c.objects().all(|a| {
        injective
            .iter()
            .any(|&x| c.hom(a, x).iter().any(|&f| spec.monopole.positive.contains(f)))
    });
    let complete_are_injective = complete.iter().all(|x| injective.contains(x));
    let injective_iff_complete = injective == complete;
    Ok(CorollaryReport {
        enough_injectives,
        complete_are_injective,
        injective_iff_complete,
        equivalent: enough_injectives == complete_are_injective && complete_are_injective == injective_iff_complete,
        injective,
        complete,
    })
}
