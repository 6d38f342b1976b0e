//! Capacitors: a refinement `H`, a faithful functor `U: E → C` and a rigid
//! family of `H`-relative completions through `U`. From a verified capacitor
//! the negative class, the functors `J₊`, `J₋` and the voltage `E = U∘J` are
//! derived, and each conclusion of the main theorem gets its own checker.

mod instance;
mod theorem;

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{compose_functors, ArrowId, ArrowSet, FiniteCategory, Functor, FunctorViolation, ObjId};
use crate::hulls::{comma_objects, comma_terminal_check, terminal_in_comma};
use crate::polarity::{validate_refinement, Monopole, PolarFunctor, Polarity, RefinementViolation, Sign, Voltage};

pub use instance::{ConcreteCapacitor, ConcreteParts};
pub use theorem::{verify_corollary_main, verify_theorem_main, CorollaryReport, LedgerEntry, TheoremLedger};

/// The unit `η_x: x → U(Jx)` and the object `Jx` of `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyEntry {
    pub unit: ArrowId,
    pub object: ObjId,
}

/// Indexed by the objects of `C`; `None` where no completion was supplied.
pub type CompletionFamily = Vec<Option<FamilyEntry>>;

#[derive(Clone, Debug)]
pub struct CapacitorSpec {
    pub monopole: Monopole,
    pub h: ArrowSet,
    pub e: Arc<FiniteCategory>,
    /// Covariant functor `E → C`.
    pub u: Functor,
    pub family: CompletionFamily,
}

impl CapacitorSpec {
    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.monopole.category
    }

    /// Fills the family with the lowest-id terminal object of every
    /// `x ↓_H U`, leaving `None` where the comma category has none.
    pub fn search_family(monopole: &Monopole, h: &ArrowSet, e: &FiniteCategory, u: &Functor) -> CompletionFamily {
        let c = &monopole.category;
        c.objects()
            .map(|x| {
                terminal_in_comma(c, x, e, u, h).map(|r| FamilyEntry {
                    unit: r.unit,
                    object: r.object,
                })
            })
            .collect()
    }

    fn entry(&self, x: ObjId) -> FamilyEntry {
        self.family[x].expect("verified capacitor has a total family")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum RigidityViolation {
    /// Two `E`-arrows close the unit square of `arrow`.
    Fillers { arrow: ArrowId, first: ArrowId, second: ArrowId },
    /// A non-identity endomorphism of `U(Jx)` fixes the unit of `x`.
    Endomorphism { object: ObjId, arrow: ArrowId },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CapacitorViolation {
    Refinement { violation: RefinementViolation },
    OutsidePositives { arrow: ArrowId },
    Functor { violation: FunctorViolation },
    Contravariant,
    NotFaithful,
    FamilyShape { entries: usize, objects: usize },
    /// `x ↓_H U` has no terminal object and none was supplied.
    MissingCompletion { object: ObjId },
    UnitTyping { object: ObjId },
    /// The supplied unit is not terminal; `comma_arrow` has no mediator or two.
    NotTerminal { object: ObjId, comma_arrow: ArrowId },
    Rigidity { violation: RigidityViolation },
    /// No unique `J₊f` for an arrow of `H`.
    PositiveFiller { arrow: ArrowId },
    PositiveIdentity { object: ObjId },
    PositiveComposition { g: ArrowId, f: ArrowId },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CapacitorReport {
    pub violations: Vec<CapacitorViolation>,
}

impl CapacitorReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// The missing-completion and non-terminal violations.
    pub fn existence_failures(&self) -> Vec<ObjId> {
        self.violations
            .iter()
            .filter_map(|v| match v {
                CapacitorViolation::MissingCompletion { object } | CapacitorViolation::NotTerminal { object, .. } => {
                    Some(*object)
                }
                _ => None,
            })
            .collect()
    }

    pub fn rigidity_failures(&self) -> Vec<&RigidityViolation> {
        self.violations
            .iter()
            .filter_map(|v| match v {
                CapacitorViolation::Rigidity { violation } => Some(violation),
                _ => None,
            })
            .collect()
    }
}

/// For every arrow `f: x → y` of `C`, the `E`-arrows `ψ: Jx → Jy` with
/// `Uψ∘η_x = η_y∘f`, capped at two.
fn unit_square_fillers(spec: &CapacitorSpec) -> Vec<Vec<ArrowId>> {
    let c = spec.category();
    let e = &spec.e;
    let mut by_pair: HashMap<(ObjId, ObjId), HashMap<ArrowId, Vec<ArrowId>>> = HashMap::new();
    c.arrow_ids()
        .map(|f| {
            let (x, y) = (c.src(f), c.tgt(f));
            let (ex, ey) = (spec.entry(x), spec.entry(y));
            let table = by_pair.entry((x, y)).or_insert_with(|| {
                let mut t: HashMap<ArrowId, Vec<ArrowId>> = HashMap::new();
                for &psi in e.hom(ex.object, ey.object) {
                    if let Some(upsi) = spec.u.arrow(psi) {
                        let slot = t.entry(c.compose(upsi, ex.unit)).or_default();
                        if slot.len() < 2 {
                            slot.push(psi);
                        }
                    }
                }
                t
            });
            table.get(&c.compose(ey.unit, f)).cloned().unwrap_or_default()
        })
        .collect()
}

fn rigidity(spec: &CapacitorSpec, fillers: &[Vec<ArrowId>]) -> Vec<RigidityViolation> {
    let c = spec.category();
    let mut out = Vec::new();
    for (f, found) in fillers.iter().enumerate() {
        if let [first, second, ..] = found[..] {
            out.push(RigidityViolation::Fillers { arrow: f, first, second });
        }
    }
    for x in c.objects() {
        let FamilyEntry { unit, object } = spec.entry(x);
        let ujx = spec.u.object(object);
        for &f in c.hom(ujx, ujx) {
            if f != c.identity(ujx) && c.compose(f, unit) == unit {
                out.push(RigidityViolation::Endomorphism { object: x, arrow: f });
            }
        }
    }
    out
}

/// Both rigidity clauses, each violation with its witnesses. Requires a
/// family that is total and well typed.
pub fn is_rigid_family(spec: &CapacitorSpec) -> Result<Vec<RigidityViolation>> {
    let shape = family_shape(spec);
    if !shape.is_empty() {
        return Err(Error::Precondition(format!("family is not well typed: {shape:?}")));
    }
    Ok(rigidity(spec, &unit_square_fillers(spec)))
}

fn family_shape(spec: &CapacitorSpec) -> Vec<CapacitorViolation> {
    let c = spec.category();
    let mut out = Vec::new();
    if spec.family.len() != c.object_count() {
        out.push(CapacitorViolation::FamilyShape {
            entries: spec.family.len(),
            objects: c.object_count(),
        });
        return out;
    }
    for x in c.objects() {
        match spec.family[x] {
            None => out.push(CapacitorViolation::MissingCompletion { object: x }),
            Some(FamilyEntry { unit, object }) => {
                let typed = object < spec.e.object_count()
                    && unit < c.arrow_count()
                    && c.src(unit) == x
                    && c.tgt(unit) == spec.u.object(object)
                    && spec.h.contains(unit);
                if !typed {
                    out.push(CapacitorViolation::UnitTyping { object: x });
                }
            }
        }
    }
    out
}

/// `J₊f` for every arrow of `H`: the unique `ψ: Jy → Jx` with
/// `Uψ∘η_y∘f = η_x`.
fn positive_fillers(spec: &CapacitorSpec) -> Vec<std::result::Result<ArrowId, usize>> {
    let c = spec.category();
    spec.h
        .iter()
        .map(|f| {
            let (ex, ey) = (spec.entry(c.src(f)), spec.entry(c.tgt(f)));
            let through = c.compose(ey.unit, f);
            let found: Vec<ArrowId> = spec
                .e
                .hom(ey.object, ex.object)
                .iter()
                .copied()
                .filter(|&psi| spec.u.arrow(psi).is_some_and(|upsi| c.compose(upsi, through) == ex.unit))
                .take(2)
                .collect();
            match found[..] {
                [psi] => Ok(psi),
                _ => Err(found.len()),
            }
        })
        .collect()
}

/// Every clause of the capacitor definition, plus functoriality of `J₊` on
/// `H` and naturality of the unit.
pub fn verify_capacitor(spec: &CapacitorSpec) -> CapacitorReport {
    let c = spec.category();
    let e = &spec.e;
    let mut violations: Vec<CapacitorViolation> = validate_refinement(c, &spec.h)
        .violations
        .into_iter()
        .map(|violation| CapacitorViolation::Refinement { violation })
        .collect();
    violations.extend(
        spec.h
            .difference(&spec.monopole.positive)
            .iter()
            .map(|arrow| CapacitorViolation::OutsidePositives { arrow }),
    );
    let functor = spec.u.validate(e, c, Some(&ArrowSet::full(e.arrow_count())));
    let broken_functor = !functor.is_empty();
    violations.extend(functor.into_iter().map(|violation| CapacitorViolation::Functor { violation }));
    if spec.u.contravariant {
        violations.push(CapacitorViolation::Contravariant);
    }
    if broken_functor || spec.u.contravariant {
        return CapacitorReport { violations };
    }
    if !spec.u.is_faithful(e) {
        violations.push(CapacitorViolation::NotFaithful);
    }
    let shape = family_shape(spec);
    if !shape.is_empty() {
        violations.extend(shape);
        return CapacitorReport { violations };
    }
    for x in c.objects() {
        let FamilyEntry { unit, object } = spec.entry(x);
        let objects = comma_objects(c, x, e, &spec.u, &spec.h);
        if let Err(comma_arrow) = comma_terminal_check(c, e, &spec.u, &objects, (object, unit)) {
            violations.push(CapacitorViolation::NotTerminal { object: x, comma_arrow });
        }
    }
    let fillers = unit_square_fillers(spec);
    violations.extend(
        rigidity(spec, &fillers)
            .into_iter()
            .map(|violation| CapacitorViolation::Rigidity { violation }),
    );
    if !violations.is_empty() || !validate_refinement(c, &spec.h).is_valid() {
        return CapacitorReport { violations };
    }
    let j_plus = positive_functor(spec);
    match j_plus {
        Err(arrow) => violations.push(CapacitorViolation::PositiveFiller { arrow }),
        Ok(j) => {
            for violation in j.validate(c, e, Some(&spec.h)) {
                violations.push(match violation {
                    FunctorViolation::Identity { object } => CapacitorViolation::PositiveIdentity { object },
                    FunctorViolation::Composition { g, f } => CapacitorViolation::PositiveComposition { g, f },
                    other => CapacitorViolation::Functor { violation: other },
                });
            }
        }
    }
    CapacitorReport { violations }
}

fn positive_functor(spec: &CapacitorSpec) -> std::result::Result<Functor, ArrowId> {
    let c = spec.category();
    let mut arrow_map = vec![None; c.arrow_count()];
    for (f, psi) in spec.h.iter().zip(positive_fillers(spec)) {
        arrow_map[f] = Some(psi.map_err(|_| f)?);
    }
    Ok(Functor {
        object_map: c.objects().map(|x| spec.entry(x).object).collect(),
        arrow_map,
        contravariant: true,
    })
}

fn require_verified(spec: &CapacitorSpec) -> Result<()> {
    let report = verify_capacitor(spec);
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "capacitor not verified: {} violation(s), first {:?}",
            report.violations.len(),
            report.violations[0]
        )))
    }
}

/// Arrows `f` whose unit square has a filler `J₋f`, with the filler.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeClass {
    pub arrows: ArrowSet,
    pub filler: Vec<Option<ArrowId>>,
}

fn negative_class(spec: &CapacitorSpec) -> NegativeClass {
    let fillers = unit_square_fillers(spec);
    let filler: Vec<Option<ArrowId>> = fillers.iter().map(|f| f.first().copied()).collect();
    NegativeClass {
        arrows: ArrowSet::from_predicate(filler.len(), |f| filler[f].is_some()),
        filler,
    }
}

pub fn derive_negative_class(spec: &CapacitorSpec) -> Result<NegativeClass> {
    require_verified(spec)?;
    Ok(negative_class(spec))
}

/// The voltage on the polarity `(H, C₋)` together with its ingredients.
#[derive(Clone, Debug)]
pub struct DerivedVoltage {
    pub voltage: Voltage,
    /// Contravariant `C → E`, defined on `H`.
    pub j_plus: Functor,
    /// Covariant `C → E`, defined on `C₋`.
    pub j_minus: Functor,
    pub negative: NegativeClass,
}

impl DerivedVoltage {
    pub fn polarity(&self) -> &Polarity {
        &self.voltage.polarity
    }

    pub fn unit(&self, x: ObjId) -> ArrowId {
        self.voltage.eta[x]
    }

    pub fn e_minus(&self, f: ArrowId) -> Option<ArrowId> {
        self.voltage.e.minus.arrow(f)
    }
}

fn assemble_voltage(spec: &CapacitorSpec) -> Result<DerivedVoltage> {
    let c = spec.category();
    let negative = negative_class(spec);
    let j_plus = positive_functor(spec)
        .map_err(|f| Error::Precondition(format!("no unique positive filler for {}", c.arrow_name(f))))?;
    let j_minus = Functor {
        object_map: j_plus.object_map.clone(),
        arrow_map: negative.filler.clone(),
        contravariant: false,
    };
    let e = PolarFunctor {
        sign: Sign::Negative,
        plus: compose_functors(&j_plus, &spec.u)?,
        minus: compose_functors(&j_minus, &spec.u)?,
    };
    let voltage = Voltage {
        polarity: Polarity::new(c.clone(), spec.h.clone(), negative.arrows.clone()),
        e,
        eta: c.objects().map(|x| spec.entry(x).unit).collect(),
    };
    Ok(DerivedVoltage {
        voltage,
        j_plus,
        j_minus,
        negative,
    })
}

pub fn build_voltage(spec: &CapacitorSpec) -> Result<DerivedVoltage> {
    require_verified(spec)?;
    assemble_voltage(spec)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::fincat::{Arrow, BuildOptions};

    /// `x`, `L`, `η: x → L` and an idempotent `σ: L → L` with `σ∘η = η`.
    /// With `E` the one-arrow category on `L`, every comma category has a
    /// terminal object but `σ` breaks the second rigidity clause.
    pub fn idempotent_fixing_the_unit() -> CapacitorSpec {
        let arrows = vec![
            Arrow { name: "1x".into(), src: 0, tgt: 0 },
            Arrow { name: "1L".into(), src: 1, tgt: 1 },
            Arrow { name: "eta".into(), src: 0, tgt: 1 },
            Arrow { name: "sigma".into(), src: 1, tgt: 1 },
        ];
        let c = FiniteCategory::from_table(
            vec!["x".into(), "L".into()],
            arrows,
            vec![0, 1],
            |g, f| match (g, f) {
                (0 | 1, f) => Some(f),
                (g, 0 | 1) => Some(g),
                (3, 2) => Some(2),
                (3, 3) => Some(3),
                _ => None,
            },
            BuildOptions::default(),
        )
        .unwrap();
        let c = Arc::new(c);
        let e = Arc::new(crate::fincat::small::discrete(1));
        let u = Functor {
            object_map: vec![1],
            arrow_map: vec![Some(1)],
            contravariant: false,
        };
        let monopole = Monopole::everything(c.clone());
        let h = ArrowSet::from_ids(4, [0, 1, 2]);
        let family = CapacitorSpec::search_family(&monopole, &h, &e, &u);
        CapacitorSpec {
            monopole,
            h,
            e,
            u,
            family,
        }
    }

    /// One object and its identity, completing itself.
    pub fn trivial() -> CapacitorSpec {
        let c = Arc::new(crate::fincat::small::discrete(1));
        let monopole = Monopole::everything(c.clone());
        let h = monopole.positive.clone();
        let u = Functor::identity(&c);
        let family = CapacitorSpec::search_family(&monopole, &h, &c, &u);
        CapacitorSpec {
            monopole,
            h,
            e: c,
            u,
            family,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::polarity::validate_voltage;

    #[test]
    fn trivial_capacitor_gives_the_identity_voltage() {
        let spec = trivial();
        assert!(verify_capacitor(&spec).is_valid());
        let v = build_voltage(&spec).unwrap();
        assert!(validate_voltage(&v.voltage).is_empty());
        assert_eq!(v.voltage.eta, vec![0]);
        assert_eq!(v.negative.filler, vec![Some(0)]);
    }

    #[test]
    fn idempotent_endomorphism_breaks_the_second_clause_only() {
        let spec = idempotent_fixing_the_unit();
        assert_eq!(spec.family, vec![Some(FamilyEntry { unit: 2, object: 0 }), Some(FamilyEntry { unit: 1, object: 0 })]);
        let report = verify_capacitor(&spec);
        assert_eq!(
            report.violations,
            vec![CapacitorViolation::Rigidity {
                violation: RigidityViolation::Endomorphism { object: 0, arrow: 3 }
            }]
        );
        assert!(report.existence_failures().is_empty());
        assert!(derive_negative_class(&spec).is_err());
    }

    #[test]
    fn missing_family_entry_is_an_existence_failure() {
        let mut spec = trivial();
        spec.family[0] = None;
        let report = verify_capacitor(&spec);
        assert_eq!(report.existence_failures(), vec![0]);
        assert!(is_rigid_family(&spec).is_err());
    }
}
