use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::boolean::{build_ba_capacitor, BaEntry, FinBoolAlg};
use crate::capacitor::{CapacitorSpec, FamilyEntry};
use crate::error::{Error, Result};
use crate::fincat::{ArrowSet, CategoryData, ConcreteCategory, FiniteCategory, Functor, DEFAULT_ARROW_BUDGET};
use crate::polarity::Monopole;
use crate::posets::{build_poset_capacitor, FinPoset, PosetEntry, PosetOptions};
use crate::rings::{build_ring_capacitor, ideal_lattice, validate_ring, FinRing, RingEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Poset,
    Boolean,
    Ring,
    Raw,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Poset => "poset",
            Kind::Boolean => "boolean",
            Kind::Ring => "ring",
            Kind::Raw => "raw",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct UniverseOptions {
    /// Insert missing completions (MacNeille lattices, multiplier rings).
    pub close_completions: bool,
    pub budget: usize,
}

impl Default for UniverseOptions {
    fn default() -> Self {
        Self {
            close_completions: true,
            budget: DEFAULT_ARROW_BUDGET,
        }
    }
}

/// A raw universe: a category with its classes given by arrow names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawEntry {
    pub name: String,
    pub category: CategoryData,
    pub positive: Vec<String>,
    pub h: Vec<String>,
    pub e_objects: Vec<String>,
    pub e_arrows: Vec<String>,
    /// Units by object; searched in the comma categories when absent.
    #[serde(default)]
    pub family: Option<Vec<RawFamilyEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawFamilyEntry {
    pub object: String,
    pub unit: String,
}

#[derive(Clone, Debug)]
pub enum Entries {
    Poset(Vec<(String, FinPoset)>),
    Boolean(Vec<(String, FinBoolAlg)>),
    Ring(Vec<(String, FinRing)>),
    Raw(Box<RawEntry>),
}

#[derive(Clone, Debug)]
pub struct UniverseSpec {
    pub kind: Kind,
    pub options: UniverseOptions,
    pub entries: Entries,
}

impl UniverseSpec {
    pub fn len(&self) -> usize {
        match &self.entries {
            Entries::Poset(v) => v.len(),
            Entries::Boolean(v) => v.len(),
            Entries::Ring(v) => v.len(),
            Entries::Raw(_) => 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseErrors(pub Vec<ParseError>);

impl fmt::Display for ParseErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}:{}: {}", e.line, e.column, e.message)?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseErrors {}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileShape<'a> {
    kind: Option<Kind>,
    #[serde(default)]
    options: UniverseOptions,
    #[serde(borrow)]
    entries: Vec<&'a RawValue>,
}

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

fn json_error(e: &serde_json::Error, base: (usize, usize)) -> ParseError {
    let (line, column) = if e.line() <= 1 {
        (base.0, base.1 + e.column().saturating_sub(1))
    } else {
        (base.0 + e.line() - 1, e.column())
    };
    ParseError {
        line,
        column,
        message: e.to_string(),
    }
}

pub fn parse_universe(path: &Path, kind: Option<Kind>) -> std::result::Result<UniverseSpec, ParseErrors> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        ParseErrors(vec![ParseError {
            line: 0,
            column: 0,
            message: format!("{}: {e}", path.display()),
        }])
    })?;
    parse_universe_str(&text, kind)
}

/// Parses a universe file; `kind` overrides a missing `kind` field and must
/// agree with a present one. Every entry is checked and all failures are
/// reported together.
pub fn parse_universe_str(text: &str, kind: Option<Kind>) -> std::result::Result<UniverseSpec, ParseErrors> {
    let shape: FileShape = serde_json::from_str(text).map_err(|e| ParseErrors(vec![json_error(&e, (1, 1))]))?;
    let fail = |message: String| ParseErrors(vec![ParseError { line: 1, column: 1, message }]);
    let kind = match (shape.kind, kind) {
        (Some(a), Some(b)) if a != b => return Err(fail(format!("file declares kind `{a}` but `{b}` was requested"))),
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(fail("no kind given in the file or on the command line".into())),
    };
    let mut errors = Vec::new();
    let mut posets = Vec::new();
    let mut algebras = Vec::new();
    let mut rings = Vec::new();
    let mut raws = Vec::new();
    for raw in &shape.entries {
        let offset = raw.get().as_ptr() as usize - text.as_ptr() as usize;
        let base = position(text, offset);
        let mut push = |message: String| {
            errors.push(ParseError {
                line: base.0,
                column: base.1,
                message,
            })
        };
        match kind {
            Kind::Poset => match serde_json::from_str::<PosetEntry>(raw.get()) {
                Err(e) => errors.push(json_error(&e, base)),
                Ok(entry) => match FinPoset::from_entry(&entry) {
                    Ok(p) => posets.push((entry.name, p)),
                    Err(e) => push(format!("poset `{}`: {e}", entry.name)),
                },
            },
            Kind::Boolean => match serde_json::from_str::<BaEntry>(raw.get()) {
                Err(e) => errors.push(json_error(&e, base)),
                Ok(entry) => match FinBoolAlg::from_entry(&entry) {
                    Ok(a) => algebras.push(a),
                    Err(e) => push(e.to_string()),
                },
            },
            Kind::Ring => match serde_json::from_str::<RingEntry>(raw.get()) {
                Err(e) => errors.push(json_error(&e, base)),
                Ok(entry) => {
                    let violations = validate_ring(&entry);
                    if let Some(v) = violations.first() {
                        push(format!("ring `{}` violates {} axiom(s), first {v:?}", entry.name, violations.len()));
                    } else {
                        match FinRing::from_entry(&entry) {
                            Ok(r) => rings.push((entry.name, r)),
                            Err(e) => push(e.to_string()),
                        }
                    }
                }
            },
            Kind::Raw => match serde_json::from_str::<RawEntry>(raw.get()) {
                Err(e) => errors.push(json_error(&e, base)),
                Ok(entry) => {
                    let report = entry.category.validate();
                    if report.is_valid() {
                        raws.push(entry);
                    } else {
                        push(format!("category `{}` is invalid: {report}", entry.name));
                    }
                }
            },
        }
    }
    if kind == Kind::Raw && errors.is_empty() && raws.len() != 1 {
        errors.push(ParseError {
            line: 1,
            column: 1,
            message: format!("a raw universe has exactly one entry, found {}", raws.len()),
        });
    }
    if !errors.is_empty() {
        return Err(ParseErrors(errors));
    }
    let entries = match kind {
        Kind::Poset => Entries::Poset(posets),
        Kind::Boolean => Entries::Boolean(algebras),
        Kind::Ring => Entries::Ring(rings),
        Kind::Raw => Entries::Raw(Box::new(raws.remove(0))),
    };
    Ok(UniverseSpec {
        kind,
        options: shape.options,
        entries,
    })
}

/// A materialized universe with its capacitor data and, per object, the
/// order to draw when exported.
#[derive(Clone, Debug)]
pub struct BuiltUniverse {
    pub kind: Kind,
    pub spec: CapacitorSpec,
    pub orders: Vec<Option<FinPoset>>,
    pub concrete: Option<ConcreteCategory>,
}

impl BuiltUniverse {
    pub fn category(&self) -> &Arc<FiniteCategory> {
        self.spec.category()
    }
}

pub fn build_universe(spec: &UniverseSpec) -> Result<BuiltUniverse> {
    let o = spec.options;
    match &spec.entries {
        Entries::Poset(posets) => {
            let built = build_poset_capacitor(
                posets,
                PosetOptions {
                    close_completions: o.close_completions,
                    budget: o.budget,
                },
            )?;
            Ok(BuiltUniverse {
                kind: spec.kind,
                spec: built.capacitor.spec,
                orders: built.posets.into_iter().map(Some).collect(),
                concrete: Some(built.capacitor.universe),
            })
        }
        Entries::Boolean(algebras) => {
            let named: Vec<(String, FinBoolAlg)> = algebras.iter().map(|(n, a)| (n.clone(), *a)).collect();
            let built = build_ba_capacitor(&named, o.budget)?;
            Ok(BuiltUniverse {
                kind: spec.kind,
                spec: built.capacitor.spec,
                orders: built.algebras.iter().map(|a| Some(a.poset())).collect(),
                concrete: Some(built.capacitor.universe),
            })
        }
        Entries::Ring(rings) => {
            let built = build_ring_capacitor(rings, o.close_completions, o.budget)?;
            Ok(BuiltUniverse {
                kind: spec.kind,
                spec: built.capacitor.spec,
                orders: built.rings.iter().map(|r| Some(ideal_lattice(r))).collect(),
                concrete: Some(built.capacitor.universe),
            })
        }
        Entries::Raw(raw) => {
            let spec_ = build_raw(raw, o.budget)?;
            let n = spec_.category().object_count();
            Ok(BuiltUniverse {
                kind: spec.kind,
                spec: spec_,
                orders: vec![None; n],
                concrete: None,
            })
        }
    }
}

fn build_raw(raw: &RawEntry, budget: usize) -> Result<CapacitorSpec> {
    let c = Arc::new(raw.category.to_category(budget)?);
    let arrow = |name: &String| c.find_arrow(name).ok_or_else(|| Error::UnknownName(name.clone()));
    let object = |name: &String| c.find_object(name).ok_or_else(|| Error::UnknownName(name.clone()));
    let set = |names: &[String]| -> Result<ArrowSet> {
        Ok(ArrowSet::from_ids(c.arrow_count(), names.iter().map(arrow).collect::<Result<Vec<_>>>()?))
    };
    let positive = set(&raw.positive)?;
    let h = set(&raw.h)?;
    let e_objects = raw.e_objects.iter().map(object).collect::<Result<Vec<_>>>()?;
    let (e, back) = c.subcategory(&e_objects, &set(&raw.e_arrows)?)?;
    let e = Arc::new(e);
    let u = Functor {
        object_map: e_objects.clone(),
        arrow_map: back.into_iter().map(Some).collect(),
        contravariant: false,
    };
    let monopole = Monopole::new(c.clone(), positive);
    let family = match &raw.family {
        None => CapacitorSpec::search_family(&monopole, &h, &e, &u),
        Some(entries) => {
            let mut family = vec![None; c.object_count()];
            let by_name: HashMap<&str, usize> = e_objects.iter().enumerate().map(|(i, &x)| (c.object_name(x), i)).collect();
            for entry in entries {
                let x = object(&entry.object)?;
                let unit = arrow(&entry.unit)?;
                let target = by_name
                    .get(c.object_name(c.tgt(unit)))
                    .copied()
                    .ok_or_else(|| Error::Malformed(format!("unit `{}` does not land in E", entry.unit)))?;
                if c.src(unit) != x {
                    return Err(Error::Malformed(format!("unit `{}` does not start at `{}`", entry.unit, entry.object)));
                }
                family[x] = Some(FamilyEntry { unit, object: target });
            }
            family
        }
    };
    Ok(CapacitorSpec {
        monopole,
        h,
        e,
        u,
        family,
    })
}
