use std::fmt;

use serde::{Deserialize, Serialize};

use super::ArrowSet;
use crate::error::{Error, Result};

pub type ObjId = usize;
pub type ArrowId = usize;

/// Arrow budget applied when no explicit budget is configured.
pub const DEFAULT_ARROW_BUDGET: usize = 20_000;

const MISSING: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub budget: usize,
    /// Check associativity on every composable triple. Categories of
    /// functions are associative by construction and skip this.
    pub check_associativity: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_ARROW_BUDGET,
            check_associativity: true,
        }
    }
}

impl BuildOptions {
    pub fn trusted(budget: usize) -> Self {
        Self {
            budget,
            check_associativity: false,
        }
    }
}

/// One violated category axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    UnknownName { name: String },
    DuplicateName { name: String },
    MissingIdentity { object: String },
    IdentityNotEndo { object: String, arrow: String },
    MissingComposite { g: String, f: String },
    NotComposable { g: String, f: String },
    CompositeTyping { g: String, f: String, gf: String },
    LeftIdentity { arrow: String },
    RightIdentity { arrow: String },
    Associativity { h: String, g: String, f: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownName { name } => write!(out, "unknown name `{name}`"),
            Violation::DuplicateName { name } => write!(out, "duplicate name `{name}`"),
            Violation::MissingIdentity { object } => write!(out, "object `{object}` has no identity"),
            Violation::IdentityNotEndo { object, arrow } => {
                write!(out, "identity `{arrow}` of `{object}` is not an endomorphism of it")
            }
            Violation::MissingComposite { g, f } => write!(out, "composite {g}∘{f} is missing"),
            Violation::NotComposable { g, f } => {
                write!(out, "composite {g}∘{f} given for a non-composable pair")
            }
            Violation::CompositeTyping { g, f, gf } => {
                write!(out, "composite {g}∘{f} = {gf} has the wrong source or target")
            }
            Violation::LeftIdentity { arrow } => write!(out, "id∘{arrow} ≠ {arrow}"),
            Violation::RightIdentity { arrow } => write!(out, "{arrow}∘id ≠ {arrow}"),
            Violation::Associativity { h, g, f } => {
                write!(out, "({h}∘{g})∘{f} ≠ {h}∘({g}∘{f})")
            }
        }
    }
}

/// Every violated axiom found while checking a category table.
/// Empty iff the table is a category.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(out, "  - {v}")?;
        }
        Ok(())
    }
}

/// An explicitly finite category.
///
/// Arrows are grouped into hom-sets and composition is a dense table with one
/// block per composable pair of hom-sets, so `compose` is a constant-time
/// lookup.
#[derive(Clone)]
pub struct FiniteCategory {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<ArrowId>,
    homs: Vec<Vec<ArrowId>>,
    local: Vec<u32>,
    offsets: Vec<usize>,
    table: Vec<u32>,
}

impl fmt::Debug for FiniteCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteCategory")
            .field("objects", &self.objects.len())
            .field("arrows", &self.arrows.len())
            .finish()
    }
}

impl PartialEq for FiniteCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.arrows == other.arrows
            && self.identities == other.identities
            && self.homs == other.homs
            && self.table == other.table
    }
}

impl FiniteCategory {
    /// Builds a category from explicit data. `compose(g, f)` is queried for
    /// every composable pair and must return the id of `g∘f`.
    pub fn from_table(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<ArrowId>,
        compose: impl FnMut(ArrowId, ArrowId) -> Option<ArrowId>,
        options: BuildOptions,
    ) -> Result<Self> {
        if arrows.len() > options.budget {
            return Err(Error::BudgetExceeded {
                arrows: arrows.len(),
                budget: options.budget,
            });
        }
        let (cat, report) = Self::assemble(objects, arrows, identities, compose, options.check_associativity)?;
        if report.is_valid() {
            Ok(cat)
        } else {
            Err(Error::InvalidCategory(report))
        }
    }

    fn assemble(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<ArrowId>,
        mut compose: impl FnMut(ArrowId, ArrowId) -> Option<ArrowId>,
        check_associativity: bool,
    ) -> Result<(Self, ValidationReport)> {
        let n = objects.len();
        if identities.len() != n {
            return Err(Error::Malformed(format!(
                "{} identities for {} objects",
                identities.len(),
                n
            )));
        }
        for (id, a) in arrows.iter().enumerate() {
            if a.src >= n || a.tgt >= n {
                return Err(Error::Malformed(format!("arrow {id} has an out-of-range endpoint")));
            }
        }
        let mut homs = vec![Vec::new(); n * n];
        let mut local = vec![0u32; arrows.len()];
        for (id, a) in arrows.iter().enumerate() {
            let hom = &mut homs[a.src * n + a.tgt];
            local[id] = hom.len() as u32;
            hom.push(id);
        }
        let mut offsets = vec![0usize; n * n * n];
        let mut total = 0usize;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    offsets[(x * n + y) * n + z] = total;
                    total += homs[x * n + y].len() * homs[y * n + z].len();
                }
            }
        }
        let mut cat = FiniteCategory {
            objects,
            arrows,
            identities,
            homs,
            local,
            offsets,
            table: vec![MISSING; total],
        };
        let mut report = ValidationReport::default();
        for x in 0..n {
            let i = cat.identities[x];
            if i >= cat.arrows.len() {
                report.violations.push(Violation::MissingIdentity {
                    object: cat.objects[x].clone(),
                });
            } else if cat.arrows[i].src != x || cat.arrows[i].tgt != x {
                report.violations.push(Violation::IdentityNotEndo {
                    object: cat.objects[x].clone(),
                    arrow: cat.arrows[i].name.clone(),
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let base = cat.offsets[(x * n + y) * n + z];
                    let fs = cat.homs[x * n + y].len();
                    for (lg, &g) in cat.homs[y * n + z].iter().enumerate() {
                        for (lf, &f) in cat.homs[x * n + y].iter().enumerate() {
                            match compose(g, f) {
                                Some(gf) if gf < cat.arrows.len() && cat.arrows[gf].src == x && cat.arrows[gf].tgt == z => {
                                    cat.table[base + lg * fs + lf] = gf as u32;
                                }
                                Some(gf) => report.violations.push(Violation::CompositeTyping {
                                    g: cat.arrows[g].name.clone(),
                                    f: cat.arrows[f].name.clone(),
                                    gf: cat.arrows.get(gf).map(|a| a.name.clone()).unwrap_or_else(|| gf.to_string()),
                                }),
                                None => report.violations.push(Violation::MissingComposite {
                                    g: cat.arrows[g].name.clone(),
                                    f: cat.arrows[f].name.clone(),
                                }),
                            }
                        }
                    }
                }
            }
        }
        if report.is_valid() {
            report = cat.check_laws(check_associativity);
        }
        Ok((cat, report))
    }

    fn check_laws(&self, check_associativity: bool) -> ValidationReport {
        let mut report = ValidationReport::default();
        for f in 0..self.arrows.len() {
            let a = &self.arrows[f];
            if self.compose(self.identities[a.tgt], f) != f {
                report.violations.push(Violation::LeftIdentity { arrow: a.name.clone() });
            }
            if self.compose(f, self.identities[a.src]) != f {
                report.violations.push(Violation::RightIdentity { arrow: a.name.clone() });
            }
        }
        if check_associativity {
            for f in 0..self.arrows.len() {
                let y = self.arrows[f].tgt;
                for z in 0..self.object_count() {
                    for &g in self.hom(y, z) {
                        let gf = self.compose(g, f);
                        for w in 0..self.object_count() {
                            for &h in self.hom(z, w) {
                                if self.compose(h, gf) != self.compose(self.compose(h, g), f) {
                                    report.violations.push(Violation::Associativity {
                                        h: self.arrows[h].name.clone(),
                                        g: self.arrows[g].name.clone(),
                                        f: self.arrows[f].name.clone(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        report
    }

    /// Re-checks every axiom, associativity included.
    pub fn validate(&self) -> ValidationReport {
        self.check_laws(true)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + '_ {
        0..self.objects.len()
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        0..self.arrows.len()
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn arrow(&self, f: ArrowId) -> &Arrow {
        &self.arrows[f]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_name(&self, f: ArrowId) -> &str {
        &self.arrows[f].name
    }

    pub fn src(&self, f: ArrowId) -> ObjId {
        self.arrows[f].src
    }

    pub fn tgt(&self, f: ArrowId) -> ObjId {
        self.arrows[f].tgt
    }

    pub fn identity(&self, x: ObjId) -> ArrowId {
        self.identities[x]
    }

    pub fn is_identity(&self, f: ArrowId) -> bool {
        self.identities[self.arrows[f].src] == f
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[ArrowId] {
        &self.homs[x * self.objects.len() + y]
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn find_arrow(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn check_arrow(&self, f: ArrowId) -> Result<()> {
        if f < self.arrows.len() {
            Ok(())
        } else {
            Err(Error::UnknownArrow(f))
        }
    }

    pub fn check_object(&self, x: ObjId) -> Result<()> {
        if x < self.objects.len() {
            Ok(())
        } else {
            Err(Error::UnknownObject(x))
        }
    }

    /// `g∘f`. Panics in debug builds if the pair is not composable.
    pub fn compose(&self, g: ArrowId, f: ArrowId) -> ArrowId {
        let fa = &self.arrows[f];
        let ga = &self.arrows[g];
        debug_assert_eq!(fa.tgt, ga.src, "compose on a non-composable pair");
        let n = self.objects.len();
        let base = self.offsets[(fa.src * n + fa.tgt) * n + ga.tgt];
        let fs = self.homs[fa.src * n + fa.tgt].len();
        self.table[base + self.local[g] as usize * fs + self.local[f] as usize] as ArrowId
    }

    pub fn try_compose(&self, g: ArrowId, f: ArrowId) -> Option<ArrowId> {
        (g < self.arrows.len() && f < self.arrows.len() && self.arrows[f].tgt == self.arrows[g].src)
            .then(|| self.compose(g, f))
    }

    /// Composes a path given in diagrammatic order reversed: `[h, g, f]` is `h∘g∘f`.
    pub fn compose_all(&self, path: &[ArrowId]) -> ArrowId {
        let (&last, rest) = path.split_last().expect("empty path");
        rest.iter().rev().fold(last, |acc, &g| self.compose(g, acc))
    }

    /// The category with every arrow reversed. Arrow and object ids are kept.
    pub fn opposite(&self) -> FiniteCategory {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                src: a.tgt,
                tgt: a.src,
            })
            .collect();
        let (cat, report) = Self::assemble(
            self.objects.clone(),
            arrows,
            self.identities.clone(),
            |g, f| Some(self.compose(f, g)),
            false,
        )
        .expect("opposite of a valid category is well-formed");
        debug_assert!(report.is_valid());
        cat
    }

    /// The full subcategory on the given objects together with the map from
    /// its arrow ids to arrow ids of `self`.
    pub fn full_subcategory(&self, objects: &[ObjId]) -> (FiniteCategory, Vec<ArrowId>) {
        let mut arrows = Vec::new();
        let mut back = Vec::new();
        let mut forward = vec![usize::MAX; self.arrow_count()];
        for (i, &x) in objects.iter().enumerate() {
            for (j, &y) in objects.iter().enumerate() {
                for &f in self.hom(x, y) {
                    forward[f] = arrows.len();
                    arrows.push(Arrow {
                        name: self.arrows[f].name.clone(),
                        src: i,
                        tgt: j,
                    });
                    back.push(f);
                }
            }
        }
        let names = objects.iter().map(|&x| self.objects[x].clone()).collect();
        let identities = objects.iter().map(|&x| forward[self.identity(x)]).collect();
        let (cat, _) = Self::assemble(names, arrows, identities, |g, f| Some(forward[self.compose(back[g], back[f])]), false)
            .expect("full subcategory is well-formed");
        (cat, back)
    }

    /// The subcategory on `objects` whose arrows are the listed ones; fails
    /// unless identities are listed and the arrows are closed under
    /// composition.
    pub fn subcategory(&self, objects: &[ObjId], arrows: &ArrowSet) -> Result<(FiniteCategory, Vec<ArrowId>)> {
        let mut position = vec![None; self.object_count()];
        for (i, &x) in objects.iter().enumerate() {
            position[x] = Some(i);
        }
        let back: Vec<ArrowId> = arrows
            .iter()
            .filter(|&f| position[self.src(f)].is_some() && position[self.tgt(f)].is_some())
            .collect();
        let mut forward = vec![None; self.arrow_count()];
        for (i, &f) in back.iter().enumerate() {
            forward[f] = Some(i);
        }
        let kept = back
            .iter()
            .map(|&f| Arrow {
                name: self.arrows[f].name.clone(),
                src: position[self.src(f)].unwrap(),
                tgt: position[self.tgt(f)].unwrap(),
            })
            .collect();
        let identities = objects
            .iter()
            .map(|&x| {
                forward[self.identity(x)]
                    .ok_or_else(|| Error::Malformed(format!("identity of `{}` is not listed", self.objects[x])))
            })
            .collect::<Result<Vec<_>>>()?;
        let names = objects.iter().map(|&x| self.objects[x].clone()).collect();
        let cat = Self::from_table(names, kept, identities, |g, f| forward[self.compose(back[g], back[f])], BuildOptions::trusted(self.arrow_count()))?;
        Ok((cat, back))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The walking arrow `a → b`.
    fn walking_arrow() -> FiniteCategory {
        let objects = vec!["a".to_string(), "b".to_string()];
        let arrows = vec![
            Arrow { name: "1a".into(), src: 0, tgt: 0 },
            Arrow { name: "1b".into(), src: 1, tgt: 1 },
            Arrow { name: "u".into(), src: 0, tgt: 1 },
        ];
        FiniteCategory::from_table(
            objects,
            arrows,
            vec![0, 1],
            |g, f| Some(if g == 0 || g == 1 { f } else { g }),
            BuildOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn one_object_one_arrow_is_valid() {
        let c = FiniteCategory::from_table(
            vec!["*".into()],
            vec![Arrow { name: "id".into(), src: 0, tgt: 0 }],
            vec![0],
            |_, _| Some(0),
            BuildOptions::default(),
        )
        .unwrap();
        assert!(c.validate().is_valid());
        assert_eq!(c.compose(0, 0), 0);
    }

    #[test]
    fn broken_associativity_is_listed() {
        // a∘a = b, a∘b = a, b∘a = b, b∘b = a: (a∘a)∘b = a but a∘(a∘b) = b.
        let table = |g: usize, f: usize| -> usize {
            match (g, f) {
                (0, x) | (x, 0) => x,
                (1, 1) => 2,
                (1, 2) => 1,
                (2, 1) => 2,
                (2, 2) => 1,
                _ => unreachable!(),
            }
        };
        let arrows = (0..3)
            .map(|i| Arrow { name: ["1", "a", "b"][i].into(), src: 0, tgt: 0 })
            .collect();
        let err = FiniteCategory::from_table(vec!["*".into()], arrows, vec![0], |g, f| Some(table(g, f)), BuildOptions::default())
            .unwrap_err();
        match err {
            Error::InvalidCategory(report) => {
                assert!(report
                    .violations
                    .iter()
                    .any(|v| matches!(v, Violation::Associativity { .. })));
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn missing_composite_is_reported() {
        let arrows = vec![
            Arrow { name: "1".into(), src: 0, tgt: 0 },
            Arrow { name: "e".into(), src: 0, tgt: 0 },
        ];
        let err = FiniteCategory::from_table(
            vec!["*".into()],
            arrows,
            vec![0],
            |g, f| match (g, f) {
                (1, 1) => None,
                (0, x) | (x, 0) => Some(x),
                _ => None,
            },
            BuildOptions::default(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("e∘e is missing"));
    }

    #[test]
    fn budget_is_enforced() {
        let err = FiniteCategory::from_table(
            vec!["*".into()],
            vec![Arrow { name: "1".into(), src: 0, tgt: 0 }],
            vec![0],
            |_, _| Some(0),
            BuildOptions { budget: 0, check_associativity: true },
        )
        .unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { arrows: 1, budget: 0 }));
    }

    #[test]
    fn opposite_is_an_involution() {
        let c = walking_arrow();
        let op = c.opposite();
        assert_eq!(op.src(2), 1);
        assert_eq!(op.hom(1, 0), &[2]);
        assert!(op.validate().is_valid());
        assert_eq!(op.opposite(), c);
    }

    #[test]
    fn full_subcategory_keeps_composition() {
        let c = walking_arrow();
        let (sub, back) = c.full_subcategory(&[1]);
        assert_eq!(sub.arrow_count(), 1);
        assert_eq!(back, vec![1]);
        assert!(sub.validate().is_valid());
    }
}
