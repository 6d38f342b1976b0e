use serde::Serialize;

use super::{ArrowId, ArrowSet, FiniteCategory, ObjId};
use crate::error::{Error, Result};

/// A functor between finite categories, possibly contravariant, possibly
/// defined only on a wide subcategory of its domain (`arrow_map[f] == None`
/// outside it).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Functor {
    pub object_map: Vec<ObjId>,
    pub arrow_map: Vec<Option<ArrowId>>,
    pub contravariant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FunctorViolation {
    ShapeMismatch { detail: String },
    Undefined { arrow: ArrowId },
    Typing { arrow: ArrowId, image: ArrowId },
    Identity { object: ObjId },
    Composition { g: ArrowId, f: ArrowId },
}

impl Functor {
    pub fn identity(c: &FiniteCategory) -> Self {
        Self {
            object_map: c.objects().collect(),
            arrow_map: c.arrow_ids().map(Some).collect(),
            contravariant: false,
        }
    }

    /// Identity on objects, defined on the arrows of `sub` only.
    pub fn inclusion(c: &FiniteCategory, sub: &ArrowSet) -> Self {
        Self {
            object_map: c.objects().collect(),
            arrow_map: c.arrow_ids().map(|f| sub.contains(f).then_some(f)).collect(),
            contravariant: false,
        }
    }

    pub fn object(&self, x: ObjId) -> ObjId {
        self.object_map[x]
    }

    pub fn arrow(&self, f: ArrowId) -> Option<ArrowId> {
        self.arrow_map[f]
    }

    pub fn defined_on(&self, domain: &FiniteCategory) -> ArrowSet {
        ArrowSet::from_predicate(domain.arrow_count(), |f| self.arrow_map[f].is_some())
    }

    /// Checks typing, identities and composition on the arrows where the
    /// functor is defined; `required` lists arrows on which it must be defined.
    pub fn validate(
        &self,
        domain: &FiniteCategory,
        codomain: &FiniteCategory,
        required: Option<&ArrowSet>,
    ) -> Vec<FunctorViolation> {
        let mut out = Vec::new();
        if self.object_map.len() != domain.object_count() || self.arrow_map.len() != domain.arrow_count() {
            out.push(FunctorViolation::ShapeMismatch {
                detail: format!(
                    "maps cover {} objects and {} arrows, domain has {} and {}",
                    self.object_map.len(),
                    self.arrow_map.len(),
                    domain.object_count(),
                    domain.arrow_count()
                ),
            });
            return out;
        }
        if let Some(&bad) = self.object_map.iter().find(|&&y| y >= codomain.object_count()) {
            out.push(FunctorViolation::ShapeMismatch {
                detail: format!("object image {bad} outside the codomain"),
            });
            return out;
        }
        if let Some(req) = required {
            for f in req.iter() {
                if self.arrow_map[f].is_none() {
                    out.push(FunctorViolation::Undefined { arrow: f });
                }
            }
        }
        for f in domain.arrow_ids() {
            let Some(img) = self.arrow_map[f] else { continue };
            if img >= codomain.arrow_count() {
                out.push(FunctorViolation::Typing { arrow: f, image: img });
                continue;
            }
            let (s, t) = (self.object_map[domain.src(f)], self.object_map[domain.tgt(f)]);
            let ok = if self.contravariant {
                codomain.src(img) == t && codomain.tgt(img) == s
            } else {
                codomain.src(img) == s && codomain.tgt(img) == t
            };
            if !ok {
                out.push(FunctorViolation::Typing { arrow: f, image: img });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in domain.objects() {
            match self.arrow_map[domain.identity(x)] {
                Some(i) if i == codomain.identity(self.object_map[x]) => {}
                Some(_) => out.push(FunctorViolation::Identity { object: x }),
                None => {}
            }
        }
        for f in domain.arrow_ids() {
            let Some(ff) = self.arrow_map[f] else { continue };
            for z in domain.objects() {
                for &g in domain.hom(domain.tgt(f), z) {
                    let (Some(fg), Some(fgf)) = (self.arrow_map[g], self.arrow_map[domain.compose(g, f)]) else {
                        continue;
                    };
                    let expected = if self.contravariant {
                        codomain.compose(ff, fg)
                    } else {
                        codomain.compose(fg, ff)
                    };
                    if expected != fgf {
                        out.push(FunctorViolation::Composition { g, f });
                    }
                }
            }
        }
        out
    }

    /// Faithful: injective on every hom-set where defined.
    pub fn is_faithful(&self, domain: &FiniteCategory) -> bool {
        for x in domain.objects() {
            for y in domain.objects() {
                let mut seen = std::collections::HashSet::new();
                for &f in domain.hom(x, y) {
                    if let Some(img) = self.arrow_map[f] {
                        if !seen.insert(img) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// `G∘F`; the composite is contravariant iff exactly one factor is.
pub fn compose_functors(f: &Functor, g: &Functor) -> Result<Functor> {
    if let Some(&bad) = f.object_map.iter().find(|&&y| y >= g.object_map.len()) {
        return Err(Error::Mismatch(format!(
            "first functor sends an object to {bad}, second is defined on {} objects",
            g.object_map.len()
        )));
    }
    let arrow_map = f
        .arrow_map
        .iter()
        .map(|&a| match a {
            None => Ok(None),
            Some(a) if a < g.arrow_map.len() => Ok(g.arrow_map[a]),
            Some(a) => Err(Error::Mismatch(format!("arrow image {a} outside the second functor's domain"))),
        })
        .collect::<Result<_>>()?;
    Ok(Functor {
        object_map: f.object_map.iter().map(|&y| g.object_map[y]).collect(),
        arrow_map,
        contravariant: f.contravariant != g.contravariant,
    })
}
