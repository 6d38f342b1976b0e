//! Category interchange format.
//!
//! ```json
//! { "objects": ["a"], "arrows": [{"id": "1a", "src": "a", "tgt": "a"}],
//!   "compose": [{"g": "1a", "f": "1a", "gf": "1a"}], "identities": {"a": "1a"} }
//! ```

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::category::{Arrow, BuildOptions, FiniteCategory, ValidationReport, Violation};
use super::ArrowId;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEntry {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComposeEntry {
    pub g: String,
    pub f: String,
    pub gf: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryData {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
    pub compose: Vec<ComposeEntry>,
    pub identities: BTreeMap<String, String>,
}

struct Resolved {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<ArrowId>,
    table: HashMap<(ArrowId, ArrowId), ArrowId>,
}

impl CategoryData {
    fn resolve(&self) -> (Resolved, Vec<Violation>) {
        let mut violations = Vec::new();
        let mut obj_ids = HashMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            if obj_ids.insert(o.as_str(), i).is_some() {
                violations.push(Violation::DuplicateName { name: o.clone() });
            }
        }
        let mut arrow_ids = HashMap::new();
        let mut arrows = Vec::new();
        for a in &self.arrows {
            let (Some(&src), Some(&tgt)) = (obj_ids.get(a.src.as_str()), obj_ids.get(a.tgt.as_str())) else {
                for end in [&a.src, &a.tgt] {
                    if !obj_ids.contains_key(end.as_str()) {
                        violations.push(Violation::UnknownName { name: end.clone() });
                    }
                }
                continue;
            };
            if arrow_ids.insert(a.id.as_str(), arrows.len()).is_some() {
                violations.push(Violation::DuplicateName { name: a.id.clone() });
                continue;
            }
            arrows.push(Arrow { name: a.id.clone(), src, tgt });
        }
        let mut identities = vec![usize::MAX; self.objects.len()];
        for (o, a) in &self.identities {
            match (obj_ids.get(o.as_str()), arrow_ids.get(a.as_str())) {
                (Some(&x), Some(&f)) => identities[x] = f,
                (None, _) => violations.push(Violation::UnknownName { name: o.clone() }),
                (_, None) => violations.push(Violation::UnknownName { name: a.clone() }),
            }
        }
        let mut table = HashMap::new();
        for c in &self.compose {
            let ids: Vec<_> = [&c.g, &c.f, &c.gf]
                .into_iter()
                .map(|n| {
                    let id = arrow_ids.get(n.as_str()).copied();
                    if id.is_none() {
                        violations.push(Violation::UnknownName { name: n.clone() });
                    }
                    id
                })
                .collect();
            if let [Some(g), Some(f), Some(gf)] = ids[..] {
                if arrows[f].tgt != arrows[g].src {
                    violations.push(Violation::NotComposable { g: c.g.clone(), f: c.f.clone() });
                }
                table.insert((g, f), gf);
            }
        }
        (
            Resolved {
                objects: self.objects.clone(),
                arrows,
                identities,
                table,
            },
            violations,
        )
    }

    /// Lists every violated axiom; empty iff the data describes a category.
    pub fn validate(&self) -> ValidationReport {
        let (r, mut violations) = self.resolve();
        match FiniteCategory::from_table(
            r.objects,
            r.arrows,
            r.identities,
            |g, f| r.table.get(&(g, f)).copied(),
            BuildOptions {
                budget: usize::MAX,
                check_associativity: true,
            },
        ) {
            Ok(_) => {}
            Err(Error::InvalidCategory(report)) => violations.extend(report.violations),
            Err(e) => violations.push(Violation::UnknownName { name: e.to_string() }),
        }
        ValidationReport { violations }
    }

    pub fn to_category(&self, budget: usize) -> Result<FiniteCategory> {
        let (r, violations) = self.resolve();
        if !violations.is_empty() {
            return Err(Error::InvalidCategory(ValidationReport { violations }));
        }
        FiniteCategory::from_table(
            r.objects,
            r.arrows,
            r.identities,
            |g, f| r.table.get(&(g, f)).copied(),
            BuildOptions {
                budget,
                check_associativity: true,
            },
        )
    }

    pub fn from_category(c: &FiniteCategory) -> Self {
        let objects = c.object_names().to_vec();
        let arrows = c
            .arrow_ids()
            .map(|f| ArrowEntry {
                id: c.arrow_name(f).to_string(),
                src: c.object_name(c.src(f)).to_string(),
                tgt: c.object_name(c.tgt(f)).to_string(),
            })
            .collect();
        let mut compose = Vec::new();
        for f in c.arrow_ids() {
            for z in c.objects() {
                for &g in c.hom(c.tgt(f), z) {
                    compose.push(ComposeEntry {
                        g: c.arrow_name(g).to_string(),
                        f: c.arrow_name(f).to_string(),
                        gf: c.arrow_name(c.compose(g, f)).to_string(),
                    });
                }
            }
        }
        let identities = c
            .objects()
            .map(|x| (c.object_name(x).to_string(), c.arrow_name(c.identity(x)).to_string()))
            .collect();
        CategoryData {
            objects,
            arrows,
            compose,
            identities,
        }
    }
}

/// Validation of interchange data, by name.
pub fn validate_category(data: &CategoryData) -> ValidationReport {
    data.validate()
}
