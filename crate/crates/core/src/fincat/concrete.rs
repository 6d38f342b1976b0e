//! Categories whose arrows are functions between finite carriers.

use std::collections::HashMap;
use std::sync::Arc;

use super::{Arrow, ArrowId, BuildOptions, FiniteCategory, ObjId};
use crate::error::{Error, Result};

/// A map between carriers `0..n`, given by its values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MapArrow {
    pub src: ObjId,
    pub tgt: ObjId,
    pub values: Vec<usize>,
}

/// A category of functions together with the function behind each arrow.
#[derive(Clone, Debug)]
pub struct ConcreteCategory {
    pub category: Arc<FiniteCategory>,
    pub sizes: Vec<usize>,
    pub maps: Vec<MapArrow>,
    index: HashMap<MapArrow, ArrowId>,
}

impl ConcreteCategory {
    /// `objects` are `(name, carrier size)`; `maps` must be closed under
    /// composition and contain every identity. Arrows are named by
    /// `name(i, map)`.
    pub fn build(
        objects: Vec<(String, usize)>,
        maps: Vec<MapArrow>,
        budget: usize,
        name: impl Fn(ArrowId, &MapArrow) -> String,
    ) -> Result<Self> {
        if maps.len() > budget {
            return Err(Error::BudgetExceeded {
                arrows: maps.len(),
                budget,
            });
        }
        let sizes: Vec<usize> = objects.iter().map(|o| o.1).collect();
        let mut index = HashMap::with_capacity(maps.len());
        for (i, m) in maps.iter().enumerate() {
            if m.values.len() != sizes[m.src] || m.values.iter().any(|&v| v >= sizes[m.tgt]) {
                return Err(Error::Malformed(format!("map {i} does not fit its carriers")));
            }
            if index.insert(m.clone(), i).is_some() {
                return Err(Error::Malformed(format!("map {i} is listed twice")));
            }
        }
        let identities = (0..objects.len())
            .map(|x| {
                let id = MapArrow {
                    src: x,
                    tgt: x,
                    values: (0..sizes[x]).collect(),
                };
                index
                    .get(&id)
                    .copied()
                    .ok_or_else(|| Error::Malformed(format!("identity of `{}` missing", objects[x].0)))
            })
            .collect::<Result<Vec<_>>>()?;
        let arrows = maps
            .iter()
            .enumerate()
            .map(|(i, m)| Arrow {
                name: name(i, m),
                src: m.src,
                tgt: m.tgt,
            })
            .collect();
        let mut scratch = MapArrow {
            src: 0,
            tgt: 0,
            values: Vec::new(),
        };
        let category = FiniteCategory::from_table(
            objects.into_iter().map(|o| o.0).collect(),
            arrows,
            identities,
            |g, f| {
                let (mg, mf) = (&maps[g], &maps[f]);
                scratch.src = mf.src;
                scratch.tgt = mg.tgt;
                scratch.values.clear();
                scratch.values.extend(mf.values.iter().map(|&v| mg.values[v]));
                index.get(&scratch).copied()
            },
            BuildOptions::trusted(budget),
        )?;
        Ok(Self {
            category: Arc::new(category),
            sizes,
            maps,
            index,
        })
    }

    pub fn lookup(&self, src: ObjId, tgt: ObjId, values: &[usize]) -> Option<ArrowId> {
        self.index
            .get(&MapArrow {
                src,
                tgt,
                values: values.to_vec(),
            })
            .copied()
    }

    pub fn values(&self, f: ArrowId) -> &[usize] {
        &self.maps[f].values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_on_two_points() {
        // all four self-maps of a 2-element set
        let maps = [[0, 1], [0, 0], [1, 1], [1, 0]]
            .iter()
            .map(|v| MapArrow {
                src: 0,
                tgt: 0,
                values: v.to_vec(),
            })
            .collect();
        let c = ConcreteCategory::build(vec![("2".into(), 2)], maps, 100, |i, _| format!("m{i}")).unwrap();
        assert_eq!(c.category.identity(0), 0);
        assert_eq!(c.category.compose(3, 3), 0);
        assert_eq!(c.category.compose(1, 3), 1);
        assert!(c.category.validate().is_valid());
    }

    #[test]
    fn missing_composite_is_rejected() {
        let maps = [[0, 1], [1, 0], [0, 0]]
            .iter()
            .map(|v| MapArrow {
                src: 0,
                tgt: 0,
                values: v.to_vec(),
            })
            .collect();
        let err = ConcreteCategory::build(vec![("2".into(), 2)], maps, 100, |i, _| format!("m{i}"));
        assert!(matches!(err, Err(Error::InvalidCategory(_))));
    }
}
