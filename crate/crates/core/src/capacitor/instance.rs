use std::sync::Arc;

use super::{CapacitorSpec, FamilyEntry};
use crate::error::Result;
use crate::fincat::{ArrowId, ArrowSet, ConcreteCategory, Functor, MapArrow, ObjId};
use crate::hulls::terminal_in_comma;
use crate::polarity::Monopole;

/// Ingredients of a capacitor on a category of functions: `E` is carved out
/// of the universe by an object list and an arrow class.
pub struct ConcreteParts {
    pub universe: ConcreteCategory,
    pub positive: ArrowSet,
    pub h: ArrowSet,
    /// Objects of `E`, as objects of the universe.
    pub e_objects: Vec<ObjId>,
    /// Arrows of `E`, as arrows of the universe between `e_objects`.
    pub e_arrows: ArrowSet,
    /// Known units; `None` entries are searched for.
    pub units: Vec<Option<ArrowId>>,
    pub budget: usize,
}

#[derive(Clone, Debug)]
pub struct ConcreteCapacitor {
    pub universe: ConcreteCategory,
    pub e: ConcreteCategory,
    pub e_objects: Vec<ObjId>,
    /// For every arrow of `E`, the arrow of the universe it came from.
    pub e_arrows: Vec<ArrowId>,
    pub spec: CapacitorSpec,
}

impl ConcreteCapacitor {
    pub fn build(parts: ConcreteParts) -> Result<Self> {
        let ConcreteParts {
            universe,
            positive,
            h,
            e_objects,
            e_arrows,
            units,
            budget,
        } = parts;
        let c = &universe.category;
        let mut position = vec![None; c.object_count()];
        for (i, &x) in e_objects.iter().enumerate() {
            position[x] = Some(i);
        }
        let kept: Vec<ArrowId> = e_arrows
            .iter()
            .filter(|&f| position[c.src(f)].is_some() && position[c.tgt(f)].is_some())
            .collect();
        let maps = kept
            .iter()
            .map(|&f| MapArrow {
                src: position[c.src(f)].unwrap(),
                tgt: position[c.tgt(f)].unwrap(),
                values: universe.values(f).to_vec(),
            })
            .collect();
        let e = ConcreteCategory::build(
            e_objects
                .iter()
                .map(|&x| (c.object_name(x).to_string(), universe.sizes[x]))
                .collect(),
            maps,
            budget,
            |i, _| c.arrow_name(kept[i]).to_string(),
        )?;
        let u = Functor {
            object_map: e_objects.clone(),
            arrow_map: kept.iter().map(|&f| Some(f)).collect(),
            contravariant: false,
        };
        let monopole = Monopole::new(c.clone(), positive);
        let family = c
            .objects()
            .map(|x| match units.get(x).copied().flatten() {
                Some(unit) if position[c.tgt(unit)].is_some() => Some(FamilyEntry {
                    unit,
                    object: position[c.tgt(unit)].unwrap(),
                }),
                _ => terminal_in_comma(c, x, &e.category, &u, &h).map(|r| FamilyEntry {
                    unit: r.unit,
                    object: r.object,
                }),
            })
            .collect();
        let spec = CapacitorSpec {
            monopole,
            h,
            e: e.category.clone(),
            u,
            family,
        };
        Ok(Self {
            universe,
            e,
            e_objects,
            e_arrows: kept,
            spec,
        })
    }

    pub fn category(&self) -> &Arc<crate::fincat::FiniteCategory> {
        &self.universe.category
    }
}
