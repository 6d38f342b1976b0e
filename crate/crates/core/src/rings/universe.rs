use rayon::prelude::*;

use super::{
    find_isomorphism, image, is_essential_ideal, is_ideal, is_injective, is_non_degenerate, is_unital_hom,
    multiplier_ring, ring_homs, FinRing,
};
use crate::capacitor::{ConcreteCapacitor, ConcreteParts};
use crate::error::{Error, Result};
use crate::fincat::{ArrowSet, ConcreteCategory, MapArrow, ObjId};
use crate::polarity::Monopole;

/// Listed rings, one per isomorphism class, with every ring homomorphism.
#[derive(Clone, Debug)]
pub struct RingUniverse {
    pub rings: Vec<FinRing>,
    pub concrete: ConcreteCategory,
    /// Positives are the injective homomorphisms with ideal image.
    pub monopole: Monopole,
}

fn dedup(rings: &[(String, FinRing)]) -> Vec<(String, FinRing)> {
    let mut out: Vec<(String, FinRing)> = Vec::new();
    for (name, r) in rings {
        if !out.iter().any(|(_, s)| find_isomorphism(r, s).is_some()) {
            out.push((name.clone(), r.clone()));
        }
    }
    out
}

pub fn materialize_ring_universe(rings: &[(String, FinRing)], budget: usize) -> Result<RingUniverse> {
    if let Some((name, _)) = rings.iter().find(|(_, r)| !is_non_degenerate(r)) {
        return Err(Error::Precondition(format!("ring `{name}` is degenerate")));
    }
    let listed = dedup(rings);
    let n = listed.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let homs: Vec<Vec<MapArrow>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            ring_homs(&listed[i].1, &listed[j].1)
                .into_iter()
                .map(|values| MapArrow { src: i, tgt: j, values })
                .collect()
        })
        .collect();
    let total: usize = homs.iter().map(Vec::len).sum();
    if total > budget {
        return Err(Error::BudgetExceeded { arrows: total, budget });
    }
    let names: Vec<String> = listed.iter().map(|(name, _)| name.clone()).collect();
    let concrete = ConcreteCategory::build(
        listed.iter().map(|(name, r)| (name.clone(), r.len())).collect(),
        homs.into_iter().flatten().collect(),
        budget,
        |_, m| {
            let v: Vec<String> = m.values.iter().map(|x| x.to_string()).collect();
            format!("{}→{}[{}]", names[m.src], names[m.tgt], v.join(","))
        },
    )?;
    let rings: Vec<FinRing> = listed.into_iter().map(|(_, r)| r).collect();
    let positive = ArrowSet::from_predicate(concrete.category.arrow_count(), |f| {
        let m = &concrete.maps[f];
        is_injective(&m.values) && is_ideal(&rings[m.tgt], image(&m.values))
    });
    Ok(RingUniverse {
        rings,
        monopole: Monopole::new(concrete.category.clone(), positive),
        concrete,
    })
}

/// The ring capacitor: positives are injective homomorphisms with ideal
/// image, `H` those with essential ideal image, `E` the unital rings with
/// unital homomorphisms, units the canonical maps into multiplier rings.
#[derive(Clone, Debug)]
pub struct RingCapacitor {
    pub rings: Vec<FinRing>,
    pub inserted: Vec<ObjId>,
    pub completion_of: Vec<Option<ObjId>>,
    pub capacitor: ConcreteCapacitor,
}

pub fn build_ring_capacitor(rings: &[(String, FinRing)], close_completions: bool, budget: usize) -> Result<RingCapacitor> {
    let mut listed = dedup(rings);
    let multipliers = listed.iter().map(|(_, r)| multiplier_ring(r)).collect::<Result<Vec<_>>>()?;
    let mut inserted = Vec::new();
    if close_completions {
        for (k, m) in multipliers.iter().enumerate() {
            if !listed.iter().any(|(_, r)| find_isomorphism(&m.ring, r).is_some()) {
                inserted.push(listed.len());
                listed.push((format!("M({})", listed[k].0), m.ring.clone()));
            }
        }
    }
    let universe = materialize_ring_universe(&listed, budget)?;
    let rings = universe.rings;
    let concrete = universe.concrete;
    let c = concrete.category.clone();
    let mut completion_of = Vec::with_capacity(rings.len());
    let mut units = Vec::with_capacity(rings.len());
    for (i, r) in rings.iter().enumerate() {
        let m = multiplier_ring(r)?;
        // Among the isomorphisms onto the listed copy of M(R), take the one
        // giving the lexicographically least unit, so unital rings get the
        // identity.
        let found = rings.iter().enumerate().find_map(|(t, s)| {
            find_isomorphism(&m.ring, s)?;
            ring_homs(&m.ring, s)
                .into_iter()
                .filter(|f| is_injective(f))
                .map(|iso| m.embedding.iter().map(|&e| iso[e]).collect::<Vec<usize>>())
                .min()
                .map(|values| (t, values))
        });
        completion_of.push(found.as_ref().map(|(t, _)| *t));
        units.push(found.and_then(|(t, values)| concrete.lookup(i, t, &values)));
    }
    let n = c.arrow_count();
    let positive = universe.monopole.positive;
    let h = ArrowSet::from_predicate(n, |f| {
        let m = &concrete.maps[f];
        positive.contains(f) && is_essential_ideal(&rings[m.tgt], image(&m.values))
    });
    let e_objects: Vec<ObjId> = (0..rings.len()).filter(|&i| rings[i].unit().is_some()).collect();
    let e_arrows = ArrowSet::from_predicate(n, |f| {
        let m = &concrete.maps[f];
        e_objects.contains(&m.src) && e_objects.contains(&m.tgt) && is_unital_hom(&rings[m.src], &rings[m.tgt], &m.values)
    });
    let capacitor = ConcreteCapacitor::build(ConcreteParts {
        universe: concrete,
        positive,
        h,
        e_objects,
        e_arrows,
        units,
        budget,
    })?;
    Ok(RingCapacitor {
        rings,
        inserted,
        completion_of,
        capacitor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capacitor::{derive_negative_class, verify_capacitor, verify_theorem_main};
    use crate::fincat::DEFAULT_ARROW_BUDGET;
    use crate::rings::is_non_degenerate_hom;

    #[test]
    fn field_of_two_is_a_trivial_capacitor() {
        let built = build_ring_capacitor(&[("F2".into(), FinRing::zn(2))], true, 1000).unwrap();
        assert!(built.inserted.is_empty());
        assert!(verify_capacitor(&built.capacitor.spec).is_valid());
        assert_eq!(verify_theorem_main(&built.capacitor.spec).unwrap().summary(), "theorem_main: 12/12");
    }

    #[test]
    fn degenerate_rings_are_rejected() {
        assert!(materialize_ring_universe(&[("Z".into(), FinRing::zero_mul(2))], 1000).is_err());
    }

    #[test]
    fn column_ring_universe() {
        let rings = vec![
            ("F2".into(), FinRing::zn(2)),
            ("F2xF2".into(), FinRing::f2_power(2)),
            ("col".into(), FinRing::column_ring()),
        ];
        let built = build_ring_capacitor(&rings, true, DEFAULT_ARROW_BUDGET).unwrap();
        assert_eq!(built.inserted, vec![3]);
        let report = verify_capacitor(&built.capacitor.spec);
        assert!(report.is_valid(), "{report:?}");
        let negative = derive_negative_class(&built.capacitor.spec).unwrap();
        let concrete = &built.capacitor.universe;
        for f in 0..concrete.category.arrow_count() {
            let m = &concrete.maps[f];
            let unital = built.rings[m.src].unit().is_some() && built.rings[m.tgt].unit().is_some();
            if unital {
                assert_eq!(
                    negative.arrows.contains(f),
                    is_non_degenerate_hom(&built.rings[m.tgt], &m.values),
                    "{}",
                    concrete.category.arrow_name(f)
                );
            }
        }
    }
}
