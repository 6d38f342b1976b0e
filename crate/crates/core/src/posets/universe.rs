use std::collections::HashMap;

use rayon::prelude::*;

use super::maps::{enumerate_monotone_maps, is_continuous_map, is_dense, is_embedding};
use super::{macneille, FinPoset, Subset};
use crate::capacitor::{ConcreteCapacitor, ConcreteParts};
use crate::error::{Error, Result};
use crate::fincat::{ArrowSet, ConcreteCategory, MapArrow, ObjId, DEFAULT_ARROW_BUDGET};
use crate::polarity::Monopole;

#[derive(Clone, Copy, Debug)]
pub struct PosetOptions {
    /// Insert the MacNeille completion of every listed poset.
    pub close_completions: bool,
    pub budget: usize,
}

impl Default for PosetOptions {
    fn default() -> Self {
        Self {
            close_completions: true,
            budget: DEFAULT_ARROW_BUDGET,
        }
    }
}

/// The listed posets in canonical form, one per isomorphism class, and the
/// category of all monotone maps between them.
#[derive(Clone, Debug)]
pub struct PosetUniverse {
    pub posets: Vec<FinPoset>,
    pub concrete: ConcreteCategory,
    /// Positives are the embeddings.
    pub monopole: Monopole,
}

fn dedup(posets: &[(String, FinPoset)]) -> Vec<(String, FinPoset)> {
    let mut seen: HashMap<Vec<Subset>, ()> = HashMap::new();
    posets
        .iter()
        .filter_map(|(name, p)| {
            let (c, _) = p.canonical();
            seen.insert(c.shape().to_vec(), ()).is_none().then(|| (name.clone(), c))
        })
        .collect()
}

fn values_name(values: &[usize]) -> String {
    let v: Vec<String> = values.iter().map(|x| x.to_string()).collect();
    v.join(",")
}

pub fn materialize_poset_universe(posets: &[(String, FinPoset)], budget: usize) -> Result<PosetUniverse> {
    let listed = dedup(posets);
    let n = listed.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let homs: Vec<Vec<MapArrow>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            enumerate_monotone_maps(&listed[i].1, &listed[j].1)
                .into_iter()
                .map(|values| MapArrow { src: i, tgt: j, values })
                .collect()
        })
        .collect();
    let total: usize = homs.iter().map(Vec::len).sum();
    if total > budget {
        return Err(Error::BudgetExceeded { arrows: total, budget });
    }
    let maps: Vec<MapArrow> = homs.into_iter().flatten().collect();
    let names: Vec<String> = listed.iter().map(|(name, _)| name.clone()).collect();
    let concrete = ConcreteCategory::build(
        listed.iter().map(|(name, p)| (name.clone(), p.len())).collect(),
        maps,
        budget,
        |_, m| format!("{}→{}[{}]", names[m.src], names[m.tgt], values_name(&m.values)),
    )?;
    let posets: Vec<FinPoset> = listed.into_iter().map(|(_, p)| p).collect();
    let c = concrete.category.clone();
    let positive = ArrowSet::from_predicate(c.arrow_count(), |f| {
        let m = &concrete.maps[f];
        is_embedding(&posets[m.src], &posets[m.tgt], &m.values)
    });
    Ok(PosetUniverse {
        posets,
        monopole: Monopole::new(c, positive),
        concrete,
    })
}

/// The poset capacitor: positives are embeddings, `H` the dense embeddings,
/// `E` the complete lattices with continuous maps, units the MacNeille units.
#[derive(Clone, Debug)]
pub struct PosetCapacitor {
    pub posets: Vec<FinPoset>,
    /// Objects added as completions of listed posets.
    pub inserted: Vec<ObjId>,
    /// The object holding `M(P)`, when present.
    pub completion_of: Vec<Option<ObjId>>,
    pub capacitor: ConcreteCapacitor,
}

pub fn build_poset_capacitor(posets: &[(String, FinPoset)], options: PosetOptions) -> Result<PosetCapacitor> {
    let mut listed = dedup(posets);
    let listed_count = listed.len();
    let lattices: Vec<_> = listed.iter().map(|(_, p)| macneille(p)).collect::<Result<_>>()?;
    let mut inserted = Vec::new();
    if options.close_completions {
        for (k, m) in lattices.iter().enumerate() {
            let (c, _) = m.lattice.canonical();
            if !listed.iter().any(|(_, p)| p.shape() == c.shape()) {
                inserted.push(listed.len());
                listed.push((format!("M({})", listed[k].0), c));
            }
        }
    }
    let universe = materialize_poset_universe(&listed, options.budget)?;
    let posets = universe.posets;
    let concrete = universe.concrete;
    let c = concrete.category.clone();
    let by_shape: HashMap<&[Subset], ObjId> = posets.iter().enumerate().map(|(i, p)| (p.shape(), i)).collect();
    let completion_of: Vec<Option<ObjId>> = posets
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let m = if i < listed_count { lattices[i].clone() } else { macneille(p)? };
            let (canon, _) = m.lattice.canonical();
            Ok(by_shape.get(canon.shape()).copied())
        })
        .collect::<Result<_>>()?;
    let units = posets
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let Some(target) = completion_of[i] else { return Ok(None) };
            let m = macneille(p)?;
            let (_, order) = m.lattice.canonical();
            let mut relabel = vec![0; order.len()];
            for (k, &old) in order.iter().enumerate() {
                relabel[old] = k;
            }
            let values: Vec<usize> = m.unit.iter().map(|&v| relabel[v]).collect();
            Ok(concrete.lookup(i, target, &values))
        })
        .collect::<Result<Vec<_>>>()?;
    let n = c.arrow_count();
    let positive = universe.monopole.positive;
    let h = ArrowSet::from_predicate(n, |f| {
        let m = &concrete.maps[f];
        positive.contains(f) && is_dense(&posets[m.tgt], &m.values)
    });
    let e_objects: Vec<ObjId> = (0..posets.len()).filter(|&i| posets[i].is_complete_lattice()).collect();
    let continuous: Vec<bool> = (0..n)
        .into_par_iter()
        .map(|f| {
            let m = &concrete.maps[f];
            e_objects.contains(&m.src)
                && e_objects.contains(&m.tgt)
                && is_continuous_map(&posets[m.src], &posets[m.tgt], &m.values).unwrap_or(false)
        })
        .collect();
    let e_arrows = ArrowSet::from_predicate(n, |f| continuous[f]);
    let capacitor = ConcreteCapacitor::build(ConcreteParts {
        universe: concrete,
        positive,
        h,
        e_objects,
        e_arrows,
        units,
        budget: options.budget,
    })?;
    Ok(PosetCapacitor {
        posets,
        inserted,
        completion_of,
        capacitor,
    })
}

/// Every poset with at most `n` elements, one per isomorphism class.
pub fn posets_up_to(n: usize) -> Result<Vec<(String, FinPoset)>> {
    let mut out = Vec::new();
    for k in 0..=n {
        for (i, p) in super::all_posets(k)?.into_iter().enumerate() {
            out.push((format!("P{k}.{i}"), p));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capacitor::{verify_capacitor, verify_theorem_main};

    #[test]
    fn one_chain_is_a_trivial_capacitor() {
        let built = build_poset_capacitor(&[("1".into(), FinPoset::chain(1))], PosetOptions::default()).unwrap();
        assert!(built.inserted.is_empty());
        let spec = &built.capacitor.spec;
        assert!(verify_capacitor(spec).is_valid());
        assert_eq!(verify_theorem_main(spec).unwrap().summary(), "theorem_main: 12/12");
    }

    #[test]
    fn antichain_gets_its_diamond() {
        let built = build_poset_capacitor(&[("A2".into(), FinPoset::antichain(2))], PosetOptions::default()).unwrap();
        assert_eq!(built.inserted, vec![1]);
        assert_eq!(built.completion_of, vec![Some(1), Some(1)]);
        assert!(verify_capacitor(&built.capacitor.spec).is_valid());
    }

    #[test]
    fn missing_completion_fails_existence() {
        let options = PosetOptions {
            close_completions: false,
            ..PosetOptions::default()
        };
        let built = build_poset_capacitor(&[("A2".into(), FinPoset::antichain(2))], options).unwrap();
        let report = verify_capacitor(&built.capacitor.spec);
        assert_eq!(report.existence_failures(), vec![0]);
    }
}
