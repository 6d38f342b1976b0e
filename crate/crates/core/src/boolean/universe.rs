use super::{enumerate_homs, is_continuous_hom, is_embedding, is_essential_embedding, FinBoolAlg};
use crate::capacitor::{ConcreteCapacitor, ConcreteParts};
use crate::error::{Error, Result};
use crate::fincat::{ArrowSet, ConcreteCategory, MapArrow};
use crate::polarity::Monopole;

/// Listed algebras, one per atom count, with every homomorphism.
#[derive(Clone, Debug)]
pub struct BaUniverse {
    pub algebras: Vec<FinBoolAlg>,
    pub concrete: ConcreteCategory,
    /// Positives are the embeddings.
    pub monopole: Monopole,
}

pub fn materialize_ba_universe(algebras: &[(String, FinBoolAlg)], budget: usize) -> Result<BaUniverse> {
    let mut listed: Vec<(String, FinBoolAlg)> = Vec::new();
    for (name, a) in algebras {
        if !listed.iter().any(|(_, b)| b == a) {
            listed.push((name.clone(), *a));
        }
    }
    let mut maps = Vec::new();
    for (i, (_, a)) in listed.iter().enumerate() {
        for (j, (_, b)) in listed.iter().enumerate() {
            maps.extend(enumerate_homs(a, b).into_iter().map(|values| MapArrow { src: i, tgt: j, values }));
            if maps.len() > budget {
                return Err(Error::BudgetExceeded {
                    arrows: maps.len(),
                    budget,
                });
            }
        }
    }
    let names: Vec<String> = listed.iter().map(|(n, _)| n.clone()).collect();
    let concrete = ConcreteCategory::build(
        listed.iter().map(|(n, a)| (n.clone(), a.size())).collect(),
        maps,
        budget,
        |_, m| {
            let v: Vec<String> = m.values.iter().map(|x| x.to_string()).collect();
            format!("{}→{}[{}]", names[m.src], names[m.tgt], v.join(","))
        },
    )?;
    let positive = ArrowSet::from_predicate(concrete.category.arrow_count(), |f| is_embedding(concrete.values(f)));
    Ok(BaUniverse {
        algebras: listed.into_iter().map(|(_, a)| a).collect(),
        monopole: Monopole::new(concrete.category.clone(), positive),
        concrete,
    })
}

#[derive(Clone, Debug)]
pub struct BaCapacitor {
    pub algebras: Vec<FinBoolAlg>,
    pub capacitor: ConcreteCapacitor,
}

/// Positives are embeddings, `H` the essential embeddings, `E` every listed
/// algebra (all finite algebras are complete) with the continuous
/// homomorphisms, units the identities.
pub fn build_ba_capacitor(algebras: &[(String, FinBoolAlg)], budget: usize) -> Result<BaCapacitor> {
    let universe = materialize_ba_universe(algebras, budget)?;
    let concrete = universe.concrete;
    let c = concrete.category.clone();
    let algebras = universe.algebras;
    let h = ArrowSet::from_predicate(c.arrow_count(), |f| {
        let m = &concrete.maps[f];
        is_essential_embedding(&algebras[m.tgt], &m.values)
    });
    let e_arrows = ArrowSet::from_predicate(c.arrow_count(), |f| {
        let m = &concrete.maps[f];
        is_continuous_hom(&algebras[m.src], &algebras[m.tgt], &m.values)
    });
    let capacitor = ConcreteCapacitor::build(ConcreteParts {
        positive: universe.monopole.positive,
        h,
        e_objects: c.objects().collect(),
        e_arrows,
        units: c.objects().map(|x| Some(c.identity(x))).collect(),
        budget,
        universe: concrete,
    })?;
    Ok(BaCapacitor { algebras, capacitor })
}
