use super::maps::{enumerate_monotone_maps, is_continuous_map, MonotoneMap};
use super::{members, FinPoset, Subset, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// The cuts `A = ↓↑A` of a poset ordered by inclusion, with the unit
/// `p ↦ ↓{p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacNeilleLattice {
    /// Sorted by size, then by mask.
    pub carrier: Vec<Subset>,
    pub lattice: FinPoset,
    pub unit: MonotoneMap,
}

impl MacNeilleLattice {
    pub fn index(&self, a: Subset) -> Option<usize> {
        self.carrier.iter().position(|&c| c == a)
    }
}

fn subset_name(p: &FinPoset, a: Subset) -> String {
    let names: Vec<&str> = members(a).map(|i| p.names()[i].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

pub fn macneille(p: &FinPoset) -> Result<MacNeilleLattice> {
    if p.len() > MAX_ELEMENTS {
        return Err(Error::TooLarge {
            size: p.len(),
            limit: MAX_ELEMENTS,
        });
    }
    let mut carrier: Vec<Subset> = (0..=p.all()).filter(|&a| p.down_set(p.up_set(a)) == a).collect();
    carrier.sort_by_key(|&a| (a.count_ones(), a));
    let names = carrier.iter().map(|&a| subset_name(p, a)).collect();
    let pairs: Vec<(usize, usize)> = (0..carrier.len())
        .flat_map(|i| (0..carrier.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && carrier[i] & !carrier[j] == 0)
        .collect();
    let lattice = FinPoset::new(names, &pairs)?;
    let unit = (0..p.len())
        .map(|i| carrier.iter().position(|&c| c == p.below(i)).expect("principal down-sets are cuts"))
        .collect();
    Ok(MacNeilleLattice { carrier, lattice, unit })
}

/// The unique continuous `M(P) → M(Q)` commuting with the units, for a
/// continuous `f: P → Q`. Built by `A ↦ ↓↑f[A]` and confirmed by search.
pub fn extend_to_macneille(p: &FinPoset, q: &FinPoset, f: &[usize]) -> Result<MonotoneMap> {
    if !is_continuous_map(p, q, f)? {
        return Err(Error::Precondition("map is not continuous".into()));
    }
    let (mp, mq) = (macneille(p)?, macneille(q)?);
    let formula: MonotoneMap = mp
        .carrier
        .iter()
        .map(|&a| {
            let fa = members(a).fold(0, |m, i| m | 1 << f[i]);
            mq.index(q.down_set(q.up_set(fa))).expect("closure lands in the cuts")
        })
        .collect();
    let mut found = Vec::new();
    for g in enumerate_monotone_maps(&mp.lattice, &mq.lattice) {
        if (0..p.len()).all(|i| g[mp.unit[i]] == mq.unit[f[i]]) && is_continuous_map(&mp.lattice, &mq.lattice, &g)? {
            found.push(g);
        }
    }
    match &found[..] {
        [] => Err(Error::Precondition(
            "continuous map has no continuous extension to the completions".into(),
        )),
        [g] if *g == formula => Ok(formula),
        [_] => Err(Error::Mismatch("extension differs from the closure formula".into())),
        _ => Err(Error::Mismatch(format!("{} continuous extensions", found.len()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_completions() {
        assert_eq!(macneille(&FinPoset::chain(1)).unwrap().carrier.len(), 1);
        assert_eq!(macneille(&FinPoset::antichain(0)).unwrap().carrier, vec![0]);
        let m = macneille(&FinPoset::antichain(2)).unwrap();
        assert_eq!(m.carrier, vec![0b00, 0b01, 0b10, 0b11]);
        assert_eq!(m.unit, vec![1, 2]);
        assert!(m.lattice.is_complete_lattice());
    }

    #[test]
    fn identity_extends_to_identity() {
        let p = FinPoset::antichain(2);
        assert_eq!(extend_to_macneille(&p, &p, &[0, 1]).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn chain_inclusion_extends_uniquely() {
        let (two, three) = (FinPoset::chain(2), FinPoset::chain(3));
        assert_eq!(extend_to_macneille(&two, &three, &[0, 2]).unwrap(), vec![0, 2]);
    }

    #[test]
    fn constant_map_on_the_antichain_is_continuous_without_extension() {
        let p = FinPoset::antichain(2);
        let m = macneille(&p).unwrap();
        // a, b ↦ {a}: only singletons have infima or suprema in the antichain
        assert!(is_continuous_map(&p, &m.lattice, &[1, 1]).unwrap());
        assert!(extend_to_macneille(&p, &m.lattice, &[1, 1]).is_err());
    }
}
