//! Brute-force oracles kept apart from the main algorithms: MacNeille cuts
//! straight from the order relation, multipliers from element-by-element
//! search over additive maps, Boolean homomorphisms from element images.

use serde::Serialize;

use crate::error::Result;
use crate::posets::{all_posets, FinPoset, Subset};
use crate::rings::{small_rings, FinRing};

/// Every `A` with `A = ↓↑A`, computed from `leq` alone.
pub fn macneille_cuts(p: &FinPoset) -> Vec<Subset> {
    let n = p.len();
    let upper = |a: Subset| (0..n).filter(|&u| (0..n).all(|x| a >> x & 1 == 0 || p.leq(x, u))).fold(0, |m, u| m | 1 << u);
    let lower = |b: Subset| (0..n).filter(|&l| (0..n).all(|x| b >> x & 1 == 0 || p.leq(l, x))).fold(0, |m, l| m | 1 << l);
    let mut cuts: Vec<Subset> = (0..1u32 << n).filter(|&a| lower(upper(a)) == a).collect();
    cuts.sort_by_key(|&a| (a.count_ones(), a));
    cuts
}

/// Additive maps found by assigning images to elements in order and
/// checking every sum whose three terms are assigned.
fn additive_maps(r: &FinRing) -> Vec<Vec<usize>> {
    fn go(r: &FinRing, f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = f.len();
        if k == r.len() {
            out.push(f.clone());
            return;
        }
        for v in 0..r.len() {
            f.push(v);
            let ok = (0..=k).all(|x| {
                (0..=k).all(|y| {
                    let s = r.add(x, y);
                    s > k || f[s] == r.add(f[x], f[y])
                })
            });
            if ok {
                go(r, f, out);
            }
            f.pop();
        }
    }
    let mut out = Vec::new();
    go(r, &mut Vec::new(), &mut out);
    out
}

/// All multipliers `(λ, ρ)` of `r`, sorted; `None` for a degenerate ring.
pub fn multiplier_pairs(r: &FinRing) -> Option<Vec<(Vec<usize>, Vec<usize>)>> {
    let n = r.len();
    let z = r.zero();
    let degenerate = (0..n).any(|x| x != z && (0..n).all(|y| r.mul(x, y) == z && r.mul(y, x) == z));
    if degenerate {
        return None;
    }
    let maps = additive_maps(r);
    let mut pairs = Vec::new();
    for l in &maps {
        for p in &maps {
            let ok = (0..n).all(|a| {
                (0..n).all(|b| {
                    l[r.mul(a, b)] == r.mul(l[a], b)
                        && p[r.mul(a, b)] == r.mul(a, p[b])
                        && r.mul(a, l[b]) == r.mul(p[a], b)
                })
            });
            if ok {
                pairs.push((l.clone(), p.clone()));
            }
        }
    }
    pairs.sort();
    Some(pairs)
}

/// Homomorphisms between powerset algebras on `m` and `n` atoms, by search
/// over element images preserving meets, joins and complements.
pub fn boolean_hom_count(m: usize, n: usize) -> usize {
    let (size, one_a, one_b) = (1usize << m, (1usize << m) - 1, (1usize << n) - 1);
    fn go(k: usize, size: usize, one_a: usize, one_b: usize, f: &mut Vec<usize>) -> usize {
        if k == size {
            return 1;
        }
        let mut count = 0;
        for v in 0..=one_b {
            f.push(v);
            let ok = (0..=k).all(|x| {
                (0..=k).all(|y| (x & y > k || f[x & y] == f[x] & f[y]) && (x | y > k || f[x | y] == f[x] | f[y]))
                    && (one_a & !x > k || f[one_a & !x] == one_b & !f[x])
            });
            if ok {
                count += go(k + 1, size, one_a, one_b, f);
            }
            f.pop();
        }
        count
    }
    go(0, size, one_a, one_b, &mut Vec::new())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacNeilleGolden {
    pub elements: usize,
    /// Covering pairs of the poset.
    pub covers: Vec<(usize, usize)>,
    pub completion_size: usize,
    pub cuts: Vec<Subset>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplierGolden {
    pub ring: String,
    pub order: usize,
    /// Absent for degenerate rings.
    pub multipliers: Option<usize>,
    pub pairs: Option<Vec<(Vec<usize>, Vec<usize>)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BooleanGolden {
    pub source_atoms: usize,
    pub target_atoms: usize,
    pub homs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub macneille: Vec<MacNeilleGolden>,
    pub multipliers: Vec<MultiplierGolden>,
    pub boolean: Vec<BooleanGolden>,
}

/// Posets up to four elements, the bundled small rings, and powerset
/// algebras on one to three atoms.
pub fn run_oracles() -> Result<OracleReport> {
    let mut macneille = Vec::new();
    for n in 0..=4 {
        for p in all_posets(n)? {
            let cuts = macneille_cuts(&p);
            macneille.push(MacNeilleGolden {
                elements: n,
                covers: p.covers(),
                completion_size: cuts.len(),
                cuts,
            });
        }
    }
    let multipliers = small_rings()
        .into_iter()
        .map(|(name, r)| {
            let pairs = multiplier_pairs(&r);
            MultiplierGolden {
                ring: name,
                order: r.len(),
                multipliers: pairs.as_ref().map(Vec::len),
                pairs,
            }
        })
        .collect();
    let boolean = (1..=3)
        .flat_map(|m| (1..=3).map(move |n| (m, n)))
        .map(|(m, n)| BooleanGolden {
            source_atoms: m,
            target_atoms: n,
            homs: boolean_hom_count(m, n),
        })
        .collect();
    Ok(OracleReport {
        macneille,
        multipliers,
        boolean,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cuts() {
        assert_eq!(macneille_cuts(&FinPoset::antichain(0)).len(), 1);
        assert_eq!(macneille_cuts(&FinPoset::antichain(2)).len(), 4);
        assert_eq!(macneille_cuts(&FinPoset::chain(3)).len(), 3);
    }

    #[test]
    fn boolean_counts_are_powers() {
        assert_eq!(boolean_hom_count(2, 3), 8);
        assert_eq!(boolean_hom_count(3, 2), 9);
    }

    #[test]
    fn column_ring_has_eight_multipliers() {
        assert_eq!(multiplier_pairs(&FinRing::column_ring()).map(|p| p.len()), Some(8));
        assert_eq!(multiplier_pairs(&FinRing::zero_mul(2)), None);
    }
}
