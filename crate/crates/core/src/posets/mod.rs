//! Finite posets, MacNeille completion, dense embeddings, continuous maps and
//! the poset capacitor.

mod macneille;
mod maps;
mod universe;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use macneille::{extend_to_macneille, macneille, MacNeilleLattice};
pub use maps::{
    enumerate_monotone_maps, is_continuous_map, is_dense, is_embedding, is_join_dense, is_meet_dense, is_monotone,
    MonotoneMap, CONTINUITY_LIMIT,
};
pub use universe::{
    build_poset_capacitor, materialize_poset_universe, posets_up_to, PosetCapacitor, PosetOptions, PosetUniverse,
};

/// Largest poset accepted; subsets are `u32` masks.
pub const MAX_ELEMENTS: usize = 16;

/// A subset of a poset's elements, bit `i` for element `i`.
pub type Subset = u32;

/// A finite partial order. `up[i]` has bit `j` set iff `i ≤ j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinPoset {
    names: Vec<String>,
    up: Vec<Subset>,
    down: Vec<Subset>,
}

/// Poset file entry; reflexive pairs are implied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetEntry {
    pub name: String,
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<[String; 2]>,
}

impl FinPoset {
    /// The order generated by nothing but `pairs` and reflexivity; the pairs
    /// must already be transitive and antisymmetric.
    pub fn new(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                size: n,
                limit: MAX_ELEMENTS,
            });
        }
        let mut up: Vec<Subset> = (0..n).map(|i| 1 << i).collect();
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::Malformed(format!("pair ({i}, {j}) outside {n} elements")));
            }
            up[i] |= 1 << j;
        }
        let p = Self::from_up(names, up);
        for i in 0..n {
            for j in 0..n {
                if i != j && p.leq(i, j) && p.leq(j, i) {
                    return Err(Error::Malformed(format!(
                        "`{}` and `{}` are distinct but below each other",
                        p.names[i], p.names[j]
                    )));
                }
                if p.leq(i, j) && p.up[j] & !p.up[i] != 0 {
                    return Err(Error::Malformed(format!(
                        "order is not transitive above `{}` ≤ `{}`",
                        p.names[i], p.names[j]
                    )));
                }
            }
        }
        Ok(p)
    }

    fn from_up(names: Vec<String>, up: Vec<Subset>) -> Self {
        let n = names.len();
        let down = (0..n)
            .map(|j| (0..n).filter(|&i| up[i] >> j & 1 == 1).fold(0, |m, i| m | 1 << i))
            .collect();
        Self { names, up, down }
    }

    pub fn from_entry(entry: &PosetEntry) -> Result<Self> {
        let index: HashMap<&str, usize> = entry.elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
        if index.len() != entry.elements.len() {
            return Err(Error::Malformed(format!("`{}` repeats an element", entry.name)));
        }
        let pairs = entry
            .leq
            .iter()
            .map(|[a, b]| match (index.get(a.as_str()), index.get(b.as_str())) {
                (Some(&i), Some(&j)) => Ok((i, j)),
                _ => Err(Error::UnknownName(if index.contains_key(a.as_str()) { b.clone() } else { a.clone() })),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entry.elements.clone(), &pairs)
    }

    pub fn to_entry(&self, name: &str) -> PosetEntry {
        let mut leq = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if i != j && self.leq(i, j) {
                    leq.push([self.names[i].clone(), self.names[j].clone()]);
                }
            }
        }
        PosetEntry {
            name: name.to_string(),
            elements: self.names.clone(),
            leq,
        }
    }

    pub fn chain(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let up = (0..n).map(|i| ((1u64 << n) - (1u64 << i)) as Subset).collect();
        Self::from_up(names, up)
    }

    pub fn antichain(n: usize) -> Self {
        let names = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        Self::from_up(names, (0..n).map(|i| 1 << i).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn all(&self) -> Subset {
        ((1u64 << self.len()) - 1) as Subset
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i] >> j & 1 == 1
    }

    /// Elements above `i`, including `i`.
    pub fn above(&self, i: usize) -> Subset {
        self.up[i]
    }

    pub fn below(&self, i: usize) -> Subset {
        self.down[i]
    }

    /// Common upper bounds of `a`.
    pub fn up_set(&self, a: Subset) -> Subset {
        members(a).fold(self.all(), |m, i| m & self.up[i])
    }

    /// Common lower bounds of `a`.
    pub fn down_set(&self, a: Subset) -> Subset {
        members(a).fold(self.all(), |m, i| m & self.down[i])
    }

    /// The least element of `s`, if any.
    pub fn least(&self, s: Subset) -> Option<usize> {
        members(s).find(|&i| self.up[i] & s == s)
    }

    pub fn greatest(&self, s: Subset) -> Option<usize> {
        members(s).find(|&i| self.down[i] & s == s)
    }

    pub fn sup(&self, a: Subset) -> Option<usize> {
        self.least(self.up_set(a))
    }

    pub fn inf(&self, a: Subset) -> Option<usize> {
        self.greatest(self.down_set(a))
    }

    /// Every subset has a supremum and an infimum. For a finite poset that
    /// amounts to a lattice with top and bottom.
    pub fn is_complete_lattice(&self) -> bool {
        let n = self.len();
        self.sup(0).is_some()
            && self.inf(0).is_some()
            && (0..n).all(|i| (0..n).all(|j| self.sup(1 << i | 1 << j).is_some() && self.inf(1 << i | 1 << j).is_some()))
    }

    /// The relation matrix, row-major.
    fn matrix(&self, order: &[usize]) -> Vec<bool> {
        order
            .iter()
            .flat_map(|&i| order.iter().map(move |&j| self.leq(i, j)))
            .collect()
    }

    /// Relabels so that the relation matrix is lexicographically minimal
    /// (with `false < true`). Returns the relabelled poset and `order`,
    /// where new element `k` is old element `order[k]`.
    pub fn canonical(&self) -> (FinPoset, Vec<usize>) {
        let n = self.len();
        let mut best: Option<(Vec<bool>, Vec<usize>)> = None;
        let mut order = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.search_canonical(&mut order, &mut used, &mut best);
        let (_, order) = best.unwrap_or_default();
        let names = order.iter().map(|&i| self.names[i].clone()).collect();
        let up = order
            .iter()
            .map(|&i| (0..n).filter(|&k| self.leq(i, order[k])).fold(0, |m, k| m | 1 << k))
            .collect();
        (Self::from_up(names, up), order)
    }

    fn search_canonical(&self, order: &mut Vec<usize>, used: &mut [bool], best: &mut Option<(Vec<bool>, Vec<usize>)>) {
        let n = self.len();
        if order.len() == n {
            let m = self.matrix(order);
            if best.as_ref().is_none_or(|(b, _)| m < *b) {
                *best = Some((m, order.clone()));
            }
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                order.push(i);
                self.search_canonical(order, used, best);
                order.pop();
                used[i] = false;
            }
        }
    }

    /// Same order up to relabelling.
    pub fn is_isomorphic(&self, other: &FinPoset) -> bool {
        self.len() == other.len() && self.canonical().0.up == other.canonical().0.up
    }

    /// Order relation only, ignoring names.
    pub fn shape(&self) -> &[Subset] {
        &self.up
    }

    /// Pairs `(i, j)` with `j` covering `i`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) && !(0..n).any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub fn members(s: Subset) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| s >> i & 1 == 1)
}

/// All posets on `n` elements up to isomorphism, in canonical form, sorted
/// by relation matrix.
pub fn all_posets(n: usize) -> Result<Vec<FinPoset>> {
    if n > 5 {
        return Err(Error::TooLarge { size: n, limit: 5 });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut seen = std::collections::BTreeMap::new();
    for mask in 0u32..1 << pairs.len() {
        let chosen: Vec<(usize, usize)> = members(mask).map(|k| pairs[k]).collect();
        if let Ok(p) = FinPoset::new(names.clone(), &chosen) {
            let (c, _) = p.canonical();
            seen.entry(c.matrix(&(0..n).collect::<Vec<_>>())).or_insert(c);
        }
    }
    Ok(seen.into_values().map(|p| FinPoset::from_up(names.clone(), p.up)).collect())
}
