use std::fmt;

use fixedbitset::FixedBitSet;

use super::ArrowId;

/// A class of arrows of one finite category, stored as a bitset over arrow ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArrowSet {
    bits: FixedBitSet,
}

impl ArrowSet {
    pub fn empty(arrow_count: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(arrow_count),
        }
    }

    pub fn full(arrow_count: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(arrow_count);
        bits.insert_range(..);
        Self { bits }
    }

    pub fn from_ids(arrow_count: usize, ids: impl IntoIterator<Item = ArrowId>) -> Self {
        let mut set = Self::empty(arrow_count);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn from_predicate(arrow_count: usize, mut pred: impl FnMut(ArrowId) -> bool) -> Self {
        Self::from_ids(arrow_count, (0..arrow_count).filter(|&f| pred(f)))
    }

    /// Number of arrows in the ambient category.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, f: ArrowId) -> bool {
        self.bits.contains(f)
    }

    pub fn insert(&mut self, f: ArrowId) {
        self.bits.insert(f);
    }

    pub fn remove(&mut self, f: ArrowId) {
        self.bits.set(f, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = ArrowId> + '_ {
        self.bits.ones()
    }

    pub fn is_subset(&self, other: &ArrowSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &ArrowSet) -> ArrowSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self { bits }
    }

    pub fn union(&self, other: &ArrowSet) -> ArrowSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Self { bits }
    }

    pub fn difference(&self, other: &ArrowSet) -> ArrowSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Self { bits }
    }

    pub fn to_vec(&self) -> Vec<ArrowId> {
        self.iter().collect()
    }
}

impl fmt::Debug for ArrowSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for ArrowSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
