//! Exhaustive detection of arrow classes.

use std::collections::HashMap;

use super::{ArrowId, ArrowSet, FiniteCategory};
use crate::error::Result;

/// `f∘g = f∘h ⇒ g = h` for every parallel pair into the source of `f`.
pub fn is_monic(c: &FiniteCategory, f: ArrowId) -> Result<bool> {
    c.check_arrow(f)?;
    Ok(monic(c, f))
}

pub(crate) fn monic(c: &FiniteCategory, f: ArrowId) -> bool {
    let x = c.src(f);
    let mut seen = Vec::new();
    for z in c.objects() {
        seen.clear();
        for &g in c.hom(z, x) {
            seen.push(c.compose(f, g));
        }
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
    }
    true
}

pub fn is_epic(c: &FiniteCategory, f: ArrowId) -> Result<bool> {
    c.check_arrow(f)?;
    Ok(epic(c, f))
}

pub(crate) fn epic(c: &FiniteCategory, f: ArrowId) -> bool {
    let y = c.tgt(f);
    let mut seen = Vec::new();
    for z in c.objects() {
        seen.clear();
        for &g in c.hom(y, z) {
            seen.push(c.compose(g, f));
        }
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
    }
    true
}

/// The two-sided inverse of `f`, if any.
pub fn inverse(c: &FiniteCategory, f: ArrowId) -> Option<ArrowId> {
    let (x, y) = (c.src(f), c.tgt(f));
    c.hom(y, x)
        .iter()
        .copied()
        .find(|&g| c.compose(g, f) == c.identity(x) && c.compose(f, g) == c.identity(y))
}

pub fn is_iso(c: &FiniteCategory, f: ArrowId) -> Result<bool> {
    c.check_arrow(f)?;
    Ok(inverse(c, f).is_some())
}

/// Some `r` with `r∘f = 1`.
pub fn is_split_monic(c: &FiniteCategory, f: ArrowId) -> Result<bool> {
    c.check_arrow(f)?;
    let (x, y) = (c.src(f), c.tgt(f));
    Ok(c.hom(y, x).iter().any(|&r| c.compose(r, f) == c.identity(x)))
}

/// Some `s` with `f∘s = 1`.
pub fn is_split_epic(c: &FiniteCategory, f: ArrowId) -> Result<bool> {
    c.check_arrow(f)?;
    let (x, y) = (c.src(f), c.tgt(f));
    Ok(c.hom(y, x).iter().any(|&s| c.compose(f, s) == c.identity(y)))
}

pub fn isos(c: &FiniteCategory) -> ArrowSet {
    ArrowSet::from_predicate(c.arrow_count(), |f| inverse(c, f).is_some())
}

pub fn monics(c: &FiniteCategory) -> ArrowSet {
    ArrowSet::from_predicate(c.arrow_count(), |f| monic(c, f))
}

pub fn epics(c: &FiniteCategory) -> ArrowSet {
    ArrowSet::from_predicate(c.arrow_count(), |f| epic(c, f))
}

/// `a ⊥ b`: every commuting square `b∘g = h∘a` has exactly one diagonal `t`
/// with `t∘a = g` and `b∘t = h`.
pub fn is_left_orthogonal(c: &FiniteCategory, a: ArrowId, b: ArrowId) -> Result<bool> {
    c.check_arrow(a)?;
    c.check_arrow(b)?;
    Ok(orthogonal(c, a, b))
}

pub(crate) fn orthogonal(c: &FiniteCategory, a: ArrowId, b: ArrowId) -> bool {
    let (a0, a1) = (c.src(a), c.tgt(a));
    let (b0, b1) = (c.src(b), c.tgt(b));
    let diagonals = c.hom(a1, b0);
    for &g in c.hom(a0, b0) {
        let bg = c.compose(b, g);
        for &h in c.hom(a1, b1) {
            if bg != c.compose(h, a) {
                continue;
            }
            let fillers = diagonals
                .iter()
                .filter(|&&t| c.compose(t, a) == g && c.compose(b, t) == h)
                .take(2)
                .count();
            if fillers != 1 {
                return false;
            }
        }
    }
    true
}

/// Epic and left orthogonal to every monic. Without finite limits the
/// orthogonality alone does not force `f` to be epic.
pub fn is_strong_epic(c: &FiniteCategory, f: ArrowId) -> Result<bool> {
    c.check_arrow(f)?;
    Ok(epic(c, f) && c.arrow_ids().filter(|&m| monic(c, m)).all(|m| orthogonal(c, f, m)))
}

/// Monic and right orthogonal to every epic.
pub fn is_strong_monic(c: &FiniteCategory, f: ArrowId) -> Result<bool> {
    c.check_arrow(f)?;
    Ok(monic(c, f) && c.arrow_ids().filter(|&e| epic(c, e)).all(|e| orthogonal(c, e, f)))
}

pub fn strong_monics(c: &FiniteCategory) -> ArrowSet {
    let epics: Vec<_> = epics(c).to_vec();
    ArrowSet::from_predicate(c.arrow_count(), |f| monic(c, f) && epics.iter().all(|&e| orthogonal(c, e, f)))
}

/// Limit-free characterization: `f` is monic and every `g` into `tgt(f)`
/// that equalizes all pairs `p, q` out of `tgt(f)` equalized by `f` factors
/// through `f`.
pub fn is_regular_monic(c: &FiniteCategory, f: ArrowId) -> Result<bool> {
    c.check_arrow(f)?;
    Ok(monic(c, f) && regular_monic(c, f))
}

pub(crate) fn regular_monic(c: &FiniteCategory, f: ArrowId) -> bool {
    let (x, y) = (c.src(f), c.tgt(f));
    // Group the arrows out of y by their composite with f; g must be
    // constant on every group.
    let groups: Vec<Vec<Vec<ArrowId>>> = c
        .objects()
        .map(|z| {
            let mut by_key: HashMap<ArrowId, Vec<ArrowId>> = HashMap::new();
            for &p in c.hom(y, z) {
                by_key.entry(c.compose(p, f)).or_default().push(p);
            }
            by_key.into_values().filter(|g| g.len() > 1).collect()
        })
        .collect();
    for w in c.objects() {
        let through: Vec<ArrowId> = c.hom(w, x).iter().map(|&k| c.compose(f, k)).collect();
        for &g in c.hom(w, y) {
            let equalizes = groups.iter().flatten().all(|group| {
                let first = c.compose(group[0], g);
                group[1..].iter().all(|&q| c.compose(q, g) == first)
            });
            if equalizes && !through.contains(&g) {
                return false;
            }
        }
    }
    true
}

pub fn is_regular_epic(c: &FiniteCategory, f: ArrowId) -> Result<bool> {
    c.check_arrow(f)?;
    Ok(epic(c, f) && regular_epic(c, f))
}

pub(crate) fn regular_epic(c: &FiniteCategory, f: ArrowId) -> bool {
    let (x, y) = (c.src(f), c.tgt(f));
    let groups: Vec<Vec<Vec<ArrowId>>> = c
        .objects()
        .map(|z| {
            let mut by_key: HashMap<ArrowId, Vec<ArrowId>> = HashMap::new();
            for &i in c.hom(z, x) {
                by_key.entry(c.compose(f, i)).or_default().push(i);
            }
            by_key.into_values().filter(|g| g.len() > 1).collect()
        })
        .collect();
    for w in c.objects() {
        let through: Vec<ArrowId> = c.hom(y, w).iter().map(|&k| c.compose(k, f)).collect();
        for &h in c.hom(x, w) {
            let coequalizes = groups.iter().flatten().all(|group| {
                let first = c.compose(h, group[0]);
                group[1..].iter().all(|&j| c.compose(h, j) == first)
            });
            if coequalizes && !through.contains(&h) {
                return false;
            }
        }
    }
    true
}

pub fn regular_monics(c: &FiniteCategory) -> ArrowSet {
    ArrowSet::from_predicate(c.arrow_count(), |f| monic(c, f) && regular_monic(c, f))
}
