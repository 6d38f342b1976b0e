use crate::error::{Error, Result};
use crate::fincat::{props, ArrowId, ArrowSet, FiniteCategory};

use super::Monopole;

/// A pair `(g, f)` with `g∘f` positive and `g` not positive.
pub fn hereditary_violation(m: &Monopole) -> Option<(ArrowId, ArrowId)> {
    violation_in(&m.category, &m.positive)
}

fn violation_in(c: &FiniteCategory, pos: &ArrowSet) -> Option<(ArrowId, ArrowId)> {
    for f in c.arrow_ids() {
        for z in c.objects() {
            for &g in c.hom(c.tgt(f), z) {
                if !pos.contains(g) && pos.contains(c.compose(g, f)) {
                    return Some((g, f));
                }
            }
        }
    }
    None
}

/// `g∘f` positive implies `g` positive, for all composable `f, g`.
pub fn is_left_hereditary(m: &Monopole) -> bool {
    hereditary_violation(m).is_none()
}

/// `f` is positive in the core iff it is positive and every `g` with `g∘f`
/// positive is positive.
pub fn left_hereditary_core(m: &Monopole) -> Monopole {
    let c = &m.category;
    let positive = ArrowSet::from_predicate(c.arrow_count(), |f| {
        m.positive.contains(f)
            && c.objects().all(|z| {
                c.hom(c.tgt(f), z)
                    .iter()
                    .all(|&g| m.positive.contains(g) || !m.positive.contains(c.compose(g, f)))
            })
    });
    Monopole {
        category: c.clone(),
        positive,
        sign: m.sign,
    }
}

/// Searches the left hereditary sub-monopoles of `m` for one that is not
/// contained in the core. Candidates are the refinements between the
/// isomorphisms and the positives; at most `max_free` non-iso positive
/// arrows are allowed.
pub fn maximality_scan(m: &Monopole, max_free: usize) -> Result<Option<ArrowSet>> {
    let c = &m.category;
    let isos = props::isos(c);
    let free: Vec<ArrowId> = m.positive.difference(&isos).to_vec();
    if free.len() > max_free {
        return Err(Error::TooLarge {
            size: free.len(),
            limit: max_free,
        });
    }
    let core = left_hereditary_core(m);
    for mask in 0u64..(1u64 << free.len()) {
        let mut s = isos.clone();
        for (i, &f) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert(f);
            }
        }
        if s.is_subset(&core.positive) {
            continue;
        }
        if super::validate_refinement(c, &s).is_valid() && violation_in(c, &s).is_none() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Positives of the core of the monic monopole.
pub fn essential_monics(c: &std::sync::Arc<FiniteCategory>) -> ArrowSet {
    left_hereditary_core(&Monopole::monics(c.clone())).positive
}

/// Positives of the core of the regular-monic monopole.
pub fn essential_regular_monics(c: &std::sync::Arc<FiniteCategory>) -> ArrowSet {
    left_hereditary_core(&Monopole::regular_monics(c.clone())).positive
}
