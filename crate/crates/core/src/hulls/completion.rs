use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{props, ArrowId, ArrowSet, FiniteCategory, Functor, ObjId};
use crate::polarity::Monopole;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WitnessCounts {
    /// Objects of the comma category searched.
    pub comma_objects: usize,
    /// Comma objects with a witnessed arrow into the completion.
    pub existence: usize,
    /// Largest number of arrows from the completion to one comma object.
    pub max_out: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionResult {
    pub unit: ArrowId,
    /// The target of the unit; an object of `E` for completions relative to
    /// a functor.
    pub object: ObjId,
    pub witness_counts: WitnessCounts,
    /// For every comma object (given by its arrow out of `x`), the first
    /// arrow into the completion.
    #[serde(skip)]
    pub existence: Vec<(ArrowId, ArrowId)>,
}

fn positive_out(c: &FiniteCategory, x: ObjId, pos: &ArrowSet) -> Vec<ArrowId> {
    c.objects()
        .flat_map(|b| c.hom(x, b).iter().copied())
        .filter(|&f| pos.contains(f))
        .collect()
}

/// Checks `f` against every object `g` of the coslice of `pos`-arrows out of
/// `src(f)`.
fn amphi_terminal_in_coslice(c: &FiniteCategory, f: ArrowId, out: &[ArrowId]) -> Option<CompletionResult> {
    let a = c.tgt(f);
    let mut existence = Vec::with_capacity(out.len());
    let mut max_out = 0;
    for &g in out {
        let b = c.tgt(g);
        let into = c.hom(b, a).iter().copied().find(|&xi| c.compose(xi, g) == f)?;
        existence.push((g, into));
        let from = c.hom(a, b).iter().filter(|&&xi| c.compose(xi, f) == g).take(2).count();
        if from > 1 {
            return None;
        }
        max_out = max_out.max(from);
    }
    Some(CompletionResult {
        unit: f,
        object: a,
        witness_counts: WitnessCounts {
            comma_objects: out.len(),
            existence: existence.len(),
            max_out,
        },
        existence,
    })
}

/// Every amphi-terminal object of the coslice `x ↓ M`, in target-id order.
pub fn completions(m: &Monopole, x: ObjId) -> Result<Vec<CompletionResult>> {
    let c = &m.category;
    c.check_object(x)?;
    let out = positive_out(c, x, &m.positive);
    Ok(out.iter().filter_map(|&f| amphi_terminal_in_coslice(c, f, &out)).collect())
}

/// The lowest-id completion of `x`.
pub fn completion(m: &Monopole, x: ObjId) -> Result<Option<CompletionResult>> {
    let c = &m.category;
    c.check_object(x)?;
    let out = positive_out(c, x, &m.positive);
    Ok(out.iter().find_map(|&f| amphi_terminal_in_coslice(c, f, &out)))
}

/// `f` is a completion of its source.
pub fn is_completion(m: &Monopole, f: ArrowId) -> Result<bool> {
    let c = &m.category;
    c.check_arrow(f)?;
    if !m.positive.contains(f) {
        return Ok(false);
    }
    let out = positive_out(c, c.src(f), &m.positive);
    Ok(amphi_terminal_in_coslice(c, f, &out).is_some())
}

/// The identity of `x` is a completion.
pub fn is_complete(m: &Monopole, x: ObjId) -> Result<bool> {
    let c = &m.category;
    c.check_object(x)?;
    let out = positive_out(c, x, &m.positive);
    Ok(amphi_terminal_in_coslice(c, c.identity(x), &out).is_some())
}

/// Completion in the monopole restricted to `h`.
pub fn relative_completion(m: &Monopole, x: ObjId, h: &ArrowSet) -> Result<Option<CompletionResult>> {
    completion(&m.restrict(h)?, x)
}

/// Two completions of the same object are related by an isomorphism that
/// commutes with the units.
pub fn completions_agree(c: &FiniteCategory, a: &CompletionResult, b: &CompletionResult) -> bool {
    c.hom(a.object, b.object)
        .iter()
        .any(|&xi| c.compose(xi, a.unit) == b.unit && props::inverse(c, xi).is_some())
}

/// Objects `(b, ξ)` of `x ↓_H U`, ordered by `b` then by `ξ`.
pub fn comma_objects(c: &FiniteCategory, x: ObjId, e: &FiniteCategory, u: &Functor, h: &ArrowSet) -> Vec<(ObjId, ArrowId)> {
    e.objects()
        .flat_map(|b| c.hom(x, u.object(b)).iter().filter(|&&xi| h.contains(xi)).map(move |&xi| (b, xi)))
        .collect()
}

/// Checks that `(t, eta)` is terminal among `objects`. On failure returns
/// the first comma arrow `ξ` with no mediator or with two of them.
pub fn comma_terminal_check(
    c: &FiniteCategory,
    e: &FiniteCategory,
    u: &Functor,
    objects: &[(ObjId, ArrowId)],
    (t, eta): (ObjId, ArrowId),
) -> Result<Vec<(ArrowId, ArrowId)>, ArrowId> {
    let mut existence = Vec::with_capacity(objects.len());
    for &(b, xi) in objects {
        let mut found = e
            .hom(b, t)
            .iter()
            .copied()
            .filter(|&phi| u.arrow(phi).is_some_and(|uphi| c.compose(uphi, xi) == eta));
        match (found.next(), found.next()) {
            (Some(phi), None) => existence.push((xi, phi)),
            _ => return Err(xi),
        }
    }
    Ok(existence)
}

/// Terminal object of `x ↓_H U` without validating `U`.
pub fn terminal_in_comma(
    c: &FiniteCategory,
    x: ObjId,
    e: &FiniteCategory,
    u: &Functor,
    h: &ArrowSet,
) -> Option<CompletionResult> {
    let objects = comma_objects(c, x, e, u, h);
    objects.iter().find_map(|&(t, eta)| {
        let existence = comma_terminal_check(c, e, u, &objects, (t, eta)).ok()?;
        Some(CompletionResult {
            unit: eta,
            object: t,
            witness_counts: WitnessCounts {
                comma_objects: objects.len(),
                existence: existence.len(),
                max_out: 1,
            },
            existence,
        })
    })
}

/// Terminal object of `x ↓_H U`: the unit `η: x → U(Jx)` with `Jx` in `E`.
pub fn completion_wrt_functor(
    m: &Monopole,
    x: ObjId,
    e: &FiniteCategory,
    u: &Functor,
    h: &ArrowSet,
) -> Result<Option<CompletionResult>> {
    let c = &m.category;
    c.check_object(x)?;
    if !h.is_subset(&m.positive) {
        return Err(Error::NotARefinement("H is not contained in the positives".into()));
    }
    let violations = u.validate(e, c, Some(&ArrowSet::full(e.arrow_count())));
    if !violations.is_empty() || u.contravariant {
        return Err(Error::Precondition(format!("U is not a covariant functor: {violations:?}")));
    }
    Ok(terminal_in_comma(c, x, e, u, h))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fincat::small::{cyclic_group, walking_arrow};

    #[test]
    fn terminal_target_completes_the_walking_arrow() {
        let c = Arc::new(walking_arrow());
        let m = Monopole::everything(c.clone());
        let r = completion(&m, 0).unwrap().unwrap();
        assert_eq!((r.unit, r.object), (2, 1));
        assert!(is_complete(&m, 1).unwrap());
        assert!(!is_complete(&m, 0).unwrap());
        assert_eq!(r.witness_counts.comma_objects, 2);
    }

    #[test]
    fn isos_only_complete_everything() {
        let c = Arc::new(walking_arrow());
        let m = Monopole::everything(c.clone());
        let isos = crate::fincat::props::isos(&c);
        let r = relative_completion(&m, 0, &isos).unwrap().unwrap();
        assert_eq!(r.unit, 0);
    }

    #[test]
    fn group_objects_are_complete() {
        let c = Arc::new(cyclic_group(2));
        let m = Monopole::everything(c);
        assert_eq!(completion(&m, 0).unwrap().unwrap().unit, 0);
        assert_eq!(completions(&m, 0).unwrap().len(), 2);
    }

    #[test]
    fn identity_functor_on_a_complete_object() {
        let c = Arc::new(walking_arrow());
        let m = Monopole::everything(c.clone());
        let r = completion_wrt_functor(&m, 1, &c, &Functor::identity(&c), &m.positive).unwrap().unwrap();
        assert_eq!((r.unit, r.object), (1, 1));
    }

    #[test]
    fn empty_comma_category_has_no_terminal_object() {
        let c = Arc::new(walking_arrow());
        let m = Monopole::everything(c.clone());
        // E is the full subcategory on `a`; nothing leaves b towards a
        let (e, back) = c.full_subcategory(&[0]);
        let u = Functor {
            object_map: vec![0],
            arrow_map: back.iter().map(|&f| Some(f)).collect(),
            contravariant: false,
        };
        assert!(completion_wrt_functor(&m, 1, &e, &u, &m.positive).unwrap().is_none());
    }
}
