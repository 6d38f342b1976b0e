use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{Arrow, ArrowId, ArrowSet, BuildOptions, FiniteCategory, Functor, ObjId};
use crate::polarity::Monopole;

/// Materializes a category whose objects sit over objects of `d` and whose
/// morphisms `i → j` are the arrows of `d` accepted by `keep(i, j, arrow)`.
/// Returns the category and the underlying arrow of each morphism.
fn materialize(
    d: &FiniteCategory,
    names: Vec<String>,
    over: &[ObjId],
    keep: impl Fn(usize, usize, ArrowId) -> bool,
    budget: usize,
) -> Result<(FiniteCategory, Vec<ArrowId>)> {
    let mut arrows = Vec::new();
    let mut under = Vec::new();
    let mut index = HashMap::new();
    for (i, &a) in over.iter().enumerate() {
        for (j, &b) in over.iter().enumerate() {
            for &phi in d.hom(a, b) {
                if keep(i, j, phi) {
                    if arrows.len() == budget {
                        return Err(Error::BudgetExceeded {
                            arrows: budget + 1,
                            budget,
                        });
                    }
                    index.insert((i, j, phi), arrows.len());
                    arrows.push(Arrow {
                        name: format!("{}@{i}>{j}", d.arrow_name(phi)),
                        src: i,
                        tgt: j,
                    });
                    under.push(phi);
                }
            }
        }
    }
    let identities = over
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            index
                .get(&(i, i, d.identity(a)))
                .copied()
                .ok_or_else(|| Error::Malformed(format!("comma object {i} has no identity")))
        })
        .collect::<Result<Vec<_>>>()?;
    let category = FiniteCategory::from_table(
        names,
        arrows.clone(),
        identities,
        |g, f| index.get(&(arrows[f].src, arrows[g].tgt, d.compose(under[g], under[f]))).copied(),
        BuildOptions::trusted(budget),
    )?;
    Ok((category, under))
}

/// `x ↓_H U`: objects are pairs `(e, ξ: x → Ue)` with `ξ ∈ H`, morphisms are
/// arrows `φ` of `E` with `Uφ∘ξ = ξ'`.
#[derive(Clone, Debug)]
pub struct CommaCategory {
    pub base: ObjId,
    pub objects: Vec<(ObjId, ArrowId)>,
    /// The `E`-arrow behind each morphism.
    pub arrows: Vec<ArrowId>,
    pub category: FiniteCategory,
}

impl CommaCategory {
    pub fn build(
        c: &FiniteCategory,
        x: ObjId,
        e: &FiniteCategory,
        u: &Functor,
        h: &ArrowSet,
        budget: usize,
    ) -> Result<Self> {
        c.check_object(x)?;
        let mut objects = Vec::new();
        for b in e.objects() {
            for &xi in c.hom(x, u.object(b)) {
                if h.contains(xi) {
                    objects.push((b, xi));
                }
            }
        }
        let over: Vec<ObjId> = objects.iter().map(|o| o.0).collect();
        let names = objects
            .iter()
            .map(|&(b, xi)| format!("({}, {})", e.object_name(b), c.arrow_name(xi)))
            .collect();
        let (category, arrows) = materialize(
            e,
            names,
            &over,
            |i, j, phi| u.arrow(phi).is_some_and(|uphi| c.compose(uphi, objects[i].1) == objects[j].1),
            budget,
        )?;
        Ok(Self {
            base: x,
            objects,
            arrows,
            category,
        })
    }
}

/// A slice or coslice monopole with the arrow of `M` behind each object and
/// each morphism.
#[derive(Clone, Debug)]
pub struct Slice {
    pub monopole: Monopole,
    pub objects: Vec<ArrowId>,
    pub arrows: Vec<ArrowId>,
}

/// Objects are the positive arrows out of `x`; a morphism `f → g` is an arrow
/// `ξ` with `ξ∘f = g`, positive iff `ξ` is.
pub fn coslice_monopole(m: &Monopole, x: ObjId, budget: usize) -> Result<Slice> {
    let c = &m.category;
    c.check_object(x)?;
    let objects: Vec<ArrowId> = c
        .objects()
        .flat_map(|b| c.hom(x, b).iter().copied())
        .filter(|&f| m.positive.contains(f))
        .collect();
    let over: Vec<ObjId> = objects.iter().map(|&f| c.tgt(f)).collect();
    let names = objects.iter().map(|&f| c.arrow_name(f).to_string()).collect();
    let (category, arrows) = materialize(
        c,
        names,
        &over,
        |i, j, xi| c.compose(xi, objects[i]) == objects[j],
        budget,
    )?;
    Ok(finish(m, category, objects, arrows))
}

/// Objects are the positive arrows into `x`; a morphism `f → g` is an arrow
/// `ξ` with `f = g∘ξ`, positive iff `ξ` is.
pub fn slice_monopole(m: &Monopole, x: ObjId, budget: usize) -> Result<Slice> {
    let c = &m.category;
    c.check_object(x)?;
    let objects: Vec<ArrowId> = c
        .objects()
        .flat_map(|a| c.hom(a, x).iter().copied())
        .filter(|&f| m.positive.contains(f))
        .collect();
    let over: Vec<ObjId> = objects.iter().map(|&f| c.src(f)).collect();
    let names = objects.iter().map(|&f| c.arrow_name(f).to_string()).collect();
    let (category, arrows) = materialize(
        c,
        names,
        &over,
        |i, j, xi| c.compose(objects[j], xi) == objects[i],
        budget,
    )?;
    Ok(finish(m, category, objects, arrows))
}

fn finish(m: &Monopole, category: FiniteCategory, objects: Vec<ArrowId>, arrows: Vec<ArrowId>) -> Slice {
    let positive = ArrowSet::from_predicate(category.arrow_count(), |i| m.positive.contains(arrows[i]));
    Slice {
        monopole: Monopole {
            category: Arc::new(category),
            positive,
            sign: m.sign,
        },
        objects,
        arrows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::small::walking_arrow;
    use crate::polarity::validate_monopole;

    #[test]
    fn coslice_of_the_walking_arrow() {
        let c = Arc::new(walking_arrow());
        let m = Monopole::everything(c.clone());
        let s = coslice_monopole(&m, 0, 100).unwrap();
        // 1a and u, with the single morphism u: 1a → u besides identities
        assert_eq!(s.objects, vec![0, 2]);
        assert_eq!(s.monopole.category.arrow_count(), 3);
        assert!(validate_monopole(&s.monopole).is_valid());
        let s = slice_monopole(&m, 0, 100).unwrap();
        assert_eq!(s.objects, vec![0]);
    }

    #[test]
    fn only_identity_positive_gives_one_object() {
        let c = Arc::new(walking_arrow());
        let m = Monopole::isos(c);
        let s = coslice_monopole(&m, 0, 100).unwrap();
        assert_eq!(s.monopole.category.object_count(), 1);
    }

    #[test]
    fn comma_over_identity_is_the_coslice() {
        let c = Arc::new(walking_arrow());
        let m = Monopole::everything(c.clone());
        let comma = CommaCategory::build(&c, 0, &c, &Functor::identity(&c), &m.positive, 100).unwrap();
        let s = coslice_monopole(&m, 0, 100).unwrap();
        assert_eq!(comma.category.arrow_count(), s.monopole.category.arrow_count());
        assert_eq!(comma.objects.iter().map(|o| o.1).collect::<Vec<_>>(), s.objects);
    }
}
