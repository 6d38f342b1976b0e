use crate::error::Result;
use crate::fincat::{ArrowSet, FiniteCategory, ObjId};
use crate::polarity::{Monopole, Polarity};

fn extends(c: &FiniteCategory, x: ObjId, positive: &ArrowSet, negative: &ArrowSet) -> bool {
    positive.iter().all(|g| {
        let (a, b) = (c.src(g), c.tgt(g));
        c.hom(a, x)
            .iter()
            .filter(|&&f| negative.contains(f))
            .all(|&f| c.hom(b, x).iter().any(|&h| c.compose(h, g) == f))
    })
}

/// Every negative `f: a → x` extends along every positive `g: a → b`.
pub fn is_injective_polarity(p: &Polarity, x: ObjId) -> Result<bool> {
    p.category.check_object(x)?;
    Ok(extends(&p.category, x, &p.positive, &p.negative))
}

/// The polarity case with every arrow negative.
pub fn is_injective_monopole(m: &Monopole, x: ObjId) -> Result<bool> {
    is_injective_polarity(&m.as_polarity(), x)
}

/// Injective objects in id order.
pub fn injective_objects(p: &Polarity) -> Vec<ObjId> {
    let c = &p.category;
    c.objects().filter(|&x| extends(c, x, &p.positive, &p.negative)).collect()
}

/// Every object has a positive arrow into an injective object.
pub fn has_enough_injectives(p: &Polarity) -> bool {
    let c = &p.category;
    let injective = injective_objects(p);
    c.objects().all(|a| {
        injective
            .iter()
            .any(|&x| c.hom(a, x).iter().any(|&f| p.positive.contains(f)))
    })
}
