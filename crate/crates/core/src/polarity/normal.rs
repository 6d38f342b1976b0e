use serde::Serialize;

use crate::error::Result;
use crate::fincat::universal::{find_universal, is_limiting, Cone, Diagram, UniversalData, UniversalKind};
use crate::fincat::{props, ArrowId, FiniteCategory, ObjId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normality {
    Normal,
    NotNormal,
    /// A product or pullback the definition needs is missing.
    Undecided,
}

struct Product {
    apex: ObjId,
    left: ArrowId,
    right: ArrowId,
}

fn product(c: &FiniteCategory, x: ObjId) -> Result<Option<Product>> {
    let r = find_universal(c, UniversalKind::Product, UniversalData::Objects(x, x))?;
    Ok(r.apex.map(|apex| Product {
        apex,
        left: r.legs[0],
        right: r.legs[1],
    }))
}

/// The unique `u: w → p.apex` with the given projections.
fn pair(c: &FiniteCategory, p: &Product, w: ObjId, a: ArrowId, b: ArrowId) -> ArrowId {
    *c.hom(w, p.apex)
        .iter()
        .find(|&&u| c.compose(p.left, u) == a && c.compose(p.right, u) == b)
        .expect("product pairing exists")
}

fn factors(c: &FiniteCategory, r: ArrowId, g: ArrowId) -> Option<ArrowId> {
    c.hom(c.src(g), c.src(r)).iter().copied().find(|&t| c.compose(r, t) == g)
}

fn cospan(a: ArrowId, b: ArrowId, c: &FiniteCategory) -> Diagram {
    Diagram {
        objects: vec![c.src(a), c.src(b), c.tgt(a)],
        arrows: vec![(0, 2, a), (1, 2, b)],
    }
}

/// `f` is normal to some equivalence relation `r: R → Y×Y`: `f×f` factors
/// through `r` via a pullback square and `d₀∘r` pulls back along `f` to the
/// first projection of `X×X`.
pub fn is_normal_monic(c: &FiniteCategory, f: ArrowId) -> Result<Normality> {
    c.check_arrow(f)?;
    if !props::monic(c, f) {
        return Ok(Normality::NotNormal);
    }
    let (x, y) = (c.src(f), c.tgt(f));
    let (Some(yy), Some(xx)) = (product(c, y)?, product(c, x)?) else {
        return Ok(Normality::Undecided);
    };
    let ff = pair(
        c,
        &yy,
        xx.apex,
        c.compose(f, xx.left),
        c.compose(f, xx.right),
    );
    let diagonal = pair(c, &yy, y, c.identity(y), c.identity(y));
    let swap = pair(c, &yy, yy.apex, yy.right, yy.left);
    let mut undecided = false;
    for rel in c.objects() {
        for &r in c.hom(rel, yy.apex) {
            if !props::monic(c, r) || factors(c, r, diagonal).is_none() {
                continue;
            }
            if factors(c, r, c.compose(swap, r)).is_none() {
                continue;
            }
            let (d0, d1) = (c.compose(yy.left, r), c.compose(yy.right, r));
            let t = find_universal(c, UniversalKind::Pullback, UniversalData::Arrows(d1, d0))?;
            let Some(tp) = t.apex else {
                undecided = true;
                continue;
            };
            let composite = pair(c, &yy, tp, c.compose(d0, t.legs[0]), c.compose(d1, t.legs[1]));
            if factors(c, r, composite).is_none() {
                continue;
            }
            let Some(xi) = factors(c, r, ff) else { continue };
            let first = Cone {
                apex: xx.apex,
                legs: vec![c.identity(xx.apex), xi, ff],
            };
            let second = Cone {
                apex: xx.apex,
                legs: vec![xx.left, xi, c.compose(f, xx.left)],
            };
            if is_limiting(c, &cospan(ff, r, c), &first) && is_limiting(c, &cospan(f, d0, c), &second) {
                return Ok(Normality::Normal);
            }
        }
    }
    Ok(if undecided { Normality::Undecided } else { Normality::NotNormal })
}
