use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{props, ArrowId, FiniteCategory, Functor, FunctorViolation, ObjId};

use super::{Polarity, Sign};

/// A pair of functors on the positive and negative subcategories that agree
/// on objects. The positive part is contravariant exactly when the sign is
/// negative; the negative part is always covariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarFunctor {
    pub sign: Sign,
    pub plus: Functor,
    pub minus: Functor,
}

impl PolarFunctor {
    pub fn identity(c: &FiniteCategory) -> Self {
        Self {
            sign: Sign::Positive,
            plus: Functor::identity(c),
            minus: Functor::identity(c),
        }
    }

    /// Restriction of an ordinary covariant functor.
    pub fn restriction(f: &Functor) -> Self {
        Self {
            sign: Sign::Positive,
            plus: f.clone(),
            minus: f.clone(),
        }
    }

    pub fn object(&self, x: ObjId) -> ObjId {
        self.plus.object(x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PolarViolation {
    WrongVariance { part: Sign },
    Part { part: Sign, violation: FunctorViolation },
    ObjectsDisagree { object: ObjId },
    LeavesClass { part: Sign, arrow: ArrowId },
    ComponentTyping { object: ObjId },
    Naturality { part: Sign, arrow: ArrowId },
    NotIso { object: ObjId },
}

pub fn validate_polar_functor(f: &PolarFunctor, dom: &Polarity, cod: &Polarity) -> Vec<PolarViolation> {
    let mut out = Vec::new();
    if f.plus.contravariant != (f.sign == Sign::Negative) {
        out.push(PolarViolation::WrongVariance { part: Sign::Positive });
    }
    if f.minus.contravariant {
        out.push(PolarViolation::WrongVariance { part: Sign::Negative });
    }
    for (part, functor, src, tgt) in [
        (Sign::Positive, &f.plus, &dom.positive, &cod.positive),
        (Sign::Negative, &f.minus, &dom.negative, &cod.negative),
    ] {
        let violations = functor.validate(&dom.category, &cod.category, Some(src));
        let broken = !violations.is_empty();
        out.extend(violations.into_iter().map(|violation| PolarViolation::Part { part, violation }));
        if broken {
            continue;
        }
        for a in src.iter() {
            if functor.arrow(a).is_some_and(|img| !tgt.contains(img)) {
                out.push(PolarViolation::LeavesClass { part, arrow: a });
            }
        }
    }
    if f.plus.object_map.len() == f.minus.object_map.len() {
        for x in 0..f.plus.object_map.len() {
            if f.plus.object(x) != f.minus.object(x) {
                out.push(PolarViolation::ObjectsDisagree { object: x });
            }
        }
    } else {
        out.push(PolarViolation::ObjectsDisagree {
            object: f.plus.object_map.len().min(f.minus.object_map.len()),
        });
    }
    out
}

/// Components `η_x: Fx → Gx`. When `F` and `G` have opposite signs the
/// positive squares are read around the reversed arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarNatTrans {
    pub source: PolarFunctor,
    pub target: PolarFunctor,
    pub components: Vec<ArrowId>,
}

/// The square for one arrow `a: A → B` with images `fa` under the source
/// functor and `ga` under the target functor.
fn square_commutes(
    cod: &FiniteCategory,
    eta: &[ArrowId],
    (a_src, a_tgt): (ObjId, ObjId),
    (fa, f_contra): (ArrowId, bool),
    (ga, g_contra): (ArrowId, bool),
) -> bool {
    let (ea, eb) = (eta[a_src], eta[a_tgt]);
    match (f_contra, g_contra) {
        (false, false) => cod.compose(eb, fa) == cod.compose(ga, ea),
        (true, true) => cod.compose(ea, fa) == cod.compose(ga, eb),
        (false, true) => cod.compose_all(&[ga, eb, fa]) == ea,
        (true, false) => cod.compose_all(&[ga, ea, fa]) == eb,
    }
}

pub fn validate_polar_nat_trans(t: &PolarNatTrans, dom: &Polarity, cod: &FiniteCategory) -> Vec<PolarViolation> {
    let c = &dom.category;
    let mut out = Vec::new();
    if t.components.len() != c.object_count() {
        out.push(PolarViolation::ComponentTyping {
            object: t.components.len().min(c.object_count()),
        });
        return out;
    }
    for x in c.objects() {
        let e = t.components[x];
        if e >= cod.arrow_count() || cod.src(e) != t.source.object(x) || cod.tgt(e) != t.target.object(x) {
            out.push(PolarViolation::ComponentTyping { object: x });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (part, class, fp, gp) in [
        (Sign::Positive, &t.source.plus, &dom.positive, &t.target.plus),
        (Sign::Negative, &t.source.minus, &dom.negative, &t.target.minus),
    ]
    .map(|(part, f, class, g)| (part, class, f, g))
    {
        for a in class.iter() {
            let (Some(fa), Some(ga)) = (fp.arrow(a), gp.arrow(a)) else {
                out.push(PolarViolation::Naturality { part, arrow: a });
                continue;
            };
            if !square_commutes(
                cod,
                &t.components,
                (c.src(a), c.tgt(a)),
                (fa, fp.contravariant),
                (ga, gp.contravariant),
            ) {
                out.push(PolarViolation::Naturality { part, arrow: a });
            }
        }
    }
    out
}

/// Vertical composite `θ∘η`, componentwise.
pub fn compose_nat_trans(eta: &PolarNatTrans, theta: &PolarNatTrans, cod: &FiniteCategory) -> Result<PolarNatTrans> {
    if eta.target != theta.source {
        return Err(Error::Mismatch("transformations are not composable".into()));
    }
    let components = eta
        .components
        .iter()
        .zip(&theta.components)
        .map(|(&e, &t)| cod.try_compose(t, e).ok_or_else(|| Error::Mismatch("components do not compose".into())))
        .collect::<Result<_>>()?;
    Ok(PolarNatTrans {
        source: eta.source.clone(),
        target: theta.target.clone(),
        components,
    })
}

/// A polarity with a negative endofunctor `E` into the unpolarized category
/// and a unit `η: 1 ⇒ E` whose components at `EA` are isomorphisms.
#[derive(Clone, Debug, PartialEq)]
pub struct Voltage {
    pub polarity: Polarity,
    pub e: PolarFunctor,
    pub eta: Vec<ArrowId>,
}

impl Voltage {
    pub fn unit(&self) -> PolarNatTrans {
        PolarNatTrans {
            source: PolarFunctor::identity(&self.polarity.category),
            target: self.e.clone(),
            components: self.eta.clone(),
        }
    }
}

pub fn validate_voltage(v: &Voltage) -> Vec<PolarViolation> {
    let c = &v.polarity.category;
    let flat = Polarity::unpolarized(c.clone());
    let mut out = Vec::new();
    if v.e.sign != Sign::Negative {
        out.push(PolarViolation::WrongVariance { part: Sign::Positive });
    }
    out.extend(validate_polar_functor(&v.e, &v.polarity, &flat));
    if !out.is_empty() {
        return out;
    }
    out.extend(validate_polar_nat_trans(&v.unit(), &v.polarity, c));
    if v.eta.len() == c.object_count() {
        for x in c.objects() {
            let ex = v.e.object(x);
            if props::inverse(c, v.eta[ex]).is_none() {
                out.push(PolarViolation::NotIso { object: x });
            }
        }
    }
    out
}

/// A dagger category as a voltage: every arrow is positive and negative,
/// `E₊` is the dagger, `E₋` the identity, and `η` the identity.
pub fn dagger_voltage(c: Arc<FiniteCategory>, dagger: Functor) -> Voltage {
    let eta = c.objects().map(|x| c.identity(x)).collect();
    let e = PolarFunctor {
        sign: Sign::Negative,
        plus: dagger,
        minus: Functor::identity(&c),
    };
    Voltage {
        polarity: Polarity::unpolarized(c),
        e,
        eta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::small::{cyclic_group, walking_arrow};

    fn inversion(c: &FiniteCategory) -> Functor {
        let n = c.arrow_count();
        Functor {
            object_map: vec![0],
            arrow_map: (0..n).map(|k| Some((n - k) % n)).collect(),
            contravariant: true,
        }
    }

    #[test]
    fn identity_transformation_is_valid() {
        let c = Arc::new(walking_arrow());
        let p = Polarity::unpolarized(c.clone());
        let id = PolarFunctor::identity(&c);
        assert!(validate_polar_functor(&id, &p, &p).is_empty());
        let t = PolarNatTrans {
            source: id.clone(),
            target: id,
            components: vec![0, 1],
        };
        assert!(validate_polar_nat_trans(&t, &p, &c).is_empty());
    }

    #[test]
    fn dagger_on_the_group_of_order_two() {
        let c = Arc::new(cyclic_group(2));
        let v = dagger_voltage(c.clone(), inversion(&c));
        assert!(validate_voltage(&v).is_empty());
    }

    #[test]
    fn dagger_on_a_group_of_order_three() {
        let c = Arc::new(cyclic_group(3));
        let v = dagger_voltage(c.clone(), inversion(&c));
        assert!(validate_voltage(&v).is_empty());
    }

    /// The monoid `{1, z}` with `z∘z = z`. It is commutative, so the identity
    /// on arrows is also a contravariant functor (a dagger).
    fn idempotent_monoid() -> (Arc<FiniteCategory>, Functor) {
        let c = Arc::new(
            FiniteCategory::from_table(
                vec!["*".into()],
                vec![
                    crate::fincat::Arrow { name: "1".into(), src: 0, tgt: 0 },
                    crate::fincat::Arrow { name: "z".into(), src: 0, tgt: 0 },
                ],
                vec![0],
                |g, f| Some(g.max(f)),
                Default::default(),
            )
            .unwrap(),
        );
        let flip = Functor {
            contravariant: true,
            ..Functor::identity(&c)
        };
        (c, flip)
    }

    #[test]
    fn non_iso_component_is_listed() {
        let (c, flip) = idempotent_monoid();
        let mut v = dagger_voltage(c, flip);
        v.eta[0] = 1;
        assert_eq!(validate_voltage(&v), vec![PolarViolation::NotIso { object: 0 }]);
    }

    #[test]
    fn dagger_with_a_non_unitary_arrow_is_not_a_voltage() {
        // with η the identity the positive square reads z†∘z = 1
        let (c, flip) = idempotent_monoid();
        let v = dagger_voltage(c, flip);
        assert_eq!(
            validate_voltage(&v),
            vec![PolarViolation::Naturality {
                part: Sign::Positive,
                arrow: 1
            }]
        );
    }

    #[test]
    fn mixed_sign_composite_is_same_sign() {
        let c = Arc::new(cyclic_group(3));
        let p = Polarity::unpolarized(c.clone());
        let id = PolarFunctor::identity(&c);
        let neg = PolarFunctor {
            sign: Sign::Negative,
            plus: inversion(&c),
            minus: Functor::identity(&c),
        };
        let there = PolarNatTrans {
            source: id.clone(),
            target: neg.clone(),
            components: vec![0],
        };
        let back = PolarNatTrans {
            source: neg,
            target: id,
            components: vec![0],
        };
        assert!(validate_polar_nat_trans(&there, &p, &c).is_empty());
        assert!(validate_polar_nat_trans(&back, &p, &c).is_empty());
        let both = compose_nat_trans(&there, &back, &c).unwrap();
        assert_eq!(both.source.sign, both.target.sign);
        assert!(validate_polar_nat_trans(&both, &p, &c).is_empty());
    }
}
