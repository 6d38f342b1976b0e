//! Brute-force search for limits and colimits of finite diagrams.

use serde::Serialize;

use super::props::{epic, monic};
use super::{ArrowId, FiniteCategory, ObjId};
use crate::error::{Error, Result};

/// A finite diagram: `arrows` are `(from, to, arrow)` with `from`, `to`
/// indices into `objects`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Diagram {
    pub objects: Vec<ObjId>,
    pub arrows: Vec<(usize, usize, ArrowId)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cone {
    pub apex: ObjId,
    pub legs: Vec<ArrowId>,
}

impl Diagram {
    fn check(&self, c: &FiniteCategory) -> Result<()> {
        for &x in &self.objects {
            c.check_object(x)?;
        }
        for &(i, j, a) in &self.arrows {
            c.check_arrow(a)?;
            let ok = i < self.objects.len()
                && j < self.objects.len()
                && c.src(a) == self.objects[i]
                && c.tgt(a) == self.objects[j];
            if !ok {
                return Err(Error::Malformed(format!("diagram arrow {a} is mistyped")));
            }
        }
        Ok(())
    }
}

/// Every cone over `d` with the given apex, in lexicographic leg order.
pub fn cones(c: &FiniteCategory, d: &Diagram, apex: ObjId) -> Vec<Vec<ArrowId>> {
    let mut out = Vec::new();
    let mut legs = Vec::with_capacity(d.objects.len());
    extend_cone(c, d, apex, &mut legs, &mut out);
    out
}

fn extend_cone(c: &FiniteCategory, d: &Diagram, apex: ObjId, legs: &mut Vec<ArrowId>, out: &mut Vec<Vec<ArrowId>>) {
    let k = legs.len();
    if k == d.objects.len() {
        out.push(legs.clone());
        return;
    }
    for &leg in c.hom(apex, d.objects[k]) {
        legs.push(leg);
        let commutes = d.arrows.iter().all(|&(i, j, a)| {
            // only arrows whose ends are both assigned, touching the new leg
            if i.max(j) != k {
                return true;
            }
            c.compose(a, legs[i]) == legs[j]
        });
        if commutes {
            extend_cone(c, d, apex, legs, out);
        }
        legs.pop();
    }
}

/// The arrows `u: w → apex` with `legs[i]∘u = other[i]` for every `i`.
fn mediators(c: &FiniteCategory, w: ObjId, cone: &Cone, other: &[ArrowId]) -> Vec<ArrowId> {
    c.hom(w, cone.apex)
        .iter()
        .copied()
        .filter(|&u| cone.legs.iter().zip(other).all(|(&l, &o)| c.compose(l, u) == o))
        .collect()
}

/// `cone` commutes over `d` and every other cone factors through it uniquely.
pub fn is_limiting(c: &FiniteCategory, d: &Diagram, cone: &Cone) -> bool {
    let commutes = cone.legs.len() == d.objects.len()
        && d.arrows.iter().all(|&(i, j, a)| c.compose(a, cone.legs[i]) == cone.legs[j]);
    commutes && is_limit(c, d, cone)
}

fn is_limit(c: &FiniteCategory, d: &Diagram, cone: &Cone) -> bool {
    c.objects().all(|w| {
        cones(c, d, w)
            .iter()
            .all(|other| mediators(c, w, cone, other).len() == 1)
    })
}

/// All limiting cones, apexes in object-id order.
pub fn all_limits(c: &FiniteCategory, d: &Diagram) -> Vec<Cone> {
    let mut out = Vec::new();
    for apex in c.objects() {
        for legs in cones(c, d, apex) {
            let cone = Cone { apex, legs };
            if is_limit(c, d, &cone) {
                out.push(cone);
            }
        }
    }
    out
}

/// The first limiting cone in object-id then leg order.
pub fn limit(c: &FiniteCategory, d: &Diagram) -> Result<Option<Cone>> {
    d.check(c)?;
    for apex in c.objects() {
        for legs in cones(c, d, apex) {
            let cone = Cone { apex, legs };
            if is_limit(c, d, &cone) {
                return Ok(Some(cone));
            }
        }
    }
    Ok(None)
}

/// Colimit of `d` (arrows given in `c`), computed as a limit in the opposite
/// category; legs run from the diagram objects to the apex.
pub fn colimit(c: &FiniteCategory, d: &Diagram) -> Result<Option<Cone>> {
    d.check(c)?;
    limit(&c.opposite(), &reverse(d))
}

fn reverse(d: &Diagram) -> Diagram {
    Diagram {
        objects: d.objects.clone(),
        arrows: d.arrows.iter().map(|&(i, j, a)| (j, i, a)).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UniversalKind {
    Equalizer,
    Coequalizer,
    Pullback,
    Pushout,
    Product,
    Coproduct,
    Terminal,
    Initial,
}

impl UniversalKind {
    fn is_colimit(self) -> bool {
        matches!(self, Self::Coequalizer | Self::Pushout | Self::Coproduct | Self::Initial)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UniversalData {
    Nothing,
    /// Two arrows: parallel for (co)equalizers, a cospan for pullbacks, a
    /// span for pushouts.
    Arrows(ArrowId, ArrowId),
    Objects(ObjId, ObjId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniversalResult {
    pub apex: Option<ObjId>,
    /// One leg per diagram object. For equalizers the diagram is
    /// `[source, target]`, for pullbacks `[A, B, C]` over a cospan `A → C ← B`;
    /// colimit legs point into the apex.
    pub legs: Vec<ArrowId>,
    /// Mediating arrows exist and are unique for every competing cone.
    pub unique_mediators: bool,
    pub absent: bool,
}

impl UniversalResult {
    fn from_cone(cone: Option<Cone>) -> Self {
        match cone {
            Some(c) => Self {
                apex: Some(c.apex),
                legs: c.legs,
                unique_mediators: true,
                absent: false,
            },
            None => Self {
                apex: None,
                legs: Vec::new(),
                unique_mediators: false,
                absent: true,
            },
        }
    }

    pub fn leg(&self, i: usize) -> Option<ArrowId> {
        self.legs.get(i).copied()
    }
}

/// The diagram for a limit kind, read in `c` (pass the opposite category for
/// colimit kinds).
fn diagram(c: &FiniteCategory, kind: UniversalKind, data: UniversalData) -> Result<Diagram> {
    use UniversalKind::*;
    let malformed = || Error::Malformed(format!("{kind:?} does not accept {data:?}"));
    match (kind, data) {
        (Terminal | Initial, UniversalData::Nothing) => Ok(Diagram::default()),
        (Product | Coproduct, UniversalData::Objects(x, y)) => {
            c.check_object(x)?;
            c.check_object(y)?;
            Ok(Diagram {
                objects: vec![x, y],
                arrows: vec![],
            })
        }
        (Equalizer | Coequalizer, UniversalData::Arrows(f, g)) => {
            c.check_arrow(f)?;
            c.check_arrow(g)?;
            if c.src(f) != c.src(g) || c.tgt(f) != c.tgt(g) {
                return Err(Error::Malformed(format!("arrows {f} and {g} are not parallel")));
            }
            Ok(Diagram {
                objects: vec![c.src(f), c.tgt(f)],
                arrows: vec![(0, 1, f), (0, 1, g)],
            })
        }
        (Pullback | Pushout, UniversalData::Arrows(f, g)) => {
            c.check_arrow(f)?;
            c.check_arrow(g)?;
            if c.tgt(f) != c.tgt(g) {
                return Err(Error::Malformed(format!("arrows {f} and {g} do not share a target")));
            }
            Ok(Diagram {
                objects: vec![c.src(f), c.src(g), c.tgt(f)],
                arrows: vec![(0, 2, f), (1, 2, g)],
            })
        }
        _ => Err(malformed()),
    }
}

pub fn find_universal(c: &FiniteCategory, kind: UniversalKind, data: UniversalData) -> Result<UniversalResult> {
    if kind.is_colimit() {
        let op = c.opposite();
        let d = diagram(&op, kind, data)?;
        Ok(UniversalResult::from_cone(limit(&op, &d)?))
    } else {
        let d = diagram(c, kind, data)?;
        Ok(UniversalResult::from_cone(limit(c, &d)?))
    }
}

/// Like [`find_universal`], but also enumerates every universal cone and
/// checks that each pair is related by an isomorphism commuting with the
/// legs. Returns the first result and whether the cross-check held.
pub fn find_universal_checked(
    c: &FiniteCategory,
    kind: UniversalKind,
    data: UniversalData,
) -> Result<(UniversalResult, bool)> {
    let owned;
    let view = if kind.is_colimit() {
        owned = c.opposite();
        &owned
    } else {
        c
    };
    let d = diagram(view, kind, data)?;
    let all = all_limits(view, &d);
    let consistent = all.iter().all(|a| {
        all.iter().all(|b| {
            let m = mediators(view, b.apex, a, &b.legs);
            m.len() == 1 && super::props::inverse(view, m[0]).is_some()
        })
    });
    Ok((UniversalResult::from_cone(all.into_iter().next()), consistent))
}

/// Pullback of `f` along itself.
pub fn kernel_pair(c: &FiniteCategory, f: ArrowId) -> Result<UniversalResult> {
    find_universal(c, UniversalKind::Pullback, UniversalData::Arrows(f, f))
}

/// Pushout of `f` along itself.
pub fn cokernel_pair(c: &FiniteCategory, f: ArrowId) -> Result<UniversalResult> {
    find_universal(c, UniversalKind::Pushout, UniversalData::Arrows(f, f))
}

/// `Im(f)`: equalizer of the cokernel pair. Leg 0 is the arrow `Im(f) → tgt(f)`.
pub fn image(c: &FiniteCategory, f: ArrowId) -> Result<UniversalResult> {
    let ck = cokernel_pair(c, f)?;
    if ck.absent {
        return Ok(ck);
    }
    find_universal(c, UniversalKind::Equalizer, UniversalData::Arrows(ck.legs[0], ck.legs[1]))
}

/// `CoIm(f)`: coequalizer of the kernel pair. Leg 0 is the arrow `src(f) → CoIm(f)`.
pub fn coimage(c: &FiniteCategory, f: ArrowId) -> Result<UniversalResult> {
    let k = kernel_pair(c, f)?;
    if k.absent {
        return Ok(k);
    }
    find_universal(c, UniversalKind::Coequalizer, UniversalData::Arrows(k.legs[0], k.legs[1]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub arrow: ArrowId,
    pub monic: bool,
    pub epic: bool,
}

/// The arrow `ρ: CoIm(f) → Im(f)` with `m∘ρ∘e = f`, or `None` when a required
/// (co)limit is missing.
pub fn regular_comparison(c: &FiniteCategory, f: ArrowId) -> Result<Option<Comparison>> {
    c.check_arrow(f)?;
    let (im, coim) = (image(c, f)?, coimage(c, f)?);
    let (Some(i), Some(q)) = (im.apex, coim.apex) else {
        return Ok(None);
    };
    let (m, e) = (im.legs[0], coim.legs[0]);
    Ok(c.hom(q, i)
        .iter()
        .copied()
        .find(|&r| c.compose_all(&[m, r, e]) == f)
        .map(|r| Comparison {
            arrow: r,
            monic: monic(c, r),
            epic: epic(c, r),
        }))
}

/// `ρ(f)` is an isomorphism.
pub fn is_regular(c: &FiniteCategory, f: ArrowId) -> Result<bool> {
    match regular_comparison(c, f)? {
        Some(r) => Ok(super::props::inverse(c, r.arrow).is_some()),
        None => Err(Error::ComparisonUndefined),
    }
}
