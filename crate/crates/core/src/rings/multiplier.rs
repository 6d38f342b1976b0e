use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    additive_homs, annihilator, extend_additive, image, is_essential_ideal, is_ideal, is_injective,
    is_non_degenerate, is_non_degenerate_hom, is_ring_hom, is_unital_hom, ring_homs, FinRing, Subset, MAX_ELEMENTS,
};
use crate::error::{Error, Result};

/// Left and right multipliers of a ring, as full value tables.
pub type Multiplier = (Vec<usize>, Vec<usize>);

/// `M(R)`: pairs `(λ, ρ)` of additive endomorphisms with `λ(ab) = λ(a)b`,
/// `ρ(ab) = aρ(b)` and `aλ(b) = ρ(a)b`, where `λ(a)` stands for `ma` and
/// `ρ(a)` for `am`. Product `(λ₁, ρ₁)(λ₂, ρ₂) = (λ₁∘λ₂, ρ₂∘ρ₁)`.
#[derive(Clone, Debug)]
pub struct MultiplierRing {
    pub base: FinRing,
    /// Sorted; element `i` of `ring` is `pairs[i]`.
    pub pairs: Vec<Multiplier>,
    pub ring: FinRing,
    /// `ξ ↦ (a ↦ ξa, a ↦ aξ)`.
    pub embedding: Vec<usize>,
}

impl MultiplierRing {
    pub fn index(&self, m: &Multiplier) -> Option<usize> {
        self.pairs.binary_search(m).ok()
    }
}

pub fn multiplier_ring(r: &FinRing) -> Result<MultiplierRing> {
    if r.len() > MAX_ELEMENTS {
        return Err(Error::TooLarge {
            size: r.len(),
            limit: MAX_ELEMENTS,
        });
    }
    if !is_non_degenerate(r) {
        return Err(Error::Precondition(format!(
            "degenerate ring: annihilator has {} elements",
            annihilator(r).count_ones()
        )));
    }
    let n = r.len();
    let endos = additive_homs(r, r);
    let mut lambdas: Vec<&Vec<usize>> = endos
        .par_iter()
        .filter(|l| (0..n).all(|a| (0..n).all(|b| l[r.mul(a, b)] == r.mul(l[a], b))))
        .collect();
    let mut rhos: Vec<&Vec<usize>> = endos
        .par_iter()
        .filter(|p| (0..n).all(|a| (0..n).all(|b| p[r.mul(a, b)] == r.mul(a, p[b]))))
        .collect();
    lambdas.sort();
    rhos.sort();
    let pairs: Vec<Multiplier> = lambdas
        .par_iter()
        .flat_map_iter(|l| {
            rhos.iter()
                .filter(|p| (0..n).all(|a| (0..n).all(|b| r.mul(a, l[b]) == r.mul(p[a], b))))
                .map(|p| ((*l).clone(), (*p).clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    if pairs.len() > Subset::BITS as usize {
        return Err(Error::TooLarge {
            size: pairs.len(),
            limit: Subset::BITS as usize,
        });
    }
    let index: HashMap<&Multiplier, usize> = pairs.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let embedded: Vec<Multiplier> = (0..n)
        .map(|x| ((0..n).map(|a| r.mul(x, a)).collect(), (0..n).map(|a| r.mul(a, x)).collect()))
        .collect();
    let embedding: Vec<usize> = embedded
        .iter()
        .map(|m| index.get(m).copied().ok_or_else(|| Error::Mismatch("inner multiplier missing".into())))
        .collect::<Result<_>>()?;
    let names = (0..pairs.len())
        .map(|i| match embedding.iter().position(|&e| e == i) {
            Some(x) => r.names()[x].clone(),
            None => format!("m{i}"),
        })
        .collect();
    let add = |x: usize, y: usize| {
        let (l1, p1) = &pairs[x];
        let (l2, p2) = &pairs[y];
        let m: Multiplier = ((0..n).map(|a| r.add(l1[a], l2[a])).collect(), (0..n).map(|a| r.add(p1[a], p2[a])).collect());
        index[&m]
    };
    let mul = |x: usize, y: usize| {
        let (l1, p1) = &pairs[x];
        let (l2, p2) = &pairs[y];
        let m: Multiplier = ((0..n).map(|a| l1[l2[a]]).collect(), (0..n).map(|a| p2[p1[a]]).collect());
        index[&m]
    };
    let ring = FinRing::generated(names, add, mul);
    if !is_injective(&embedding) || !is_ring_hom(r, &ring, &embedding) || !is_ideal(&ring, image(&embedding)) {
        return Err(Error::Mismatch("canonical embedding is not an injective ideal homomorphism".into()));
    }
    if !is_essential_ideal(&ring, image(&embedding)) {
        return Err(Error::Mismatch("canonical embedding has a non-essential image".into()));
    }
    drop(index);
    Ok(MultiplierRing {
        base: r.clone(),
        pairs,
        ring,
        embedding,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplierExtension {
    /// `φ: M(A) → M(B)` on indices of `pairs`.
    pub map: Vec<usize>,
    /// Ring homomorphisms `M(A) → M(B)` extending `f`, found by search.
    pub extensions_found: usize,
}

/// The unital extension of a non-degenerate `f: A → B` to multiplier rings,
/// given by `φ(m)·f(a)b = f(ma)b` and `b f(a)·φ(m) = b f(am)`.
pub fn extend_multiplier_hom(ma: &MultiplierRing, mb: &MultiplierRing, f: &[usize]) -> Result<MultiplierExtension> {
    let (a, b) = (&ma.base, &mb.base);
    if !is_ring_hom(a, b, f) || !is_non_degenerate_hom(b, f) {
        return Err(Error::Precondition("extension needs a non-degenerate homomorphism".into()));
    }
    let map = ma
        .pairs
        .iter()
        .map(|(l, p)| {
            let left: Vec<(usize, usize)> = (0..a.len())
                .flat_map(|x| (0..b.len()).map(move |y| (x, y)))
                .map(|(x, y)| (b.mul(f[x], y), b.mul(f[l[x]], y)))
                .collect();
            let right: Vec<(usize, usize)> = (0..a.len())
                .flat_map(|x| (0..b.len()).map(move |y| (x, y)))
                .map(|(x, y)| (b.mul(y, f[x]), b.mul(y, f[p[x]])))
                .collect();
            let m = (
                extend_additive(b, b, &left).ok_or_else(|| Error::Mismatch("left action is not well defined".into()))?,
                extend_additive(b, b, &right).ok_or_else(|| Error::Mismatch("right action is not well defined".into()))?,
            );
            mb.index(&m).ok_or_else(|| Error::Mismatch("extended pair is not a multiplier".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let extends = |g: &[usize]| (0..a.len()).all(|x| g[ma.embedding[x]] == mb.embedding[f[x]]);
    if !is_ring_hom(&ma.ring, &mb.ring, &map) || !is_unital_hom(&ma.ring, &mb.ring, &map) || !extends(&map) {
        return Err(Error::Mismatch("extension is not a unital homomorphism extending f".into()));
    }
    let extensions_found = ring_homs(&ma.ring, &mb.ring).iter().filter(|g| extends(g)).count();
    Ok(MultiplierExtension { map, extensions_found })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealLift {
    /// `ψ: M(B) → M(A)` on indices of `pairs`.
    pub map: Vec<usize>,
    pub injective: bool,
    /// Whether the image of `f` is an essential ideal of `B`.
    pub essential: bool,
    /// Unital homomorphisms `ψ` with `ψ∘μ_B∘f = μ_A`, found by search.
    pub lifts_found: usize,
}

/// For `f: A → B` injective with ideal image, the `ψ: M(B) → M(A)` with
/// `ψ(m)a = f⁻¹(m f(a))` and `aψ(m) = f⁻¹(f(a) m)`.
pub fn lift_ideal_embedding(ma: &MultiplierRing, mb: &MultiplierRing, f: &[usize]) -> Result<IdealLift> {
    let (a, b) = (&ma.base, &mb.base);
    if !is_ring_hom(a, b, f) || !is_injective(f) || !is_ideal(b, image(f)) {
        return Err(Error::Precondition("lift needs an injective homomorphism with ideal image".into()));
    }
    let mut inverse = vec![usize::MAX; b.len()];
    for (x, &y) in f.iter().enumerate() {
        inverse[y] = x;
    }
    let back = |y: usize| match inverse[y] {
        usize::MAX => Err(Error::Precondition("a multiplier moves the ideal outside itself".into())),
        x => Ok(x),
    };
    let map = mb
        .pairs
        .iter()
        .map(|(l, p)| {
            let m = (
                (0..a.len()).map(|x| back(l[f[x]])).collect::<Result<Vec<_>>>()?,
                (0..a.len()).map(|x| back(p[f[x]])).collect::<Result<Vec<_>>>()?,
            );
            ma.index(&m).ok_or_else(|| Error::Mismatch("restricted pair is not a multiplier".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let lifts = |g: &[usize]| (0..a.len()).all(|x| g[mb.embedding[f[x]]] == ma.embedding[x]);
    if !is_ring_hom(&mb.ring, &ma.ring, &map) || !is_unital_hom(&mb.ring, &ma.ring, &map) || !lifts(&map) {
        return Err(Error::Mismatch("restriction is not a unital lift".into()));
    }
    let lifts_found = ring_homs(&mb.ring, &ma.ring)
        .iter()
        .filter(|g| is_unital_hom(&mb.ring, &ma.ring, g) && lifts(g))
        .count();
    Ok(IdealLift {
        injective: is_injective(&map),
        essential: is_essential_ideal(b, image(f)),
        map,
        lifts_found,
    })
}
