use serde::Serialize;

use super::{ideals, image, is_essential_ideal, is_ideal, is_injective, members, pseudocomplement, FinRing, Subset};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientKernelReport {
    pub ideal: Subset,
    pub complement: Subset,
    pub quotient_size: usize,
    pub injective: bool,
    pub ideal_image: bool,
    pub essential_image: bool,
}

impl QuotientKernelReport {
    pub fn holds(&self) -> bool {
        self.injective && self.ideal_image && self.essential_image
    }
}

/// With `J` the pseudocomplement of `I` and `p: R → R/J`, checks that
/// `p` restricted to `I` is injective with essential ideal image.
pub fn check_quotient_kernel(r: &FinRing, i: Subset) -> Result<QuotientKernelReport> {
    if !is_ideal(r, i) {
        return Err(Error::Precondition(format!("{i:#x} is not an ideal")));
    }
    let j = pseudocomplement(r, i).ok_or_else(|| Error::Precondition(format!("{i:#x} has no pseudocomplement")))?;
    let (q, p) = r.quotient(j);
    let xi: Vec<usize> = members(i).map(|x| p[x]).collect();
    Ok(QuotientKernelReport {
        ideal: i,
        complement: j,
        quotient_size: q.len(),
        injective: is_injective(&xi),
        ideal_image: is_ideal(&q, image(&xi)),
        essential_image: is_essential_ideal(&q, image(&xi)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialComplementReport {
    /// `f∘m` monic implies `f` monic.
    pub essential_monic: bool,
    /// `f∘m` a normal monic implies `f` monic.
    pub normal_pushforward: bool,
    /// The only ideal meeting `I` in zero is zero.
    pub orthogonal_trivial: bool,
}

impl TrivialComplementReport {
    pub fn agree(&self) -> bool {
        self.essential_monic == self.normal_pushforward && self.normal_pushforward == self.orthogonal_trivial
    }
}

/// The three characterizations of an essential ideal inclusion `m: I → R`.
/// Every homomorphism out of `R` is a quotient followed by an injection, so
/// the first two are tested on the quotient maps `R → R/K`.
pub fn check_trivial_complement(r: &FinRing, i: Subset) -> Result<TrivialComplementReport> {
    if !is_ideal(r, i) {
        return Err(Error::Precondition(format!("{i:#x} is not an ideal")));
    }
    let zero: Subset = 1 << r.zero();
    let all = ideals(r);
    let quotients: Vec<(FinRing, Vec<usize>)> = all.iter().map(|&k| r.quotient(k)).collect();
    let restricted = |p: &[usize]| members(i).map(|x| p[x]).collect::<Vec<_>>();
    Ok(TrivialComplementReport {
        essential_monic: quotients
            .iter()
            .all(|(_, p)| !is_injective(&restricted(p)) || is_injective(p)),
        normal_pushforward: quotients.iter().all(|(q, p)| {
            let fm = restricted(p);
            !(is_injective(&fm) && is_ideal(q, image(&fm))) || is_injective(p)
        }),
        orthogonal_trivial: all.iter().all(|&j| j & i != zero || j == zero),
    })
}
