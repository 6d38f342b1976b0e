//! Monopoles, polarities, hereditary cores, polar functors and voltages.

mod hereditary;
mod normal;
mod polar;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{props, ArrowId, ArrowSet, FiniteCategory, ObjId};

pub use hereditary::{
    essential_monics, essential_regular_monics, hereditary_violation, is_left_hereditary, left_hereditary_core,
    maximality_scan,
};
pub use normal::{is_normal_monic, Normality};
pub use polar::{
    compose_nat_trans, dagger_voltage, validate_polar_functor, validate_polar_nat_trans, validate_voltage,
    PolarFunctor, PolarNatTrans, PolarViolation, Voltage,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    /// Product sign rule.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RefinementViolation {
    OutOfRange { arrow: ArrowId },
    MissingIdentity { object: ObjId },
    MissingIso { arrow: ArrowId },
    NotClosed { g: ArrowId, f: ArrowId },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RefinementReport {
    pub violations: Vec<RefinementViolation>,
}

impl RefinementReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Lists missing identities and isomorphisms and non-closed composites.
pub fn validate_refinement(c: &FiniteCategory, s: &ArrowSet) -> RefinementReport {
    let mut violations = Vec::new();
    if s.universe() != c.arrow_count() {
        violations.push(RefinementViolation::OutOfRange {
            arrow: s.universe().max(c.arrow_count()),
        });
        return RefinementReport { violations };
    }
    for x in c.objects() {
        if !s.contains(c.identity(x)) {
            violations.push(RefinementViolation::MissingIdentity { object: x });
        }
    }
    for f in c.arrow_ids() {
        if !c.is_identity(f) && !s.contains(f) && props::inverse(c, f).is_some() {
            violations.push(RefinementViolation::MissingIso { arrow: f });
        }
    }
    for f in s.iter() {
        for z in c.objects() {
            for &g in c.hom(c.tgt(f), z) {
                if s.contains(g) && !s.contains(c.compose(g, f)) {
                    violations.push(RefinementViolation::NotClosed { g, f });
                }
            }
        }
    }
    RefinementReport { violations }
}

/// A category with one distinguished refinement. The sign is metadata: a
/// negative monopole behaves exactly like a positive one.
#[derive(Clone, Debug, PartialEq)]
pub struct Monopole {
    pub category: Arc<FiniteCategory>,
    pub positive: ArrowSet,
    pub sign: Sign,
}

impl Monopole {
    pub fn new(category: Arc<FiniteCategory>, positive: ArrowSet) -> Self {
        Self {
            category,
            positive,
            sign: Sign::Positive,
        }
    }

    pub fn everything(category: Arc<FiniteCategory>) -> Self {
        let all = ArrowSet::full(category.arrow_count());
        Self::new(category, all)
    }

    pub fn isos(category: Arc<FiniteCategory>) -> Self {
        let isos = props::isos(&category);
        Self::new(category, isos)
    }

    pub fn monics(category: Arc<FiniteCategory>) -> Self {
        let m = props::monics(&category);
        Self::new(category, m)
    }

    pub fn regular_monics(category: Arc<FiniteCategory>) -> Self {
        let m = props::regular_monics(&category);
        Self::new(category, m)
    }

    pub fn epics(category: Arc<FiniteCategory>) -> Self {
        let m = props::epics(&category);
        Self::new(category, m)
    }

    pub fn is_positive(&self, f: ArrowId) -> bool {
        self.positive.contains(f)
    }

    /// The same monopole restricted to `h`, which must be a refinement
    /// contained in the positives.
    pub fn restrict(&self, h: &ArrowSet) -> Result<Monopole> {
        if !h.is_subset(&self.positive) {
            return Err(Error::NotARefinement("restriction is not contained in the positives".into()));
        }
        let report = validate_refinement(&self.category, h);
        if !report.is_valid() {
            return Err(Error::NotARefinement(format!("{:?}", report.violations)));
        }
        Ok(Monopole {
            category: self.category.clone(),
            positive: h.clone(),
            sign: self.sign,
        })
    }

    /// The polarity whose other class is every arrow.
    pub fn as_polarity(&self) -> Polarity {
        let all = ArrowSet::full(self.category.arrow_count());
        let (positive, negative) = match self.sign {
            Sign::Positive => (self.positive.clone(), all),
            Sign::Negative => (all, self.positive.clone()),
        };
        Polarity {
            category: self.category.clone(),
            positive,
            negative,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polarity {
    pub category: Arc<FiniteCategory>,
    pub positive: ArrowSet,
    pub negative: ArrowSet,
}

impl Polarity {
    pub fn new(category: Arc<FiniteCategory>, positive: ArrowSet, negative: ArrowSet) -> Self {
        Self {
            category,
            positive,
            negative,
        }
    }

    /// Every arrow positive and negative.
    pub fn unpolarized(category: Arc<FiniteCategory>) -> Self {
        let all = ArrowSet::full(category.arrow_count());
        Self::new(category, all.clone(), all)
    }

    pub fn positive_monopole(&self) -> Monopole {
        Monopole::new(self.category.clone(), self.positive.clone())
    }

    pub fn negative_monopole(&self) -> Monopole {
        Monopole {
            category: self.category.clone(),
            positive: self.negative.clone(),
            sign: Sign::Negative,
        }
    }
}

pub fn validate_monopole(m: &Monopole) -> RefinementReport {
    validate_refinement(&m.category, &m.positive)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PolarityReport {
    pub positive: RefinementReport,
    pub negative: RefinementReport,
}

impl PolarityReport {
    pub fn is_valid(&self) -> bool {
        self.positive.is_valid() && self.negative.is_valid()
    }
}

pub fn validate_polarity(p: &Polarity) -> PolarityReport {
    PolarityReport {
        positive: validate_refinement(&p.category, &p.positive),
        negative: validate_refinement(&p.category, &p.negative),
    }
}

fn same_category(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::Mismatch("monopoles over different categories".into()))
    }
}

pub fn is_sub_monopole(m1: &Monopole, m2: &Monopole) -> Result<bool> {
    same_category(&m1.category, &m2.category)?;
    Ok(m1.positive.is_subset(&m2.positive))
}

pub fn is_sub_polarity(p1: &Polarity, p2: &Polarity) -> Result<bool> {
    same_category(&p1.category, &p2.category)?;
    Ok(p1.positive.is_subset(&p2.positive) && p1.negative.is_subset(&p2.negative))
}

/// Negative arrows out of `tgt(f)` are separated by precomposition with `f`.
pub fn is_negatively_epic(p: &Polarity, f: ArrowId) -> Result<bool> {
    let c = &p.category;
    c.check_arrow(f)?;
    let mut seen = Vec::new();
    for z in c.objects() {
        seen.clear();
        seen.extend(c.hom(c.tgt(f), z).iter().filter(|&&q| p.negative.contains(q)).map(|&q| c.compose(q, f)));
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Ok(false);
        }
    }
    Ok(true)
}
