//! Completely prime spectrum, prime segments and their classification.

use serde::{Deserialize, Serialize};

use crate::classify::{primeness_condition, waist_condition, PrimenessKind};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideals::{enumerate_ideals, intersect_powers, IdealFamily, IdealKind};
use crate::kernel::{Element, Semigroup};

/// Nonempty proper completely prime two-sided ideals, sorted.
pub fn completely_prime_spectrum(s: &Semigroup, cap: usize) -> Result<IdealFamily> {
    let two = two_sided(s, cap)?;
    let members = two
        .iter()
        .filter(|&x| {
            !x.is_empty() && x != s.all() && primeness_condition(s, x, PrimenessKind::CompletelyPrime)
        })
        .collect();
    Ok(IdealFamily {
        kind: IdealKind::TwoSided,
        members,
        truncated: false,
    })
}

fn two_sided(s: &Semigroup, cap: usize) -> Result<IdealFamily> {
    let fam = enumerate_ideals(s, IdealKind::TwoSided, cap);
    if fam.truncated {
        return Err(Error::CapExceeded(cap));
    }
    Ok(fam)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimeSegment {
    pub p2: ElemSet,
    pub p1: ElemSet,
    pub bottom: bool,
}

impl PrimeSegment {
    /// `P1 - P2`.
    pub fn gap(&self) -> ElemSet {
        self.p1 - self.p2
    }

    /// The bottom segment `∅ ⊂ {0}`, whose gap holds only zero.
    pub fn is_degenerate(&self, s: &Semigroup) -> bool {
        self.gap() == s.zero_set()
    }

    /// The lower ideal used in the power-intersection test: `{0}` for a
    /// bottom segment over a larger ideal, `P2` otherwise.
    pub fn archimedean_base(&self, s: &Semigroup) -> ElemSet {
        if self.bottom && self.p1 != s.zero_set() {
            s.zero_set()
        } else {
            self.p2
        }
    }
}

/// Covering pairs of the spectrum plus `(∅, P)` for every minimal `P`,
/// sorted by `p2` then `p1`.
pub fn prime_segments(s: &Semigroup, cap: usize) -> Result<Vec<PrimeSegment>> {
    let spec = completely_prime_spectrum(s, cap)?;
    Ok(segments_of(&spec.members))
}

pub fn segments_of(spec: &[ElemSet]) -> Vec<PrimeSegment> {
    let between = |lo: ElemSet, hi: ElemSet| {
        spec.iter()
            .any(|&q| lo.is_proper_subset(q) && q.is_proper_subset(hi))
    };
    let mut out = Vec::new();
    for &p1 in spec {
        if !spec.iter().any(|&q| q.is_proper_subset(p1)) {
            out.push(PrimeSegment {
                p2: ElemSet::EMPTY,
                p1,
                bottom: true,
            });
        }
        for &p2 in spec {
            if p2.is_proper_subset(p1) && !between(p2, p1) {
                out.push(PrimeSegment {
                    p2,
                    p1,
                    bottom: false,
                });
            }
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SegmentClass {
    Archimedean,
    Simple,
    Exceptional(ElemSet),
    None,
    /// More than one branch matched.
    MultiMatch,
}

impl SegmentClass {
    pub fn name(&self) -> &'static str {
        match self {
            SegmentClass::Archimedean => "Archimedean",
            SegmentClass::Simple => "Simple",
            SegmentClass::Exceptional(_) => "Exceptional",
            SegmentClass::None => "None",
            SegmentClass::MultiMatch => "MultiMatch",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentWitnesses {
    /// For each gap element, an ideal `I ⊆ P1` containing it whose powers
    /// intersect to the base, when one exists.
    pub archimedean_ideals: Vec<(Element, Option<ElemSet>)>,
    /// A two-sided ideal strictly between `P2` and `P1`.
    pub intermediate: Option<ElemSet>,
    /// Every prime, not completely prime `Q` satisfying the exceptional
    /// branch.
    pub exceptional_primes: Vec<ElemSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentReport {
    pub segment: PrimeSegment,
    pub class: SegmentClass,
    pub archimedean: bool,
    pub simple: bool,
    pub exceptional: bool,
    pub witnesses: SegmentWitnesses,
}

/// Evaluates the Archimedean, simple and exceptional branches
/// independently.
///
/// Bottom segments use `{0}` as the base of the power-intersection test
/// unless `P1 = {0}`; the simple and exceptional branches compare against
/// `∅` as written.
pub fn classify_segment(s: &Semigroup, seg: &PrimeSegment, cap: usize) -> Result<SegmentReport> {
    let two = two_sided(s, cap)?;
    Ok(classify_with(s, seg, &two.members))
}

/// As [`classify_segment`] with the two-sided ideals supplied.
pub fn classify_with(s: &Semigroup, seg: &PrimeSegment, two_sided: &[ElemSet]) -> SegmentReport {
    let (p1, p2) = (seg.p1, seg.p2);
    let base = seg.archimedean_base(s);
    let inside: Vec<ElemSet> = two_sided.iter().copied().filter(|i| i.is_subset(p1)).collect();
    let bases: Vec<(ElemSet, ElemSet)> = inside
        .iter()
        .map(|&i| (i, intersect_powers(s, i)))
        .collect();

    let archimedean_ideals: Vec<(Element, Option<ElemSet>)> = seg
        .gap()
        .iter()
        .map(|a| {
            let found = bases
                .iter()
                .find(|(i, lim)| i.contains(a) && *lim == base)
                .map(|(i, _)| *i);
            (a, found)
        })
        .collect();
    let archimedean = archimedean_ideals.iter().all(|(_, i)| i.is_some());

    let intermediate = inside
        .iter()
        .copied()
        .find(|&i| p2.is_proper_subset(i) && i.is_proper_subset(p1));
    let simple = intermediate.is_none();

    let exceptional_primes: Vec<ElemSet> = inside
        .iter()
        .copied()
        .filter(|&q| {
            p2.is_proper_subset(q)
                && q.is_proper_subset(p1)
                && primeness_condition(s, q, PrimenessKind::Prime)
                && !primeness_condition(s, q, PrimenessKind::CompletelyPrime)
                && !inside
                    .iter()
                    .any(|&i| q.is_proper_subset(i) && i.is_proper_subset(p1))
        })
        .collect();
    let exceptional = !exceptional_primes.is_empty();

    let class = match (archimedean, simple, exceptional) {
        (true, false, false) => SegmentClass::Archimedean,
        (false, true, false) => SegmentClass::Simple,
        (false, false, true) => SegmentClass::Exceptional(exceptional_primes[0]),
        (false, false, false) => SegmentClass::None,
        _ => SegmentClass::MultiMatch,
    };
    SegmentReport {
        segment: *seg,
        class,
        archimedean,
        simple,
        exceptional,
        witnesses: SegmentWitnesses {
            archimedean_ideals,
            intermediate,
            exceptional_primes,
        },
    }
}

/// Union of the two-sided ideals strictly inside `p1`.
pub fn lower_union(s: &Semigroup, p1: ElemSet, cap: usize) -> Result<ElemSet> {
    let two = two_sided(s, cap)?;
    Ok(two
        .iter()
        .filter(|&i| i.is_proper_subset(p1))
        .fold(ElemSet::EMPTY, |acc, i| acc | i))
}

/// Intersection of the two-sided right waists properly containing `q`.
pub fn pairing_ideal(s: &Semigroup, q: ElemSet, cap: usize) -> Result<ElemSet> {
    let two = two_sided(s, cap)?;
    pairing_with(s, q, &two.members).ok_or(Error::NoWaistAbove)
}

pub fn pairing_with(s: &Semigroup, q: ElemSet, two_sided: &[ElemSet]) -> Option<ElemSet> {
    let waists: Vec<ElemSet> = two_sided
        .iter()
        .copied()
        .filter(|&i| q.is_proper_subset(i) && i != s.all() && waist_condition(s, i))
        .collect();
    if waists.is_empty() {
        return None;
    }
    Some(waists.into_iter().fold(s.all(), |acc, i| acc & i))
}

/// `∩_n a^n S`.
pub fn power_tail(s: &Semigroup, a: Element) -> ElemSet {
    (1..=2 * s.order()).fold(s.all(), |acc, k| acc & s.right_principal(s.power(a, k)))
}

/// Some `a ∈ D - Q` with `Q ⊂ ∩_n a^n S`, the least such.
pub fn has_non_nilpotent_over(s: &Semigroup, d: ElemSet, q: ElemSet) -> Option<Element> {
    (d - q)
        .iter()
        .find(|&a| q.is_proper_subset(power_tail(s, a)))
}

/// `P1 a = a P1` for every `a` in the gap.
pub fn is_locally_invariant(s: &Semigroup, seg: &PrimeSegment) -> bool {
    seg.gap()
        .iter()
        .all(|a| s.right_translate(seg.p1, a) == s.left_translate(a, seg.p1))
}

/// `P1 a ⊆ a P1` for every `a` in the gap.
pub fn is_locally_right_invariant(s: &Semigroup, seg: &PrimeSegment) -> bool {
    seg.gap()
        .iter()
        .all(|a| s.right_translate(seg.p1, a).is_subset(s.left_translate(a, seg.p1)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailReport {
    pub t: Element,
    pub q: ElemSet,
    /// `t ∈ P` for the supplied `P`, if one was given.
    pub t_in_p: Option<bool>,
    /// `t^n S ≠ {0}` for every `n`.
    pub nonzero_tails: bool,
    pub two_sided: bool,
    pub completely_prime: bool,
    pub prime_right: bool,
    pub right_waist: bool,
}

/// `∩_n t^n S`.
pub fn tail_intersection(s: &Semigroup, t: Element) -> ElemSet {
    power_tail(s, t)
}

pub fn tail_report(s: &Semigroup, t: Element, p: Option<ElemSet>) -> TailReport {
    let q = tail_intersection(s, t);
    let proper = q != s.all();
    TailReport {
        t,
        q,
        t_in_p: p.map(|p| p.contains(t)),
        nonzero_tails: !s.is_nilpotent_element(t),
        two_sided: crate::ideals::is_ideal(s, q, IdealKind::TwoSided),
        completely_prime: proper && primeness_condition(s, q, PrimenessKind::CompletelyPrime),
        prime_right: proper && primeness_condition(s, q, PrimenessKind::Prime),
        right_waist: proper && waist_condition(s, q),
    }
}
