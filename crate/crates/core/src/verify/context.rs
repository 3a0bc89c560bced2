use crate::classify::{
    comparizer_condition, primeness_condition, radicals, waist_condition, PrimenessKind, RadicalReport,
};
use crate::elemset::ElemSet;
use crate::ideals::{enumerate_ideals, is_ideal, is_nilpotent_ideal, set_product, IdealKind};
use crate::kernel::{Element, Semigroup};
use crate::localize::{is_right_p_comparable, principal_saturations, ComparabilityReport};
use crate::segments::{classify_with, segments_of, PrimeSegment, SegmentReport};

/// Everything the checks share, computed once per semigroup.
pub struct Context<'a> {
    pub s: &'a Semigroup,
    /// Some ideal enumeration hit the cap; every check is then vacuous.
    pub capped: bool,
    pub right: Vec<ElemSet>,
    pub left: Vec<ElemSet>,
    pub two: Vec<ElemSet>,
    pub left_cancellative: bool,
    pub cancellative: bool,
    pub radicals: RadicalReport,
    pub c: ElemSet,
    pub c_nilpotent: bool,
    /// Proper right comparizer ideals.
    pub comparizers: Vec<ElemSet>,
    /// Proper right ideals that are right waists.
    pub waists: Vec<ElemSet>,
    /// Nonempty proper completely prime two-sided ideals.
    pub spectrum: Vec<ElemSet>,
    /// Nonempty proper completely prime right ideals.
    pub cp_right: Vec<ElemSet>,
    /// One report per member of `cp_right`.
    pub comparability: Vec<ComparabilityReport>,
    pub segments: Vec<PrimeSegment>,
}

impl<'a> Context<'a> {
    pub fn new(s: &'a Semigroup, cap: usize) -> Self {
        let right = enumerate_ideals(s, IdealKind::Right, cap);
        let left = enumerate_ideals(s, IdealKind::Left, cap);
        let two = enumerate_ideals(s, IdealKind::TwoSided, cap);
        let capped = right.truncated || left.truncated || two.truncated;
        let radicals = radicals(s, usize::MAX).expect("uncapped radicals");
        let c = radicals.c;
        let all = s.all();
        let comparizers = right
            .iter()
            .filter(|&i| i != all && comparizer_condition(s, i))
            .collect();
        let waists = right
            .iter()
            .filter(|&i| i != all && waist_condition(s, i))
            .collect();
        let cp = |x: ElemSet| {
            !x.is_empty() && x != all && primeness_condition(s, x, PrimenessKind::CompletelyPrime)
        };
        let spectrum: Vec<ElemSet> = two.iter().filter(|&x| cp(x)).collect();
        let cp_right: Vec<ElemSet> = right.iter().filter(|&x| cp(x)).collect();
        let comparability = cp_right
            .iter()
            .map(|&p| is_right_p_comparable(s, p).expect("validated completely prime"))
            .collect();
        let segments = segments_of(&spectrum);
        Context {
            s,
            capped,
            right: right.members,
            left: left.members,
            two: two.members,
            left_cancellative: s.is_left_cancellative(),
            cancellative: s.is_cancellative(),
            c_nilpotent: is_nilpotent_ideal(s, c),
            radicals,
            c,
            comparizers,
            waists,
            spectrum,
            cp_right,
            comparability,
            segments,
        }
    }

    pub fn all(&self) -> ElemSet {
        self.s.all()
    }

    pub fn is_comparizer(&self, i: ElemSet) -> bool {
        comparizer_condition(self.s, i)
    }

    /// Proper and comparable with every right ideal.
    pub fn is_waist(&self, i: ElemSet) -> bool {
        i != self.all() && waist_condition(self.s, i)
    }

    /// Proper and satisfying the condition.
    pub fn has(&self, x: ElemSet, kind: PrimenessKind) -> bool {
        x != self.all() && primeness_condition(self.s, x, kind)
    }

    pub fn is_right_ideal(&self, x: ElemSet) -> bool {
        is_ideal(self.s, x, IdealKind::Right)
    }

    pub fn is_two_sided(&self, x: ElemSet) -> bool {
        is_ideal(self.s, x, IdealKind::TwoSided)
    }

    pub fn sq(&self, x: ElemSet) -> ElemSet {
        set_product(self.s, x, x)
    }

    pub fn translate(&self, a: Element, x: ElemSet) -> ElemSet {
        self.s.left_translate(a, x)
    }

    pub fn report(&self, p: ElemSet) -> Option<&ComparabilityReport> {
        self.cp_right
            .iter()
            .position(|&q| q == p)
            .map(|i| &self.comparability[i])
    }

    /// Right `P`-comparability for a completely prime right ideal `P`.
    pub fn comparable(&self, p: ElemSet) -> bool {
        self.report(p).is_some_and(|r| r.holds)
    }

    /// Members of the spectrum with respect to which `S` is right
    /// comparable.
    pub fn comparable_primes(&self) -> Vec<ElemSet> {
        self.spectrum
            .iter()
            .copied()
            .filter(|&p| self.comparable(p))
            .collect()
    }

    pub fn saturations(&self, p: ElemSet) -> Vec<ElemSet> {
        principal_saturations(self.s, p)
    }

    pub fn classify(&self, seg: &PrimeSegment) -> SegmentReport {
        classify_with(self.s, seg, &self.two)
    }

    /// `∩_{a ∉ x} a y`, or `S` when `x = S`.
    pub fn translates_meet(&self, x: ElemSet, y: ElemSet) -> ElemSet {
        x.complement(self.s.order())
            .iter()
            .fold(self.all(), |acc, a| acc & self.translate(a, y))
    }
}
