use crate::classify::{is_right_chain, primeness_condition, radicals, PrimenessKind};
use crate::elemset::ElemSet;
use crate::ideals::{is_ideal, principal, set_product, IdealKind, DEFAULT_CAP};
use crate::kernel::Semigroup;
use crate::localize::{is_right_p_comparable, saturate};
use crate::segments::{classify_segment, prime_segments, tail_report, SegmentClass};

/// A named, machine-checkable property of a corpus semigroup.
#[derive(Debug, Clone, Copy)]
pub struct Fact {
    pub name: &'static str,
    pub check: fn(&Semigroup) -> bool,
}

impl Fact {
    pub fn holds(&self, s: &Semigroup) -> bool {
        (self.check)(s)
    }
}

fn set(v: &[usize]) -> ElemSet {
    v.iter().copied().collect()
}

fn comparable(s: &Semigroup, p: ElemSet) -> bool {
    is_right_p_comparable(s, p).is_ok_and(|r| r.holds)
}

fn completely_prime(s: &Semigroup, p: ElemSet) -> bool {
    is_ideal(s, p, IdealKind::TwoSided)
        && p != s.all()
        && primeness_condition(s, p, PrimenessKind::CompletelyPrime)
}

fn bottom_classes(s: &Semigroup) -> Vec<SegmentClass> {
    prime_segments(s, DEFAULT_CAP)
        .expect("corpus orders are small")
        .iter()
        .filter(|g| g.bottom)
        .map(|seg| classify_segment(s, seg, DEFAULT_CAP).expect("corpus orders are small").class)
        .collect()
}

fn t_radical(s: &Semigroup) -> ElemSet {
    radicals(s, DEFAULT_CAP).expect("corpus orders are small").t
}

pub(super) fn minimal() -> Vec<Fact> {
    vec![
        Fact { name: "right chain", check: is_right_chain },
        Fact { name: "left cancellative", check: |s| s.is_left_cancellative() },
        Fact { name: "T(S) = {0}", check: |s| t_radical(s) == s.zero_set() },
    ]
}

pub(super) fn chain_x() -> Vec<Fact> {
    vec![
        Fact { name: "right chain", check: is_right_chain },
        Fact { name: "left cancellative", check: |s| s.is_left_cancellative() },
        Fact { name: "T(S) = J(S)", check: |s| t_radical(s) == s.nonunits() },
        Fact { name: "right J-comparable", check: |s| comparable(s, s.nonunits()) },
    ]
}

/// Facts for the `e, f` example with `x^5 = 0`.
pub(super) fn ef() -> Vec<Fact> {
    const P: [usize; 5] = [0, 5, 6, 7, 8];
    vec![
        Fact { name: "P = {0, x, .., x^4} completely prime", check: |s| completely_prime(s, set(&P)) },
        Fact { name: "right P-comparable", check: |s| comparable(s, set(&P)) },
        Fact {
            name: "comparability forms agree",
            check: |s| is_right_p_comparable(s, set(&P)).is_ok_and(|r| r.conditions_agree()),
        },
        Fact { name: "not a right chain", check: |s| !is_right_chain(s) },
        Fact { name: "not left cancellative", check: |s| !s.is_left_cancellative() },
        Fact {
            name: "f in (eS)T⁻¹",
            check: |s| {
                let t = set(&P).complement(s.order());
                saturate(s, s.right_principal(2), t).contains(3)
            },
        },
        Fact {
            name: "(eS)T⁻¹ = (fS)T⁻¹",
            check: |s| {
                let t = set(&P).complement(s.order());
                saturate(s, s.right_principal(2), t) == saturate(s, s.right_principal(3), t)
            },
        },
        Fact {
            name: "bottom segment Archimedean",
            check: |s| {
                let segs = prime_segments(s, DEFAULT_CAP).expect("small");
                segs.iter().filter(|g| g.bottom).all(|g| {
                    classify_segment(s, g, DEFAULT_CAP).expect("small").class == SegmentClass::Archimedean
                })
            },
        },
        Fact {
            name: "∩ (ef)^n S is a two-sided ideal without e, f",
            check: |s| {
                let r = tail_report(s, 4, Some(set(&P)));
                r.two_sided && r.q.contains(4) && !r.q.contains(2) && !r.q.contains(3)
                    && !r.completely_prime && r.t_in_p == Some(false)
            },
        },
    ]
}

pub(super) fn adjoined() -> Vec<Fact> {
    vec![
        Fact { name: "not a right chain", check: |s| !is_right_chain(s) },
        Fact {
            name: "right J(H)-comparable",
            // J(H) keeps its indices inside the adjoined monoid
            check: |s| comparable(s, s.nonunits() - set(&[s.order() - 3, s.order() - 2, s.order() - 1])),
        },
    ]
}

pub(super) fn min_chain() -> Vec<Fact> {
    vec![
        Fact {
            name: "each ⟨x_i⟩ completely prime and idempotent",
            check: |s| {
                (2..s.order()).all(|i| {
                    let p = principal(s, i, IdealKind::TwoSided);
                    completely_prime(s, p) && set_product(s, p, p) == p
                })
            },
        },
        Fact {
            name: "segments between generated ideals are simple",
            check: |s| {
                prime_segments(s, DEFAULT_CAP).expect("small").iter().filter(|g| !g.bottom).all(|g| {
                    classify_segment(s, g, DEFAULT_CAP).expect("small").class == SegmentClass::Simple
                })
            },
        },
    ]
}

pub(super) fn delta() -> Vec<Fact> {
    vec![
        Fact { name: "not a right chain", check: |s| !is_right_chain(s) },
        Fact { name: "not left cancellative", check: |s| !s.is_left_cancellative() },
        Fact {
            name: "each S - {1, x_i} completely prime, not comparable",
            check: |s| {
                (2..s.order()).all(|i| {
                    let p = set(&[1, i]).complement(s.order());
                    completely_prime(s, p) && !comparable(s, p)
                })
            },
        },
        Fact {
            name: "every bottom segment has class None",
            check: |s| bottom_classes(s).iter().all(|c| *c == SegmentClass::None),
        },
    ]
}
