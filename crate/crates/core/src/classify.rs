//! Primeness, waists, comparizers, right chains and the radicals.

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideals::{enumerate_ideals, is_ideal, is_nil_set, is_nilpotent_ideal, IdealKind};
use crate::kernel::Semigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PrimenessKind {
    /// `aSb ⊆ X` implies `a ∈ X` or `b ∈ X`.
    Prime,
    /// `ab ∈ X` implies `a ∈ X` or `b ∈ X`.
    CompletelyPrime,
    /// `aSa ⊆ X` implies `a ∈ X`.
    Semiprime,
    /// `a² ∈ X` implies `a ∈ X`.
    CompletelySemiprime,
}

/// The primeness condition alone, without checking that `x` is a proper
/// ideal.
pub fn primeness_condition(s: &Semigroup, x: ElemSet, kind: PrimenessKind) -> bool {
    let outside = x.complement(s.order());
    match kind {
        PrimenessKind::CompletelyPrime => outside
            .iter()
            .all(|a| outside.iter().all(|b| !x.contains(s.mul(a, b)))),
        PrimenessKind::CompletelySemiprime => outside.iter().all(|a| !x.contains(s.mul(a, a))),
        PrimenessKind::Prime => outside.iter().all(|a| {
            let a_s = s.right_principal(a);
            outside
                .iter()
                .all(|b| !s.right_translate(a_s, b).is_subset(x))
        }),
        PrimenessKind::Semiprime => outside
            .iter()
            .all(|a| !s.right_translate(s.right_principal(a), a).is_subset(x)),
    }
}

/// Whether `x` is a proper ideal of `ideal_kind` satisfying the primeness
/// condition. The empty set satisfies every condition vacuously.
pub fn is_prime_variant(
    s: &Semigroup,
    x: ElemSet,
    kind: PrimenessKind,
    ideal_kind: IdealKind,
) -> Result<bool> {
    if !is_ideal(s, x, ideal_kind) {
        return Err(Error::NotAnIdeal(ideal_kind.name()));
    }
    if x == s.all() {
        return Err(Error::NotProper);
    }
    Ok(primeness_condition(s, x, kind))
}

/// Comparability with every principal right ideal, which is equivalent to
/// comparability with every right ideal.
pub fn waist_condition(s: &Semigroup, i: ElemSet) -> bool {
    s.elements().all(|b| i.comparable(s.right_principal(b)))
}

/// `I` is a proper right ideal comparable with every right ideal.
pub fn is_right_waist(s: &Semigroup, i: ElemSet) -> Result<bool> {
    if !is_ideal(s, i, IdealKind::Right) {
        return Err(Error::NotAnIdeal("right"));
    }
    if i == s.all() {
        return Err(Error::NotProper);
    }
    let fast = waist_condition(s, i);
    debug_assert!(
        s.order() > 5 || fast == waist_by_enumeration(s, i),
        "waist reduction to principal right ideals disagrees with enumeration"
    );
    Ok(fast)
}

fn waist_by_enumeration(s: &Semigroup, i: ElemSet) -> bool {
    enumerate_ideals(s, IdealKind::Right, usize::MAX)
        .iter()
        .all(|a| a.comparable(i))
}

/// For all `a, b`: `aS ⊆ bS` or `bI ⊆ aS`.
pub fn comparizer_condition(s: &Semigroup, i: ElemSet) -> bool {
    s.elements().all(|a| {
        let a_s = s.right_principal(a);
        s.elements()
            .all(|b| a_s.is_subset(s.right_principal(b)) || s.left_translate(b, i).is_subset(a_s))
    })
}

pub fn is_right_comparizer(s: &Semigroup, i: ElemSet) -> Result<bool> {
    if !is_ideal(s, i, IdealKind::Right) {
        return Err(Error::NotAnIdeal("right"));
    }
    Ok(comparizer_condition(s, i))
}

/// For all `a, b`: `aS ⊆ bS` or `bA ⊆ aA`.
pub fn is_strongly_comparizer(s: &Semigroup, a_ideal: ElemSet) -> Result<bool> {
    if !is_ideal(s, a_ideal, IdealKind::Right) {
        return Err(Error::NotAnIdeal("right"));
    }
    Ok(s.elements().all(|a| {
        let a_s = s.right_principal(a);
        let a_a = s.left_translate(a, a_ideal);
        s.elements().all(|b| {
            a_s.is_subset(s.right_principal(b)) || s.left_translate(b, a_ideal).is_subset(a_a)
        })
    }))
}

/// `C(S) = {c : for all a, b, a ∈ bS or bc ∈ aS}`.
pub fn comparizer_radical(s: &Semigroup) -> ElemSet {
    s.elements()
        .filter(|&c| {
            s.elements().all(|a| {
                let a_s = s.right_principal(a);
                s.elements()
                    .all(|b| s.right_principal(b).contains(a) || a_s.contains(s.mul(b, c)))
            })
        })
        .collect()
}

/// Union of every right comparizer ideal, from the enumerated right ideals.
/// Includes `S` itself when `S` is a comparizer (a right chain), which is
/// what makes it agree with [`comparizer_radical`].
pub fn comparizer_union(s: &Semigroup, cap: usize) -> Result<ElemSet> {
    let fam = enumerate_ideals(s, IdealKind::Right, cap);
    if fam.truncated {
        return Err(Error::CapExceeded(cap));
    }
    Ok(fam
        .iter()
        .filter(|&i| comparizer_condition(s, i))
        .fold(ElemSet::EMPTY, |acc, i| acc | i))
}

/// Principal right ideals are pairwise comparable.
pub fn is_right_chain(s: &Semigroup) -> bool {
    s.elements().all(|a| {
        s.elements()
            .all(|b| s.right_principal(a).comparable(s.right_principal(b)))
    })
}

/// `P_r(A) = {s : xs ∈ A for some x ∉ A}`.
pub fn associated_prime(s: &Semigroup, a: ElemSet) -> Result<ElemSet> {
    if !is_ideal(s, a, IdealKind::Right) {
        return Err(Error::NotAnIdeal("right"));
    }
    if a == s.all() {
        return Err(Error::NotProper);
    }
    let outside = a.complement(s.order());
    Ok(s.elements()
        .filter(|&y| outside.iter().any(|x| a.contains(s.mul(x, y))))
        .collect())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalFlags {
    /// No nonempty proper prime two-sided ideal exists; `beta` is `S`.
    pub beta_improper: bool,
    /// No nonempty proper prime right ideal exists; `beta_right` is `S`.
    pub beta_right_improper: bool,
    /// No nonempty proper completely prime two-sided ideal; `N` is `S`.
    pub n_improper: bool,
    /// The union of the nil two-sided ideals is not itself nil.
    pub nil_union_not_nil: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalReport {
    pub beta: ElemSet,
    pub beta_right: ElemSet,
    #[serde(rename = "N")]
    pub n: ElemSet,
    #[serde(rename = "Nil")]
    pub nil: ElemSet,
    #[serde(rename = "A")]
    pub a: ElemSet,
    #[serde(rename = "T")]
    pub t: ElemSet,
    #[serde(rename = "C")]
    pub c: ElemSet,
    #[serde(rename = "J")]
    pub j: ElemSet,
    pub flags: RadicalFlags,
}

fn intersect_all(s: &Semigroup, sets: impl Iterator<Item = ElemSet>) -> (ElemSet, bool) {
    let mut any = false;
    let v = sets.fold(s.all(), |acc, x| {
        any = true;
        acc & x
    });
    (v, !any)
}

/// Nonempty proper two-sided (or right) ideals satisfying `kind`.
pub fn prime_ideals(
    s: &Semigroup,
    family: &[ElemSet],
    kind: PrimenessKind,
) -> Vec<ElemSet> {
    family
        .iter()
        .copied()
        .filter(|&x| !x.is_empty() && x != s.all() && primeness_condition(s, x, kind))
        .collect()
}

/// All radicals. Intersections range over nonempty proper ideals; when a
/// family is empty the radical is reported as `S` with its flag set.
pub fn radicals(s: &Semigroup, ideal_cap: usize) -> Result<RadicalReport> {
    let two = enumerate_ideals(s, IdealKind::TwoSided, ideal_cap);
    let right = enumerate_ideals(s, IdealKind::Right, ideal_cap);
    if two.truncated || right.truncated {
        return Err(Error::CapExceeded(ideal_cap));
    }
    let (beta, beta_improper) =
        intersect_all(s, prime_ideals(s, &two.members, PrimenessKind::Prime).into_iter());
    let (beta_right, beta_right_improper) =
        intersect_all(s, prime_ideals(s, &right.members, PrimenessKind::Prime).into_iter());
    let (n, n_improper) = intersect_all(
        s,
        prime_ideals(s, &two.members, PrimenessKind::CompletelyPrime).into_iter(),
    );
    let nil = two
        .iter()
        .filter(|&i| is_nil_set(s, i))
        .fold(ElemSet::EMPTY, |acc, i| acc | i);
    let a = two
        .iter()
        .filter(|&i| is_nilpotent_ideal(s, i))
        .fold(ElemSet::EMPTY, |acc, i| acc | i);
    let t = s.elements().filter(|&x| s.is_nilpotent_element(x)).collect();
    Ok(RadicalReport {
        beta,
        beta_right,
        n,
        nil,
        a,
        t,
        c: comparizer_radical(s),
        j: s.nonunits(),
        flags: RadicalFlags {
            beta_improper,
            beta_right_improper,
            n_improper,
            nil_union_not_nil: !is_nil_set(s, nil),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build_chain_x, build_delta, build_ef, minimal_monoid};
    use crate::ideals::{principal, DEFAULT_CAP};

    fn set(v: &[usize]) -> ElemSet {
        v.iter().copied().collect()
    }

    fn p_ef() -> ElemSet {
        set(&[0, 5, 6, 7, 8])
    }

    #[test]
    fn primeness_examples() {
        let s = build_ef(4);
        let cp = |x| is_prime_variant(&s, x, PrimenessKind::CompletelyPrime, IdealKind::TwoSided);
        assert_eq!(cp(p_ef()), Ok(true));
        assert_eq!(cp(set(&[0])), Ok(false));
        assert_eq!(cp(set(&[0, 2])), Err(Error::NotAnIdeal("two-sided")));
        assert_eq!(cp(s.all()), Err(Error::NotProper));
        let d = build_delta(3);
        let p1 = set(&[1, 2]).complement(5);
        assert_eq!(
            is_prime_variant(&d, p1, PrimenessKind::CompletelyPrime, IdealKind::TwoSided),
            Ok(true)
        );
    }

    #[test]
    fn primeness_ladder_on_ef() {
        let s = build_ef(4);
        for kind in [IdealKind::Right, IdealKind::TwoSided] {
            for x in enumerate_ideals(&s, kind, DEFAULT_CAP).iter().filter(|&x| x != s.all()) {
                let c = primeness_condition(&s, x, PrimenessKind::CompletelyPrime);
                let p = primeness_condition(&s, x, PrimenessKind::Prime);
                let sp = primeness_condition(&s, x, PrimenessKind::Semiprime);
                let csp = primeness_condition(&s, x, PrimenessKind::CompletelySemiprime);
                assert!(!c || (p && csp));
                assert!(!p || sp);
            }
        }
    }

    #[test]
    fn waists() {
        let s = build_ef(4);
        assert_eq!(is_right_waist(&s, p_ef()), Ok(true));
        assert_eq!(is_right_waist(&s, principal(&s, 2, IdealKind::Right)), Ok(false));
        let c = build_chain_x(3);
        for i in enumerate_ideals(&c, IdealKind::Right, DEFAULT_CAP).iter() {
            if i != c.all() {
                assert_eq!(is_right_waist(&c, i), Ok(true));
            }
        }
        assert_eq!(is_right_waist(&s, s.all()), Err(Error::NotProper));
    }

    #[test]
    fn comparizers() {
        let s = build_ef(4);
        assert_eq!(is_right_comparizer(&s, set(&[0])), Ok(true));
        assert_eq!(is_right_comparizer(&s, principal(&s, 4, IdealKind::Right)), Ok(true));
        assert_eq!(is_right_comparizer(&s, principal(&s, 2, IdealKind::Right)), Ok(false));
        assert_eq!(comparizer_radical(&s), set(&[0, 4, 5, 6, 7, 8]));
        assert_eq!(comparizer_union(&s, DEFAULT_CAP), Ok(comparizer_radical(&s)));
        assert_eq!(comparizer_radical(&build_chain_x(3)), build_chain_x(3).all());
        assert_eq!(comparizer_radical(&build_delta(2)), set(&[0]));
        // sub-right-ideals of C(S) are comparizers
        let c = comparizer_radical(&s);
        for i in enumerate_ideals(&s, IdealKind::Right, DEFAULT_CAP).iter() {
            if i.is_subset(c) {
                assert_eq!(is_right_comparizer(&s, i), Ok(true));
            }
        }
        assert_eq!(is_strongly_comparizer(&s, p_ef()), Ok(true));
    }

    #[test]
    fn right_chains() {
        assert!(is_right_chain(&build_chain_x(4)));
        assert!(!is_right_chain(&build_ef(4)));
        assert!(!is_right_chain(&build_delta(2)));
    }

    #[test]
    fn associated_primes() {
        let s = build_ef(4);
        assert_eq!(associated_prime(&s, p_ef()), Ok(p_ef()));
        // P_r({0}) unfolds to {s : x s = 0 for some x != 0}
        let zero_div: ElemSet = s
            .elements()
            .filter(|&y| s.elements().any(|x| x != 0 && s.mul(x, y) == 0))
            .collect();
        assert_eq!(associated_prime(&s, set(&[0])), Ok(zero_div));
        // a = x, Q = P: P_r(xP) = P
        let xq = s.left_translate(5, p_ef());
        assert_eq!(associated_prime(&s, xq), Ok(p_ef()));
        assert_eq!(associated_prime(&s, s.all()), Err(Error::NotProper));
    }

    #[test]
    fn radicals_ef() {
        let s = build_ef(4);
        let r = radicals(&s, DEFAULT_CAP).unwrap();
        assert_eq!(r.t, p_ef());
        assert_eq!(r.n, p_ef());
        assert_eq!(r.j, set(&[1]).complement(9));
        assert_eq!(r.c, set(&[0, 4, 5, 6, 7, 8]));
        assert!(r.a.is_subset(r.nil) && r.nil.is_subset(r.t));
    }

    #[test]
    fn radicals_chain_and_minimal() {
        let c = build_chain_x(3);
        let r = radicals(&c, DEFAULT_CAP).unwrap();
        assert_eq!(r.t, set(&[0, 2, 3, 4]));
        assert_eq!(r.beta, set(&[0, 2, 3, 4]));
        let m = minimal_monoid();
        let r = radicals(&m, DEFAULT_CAP).unwrap();
        for v in [r.beta, r.n, r.nil, r.a, r.t, r.j] {
            assert_eq!(v, set(&[0]));
        }
        // {0, 1} is a right chain, so every element satisfies the
        // elementwise comparizer criterion.
        assert_eq!(r.c, m.all());
        assert_eq!(r.flags, RadicalFlags::default());
    }

    #[test]
    fn radicals_cap() {
        let s = build_ef(4);
        assert_eq!(radicals(&s, 2), Err(Error::CapExceeded(2)));
    }
}
