//! Right, left and two-sided ideals: closure, products, powers, enumeration.

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::kernel::{Element, Semigroup};

/// Default bound on the number of ideals materialised by one enumeration.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdealKind {
    Right,
    Left,
    TwoSided,
}

impl IdealKind {
    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Right => "right",
            IdealKind::Left => "left",
            IdealKind::TwoSided => "two-sided",
        }
    }
}

/// Distinct ideals of one kind, sorted. `truncated` is set when the
/// enumeration stopped at its cap, in which case the list is a prefix of
/// the full family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFamily {
    pub kind: IdealKind,
    pub members: Vec<ElemSet>,
    pub truncated: bool,
}

impl IdealFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElemSet> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, x: ElemSet) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

pub fn is_ideal(s: &Semigroup, x: ElemSet, kind: IdealKind) -> bool {
    let right = || x.iter().all(|a| s.right_principal(a).is_subset(x));
    let left = || x.iter().all(|a| s.left_principal(a).is_subset(x));
    match kind {
        IdealKind::Right => right(),
        IdealKind::Left => left(),
        IdealKind::TwoSided => right() && left(),
    }
}

/// `aS`, `Sa` or `SaS`.
pub fn principal(s: &Semigroup, a: Element, kind: IdealKind) -> ElemSet {
    match kind {
        IdealKind::Right => s.right_principal(a),
        IdealKind::Left => s.left_principal(a),
        IdealKind::TwoSided => s.two_sided_principal(a),
    }
}

/// Smallest ideal of the given kind containing `seed`.
pub fn ideal_closure(s: &Semigroup, seed: ElemSet, kind: IdealKind) -> ElemSet {
    seed.iter()
        .fold(ElemSet::EMPTY, |acc, a| acc | principal(s, a, kind))
}

/// Elementwise product `AB = {ab : a in A, b in B}`.
pub fn set_product(s: &Semigroup, a: ElemSet, b: ElemSet) -> ElemSet {
    a.iter()
        .fold(ElemSet::EMPTY, |acc, x| acc | s.left_translate(x, b))
}

/// `I^k` for `k >= 1`. Stops early once the powers stabilise.
pub fn ideal_power(s: &Semigroup, i: ElemSet, k: usize) -> ElemSet {
    assert!(k >= 1, "exponent must be positive");
    let mut p = i;
    for _ in 1..k {
        let next = set_product(s, p, i);
        if next == p {
            break;
        }
        p = next;
    }
    p
}

/// `I, I^2, I^3, ...` up to and including the first repeated value.
/// For a right ideal the sequence decreases, so it has at most `|I| + 1`
/// distinct terms.
pub fn power_chain(s: &Semigroup, i: ElemSet) -> Vec<ElemSet> {
    let mut chain = vec![i];
    loop {
        let last = *chain.last().expect("nonempty");
        let next = set_product(s, last, i);
        if next == last || chain.contains(&next) {
            return chain;
        }
        chain.push(next);
    }
}

/// `∩_k I^k` for a right ideal `I`.
pub fn intersect_powers(s: &Semigroup, i: ElemSet) -> ElemSet {
    power_chain(s, i)
        .into_iter()
        .fold(i, |acc, p| acc & p)
}

/// `r(I) = {s : i s = 0 for every i in I}`.
pub fn right_annihilator(s: &Semigroup, i: ElemSet) -> ElemSet {
    let z = s.zero();
    s.elements()
        .filter(|&x| i.iter().all(|a| s.mul(a, x) == z))
        .collect()
}

/// All ideals of a kind, as the down-closed sets of the preorder
/// `b <= a iff b ∈ principal(a)`.
pub fn enumerate_ideals(s: &Semigroup, kind: IdealKind, cap: usize) -> IdealFamily {
    let n = s.order();
    let down: Vec<ElemSet> = s.elements().map(|a| principal(s, a, kind)).collect();
    let up: Vec<ElemSet> = s
        .elements()
        .map(|a| s.elements().filter(|&b| down[b].contains(a)).collect())
        .collect();

    let mut members = Vec::new();
    let mut truncated = false;
    // Iterative DFS over (included, excluded) with a decision for the
    // smallest undecided element at each step.
    let mut stack = vec![(ElemSet::EMPTY, ElemSet::EMPTY)];
    while let Some((inc, exc)) = stack.pop() {
        let decided = inc | exc;
        let Some(a) = ElemSet::full(n).difference(decided).first() else {
            if members.len() == cap {
                truncated = true;
                break;
            }
            members.push(inc);
            continue;
        };
        let ex = exc | up[a];
        if (ex & inc).is_empty() {
            stack.push((inc, ex));
        }
        let in_ = inc | down[a];
        if (in_ & exc).is_empty() {
            stack.push((in_, exc));
        }
    }
    members.sort();
    IdealFamily {
        kind,
        members,
        truncated,
    }
}

/// Every element of `x` is nilpotent.
pub fn is_nil_set(s: &Semigroup, x: ElemSet) -> bool {
    x.iter().all(|a| s.is_nilpotent_element(a))
}

/// `I^k ⊆ A` for some `k`. `I` should be a right ideal, so the powers
/// decrease and the last term of the power chain is the limit.
pub fn is_a_nilpotent(s: &Semigroup, i: ElemSet, a: ElemSet) -> bool {
    power_chain(s, i).iter().any(|p| p.is_subset(a))
}

/// `I^k ⊆ {0}` for some `k`.
pub fn is_nilpotent_ideal(s: &Semigroup, i: ElemSet) -> bool {
    is_a_nilpotent(s, i, s.zero_set())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build_chain_x, build_delta, build_ef, build_min_chain, minimal_monoid};

    fn set(v: &[usize]) -> ElemSet {
        v.iter().copied().collect()
    }

    // ef(4) layout: 0, 1, e=2, f=3, ef=4, x^k = 4 + k.
    fn p_ef() -> ElemSet {
        set(&[0, 5, 6, 7, 8])
    }

    /// Power-set filter oracle.
    fn filter_oracle(s: &Semigroup, kind: IdealKind) -> Vec<ElemSet> {
        let mut v: Vec<ElemSet> = (0..1u64 << s.order())
            .map(ElemSet::from_bits)
            .filter(|&x| is_ideal(s, x, kind))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn is_ideal_examples() {
        let s = build_ef(4);
        assert!(is_ideal(&s, p_ef(), IdealKind::TwoSided));
        assert!(is_ideal(&s, set(&[0]), IdealKind::TwoSided));
        assert!(!is_ideal(&s, set(&[0, 2]), IdealKind::Right));
    }

    #[test]
    fn principal_examples() {
        let s = build_ef(4);
        assert_eq!(principal(&s, 2, IdealKind::Right), set(&[0, 2, 4, 5, 6, 7, 8]));
        assert_eq!(principal(&s, 1, IdealKind::Right), s.all());
        let m = build_min_chain(3);
        // x_j x_2 x_k = x_min(j,2,k); brute-force product oracle
        let mut oracle = ElemSet::EMPTY;
        for a in m.elements() {
            for b in m.elements() {
                oracle.insert(m.mul(m.mul(a, 3), b));
            }
        }
        assert_eq!(oracle, set(&[0, 2, 3]));
        assert_eq!(principal(&m, 3, IdealKind::TwoSided), oracle);
    }

    #[test]
    fn closure_examples() {
        let s = build_ef(4);
        assert_eq!(ideal_closure(&s, ElemSet::EMPTY, IdealKind::Right), ElemSet::EMPTY);
        assert_eq!(
            ideal_closure(&s, set(&[2]), IdealKind::Right),
            principal(&s, 2, IdealKind::Right)
        );
        let d = build_delta(3);
        assert_eq!(ideal_closure(&d, set(&[2, 3]), IdealKind::TwoSided), set(&[0, 2, 3]));
    }

    #[test]
    fn products_and_powers() {
        let s = build_ef(4);
        assert_eq!(ideal_power(&s, p_ef(), 5), set(&[0]));
        assert_eq!(set_product(&s, p_ef(), set(&[0])), set(&[0]));
        let m = build_min_chain(3);
        assert_eq!(ideal_power(&m, set(&[0, 2, 3]), 2), set(&[0, 2, 3]));
        assert_eq!(intersect_powers(&s, p_ef()), set(&[0]));
        let d = build_delta(3);
        assert_eq!(intersect_powers(&d, set(&[0, 2])), set(&[0, 2]));
        assert_eq!(intersect_powers(&m, set(&[0, 2, 3])), set(&[0, 2, 3]));
    }

    #[test]
    fn annihilators() {
        let s = build_ef(4);
        assert_eq!(right_annihilator(&s, set(&[0])), s.all());
        assert_eq!(right_annihilator(&s, p_ef()), set(&[0, 8]));
        let d = build_delta(3);
        assert_eq!(right_annihilator(&d, set(&[0, 2])), set(&[0, 3, 4]));
    }

    #[test]
    fn enumeration_examples() {
        let m = minimal_monoid();
        let fam = enumerate_ideals(&m, IdealKind::Right, 100);
        assert_eq!(fam.members, vec![ElemSet::EMPTY, set(&[0]), set(&[0, 1])]);
        let c = build_chain_x(3);
        let fam = enumerate_ideals(&c, IdealKind::Right, 100);
        assert_eq!(fam.len(), 6);
        assert!(!fam.truncated);
        let d = build_delta(2);
        let fam = enumerate_ideals(&d, IdealKind::TwoSided, 100);
        assert_eq!(
            fam.members,
            vec![
                ElemSet::EMPTY,
                set(&[0]),
                set(&[0, 1, 2, 3]),
                set(&[0, 2]),
                set(&[0, 2, 3]),
                set(&[0, 3]),
            ]
        );
    }

    #[test]
    fn enumeration_matches_filter_oracle() {
        for s in [build_ef(3), build_delta(3), build_min_chain(4), build_chain_x(4)] {
            for kind in [IdealKind::Right, IdealKind::Left, IdealKind::TwoSided] {
                let fam = enumerate_ideals(&s, kind, DEFAULT_CAP);
                assert_eq!(fam.members, filter_oracle(&s, kind), "{kind:?}");
            }
        }
    }

    #[test]
    fn enumeration_cap_sets_truncated() {
        let s = build_ef(4);
        let fam = enumerate_ideals(&s, IdealKind::Right, 3);
        assert!(fam.truncated);
        assert_eq!(fam.len(), 3);
        assert!(fam.iter().all(|x| is_ideal(&s, x, IdealKind::Right)));
    }

    #[test]
    fn nilpotency() {
        let s = build_ef(4);
        assert!(is_nilpotent_ideal(&s, set(&[0, 6, 7, 8])));
        assert!(is_nilpotent_ideal(&s, set(&[0])));
        assert!(is_a_nilpotent(&s, p_ef(), set(&[0, 7, 8])));
        assert!(is_a_nilpotent(&s, p_ef(), set(&[0, 8])));
        assert!(!is_a_nilpotent(&s, p_ef(), set(&[2])));
        assert!(is_nil_set(&s, p_ef()));
        assert!(!is_nil_set(&s, set(&[0, 2])));
        let m = build_min_chain(3);
        assert!(!is_nilpotent_ideal(&m, set(&[0, 2])));
    }

    #[test]
    fn unions_and_intersections_of_right_ideals() {
        let s = build_ef(4);
        let fam = enumerate_ideals(&s, IdealKind::Right, DEFAULT_CAP);
        for a in fam.iter() {
            for b in fam.iter() {
                assert!(is_ideal(&s, a | b, IdealKind::Right));
                assert!(is_ideal(&s, a & b, IdealKind::Right));
                let ab = set_product(&s, a, b);
                assert!(ab.is_subset(a));
                assert!(is_ideal(&s, ab, IdealKind::Right));
            }
            if !a.is_empty() {
                assert!(a.contains(s.zero()));
            }
            for w in power_chain(&s, a).windows(2) {
                assert!(w[1].is_subset(w[0]));
            }
        }
    }
}
