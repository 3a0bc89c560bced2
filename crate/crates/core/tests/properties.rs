use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::Index;

use waist::classify::{
    comparizer_condition, comparizer_radical, comparizer_union, primeness_condition, radicals,
    waist_condition, PrimenessKind,
};
use waist::corpus::{corpus, enumerate_monoids_with_zero};
use waist::ideals::{enumerate_ideals, ideal_closure, is_ideal, principal, set_product};
use waist::localize::{is_right_p_comparable, saturate};
use waist::report::{analyze, format_set, render_analysis, AnalysisReport, Target};
use waist::segments::completely_prime_spectrum;
use waist::verify::run_suite;
use waist::{ElemSet, IdealKind, Semigroup, DEFAULT_CAP};

/// Corpus entries followed by every monoid with zero of order 2..=5.
fn pool() -> &'static [Semigroup] {
    static POOL: OnceLock<Vec<Semigroup>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<Semigroup> = corpus().into_iter().map(|e| e.semigroup).collect();
        for n in 2..=5 {
            enumerate_monoids_with_zero(n, |e| v.push(e.semigroup.clone()));
        }
        v
    })
}

fn pick(i: &Index) -> &'static Semigroup {
    i.get(pool())
}

fn subset(s: &Semigroup, bits: u64) -> ElemSet {
    ElemSet::from_bits(bits) & s.all()
}

fn right_ideals(s: &Semigroup) -> Vec<ElemSet> {
    enumerate_ideals(s, IdealKind::Right, DEFAULT_CAP).members
}

fn mult_closure(s: &Semigroup, seed: ElemSet) -> ElemSet {
    let mut t = seed;
    loop {
        let next = t.iter().flat_map(|a| t.iter().map(move |b| s.mul(a, b))).collect::<ElemSet>() | t;
        if next == t {
            return t;
        }
        t = next;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn table_laws(i in any::<Index>()) {
        let s = pick(&i);
        for a in s.elements() {
            prop_assert_eq!(s.mul(s.one(), a), a);
            prop_assert_eq!(s.mul(a, s.zero()), s.zero());
            for b in s.elements() {
                for c in s.elements() {
                    prop_assert_eq!(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn powers_add(i in any::<Index>(), a in any::<Index>(), j in 1usize..6, k in 1usize..6) {
        let s = pick(&i);
        let a = a.index(s.order());
        prop_assert_eq!(s.power(a, j + k), s.mul(s.power(a, j), s.power(a, k)));
    }

    #[test]
    fn units_form_a_group_part(i in any::<Index>()) {
        let s = pick(&i);
        let u = s.units();
        prop_assert!(u.contains(s.one()));
        prop_assert!((u & s.nonunits()).is_empty());
        for a in u.iter() {
            for b in u.iter() {
                prop_assert!(u.contains(s.mul(a, b)));
            }
        }
    }

    #[test]
    fn canonical_form_is_stable(i in any::<Index>(), perm in Just(()).prop_perturb(|_, mut rng| rng.random::<u64>())) {
        let s = pick(&i);
        let canon = s.canonical_form();
        prop_assert_eq!(Semigroup::from_canonical_form(&canon).unwrap().canonical_form(), canon.clone());
        // relabel by a seeded shuffle
        let mut p: Vec<usize> = s.elements().collect();
        let mut state = perm;
        for k in (1..p.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            p.swap(k, (state >> 33) as usize % (k + 1));
        }
        prop_assert_eq!(s.relabel(&p).unwrap().canonical_form(), canon);
    }

    #[test]
    fn cayley_text_round_trips(i in any::<Index>()) {
        let s = pick(&i);
        prop_assert_eq!(&Semigroup::parse_cayley_text(&s.to_cayley_text()).unwrap(), s);
    }

    #[test]
    fn ideal_closure_is_least(i in any::<Index>(), bits in any::<u64>()) {
        let s = pick(&i);
        let seed = subset(s, bits);
        for kind in [IdealKind::Right, IdealKind::Left, IdealKind::TwoSided] {
            let c = ideal_closure(s, seed, kind);
            prop_assert!(is_ideal(s, c, kind) && seed.is_subset(c));
            let least = enumerate_ideals(s, kind, DEFAULT_CAP)
                .iter()
                .filter(|x| seed.is_subset(*x))
                .fold(s.all(), |acc, x| acc & x);
            prop_assert_eq!(c, least);
        }
        for a in s.elements() {
            prop_assert_eq!(principal(s, a, IdealKind::Right), ideal_closure(s, ElemSet::singleton(a), IdealKind::Right));
        }
    }

    #[test]
    fn ideal_lattice_laws(i in any::<Index>(), x in any::<Index>(), y in any::<Index>()) {
        let s = pick(&i);
        let right = right_ideals(s);
        let left = enumerate_ideals(s, IdealKind::Left, DEFAULT_CAP).members;
        let (a, b) = (*x.get(&right), *y.get(&right));
        prop_assert!(is_ideal(s, a | b, IdealKind::Right));
        prop_assert!(is_ideal(s, a & b, IdealKind::Right));
        if !a.is_empty() {
            prop_assert!(a.contains(s.zero()));
        }
        let l = *y.get(&left);
        prop_assert!(set_product(s, a, l).is_subset(a & l));
        let two = enumerate_ideals(s, IdealKind::TwoSided, DEFAULT_CAP).members;
        let t = *x.get(&two);
        prop_assert!(set_product(s, t, t).is_subset(t));
    }

    #[test]
    fn primeness_ladder(i in any::<Index>(), x in any::<Index>()) {
        let s = pick(&i);
        let right = right_ideals(s);
        let p = *x.get(&right);
        prop_assume!(p != s.all());
        let holds = |k| primeness_condition(s, p, k);
        if holds(PrimenessKind::CompletelyPrime) {
            prop_assert!(holds(PrimenessKind::Prime));
            prop_assert!(holds(PrimenessKind::CompletelySemiprime));
        }
        if holds(PrimenessKind::Prime) {
            prop_assert!(holds(PrimenessKind::Semiprime));
        }
        if holds(PrimenessKind::CompletelySemiprime) {
            prop_assert!(holds(PrimenessKind::Semiprime));
        }
    }

    #[test]
    fn comparizers_union_and_radical(i in any::<Index>(), x in any::<Index>(), y in any::<Index>()) {
        let s = pick(&i);
        let comps: Vec<ElemSet> = right_ideals(s).into_iter().filter(|&c| comparizer_condition(s, c)).collect();
        let (a, b) = (*x.get(&comps), *y.get(&comps));
        prop_assert!(comparizer_condition(s, a | b));
        prop_assert_eq!(comparizer_radical(s), comparizer_union(s, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn waists_compare_with_every_right_ideal(i in any::<Index>(), x in any::<Index>()) {
        let s = pick(&i);
        let right = right_ideals(s);
        let w = *x.get(&right);
        let by_all = right.iter().all(|&h| h.comparable(w));
        prop_assert_eq!(waist_condition(s, w), by_all);
    }

    #[test]
    fn saturation_contains_its_ideal(i in any::<Index>(), bits in any::<u64>(), x in any::<Index>(), y in any::<Index>()) {
        let s = pick(&i);
        let t = mult_closure(s, subset(s, bits).with(s.one()));
        let right = right_ideals(s);
        let (a, b) = (*x.get(&right), *y.get(&right));
        let sat = saturate(s, a, t);
        prop_assert!(a.is_subset(sat));
        prop_assert!(saturate(s, a & b, t).is_subset(sat));
    }

    #[test]
    fn radical_inclusions(i in any::<Index>()) {
        let s = pick(&i);
        let r = radicals(s, DEFAULT_CAP).unwrap();
        prop_assert!(r.a.is_subset(r.nil) && r.nil.is_subset(r.t));
        prop_assert!(s.elements().filter(|&a| s.is_nilpotent_element(a)).all(|a| r.t.contains(a)));
        prop_assert!(is_ideal(s, r.c, IdealKind::Right) && comparizer_condition(s, r.c));
        prop_assert_eq!(r.j, s.nonunits());
    }

    #[test]
    fn comparable_two_sided_prime_is_a_waist(i in any::<Index>()) {
        let s = pick(&i);
        let spec = completely_prime_spectrum(s, DEFAULT_CAP).unwrap().members;
        for &p in &spec {
            if is_right_p_comparable(s, p).unwrap().holds {
                prop_assert!(waist_condition(s, p));
                let inside: Vec<ElemSet> = spec.iter().copied().filter(|q| q.is_subset(p)).collect();
                for &q in &inside {
                    prop_assert!(inside.iter().all(|&r| r.comparable(q)));
                }
            }
        }
    }

    #[test]
    fn checks_are_total(i in any::<Index>()) {
        let s = pick(&i);
        let results = run_suite(s);
        for (_, v) in results {
            prop_assert_eq!(v.witness.is_some(), v.is_discrepancy());
        }
    }

    #[test]
    fn report_round_trips_and_text_agrees(i in any::<Index>()) {
        let s = pick(&i);
        let r = analyze(&Target::from_semigroup("s", s.clone()), DEFAULT_CAP, false);
        prop_assert_eq!(&AnalysisReport::from_json(&r.to_json()).unwrap(), &r);
        let text = render_analysis(&r);
        for p in &r.spectrum {
            prop_assert!(text.contains(&format_set(*p, None)));
        }
        for g in &r.segments {
            prop_assert!(text.contains(g.class.name()));
        }
    }
}
