use itertools::Itertools;

use super::context::Context;
use super::verdict::{Trace, Verdict, Witness};
use crate::classify::{associated_prime, comparizer_union, is_right_chain, PrimenessKind};
use crate::elemset::ElemSet;
use crate::ideals::{intersect_powers, is_nilpotent_ideal, power_chain, right_annihilator, set_product};
use crate::localize::{equivalence_class, is_multiplicatively_closed, is_right_ore_set, saturate, sat_equals_translate_check};
use crate::segments::{has_non_nilpotent_over, is_locally_invariant, pairing_with, tail_report, SegmentClass};

use PrimenessKind::{CompletelyPrime, CompletelySemiprime, Prime, Semiprime};

/// Result of one swept instance.
pub(super) enum Outcome {
    /// The instance does not meet the hypotheses.
    Skip,
    Pass,
    Fail(Witness),
}

fn ensure(ok: bool, w: impl FnOnce() -> Witness) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(w())
    }
}

fn sweep<T>(trace: Trace, items: impl IntoIterator<Item = T>, mut f: impl FnMut(T) -> Outcome) -> Verdict {
    let mut checked = 0;
    for it in items {
        match f(it) {
            Outcome::Skip => {}
            Outcome::Pass => checked += 1,
            Outcome::Fail(w) => return trace.conclude(checked + 1, Some(w)),
        }
    }
    trace.conclude(checked, None)
}

fn sets(desc: &str, s: &[ElemSet]) -> Witness {
    Witness::new(desc).sets(s)
}

/// Gates on left cancellation.
#[allow(clippy::result_large_err)]
fn gated_lc(ctx: &Context) -> Result<Trace, Verdict> {
    let mut t = Trace::new();
    if t.gate("left cancellation", ctx.left_cancellative) {
        Ok(t)
    } else {
        Err(t.vacuous())
    }
}

/// Gates on left cancellation and a nonnilpotent `C(S)`.
#[allow(clippy::result_large_err)]
fn gated_lc_c(ctx: &Context) -> Result<Trace, Verdict> {
    let mut t = Trace::new();
    let lc = t.gate("left cancellation", ctx.left_cancellative);
    let nn = t.gate("C(S) nonnilpotent", !ctx.c_nilpotent);
    if lc && nn {
        Ok(t)
    } else {
        Err(t.vacuous())
    }
}

macro_rules! gate {
    ($e:expr) => {
        match $e {
            Ok(t) => t,
            Err(v) => return v,
        }
    };
}

// ---- comparizers and waists ----

pub(super) fn zero_is_comparizer(ctx: &Context) -> Verdict {
    let z = ctx.s.zero_set();
    sweep(Trace::new(), [z], |z| {
        ensure(ctx.is_comparizer(z), || sets("{0} is not a right comparizer", &[z]))
    })
}

pub(super) fn comparizer_union_closed(ctx: &Context) -> Verdict {
    let whole = ctx.comparizers.iter().fold(ElemSet::EMPTY, |a, &b| a | b);
    let pairs = ctx
        .comparizers
        .iter()
        .tuple_combinations()
        .map(|(&a, &b)| (a, b))
        .chain(std::iter::once((whole, whole)));
    sweep(Trace::new(), pairs, |(a, b)| {
        let u = a | b;
        ensure(ctx.is_right_ideal(u) && ctx.is_comparizer(u), || {
            sets("union of comparizers is not a comparizer", &[a, b, u])
        })
    })
}

pub(super) fn comparizer_down_closed(ctx: &Context) -> Verdict {
    let pairs = ctx
        .comparizers
        .iter()
        .cartesian_product(ctx.right.iter())
        .filter(|(c, a)| a.is_subset(**c));
    sweep(Trace::new(), pairs, |(&c, &a)| {
        ensure(ctx.is_comparizer(a), || {
            sets("right ideal inside a comparizer is not a comparizer", &[c, a])
        })
    })
}

pub(super) fn idempotent_waist_absorbs(ctx: &Context) -> Verdict {
    sweep(Trace::new(), ctx.two.iter().copied(), |i| {
        if !(ctx.sq(i) == i && ctx.is_waist(i)) {
            return Outcome::Skip;
        }
        match (i.complement(ctx.s.order())).iter().find(|&a| ctx.translate(a, i) != i) {
            Some(a) => Outcome::Fail(sets("aI != I", &[i, ctx.translate(a, i)]).elements(&[a])),
            None => Outcome::Pass,
        }
    })
}

pub(super) fn completely_prime_waist_iff(ctx: &Context) -> Verdict {
    sweep(Trace::new(), ctx.spectrum.iter().copied(), |p| {
        let absorbs = p
            .complement(ctx.s.order())
            .iter()
            .all(|a| ctx.translate(a, p) == p);
        ensure(ctx.is_waist(p) == absorbs, || {
            sets("right waist and aP = P for a ∉ P disagree", &[p])
        })
    })
}

// ---- cancellative semigroups ----

fn nonunit_check(ctx: &Context, f: impl FnOnce(ElemSet) -> Option<Witness>) -> Verdict {
    let mut t = Trace::new();
    if !t.gate("cancellation", ctx.cancellative) {
        return t.vacuous();
    }
    let j = ctx.s.nonunits();
    t.conclude(1, f(j))
}

pub(super) fn nonunits_maximal(ctx: &Context) -> Verdict {
    nonunit_check(ctx, |j| {
        let all = ctx.all();
        let right_max = ctx.is_right_ideal(j)
            && !ctx.right.iter().any(|&r| j.is_proper_subset(r) && r != all);
        let left_max = ctx.left.contains(&j)
            && !ctx.left.iter().any(|&l| j.is_proper_subset(l) && l != all);
        (!(right_max && left_max)).then(|| sets("J(S) is not a maximal right and left ideal", &[j]))
    })
}

pub(super) fn nonunits_completely_prime(ctx: &Context) -> Verdict {
    nonunit_check(ctx, |j| {
        (!(ctx.is_two_sided(j) && ctx.has(j, CompletelyPrime)))
            .then(|| sets("J(S) is not a completely prime ideal", &[j]))
    })
}

pub(super) fn nonunits_union_right(ctx: &Context) -> Verdict {
    nonunit_check(ctx, |j| {
        let u = ctx.right.iter().filter(|&&r| r != ctx.all()).fold(ElemSet::EMPTY, |a, &b| a | b);
        (u != j).then(|| sets("J(S) is not the union of proper right ideals", &[j, u]))
    })
}

pub(super) fn nonunits_union_left(ctx: &Context) -> Verdict {
    nonunit_check(ctx, |j| {
        let u = ctx.left.iter().filter(|&&r| r != ctx.all()).fold(ElemSet::EMPTY, |a, &b| a | b);
        (u != j).then(|| sets("J(S) is not the union of proper left ideals", &[j, u]))
    })
}

// ---- comparizer ideals ----

pub(super) fn idempotent_comparizer_is_waist(ctx: &Context) -> Verdict {
    sweep(Trace::new(), ctx.comparizers.iter().copied(), |i| {
        if ctx.sq(i) != i {
            return Outcome::Skip;
        }
        ensure(ctx.is_waist(i), || sets("idempotent comparizer is not a right waist", &[i]))
    })
}

pub(super) fn comparizer_waist_translates(ctx: &Context) -> Verdict {
    let items = ctx
        .comparizers
        .iter()
        .copied()
        .filter(|&i| ctx.is_waist(i))
        .cartesian_product(ctx.s.elements());
    sweep(Trace::new(), items, |(i, a)| {
        let ai = ctx.translate(a, i);
        ensure(ctx.is_waist(ai), || sets("aI is not a right waist", &[i, ai]).elements(&[a]))
    })
}

pub(super) fn primes_outside_comparizer(ctx: &Context) -> Verdict {
    let primes: Vec<ElemSet> = ctx
        .right
        .iter()
        .copied()
        .filter(|&p| !p.is_empty() && ctx.has(p, Prime))
        .collect();
    sweep(Trace::new(), ctx.comparizers.iter().copied(), |i| {
        let mut any = false;
        for &p in &primes {
            if !i.is_subset(p) {
                any = true;
                if !(ctx.is_waist(p) && p.is_proper_subset(i)) {
                    return Outcome::Fail(sets("prime right ideal not below the comparizer", &[i, p]));
                }
            }
        }
        let inside: Vec<ElemSet> = primes.iter().copied().filter(|p| p.is_subset(i)).collect();
        if let Some((a, b)) = inside.iter().tuple_combinations().find(|(a, b)| !a.comparable(**b)) {
            return Outcome::Fail(sets("prime right ideals inside the comparizer are incomparable", &[i, *a, *b]));
        }
        if any || inside.len() > 1 {
            Outcome::Pass
        } else {
            Outcome::Skip
        }
    })
}

pub(super) fn comparizer_power_limit(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    let items = ctx.comparizers.iter().copied().filter(|&i| ctx.is_two_sided(i));
    sweep(t, items, |i| {
        if is_nilpotent_ideal(ctx.s, i) {
            return Outcome::Skip;
        }
        let lim = intersect_powers(ctx.s, i);
        ensure(ctx.has(lim, CompletelyPrime), || {
            sets("power intersection is not completely prime", &[i, lim])
        })
    })
}

pub(super) fn idempotent_comparizer_completely_prime(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    let items = ctx.comparizers.iter().copied().filter(|&i| ctx.is_two_sided(i));
    sweep(t, items, |i| {
        if ctx.sq(i) != i || is_nilpotent_ideal(ctx.s, i) {
            return Outcome::Skip;
        }
        ensure(ctx.has(i, CompletelyPrime), || {
            sets("idempotent comparizer ideal is not completely prime", &[i])
        })
    })
}

// ---- comparizers below a waist ----

/// For all `a, b ∈ I`: `aS ⊆ bS` or `bC ⊆ aS`.
fn comparizer_within(ctx: &Context, c: ElemSet, i: ElemSet) -> bool {
    let s = ctx.s;
    i.iter().all(|a| {
        let a_s = s.right_principal(a);
        i.iter()
            .all(|b| a_s.is_subset(s.right_principal(b)) || s.left_translate(b, c).is_subset(a_s))
    })
}

pub(super) fn comparizer_below_waist(ctx: &Context) -> Verdict {
    let items = ctx
        .waists
        .iter()
        .cartesian_product(ctx.right.iter())
        .filter(|(i, c)| c.is_subset(**i));
    sweep(Trace::new(), items, |(&i, &c)| {
        ensure(ctx.is_comparizer(c) == comparizer_within(ctx, c, i), || {
            sets("global and local comparizer conditions disagree", &[i, c])
        })
    })
}

pub(super) fn waist_annihilator_comparizer(ctx: &Context) -> Verdict {
    sweep(Trace::new(), ctx.waists.iter().copied(), |i| {
        let x = i & right_annihilator(ctx.s, i);
        ensure(ctx.is_right_ideal(x) && ctx.is_comparizer(x), || {
            sets("I ∩ r(I) is not a comparizer", &[i, x])
        })
    })
}

pub(super) fn nilpotent_waist_penultimate_power(ctx: &Context) -> Verdict {
    let z = ctx.s.zero_set();
    sweep(Trace::new(), ctx.waists.iter().copied(), |i| {
        let chain = power_chain(ctx.s, i);
        let Some(k) = chain.iter().position(|&p| p == z) else {
            return Outcome::Skip;
        };
        let prev = if k == 0 { i } else { chain[k - 1] };
        ensure(ctx.is_comparizer(prev), || {
            sets("penultimate power is not a comparizer", &[i, prev])
        })
    })
}

pub(super) fn comparizer_radical_formula(ctx: &Context) -> Verdict {
    let union = comparizer_union(ctx.s, usize::MAX).expect("uncapped");
    sweep(Trace::new(), [ctx.c], |c| {
        ensure(c == union, || sets("elementwise C(S) differs from the union", &[c, union]))
    })
}

pub(super) fn right_chain_iff_full_radical(ctx: &Context) -> Verdict {
    sweep(Trace::new(), [ctx.c], |c| {
        ensure(is_right_chain(ctx.s) == (c == ctx.all()), || {
            sets("right chain and C(S) = S disagree", &[c])
        })
    })
}

// ---- radicals ----

pub(super) fn nilpotent_radical_below_n(ctx: &Context) -> Verdict {
    let mut t = Trace::new();
    if !t.gate("C(S) nilpotent", ctx.c_nilpotent) {
        return t.vacuous();
    }
    let n = ctx.radicals.n;
    t.conclude(1, (!ctx.c.is_subset(n)).then(|| sets("C(S) ⊄ N(S)", &[ctx.c, n])))
}

pub(super) fn nonnilpotent_radical_n(ctx: &Context) -> Verdict {
    let mut t = Trace::new();
    if !t.gate("C(S) nonnilpotent", !ctx.c_nilpotent) {
        return t.vacuous();
    }
    let n = ctx.radicals.n;
    let ok = n.is_subset(ctx.c) && ctx.has(n, CompletelyPrime) && ctx.is_waist(n);
    t.conclude(1, (!ok).then(|| sets("N(S) is not a completely prime right waist inside C(S)", &[ctx.c, n])))
}

pub(super) fn nonnilpotent_radical_beta(ctx: &Context) -> Verdict {
    let mut t = Trace::new();
    if !t.gate("C(S) nonnilpotent", !ctx.c_nilpotent) {
        return t.vacuous();
    }
    let b = ctx.radicals.beta;
    let ok = ctx.has(b, Prime) && ctx.is_waist(b);
    t.conclude(1, (!ok).then(|| sets("β(S) is not a prime right waist", &[b])))
}

pub(super) fn nilpotent_translates(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc_c(ctx));
    let p = ctx.radicals.n;
    let items = ctx.radicals.t.iter().cartesian_product(ctx.s.elements());
    sweep(t, items, |(x, a)| {
        let ap = ctx.translate(a, p);
        let xap = ctx.translate(x, ap);
        ensure(xap.is_subset(ap), || sets("t a P ⊄ a P", &[ap, xap]).elements(&[x, a]))
    })
}

/// `{t} ∪ Tt ∪ tT ∪ TtT` inside the subsemigroup `T`.
fn ideal_of_subsemigroup(ctx: &Context, t_set: ElemSet, t: usize) -> ElemSet {
    let s = ctx.s;
    let tt = s.right_translate(t_set, t);
    ElemSet::singleton(t) | tt | s.left_translate(t, t_set) | set_product(s, tt, t_set)
}

pub(super) fn nilpotent_elements_subsemigroup(ctx: &Context) -> Verdict {
    let mut t = gate!(gated_lc_c(ctx));
    let ts = ctx.radicals.t;
    if !is_multiplicatively_closed(ctx.s, ts) {
        t.instances(1);
        return t.discrepancy(sets("T(S) is not closed under multiplication", &[ts]));
    }
    sweep(t, ts.iter(), |x| {
        let i = ideal_of_subsemigroup(ctx, ts, x);
        ensure(is_nilpotent_ideal(ctx.s, i), || {
            sets("element of T(S) lies in no nilpotent ideal of T(S)", &[ts, i]).elements(&[x])
        })
    })
}

pub(super) fn radicals_coincide(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc_c(ctx));
    let r = &ctx.radicals;
    let ok = r.a == r.beta && r.beta == r.nil && ctx.has(r.beta, Prime) && ctx.is_waist(r.beta);
    t.conclude(1, (!ok).then(|| sets("A, β, Nil differ or β is not a prime right waist", &[r.a, r.beta, r.nil])))
}

pub(super) fn ideals_around_radicals(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc_c(ctx));
    let (b, n) = (ctx.radicals.beta, ctx.radicals.n);
    sweep(t, ctx.two.iter().copied(), |i| {
        ensure(i.is_subset(b) || n.is_subset(i), || sets("I ⊄ β(S) and N(S) ⊄ I", &[i, b, n]))
    })
}

pub(super) fn nilpotent_elements_ideal(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc_c(ctx));
    let r = &ctx.radicals;
    let i = ctx.is_two_sided(r.t);
    let ii = r.t == r.beta;
    let iii = ctx.has(r.beta, CompletelyPrime);
    let agree = i == ii && ii == iii;
    t.conclude(1, (!agree).then(|| {
        Witness::new(format!(
            "T(S) ideal: {i}, T(S) = β(S): {ii}, β(S) completely prime: {iii}"
        ))
        .sets(&[r.t, r.beta])
    }))
}

// ---- associated primes ----

fn proper_right<'c>(ctx: &'c Context) -> impl Iterator<Item = ElemSet> + 'c {
    ctx.right.iter().copied().filter(|&a| a != ctx.all())
}

fn p_r(ctx: &Context, a: ElemSet) -> ElemSet {
    associated_prime(ctx.s, a).expect("proper right ideal")
}

pub(super) fn associated_prime_completely_prime(ctx: &Context) -> Verdict {
    sweep(Trace::new(), proper_right(ctx), |a| {
        let p = p_r(ctx, a);
        ensure(ctx.is_right_ideal(p) && ctx.has(p, CompletelyPrime), || {
            sets("P_r(A) is not a completely prime right ideal", &[a, p])
        })
    })
}

pub(super) fn associated_prime_waists(ctx: &Context) -> Verdict {
    let items = proper_right(ctx)
        .filter(|&a| ctx.has(a, Prime))
        .cartesian_product(ctx.waists.iter().copied());
    sweep(Trace::new(), items, |(a, i)| {
        let p = p_r(ctx, a);
        ensure(i.is_subset(a) || p.is_subset(i), || sets("I ⊄ A and P_r(A) ⊄ I", &[a, i, p]))
    })
}

fn waist_translate_form(ctx: &Context, t: ElemSet) -> bool {
    let p = p_r(ctx, t);
    let x = ctx.translates_meet(t, p);
    if t == x {
        return true;
    }
    t.complement(ctx.s.order()).iter().any(|b| {
        let bs = ctx.s.right_principal(b);
        t.is_proper_subset(bs)
            && bs == x
            && !ctx.right.iter().any(|&h| t.is_proper_subset(h) && h.is_proper_subset(bs))
    })
}

pub(super) fn waist_translate_characterisation(ctx: &Context) -> Verdict {
    sweep(Trace::new(), proper_right(ctx), |t| {
        ensure(ctx.is_waist(t) == waist_translate_form(ctx, t), || {
            sets("right waist and the translate form disagree", &[t])
        })
    })
}

pub(super) fn waist_translate_meets(ctx: &Context) -> Verdict {
    let j = ctx.s.nonunits();
    let items = ctx.waists.iter().copied().filter(|t| !t.is_empty());
    sweep(Trace::new(), items, |t| {
        let p = p_r(ctx, t);
        if !p.is_subset(j) {
            return Outcome::Skip;
        }
        let (xp, xj) = (ctx.translates_meet(t, p), ctx.translates_meet(t, j));
        ensure(t == xp && t == xj, || sets("T, ∩aP, ∩aJ differ", &[t, xp, xj]))
    })
}

// ---- Ore sets and comparability ----

fn multiplicative_sets(ctx: &Context) -> Vec<ElemSet> {
    let s = ctx.s;
    let mut v: Vec<ElemSet> = if s.order() <= 10 {
        (1u64..1 << s.order())
            .map(ElemSet::from_bits)
            .filter(|&t| is_multiplicatively_closed(s, t))
            .collect()
    } else {
        let mut v = vec![ElemSet::singleton(s.one()), s.units()];
        v.extend(ctx.cp_right.iter().map(|p| p.complement(s.order())));
        v
    };
    v.sort();
    v.dedup();
    v
}

pub(super) fn ore_saturation_right_ideal(ctx: &Context) -> Verdict {
    let s = ctx.s;
    sweep(Trace::new(), multiplicative_sets(ctx), |t| {
        if !is_right_ore_set(s, t).expect("closed") {
            return Outcome::Skip;
        }
        match s
            .elements()
            .map(|a| (a, saturate(s, s.right_principal(a), t)))
            .find(|&(_, x)| !ctx.is_right_ideal(x))
        {
            Some((a, x)) => Outcome::Fail(sets("(aS)T⁻¹ is not a right ideal", &[t, x]).elements(&[a])),
            None => Outcome::Pass,
        }
    })
}

pub(super) fn comparable_prime_is_waist(ctx: &Context) -> Verdict {
    sweep(Trace::new(), ctx.comparable_primes(), |p| {
        if !ctx.is_waist(p) {
            return Outcome::Fail(sets("P is not a right waist", &[p]));
        }
        let below: Vec<ElemSet> = ctx.spectrum.iter().copied().filter(|q| q.is_subset(p)).collect();
        if let Some((a, b)) = below.iter().tuple_combinations().find(|(a, b)| !a.comparable(**b)) {
            return Outcome::Fail(sets("completely prime ideals inside P are incomparable", &[p, *a, *b]));
        }
        let n = ctx.radicals.n;
        ensure(ctx.has(n, CompletelyPrime) && ctx.is_waist(n), || {
            sets("N(S) is not a completely prime right waist", &[p, n])
        })
    })
}

pub(super) fn comparability_forms_agree(ctx: &Context) -> Verdict {
    sweep(Trace::new(), ctx.spectrum.iter().copied(), |p| {
        let r = ctx.report(p).expect("spectrum ⊆ completely prime right ideals");
        ensure(r.conditions_agree(), || {
            Witness::new(format!("condition results {:?}", r.condition_results)).sets(&[p])
        })
    })
}

fn comparable_sweep(ctx: &Context, trace: Trace, f: impl FnMut(ElemSet) -> Outcome) -> Verdict {
    sweep(trace, ctx.comparable_primes(), f)
}

pub(super) fn semiprime_below_p(ctx: &Context) -> Verdict {
    comparable_sweep(ctx, Trace::new(), |p| {
        for q in ctx.right.iter().copied().filter(|q| q.is_subset(p)) {
            if ctx.has(q, Semiprime) && !(ctx.has(q, Prime) && ctx.is_waist(q)) {
                return Outcome::Fail(sets("semiprime right ideal inside P is not a prime right waist", &[p, q]));
            }
        }
        Outcome::Pass
    })
}

pub(super) fn primes_below_p_chain(ctx: &Context) -> Verdict {
    comparable_sweep(ctx, Trace::new(), |p| {
        let primes: Vec<ElemSet> = ctx
            .right
            .iter()
            .copied()
            .filter(|&q| q.is_subset(p) && ctx.has(q, Prime))
            .collect();
        if let Some((a, b)) = primes.iter().tuple_combinations().find(|(a, b)| !a.comparable(**b)) {
            return Outcome::Fail(sets("prime right ideals inside P are incomparable", &[p, *a, *b]));
        }
        let b = ctx.radicals.beta;
        ensure(ctx.has(b, Prime) && ctx.is_waist(b), || sets("β(S) is not a prime right waist", &[p, b]))
    })
}

pub(super) fn completely_semiprime_below_p(ctx: &Context) -> Verdict {
    comparable_sweep(ctx, Trace::new(), |p| {
        match ctx
            .two
            .iter()
            .copied()
            .filter(|q| q.is_subset(p))
            .find(|&q| ctx.has(q, CompletelyPrime) != ctx.has(q, CompletelySemiprime))
        {
            Some(q) => Outcome::Fail(sets("completely prime and completely semiprime disagree", &[p, q])),
            None => Outcome::Pass,
        }
    })
}

pub(super) fn waists_below_p_translate(ctx: &Context) -> Verdict {
    comparable_sweep(ctx, Trace::new(), |p| {
        let mut ideals: Vec<ElemSet> = ctx.waists.iter().copied().filter(|i| i.is_subset(p)).collect();
        ideals.push(p);
        for i in ideals {
            if let Some(a) = ctx.s.elements().find(|&a| !ctx.is_waist(ctx.translate(a, i))) {
                return Outcome::Fail(sets("aI is not a right waist", &[p, i, ctx.translate(a, i)]).elements(&[a]));
            }
        }
        Outcome::Pass
    })
}

pub(super) fn translate_iff_saturation(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    comparable_sweep(ctx, t, |p| {
        let v = sat_equals_translate_check(ctx.s, p);
        match v.witness {
            Some(w) => Outcome::Fail(w.sets(&[p])),
            None => Outcome::Pass,
        }
    })
}

pub(super) fn weak_comparability(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    sweep(t, ctx.spectrum.iter().copied(), |p| {
        let r = ctx.report(p).expect("in cp_right");
        ensure(r.holds == r.weak_holds, || sets("P-comparable and weak P-comparable disagree", &[p]))
    })
}

pub(super) fn classes_are_saturations(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    let s = ctx.s;
    comparable_sweep(ctx, t, |p| {
        let sat = ctx.saturations(p);
        let nonzero = || s.elements().filter(|&a| a != s.zero());
        for a in nonzero() {
            let cls = equivalence_class(s, a, p);
            let ap = ctx.translate(a, p);
            let same = nonzero().filter(|&b| ctx.translate(b, p) == ap).all(|b| sat[b] == cls);
            if !(cls == sat[a] && (cls == s.all() || ctx.is_waist(cls)) && same) {
                return Outcome::Fail(sets("[a] and (aS)T⁻¹ disagree", &[p, cls, sat[a]]).elements(&[a]));
            }
        }
        Outcome::Pass
    })
}

/// Pairs `(P, I)` with `P` comparable and `I` a proper right ideal with
/// `P_r(I) = P`.
fn ideals_with_prime(ctx: &Context) -> Vec<(ElemSet, ElemSet)> {
    let primes = ctx.comparable_primes();
    proper_right(ctx)
        .filter_map(|i| {
            let p = p_r(ctx, i);
            primes.contains(&p).then_some((p, i))
        })
        .collect()
}

pub(super) fn ideal_from_saturations(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    let j = ctx.s.nonunits();
    sweep(t, ideals_with_prime(ctx), |(p, i)| {
        if !p.is_subset(j) {
            return Outcome::Skip;
        }
        let sat = ctx.saturations(p);
        let u = i.iter().fold(ElemSet::EMPTY, |acc, a| acc | sat[a]);
        ensure(u == i && ctx.is_waist(i), || sets("I is not the union of its saturations, or not a waist", &[p, i, u]))
    })
}

pub(super) fn ideal_from_translates(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    let j = ctx.s.nonunits();
    sweep(t, ideals_with_prime(ctx), |(p, i)| {
        if !p.is_subset(j) {
            return Outcome::Skip;
        }
        let (xp, xj) = (ctx.translates_meet(i, p), ctx.translates_meet(i, j));
        ensure(i == xp && i == xj, || sets("I, ∩aP, ∩aJ differ", &[p, i, xp, xj]))
    })
}

pub(super) fn translate_representations(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    let s = ctx.s;
    let j = s.nonunits();
    let primes_in_j: Vec<ElemSet> = ctx.cp_right.iter().copied().filter(|p| p.is_subset(j)).collect();
    let items = proper_right(ctx).filter(|&i| i != s.zero_set() && !i.is_empty());
    sweep(t, items, |i| {
        let pr = p_r(ctx, i);
        if !ctx.comparable(pr) {
            return Outcome::Skip;
        }
        let c1 = pr.is_subset(j);
        let c2 = primes_in_j.iter().any(|&p| {
            let v: Vec<usize> = s.elements().filter(|&a| i.is_subset(ctx.translate(a, p))).collect();
            !v.is_empty() && v.iter().fold(s.all(), |acc, &a| acc & ctx.translate(a, p)) == i
        });
        let c3 = primes_in_j.iter().any(|&p| {
            let sat = ctx.saturations(p);
            s.elements()
                .filter(|&a| sat[a].is_subset(i))
                .fold(ElemSet::EMPTY, |acc, a| acc | sat[a])
                == i
        });
        if !(c1 == c2 && c2 == c3) {
            return Outcome::Fail(
                Witness::new(format!("P_r(I) ⊆ J: {c1}, meet of translates: {c2}, union of saturations: {c3}"))
                    .sets(&[i, pr]),
            );
        }
        ensure(!c1 || ctx.is_waist(i), || sets("I is not a right waist", &[i, pr]))
    })
}

pub(super) fn associated_prime_of_translate(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    let s = ctx.s;
    comparable_sweep(ctx, t, |p| {
        for q in ctx.spectrum.iter().copied().filter(|q| q.is_subset(p)) {
            for a in s.elements().filter(|&a| a != s.zero()) {
                let aq = ctx.translate(a, q);
                let pr = p_r(ctx, aq);
                if pr != q {
                    return Outcome::Fail(sets("P_r(aQ) != Q", &[p, q, aq, pr]).elements(&[a]));
                }
            }
        }
        Outcome::Pass
    })
}

pub(super) fn power_tail_prime(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    let s = ctx.s;
    comparable_sweep(ctx, t, |p| {
        let mut any = false;
        for x in p.iter().filter(|&x| !s.is_nilpotent_element(x)) {
            any = true;
            let r = tail_report(s, x, Some(p));
            let ok = ctx.is_right_ideal(r.q)
                && r.prime_right
                && r.right_waist
                && (!r.two_sided || r.completely_prime);
            if !ok {
                return Outcome::Fail(sets("∩ tⁿS is not a prime right waist", &[p, r.q]).elements(&[x]));
            }
        }
        if any {
            Outcome::Pass
        } else {
            Outcome::Skip
        }
    })
}

// ---- prime segments ----

/// `(P, Q)` with `P` comparable and `Q ⊂ P` prime but not completely prime.
fn exceptional_pairs(ctx: &Context) -> Vec<(ElemSet, ElemSet)> {
    ctx.comparable_primes()
        .into_iter()
        .flat_map(|p| {
            ctx.two
                .iter()
                .copied()
                .filter(move |q| q.is_proper_subset(p))
                .filter(|&q| ctx.has(q, Prime) && !ctx.has(q, CompletelyPrime))
                .map(move |q| (p, q))
        })
        .collect()
}

pub(super) fn pairing(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    sweep(t, exceptional_pairs(ctx), |(p, q)| {
        let Some(d) = pairing_with(ctx.s, q, &ctx.two) else {
            return Outcome::Fail(sets("no two-sided right waist above Q", &[p, q]));
        };
        let minimal = !ctx.two.iter().any(|&i| q.is_proper_subset(i) && i.is_proper_subset(d));
        let ok = q.is_proper_subset(d) && ctx.is_two_sided(d) && ctx.is_waist(d) && minimal && ctx.sq(d) == d;
        ensure(ok, || sets("D is not an idempotent waist minimal over Q", &[p, q, d]))
    })
}

pub(super) fn pairing_non_nilpotent(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    sweep(t, exceptional_pairs(ctx), |(p, q)| {
        let Some(d) = pairing_with(ctx.s, q, &ctx.two) else {
            return Outcome::Fail(sets("no two-sided right waist above Q", &[p, q]));
        };
        ensure(has_non_nilpotent_over(ctx.s, d, q).is_some(), || {
            sets("no a ∈ D - Q with Q ⊂ ∩ aⁿS", &[p, q, d])
        })
    })
}

fn semiprime_below(ctx: &Context, p: ElemSet) -> Vec<ElemSet> {
    ctx.two
        .iter()
        .copied()
        .filter(|&q| !q.is_empty() && q.is_proper_subset(p) && ctx.has(q, Semiprime))
        .collect()
}

pub(super) fn semiprimes_chain(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    comparable_sweep(ctx, t, |p| {
        let alpha = semiprime_below(ctx, p);
        match alpha.iter().tuple_combinations().find(|(a, b)| !a.comparable(**b)) {
            Some((a, b)) => Outcome::Fail(sets("semiprime ideals inside P are incomparable", &[p, *a, *b])),
            None => Outcome::Pass,
        }
    })
}

pub(super) fn semiprimes_lattice(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    comparable_sweep(ctx, t, |p| {
        let alpha = semiprime_below(ctx, p);
        for (&a, &b) in alpha.iter().tuple_combinations() {
            if !(alpha.contains(&(a | b)) && alpha.contains(&(a & b))) {
                return Outcome::Fail(sets("union or intersection leaves the family", &[p, a, b]));
            }
        }
        Outcome::Pass
    })
}

pub(super) fn semiprimes_least(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    comparable_sweep(ctx, t, |p| {
        let alpha = semiprime_below(ctx, p);
        if alpha.is_empty() {
            return Outcome::Skip;
        }
        let meet = alpha.iter().fold(ctx.all(), |a, &b| a & b);
        ensure(alpha.contains(&meet), || sets("the family has no least element", &[p, meet]))
    })
}

pub(super) fn semiprime_segment_below(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    comparable_sweep(ctx, t, |p| {
        for q in ctx.two.iter().copied().filter(|&q| {
            !q.is_empty() && q.is_proper_subset(p) && ctx.has(q, CompletelySemiprime)
        }) {
            let found = ctx.spectrum.iter().any(|&p0| {
                q.is_subset(p0)
                    && p0.is_proper_subset(p)
                    && !ctx.spectrum.iter().any(|&r| p0.is_proper_subset(r) && r.is_proper_subset(p))
            });
            if !found {
                return Outcome::Fail(sets("no prime segment P₀ ⊂ P above P'", &[p, q]));
            }
        }
        Outcome::Pass
    })
}

pub(super) fn segment_trichotomy(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    let s = ctx.s;
    sweep(t, ctx.segments.iter().copied(), |seg| {
        if !ctx.comparable(seg.p1) {
            return Outcome::Skip;
        }
        let r = ctx.classify(&seg);
        match r.class {
            SegmentClass::None | SegmentClass::MultiMatch => Outcome::Fail(
                Witness::new(format!(
                    "class {}: archimedean {}, simple {}, exceptional {}",
                    r.class.name(),
                    r.archimedean,
                    r.simple,
                    r.exceptional
                ))
                .sets(&[seg.p2, seg.p1]),
            ),
            SegmentClass::Exceptional(_) => {
                let base = seg.archimedean_base(s);
                match r.witnesses.exceptional_primes.iter().find(|&&q| intersect_powers(s, q) != base) {
                    Some(&q) => Outcome::Fail(sets("P₂ != ∩ Qⁿ", &[seg.p2, seg.p1, q])),
                    None => Outcome::Pass,
                }
            }
            _ => Outcome::Pass,
        }
    })
}

pub(super) fn invariant_segment_archimedean(ctx: &Context) -> Verdict {
    let t = gate!(gated_lc(ctx));
    let s = ctx.s;
    sweep(t, ctx.segments.iter().copied(), |seg| {
        if !(ctx.comparable(seg.p1) && !seg.is_degenerate(s) && is_locally_invariant(s, &seg)) {
            return Outcome::Skip;
        }
        let r = ctx.classify(&seg);
        ensure(r.class == SegmentClass::Archimedean, || {
            Witness::new(format!("locally invariant segment classified {}", r.class.name()))
                .sets(&[seg.p2, seg.p1])
        })
    })
}
