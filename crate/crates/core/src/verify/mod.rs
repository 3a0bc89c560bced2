//! Hypothesis-gated executable statements with three-valued verdicts.

mod checks;
mod context;
mod verdict;

pub use context::Context;
pub use verdict::{Status, Trace, Verdict, Witness};

use serde::{Deserialize, Serialize};

use crate::corpus::enumerate_monoids_with_zero;
use crate::error::{Error, Result};
use crate::ideals::DEFAULT_CAP;
use crate::kernel::Semigroup;
use crate::segments::{is_locally_invariant, PrimeSegment, SegmentClass};

/// One registered statement.
pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    /// What the check sweeps.
    pub quantification: &'static str,
    run: fn(&Context) -> Verdict,
}

impl TheoremCheck {
    pub fn run(&self, ctx: &Context) -> Verdict {
        if ctx.capped {
            return Trace::new().vacuous_because("cap");
        }
        (self.run)(ctx)
    }
}

macro_rules! registry {
    ($( $id:literal, $f:ident, $stmt:literal, $quant:literal; )*) => {
        const REGISTRY: &[TheoremCheck] = &[
            $( TheoremCheck { id: $id, statement: $stmt, quantification: $quant, run: checks::$f }, )*
        ];
    };
}

registry! {
    "Lemma2.1.i", zero_is_comparizer,
        "{0} is a right comparizer", "the zero ideal";
    "Lemma2.1.ii", comparizer_union_closed,
        "unions of right comparizers are right comparizers", "pairs of proper comparizers and their total union";
    "Lemma2.1.iii", comparizer_down_closed,
        "right ideals inside a comparizer are comparizers", "comparizer, right ideal pairs";
    "Lemma2.2.i", idempotent_waist_absorbs,
        "an idempotent ideal that is a right waist satisfies aI = I for a ∉ I", "two-sided ideals";
    "Lemma2.2.ii", completely_prime_waist_iff,
        "a completely prime ideal is a right waist iff aP = P for every a ∉ P", "completely prime ideals";
    "Prop2.3.i", nonunits_maximal,
        "with cancellation, J(S) is a maximal right and maximal left ideal", "J(S)";
    "Prop2.3.ii", nonunits_completely_prime,
        "with cancellation, J(S) is a completely prime ideal", "J(S)";
    "Prop2.3.iii", nonunits_union_right,
        "with cancellation, J(S) is the union of the proper right ideals", "J(S)";
    "Prop2.3.iv", nonunits_union_left,
        "with cancellation, J(S) is the union of the proper left ideals", "J(S)";
    "Thm2.4.i", idempotent_comparizer_is_waist,
        "an idempotent right comparizer is a right waist", "proper comparizers";
    "Thm2.4.ii", comparizer_waist_translates,
        "if a comparizer I is a right waist then so is aI", "comparizer waists and elements";
    "Thm2.4.iii", primes_outside_comparizer,
        "a prime right ideal not containing a comparizer I is a right waist strictly inside I; primes inside I form a chain",
        "comparizers and prime right ideals";
    "Thm2.4.iv", comparizer_power_limit,
        "with left cancellation, the power intersection of a nonnilpotent comparizer ideal is completely prime",
        "two-sided comparizers";
    "Thm2.4.v", idempotent_comparizer_completely_prime,
        "with left cancellation, a nonnilpotent idempotent comparizer ideal is completely prime", "two-sided comparizers";
    "Lemma2.5.i", comparizer_below_waist,
        "below a right waist I, comparizers are exactly the ideals comparizing the right ideals inside I",
        "waists and right ideals inside them";
    "Lemma2.5.ii", waist_annihilator_comparizer,
        "I ∩ r(I) is a comparizer for a right waist I", "right waists";
    "Lemma2.5.iii", nilpotent_waist_penultimate_power,
        "if a right waist has Iⁿ = 0 then Iⁿ⁻¹ is a comparizer", "nilpotent right waists";
    "Lemma2.6.i", comparizer_radical_formula,
        "the elementwise formula for C(S) equals the union of comparizers", "S";
    "Lemma2.6.ii", right_chain_iff_full_radical,
        "S is a right chain iff C(S) = S", "S";
    "Thm2.7.i", nilpotent_radical_below_n,
        "if C(S) is nilpotent then C(S) ⊆ N(S)", "S";
    "Thm2.7.ii", nonnilpotent_radical_n,
        "if C(S) is nonnilpotent then N(S) ⊆ C(S) is a completely prime right waist", "S";
    "Thm2.7.iii", nonnilpotent_radical_beta,
        "if C(S) is nonnilpotent then β(S) is a prime right waist", "S";
    "Thm2.8.i", nilpotent_translates,
        "with left cancellation and nonnilpotent C(S), t a P ⊆ a P for nilpotent t, P = N(S)",
        "nilpotent elements and elements";
    "Thm2.8.ii", nilpotent_elements_subsemigroup,
        "T(S) is a subsemigroup and the union of its nilpotent ideals", "nilpotent elements";
    "Thm2.8.iii", radicals_coincide,
        "A(S) = β(S) = Nil(S) is a prime right waist", "S";
    "Cor2.9", ideals_around_radicals,
        "every ideal lies inside β(S) or contains N(S)", "two-sided ideals";
    "Thm2.10", nilpotent_elements_ideal,
        "T(S) is an ideal iff T(S) = β(S) iff β(S) is completely prime", "S";
    "Lemma2.12.i", associated_prime_completely_prime,
        "P_r(A) is a completely prime right ideal", "proper right ideals";
    "Lemma2.12.ii", associated_prime_waists,
        "for prime A and a right waist I, I ⊆ A or P_r(A) ⊆ I", "prime right ideals and waists";
    "Lemma2.13", waist_translate_characterisation,
        "T is a right waist iff T = ∩aP or T is a lower neighbour of bS = ∩aP", "proper right ideals";
    "Cor2.14", waist_translate_meets,
        "a right waist T with P_r(T) ⊆ J equals ∩aP and ∩aJ over a ∉ T", "right waists";
    "Lemma3.1", ore_saturation_right_ideal,
        "saturations of principal right ideals by a right Ore set are right ideals", "multiplicative subsets";
    "Lemma3.4", comparable_prime_is_waist,
        "if S is right P-comparable then P is a right waist, the completely primes inside P form a chain and N(S) is a completely prime right waist",
        "comparable completely prime ideals";
    "Prop3.5", comparability_forms_agree,
        "the five forms of right P-comparability agree", "completely prime ideals";
    "Thm3.6.i", semiprime_below_p,
        "semiprime right ideals inside P are prime right waists", "comparable P";
    "Thm3.6.ii", primes_below_p_chain,
        "prime right ideals inside P form a chain and β(S) is a prime right waist", "comparable P";
    "Thm3.6.iii", completely_semiprime_below_p,
        "an ideal inside P is completely prime iff completely semiprime", "comparable P";
    "Lemma3.7", waists_below_p_translate,
        "aI is a right waist for right waists I ⊆ P, and aP is a right waist", "comparable P";
    "Thm3.8", translate_iff_saturation,
        "with left cancellation, aP = bP iff (aS)T⁻¹ = (bS)T⁻¹", "comparable P and element pairs";
    "Cor3.9", weak_comparability,
        "with left cancellation, right P-comparable iff weak right P-comparable", "completely prime ideals";
    "Prop3.10", classes_are_saturations,
        "[a] = (aS)T⁻¹ is a right waist and equals (bS)T⁻¹ for b ∼ a", "comparable P and elements";
    "Lemma3.11", ideal_from_saturations,
        "a right ideal I with P_r(I) = P ⊆ J is the union of (aS)T⁻¹ over a ∈ I and a right waist",
        "comparable P and right ideals";
    "Cor3.12", ideal_from_translates,
        "such I equals ∩aP and ∩aJ over a ∉ I", "comparable P and right ideals";
    "Thm3.13", translate_representations,
        "P_r(I) ⊆ J iff I is a meet of translates iff I is a union of saturations; then I is a right waist",
        "nonzero proper right ideals";
    "Lemma3.14", associated_prime_of_translate,
        "P_r(aQ) = Q for completely prime Q ⊆ P and a ≠ 0", "comparable P, Q and elements";
    "Prop3.15", power_tail_prime,
        "∩tⁿS is a prime right waist for non-nilpotent t ∈ P, completely prime when two-sided", "comparable P and t";
    "Lemma4.4", pairing,
        "the meet of waist ideals above an exceptional prime is idempotent and minimal over it", "exceptional primes";
    "Lemma4.5", pairing_non_nilpotent,
        "some a ∈ D - Q has Q ⊂ ∩aⁿS", "exceptional primes";
    "Lemma4.6.i", semiprimes_chain,
        "semiprime ideals inside P form a chain", "comparable P";
    "Lemma4.6.ii", semiprimes_lattice,
        "semiprime ideals inside P are closed under union and intersection", "comparable P";
    "Lemma4.6.iii", semiprimes_least,
        "semiprime ideals inside P have a least element", "comparable P";
    "Lemma4.6.iv", semiprime_segment_below,
        "a completely semiprime P' ⊂ P lies in some P₀ with P₀ ⊂ P a prime segment", "comparable P";
    "Thm4.8", segment_trichotomy,
        "a prime segment below a comparable P₁ is exactly one of Archimedean, simple, exceptional", "prime segments";
    "Lemma4.10", invariant_segment_archimedean,
        "a locally invariant prime segment below a comparable P₁ is Archimedean", "prime segments";
}

/// Every registered check, in statement order.
pub fn registry() -> &'static [TheoremCheck] {
    REGISTRY
}

/// Runs one check, or every part of a statement when `id` names a group
/// such as `Thm2.8`. A group verdict is the worst part verdict, with
/// `Holds` ranking above `Vacuous`.
pub fn run_check(s: &Semigroup, id: &str) -> Result<Verdict> {
    let ctx = Context::new(s, DEFAULT_CAP);
    run_check_with(&ctx, id)
}

pub fn run_check_with(ctx: &Context, id: &str) -> Result<Verdict> {
    if let Some(c) = REGISTRY.iter().find(|c| c.id == id) {
        return Ok(c.run(ctx));
    }
    let prefix = format!("{id}.");
    let parts: Vec<Verdict> = REGISTRY
        .iter()
        .filter(|c| c.id.starts_with(&prefix))
        .map(|c| c.run(ctx))
        .collect();
    if parts.is_empty() {
        return Err(Error::UnknownCheck(id.to_string()));
    }
    let rank = |v: &Verdict| match v.status {
        Status::Discrepancy => 0,
        Status::Holds => 1,
        Status::Vacuous => 2,
    };
    Ok(parts.into_iter().min_by_key(rank).expect("nonempty"))
}

/// Every registered check in registry order.
pub fn run_suite(s: &Semigroup) -> Vec<(String, Verdict)> {
    run_suite_with(&Context::new(s, DEFAULT_CAP))
}

pub fn run_suite_with(ctx: &Context) -> Vec<(String, Verdict)> {
    REGISTRY
        .iter()
        .map(|c| (c.id.to_string(), c.run(ctx)))
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteTally {
    pub semigroups: usize,
    pub holds: usize,
    pub vacuous: usize,
    pub discrepancies: Vec<(String, String, Verdict)>,
}

impl SuiteTally {
    pub fn add(&mut self, name: &str, results: &[(String, Verdict)]) {
        self.semigroups += 1;
        for (id, v) in results {
            match v.status {
                Status::Holds => self.holds += 1,
                Status::Vacuous => self.vacuous += 1,
                Status::Discrepancy => self
                    .discrepancies
                    .push((name.to_string(), id.clone(), v.clone())),
            }
        }
    }
}

/// Runs the suite over every monoid with zero of each order in `orders`.
pub fn run_suite_enumerated(orders: std::ops::RangeInclusive<usize>) -> SuiteTally {
    let mut tally = SuiteTally::default();
    for n in orders {
        enumerate_monoids_with_zero(n, |e| {
            let name = e.semigroup.fingerprint();
            tally.add(&name, &run_suite(&e.semigroup));
        });
    }
    tally
}

/// A left-cancellative semigroup with an Archimedean prime segment,
/// right comparable with respect to its upper ideal, that is not locally
/// invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConverseCandidate {
    pub semigroup: Semigroup,
    pub segment: PrimeSegment,
}

impl ConverseCandidate {
    /// Re-applies the defining predicates.
    pub fn revalidate(&self) -> bool {
        let s = &self.semigroup;
        let ctx = Context::new(s, DEFAULT_CAP);
        s.is_left_cancellative()
            && ctx.segments.contains(&self.segment)
            && ctx.comparable(self.segment.p1)
            && ctx.classify(&self.segment).class == SegmentClass::Archimedean
            && !is_locally_invariant(s, &self.segment)
    }
}

/// Searches monoids with zero of order `2..=bound` for Archimedean,
/// comparable segments over a left-cancellative semigroup that are not
/// locally invariant. Each candidate is passed to `sink` and collected.
pub fn search_lemma410_converse(
    bound: usize,
    mut sink: impl FnMut(&ConverseCandidate),
) -> Vec<ConverseCandidate> {
    let mut out = Vec::new();
    for n in 2..=bound {
        enumerate_monoids_with_zero(n, |e| {
            let s = &e.semigroup;
            if !s.is_left_cancellative() {
                return;
            }
            let ctx = Context::new(s, DEFAULT_CAP);
            for seg in &ctx.segments {
                if ctx.comparable(seg.p1)
                    && ctx.classify(seg).class == SegmentClass::Archimedean
                    && !is_locally_invariant(s, seg)
                {
                    let c = ConverseCandidate {
                        semigroup: s.clone(),
                        segment: *seg,
                    };
                    sink(&c);
                    out.push(c);
                }
            }
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build_chain_x, build_delta, build_ef, corpus, minimal_monoid};
    use crate::elemset::ElemSet;

    fn status(s: &Semigroup, id: &str) -> Status {
        run_check(s, id).unwrap().status
    }

    #[test]
    fn registry_ids_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn examples() {
        assert_eq!(status(&build_chain_x(4), "Thm2.4.i"), Status::Holds);
        // every proper ideal of a finite left-cancellative monoid is nilpotent
        assert_eq!(status(&build_chain_x(4), "Thm2.4.iv"), Status::Vacuous);
        let v = run_check(&build_ef(4), "Thm3.8").unwrap();
        assert_eq!(v.status, Status::Vacuous);
        assert_eq!(v.reason.as_deref(), Some("left cancellation"));
        for c in corpus() {
            assert_eq!(status(&c.semigroup, "Lemma2.1.i"), Status::Holds, "{}", c.name);
        }
        assert_eq!(status(&build_chain_x(4), "Thm4.8"), Status::Holds);
        assert!(matches!(run_check(&minimal_monoid(), "Thm9.9"), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn gates_pass_and_fail() {
        // left cancellation + nonnilpotent C(S): chain_x passes, ef fails
        let v = run_check(&build_chain_x(3), "Thm2.8.iii").unwrap();
        assert!(v.hypothesis_trace.iter().all(|(_, b)| *b));
        let v = run_check(&build_ef(4), "Thm2.8.iii").unwrap();
        assert_eq!(v.status, Status::Vacuous);
        // right P1-comparability: chain_x passes, delta fails
        assert_eq!(status(&build_chain_x(3), "Thm4.8"), Status::Holds);
        assert_eq!(status(&build_delta(3), "Thm4.8"), Status::Vacuous);
        // cancellation
        assert_eq!(status(&build_ef(4), "Prop2.3.ii"), Status::Vacuous);
    }

    #[test]
    fn groups() {
        let s = build_chain_x(3);
        assert_eq!(run_check(&s, "Thm2.8").unwrap().status, Status::Holds);
        assert_eq!(run_check(&s, "Prop2.3").unwrap().status, Status::Holds);
        assert_eq!(run_check(&build_ef(4), "Prop2.3").unwrap().status, Status::Vacuous);
    }

    #[test]
    fn suites_on_small_structures() {
        for (id, v) in run_suite(&minimal_monoid()) {
            assert_ne!(v.status, Status::Discrepancy, "{id}: {v:?}");
        }
        let ids: Vec<String> = run_suite(&build_ef(4)).into_iter().map(|(i, _)| i).collect();
        assert_eq!(ids, registry().iter().map(|c| c.id.to_string()).collect::<Vec<_>>());
    }

    #[test]
    fn waist_meets_fail_with_a_nonunit_idempotent() {
        // {0, e, 1}: T = {0} has P_r(T) = {0} but ∩ aJ = {0, e}
        let s = Semigroup::new(&[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]], 1, 0).unwrap();
        let v = run_check(&s, "Cor2.14").unwrap();
        assert_eq!(v.status, Status::Discrepancy);
        let w = v.witness.unwrap();
        assert_eq!(w.sets[0], ElemSet::from_iter([0]));
        assert_eq!(w.sets[2], ElemSet::from_iter([0, 2]));
        // the cancellative counterpart holds on the corpus chains
        assert_eq!(status(&build_chain_x(4), "Cor2.14"), Status::Holds);
    }

    #[test]
    fn weak_comparability_differs_with_zero_divisors() {
        // {0, 1, a, b} with all products of a, b zero
        let s = Semigroup::new(
            &[vec![0, 0, 0, 0], vec![0, 1, 2, 3], vec![0, 2, 0, 0], vec![0, 3, 0, 0]],
            1,
            0,
        )
        .unwrap();
        assert!(s.is_left_cancellative());
        let v = run_check(&s, "Cor3.9").unwrap();
        assert_eq!(v.status, Status::Discrepancy);
        let ctx = Context::new(&s, DEFAULT_CAP);
        let r = ctx.report(s.nonunits()).unwrap();
        assert!(!r.holds && r.weak_holds);
    }

    #[test]
    fn cap_downgrades_to_vacuous() {
        let s = build_ef(4);
        let ctx = Context::new(&s, 3);
        let v = run_check_with(&ctx, "Lemma2.1.i").unwrap();
        assert_eq!(v.status, Status::Vacuous);
        assert_eq!(v.reason.as_deref(), Some("cap"));
    }
}
