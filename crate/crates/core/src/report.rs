//! Structured analysis and verification reports.
//!
//! The JSON form is authoritative; [`render_analysis`] and
//! [`render_verification`] are projections of the same data.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{is_right_chain, primeness_condition, radicals, PrimenessKind, RadicalReport};
use crate::corpus::CorpusEntry;
use crate::elemset::ElemSet;
use crate::ideals::{enumerate_ideals, IdealKind};
use crate::kernel::Semigroup;
use crate::localize::{is_right_p_comparable, nested_saturation_check, ComparabilityReport};
use crate::segments::{classify_with, segments_of, SegmentReport};
use crate::verify::{run_suite_with, Context, Status, Verdict, Witness};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupInfo {
    pub name: String,
    pub order: usize,
    pub one: usize,
    pub zero: usize,
    /// Hash of the canonical form; equal for isomorphic tables.
    pub hash: String,
    /// Display names, present for corpus entries.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl SemigroupInfo {
    pub fn new(name: impl Into<String>, s: &Semigroup, names: Option<Vec<String>>) -> Self {
        SemigroupInfo {
            name: name.into(),
            order: s.order(),
            one: s.one(),
            zero: s.zero(),
            hash: s.fingerprint(),
            names,
        }
    }
}

/// A semigroup resolved from a corpus name or a Cayley text file.
#[derive(Debug, Clone)]
pub struct Target {
    pub info: SemigroupInfo,
    pub semigroup: Semigroup,
    pub notes: Vec<String>,
}

impl Target {
    pub fn from_corpus(e: &CorpusEntry) -> Self {
        Target {
            info: SemigroupInfo::new(e.name, &e.semigroup, Some(e.names.clone())),
            semigroup: e.semigroup.clone(),
            notes: e.notes.iter().map(|n| n.to_string()).collect(),
        }
    }

    pub fn from_semigroup(name: impl Into<String>, s: Semigroup) -> Self {
        Target {
            info: SemigroupInfo::new(name, &s, None),
            semigroup: s,
            notes: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictEntry {
    pub id: String,
    pub status: Status,
    pub hypothesis_trace: Vec<(String, bool)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl VerdictEntry {
    pub fn new(id: impl Into<String>, v: Verdict) -> Self {
        VerdictEntry {
            id: id.into(),
            status: v.status,
            hypothesis_trace: v.hypothesis_trace,
            witness: v.witness,
            reason: v.reason,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub semigroup: SemigroupInfo,
    pub cap: usize,
    /// Some ideal enumeration stopped at `cap`; radicals and segments are
    /// then omitted.
    pub capped: bool,
    pub right_chain: bool,
    pub left_cancellative: bool,
    pub radicals: Option<RadicalReport>,
    /// Nonempty proper completely prime two-sided ideals.
    pub spectrum: Vec<ElemSet>,
    /// One entry per nonempty proper completely prime right ideal.
    pub comparability: Vec<ComparabilityReport>,
    pub segments: Vec<SegmentReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<VerdictEntry>>,
    pub notes: Vec<String>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn has_discrepancy(&self) -> bool {
        self.verdicts
            .iter()
            .flatten()
            .any(|v| v.status == Status::Discrepancy)
    }
}

/// Runs every analysis on `target`, optionally with the full check suite.
pub fn analyze(target: &Target, cap: usize, with_verdicts: bool) -> AnalysisReport {
    let s = &target.semigroup;
    let right = enumerate_ideals(s, IdealKind::Right, cap);
    let two = enumerate_ideals(s, IdealKind::TwoSided, cap);
    let capped = right.truncated || two.truncated || enumerate_ideals(s, IdealKind::Left, cap).truncated;
    let all = s.all();
    let cp = |x: &ElemSet| !x.is_empty() && *x != all && primeness_condition(s, *x, PrimenessKind::CompletelyPrime);
    let spectrum: Vec<ElemSet> = two.members.iter().filter(|x| cp(x)).copied().collect();
    let comparability: Vec<ComparabilityReport> = right
        .members
        .iter()
        .filter(|x| cp(x))
        .map(|&p| is_right_p_comparable(s, p).expect("completely prime right ideal"))
        .collect();
    let mut notes = target.notes.clone();
    let (radicals, segments) = if capped {
        notes.push(format!("ideal enumeration stopped at the cap of {cap}; radicals and segments omitted"));
        (None, Vec::new())
    } else {
        let segs = segments_of(&spectrum)
            .iter()
            .map(|g| classify_with(s, g, &two.members))
            .collect();
        (Some(radicals(s, cap).expect("enumeration below cap")), segs)
    };
    for r in comparability.iter().filter(|r| r.holds && r.relaxed_v) {
        notes.push(format!(
            "for P = {}, some (aS)T⁻¹ is all of S; the waist form of comparability counts S as a waist",
            format_set(r.p, target.info.names.as_deref())
        ));
    }
    let primes: Vec<ElemSet> = comparability.iter().map(|r| r.p).collect();
    let nested = nested_saturation_check(s, &primes);
    if let Some(w) = nested.witness {
        notes.push(format!(
            "saturations shrink as T grows: (aS)T'⁻¹ ⊆ (aS)T⁻¹ fails for T ⊆ T' at a = {}; the reverse inclusion holds",
            w.elements.first().map_or("?".to_string(), |&a| element_name(a, target.info.names.as_deref()))
        ));
    }
    let verdicts = with_verdicts.then(|| {
        let ctx = Context::new(s, cap);
        run_suite_with(&ctx)
            .into_iter()
            .map(|(id, v)| VerdictEntry::new(id, v))
            .collect()
    });
    AnalysisReport {
        schema: SCHEMA_VERSION,
        semigroup: target.info.clone(),
        cap,
        capped,
        right_chain: is_right_chain(s),
        left_cancellative: s.is_left_cancellative(),
        radicals,
        spectrum,
        comparability,
        segments,
        verdicts,
        notes,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub semigroup: SemigroupInfo,
    pub results: Vec<VerdictEntry>,
}

impl VerificationReport {
    pub fn has_discrepancy(&self) -> bool {
        self.results.iter().any(|v| v.status == Status::Discrepancy)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderTally {
    pub order: usize,
    pub semigroups: usize,
    pub holds: usize,
    pub vacuous: usize,
    pub discrepancies: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoundDiscrepancy {
    pub semigroup: SemigroupInfo,
    pub table: Vec<Vec<usize>>,
    pub result: VerdictEntry,
}

/// Verification over every enumerated monoid with zero up to some order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema: u32,
    pub checks: Vec<String>,
    pub orders: Vec<OrderTally>,
    pub discrepancies: Vec<FoundDiscrepancy>,
}

impl SweepReport {
    pub fn has_discrepancy(&self) -> bool {
        !self.discrepancies.is_empty()
    }
}

// ---- text projections ----

pub fn element_name(a: usize, names: Option<&[String]>) -> String {
    names
        .and_then(|n| n.get(a).cloned())
        .unwrap_or_else(|| a.to_string())
}

pub fn format_set(x: ElemSet, names: Option<&[String]>) -> String {
    let items: Vec<String> = x.iter().map(|a| element_name(a, names)).collect();
    format!("{{{}}}", items.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..rows.first().map_or(0, Vec::len))
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        let _ = writeln!(out, "  {}", line.join("  ").trim_end());
    }
    out
}

pub fn render_analysis(r: &AnalysisReport) -> String {
    let names = r.semigroup.names.as_deref();
    let set = |x: ElemSet| format_set(x, names);
    let mut out = String::new();
    let info = &r.semigroup;
    let _ = writeln!(
        out,
        "{} (order {}, one {}, zero {}, hash {})",
        info.name, info.order, info.one, info.zero, info.hash
    );
    let _ = writeln!(out, "right chain: {}", yes(r.right_chain));
    let _ = writeln!(out, "left cancellative: {}", yes(r.left_cancellative));
    if let Some(rad) = &r.radicals {
        let _ = writeln!(out, "\nradicals");
        let rows: Vec<Vec<String>> = [
            ("beta", rad.beta),
            ("beta_right", rad.beta_right),
            ("N", rad.n),
            ("Nil", rad.nil),
            ("A", rad.a),
            ("T", rad.t),
            ("C", rad.c),
            ("J", rad.j),
        ]
        .iter()
        .map(|(k, v)| vec![k.to_string(), set(*v)])
        .collect();
        out.push_str(&table(&rows));
    }
    let _ = writeln!(out, "\ncompletely prime ideals: {}", r.spectrum.len());
    for p in &r.spectrum {
        let _ = writeln!(out, "  {}", set(*p));
    }
    let _ = writeln!(out, "\ncomparability");
    let mut rows = vec![vec![
        "P".to_string(),
        "comparable".to_string(),
        "forms".to_string(),
        "weak".to_string(),
        "witness".to_string(),
    ]];
    for c in &r.comparability {
        let forms: String = c.condition_results.iter().map(|&b| if b { 'T' } else { 'F' }).collect();
        let witness = c.witness.map_or("-".to_string(), |(a, b)| {
            format!("({}, {})", element_name(a, names), element_name(b, names))
        });
        rows.push(vec![set(c.p), yes(c.holds).into(), forms, yes(c.weak_holds).into(), witness]);
    }
    out.push_str(&table(&rows));
    let _ = writeln!(out, "\nprime segments");
    let mut rows = vec![vec!["lower".to_string(), "upper".to_string(), "class".to_string()]];
    for g in &r.segments {
        let class = match &g.class {
            crate::segments::SegmentClass::Exceptional(q) => format!("Exceptional {}", set(*q)),
            c => c.name().to_string(),
        };
        rows.push(vec![set(g.segment.p2), set(g.segment.p1), class]);
    }
    out.push_str(&table(&rows));
    if let Some(vs) = &r.verdicts {
        let _ = writeln!(out, "\nchecks");
        out.push_str(&render_entries(vs, names));
    }
    if !r.notes.is_empty() {
        let _ = writeln!(out, "\nnotes");
        for n in &r.notes {
            let _ = writeln!(out, "  - {n}");
        }
    }
    out
}

fn render_entries(vs: &[VerdictEntry], names: Option<&[String]>) -> String {
    let rows: Vec<Vec<String>> = vs
        .iter()
        .map(|v| {
            let detail = match (&v.witness, &v.reason) {
                (Some(w), _) => {
                    let mut d = w.description.clone();
                    if !w.elements.is_empty() {
                        let e: Vec<String> = w.elements.iter().map(|&a| element_name(a, names)).collect();
                        let _ = write!(d, "; elements {}", e.join(", "));
                    }
                    for x in &w.sets {
                        let _ = write!(d, "; {}", format_set(*x, names));
                    }
                    d
                }
                (None, Some(r)) => format!("fails: {r}"),
                (None, None) => String::new(),
            };
            vec![v.id.clone(), format!("{:?}", v.status), detail]
        })
        .collect();
    table(&rows)
}

pub fn render_verification(r: &VerificationReport) -> String {
    let mut out = format!("{} (order {}, hash {})\n", r.semigroup.name, r.semigroup.order, r.semigroup.hash);
    out.push_str(&render_entries(&r.results, r.semigroup.names.as_deref()));
    out
}

pub fn render_sweep(r: &SweepReport) -> String {
    let mut out = String::new();
    let mut rows = vec![vec![
        "order".to_string(),
        "monoids".to_string(),
        "holds".to_string(),
        "vacuous".to_string(),
        "discrepancies".to_string(),
    ]];
    for t in &r.orders {
        rows.push(vec![
            t.order.to_string(),
            t.semigroups.to_string(),
            t.holds.to_string(),
            t.vacuous.to_string(),
            t.discrepancies.to_string(),
        ]);
    }
    out.push_str(&table(&rows));
    for d in &r.discrepancies {
        let _ = writeln!(out, "\n{} {} {:?}", d.result.id, d.semigroup.hash, d.table);
        out.push_str(&render_entries(std::slice::from_ref(&d.result), None));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{corpus_entry, minimal_monoid};
    use crate::ideals::DEFAULT_CAP;
    use crate::segments::SegmentClass;

    #[test]
    fn ef_analysis() {
        let t = Target::from_corpus(&corpus_entry("ef4").unwrap());
        let r = analyze(&t, DEFAULT_CAP, false);
        let p: ElemSet = [0, 5, 6, 7, 8].into_iter().collect();
        assert_eq!(r.radicals.as_ref().unwrap().t, p);
        let c = r.comparability.iter().find(|c| c.p == p).unwrap();
        assert!(c.holds && c.conditions_agree());
        let bottom = r.segments.iter().find(|g| g.segment.bottom).unwrap();
        assert_eq!(bottom.class, SegmentClass::Archimedean);
        assert!(!r.right_chain);
        assert!(r.notes.iter().any(|n| n.contains("(eS)T⁻¹")));
        assert!(r.notes.iter().any(|n| n.contains("reverse inclusion")));
        assert!(r.verdicts.is_none());
    }

    #[test]
    fn delta_bottom_segments_are_none() {
        let t = Target::from_corpus(&corpus_entry("delta3").unwrap());
        let r = analyze(&t, DEFAULT_CAP, false);
        for g in r.segments.iter().filter(|g| g.segment.bottom) {
            assert_eq!(g.class, SegmentClass::None);
        }
        let minimal: Vec<_> = r.comparability.iter().filter(|c| c.p.len() == 3).collect();
        assert_eq!(minimal.len(), 3);
        assert!(minimal.iter().all(|c| !c.holds && c.witness.is_some()));
    }

    #[test]
    fn chain_is_right_chain() {
        let t = Target::from_corpus(&corpus_entry("chain_x4").unwrap());
        let r = analyze(&t, DEFAULT_CAP, true);
        assert!(r.right_chain);
        assert_eq!(r.radicals.as_ref().unwrap().c, t.semigroup.all());
        assert!(!r.has_discrepancy());
    }

    #[test]
    fn json_round_trip_and_schema() {
        let t = Target::from_corpus(&corpus_entry("ef4").unwrap());
        let r = analyze(&t, DEFAULT_CAP, true);
        let text = r.to_json();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["radicals"]["T"], serde_json::json!([0, 5, 6, 7, 8]));
        assert_eq!(AnalysisReport::from_json(&text).unwrap(), r);
    }

    #[test]
    fn cap_is_surfaced() {
        let t = Target::from_corpus(&corpus_entry("ef4").unwrap());
        let r = analyze(&t, 3, false);
        assert!(r.capped);
        assert!(r.radicals.is_none() && r.segments.is_empty());
        assert!(r.notes.iter().any(|n| n.contains("cap of 3")));
    }

    #[test]
    fn text_uses_names() {
        let t = Target::from_corpus(&corpus_entry("ef4").unwrap());
        let text = render_analysis(&analyze(&t, DEFAULT_CAP, false));
        assert!(text.contains("{0, x, x^2, x^3, x^4}"));
        assert!(text.contains("Archimedean"));
        let plain = Target::from_semigroup("m", minimal_monoid());
        assert!(render_analysis(&analyze(&plain, DEFAULT_CAP, false)).contains("{0}"));
    }
}
