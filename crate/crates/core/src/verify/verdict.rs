use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    /// Hypotheses met and the conclusion holds on every swept instance.
    Holds,
    /// Some hypothesis fails, so nothing is asserted.
    Vacuous,
    /// Hypotheses met but the conclusion fails; see the witness.
    Discrepancy,
}

/// Counterexample data: the offending elements and sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub description: String,
    #[serde(default)]
    pub elements: Vec<usize>,
    #[serde(default)]
    pub sets: Vec<ElemSet>,
}

impl Witness {
    pub fn new(description: impl Into<String>) -> Self {
        Witness {
            description: description.into(),
            elements: Vec::new(),
            sets: Vec::new(),
        }
    }

    pub fn elements(mut self, e: &[usize]) -> Self {
        self.elements.extend_from_slice(e);
        self
    }

    pub fn sets(mut self, s: &[ElemSet]) -> Self {
        self.sets.extend_from_slice(s);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub hypothesis_trace: Vec<(String, bool)>,
    /// Present exactly when the status is `Discrepancy`.
    pub witness: Option<Witness>,
    /// For `Vacuous`: the hypothesis that failed.
    pub reason: Option<String>,
}

impl Verdict {
    pub fn is_discrepancy(&self) -> bool {
        self.status == Status::Discrepancy
    }
}

/// Accumulates hypothesis outcomes and produces the verdict.
#[derive(Debug, Clone, Default)]
pub struct Trace {
    entries: Vec<(String, bool)>,
}

impl Trace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a hypothesis and returns its value.
    pub fn gate(&mut self, name: &str, value: bool) -> bool {
        self.entries.push((name.to_string(), value));
        value
    }

    /// Records that a swept family had `count` instances meeting the
    /// per-instance hypotheses.
    pub fn instances(&mut self, count: usize) -> bool {
        self.gate("some instance meets the hypotheses", count > 0)
    }

    pub fn holds(self) -> Verdict {
        Verdict {
            status: Status::Holds,
            hypothesis_trace: self.entries,
            witness: None,
            reason: None,
        }
    }

    /// Vacuous, naming the last failed hypothesis.
    pub fn vacuous(self) -> Verdict {
        let reason = self
            .entries
            .iter()
            .rev()
            .find(|(_, v)| !v)
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| "hypothesis unavailable".to_string());
        self.vacuous_because(reason)
    }

    pub fn vacuous_because(self, reason: impl Into<String>) -> Verdict {
        Verdict {
            status: Status::Vacuous,
            hypothesis_trace: self.entries,
            witness: None,
            reason: Some(reason.into()),
        }
    }

    pub fn discrepancy(self, witness: Witness) -> Verdict {
        Verdict {
            status: Status::Discrepancy,
            hypothesis_trace: self.entries,
            witness: Some(witness),
            reason: None,
        }
    }

    /// Holds when `failure` is `None` and at least one instance was
    /// checked; vacuous when none was; a discrepancy otherwise.
    pub fn conclude(mut self, checked: usize, failure: Option<Witness>) -> Verdict {
        match failure {
            Some(w) => self.discrepancy(w),
            None if self.instances(checked) => self.holds(),
            None => self.vacuous(),
        }
    }
}
