//! Structured verdicts for theorem and lemma checks.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<u64>,
    /// The normal subgroup or subgroup under test, as generators.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub e: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub extra: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    /// `None` when the clause was skipped.
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub clause: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub group: String,
    pub check: String,
    pub params: Params,
    /// `None` when the hypothesis could not be evaluated.
    pub hypothesis_holds: Option<bool>,
    /// Present iff the hypothesis holds.
    pub conclusion_holds: Option<bool>,
    pub vacuous: bool,
    pub clauses: Vec<Clause>,
    pub skipped: Vec<Skip>,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
    pub wall_time_us: u64,
}

impl VerdictReport {
    pub fn new(group: &str, check: &str, params: Params) -> VerdictReport {
        VerdictReport {
            group: group.to_string(),
            check: check.to_string(),
            params,
            hypothesis_holds: None,
            conclusion_holds: None,
            vacuous: false,
            clauses: Vec::new(),
            skipped: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            wall_time_us: 0,
        }
    }

    pub fn is_counterexample(&self) -> bool {
        self.hypothesis_holds == Some(true) && self.conclusion_holds == Some(false)
    }

    /// Hypothesis evaluated and false.
    pub fn set_hypothesis(&mut self, holds: bool) {
        self.hypothesis_holds = Some(holds);
        self.vacuous = !holds;
    }

    pub fn clause(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        self.clauses.push(Clause {
            name: name.to_string(),
            holds: Some(holds),
            detail: detail.into(),
        });
    }

    pub fn skip(&mut self, clause: &str, err: &Error) {
        self.clauses.push(Clause {
            name: clause.to_string(),
            holds: None,
            detail: String::new(),
        });
        self.skipped.push(Skip {
            clause: clause.to_string(),
            reason: err.to_string(),
        });
    }

    /// Conclusion = conjunction of evaluated clauses; set only when the
    /// hypothesis holds.
    pub fn conclude(&mut self) {
        if self.hypothesis_holds == Some(true) {
            self.conclusion_holds = Some(self.clauses.iter().all(|c| c.holds != Some(false)));
        } else {
            self.conclusion_holds = None;
        }
    }

    pub fn timed(mut self, start: Instant) -> VerdictReport {
        self.wall_time_us = start.elapsed().as_micros() as u64;
        self
    }

    /// Deterministic merge order.
    pub fn sort_key(&self) -> (String, String, Params) {
        (self.group.clone(), self.check.clone(), self.params.clone())
    }

    /// The report with timing zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> VerdictReport {
        VerdictReport {
            wall_time_us: 0,
            ..self.clone()
        }
    }

    pub fn summary_line(&self) -> String {
        let status = match (self.hypothesis_holds, self.conclusion_holds) {
            (None, _) => "SKIPPED",
            (Some(false), _) => "VACUOUS",
            (Some(true), Some(true)) => "VERIFIED",
            (Some(true), Some(false)) => "COUNTEREXAMPLE",
            (Some(true), None) => "INCOMPLETE",
        };
        let mut params = Vec::new();
        if let Some(p) = self.params.p {
            params.push(format!("p={p}"));
        }
        if let Some(d) = self.params.d {
            params.push(format!("d={d}"));
        }
        if let Some(e) = &self.params.e {
            params.push(format!("E={e}"));
        }
        if let Some(x) = &self.params.extra {
            params.push(x.clone());
        }
        format!("{status:<14} {} {} {}", self.check, self.group, params.join(" "))
    }
}

pub fn sort_reports(reports: &mut [VerdictReport]) {
    reports.sort_by_key(|a| a.sort_key());
}

pub fn to_json(reports: &[VerdictReport]) -> serde_json::Result<String> {
    serde_json::to_string_pretty(reports)
}

pub fn from_json(text: &str) -> serde_json::Result<Vec<VerdictReport>> {
    serde_json::from_str(text)
}
