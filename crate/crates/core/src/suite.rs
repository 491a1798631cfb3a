//! Corpus-wide drivers: the theorem sweep and the property suite.
//!
//! Groups are processed in parallel, each on its own sequential pipeline;
//! reports are merged in `(group, check, params)` order so that output does
//! not depend on scheduling.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::rc::Rc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bsgs::PermGroup;
use crate::checks;
use crate::corpus;
use crate::error::{Error, Result};
use crate::formation::PPrimeConvention;
use crate::groupfile::GroupSpec;
use crate::normal::NormalLattice;
use crate::quotient::{coset_action, Quotient};
use crate::report::{sort_reports, Params, VerdictReport};
use crate::subgroup::Subgroup;
use crate::theorems::{verify_all, GroupContext, TheoremId};

/// Below this many non-vacuous instances across the corpus a check is
/// flagged as insufficiently exercised.
pub const MIN_NON_VACUOUS: usize = 5;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub group: PermGroup,
    /// Built-in entries are self-tested before use.
    pub builtin: bool,
}

pub fn builtin_corpus() -> Result<Vec<CorpusEntry>> {
    corpus::DEFAULT_CORPUS
        .iter()
        .map(|id| {
            Ok(CorpusEntry {
                name: id.to_string(),
                group: corpus::build(id)?,
                builtin: true,
            })
        })
        .collect()
}

/// Every `*.grp` file in `dir`, in file-name order.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "grp"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let spec = GroupSpec::read(p)?;
            Ok(CorpusEntry {
                name: spec.name.clone(),
                group: spec.to_group()?,
                builtin: false,
            })
        })
        .collect()
}

/// Runs every built-in self-test; the first failure aborts.
pub fn self_test_all(entries: &[CorpusEntry]) -> Result<()> {
    for e in entries.iter().filter(|e| e.builtin) {
        corpus::self_test(&e.name)?;
    }
    Ok(())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckStats {
    pub reports: usize,
    pub instances: usize,
    /// Instances whose hypothesis held.
    pub applicable: usize,
    pub vacuous: usize,
    pub unevaluated: usize,
    pub counterexamples: usize,
    pub skipped_clauses: usize,
}

impl CheckStats {
    fn add(&mut self, o: &CheckStats) {
        self.reports += o.reports;
        self.instances += o.instances;
        self.applicable += o.applicable;
        self.vacuous += o.vacuous;
        self.unevaluated += o.unevaluated;
        self.counterexamples += o.counterexamples;
        self.skipped_clauses += o.skipped_clauses;
    }

    fn of_report(r: &VerdictReport) -> CheckStats {
        CheckStats {
            reports: 1,
            instances: 1,
            applicable: usize::from(r.hypothesis_holds == Some(true)),
            vacuous: usize::from(r.hypothesis_holds == Some(false)),
            unevaluated: usize::from(r.hypothesis_holds.is_none()),
            counterexamples: usize::from(r.is_counterexample()),
            skipped_clauses: r.skipped.len(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOutcome {
    pub reports: Vec<VerdictReport>,
    pub stats: BTreeMap<String, CheckStats>,
    pub warnings: Vec<String>,
}

impl SuiteOutcome {
    pub fn counterexamples(&self) -> Vec<&VerdictReport> {
        self.reports.iter().filter(|r| r.is_counterexample()).collect()
    }

    pub fn has_counterexample(&self) -> bool {
        self.reports.iter().any(|r| r.is_counterexample())
    }

    fn finish(mut self) -> SuiteOutcome {
        sort_reports(&mut self.reports);
        for (check, s) in &self.stats {
            if s.applicable < MIN_NON_VACUOUS {
                self.warnings.push(format!(
                    "{check}: only {} non-vacuous instances across the corpus",
                    s.applicable
                ));
            }
        }
        self
    }

    /// One line per check: instances, non-vacuous, vacuous, counterexamples.
    pub fn stats_table(&self) -> String {
        let mut out = format!(
            "{:<36} {:>9} {:>12} {:>8} {:>11} {:>8} {:>8}\n",
            "check", "instances", "non-vacuous", "vacuous", "unevaluated", "skipped", "counter"
        );
        for (k, s) in &self.stats {
            out += &format!(
                "{:<36} {:>9} {:>12} {:>8} {:>11} {:>8} {:>8}\n",
                k, s.instances, s.applicable, s.vacuous, s.unevaluated, s.skipped_clauses, s.counterexamples
            );
        }
        out
    }
}

/// Theorem verdicts for every applicable `(p, d, E)` on every corpus group.
/// `p` and `d` restrict the sweep when given.
pub fn run_theorem_sweep(
    entries: &[CorpusEntry],
    theorems: &[TheoremId],
    convention: PPrimeConvention,
    p: Option<u64>,
    d: Option<u64>,
) -> Result<SuiteOutcome> {
    self_test_all(entries)?;
    let per_group: Vec<Result<Vec<VerdictReport>>> = entries
        .par_iter()
        .map(|e| {
            let ctx = GroupContext::new(&e.name, e.group.clone())?.with_convention(convention);
            Ok(theorems
                .iter()
                .flat_map(|&t| verify_all(&ctx, t, p, d))
                .collect())
        })
        .collect();
    let mut out = SuiteOutcome::default();
    for t in theorems {
        out.stats.entry(format!("theorem-{}", t.name())).or_default();
    }
    for r in per_group {
        for rep in r? {
            out.stats
                .entry(rep.check.clone())
                .or_default()
                .add(&CheckStats::of_report(&rep));
            out.reports.push(rep);
        }
    }
    Ok(out.finish())
}

/// Aggregates the instances of one check on one group into a single report.
pub struct Tally {
    report: VerdictReport,
    stats: CheckStats,
    start: Instant,
}

impl Tally {
    pub fn new(group: &str, check: &str, params: Params) -> Tally {
        Tally {
            report: VerdictReport::new(group, check, params),
            stats: CheckStats::default(),
            start: Instant::now(),
        }
    }

    /// One instance: `applicable` is its hypothesis, `holds` its conclusion.
    pub fn record(&mut self, applicable: bool, holds: bool, witness: impl FnOnce() -> String) {
        self.stats.instances += 1;
        if !applicable {
            self.stats.vacuous += 1;
            return;
        }
        self.stats.applicable += 1;
        if !holds {
            self.stats.counterexamples += 1;
            if self.report.witnesses.len() < 5 {
                self.report.witnesses.push(witness());
            }
        }
    }

    pub fn skip(&mut self, what: &str, e: &Error) {
        self.stats.skipped_clauses += 1;
        if self.report.skipped.len() < 5 {
            self.report.skip(what, e);
        }
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.report.notes.push(n.into());
    }

    pub fn finish(mut self) -> Option<(VerdictReport, CheckStats)> {
        let s = &self.stats;
        if s.instances == 0 && s.skipped_clauses == 0 {
            return None;
        }
        let r = &mut self.report;
        if s.instances == 0 {
            r.hypothesis_holds = None;
        } else {
            r.set_hypothesis(s.applicable > 0);
            if s.applicable > 0 {
                r.clause(
                    "holds on every applicable instance",
                    s.counterexamples == 0,
                    format!("{} applicable of {}, {} failing", s.applicable, s.instances, s.counterexamples),
                );
            }
        }
        r.conclude();
        let stats = CheckStats {
            reports: 1,
            ..self.stats.clone()
        };
        Some((self.report.timed(self.start), stats))
    }
}

/// FNV-1a, used only to derive per-(group, check) RNG streams.
fn stream_seed(seed: u64, group: &str, tag: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in group.bytes().chain([0xff]).chain(tag.bytes()) {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Per-group state shared by the property checks.
pub struct Env<'a> {
    pub gc: &'a GroupContext,
    pub builtin: bool,
    seed: u64,
    /// Subgroups the per-subgroup checks run over.
    pub pool: Vec<Subgroup>,
    quotients: RefCell<HashMap<usize, Rc<(Quotient, NormalLattice)>>>,
}

impl<'a> Env<'a> {
    pub fn new(gc: &'a GroupContext, builtin: bool, seed: u64) -> Env<'a> {
        let mut env = Env {
            gc,
            builtin,
            seed,
            pool: Vec::new(),
            quotients: RefCell::new(HashMap::new()),
        };
        env.pool = checks::subgroup_pool(&env);
        env
    }

    pub fn rng(&self, tag: &str) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(stream_seed(self.seed, &self.gc.name, tag))
    }

    pub fn tally(&self, check: &str, params: Params) -> Tally {
        Tally::new(&self.gc.name, check, params)
    }

    /// `G/N` for the lattice node at `idx`, with its own normal lattice.
    pub fn quotient(&self, idx: usize) -> Result<Rc<(Quotient, NormalLattice)>> {
        if let Some(q) = self.quotients.borrow().get(&idx) {
            return Ok(q.clone());
        }
        let n = &self.gc.lat.nodes()[idx];
        let q = coset_action(&self.gc.g, n)?;
        let lat = NormalLattice::new(&Subgroup::whole(q.group()))?;
        let rc = Rc::new((q, lat));
        self.quotients.borrow_mut().insert(idx, rc.clone());
        Ok(rc)
    }
}

/// Names of the property checks, lemmas first.
pub fn check_names() -> Vec<&'static str> {
    checks::CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs the selected property checks (all when `only` is `None`) over the
/// corpus with the given seed.
pub fn run_property_suite(
    entries: &[CorpusEntry],
    only: Option<&[String]>,
    seed: u64,
    convention: PPrimeConvention,
) -> Result<SuiteOutcome> {
    if let Some(sel) = only {
        for s in sel {
            if !checks::CHECKS.iter().any(|(n, _)| n == s) {
                return Err(Error::Input(format!("unknown check {s:?}")));
            }
        }
    }
    let selected: Vec<_> = checks::CHECKS
        .iter()
        .filter(|(n, _)| only.is_none_or(|sel| sel.iter().any(|s| s == n)))
        .collect();
    let per_group: Vec<Result<Vec<(VerdictReport, CheckStats)>>> = entries
        .par_iter()
        .map(|e| {
            let gc = GroupContext::new(&e.name, e.group.clone())?.with_convention(convention);
            let env = Env::new(&gc, e.builtin, seed);
            let mut out: Vec<(VerdictReport, CheckStats)> = Vec::new();
            for (_, f) in &selected {
                out.extend(f(&env).into_iter().filter_map(Tally::finish));
            }
            if only.is_none_or(|sel| sel.iter().any(|s| s == checks::JSON_ROUNDTRIP)) {
                let reps: Vec<VerdictReport> = out.iter().map(|(r, _)| r.clone()).collect();
                let mut t = env.tally(checks::JSON_ROUNDTRIP, Params::default());
                let back = crate::report::to_json(&reps)
                    .ok()
                    .and_then(|s| crate::report::from_json(&s).ok());
                t.record(true, back.as_ref() == Some(&reps), || "round trip differs".into());
                out.extend(t.finish());
            }
            Ok(out)
        })
        .collect();
    let mut out = SuiteOutcome::default();
    for (n, _) in &selected {
        out.stats.entry(n.to_string()).or_default();
    }
    for g in per_group {
        for (rep, st) in g? {
            out.stats.entry(rep.check.clone()).or_default().add(&st);
            out.reports.push(rep);
        }
    }
    Ok(out.finish())
}
