//! Suite results as a JSON document and as an aligned text table.

use serde::{Deserialize, Serialize};

use scalext_core::check::{CheckReport, Witness};
use scalext_core::CoeffVector;

use crate::format::Entry;
use crate::suites::SuiteRun;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub index: Vec<usize>,
    pub lhs: Vec<Entry>,
    pub rhs: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub evaluated: usize,
    /// All failing tuples, not only the listed witnesses.
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageTiming {
    pub stage: String,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub instance: String,
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<StageTiming>>,
}

fn coeffs(v: &CoeffVector) -> Vec<Entry> {
    v.iter().map(|(i, c)| (i, format!("{}/{}", c.numer(), c.denom()))).collect()
}

fn witness(w: &Witness) -> WitnessEntry {
    WitnessEntry { index: w.index.clone(), lhs: coeffs(&w.lhs), rhs: coeffs(&w.rhs) }
}

fn entry(c: &CheckReport, cap: usize) -> CheckEntry {
    CheckEntry {
        name: c.name.clone(),
        passed: c.passed,
        evaluated: c.evaluated,
        failures: c.failures,
        note: c.note.clone(),
        witnesses: c.witnesses.iter().take(cap).map(witness).collect(),
    }
}

impl Report {
    pub fn new(instance: &str, suite: &str, run: &SuiteRun, witness_cap: usize, timings: bool) -> Self {
        let checks: Vec<CheckEntry> = run.checks.checks.iter().map(|c| entry(c, witness_cap)).collect();
        Report {
            instance: instance.into(),
            suite: suite.into(),
            passed: !checks.is_empty() && checks.iter().all(|c| c.passed),
            checks,
            timings: timings.then(|| run.stages.iter().map(|(s, d)| StageTiming { stage: s.clone(), millis: d.as_secs_f64() * 1e3 }).collect()),
        }
    }

    pub fn failing(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        crate::json::to_string(self)
    }

    pub fn table(&self) -> String {
        let w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0).max("check".len());
        let mut out = format!("instance {}  suite {}\n", self.instance, self.suite);
        out += &format!("{:<w$}  {:<6}  {:>9}  {:>8}\n", "check", "result", "evaluated", "failures");
        for c in &self.checks {
            out += &format!("{:<w$}  {:<6}  {:>9}  {:>8}", c.name, if c.passed { "pass" } else { "FAIL" }, c.evaluated, c.failures);
            if let Some(n) = c.note.as_ref().filter(|_| !c.passed) {
                out += &format!("  {n}");
            }
            out.push('\n');
        }
        if let Some(t) = &self.timings {
            for s in t {
                out += &format!("time {:<w$}  {:.1} ms\n", s.stage, s.millis);
            }
        }
        let failed = self.failing().len();
        out += &format!("{} checks, {} failed: {}\n", self.checks.len(), failed, if self.passed { "PASS" } else { "FAIL" });
        out
    }
}
