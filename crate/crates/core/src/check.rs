//! Verification results: named checks with capped counterexample lists.

use rayon::prelude::*;

use crate::exactla::{CoeffVector, LinMap, TensorShape};

/// One failing instance of an identity: basis multi-index and both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub index: Vec<usize>,
    pub lhs: CoeffVector,
    pub rhs: CoeffVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Number of basis tuples evaluated.
    pub evaluated: usize,
    /// Number of failing tuples; `witnesses` keeps only the first few.
    pub failures: usize,
    pub witnesses: Vec<Witness>,
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub witness_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { witness_cap: 10 }
    }
}

impl CheckOptions {
    pub fn with_cap(witness_cap: usize) -> Self {
        CheckOptions {
            witness_cap: witness_cap.max(1),
        }
    }

    fn cap(&self) -> usize {
        self.witness_cap.max(1)
    }
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, evaluated: usize) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            evaluated,
            failures: 0,
            witnesses: Vec::new(),
            note: None,
        }
    }

    /// A failure that has no basis witness, e.g. a construction error.
    pub fn fail(name: impl Into<String>, note: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: false,
            evaluated: 1,
            failures: 1,
            witnesses: vec![Witness {
                index: Vec::new(),
                lhs: CoeffVector::zero(0),
                rhs: CoeffVector::zero(0),
            }],
            note: Some(note.into()),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, note: impl Into<String>) -> Self {
        if ok {
            Self::pass(name, 1)
        } else {
            Self::fail(name, note)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Concatenation of several reports under one name.
    pub fn combine(name: impl Into<String>, opts: &CheckOptions, parts: Vec<CheckReport>) -> Self {
        let mut out = CheckReport::pass(name, 0);
        for p in parts {
            out.evaluated += p.evaluated;
            out.failures += p.failures;
            out.witnesses.extend(p.witnesses);
            if out.note.is_none() {
                out.note = p.note;
            }
        }
        out.witnesses.truncate(opts.cap());
        out.passed = out.failures == 0;
        out
    }
}

/// Evaluates `eval` on every multi-index of `shape` (row-major order) and
/// records the tuples where the two sides differ. `None` skips a tuple.
pub fn sweep<F>(name: impl Into<String>, opts: &CheckOptions, shape: &[usize], eval: F) -> CheckReport
where
    F: Fn(&[usize]) -> Option<(CoeffVector, CoeffVector)> + Sync,
{
    let name = name.into();
    let total: usize = shape.iter().product();
    if total == 0 {
        return CheckReport::pass(name, 0);
    }
    let shape = TensorShape::new(shape);
    let cap = opts.cap();
    let chunk = (total / (rayon::current_num_threads() * 8)).clamp(1, 4096);
    let nchunks = total.div_ceil(chunk);
    let parts: Vec<(usize, usize, Vec<Witness>)> = (0..nchunks)
        .into_par_iter()
        .map(|c| {
            let (mut evaluated, mut failures, mut wit) = (0, 0, Vec::new());
            for flat in c * chunk..((c + 1) * chunk).min(total) {
                let idx = shape.unflat(flat);
                if let Some((lhs, rhs)) = eval(&idx) {
                    evaluated += 1;
                    if lhs != rhs {
                        failures += 1;
                        if wit.len() < cap {
                            wit.push(Witness { index: idx, lhs, rhs });
                        }
                    }
                }
            }
            (evaluated, failures, wit)
        })
        .collect();
    let mut report = CheckReport::pass(name, 0);
    for (e, f, w) in parts {
        report.evaluated += e;
        report.failures += f;
        if report.witnesses.len() < cap {
            report.witnesses.extend(w);
            report.witnesses.truncate(cap);
        }
    }
    report.passed = report.failures == 0;
    report
}

/// Column-by-column comparison of two maps with the same shape.
pub fn compare_maps(name: impl Into<String>, opts: &CheckOptions, lhs: &LinMap, rhs: &LinMap) -> CheckReport {
    let name = name.into();
    if lhs.src_dim() != rhs.src_dim() || lhs.dst_dim() != rhs.dst_dim() {
        return CheckReport::fail(
            name,
            format!(
                "shape {}x{} differs from {}x{}",
                lhs.dst_dim(),
                lhs.src_dim(),
                rhs.dst_dim(),
                rhs.src_dim()
            ),
        );
    }
    sweep(name, opts, &[lhs.src_dim()], |i| {
        Some((lhs.column(i[0]).clone(), rhs.column(i[0]).clone()))
    })
}

/// An ordered list of checks produced by one verifier.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckSuite {
    pub checks: Vec<CheckReport>,
}

impl CheckSuite {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, r: CheckReport) {
        self.checks.push(r);
    }

    /// Appends another suite with `prefix.` prepended to each name.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckSuite) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// All checks folded into one report.
    pub fn summarize(&self, name: &str, opts: &CheckOptions) -> CheckReport {
        CheckReport::combine(name, opts, self.checks.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_counts_and_caps() {
        let opts = CheckOptions::with_cap(3);
        let r = sweep("parity", &opts, &[10, 10], |i| {
            let x = CoeffVector::from_ints(&[(i[0] % 2) as i64]);
            Some((x, CoeffVector::from_ints(&[0])))
        });
        assert!(!r.passed);
        assert_eq!(r.evaluated, 100);
        assert_eq!(r.failures, 50);
        assert_eq!(r.witnesses.len(), 3);
        assert_eq!(r.witnesses[0].index, vec![1, 0]);
        assert_eq!(r.witnesses[2].index, vec![1, 2]);
    }

    #[test]
    fn passing_sweep_has_no_witnesses() {
        let r = sweep("ok", &CheckOptions::default(), &[7], |_| {
            Some((CoeffVector::zero(1), CoeffVector::zero(1)))
        });
        assert!(r.passed && r.witnesses.is_empty());
        let f = CheckReport::fail("x", "boom");
        assert!(!f.passed && !f.witnesses.is_empty());
    }
}
