//! Line-oriented pass/fail reports produced by the law checkers.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// The outcome of checking one law over a family of cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: String,
    pub cases: usize,
    /// First counterexample, rendered in the element text formats.
    pub counterexample: Option<String>,
}

impl LawCheck {
    pub fn new(law: impl Into<String>) -> Self {
        LawCheck { law: law.into(), cases: 0, counterexample: None }
    }

    /// Records one case. The witness is only rendered for the first failure.
    pub fn record(&mut self, holds: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !holds && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    /// Records a case whose evaluation itself failed.
    pub fn record_result(&mut self, outcome: crate::Result<bool>, witness: impl FnOnce() -> String) {
        match outcome {
            Ok(holds) => self.record(holds, witness),
            Err(e) => self.record(false, || alloc::format!("{} ({e})", witness())),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for LawCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} ({} cases)", self.law, self.cases),
            Some(w) => write!(f, "FAIL {} ({} cases): {w}", self.law, self.cases),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<LawCheck>,
    /// Informational lines printed after the checks.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, check: LawCheck) {
        self.checks.push(check);
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, law: &str) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.law == law)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        for n in &self.notes {
            writeln!(f, "{n}")?;
        }
        Ok(())
    }
}
