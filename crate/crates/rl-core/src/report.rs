//! Shared report shapes for law suites and structure checks.

use serde::Serialize;

/// Outcome of one checked law or identity.
#[derive(Debug, Clone, Serialize)]
pub struct LawCheck {
    pub law: String,
    pub trials: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl LawCheck {
    pub fn new(law: impl Into<String>) -> Self {
        LawCheck {
            law: law.into(),
            trials: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.failures.push(witness.into());
    }
}

/// A bundle of law checks produced by one suite run.
#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub suite: String,
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn new(suite: impl Into<String>) -> Self {
        LawReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }

    pub fn failures(&self) -> Vec<&LawCheck> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }
}
