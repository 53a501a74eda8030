//! Machine-readable verification records.

use serde::{Deserialize, Serialize};

pub const FORMAT: &str = "cogroupoid-certificate/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    /// Filtration level at which the identity was tested; `None` when exact.
    pub level: Option<u32>,
    pub passed: bool,
    /// Nonzero difference left over on failure.
    pub residue: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub axiom: String,
    pub subject: Vec<String>,
    pub degree: Option<u32>,
    pub exact: bool,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(axiom: impl Into<String>, subject: Vec<String>, degree: Option<u32>, exact: bool) -> Self {
        Certificate {
            format: FORMAT.to_string(),
            axiom: axiom.into(),
            subject,
            degree,
            exact,
            passed: true,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Record one identity: `residue` is `None` when it holds.
    pub fn record(&mut self, label: impl Into<String>, level: Option<u32>, residue: Option<String>) -> bool {
        let passed = residue.is_none();
        self.passed &= passed;
        self.checks.push(Check { label: label.into(), level, passed, residue });
        passed
    }

    pub fn pass(&mut self, label: impl Into<String>, level: Option<u32>) {
        self.record(label, level, None);
    }

    pub fn fail(&mut self, label: impl Into<String>, level: Option<u32>, why: impl Into<String>) {
        self.record(label, level, Some(why.into()));
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// Fold another certificate's checks into this one.
    pub fn absorb(&mut self, other: Certificate) {
        for c in other.checks {
            let label = format!("{}: {}", other.axiom, c.label);
            self.passed &= c.passed;
            self.checks.push(Check { label, ..c });
        }
        self.exact &= other.exact;
        self.notes.extend(other.notes);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn summary_line(&self) -> String {
        let n = self.checks.len();
        let bad = self.failures().count();
        let level = match (self.exact, self.degree) {
            (true, _) => "exact".to_string(),
            (false, Some(d)) => format!("d={}", d),
            (false, None) => "truncated".to_string(),
        };
        format!(
            "{} {} [{}] {} ({}/{} checks)",
            if self.passed { "PASS" } else { "FAIL" },
            self.axiom,
            self.subject.join(", "),
            level,
            n - bad,
            n
        )
    }
}
