use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of a single named check inside a verifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First witness of a violation, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Verifier output. Verifiers never fail; they collect checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn pass(&mut self, name: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: true,
            witness: None,
        });
    }

    pub fn fail(&mut self, name: &str, witness: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: false,
            witness: Some(witness.into()),
        });
    }

    /// Records `name` as passed when `witness` is `None`.
    pub fn record(&mut self, name: &str, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// True when the named check is present and failed.
    pub fn failed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && !c.passed)
    }

    pub fn merge(&mut self, other: Report) {
        for mut c in other.checks {
            if !other.subject.is_empty() {
                c.name = format!("{}/{}", other.subject, c.name);
            }
            self.checks.push(c);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed() { "pass" } else { "FAIL" })?;
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "  [ok]   {}", c.name)?,
                Some(w) => writeln!(f, "  [FAIL] {}: {}", c.name, w)?,
            }
        }
        Ok(())
    }
}
