use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Required,
    Informational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub severity: Severity,
    pub passed: bool,
    pub expected: String,
    pub computed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: &str, passed: bool, expected: impl ToString, computed: impl ToString) -> Self {
        Check {
            name: name.into(),
            severity: Severity::Required,
            passed,
            expected: expected.to_string(),
            computed: computed.to_string(),
            witness: None,
        }
    }

    /// Equality check between two displayed values.
    pub fn equal<T: PartialEq + fmt::Display>(name: &str, expected: T, computed: T) -> Self {
        Check::new(name, expected == computed, &expected, &computed)
    }

    pub fn failed(name: &str, expected: impl ToString, error: impl fmt::Display) -> Self {
        Check::new(name, false, expected, format!("error: {error}"))
    }

    pub fn informational(mut self) -> Self {
        self.severity = Severity::Informational;
        self
    }

    pub fn with_witness(mut self, w: Option<String>) -> Self {
        self.witness = w;
        self
    }
}

/// Named checks with expected and computed values. Deterministic given the
/// seed: no timings or environment data are recorded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>, seed: u64) -> Self {
        Report {
            subject: subject.into(),
            seed,
            passed: true,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        if check.severity == Severity::Required && !check.passed {
            self.passed = false;
        }
        self.checks.push(check);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (seed {})", self.subject, self.seed)?;
        for c in &self.checks {
            let tag = match (c.passed, c.severity) {
                (true, Severity::Required) => "pass",
                (false, Severity::Required) => "FAIL",
                (true, Severity::Informational) => "info",
                (false, Severity::Informational) => "info-fail",
            };
            write!(
                f,
                "  [{tag:>9}] {}: expected {}, computed {}",
                c.name, c.expected, c.computed
            )?;
            if let Some(w) = &c.witness {
                write!(f, ", witness {w}")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        write!(f, "result: {}", if self.passed { "PASS" } else { "FAIL" })
    }
}
