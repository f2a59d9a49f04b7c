//! Pass/fail reporting for the verification suites. Every check carries a
//! stable label and, on failure, a locus string (relation id, basis element,
//! first differing coefficient).

use std::fmt;

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub label: String,
    pub pass: bool,
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn pass(label: impl Into<String>) -> Self {
        CheckReport {
            label: label.into(),
            pass: true,
            detail: None,
        }
    }

    pub fn fail(label: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckReport {
            label: label.into(),
            pass: false,
            detail: Some(detail.into()),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn new(name: impl Into<String>) -> Self {
        SuiteReport {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckReport) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} checks)",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.len()
        )?;
        for c in self.failures() {
            writeln!(
                f,
                "  FAIL {} -- {}",
                c.label,
                c.detail.as_deref().unwrap_or("")
            )?;
        }
        Ok(())
    }
}
