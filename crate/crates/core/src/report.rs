//! Check results shared by the verifier operations and the CLI.

use serde::{Deserialize, Serialize};

/// One verified identity. `residual` is rendered exactly; `pass` holds iff
/// the residual is identically zero at the working order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Identity label used as the golden-file key.
    pub label: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
}

impl Check {
    pub fn passing(name: &str, label: &str, lhs: String, rhs: String) -> Self {
        Check { name: name.to_string(), label: label.to_string(), pass: true, lhs, rhs, residual: "0".into() }
    }

    pub fn from_residual(name: &str, label: &str, lhs: String, rhs: String, residual: String) -> Self {
        let pass = residual == "0";
        Check { name: name.to_string(), label: label.to_string(), pass, lhs, rhs, residual }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub model: String,
    pub mode: String,
    pub order: Option<usize>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str, model: &str, mode: &str, order: Option<usize>) -> Self {
        Report { suite: suite.into(), model: model.into(), mode: mode.into(), order, checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: Vec<Check>) {
        self.checks.extend(cs);
    }

    /// Deterministic order regardless of how checks were produced.
    pub fn finalize(mut self) -> Self {
        self.checks.sort_by(|a, b| a.label.cmp(&b.label).then(a.name.cmp(&b.name)));
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
