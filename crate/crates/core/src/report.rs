//! Machine-readable verification reports.

use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub evidence: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<f64>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            passed: true,
            checks: Vec::new(),
            duration_ms: None,
        }
    }

    pub fn push(&mut self, name: impl Into<String>, ok: bool, evidence: impl Serialize) {
        let evidence = serde_json::to_value(evidence).unwrap_or(Value::Null);
        self.passed &= ok;
        self.checks.push(CheckRecord {
            name: name.into(),
            status: Status::from_bool(ok),
            evidence,
        });
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn with_duration(mut self, d: Duration) -> Self {
        self.duration_ms = Some(d.as_secs_f64() * 1e3);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_flips_verdict() {
        let mut r = VerificationReport::new("demo");
        r.push("a", true, ());
        assert!(r.passed);
        r.push("b", false, serde_json::json!({"why": 1}));
        assert!(!r.passed);
        assert_eq!(r.failures().count(), 1);
        let text = r.to_json();
        assert!(!text.contains("duration_ms"));
        assert!(!text.contains("\"evidence\": null"));
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
