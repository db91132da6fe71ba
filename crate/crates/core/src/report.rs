//! Structured pass/fail records for certificates.
//!
//! Every check carries the anchor of the statement it certifies (the
//! workbench's fixed nomenclature, e.g. "Lemma x4: intersect_n U(x-n) = 0"),
//! its status, and whatever dimensions or witnesses the check produced.
//! Reports are deterministic given the configuration; wall-clock timings are
//! kept out of the records themselves so the report body is byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
    PreconditionError,
}

/// A value attached to a check record: a count, a witness string, or a table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Detail {
    Int(i64),
    Text(String),
    IntList(Vec<i64>),
    TextList(Vec<String>),
}

impl From<i64> for Detail {
    fn from(n: i64) -> Detail {
        Detail::Int(n)
    }
}

impl From<usize> for Detail {
    fn from(n: usize) -> Detail {
        Detail::Int(n as i64)
    }
}

impl From<&str> for Detail {
    fn from(s: &str) -> Detail {
        Detail::Text(s.to_string())
    }
}

impl From<String> for Detail {
    fn from(s: String) -> Detail {
        Detail::Text(s)
    }
}

impl From<Vec<i64>> for Detail {
    fn from(v: Vec<i64>) -> Detail {
        Detail::IntList(v)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// Fixed statement label this check certifies.
    pub anchor: String,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Detail>,
}

impl CheckRecord {
    pub fn new(name: &str, anchor: &str, status: CheckStatus) -> CheckRecord {
        CheckRecord { name: name.to_string(), anchor: anchor.to_string(), status, details: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<Detail>) -> CheckRecord {
        self.details.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
            Verdict::Error => 3,
        }
    }
}

/// A batch of check records with the derived overall verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub checks: Vec<CheckRecord>,
    pub verdict: Verdict,
}

impl CertificateReport {
    pub fn from_checks(checks: Vec<CheckRecord>) -> CertificateReport {
        let verdict = derive_verdict(&checks);
        CertificateReport { checks, verdict }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn merge(reports: Vec<CertificateReport>) -> CertificateReport {
        let checks: Vec<CheckRecord> = reports.into_iter().flat_map(|r| r.checks).collect();
        CertificateReport::from_checks(checks)
    }
}

/// Fail dominates, then precondition errors, then inconclusive; a report
/// with no checks passes vacuously.
pub fn derive_verdict(checks: &[CheckRecord]) -> Verdict {
    let mut verdict = Verdict::Pass;
    for c in checks {
        match c.status {
            CheckStatus::Fail => return Verdict::Fail,
            CheckStatus::PreconditionError => verdict = Verdict::Error,
            CheckStatus::Inconclusive => {
                if verdict == Verdict::Pass {
                    verdict = Verdict::Inconclusive;
                }
            }
            CheckStatus::Pass => {}
        }
    }
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_passes() {
        let r = CertificateReport::from_checks(vec![]);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.verdict.exit_code(), 0);
    }

    #[test]
    fn fail_dominates_everything() {
        let checks = vec![
            CheckRecord::new("a", "anchor", CheckStatus::Pass),
            CheckRecord::new("b", "anchor", CheckStatus::PreconditionError),
            CheckRecord::new("c", "anchor", CheckStatus::Fail),
        ];
        assert_eq!(derive_verdict(&checks), Verdict::Fail);
    }

    #[test]
    fn precondition_error_beats_inconclusive() {
        let checks = vec![
            CheckRecord::new("a", "anchor", CheckStatus::Inconclusive),
            CheckRecord::new("b", "anchor", CheckStatus::PreconditionError),
        ];
        assert_eq!(derive_verdict(&checks), Verdict::Error);
        assert_eq!(derive_verdict(&checks).exit_code(), 3);
    }
}
