//! Machine-readable verification outcomes.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "commvar-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
    Skipped,
}

/// One verification outcome. Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDoc {
    pub schema: String,
    pub suite: String,
    pub case: String,
    /// The mathematical statement under test, in words.
    pub claim: String,
    pub status: Status,
    pub witness: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ReportDoc {
    /// Panics if a failing or indeterminate outcome carries no witness.
    pub fn new(suite: &str, case: &str, claim: &str, status: Status, witness: Value) -> Self {
        if matches!(status, Status::Fail | Status::Indeterminate) {
            assert!(
                !witness.is_null() && witness != Value::Object(Default::default()),
                "{suite}/{case}: {status:?} requires witness data"
            );
        }
        ReportDoc {
            schema: SCHEMA.to_string(),
            suite: suite.to_string(),
            case: case.to_string(),
            claim: claim.to_string(),
            status,
            witness,
            elapsed_ms: None,
        }
    }

    /// Pass when `ok`, fail otherwise, with the same witness either way.
    pub fn check(suite: &str, case: &str, claim: &str, ok: bool, witness: Value) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Self::new(suite, case, claim, status, witness)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Serializes a report stream as a pretty JSON array with a trailing newline.
pub fn to_json(docs: &[ReportDoc]) -> String {
    let mut s = serde_json::to_string_pretty(docs).expect("reports serialize");
    s.push('\n');
    s
}
