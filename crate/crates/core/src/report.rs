//! JSON reports. Object keys are emitted in a fixed order (struct field
//! order, and sorted keys inside `computed`), so equal runs diff cleanly.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::config::RunConfig;

/// Outcome of one claim on one group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub group: String,
    pub claim: String,
    pub pass: bool,
    pub computed: Map<String, Value>,
    pub witnesses: Vec<Value>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(group: &str, claim: &str) -> Self {
        Report {
            group: group.to_string(),
            claim: claim.to_string(),
            pass: true,
            computed: Map::new(),
            witnesses: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn record(&mut self, key: &str, value: impl Into<Value>) {
        self.computed.insert(key.to_string(), value.into());
    }

    /// Record a failure witness; the report fails.
    pub fn fail(&mut self, witness: Value) {
        self.pass = false;
        self.witnesses.push(witness);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
}

/// Everything one `verify` run produced for one group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool: String,
    pub version: String,
    pub config: RunConfig,
    pub group: String,
    pub group_order: usize,
    pub results: Vec<ClaimResult>,
}

impl VerificationReport {
    /// True when no applicable claim failed.
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
