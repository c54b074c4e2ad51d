use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// One basis pair; each map is a `d x d` matrix over GF(p), rows listed in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisPair {
    pub f: Vec<Vec<u64>>,
    pub g: Vec<Vec<u64>>,
}

/// The machine-readable result of one command.
///
/// Every field except `elapsed_ms` is a function of the command line alone.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub params: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<BasisPair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flagged_example_regime: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residuals_checked: Option<usize>,
    /// Command-specific detail: per-property tallies, sweep rows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub failures: Vec<Value>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: &str, params: Value, seed: u64) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_owned(),
            params,
            dimension: None,
            basis: None,
            flagged_example_regime: None,
            residuals_checked: None,
            details: None,
            failures: Vec::new(),
            seed,
            elapsed_ms: 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
