use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    /// `pass` or `fail`.
    pub status: String,
}

impl CheckEntry {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Self-describing output of one subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: u32,
    pub command: String,
    pub canonical_input: Value,
    pub config: Value,
    pub result: Value,
    pub check_log: Vec<CheckEntry>,
    pub input_hash: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Hash of the canonical (sorted-key, compact) JSON of `v`.
pub fn hash_value(v: &Value) -> String {
    sha256_hex(serde_json::to_string(v).expect("JSON values serialize").as_bytes())
}

pub fn input_hash(command: &str, canonical_input: &Value, config: &Value) -> String {
    hash_value(&json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "canonical_input": canonical_input,
        "config": config,
    }))
}

impl Envelope {
    pub fn new(command: &str, canonical_input: Value, config: Value, result: Value, checks: &[(String, bool)]) -> Self {
        let input_hash = input_hash(command, &canonical_input, &config);
        Envelope {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            canonical_input,
            config,
            result,
            check_log: checks
                .iter()
                .map(|(name, ok)| CheckEntry {
                    name: name.clone(),
                    status: if *ok { "pass" } else { "fail" }.to_string(),
                })
                .collect(),
            input_hash,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.check_log.iter().all(CheckEntry::passed)
    }

    pub fn to_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelopes serialize");
        s.push('\n');
        s
    }

    pub fn digest(&self) -> String {
        sha256_hex(serde_json::to_string(self).expect("envelopes serialize").as_bytes())
    }
}
